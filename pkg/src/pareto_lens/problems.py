"""Desk-scale diagnostic data generators.

The multi-line distance-minimization construction maps 2-D points to the
distances from m lines, one through each edge of a regular m-gon; inside
the polygon that map is a similarity, so decision-space structure is
visible in objective space.  Simplex and sphere samplers stand in for the
usual linear and spherical benchmark fronts.

All sampling uses numpy's PCG64 generator, which has published reference
outputs, so identical seeds reproduce byte-identical CSVs everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import SolutionSet

__all__ = [
    "MldmpInstance",
    "GeneratedSet",
    "mldmp_objectives",
    "generate_mldmp",
    "generate_simplex_front",
    "generate_sphere_front",
]


@dataclass(frozen=True)
class MldmpInstance:
    """Regular m-gon with one line through each edge.

    Unit circumradius, first vertex at angle pi/2, counterclockwise vertex
    order; edge i joins vertices i and i+1 (mod m).  Each edge line is
    stored as (outward unit normal, offset), so the offset equals the
    apothem cos(pi/m) and a point p lies inside iff n.p <= offset for
    every edge.
    """

    m: int
    vertices: np.ndarray   # (m, 2)
    normals: np.ndarray    # (m, 2) unit outward normals
    offsets: np.ndarray    # (m,)

    @staticmethod
    def regular(m: int) -> "MldmpInstance":
        if m < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        angles = math.pi / 2 + 2 * math.pi * np.arange(m) / m
        vertices = np.column_stack([np.cos(angles), np.sin(angles)])
        mids = (vertices + np.roll(vertices, -1, axis=0)) / 2
        normals = mids / np.linalg.norm(mids, axis=1, keepdims=True)
        offsets = (normals * vertices).sum(axis=1)
        for arr in (vertices, normals, offsets):
            arr.setflags(write=False)
        return MldmpInstance(m, vertices, normals, offsets)

    def contains(self, p: Sequence[float]) -> bool:
        return bool((self.normals @ np.asarray(p, dtype=float) <= self.offsets).all())


@dataclass(frozen=True)
class GeneratedSet:
    """A generated solution set plus the decision points behind it."""

    objectives: SolutionSet
    seed: int
    decision_points: Optional[np.ndarray] = None


def mldmp_objectives(inst: MldmpInstance, p: Sequence[float]) -> np.ndarray:
    """Unsigned Euclidean distances from p to the m edge lines."""
    p = np.asarray(p, dtype=float)
    return np.abs(inst.normals @ p - inst.offsets)


def generate_mldmp(m: int, n: int, seed: int) -> GeneratedSet:
    """Sample n points uniformly inside the regular m-gon and evaluate them.

    Rejection sampling from the vertex bounding box (acceptance >= 1/2 for
    any m >= 3); single-threaded so the seeded stream is reproducible.
    """
    if n < 1:
        raise ValueError("need n >= 1 samples")
    inst = MldmpInstance.regular(m)
    lo = inst.vertices.min(axis=0)
    hi = inst.vertices.max(axis=0)
    rng = np.random.Generator(np.random.PCG64(seed))
    points = np.empty((n, 2))
    filled = 0
    while filled < n:
        p = rng.uniform(lo, hi)
        if inst.contains(p):
            points[filled] = p
            filled += 1
    objectives = np.array([mldmp_objectives(inst, p) for p in points])
    return GeneratedSet(SolutionSet(objectives), seed, points)


def generate_simplex_front(m: int, n: int, seed: int) -> GeneratedSet:
    """n points uniform on the simplex {f >= 0, sum(f) = 0.5}.

    m-1 sorted uniforms per point; successive differences scaled by 0.5.
    """
    if m < 2:
        raise ValueError("need m >= 2 objectives")
    if n < 1:
        raise ValueError("need n >= 1 samples")
    rng = np.random.Generator(np.random.PCG64(seed))
    cuts = np.sort(rng.uniform(size=(n, m - 1)), axis=1)
    padded = np.hstack([np.zeros((n, 1)), cuts, np.ones((n, 1))])
    points = np.diff(padded, axis=1) * 0.5
    return GeneratedSet(SolutionSet(points), seed)


def generate_sphere_front(m: int, n: int, seed: int) -> GeneratedSet:
    """n points uniform on the unit sphere restricted to the nonnegative
    orthant: absolute standard normals, normalized to unit length."""
    if m < 2:
        raise ValueError("need m >= 2 objectives")
    if n < 1:
        raise ValueError("need n >= 1 samples")
    rng = np.random.Generator(np.random.PCG64(seed))
    points = np.empty((n, m))
    filled = 0
    while filled < n:
        z = np.abs(rng.standard_normal(m))
        norm = np.linalg.norm(z)
        if norm == 0.0:  # astronomically unlikely, but keeps the math exact
            continue
        points[filled] = z / norm
        filled += 1
    return GeneratedSet(SolutionSet(points), seed)
