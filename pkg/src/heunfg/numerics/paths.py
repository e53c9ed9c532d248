"""Polyline integration paths that keep clear of singular points and of the
zeros of Psi."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from ..errors import PathTooCloseToZero

EXCLUSION_FRACTION = 1e-3
DETOUR_FRACTION = 0.25
CHORDS = 16


def _seg_distance(p: complex, A: complex, B: complex) -> float:
    d = B - A
    if d == 0:
        return abs(p - A)
    s = ((p - A) * d.conjugate()).real / abs(d) ** 2
    s = min(max(s, 0.0), 1.0)
    return abs(p - (A + s * d))


def local_scale(points) -> float:
    pts = list(points)
    return max([1.0] + [abs(p) for p in pts])


@dataclass(frozen=True)
class QuadraturePath:
    """Ordered vertices from base point to target."""

    vertices: tuple
    singular: tuple = ()
    obstacles: tuple = ()
    exclusion: float = 0.0

    @property
    def start(self) -> complex:
        return self.vertices[0]

    @property
    def end(self) -> complex:
        return self.vertices[-1]

    def segments(self):
        return list(zip(self.vertices[:-1], self.vertices[1:]))

    def endpoint_flags(self):
        """Per segment: which singular points coincide with its endpoints."""
        out = []
        for A, B in self.segments():
            out.append(tuple(c for c in self.singular if c == A or c == B))
        return out

    def validate(self):
        """Raise PathTooCloseToZero if a segment enters an exclusion disc."""
        pts = list(self.singular) + list(self.obstacles)
        for A, B in self.segments():
            for p in pts:
                if p == A or p == B:
                    continue
                if _seg_distance(p, A, B) < self.exclusion:
                    raise PathTooCloseToZero(
                        f"segment {A} -> {B} passes within {self.exclusion:.1e} of {p}")
        return self

    def extended(self, target: complex) -> "QuadraturePath":
        return QuadraturePath(self.vertices + (complex(target),), self.singular,
                              self.obstacles, self.exclusion)


def build_path(start, end, singular=(), obstacles=(), side: int = 1,
               chords: int = CHORDS, exclusion: float | None = None) -> QuadraturePath:
    """Straight path with semicircular polyline detours around obstacles.

    Points of ``singular`` and ``obstacles`` that lie close to the segment
    (other than its endpoints) are bypassed on the left of the direction of
    travel (``side=1``) or on the right (``side=-1``).
    """
    start, end = complex(start), complex(end)
    singular = tuple(complex(c) for c in singular)
    obstacles = tuple(complex(c) for c in obstacles)
    everything = singular + obstacles
    auto = exclusion is None
    if auto:
        exclusion = EXCLUSION_FRACTION * local_scale(singular + (start, end))
    for p in obstacles:
        if abs(end - p) < exclusion and end != p:
            raise PathTooCloseToZero(f"target {end} lies within {exclusion:.1e} of a zero at {p}")
    if start == end:
        return QuadraturePath((start,), singular, obstacles, exclusion)
    d = end - start
    length = abs(d)
    u = d / length
    hits = []
    for p in everything:
        if p == start or p == end:
            continue
        rel = (p - start) / u
        others = [abs(p - q) for q in everything + (start, end) if q != p]
        rho = DETOUR_FRACTION * min(others) if others else 0.25 * length
        if 0 < rel.real < length and abs(rel.imag) < rho:
            hits.append((rel.real, p, rho))
    hits.sort(key=lambda h: h[0])
    verts = [start]
    for _, p, rho in hits:
        for k in range(chords + 1):
            verts.append(p - rho * u * cmath.exp(-1j * cmath.pi * side * k / chords))
    verts.append(end)
    if auto and hits:
        exclusion = min(exclusion, 0.5 * min(h[2] for h in hits))
    return QuadraturePath(tuple(verts), singular, obstacles, exclusion).validate()
