"""Finite quasicrystal fragments grown by the affine-extended groups.

A fragment with cut-off n is the set of images of the origin under words
in the simple reflections and the translation T in which T occurs at most
n times.  Reflections fix the origin and levels nest, so the whole set is
the union of reflection closures

    S_0 = {O},   S_{m+1} = closure(T(S_m)),   fragment = S_0 u ... u S_n.

The independent oracle builds the same set as all sums of at most n roots.
Hot loops run on flattened integer tuples (a1, b1, ..., ak, bk); points are
deduplicated exactly and the final ordering is lexicographic on those
tuples, so output is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache

from .golden import CycloInt, GoldenRational, xi_pow
from .rootsystem import (
    GroupId,
    OmegaVector,
    cyclo_from_omega,
    norm_sq,
    roots_omega,
)
from .affine import apply_compiled, operators

DEFAULT_CAP = 10_000_000


class ResourceLimitError(RuntimeError):
    """Raised when a generated point set would exceed the configured cap."""


Flat = tuple[int, ...]


@dataclass(frozen=True)
class Fragment:
    group: GroupId
    n: int
    points: tuple[OmegaVector, ...]
    method: str

    @property
    def size(self) -> int:
        return len(self.points)

    def point_set(self) -> frozenset[OmegaVector]:
        return frozenset(self.points)

    def cyclo_points(self) -> tuple[CycloInt, ...]:
        if self.group is not GroupId.H2:
            raise ValueError("cyclotomic image only exists for H2 fragments")
        return tuple(cyclo_from_omega(v) for v in self.points)


def _finish(group: GroupId, n: int, flats: set[Flat], method: str) -> Fragment:
    ordered = sorted(flats)
    return Fragment(
        group, n, tuple(OmegaVector.from_flat(group, f) for f in ordered), method
    )


def _closure(seeds: set[Flat], refl, cap: int) -> set[Flat]:
    points = set(seeds)
    stack = list(seeds)
    while stack:
        v = stack.pop()
        for op in refl:
            w = apply_compiled(op, v)
            if w not in points:
                points.add(w)
                stack.append(w)
                if len(points) > cap:
                    raise ResourceLimitError(f"reflection closure exceeded cap {cap}")
    return points


def generate(group: GroupId, n: int, cap: int = DEFAULT_CAP) -> Fragment:
    """Breadth-first fragment of the affine group action (word definition)."""
    if n < 0:
        raise ValueError("cut-off must be non-negative")
    ops = operators(group)
    refl = [r.compiled() for r in ops.reflections]
    trans = ops.translation.compiled()
    origin: Flat = (0,) * (2 * group.rank)
    total: set[Flat] = {origin}
    level: set[Flat] = {origin}
    for _ in range(n):
        shifted = {apply_compiled(trans, v) for v in level}
        level = _closure(shifted, refl, cap)
        total |= level
        if len(total) > cap:
            raise ResourceLimitError(f"fragment exceeded cap {cap}")
    return _finish(group, n, total, "word_bfs")


def generate_rootsum(group: GroupId, n: int, cap: int = DEFAULT_CAP) -> Fragment:
    """Oracle fragment: every sum of at most n roots, deduplicated."""
    if n < 0:
        raise ValueError("cut-off must be non-negative")
    root_flats = [v.flat() for v in roots_omega(group)]
    width = 2 * group.rank
    origin: Flat = (0,) * width
    total: set[Flat] = {origin}
    frontier: set[Flat] = {origin}
    for _ in range(n):
        new: set[Flat] = set()
        for v in frontier:
            for r in root_flats:
                w = tuple(x + y for x, y in zip(v, r))
                if w not in total:
                    new.add(w)
        total |= new
        if len(total) > cap:
            raise ResourceLimitError(f"fragment exceeded cap {cap}")
        frontier = new
    return _finish(group, n, total, "root_sum")


def to_dominant(v: OmegaVector) -> tuple[OmegaVector, tuple[int, ...]]:
    """Reflect any negative coordinate until none is left.

    Returns the dominant representative together with the word applied,
    as reflection indices in application order (first applied first).
    """
    ops = operators(v.group)
    word: list[int] = []
    current = v
    while True:
        for i, c in enumerate(current.coords):
            if c.sign() < 0:
                current = ops.reflections[i].apply(current)
                word.append(i)
                break
        else:
            return current, tuple(word)


def orbit_of(v: OmegaVector) -> frozenset[OmegaVector]:
    ops = operators(v.group)
    seen = {v}
    stack = [v]
    while stack:
        p = stack.pop()
        for r in ops.reflections:
            q = r.apply(p)
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


@dataclass(frozen=True)
class OrbitRecord:
    dominant: OmegaVector
    size: int
    members: tuple[OmegaVector, ...]


def orbits(fragment: Fragment) -> tuple[OrbitRecord, ...]:
    """Partition into reflection-group orbits keyed by dominant point."""
    by_dominant: dict[OmegaVector, list[OmegaVector]] = {}
    for p in fragment.points:
        dom, _ = to_dominant(p)
        by_dominant.setdefault(dom, []).append(p)
    records = [
        OrbitRecord(dom, len(members), tuple(sorted(members, key=OmegaVector.flat)))
        for dom, members in by_dominant.items()
    ]
    records.sort(key=lambda r: r.dominant.flat())
    return tuple(records)


@dataclass(frozen=True)
class Shell:
    norm: GoldenRational
    members: tuple[OmegaVector, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def shells(fragment: Fragment) -> tuple[Shell, ...]:
    """Concentric shells: points grouped by exact squared distance."""
    by_norm: dict[GoldenRational, list[OmegaVector]] = {}
    for p in fragment.points:
        by_norm.setdefault(norm_sq(p), []).append(p)
    out = [
        Shell(norm, tuple(sorted(members, key=OmegaVector.flat)))
        for norm, members in by_norm.items()
    ]
    out.sort(key=cmp_to_key(lambda s, t: (s.norm - t.norm).sign()))
    return tuple(out)


def check_tenfold(fragment: Fragment) -> bool:
    """Exact invariance of the cyclotomic image under rotation by xi."""
    if fragment.group is not GroupId.H2:
        raise ValueError("ten-fold symmetry is an H2 property")
    pts = set(fragment.cyclo_points())
    xi = xi_pow(1)
    return all(xi * p in pts for p in pts)


@lru_cache(maxsize=None)
def cached_fragment(group: GroupId, n: int) -> Fragment:
    """Memoized word-BFS fragment; used by checks that revisit small sizes."""
    return generate(group, n)
