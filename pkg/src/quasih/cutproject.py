"""Planar cut-and-project sets with decagonal windows.

The module of candidate points is Z[tau]*1 + Z[tau]*xi^4 = Z[xi]; a point
is accepted when it and its star image both lie in the regular decagon
D(n) of circumradius n whose vertices sit at n*xi^j (so the outermost
fragment shell lands exactly on window vertices).  Membership of module
points is decided by exact sign tests of Z[tau]-linear edge forms: for a
cyclotomic z the sign of Im(z) equals the sign of its xi-coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .golden import CycloInt, GoldenInt, xi_pow
from .fragment import Fragment, ResourceLimitError, cached_fragment
from .rootsystem import GroupId

DEFAULT_BOX_CAP = 10_000_000


@dataclass(frozen=True)
class DecagonWindow:
    """Regular decagon of circumradius n with vertices on the root rays."""

    n: int

    def vertices(self) -> tuple[CycloInt, ...]:
        return tuple(xi_pow(j) * self.n for j in range(10))

    def vertices_complex(self) -> tuple[complex, ...]:
        return tuple(v.embed() for v in self.vertices())


def decagon_contains(p: complex, n: int, tol: float = 1e-9) -> bool:
    """Float half-plane test; boundary counts as inside within tol."""
    if n < 1:
        raise ValueError("window radius must be positive")
    verts = DecagonWindow(n).vertices_complex()
    for j in range(10):
        a = verts[j]
        b = verts[(j + 1) % 10]
        edge = b - a
        rel = p - a
        cross = edge.real * rel.imag - edge.imag * rel.real
        if cross < -tol * abs(edge):
            return False
    return True


def decagon_contains_exact(x: CycloInt, n: int) -> bool:
    """Exact membership for module points (closed decagon).

    Inside means every edge cross product Im(conj(V_{j+1}-V_j)*(x-V_j)) is
    non-negative; dropping the positive factor n this is the xi-coefficient
    of xi^(-j) * (xi^9 - 1) * (x - n*xi^j).
    """
    if n < 1:
        raise ValueError("window radius must be positive")
    edge_conj = xi_pow(9) - xi_pow(0)
    for j in range(10):
        w = xi_pow(-j) * edge_conj * (x - xi_pow(j) * n)
        if w.q.sign() < 0:
            return False
    return True


@dataclass(frozen=True)
class CutProjectSet2D:
    n: int
    points: tuple[CycloInt, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def point_set(self) -> frozenset[CycloInt]:
        return frozenset(self.points)


def _embedding_bounds(n: int) -> list[int]:
    """Integer bounds on (x1, x2, x3, x4) from the Minkowski box [-n, n]^4.

    E maps the integer coordinates of x = (x1+tau*x2) + (x3+tau*x4)*xi^4
    to (Re x, Im x, Re x*, Im x*); the rows of E^{-1} applied to the box
    bound each coordinate by n * sum_j |E^{-1}_ij|.
    """
    basis = [
        xi_pow(0),
        xi_pow(0) * GoldenInt(0, 1),
        xi_pow(4),
        xi_pow(4) * GoldenInt(0, 1),
    ]
    e = np.array(
        [
            [b.embed().real for b in basis],
            [b.embed().imag for b in basis],
            [b.star().embed().real for b in basis],
            [b.star().embed().imag for b in basis],
        ]
    )
    inv = np.linalg.inv(e)
    limits = np.abs(inv).sum(axis=1) * n
    return [math.floor(lim + 1e-6) + 1 for lim in limits]


def sigma_2d(n: int, box_cap: int = DEFAULT_BOX_CAP) -> CutProjectSet2D:
    """Sigma(D(n)) intersected with D(n): both x and star(x) in the window.

    A cheap float circumradius prefilter trims the integer box; survivors
    are decided exactly.
    """
    if n < 1:
        raise ValueError("window radius must be positive")
    b1, b2, b3, b4 = _embedding_bounds(n)
    volume = (2 * b1 + 1) * (2 * b2 + 1) * (2 * b3 + 1) * (2 * b4 + 1)
    if volume > box_cap:
        raise ResourceLimitError(f"enumeration box of {volume} points exceeds cap")

    alpha1 = xi_pow(0).embed()
    alpha2 = xi_pow(4).embed()
    a1s = xi_pow(0).star().embed()
    a2s = xi_pow(8).embed()  # star of xi^4
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    phi_c = (1.0 - math.sqrt(5.0)) / 2.0
    radius = n + 1e-6

    points: list[CycloInt] = []
    for x1 in range(-b1, b1 + 1):
        for x2 in range(-b2, b2 + 1):
            c1 = x1 + phi * x2
            c1s = x1 + phi_c * x2
            for x3 in range(-b3, b3 + 1):
                for x4 in range(-b4, b4 + 1):
                    z = c1 * alpha1 + (x3 + phi * x4) * alpha2
                    if abs(z) > radius:
                        continue
                    zs = c1s * a1s + (x3 + phi_c * x4) * a2s
                    if abs(zs) > radius:
                        continue
                    x = CycloInt.from_golden(GoldenInt(x1, x2)) + xi_pow(4) * GoldenInt(x3, x4)
                    if decagon_contains_exact(x, n) and decagon_contains_exact(x.star(), n):
                        points.append(x)
    points.sort(key=CycloInt.sort_key)
    return CutProjectSet2D(n, tuple(points))


def deficiencies_2d(n: int) -> tuple[CycloInt, ...]:
    """Cut-and-project points missing from the fragment of the same cut-off."""
    fragment_points = frozenset(cached_fragment(GroupId.H2, n).cyclo_points())
    missing = [x for x in sigma_2d(n).points if x not in fragment_points]
    return tuple(missing)


def fragment_in_window(fragment: Fragment) -> bool:
    """Window containment: every fragment point and its star image lie in
    the decagon window of the fragment's cut-off (trivial at n = 0)."""
    if fragment.n < 1:
        return True
    return all(
        decagon_contains_exact(x, fragment.n)
        and decagon_contains_exact(x.star(), fragment.n)
        for x in fragment.cyclo_points()
    )
