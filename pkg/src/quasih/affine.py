"""Affine extension machinery: operators, extended Cartan matrices and the
brute-force enumeration of generalized (determinant-zero) Cartan matrices.

Reflections act linearly on omega coordinates; the affine reflection in the
hyperplane through alpha_H/2 and the translation T = r_H_aff . r_0 carry a
constant offset on top.  All operator algebra is exact over GoldenInt.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .golden import GoldenInt, ONE, ZERO
from .rootsystem import (
    AlphaVector,
    CartanMatrix,
    GroupId,
    Matrix,
    OmegaVector,
    alpha_vector_from_omega,
    cartan,
    golden_adjugate,
    golden_det,
    golden_identity,
    highest_root,
    mat_mul,
    mat_vec,
    simple_reflection_matrix,
)


@dataclass(frozen=True)
class AffineOperator:
    """An exact affine map v -> matrix.v + offset on omega coordinates."""

    group: GroupId
    kind: str
    matrix: Matrix
    offset: tuple[GoldenInt, ...]
    index: int | None = None

    def apply(self, v: OmegaVector) -> OmegaVector:
        coords = mat_vec(self.matrix, v.coords)
        return OmegaVector(v.group, tuple(c + t for c, t in zip(coords, self.offset)))

    def compose(self, other: AffineOperator) -> AffineOperator:
        """self after other: (M1, t1) . (M2, t2) = (M1 M2, M1 t2 + t1)."""
        m = mat_mul(self.matrix, other.matrix)
        t = mat_vec(self.matrix, other.offset)
        t = tuple(a + b for a, b in zip(t, self.offset))
        return AffineOperator(self.group, "composite", m, t)

    def power(self, n: int) -> AffineOperator:
        out = identity_operator(self.group)
        for _ in range(n):
            out = out.compose(self)
        return out

    def is_identity(self) -> bool:
        k = len(self.matrix)
        if any(not t.is_zero() for t in self.offset):
            return False
        for i in range(k):
            for j in range(k):
                expect = ONE if i == j else ZERO
                if self.matrix[i][j] != expect:
                    return False
        return True

    def compiled(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """Flatten to integer-linear form on (a1, b1, ..., ak, bk) tuples."""
        return _compile(self.matrix, self.offset)


def identity_operator(group: GroupId) -> AffineOperator:
    k = group.rank
    return AffineOperator(group, "identity", golden_identity(k), (ZERO,) * k)


def _compile(matrix: Matrix, offset: tuple[GoldenInt, ...]):
    k = len(matrix)
    rows = [[0] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        for j in range(k):
            x, y = matrix[i][j].a, matrix[i][j].b
            rows[2 * i][2 * j] += x
            rows[2 * i][2 * j + 1] += y
            rows[2 * i + 1][2 * j] += y
            rows[2 * i + 1][2 * j + 1] += x + y
    off: list[int] = []
    for t in offset:
        off.append(t.a)
        off.append(t.b)
    return tuple(tuple(r) for r in rows), tuple(off)


def apply_compiled(op, flat: tuple[int, ...]) -> tuple[int, ...]:
    rows, off = op
    return tuple(
        sum(f * v for f, v in zip(row, flat)) + o for row, o in zip(rows, off)
    )


@dataclass(frozen=True)
class OperatorSet:
    """Simple reflections, the two alpha_H mirrors and the translation."""

    group: GroupId
    reflections: tuple[AffineOperator, ...]
    root_reflection: AffineOperator
    affine_reflection: AffineOperator
    translation: AffineOperator

    def generators(self, extended: bool) -> tuple[AffineOperator, ...]:
        """Reflection generators; the extended system adds r_0."""
        if extended:
            return (self.root_reflection,) + self.reflections
        return self.reflections

    def all(self) -> tuple[AffineOperator, ...]:
        return self.reflections + (
            self.root_reflection,
            self.affine_reflection,
            self.translation,
        )


def _root_reflection_matrix(group: GroupId, root_omega: OmegaVector) -> Matrix:
    """Reflection orthogonal to a root through the origin.

    In either normalization the reflection reads v -> v - <c, v> * w with
    w the omega coordinates of the root and c its alpha coordinates (the
    alpha coordinates are exactly the coefficients of the linear form
    2(v|root), respectively (v|root) for A2).
    """
    w = root_omega.coords
    c = alpha_vector_from_omega(root_omega).coords
    k = group.rank
    return tuple(
        tuple((ONE if i == j else ZERO) - w[i] * c[j] for j in range(k))
        for i in range(k)
    )


@lru_cache(maxsize=None)
def operators(group: GroupId) -> OperatorSet:
    k = group.rank
    zero = (ZERO,) * k
    refl = tuple(
        AffineOperator(group, "reflection", simple_reflection_matrix(group, j), zero, j)
        for j in range(k)
    )
    ah = highest_root(group)
    r0 = AffineOperator(group, "root_reflection", _root_reflection_matrix(group, ah), zero)
    raff = AffineOperator(group, "affine_reflection", r0.matrix, ah.coords)
    trans = AffineOperator(group, "translation", golden_identity(k), ah.coords)
    return OperatorSet(group, refl, r0, raff, trans)


# ---------------------------------------------------------------------------
# extended Cartan matrices and their defining conditions

def _border_matrix(group: GroupId, border: tuple[GoldenInt, ...]) -> CartanMatrix:
    base = cartan(group).entries
    top = (GoldenInt(2),) + border
    rows = [top]
    for i in range(group.rank):
        rows.append((border[i],) + base[i])
    return CartanMatrix(group, True, tuple(rows))


@lru_cache(maxsize=None)
def extended_cartan(group: GroupId) -> CartanMatrix:
    """Adjoin alpha_0 = -alpha_H: the border entries are -<alpha_H omega>."""
    return _border_matrix(group, tuple(-c for c in highest_root(group).coords))


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition outcome of the extended-Cartan requirements."""

    diagonal_ok: bool
    symmetric_ok: bool
    nonpositive_ok: bool
    det: GoldenInt
    det_zero_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.diagonal_ok and self.symmetric_ok and self.nonpositive_ok and self.det_zero_ok


def verify_conditions(m: CartanMatrix) -> ConditionReport:
    e = m.entries
    k = len(e)
    diagonal_ok = all(e[i][i] == GoldenInt(2) for i in range(k))
    symmetric_ok = all(e[i][j] == e[j][i] for i in range(k) for j in range(k))
    nonpositive_ok = all(
        e[i][j].sign() <= 0 for i in range(k) for j in range(k) if i != j
    )
    det = golden_det(e)
    return ConditionReport(diagonal_ok, symmetric_ok, nonpositive_ok, det, det.is_zero())


_ORDER_BY_ENTRY = {
    GoldenInt(2): 1,
    ZERO: 2,
    GoldenInt(-1): 3,
    GoldenInt(0, -1): 5,   # -tau
    GoldenInt(1, -1): 5,   # tau'
}


def coxeter_order(entry: GoldenInt) -> int:
    try:
        return _ORDER_BY_ENTRY[entry]
    except KeyError:
        raise ValueError(f"no product order is defined for entry {entry}") from None


@dataclass(frozen=True)
class PairIdentity:
    i: int
    j: int
    order: int
    holds: bool
    minimal: bool


@dataclass(frozen=True)
class IdentityReport:
    group: GroupId
    extended: bool
    pairs: tuple[PairIdentity, ...]

    @property
    def all_ok(self) -> bool:
        return all(p.holds and p.minimal for p in self.pairs)

    def failures(self) -> tuple[PairIdentity, ...]:
        return tuple(p for p in self.pairs if not (p.holds and p.minimal))


def verify_identities(group: GroupId, extended: bool = False) -> IdentityReport:
    """Check (r_i r_j)^M = 1 with M read off the (extended) Cartan matrix,
    and that no smaller positive power is the identity."""
    ops = operators(group)
    gens = ops.generators(extended)
    matrix = (extended_cartan(group) if extended else cartan(group)).entries
    results = []
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            order = coxeter_order(matrix[i][j])
            prod = gens[i].compose(gens[j])
            power = identity_operator(group)
            minimal = True
            for _ in range(order - 1):
                power = power.compose(prod)
                if power.is_identity():
                    minimal = False
            holds = power.compose(prod).is_identity()
            results.append(PairIdentity(i, j, order, holds, minimal))
    return IdentityReport(group, extended, tuple(results))


# ---------------------------------------------------------------------------
# brute-force enumeration of generalized Cartan matrices

@dataclass(frozen=True)
class CartanCandidate:
    group: GroupId
    coeffs: tuple[int, ...]
    matrix: CartanMatrix = field(compare=False)

    def border(self) -> tuple[GoldenInt, ...]:
        it = iter(self.coeffs)
        return tuple(GoldenInt(x, y) for x, y in zip(it, it))

    def is_nonpositive(self) -> bool:
        return all(e.sign() <= 0 for e in self.border())


@dataclass(frozen=True)
class EnumerationResult:
    group: GroupId
    coeff_bound: int
    candidates: tuple[CartanCandidate, ...]
    psd_count: int

    @property
    def count(self) -> int:
        return len(self.candidates)


def _quadratic_forms(group: GroupId):
    """Integer matrices G0, G1 with w^T adj(A) w = u G0 u + tau * (u G1 u)
    for w_i = x_i + tau y_i and u = (x_1..x_k, y_1..y_k)."""
    k = group.rank
    adj = golden_adjugate(cartan(group).entries)
    g0 = np.zeros((2 * k, 2 * k), dtype=np.int64)
    g1 = np.zeros((2 * k, 2 * k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            al, be = adj[i][j].a, adj[i][j].b
            xi, yi, xj, yj = i, k + i, j, k + j
            g0[xi, xj] += al
            g0[yi, yj] += al + be
            g0[xi, yj] += be
            g0[yi, xj] += be
            g1[xi, yj] += al + be
            g1[yi, xj] += al + be
            g1[yi, yj] += al + 2 * be
            g1[xi, xj] += be
    return g0, g1


@lru_cache(maxsize=8)
def enumerate_generalized(group: GroupId, coeff_bound: int = 3) -> EnumerationResult:
    """All bordered Cartan templates with exact determinant 0.

    det of the bordered matrix is 2 det(A) - w^T adj(A) w by the Schur
    complement, a pair of integer quadratic forms in the 2k border
    coefficients; the grid is scanned with int64 vector arithmetic (values
    stay tiny, thousands at most) and every hit is re-checked with the
    GoldenInt cofactor determinant.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    k = group.rank
    det_a = golden_det(cartan(group).entries)
    g0, g1 = _quadratic_forms(group)
    target0, target1 = 2 * det_a.a, 2 * det_a.b

    vals = np.arange(-coeff_bound, coeff_bound + 1, dtype=np.int64)
    nvals = len(vals)
    hits: list[tuple[int, ...]] = []
    # Slab over the first coefficient to bound memory for the 8-variable case.
    rest = np.stack(
        np.meshgrid(*([vals] * (2 * k - 1)), indexing="ij"), axis=-1
    ).reshape(-1, 2 * k - 1)
    for lead in vals:
        u_packed = np.concatenate(
            [np.full((rest.shape[0], 1), lead, dtype=np.int64), rest], axis=1
        )
        # packed order is (x1, y1, x2, y2, ...); the forms use (x..., y...)
        u = np.concatenate([u_packed[:, 0::2], u_packed[:, 1::2]], axis=1)
        q0 = np.einsum("ni,ij,nj->n", u, g0, u)
        q1 = np.einsum("ni,ij,nj->n", u, g1, u)
        mask = (q0 == target0) & (q1 == target1)
        hits.extend(map(tuple, u_packed[mask]))
    hits.sort()

    candidates = []
    for coeffs in hits:
        it = iter(coeffs)
        border = tuple(GoldenInt(int(x), int(y)) for x, y in zip(it, it))
        matrix = _border_matrix(group, border)
        if not golden_det(matrix.entries).is_zero():
            raise AssertionError(f"Schur/cofactor determinant mismatch at {coeffs}")
        candidates.append(CartanCandidate(group, tuple(int(c) for c in coeffs), matrix))

    psd_count = sum(1 for c in candidates if _is_psd(c.matrix))
    return EnumerationResult(group, coeff_bound, tuple(candidates), psd_count)


def _is_psd(m: CartanMatrix, tol: float = 1e-9) -> bool:
    real = np.array([[e.embed() for e in row] for row in m.entries])
    return bool(np.linalg.eigvalsh(real).min() >= -tol)


# ---------------------------------------------------------------------------
# bundled reference tables

_TABLE_FILES = {
    GroupId.H2: "generalized_cartan_h2.txt",
    GroupId.H3: "generalized_cartan_h3.txt",
    GroupId.H4: "generalized_cartan_h4.txt",
}


@lru_cache(maxsize=None)
def reference_table(group: GroupId) -> tuple[tuple[int, ...], ...]:
    """Rows of the bundled generalized-Cartan reference tables, verbatim."""
    name = _TABLE_FILES[group]
    text = resources.files("quasih.data").joinpath(name).read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        row = tuple(int(tok) for tok in line.split())
        if len(row) != 2 * group.rank:
            raise ValueError(f"bad row width in {name}: {line!r}")
        rows.append(row)
    return tuple(rows)


@dataclass(frozen=True)
class TableDiff:
    group: GroupId
    coeff_bound: int
    missing: tuple[tuple[int, ...], ...]
    extras: tuple[tuple[int, ...], ...]
    table_count: int
    enumerated_count: int
    psd_count: int

    @property
    def table_covered(self) -> bool:
        return not self.missing


def reference_diff(group: GroupId, coeff_bound: int = 3) -> TableDiff:
    result = enumerate_generalized(group, coeff_bound)
    found = {c.coeffs for c in result.candidates}
    table = set(reference_table(group))
    missing = tuple(sorted(table - found))
    extras = tuple(sorted(found - table))
    return TableDiff(
        group, coeff_bound, missing, extras, len(table), result.count, result.psd_count
    )


# ---------------------------------------------------------------------------
# crystallographic sanity fragment

def a2_lattice_demo(n: int) -> "Fragment":
    """A2 analog of fragment generation; every point lies in the root
    lattice (integer alpha coordinates), unlike the dense H-group orbits."""
    from .fragment import generate

    return generate(GroupId.A2, n)
