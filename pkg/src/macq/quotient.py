"""
Free circle actions on Z_K and the cohomology of the quotient.

The circle acts through a weight vector s: t . z = (t^{s_1} z_1, ..., t^{s_m} z_m).
H^*(Z_K/S^1) is computed additively as the cohomology of the Koszul
complex  Λ[y_1, ..., y_{m-1}] ⊗ Z[K]  with d(y_j) = sum_i λ_ji u_i,
where Λ is the (m-1) x m matrix of the projection T^m -> T^m/S^1 and
Z[K] is the Stanley-Reisner ring (u_i in degree 2, y_j in degree 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import gcd

from .chains import ChainComplex, HomologySummary, _check_size, homology, zk_top_dimension
from .complexes import SimplicialComplex, full_subcomplex, relabel
from .errors import InvalidParameter, NormalizationError, PreconditionError
from .linalg import IntMatrix


def _check_weights(K: SimplicialComplex, s) -> tuple:
    s = tuple(int(x) for x in s)
    if len(s) != K.ambient:
        raise InvalidParameter(f"weight vector has {len(s)} entries, complex has {K.ambient} vertices")
    if not any(s):
        raise InvalidParameter("weight vector is identically zero")
    return s


def _maximal_faces(K: SimplicialComplex) -> list:
    return K.sorted_facets() or [()]


def freeness_violation(K: SimplicialComplex, s) -> tuple | None:
    """First maximal face whose complement has weight gcd != 1, as (face, gcd)."""
    s = _check_weights(K, s)
    for sigma in _maximal_faces(K):
        g = 0
        for j in range(1, K.ambient + 1):
            if j not in sigma:
                g = gcd(g, s[j - 1])
        if g != 1:
            return sigma, g
    return None


def is_free(K: SimplicialComplex, s) -> bool:
    """Whether the circle with weights s acts freely on Z_K.

    The stabiliser of a point with zero coordinates exactly on sigma is the
    group of gcd{s_j : j not in sigma}-th roots of unity, and it only grows
    with sigma, so the facets decide.
    """
    return freeness_violation(K, s) is None


def quotient_matrix(s, v: int | None = None) -> list:
    """Integer (m-1) x m matrix with kernel the circle s, pivoting at vertex v.

    Row u (for each u != v, in order) is e_u - s_v s_u e_v.  ``v`` defaults
    to the first coordinate with |s_v| = 1.
    """
    s = [int(x) for x in s]
    m = len(s)
    if v is None:
        v = next((i + 1 for i, x in enumerate(s) if abs(x) == 1), None)
        if v is None:
            raise NormalizationError(f"weights {s} have no coordinate equal to ±1")
    if not 1 <= v <= m:
        raise InvalidParameter(f"pivot vertex {v} not in [1..{m}]")
    sv = s[v - 1]
    if abs(sv) != 1:
        raise NormalizationError(f"weight at pivot vertex {v} is {sv}, not ±1")
    rows = []
    for u in range(1, m + 1):
        if u == v:
            continue
        row = [0] * m
        row[u - 1] = 1
        row[v - 1] = -sv * s[u - 1]
        rows.append(row)
    return rows


def _face_test(K: SimplicialComplex):
    facets = [frozenset(f) for f in K.facets]
    cache: dict = {}

    def test(support: frozenset) -> bool:
        hit = cache.get(support)
        if hit is None:
            hit = not support or any(support <= f for f in facets)
            cache[support] = hit
        return hit

    return test


def _monomials(K: SimplicialComplex, degree: int) -> list:
    """Exponent vectors of total degree ``degree`` whose support is a face."""
    if degree == 0:
        return [(0,) * K.ambient]
    out = set()
    for facet in K.facets:
        for combo in combinations_with_replacement(facet, degree):
            a = [0] * K.ambient
            for i in combo:
                a[i - 1] += 1
            out.add(tuple(a))
    return sorted(out)


@dataclass
class KoszulComplex:
    """Truncated Koszul cochain complex; basis complete through degree ``top``."""

    generators: int
    linear_forms: list  # row j: coefficients of d(y_j) in u_1..u_m
    complex: ChainComplex
    truncation: int

    @property
    def top(self) -> int:
        return self.truncation + 1


def koszul_complex(K: SimplicialComplex, Lam, N: int) -> KoszulComplex:
    """Koszul complex of Z[K] against the rows of Lam, through degree N+1.

    Basis of degree n: pairs (J, a), J a subset of the generators and a a
    monomial with face support, |J| + 2|a| = n.  The differential is
    d(y_J u^a) = sum_{j in J} (-1)^{pos(j)} y_{J-j} sum_i λ_ji u^{a+e_i},
    terms with non-face support dropped.
    """
    if N < 0:
        raise InvalidParameter(f"truncation degree must be >= 0, got {N}")
    Lam = [list(map(int, row)) for row in Lam]
    r = len(Lam)
    m = K.ambient
    for row in Lam:
        if len(row) != m:
            raise InvalidParameter(f"linear form {row} does not have {m} coefficients")
    top = N + 1
    is_face = _face_test(K)
    monos = {d: _monomials(K, d) for d in range(top // 2 + 1)}
    basis: dict = {}
    total = 0
    for n in range(top + 1):
        cells = []
        for p in range(min(r, n) + 1):
            if (n - p) % 2:
                continue
            for J in combinations(range(r), p):
                for a in monos[(n - p) // 2]:
                    cells.append((J, a))
        basis[n] = cells
        total += len(cells)
        _check_size(total, "Koszul basis")
    index = {n: {c: i for i, c in enumerate(cells)} for n, cells in basis.items()}
    forms = [[(i, c) for i, c in enumerate(row) if c] for row in Lam]
    diffs = {}
    for n in range(top):
        target = index[n + 1]
        entries: dict = {}
        for col, (J, a) in enumerate(basis[n]):
            if not J:
                continue
            for pos, j in enumerate(J):
                sign = -1 if pos % 2 else 1
                rest_J = J[:pos] + J[pos + 1:]
                for i, c in forms[j]:
                    b = list(a)
                    b[i] += 1
                    b = tuple(b)
                    if not is_face(frozenset(x + 1 for x, e in enumerate(b) if e)):
                        continue
                    key = (target[(rest_J, b)], col)
                    v = entries.get(key, 0) + sign * c
                    if v:
                        entries[key] = v
                    else:
                        entries.pop(key, None)
        diffs[n] = IntMatrix(len(basis[n + 1]), len(basis[n]), entries)
    cx = ChainComplex(basis, diffs, cochain=True)
    return KoszulComplex(r, Lam, cx, N)


def koszul_cohomology(KC: KoszulComplex, torsion: bool = True) -> HomologySummary:
    """Cohomology through the truncation degree (the top degree is dropped)."""
    h = homology(KC.complex, torsion=torsion)
    keep = range(KC.truncation + 1)
    return HomologySummary(
        {n: b for n, b in h.betti.items() if n in keep},
        {n: t for n, t in h.torsion.items() if n in keep},
    )


def quotient_betti(K: SimplicialComplex, s=None, up_to: int | None = None, torsion: bool = True) -> HomologySummary:
    """Betti numbers (over Q) and torsion of Z_K/S^1 through degree ``up_to``.

    ``s`` defaults to the diagonal weights (1, ..., 1); ``up_to`` defaults
    to dim Z_K - 1, the dimension of the quotient.
    """
    if s is None:
        s = (1,) * K.ambient
    s = _check_weights(K, s)
    bad = freeness_violation(K, s)
    if bad is not None:
        face, g = bad
        raise PreconditionError(
            f"action is not free: facet {list(face)} has complement weight gcd {g}"
        )
    Lam = quotient_matrix(s)
    if up_to is None:
        up_to = zk_top_dimension(K) - 1
    return koszul_cohomology(koszul_complex(K, Lam, up_to), torsion=torsion)


def ghost_reduce(K: SimplicialComplex, s, v: int):
    """Drop a ghost vertex carrying a unit weight.

    Z_K/S^1 is then Z_L for the full subcomplex L on the other vertices
    (relabelled onto [m-1]); the remaining weights are returned alongside.
    """
    s = _check_weights(K, s)
    if not 1 <= v <= K.ambient:
        raise InvalidParameter(f"vertex {v} not in [1..{K.ambient}]")
    if v not in K.ghosts:
        raise PreconditionError(f"vertex {v} is not a ghost vertex")
    if abs(s[v - 1]) != 1:
        raise PreconditionError(f"weight at ghost vertex {v} is {s[v - 1]}, not ±1")
    keep = [u for u in range(1, K.ambient + 1) if u != v]
    L = relabel(full_subcomplex(K, keep), keep)
    return L, tuple(x for i, x in enumerate(s) if i != v - 1)
