"""
Integer (co)homology of moment-angle complexes and simplicial complexes.

Z_K gets the product cell structure in which each disk factor has a
0-cell 1, a 1-cell T and a 2-cell D with boundary T.  A cell is a pair
(sigma, omega): D on sigma, T on omega, the base point elsewhere; it
exists iff sigma is a face of K.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .complexes import SimplicialComplex
from .errors import InconsistentComplex, ResourceLimit
from .linalg import IntMatrix, diagonal_matrix, elementary_divisors, rank

DEFAULT_MAX_CELLS = 500_000
DEFAULT_HOCHSTER_MAX_M = 12


def max_cells() -> int:
    """Basis size cap, overridable through MACQ_MAX_CELLS."""
    raw = os.environ.get("MACQ_MAX_CELLS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_CELLS


def _check_size(count: int, what: str):
    cap = max_cells()
    if count > cap:
        raise ResourceLimit(f"{what}: {count} basis elements exceeds MACQ_MAX_CELLS={cap}")


@dataclass
class ChainComplex:
    """Free graded complex with explicit integer differentials.

    ``basis[n]`` lists labels of the degree-n generators.  For a chain
    complex ``differentials[n]`` is d_n: C_n -> C_{n-1} (rows indexed by
    degree n-1); for a cochain complex (``cochain=True``) it is
    d^n: C^n -> C^{n+1}.  Missing differentials are zero.
    """

    basis: dict
    differentials: dict = field(default_factory=dict)
    cochain: bool = False

    def degrees(self) -> list:
        return sorted(self.basis)

    def size(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def differential(self, n: int) -> IntMatrix:
        if n in self.differentials:
            return self.differentials[n]
        target = n + 1 if self.cochain else n - 1
        return IntMatrix(self.size(target), self.size(n))

    def check_square_zero(self, raise_error: bool = True) -> bool:
        step = 1 if self.cochain else -1
        for n in self.degrees():
            d1 = self.differential(n)
            d2 = self.differential(n + step)
            if d1.is_zero() or d2.is_zero():
                continue
            if not (d2 @ d1).is_zero():
                if raise_error:
                    raise InconsistentComplex(f"d∘d != 0 starting in degree {n}")
                return False
        return True


@dataclass
class HomologySummary:
    """Betti numbers over Q and integer torsion coefficients per degree."""

    betti: dict
    torsion: dict = field(default_factory=dict)

    def betti_list(self, top: int | None = None) -> list:
        if top is None:
            top = max(self.betti, default=-1)
        return [self.betti.get(n, 0) for n in range(top + 1)]

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def to_dict(self) -> dict:
        out = {"betti": {str(n): b for n, b in sorted(self.betti.items()) if b}}
        if self.torsion is not None:
            out["torsion"] = {str(n): list(t) for n, t in sorted(self.torsion.items()) if t}
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "HomologySummary":
        betti = {int(n): int(b) for n, b in data.get("betti", {}).items()}
        torsion = {int(n): tuple(t) for n, t in data.get("torsion", {}).items()}
        return cls(betti, torsion)


def homology(C: ChainComplex, torsion: bool = True, check: bool = True) -> HomologySummary:
    """(Co)homology of C: ranks over Q plus Smith-form torsion."""
    if check:
        C.check_square_zero()
    step = 1 if C.cochain else -1
    degrees = C.degrees()
    ranks = {}
    divisors = {}
    for n in degrees:
        d = C.differential(n)
        if d.is_zero():
            ranks[n] = 0
        elif torsion:
            divisors[n] = elementary_divisors(d)
            ranks[n] = len(divisors[n])
        else:
            ranks[n] = rank(d)
    betti = {}
    tors = {}
    for n in degrees:
        # incoming differential lands in degree n from degree n - step
        incoming = ranks.get(n - step, 0)
        b = C.size(n) - ranks[n] - incoming
        if b:
            betti[n] = b
        if torsion:
            t = tuple(x for x in divisors.get(n - step, ()) if x > 1)
            if t:
                tors[n] = t
    return HomologySummary(betti, tors if torsion else {})


# ------------------------------------------------------------ moment-angle


def zk_cells(K: SimplicialComplex) -> dict:
    """Cells (sigma, omega) of Z_K grouped by dimension 2|sigma| + |omega|."""
    m = K.ambient
    by_degree: dict = {}
    count = 0
    for sigma in K.faces():
        others = [v for v in range(1, m + 1) if v not in sigma]
        count += 1 << len(others)
        _check_size(count, "Z_K cell count")
        for r in range(len(others) + 1):
            for omega in combinations(others, r):
                by_degree.setdefault(2 * len(sigma) + r, []).append((sigma, omega))
    for cells in by_degree.values():
        cells.sort()
    return by_degree


def zk_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Cellular chain complex of Z_K.

    d(sigma, omega) = sum over i in sigma of (-1)^{#{j in omega : j < i}}
    (sigma - i, omega + i).
    """
    basis = zk_cells(K)
    index = {n: {c: i for i, c in enumerate(cells)} for n, cells in basis.items()}
    diffs = {}
    for n, cells in basis.items():
        if n == 0 or (n - 1) not in index:
            continue
        target = index[n - 1]
        entries = {}
        for col, (sigma, omega) in enumerate(cells):
            for i in sigma:
                below = sum(1 for j in omega if j < i)
                new_sigma = tuple(v for v in sigma if v != i)
                new_omega = tuple(sorted(omega + (i,)))
                entries[(target[(new_sigma, new_omega)], col)] = -1 if below % 2 else 1
        diffs[n] = IntMatrix(len(basis[n - 1]), len(cells), entries)
    return ChainComplex(basis, diffs)


def zk_homology(K: SimplicialComplex, torsion: bool = True) -> HomologySummary:
    return homology(zk_chain_complex(K), torsion=torsion)


def zk_top_dimension(K: SimplicialComplex) -> int:
    """Dimension of Z_K: m + |largest face|."""
    return K.ambient + K.dim + 1


def zk_euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating count of cells; the sum over omega collapses to (1-1)^free."""
    m = K.ambient
    total = 0
    for sigma in K.faces():
        free = m - len(sigma)
        total += 1 if free == 0 else 0
    return total


# --------------------------------------------------------------- simplicial


def simplicial_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Augmented simplicial chain complex; the empty face sits in degree -1."""
    basis: dict = {}
    for f in K.faces():
        basis.setdefault(len(f) - 1, []).append(f)
    for faces in basis.values():
        faces.sort()
    index = {n: {f: i for i, f in enumerate(fs)} for n, fs in basis.items()}
    diffs = {}
    for n, faces in basis.items():
        if n < 0:
            continue
        target = index[n - 1]
        entries = {}
        for col, f in enumerate(faces):
            for pos in range(len(f)):
                entries[(target[f[:pos] + f[pos + 1:]], col)] = -1 if pos % 2 else 1
        diffs[n] = IntMatrix(len(basis[n - 1]), len(faces), entries)
    return ChainComplex(basis, diffs)


def simplicial_homology(K: SimplicialComplex, torsion: bool = True) -> HomologySummary:
    """Reduced simplicial homology; {∅} has H~_{-1} = Z."""
    return homology(simplicial_chain_complex(K), torsion=torsion, check=False)


def hochster_betti(K: SimplicialComplex, max_m: int = DEFAULT_HOCHSTER_MAX_M) -> HomologySummary:
    """Homology of Z_K as the sum over W of H~_{n-|W|-1}(K_W)."""
    m = K.ambient
    if m > max_m:
        raise ResourceLimit(f"Hochster sum over 2^{m} subsets exceeds bound m <= {max_m}")
    facets = [frozenset(f) for f in K.facets]
    betti: dict = {}
    tors: dict = {}
    for r in range(m + 1):
        for W in combinations(range(1, m + 1), r):
            w = set(W)
            sub = SimplicialComplex(m, [tuple(sorted(f & w)) for f in facets])
            h = simplicial_homology(sub)
            for i, b in h.betti.items():
                betti[i + r + 1] = betti.get(i + r + 1, 0) + b
            for i, t in h.torsion.items():
                tors.setdefault(i + r + 1, []).extend(t)
    # direct sum of cyclic groups, rewritten as invariant factors
    torsion = {}
    for n, t in tors.items():
        factors = elementary_divisors(diagonal_matrix(t, len(t), len(t)))
        torsion[n] = tuple(d for d in factors if d > 1)
    return HomologySummary(betti, torsion)
