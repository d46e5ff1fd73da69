"""
Verification sweeps: closed formulas against the cellular and Koszul
computations, plus the seeded random property suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chains import hochster_betti, zk_chain_complex, homology, zk_top_dimension
from .complexes import SimplicialComplex, l_family, skeleton
from .quotient import koszul_cohomology, koszul_complex, quotient_betti
from .spaces import (
    l_quotient_type,
    l_type,
    quotient_type,
    reduced_poincare,
    skeleton_wedge,
)

DEFAULT_M_MAX_BOUND = 6
RANDOM_M_BOUND = 6


@dataclass
class CaseResult:
    family: str
    params: dict
    side: str  # "Z" or "Z/S1"
    expected: dict
    computed: dict
    torsion: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    @property
    def mismatched_degrees(self) -> list:
        degrees = set(self.expected) | set(self.computed)
        return sorted(d for d in degrees if self.expected.get(d, 0) != self.computed.get(d, 0))

    def label(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params.items())

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "side": self.side,
            "ok": self.ok,
            "expected": {str(d): b for d, b in sorted(self.expected.items())},
            "computed": {str(d): b for d, b in sorted(self.computed.items())},
            "torsion": {str(d): list(t) for d, t in sorted(self.torsion.items())},
        }


@dataclass
class TorusRow:
    m: int
    k: int
    dim_bound: int
    standard_top: int
    shifted_top: int
    koszul_top: int
    standard_ok: bool
    shifted_ok: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _betti(poly) -> dict:
    return poly.betti()


def skeleton_z_case(m: int, k: int) -> CaseResult:
    h = homology(zk_chain_complex(skeleton(m, k)))
    expected = _betti(reduced_poincare(skeleton_wedge(m, k)))
    return CaseResult("skeleton", {"m": m, "k": k}, "Z", expected, h.betti, h.torsion)


def skeleton_quotient_betti(m: int, k: int):
    # two degrees past the dimension m+k, so vanishing is checked too
    return quotient_betti(skeleton(m, k), up_to=m + k + 2)


def skeleton_quotient_case(m: int, k: int, shifted_torus: bool = False, computed=None) -> CaseResult:
    h = computed if computed is not None else skeleton_quotient_betti(m, k)
    expected = _betti(reduced_poincare(quotient_type(m, k, shifted_torus=shifted_torus)))
    return CaseResult("skeleton", {"m": m, "k": k}, "Z/S1", expected, h.betti, h.torsion)


def lfamily_cases(j: int, m: int, k: int) -> list:
    K = l_family(j, m, k)
    hz = homology(zk_chain_complex(K))
    hq = quotient_betti(K, up_to=zk_top_dimension(K) + 1)
    params = {"j": j, "m": m, "k": k}
    return [
        CaseResult("lfamily", params, "Z", _betti(reduced_poincare(l_type(j, m, k))), hz.betti, hz.torsion),
        CaseResult(
            "lfamily", params, "Z/S1", _betti(reduced_poincare(l_quotient_type(j, m, k))), hq.betti, hq.torsion
        ),
    ]


def torus_row(m: int, k: int, computed) -> TorusRow:
    standard = reduced_poincare(quotient_type(m, k))
    shifted = reduced_poincare(quotient_type(m, k, shifted_torus=True))
    return TorusRow(
        m=m,
        k=k,
        dim_bound=m + k,
        standard_top=standard.degree,
        shifted_top=shifted.degree,
        koszul_top=max(computed.betti),
        standard_ok=standard.betti() == computed.betti,
        shifted_ok=shifted.betti() == computed.betti,
    )


@dataclass
class VerifyReport:
    cases: list
    torus_table: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def mismatches(self) -> list:
        return [c for c in self.cases if not c.ok]


def run_verify(m_max: int, families=("skeleton", "lfamily"), shifted_torus: bool = False) -> VerifyReport:
    cases: list = []
    table: list = []
    quotients: dict = {}
    for m in range(2, m_max + 1):
        for k in range(0, m - 1):
            quotients[(m, k)] = skeleton_quotient_betti(m, k)
            table.append(torus_row(m, k, quotients[(m, k)]))
    if "skeleton" in families:
        for m in range(2, m_max + 1):
            for k in range(-1, m):
                cases.append(skeleton_z_case(m, k))
                if 0 <= k <= m - 2:
                    cases.append(skeleton_quotient_case(m, k, shifted_torus, quotients[(m, k)]))
    if "lfamily" in families:
        for m in range(2, m_max + 1):
            for k in range(0, m - 1):
                for j in range(1, k + 3):
                    cases.extend(lfamily_cases(j, m, k))
    return VerifyReport(cases, table)


# ------------------------------------------------------------------ random


def random_complex(m: int, rng: random.Random) -> SimplicialComplex:
    """Uniformly sampled nonempty subsets as facets, reduced to an antichain."""
    count = rng.randint(1, m + 1)
    facets = []
    for _ in range(count):
        mask = rng.randrange(1, 1 << m)
        facets.append([v + 1 for v in range(m) if mask >> v & 1])
    return SimplicialComplex(m, facets)


@dataclass
class RandomCheck:
    complex: SimplicialComplex
    square_zero: bool
    hochster_ok: bool
    koszul_ok: bool

    @property
    def ok(self) -> bool:
        return self.square_zero and self.hochster_ok and self.koszul_ok

    def to_dict(self) -> dict:
        return {
            "complex": self.complex.to_dict(),
            "square_zero": self.square_zero,
            "hochster_ok": self.hochster_ok,
            "koszul_ok": self.koszul_ok,
        }


def identity_koszul_betti(K: SimplicialComplex, N: int | None = None) -> dict:
    """Koszul cohomology with the identity matrix, i.e. H^*(Z_K) over Q."""
    m = K.ambient
    if N is None:
        N = zk_top_dimension(K)
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    return koszul_cohomology(koszul_complex(K, eye, N), torsion=False).betti


def check_random_complex(K: SimplicialComplex) -> RandomCheck:
    C = zk_chain_complex(K)
    square_zero = C.check_square_zero(raise_error=False)
    cellular = homology(C, check=False)
    hochster = hochster_betti(K)
    hochster_ok = hochster.betti == cellular.betti and hochster.torsion == cellular.torsion
    koszul_ok = identity_koszul_betti(K) == cellular.betti
    return RandomCheck(K, square_zero, hochster_ok, koszul_ok)


def run_random(m: int, count: int, seed: int) -> list:
    rng = random.Random(seed)
    return [check_random_complex(random_complex(m, rng)) for _ in range(count)]
