"""
Symbolic homotopy types built from spheres, CP^n, tori and moment-angle
complexes of skeleta, with reduced Poincaré polynomials and a wedge
normal form.

>>> X = quotient_type(4, 1)
>>> render(wedge_normal_form(X))
'CP^2 v 3S^5'
>>> reduced_poincare(X).to_dict()
{'2': 1, '4': 1, '5': 3}
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InvalidParameter, UnsupportedForm


class PoincarePolynomial:
    """Reduced Poincaré polynomial: degree -> nonnegative coefficient, no degree 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        clean = {}
        for d, c in (coeffs or {}).items():
            d, c = int(d), int(c)
            if c < 0:
                raise InvalidParameter(f"negative coefficient {c} at degree {d}")
            if c == 0:
                continue
            if d <= 0:
                raise InvalidParameter(f"reduced polynomial has a term in degree {d}")
            clean[d] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def from_betti(cls, betti: dict) -> "PoincarePolynomial":
        """Drop the degree-0 unit from an unreduced Betti table of a connected space."""
        b = dict(betti)
        if b.get(0, 0) != 1:
            raise InvalidParameter(f"expected b_0 = 1, got {b.get(0, 0)}")
        del b[0]
        return cls(b)

    def __add__(self, other):
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return PoincarePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return PoincarePolynomial({d: c * other for d, c in self.coeffs.items()})
        out: Counter = Counter()
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] += c1 * c2
        return PoincarePolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "PoincarePolynomial":
        """Multiply by t^k."""
        return PoincarePolynomial({d + k: c for d, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __getitem__(self, degree: int) -> int:
        return self.coeffs.get(degree, 0)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def betti(self) -> dict:
        """Unreduced Betti numbers: the polynomial plus 1 in degree 0."""
        return {0: 1, **self.coeffs}

    def to_dict(self) -> dict:
        return {str(d): c for d, c in self.coeffs.items()}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in self.coeffs.items():
            mono = "t" if d == 1 else f"t^{d}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


ZERO = PoincarePolynomial()


# ------------------------------------------------------------- expressions


class Space:
    """Base class of homotopy-type expressions; all subclasses are frozen."""


@dataclass(frozen=True)
class Point(Space):
    pass


@dataclass(frozen=True)
class Sphere(Space):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"sphere dimension must be >= 1, got {self.n}")


@dataclass(frozen=True)
class CP(Space):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"CP^n needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class Torus(Space):
    b: int

    def __post_init__(self):
        if self.b < 0:
            raise InvalidParameter(f"torus rank must be >= 0, got {self.b}")


@dataclass(frozen=True)
class ZSkeleton(Space):
    """The moment-angle complex of the k-skeleton of the simplex on [m]."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 1 or not -1 <= self.k <= self.m - 1:
            raise InvalidParameter(f"Z(m,k) needs m >= 1 and -1 <= k <= m-1, got ({self.m},{self.k})")


@dataclass(frozen=True)
class Wedge(Space):
    parts: tuple

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Join(Space):
    left: Space
    right: Space


@dataclass(frozen=True)
class Smash(Space):
    left: Space
    right: Space


@dataclass(frozen=True)
class Suspension(Space):
    inner: Space


@dataclass(frozen=True)
class Product(Space):
    left: Space
    right: Space


@dataclass(frozen=True)
class LeftHalfSmash(Space):
    """X ⋉ Y = X × Y / X × *."""

    left: Space
    right: Space


@dataclass(frozen=True)
class RightHalfSmash(Space):
    """X ⋊ Y = X × Y / * × Y."""

    left: Space
    right: Space


@dataclass(frozen=True)
class Copies(Space):
    count: int
    inner: Space

    def __post_init__(self):
        if self.count < 0:
            raise InvalidParameter(f"negative copy count {self.count}")


def wedge(*parts: Space) -> Wedge:
    return Wedge(parts)


# ---------------------------------------------------------------- Poincaré


@lru_cache(maxsize=None)
def reduced_poincare(X: Space) -> PoincarePolynomial:
    """Reduced Poincaré polynomial over Q; every leaf has free homology."""
    if isinstance(X, Point):
        return ZERO
    if isinstance(X, Sphere):
        return PoincarePolynomial({X.n: 1})
    if isinstance(X, CP):
        return PoincarePolynomial({2 * i: 1 for i in range(1, X.n + 1)})
    if isinstance(X, Torus):
        return PoincarePolynomial({i: comb(X.b, i) for i in range(1, X.b + 1)})
    if isinstance(X, ZSkeleton):
        return reduced_poincare(skeleton_wedge(X.m, X.k))
    if isinstance(X, Wedge):
        total = ZERO
        for p in X.parts:
            total = total + reduced_poincare(p)
        return total
    if isinstance(X, Copies):
        return reduced_poincare(X.inner) * X.count
    if isinstance(X, Suspension):
        return reduced_poincare(X.inner).shift()
    a = reduced_poincare(X.left)
    b = reduced_poincare(X.right)
    if isinstance(X, Smash):
        return a * b
    if isinstance(X, Join):
        return (a * b).shift()
    if isinstance(X, Product):
        return a + b + a * b
    if isinstance(X, LeftHalfSmash):
        return b + a * b
    if isinstance(X, RightHalfSmash):
        return a + a * b
    raise TypeError(f"not a space expression: {X!r}")


def is_contractible_type(X: Space) -> bool:
    """Zero reduced homology; for these free-homology types that means contractible."""
    return not reduced_poincare(X)


# ---------------------------------------------------------------- formulas


def skeleton_wedge(m: int, k: int) -> Space:
    """Z of the k-skeleton on [m] as a wedge of spheres.

    Base cases: k = -1 gives the torus T^m, k = m-1 a point.
    """
    if m < 1 or not -1 <= k <= m - 1:
        raise InvalidParameter(f"skeleton_wedge needs m >= 1 and -1 <= k <= m-1, got ({m},{k})")
    if k == -1:
        return Torus(m)
    if k == m - 1:
        return Point()
    return normalize(
        Wedge(Copies(comb(m, j) * comb(j - 1, k + 1), Sphere(k + j + 1)) for j in range(k + 2, m + 1))
    )


def quotient_type(m: int, k: int, shifted_torus: bool = False) -> Space:
    """Homotopy type of Z(Δ_m^k)/S^1_d for 0 <= k <= m-2.

    ``shifted_torus`` swaps the last summand's torus T^{m-k-2} for T^{m-k-1};
    that variant is kept only so it can be checked (and rejected).
    """
    if not 0 <= k <= m - 2:
        raise InvalidParameter(f"quotient_type needs 0 <= k <= m-2, got ({m},{k})")
    torus = m - k - 1 if shifted_torus else m - k - 2
    parts = [CP(k + 1), ZSkeleton(m - 1, k)]
    parts += [Join(Sphere(2 * i - 1), ZSkeleton(m - i - 1, k - i)) for i in range(1, k + 1)]
    parts.append(Join(Sphere(2 * k + 1), Torus(torus)))
    return Wedge(parts)


def cofibre_type(k: int, m: int) -> Space:
    """Cofibre of the quotient map Z(Δ_m^k) -> Z(Δ_m^k)/S^1_d.

    At k = -1 this is CP^1 v (S^1 * T^{m-1}), the link-empty cofibre.
    """
    if k < -1 or m < k + 2:
        raise InvalidParameter(f"cofibre_type needs k >= -1 and m >= k+2, got k={k}, m={m}")
    parts = [CP(k + 2)]
    parts += [Join(Sphere(2 * i - 1), ZSkeleton(m - i, k + 1 - i)) for i in range(1, k + 2)]
    parts.append(Join(Sphere(2 * k + 3), Torus(m - k - 2)))
    return Wedge(parts)


def _check_l_range(j: int, m: int, k: int):
    if not 1 <= j <= k + 2 <= m:
        raise InvalidParameter(f"need 1 <= j <= k+2 <= m, got j={j}, m={m}, k={k}")


def l_type(j: int, m: int, k: int) -> Space:
    """Homotopy type of Z of the L-family complex L^k_{j,m}."""
    _check_l_range(j, m, k)
    if j == k + 2:
        return Sphere(2 * k + 3)
    return Join(Sphere(2 * j - 1), ZSkeleton(m - j, k - j))


def l_quotient_type(j: int, m: int, k: int) -> Space:
    """Homotopy type of Z(L^k_{j,m})/S^1_d."""
    _check_l_range(j, m, k)
    if j == k + 2:
        return CP(k + 1)
    parts = [CP(k + 1)]
    parts += [Join(Sphere(2 * i - 1), ZSkeleton(m - i - 1, k - i)) for i in range(j, k + 1)]
    parts.append(Join(Sphere(2 * k + 1), Torus(m - k - 2)))
    return Wedge(parts)


def link_empty_quotient(rest_type: Space, m: int) -> Space:
    """Z_K/S^1 when some vertex v with weight ±1 has empty link.

    ``rest_type`` is the type of Z of the restriction of K away from v.
    """
    if m < 2:
        raise InvalidParameter(f"link_empty_quotient needs m >= 2, got {m}")
    return Wedge([rest_type, Sphere(2), Join(Sphere(1), Torus(m - 2))])


def disjoint_points_quotient(m: int) -> Space:
    """Z of m disjoint points modulo a free circle with a unit weight."""
    if m < 2:
        raise InvalidParameter(f"disjoint_points_quotient needs m >= 2, got {m}")
    return link_empty_quotient(ZSkeleton(m - 1, 0), m)


# ---------------------------------------------------------- normalization


def normalize(X: Space) -> Space:
    """Structural simplification that never changes the homotopy type.

    Collapses trivial tori, zero copies, empty or singleton wedges,
    degenerate skeleta, and any join, smash or suspension with a point.
    """
    if isinstance(X, Torus):
        return Point() if X.b == 0 else Sphere(1) if X.b == 1 else X
    if isinstance(X, ZSkeleton):
        if X.k == X.m - 1:
            return Point()
        if X.k == -1:
            return normalize(Torus(X.m))
        return X
    if isinstance(X, Copies):
        inner = normalize(X.inner)
        if X.count == 0 or isinstance(inner, Point):
            return Point()
        return inner if X.count == 1 else Copies(X.count, inner)
    if isinstance(X, Wedge):
        parts = []
        for p in X.parts:
            q = normalize(p)
            if isinstance(q, Wedge):
                parts.extend(q.parts)
            elif not isinstance(q, Point):
                parts.append(q)
        if not parts:
            return Point()
        return parts[0] if len(parts) == 1 else Wedge(parts)
    if isinstance(X, Suspension):
        inner = normalize(X.inner)
        return Point() if isinstance(inner, Point) else Suspension(inner)
    if isinstance(X, (Join, Smash, Product, LeftHalfSmash, RightHalfSmash)):
        a, b = normalize(X.left), normalize(X.right)
        pa, pb = isinstance(a, Point), isinstance(b, Point)
        if isinstance(X, (Join, Smash)) and (pa or pb):
            return Point()
        if isinstance(X, Product):
            if pa:
                return b
            if pb:
                return a
        if isinstance(X, LeftHalfSmash):
            if pb:
                return Point()
            if pa:
                return b
        if isinstance(X, RightHalfSmash):
            if pa:
                return Point()
            if pb:
                return a
        return type(X)(a, b)
    return X


def _check_supported(X: Space):
    if isinstance(X, (Product, LeftHalfSmash, RightHalfSmash)):
        raise UnsupportedForm(f"no wedge normal form for {type(X).__name__}")
    for child in _children(X):
        _check_supported(child)


def _children(X: Space) -> tuple:
    if isinstance(X, Wedge):
        return X.parts
    if isinstance(X, (Copies, Suspension)):
        return (X.inner,)
    if isinstance(X, (Join, Smash, Product, LeftHalfSmash, RightHalfSmash)):
        return (X.left, X.right)
    return ()


def _atoms(X: Space, s: int) -> Counter:
    """Atoms of the s-fold suspension of X: Counter over ('S', n) / ('CP', n)."""
    if isinstance(X, Point):
        return Counter()
    if isinstance(X, Sphere):
        return Counter({("S", X.n + s): 1})
    if isinstance(X, CP):
        if X.n == 1:
            return Counter({("S", 2 + s): 1}) if s else Counter({("CP", 1): 1})
        if s:
            raise UnsupportedForm(f"suspension of CP^{X.n} is not a wedge of spheres and CP^n")
        return Counter({("CP", X.n): 1})
    if isinstance(X, Torus):
        if X.b >= 2 and s == 0:
            raise UnsupportedForm(f"T^{X.b} is not a wedge of spheres (only its suspension is)")
        return Counter({("S", i + s): comb(X.b, i) for i in range(1, X.b + 1)})
    if isinstance(X, ZSkeleton):
        return _atoms(skeleton_wedge(X.m, X.k), s)
    if isinstance(X, Wedge):
        out: Counter = Counter()
        for p in X.parts:
            out.update(_atoms(p, s))
        return out
    if isinstance(X, Copies):
        return Counter({a: c * X.count for a, c in _atoms(X.inner, s).items()})
    if isinstance(X, Suspension):
        return _atoms(X.inner, s + 1)
    if isinstance(X, Join):
        return _smash_atoms(X.left, X.right, s + 1)
    if isinstance(X, Smash):
        return _smash_atoms(X.left, X.right, s)
    raise UnsupportedForm(f"no wedge normal form for {type(X).__name__}")


def _smash_atoms(X: Space, Y: Space, s: int) -> Counter:
    # Σ^s(X ∧ Y) = (Σ^s X) ∧ Y, and S^a ∧ Y = Σ^a Y.
    if is_contractible_type(X) or is_contractible_type(Y):
        return Counter()
    for A, B in ((X, Y), (Y, X)):
        try:
            left = _atoms(A, s)
        except UnsupportedForm:
            continue
        if ("CP", 1) in left:
            left[("S", 2)] += left.pop(("CP", 1))
        if any(kind == "CP" for kind, _ in left):
            continue
        out: Counter = Counter()
        for (_, a), c in left.items():
            for atom, c2 in _atoms(B, a).items():
                out[atom] += c * c2
        return out
    raise UnsupportedForm("smash factors do not split into spheres")


def wedge_normal_form(X: Space) -> Space:
    """Rewrite X as a wedge of CP^n and spheres; CP atoms first, then by dimension."""
    _check_supported(X)
    atoms = _atoms(X, 0)
    parts = [CP(n) for (kind, n), c in sorted(atoms.items()) if kind == "CP" for _ in range(c)]
    parts += [
        Copies(c, Sphere(n)) for (kind, n), c in sorted(atoms.items(), key=lambda a: a[0][1]) if kind == "S"
    ]
    return normalize(Wedge(parts))


# ---------------------------------------------------------------- rendering

_BINARY = {Join: "*", Smash: "^", Product: "x", LeftHalfSmash: "|x", RightHalfSmash: "x|"}


def _is_atomic(X: Space) -> bool:
    return isinstance(X, (Point, Sphere, CP, Torus, ZSkeleton, Suspension))


def render(X: Space) -> str:
    """Text form: S^n, CP^n, T^n, Z(m,k), v (wedge), * (join), x (product)."""
    if isinstance(X, Point):
        return "pt"
    if isinstance(X, Sphere):
        return f"S^{X.n}"
    if isinstance(X, CP):
        return f"CP^{X.n}"
    if isinstance(X, Torus):
        return f"T^{X.b}"
    if isinstance(X, ZSkeleton):
        return f"Z({X.m},{X.k})"
    if isinstance(X, Suspension):
        return f"susp({render(X.inner)})"
    if isinstance(X, Copies):
        inner = render(X.inner)
        if X.count == 1:
            return inner
        return f"{X.count}{inner}" if _is_atomic(X.inner) else f"{X.count}({inner})"
    if isinstance(X, Wedge):
        if not X.parts:
            return "pt"
        return " v ".join(
            render(p) if _is_atomic(p) or isinstance(p, Copies) else f"({render(p)})" for p in X.parts
        )
    op = _BINARY[type(X)]
    sides = [render(p) if _is_atomic(p) else f"({render(p)})" for p in (X.left, X.right)]
    return f"{sides[0]} {op} {sides[1]}"


_TAGS = {
    cls.__name__: cls
    for cls in (Point, Sphere, CP, Torus, ZSkeleton, Wedge, Join, Smash, Suspension,
                Product, LeftHalfSmash, RightHalfSmash, Copies)
}


def to_json(X: Space) -> dict:
    """Nested tagged tree, e.g. {"type": "Sphere", "n": 3}."""
    tag = type(X).__name__
    if isinstance(X, Point):
        return {"type": tag}
    if isinstance(X, Sphere):
        return {"type": tag, "n": X.n}
    if isinstance(X, CP):
        return {"type": tag, "n": X.n}
    if isinstance(X, Torus):
        return {"type": tag, "b": X.b}
    if isinstance(X, ZSkeleton):
        return {"type": tag, "m": X.m, "k": X.k}
    if isinstance(X, Wedge):
        return {"type": tag, "parts": [to_json(p) for p in X.parts]}
    if isinstance(X, Copies):
        return {"type": tag, "count": X.count, "inner": to_json(X.inner)}
    if isinstance(X, Suspension):
        return {"type": tag, "inner": to_json(X.inner)}
    return {"type": tag, "left": to_json(X.left), "right": to_json(X.right)}


def from_json(data: dict) -> Space:
    try:
        cls = _TAGS[data["type"]]
    except (KeyError, TypeError):
        raise InvalidParameter(f"not a space expression document: {data!r}") from None
    if cls is Point:
        return Point()
    if cls in (Sphere, CP):
        return cls(data["n"])
    if cls is Torus:
        return Torus(data["b"])
    if cls is ZSkeleton:
        return ZSkeleton(data["m"], data["k"])
    if cls is Wedge:
        return Wedge(from_json(p) for p in data["parts"])
    if cls is Copies:
        return Copies(data["count"], from_json(data["inner"]))
    if cls is Suspension:
        return Suspension(from_json(data["inner"]))
    return cls(from_json(data["left"]), from_json(data["right"]))
