"""Truncated characteristic-class calculus on a formal surface.

A surface here is nothing but a ring: a divisor basis, a Gram matrix of
pairwise intersection numbers, and the point class.  Gram entries may be
exact rationals or symbols, so the same code evaluates both the numeric
K3 instance and the fully symbolic identity behind the triple-point
count.  Degree-2 components are linear expressions in the pairing
symbols with rational coefficients; products of degree > 2 vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .linexpr import LinExpr


class RingMismatch(ValueError):
    pass


class SurfaceRing:
    """Divisor basis + symmetric Gram matrix of intersection numbers.

    `gram[(a, b)]` is the degree-2 value of a*b as a LinExpr (a constant
    for a numeric surface, a pairing symbol for a symbolic one).
    """

    def __init__(self, basis, gram):
        self.basis = tuple(basis)
        self.gram = {}
        for (a, b), v in gram.items():
            if a not in self.basis or b not in self.basis:
                raise ValueError(f"gram entry for unknown divisors ({a}, {b})")
            v = LinExpr.coerce(v)
            self.gram[(a, b)] = v
            self.gram[(b, a)] = v
        for a in self.basis:
            for b in self.basis:
                if (a, b) not in self.gram:
                    raise ValueError(f"missing intersection number {a}.{b}")

    @staticmethod
    def symbolic(basis) -> "SurfaceRing":
        """Ring whose pairings are free symbols `a.b`."""
        basis = tuple(basis)
        gram = {}
        for i, a in enumerate(basis):
            for b in basis[i:]:
                gram[(a, b)] = LinExpr.unknown(f"{a}.{b}")
        return SurfaceRing(basis, gram)

    def divisor(self, name: str) -> "SurfaceClass":
        if name not in self.basis:
            raise ValueError(f"unknown divisor {name!r}")
        return SurfaceClass(self, c1={name: Fraction(1)})

    def zero(self) -> "SurfaceClass":
        return SurfaceClass(self)

    def one(self) -> "SurfaceClass":
        return SurfaceClass(self, c0=Fraction(1))

    def point(self, coeff=1) -> "SurfaceClass":
        return SurfaceClass(self, c2=LinExpr.coerce(coeff))

    def pair(self, u: dict, v: dict) -> LinExpr:
        """Intersection number of two divisor vectors."""
        out = LinExpr(0)
        for a, ca in u.items():
            for b, cb in v.items():
                out = out + ca * cb * self.gram[(a, b)]
        return out


@dataclass
class SurfaceClass:
    """Graded element: c0 * 1 + (divisor span) + c2 * point."""

    ring: SurfaceRing
    c0: Fraction = Fraction(0)
    c1: dict = field(default_factory=dict)
    c2: LinExpr = field(default_factory=lambda: LinExpr(0))

    def __post_init__(self):
        self.c0 = Fraction(self.c0)
        self.c1 = {k: Fraction(v) for k, v in self.c1.items() if v}
        self.c2 = LinExpr.coerce(self.c2)

    def _check(self, other):
        if self.ring is not other.ring:
            raise RingMismatch("classes live on different surface rings")

    def __add__(self, other):
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        self._check(other)
        c1 = dict(self.c1)
        for k, v in other.c1.items():
            c1[k] = c1.get(k, Fraction(0)) + v
        return SurfaceClass(self.ring, self.c0 + other.c0, c1, self.c2 + other.c2)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return SurfaceClass(
            self.ring,
            scalar * self.c0,
            {k: scalar * v for k, v in self.c1.items()},
            scalar * self.c2,
        )

    def __mul__(self, other):
        if isinstance(other, SurfaceClass):
            return ring_product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.c0 == other.c0
            and self.c1 == other.c1
            and self.c2 == other.c2
        )

    @property
    def is_divisor(self) -> bool:
        return self.c0 == 0 and not self.c2

    def __str__(self):
        bits = []
        if self.c0:
            bits.append(str(self.c0))
        for k in sorted(self.c1):
            v = self.c1[k]
            bits.append(k if v == 1 else f"{v}*{k}")
        if self.c2:
            bits.append(f"({self.c2})*pt")
        return " + ".join(bits) if bits else "0"


def ring_product(a: SurfaceClass, b: SurfaceClass) -> SurfaceClass:
    """Graded product; everything of degree >= 3 vanishes."""
    a._check(b)
    ring = a.ring
    c0 = a.c0 * b.c0
    c1 = {}
    for k, v in a.c1.items():
        c1[k] = c1.get(k, Fraction(0)) + b.c0 * v
    for k, v in b.c1.items():
        c1[k] = c1.get(k, Fraction(0)) + a.c0 * v
    c2 = a.c0 * b.c2 + b.c0 * a.c2 + ring.pair(a.c1, b.c1)
    return SurfaceClass(ring, c0, c1, c2)


@dataclass
class ChernPolynomial:
    """Truncated total Chern class 1 + c1 t + c2 t^2.

    c1 is a divisor-span SurfaceClass, c2 a degree-2 value (LinExpr).
    """

    ring: SurfaceRing
    c1: SurfaceClass
    c2: LinExpr

    @staticmethod
    def of_line_bundle(L: SurfaceClass) -> "ChernPolynomial":
        return ChernPolynomial(L.ring, L, LinExpr(0))

    def __mul__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        return chern_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self.ring is other.ring and self.c1 == other.c1 and self.c2 == other.c2

    def __str__(self):
        return f"1 + ({self.c1})t + ({self.c2})t^2"


def chern_mul(p: ChernPolynomial, q: ChernPolynomial) -> ChernPolynomial:
    if p.ring is not q.ring:
        raise RingMismatch("Chern polynomials over different rings")
    cross = p.ring.pair(p.c1.c1, q.c1.c1)
    return ChernPolynomial(p.ring, p.c1 + q.c1, p.c2 + q.c2 + cross)


@dataclass
class BundleSpec:
    """Rank-r bundle known through c1 (divisor class) and c2 (degree-2)."""

    rank: int
    c1: SurfaceClass
    c2: LinExpr

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        self.c2 = LinExpr.coerce(self.c2)

    @property
    def ring(self) -> SurfaceRing:
        return self.c1.ring

    def chern(self) -> ChernPolynomial:
        return ChernPolynomial(self.ring, self.c1, self.c2)

    def __eq__(self, other):
        if not isinstance(other, BundleSpec):
            return NotImplemented
        return self.rank == other.rank and self.c1 == other.c1 and self.c2 == other.c2


def tensor_line(E: BundleSpec, L: SurfaceClass) -> BundleSpec:
    """Twist a rank-r bundle by a line bundle."""
    r = E.rank
    ring = E.ring
    ll = ring.pair(L.c1, L.c1)
    c1l = ring.pair(E.c1.c1, L.c1)
    c1 = E.c1 + r * L
    c2 = E.c2 + (r - 1) * c1l + comb(r, 2) * ll
    return BundleSpec(r, c1, c2)


def sym_power(E: BundleSpec, n: int) -> BundleSpec:
    """Symmetric power of a rank-2 bundle.

    With Chern roots a, b of E, Sym^n has roots i*a + (n-i)*b; the
    elementary symmetric functions reduce to c1, c2 after truncation:
      sum r_i        = C(n+1, 2) c1
      sum r_i^2      = A (c1^2 - 2 c2) + 2 B c2,  A = sum i^2, B = sum i(n-i)
      e2(roots)      = ((sum r_i)^2 - sum r_i^2) / 2
    """
    if E.rank != 2:
        raise ValueError("sym_power only supports rank-2 bundles")
    if n < 0:
        raise ValueError("negative symmetric power")
    ring = E.ring
    if n == 0:
        return BundleSpec(1, ring.zero(), LinExpr(0))
    s1 = comb(n + 1, 2)
    A = sum(i * i for i in range(n + 1))
    B = sum(i * (n - i) for i in range(n + 1))
    c1sq = ring.pair(E.c1.c1, E.c1.c1)
    sum_sq = A * (c1sq - 2 * E.c2) + 2 * B * E.c2
    c2 = (Fraction(s1 * s1) * c1sq - sum_sq) / 2
    return BundleSpec(n + 1, s1 * E.c1, c2)


def whitney_sum(bundles) -> BundleSpec:
    bundles = list(bundles)
    ring = bundles[0].ring
    rank = sum(E.rank for E in bundles)
    total = ChernPolynomial(ring, ring.zero(), LinExpr(0))
    for E in bundles:
        total = chern_mul(total, E.chern())
    return BundleSpec(rank, total.c1, total.c2)


def jet_chern(L: SurfaceClass, n: int, omega: BundleSpec) -> BundleSpec:
    """Chern data of the n-th jet bundle of a line bundle L.

    Built from the jet filtration whose graded pieces are
    L (x) Sym^i(Omega) for i = 0..n; rank is C(n+2, 2).
    """
    if omega.rank != 2:
        raise ValueError("cotangent bundle of a surface must have rank 2")
    if n < 0:
        raise ValueError("negative jet order")
    return whitney_sum(tensor_line(sym_power(omega, i), L) for i in range(n + 1))


def cotangent_bundle(K: SurfaceClass, euler) -> BundleSpec:
    """Omega with c1 = K and c2 = euler characteristic times the point."""
    return BundleSpec(2, K, LinExpr.coerce(euler))


def triple_point_count(H2, HK, K2, e):
    """Expected hyperplane sections with a triple point, for a smooth
    linearly normal surface in P^4: 5 K^2 + 20 H.K + 15 H^2 + 5 e."""
    out = 5 * LinExpr.coerce(K2) + 20 * LinExpr.coerce(HK) \
        + 15 * LinExpr.coerce(H2) + 5 * LinExpr.coerce(e)
    return out.as_fraction() if out.is_constant else out


def k3_genus4_ring() -> SurfaceRing:
    """The numeric instance: K = 0, H^2 = 6, e = 24 enters via Omega."""
    return SurfaceRing(
        ["H", "K"],
        {("H", "H"): 6, ("H", "K"): 0, ("K", "K"): 0},
    )
