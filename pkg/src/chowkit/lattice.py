"""Numerical-class lattices of ruled surfaces and scrolls.

A lattice is a basis of curve-class names, a symmetric Gram matrix whose
entries may contain named unknowns, and optionally a canonical class.
Intersection numbers expand bilinearly to linear expressions in the
unknowns; systems of linear constraints pin the unknowns one solve at a
time, the way such computations are usually carried out by hand.
"""

from __future__ import annotations

from fractions import Fraction

from .linexpr import (
    InconsistentSystem,
    LinExpr,
    NonlinearError,
    UnderdeterminedSystem,
    solve_linear,
)

__all__ = [
    "RuledLattice",
    "ClassExpr",
    "LinearConstraint",
    "LatticeMismatch",
    "NonIntegralGenus",
    "intersect",
    "solve_unknowns",
    "adjunction_genus",
    "genus_additivity",
    "InconsistentSystem",
    "UnderdeterminedSystem",
    "NonlinearError",
]


class LatticeMismatch(ValueError):
    pass


class NonIntegralGenus(ValueError):
    """C^2 + C.K came out odd: the lattice data is inconsistent."""


class RuledLattice:
    def __init__(self, basis, gram=None, canonical=None, unknowns=()):
        self.basis = tuple(basis)
        self.unknowns = list(unknowns)
        self.gram = {}
        if gram:
            for (a, b), v in gram.items():
                self.set_gram(a, b, v)
        self.canonical = None
        if canonical is not None:
            self.canonical = self.cls(canonical)

    def set_gram(self, a, b, value):
        if a not in self.basis or b not in self.basis:
            raise ValueError(f"gram entry for unknown classes ({a}, {b})")
        value = LinExpr.coerce(value)
        self.gram[(a, b)] = value
        self.gram[(b, a)] = value

    def gram_entry(self, a, b) -> LinExpr:
        try:
            return self.gram[(a, b)]
        except KeyError:
            raise ValueError(f"intersection number {a}.{b} was never declared")

    def add_unknown(self, name: str) -> LinExpr:
        if name not in self.unknowns:
            self.unknowns.append(name)
        return LinExpr.unknown(name)

    def cls(self, coeffs) -> "ClassExpr":
        """Build a class from a {basis name: coefficient} mapping."""
        return ClassExpr(self, coeffs)

    def generator(self, name: str) -> "ClassExpr":
        if name not in self.basis:
            raise ValueError(f"unknown basis class {name!r}")
        return ClassExpr(self, {name: 1})

    def substitute(self, assignment: dict):
        """Resolve solved unknowns everywhere in the lattice, in place."""
        for key, v in list(self.gram.items()):
            self.gram[key] = v.substitute(assignment)
        if self.canonical is not None:
            self.canonical = self.canonical.substitute(assignment)
        self.unknowns = [u for u in self.unknowns if u not in assignment]

    def __str__(self):
        head = f"lattice({', '.join(self.basis)}"
        if self.unknowns:
            head += f"; unknown {', '.join(self.unknowns)}"
        return head + ")"


class ClassExpr:
    """Linear combination of basis classes; coefficients may hold unknowns."""

    def __init__(self, lattice: RuledLattice, coeffs):
        self.lattice = lattice
        self.coeffs = {}
        for name, c in coeffs.items():
            if name not in lattice.basis:
                raise ValueError(f"unknown basis class {name!r}")
            c = LinExpr.coerce(c)
            if c:
                self.coeffs[name] = c

    def _check(self, other: "ClassExpr"):
        if self.lattice is not other.lattice:
            raise LatticeMismatch("classes live on different lattices")

    def __add__(self, other):
        if not isinstance(other, ClassExpr):
            return NotImplemented
        self._check(other)
        coeffs = dict(self.coeffs)
        for n, c in other.coeffs.items():
            coeffs[n] = coeffs.get(n, LinExpr(0)) + c
        return ClassExpr(self.lattice, coeffs)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        return ClassExpr(
            self.lattice, {n: scalar * c for n, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, ClassExpr):
            return intersect(self, other)
        return self.__rmul__(other)

    def substitute(self, assignment: dict) -> "ClassExpr":
        return ClassExpr(
            self.lattice, {n: c.substitute(assignment) for n, c in self.coeffs.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, ClassExpr):
            return NotImplemented
        return self.lattice is other.lattice and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for n in self.lattice.basis:
            if n not in self.coeffs:
                continue
            c = self.coeffs[n]
            if c.is_constant:
                f = c.as_fraction()
                if f == 1:
                    bits.append(("+", n))
                elif f == -1:
                    bits.append(("-", n))
                elif f < 0:
                    bits.append(("-", f"{-f}*{n}"))
                else:
                    bits.append(("+", f"{f}*{n}"))
            else:
                bits.append(("+", f"({c})*{n}"))
        out = bits[0][1] if bits[0][0] == "+" else f"-{bits[0][1]}"
        for sign, t in bits[1:]:
            out += f" {sign} {t}"
        return out


def intersect(a: ClassExpr, b: ClassExpr, lat: RuledLattice | None = None):
    """Bilinear expansion of a.b through the Gram matrix.

    Returns an exact Fraction when no unknowns survive, otherwise a
    LinExpr.  Unknown*unknown products are rejected as nonlinear.
    """
    a._check(b)
    if lat is not None and lat is not a.lattice:
        raise LatticeMismatch("classes do not belong to the given lattice")
    total = LinExpr(0)
    for n1, c1 in a.coeffs.items():
        for n2, c2 in b.coeffs.items():
            total = total + c1 * c2 * a.lattice.gram_entry(n1, n2)
    return total.as_fraction() if total.is_constant else total


class LinearConstraint:
    """expression == target, both linear in the lattice unknowns."""

    def __init__(self, expression, target):
        self.expression = LinExpr.coerce(expression)
        self.target = LinExpr.coerce(target)

    def residual(self) -> LinExpr:
        return self.expression - self.target

    def __repr__(self):
        return f"LinearConstraint({self.expression} == {self.target})"


def solve_unknowns(constraints, lat: RuledLattice, partial: bool = False) -> dict:
    """Solve the constraints for the lattice unknowns and substitute back.

    With partial=True, unknowns not mentioned by any constraint are left
    alone (a triangular, one-step-at-a-time solve); otherwise every declared
    unknown must be determined.
    """
    eqs = []
    for c in constraints:
        if not isinstance(c, LinearConstraint):
            c = LinearConstraint(*c)
        eqs.append(c.residual())
    if partial:
        names = sorted({n for e in eqs for n in e.coeffs})
    else:
        names = list(lat.unknowns)
    assignment = solve_linear(eqs, names)
    lat.substitute(assignment)
    return assignment


def adjunction_genus(C: ClassExpr, lat: RuledLattice | None = None) -> Fraction:
    """Arithmetic genus 1 + (C^2 + C.K)/2; must come out integral."""
    lat = lat or C.lattice
    if lat.canonical is None:
        raise ValueError("lattice has no canonical class")
    val = intersect(C, C) + intersect(C, lat.canonical)
    if isinstance(val, LinExpr):
        raise ValueError("genus requires fully numeric intersection data")
    if val % 2 != 0:
        raise NonIntegralGenus(f"C^2 + C.K = {val} is odd")
    return 1 + val / 2


def genus_additivity(p1, p2, inter) -> Fraction:
    """Genus of a nodal union: p1 + p2 + (number of intersections) - 1."""
    return Fraction(p1) + Fraction(p2) + Fraction(inter) - 1
