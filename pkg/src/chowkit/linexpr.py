"""Linear expressions in named unknowns over exact rationals.

Shared by the lattice solver (unknown Gram entries and class coefficients),
the symbolic surface ring (pairing symbols like ``H.K``), and the worksheet
``solve`` blocks.  Products of two non-constant expressions are rejected:
every system the workbench handles is linear after expansion.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class NonlinearError(ValueError):
    """Raised when a product would introduce an unknown*unknown term."""


class InconsistentSystem(ValueError):
    """Raised when a linear system has no solution."""


class UnderdeterminedSystem(ValueError):
    """Raised when a linear system does not pin every unknown."""


def _as_fraction(x):
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"expected a rational scalar, got {x!r}")


class LinExpr:
    """const + sum(coeff[name] * name), coefficients exact rationals."""

    __slots__ = ("const", "coeffs")

    def __init__(self, const=0, coeffs=None):
        self.const = _as_fraction(const)
        self.coeffs = {}
        if coeffs:
            for name, c in coeffs.items():
                c = _as_fraction(c)
                if c:
                    self.coeffs[name] = c

    @staticmethod
    def unknown(name: str) -> "LinExpr":
        return LinExpr(0, {name: 1})

    @staticmethod
    def coerce(x) -> "LinExpr":
        if isinstance(x, LinExpr):
            return x
        return LinExpr(x)

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def as_fraction(self) -> Fraction:
        if self.coeffs:
            names = ", ".join(sorted(self.coeffs))
            raise ValueError(f"expression still depends on unknowns: {names}")
        return self.const

    def substitute(self, assignment: dict) -> "LinExpr":
        const = self.const
        coeffs = {}
        for name, c in self.coeffs.items():
            if name in assignment:
                const += c * _as_fraction(assignment[name])
            else:
                coeffs[name] = c
        return LinExpr(const, coeffs)

    def __add__(self, other):
        if not isinstance(other, (LinExpr, Rational)):
            return NotImplemented
        other = LinExpr.coerce(other)
        coeffs = dict(self.coeffs)
        for name, c in other.coeffs.items():
            coeffs[name] = coeffs.get(name, Fraction(0)) + c
        return LinExpr(self.const + other.const, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LinExpr(-self.const, {n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, (LinExpr, Rational)):
            return NotImplemented
        return self + (-LinExpr.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (LinExpr, Rational)):
            return NotImplemented
        other = LinExpr.coerce(other)
        if self.coeffs and other.coeffs:
            raise NonlinearError(
                "product of two expressions with unknowns is not linear"
            )
        if other.coeffs:
            self, other = other, self
        k = other.const
        return LinExpr(self.const * k, {n: c * k for n, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LinExpr):
            other = other.as_fraction()
        other = _as_fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self * (Fraction(1) / other)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = LinExpr(other)
        if not isinstance(other, LinExpr):
            return NotImplemented
        return self.const == other.const and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.const, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs) or self.const != 0

    def __repr__(self):
        return f"LinExpr({self})"

    def __str__(self):
        parts = []
        for name in sorted(self.coeffs):
            c = self.coeffs[name]
            term = name if abs(c) == 1 else f"{abs(c)}*{name}"
            parts.append((c < 0, term))
        if self.const or not parts:
            parts.append((self.const < 0, str(abs(self.const))))
        out = []
        for i, (neg, term) in enumerate(parts):
            if i == 0:
                out.append(f"-{term}" if neg else term)
            else:
                out.append(f"- {term}" if neg else f"+ {term}")
        return " ".join(out)


def solve_linear(equations, unknowns=None) -> dict:
    """Solve ``expr == 0`` for each LinExpr in `equations`.

    Returns a full assignment name -> Fraction.  Raises InconsistentSystem
    if no solution exists, UnderdeterminedSystem if any unknown is free.
    """
    equations = [LinExpr.coerce(e) for e in equations]
    if unknowns is None:
        unknowns = sorted({n for e in equations for n in e.coeffs})
    else:
        unknowns = list(unknowns)
    rows = []
    for e in equations:
        stray = set(e.coeffs) - set(unknowns)
        if stray:
            raise ValueError(f"equation mentions undeclared unknowns: {sorted(stray)}")
        rows.append([e.coeffs.get(n, Fraction(0)) for n in unknowns] + [-e.const])

    ncols = len(unknowns)
    pivot_of = {}
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        scale = rows[r][col]
        rows[r] = [x / scale for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_of[col] = r
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            raise InconsistentSystem("constraints have no common solution")
    free = [unknowns[c] for c in range(ncols) if c not in pivot_of]
    if free:
        raise UnderdeterminedSystem(
            f"system does not determine: {', '.join(free)}"
        )
    return {unknowns[c]: rows[pivot_of[c]][ncols] for c in pivot_of}
