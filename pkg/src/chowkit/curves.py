"""Classical enumerative formulas for curves and scrolls.

Pluecker system for plane curves, Riemann-Hurwitz ramification,
coincidence counting for correspondences on a line, the Salmon-Cayley
scroll of lines meeting three space curves, secant-scroll degrees,
odd theta-characteristic counts, degeneration multiplicities, and the
ledger bookkeeping for specialization arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from math import comb


class PlueckerInconsistent(ValueError):
    pass


class PlueckerUnderdetermined(ValueError):
    pass


@dataclass
class PlueckerData:
    """Numerical characters of a plane curve and its dual.

    d: degree, m: class, nodes/cusps on the curve, bitangents/flexes on
    the dual side, genus.  Unset fields are None; `plucker_solve` fills
    them from the classical relations.
    """

    d: Fraction | None = None
    m: Fraction | None = None
    nodes: Fraction | None = None
    cusps: Fraction | None = None
    bitangents: Fraction | None = None
    flexes: Fraction | None = None
    genus: Fraction | None = None

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None:
                setattr(self, f.name, Fraction(v))

    def is_complete(self) -> bool:
        return all(getattr(self, f.name) is not None for f in fields(self))

    def dual(self) -> "PlueckerData":
        """Swap d<->m, nodes<->bitangents, cusps<->flexes."""
        return PlueckerData(
            d=self.m,
            m=self.d,
            nodes=self.bitangents,
            cusps=self.flexes,
            bitangents=self.nodes,
            flexes=self.cusps,
            genus=self.genus,
        )


# Each relation: 0 == const-free polynomial, written as (linear_var, solver)
# pairs handled by one propagation loop below.  All five are linear in
# each single variable, which is all the solver exploits.
def _relations():
    def r1(v):  # m = d(d-1) - 2 nodes - 3 cusps
        return v["m"] - v["d"] * (v["d"] - 1) + 2 * v["nodes"] + 3 * v["cusps"]

    def r2(v):  # flexes = 3d(d-2) - 6 nodes - 8 cusps
        return v["flexes"] - 3 * v["d"] * (v["d"] - 2) + 6 * v["nodes"] + 8 * v["cusps"]

    def r3(v):  # d = m(m-1) - 2 bitangents - 3 flexes
        return v["d"] - v["m"] * (v["m"] - 1) + 2 * v["bitangents"] + 3 * v["flexes"]

    def r4(v):  # cusps = 3m(m-2) - 6 bitangents - 8 flexes
        return (
            v["cusps"]
            - 3 * v["m"] * (v["m"] - 2)
            + 6 * v["bitangents"]
            + 8 * v["flexes"]
        )

    def r5(v):  # genus = (d-1)(d-2)/2 - nodes - cusps
        return (
            v["genus"]
            - (v["d"] - 1) * (v["d"] - 2) / 2
            + v["nodes"]
            + v["cusps"]
        )

    return [
        (r1, ["m", "d", "nodes", "cusps"]),
        (r2, ["flexes", "d", "nodes", "cusps"]),
        (r3, ["d", "m", "bitangents", "flexes"]),
        (r4, ["cusps", "m", "bitangents", "flexes"]),
        (r5, ["genus", "d", "nodes", "cusps"]),
    ]


def _solve_single(rel, vals, name):
    """Solve rel == 0 for `name`, everything else in `vals` being known.

    The relations are linear in each single variable, so two evaluations
    determine the solution.
    """
    v0 = dict(vals, **{name: Fraction(0)})
    v1 = dict(vals, **{name: Fraction(1)})
    f0 = rel(v0)
    slope = rel(v1) - f0
    if slope == 0:
        raise PlueckerInconsistent("degenerate relation")
    return -f0 / slope


def plucker_solve(partial: PlueckerData) -> PlueckerData:
    """Complete a partial set of Pluecker characters.

    Propagates each of the five relations whenever all but one of its
    variables are known; raises if the input is inconsistent or leaves
    the system underdetermined.
    """
    vals = {
        f.name: getattr(partial, f.name)
        for f in fields(partial)
    }
    rels = _relations()
    changed = True
    while changed:
        changed = False
        for rel, names in rels:
            known = {n: vals[n] for n in names if vals[n] is not None}
            missing = [n for n in names if vals[n] is None]
            if not missing:
                if rel(vals) != 0:
                    raise PlueckerInconsistent(
                        f"relation violated on {sorted(known.items())}"
                    )
            elif len(missing) == 1:
                vals[missing[0]] = _solve_single(rel, known, missing[0])
                changed = True
    if any(v is None for v in vals.values()):
        unset = sorted(n for n, v in vals.items() if v is None)
        raise PlueckerUnderdetermined(f"cannot determine: {', '.join(unset)}")
    return PlueckerData(**vals)


class NegativeRamification(ValueError):
    pass


def hurwitz_ramification(g_source: int, g_target: int, n: int) -> Fraction:
    """Total ramification of a degree-n cover: 2g' - 2 - n(2g - 2)."""
    if n < 1:
        raise ValueError("covering degree must be at least 1")
    r = Fraction(2 * g_source - 2 - n * (2 * g_target - 2))
    if r < 0:
        raise NegativeRamification(f"invalid cover data: ramification {r} < 0")
    return r


def correspondence_coincidences(e, f) -> Fraction:
    """Coincidence points of a correspondence of indices [e, f] on a line."""
    e, f = Fraction(e), Fraction(f)
    if e < 0 or f < 0:
        raise ValueError("correspondence indices must be non-negative")
    return e + f


@dataclass(frozen=True)
class TripleScrollInput:
    """Degrees of three directrix curves and their pairwise intersections."""

    n1: int
    n2: int
    n3: int
    i12: int = 0
    i13: int = 0
    i23: int = 0

    def __post_init__(self):
        if min(self.n1, self.n2, self.n3, self.i12, self.i13, self.i23) < 0:
            raise ValueError("scroll input data must be non-negative")


def salmon_cayley(inp: TripleScrollInput):
    """Degree and directrix multiplicities of the scroll of lines meeting
    three space curves.

    degree = 2 n1 n2 n3 - (i23 n1 + i13 n2 + i12 n3); the multiplicity of
    curve i is nj*nk - ijk.  The pairwise-intersection correction is
    calibrated to the configuration of three mutually transverse curves
    with the stated common points; that covers every instance used here
    and agrees with the exact Schubert count when all ijk = 0.
    """
    deg = 2 * inp.n1 * inp.n2 * inp.n3 - (
        inp.i23 * inp.n1 + inp.i13 * inp.n2 + inp.i12 * inp.n3
    )
    m1 = inp.n2 * inp.n3 - inp.i23
    m2 = inp.n1 * inp.n3 - inp.i13
    m3 = inp.n1 * inp.n2 - inp.i12
    if deg < 0 or min(m1, m2, m3) < 0:
        raise ValueError("scroll configuration has negative degree or multiplicity")
    return Fraction(deg), Fraction(m1), Fraction(m2), Fraction(m3)


def secant_plucker_degree(d: int, g: int) -> Fraction:
    """Degree of the secant variety of a space curve in the Pluecker
    embedding: secants through a general point plus secants in a general
    plane, C(d-1, 2) - g + C(d, 2)."""
    if d < 3:
        raise ValueError("need degree at least 3")
    if g < 0:
        raise ValueError("genus must be non-negative")
    through_point = comb(d - 1, 2) - g
    if through_point < 0:
        raise ValueError(f"a degree-{d} space curve cannot have genus {g}")
    return Fraction(through_point + comb(d, 2))


def odd_theta_count(g: int) -> Fraction:
    """Number of odd theta-characteristics on a genus-g curve."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    return Fraction(2 ** (g - 1) * (2**g - 1))


def degeneration_multiplicity(contacts: int) -> Fraction:
    """Multiplicity 2 per tangency trading for a double-curve passage."""
    if contacts < 0:
        raise ValueError("contact count must be non-negative")
    return Fraction(2**contacts)


class NegativeResidual(ValueError):
    pass


@dataclass
class DecompositionLedger:
    """total = residual + sum(mult * degree) over listed components."""

    total: Fraction
    parts: list
    residual: Fraction

    def check(self):
        acc = self.residual + sum(Fraction(m) * Fraction(d) for m, d in self.parts)
        if acc != Fraction(self.total):
            raise ValueError("ledger does not balance")


def residual_degree(total, parts) -> Fraction:
    """Residual of a specialization ledger; must be non-negative."""
    r = Fraction(total) - sum(Fraction(m) * Fraction(d) for m, d in parts)
    if r < 0:
        raise NegativeResidual(f"ledger residual {r} is negative")
    return r


def ledger(total, parts) -> DecompositionLedger:
    out = DecompositionLedger(Fraction(total), list(parts), residual_degree(total, parts))
    out.check()
    return out
