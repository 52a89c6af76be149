"""Worksheet evaluation: deterministic, exact, assertion-collecting.

Assertion failures never halt a run; every assertion is evaluated and
reported.  Runtime errors (bad solve, missing context, ...) abort with
the offending statement's source position.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .. import curves
from ..grassmann import (
    GrassmannContext,
    SchubertElement,
    integrate,
    plucker_degree,
)
from ..lattice import ClassExpr, RuledLattice, adjunction_genus, genus_additivity
from ..linexpr import LinExpr, solve_linear
from ..surface import (
    SurfaceClass,
    SurfaceRing,
    cotangent_bundle,
    jet_chern,
    triple_point_count,
)
from .ast import (
    Assert,
    BasisDecl,
    BinOp,
    Call,
    CanonicalDecl,
    ClassDecl,
    FieldAccess,
    GramEntry,
    GrassmannianDecl,
    Input,
    IntLit,
    Let,
    LatticeDecl,
    Name,
    Neg,
    Pos,
    SchubertLit,
    SolveBlock,
    SurfaceDecl,
    UnknownDecl,
    WorksheetProgram,
    _fmt_expr,
)


class WorksheetRuntimeError(ValueError):
    def __init__(self, message: str, pos: Pos):
        super().__init__(f"{pos}: {message}")
        self.message = message
        self.pos = pos


@dataclass
class Record:
    """Immutable bag of named exact values (e.g. a solved Pluecker set)."""

    fields: dict

    def get(self, name: str):
        if name not in self.fields:
            raise KeyError(name)
        return self.fields[name]

    def __str__(self):
        inner = ", ".join(f"{k}={render(v)}" for k, v in self.fields.items())
        return f"{{{inner}}}"


def render(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class AssertionResult:
    expression: str
    expected: str
    actual: str
    passed: bool


@dataclass
class EvaluationReport:
    bindings: list = field(default_factory=list)  # (name, rendered value)
    assertions: list = field(default_factory=list)  # AssertionResult
    notes: list = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def as_dict(self) -> dict:
        return {
            "bindings": [{"name": n, "value": v} for n, v in self.bindings],
            "assertions": [
                {
                    "expression": a.expression,
                    "expected": a.expected,
                    "actual": a.actual,
                    "pass": a.passed,
                }
                for a in self.assertions
            ],
            "notes": list(self.notes),
        }


@dataclass
class _ActiveSurface:
    ring: SurfaceRing
    euler: Fraction


class Evaluator:
    def __init__(self):
        self.env: dict = {}
        self.grassmann: GrassmannContext | None = None
        self.surface: _ActiveSurface | None = None
        self.lattices: list[RuledLattice] = []
        self.report = EvaluationReport()

    # -- statements ---------------------------------------------------

    def run(self, program: WorksheetProgram) -> EvaluationReport:
        for s in program.statements:
            self.statement(s)
        return self.report

    def statement(self, s):
        if isinstance(s, Let):
            value = self.eval(s.expr)
            self.bind(s.name, value)
        elif isinstance(s, Input):
            value = self.eval(s.expr)
            self.bind(s.name, value)
            self.report.notes.append(
                f'input {s.name} = {render(value)} from "{s.citation}"'
            )
        elif isinstance(s, Assert):
            left = self.eval(s.left)
            right = self.eval(s.right)
            self.report.assertions.append(
                AssertionResult(
                    expression=f"{_fmt_expr(s.left)} == {_fmt_expr(s.right)}",
                    expected=render(right),
                    actual=render(left),
                    passed=left == right,
                )
            )
        elif isinstance(s, GrassmannianDecl):
            try:
                self.grassmann = GrassmannContext(s.k, s.n)
            except ValueError as exc:
                raise WorksheetRuntimeError(str(exc), s.pos)
        elif isinstance(s, UnknownDecl):
            for n in s.names:
                self.bind(n, LinExpr.unknown(n))
        elif isinstance(s, SurfaceDecl):
            self.surface_decl(s)
        elif isinstance(s, LatticeDecl):
            self.lattice_decl(s)
        elif isinstance(s, SolveBlock):
            self.solve_block(s)
        else:
            raise WorksheetRuntimeError(f"cannot execute {s!r}", s.pos)

    def bind(self, name: str, value):
        if name in self.env:
            raise ValueError(f"duplicate binding of {name!r}")
        self.env[name] = value
        self.report.bindings.append((name, render(value)))

    def surface_decl(self, s: SurfaceDecl):
        gram = {}
        for g in s.gram:
            gram[(g.a, g.b)] = self.scalar(g.expr)
        try:
            ring = SurfaceRing(s.basis, gram)
        except ValueError as exc:
            raise WorksheetRuntimeError(str(exc), s.pos)
        euler = self.scalar(s.euler)
        self.surface = _ActiveSurface(ring, euler)
        for name in s.basis:
            self.bind(name, ring.divisor(name))

    def lattice_decl(self, s: LatticeDecl):
        lat = RuledLattice([])
        self.lattices.append(lat)
        self.bind(s.name, lat)
        for item in s.items:
            if isinstance(item, BasisDecl):
                lat.basis = lat.basis + tuple(item.names)
                for n in item.names:
                    self.bind(n, lat.generator(n))
            elif isinstance(item, UnknownDecl):
                for n in item.names:
                    self.bind(n, lat.add_unknown(n))
            elif isinstance(item, GramEntry):
                try:
                    lat.set_gram(item.a, item.b, self.scalar(item.expr))
                except ValueError as exc:
                    raise WorksheetRuntimeError(str(exc), item.pos)
            elif isinstance(item, ClassDecl):
                value = self.eval(item.expr)
                if not isinstance(value, ClassExpr):
                    raise WorksheetRuntimeError(
                        f"class {item.name!r} must be a lattice class", item.pos
                    )
                self.bind(item.name, value)
            elif isinstance(item, CanonicalDecl):
                value = self.eval(item.expr)
                if not isinstance(value, ClassExpr):
                    raise WorksheetRuntimeError(
                        "canonical class must be a lattice class", item.pos
                    )
                lat.canonical = value
                self.bind("K", value)

    def solve_block(self, s: SolveBlock):
        eqs = []
        for left, right in s.constraints:
            lv = LinExpr.coerce(self.scalar_value(self.eval(left), s.pos))
            rv = LinExpr.coerce(self.scalar_value(self.eval(right), s.pos))
            eqs.append(lv - rv)
        try:
            assignment = solve_linear(eqs)
        except ValueError as exc:
            raise WorksheetRuntimeError(str(exc), s.pos)
        for name in sorted(assignment):
            value = assignment[name]
            self.env[name] = value
            self.report.bindings.append((name, render(value)))
        self.substitute_everywhere(assignment)

    def substitute_everywhere(self, assignment: dict):
        for lat in self.lattices:
            lat.substitute(assignment)
        for name, value in list(self.env.items()):
            if isinstance(value, LinExpr):
                v = value.substitute(assignment)
                self.env[name] = v.as_fraction() if v.is_constant else v
            elif isinstance(value, ClassExpr):
                self.env[name] = value.substitute(assignment)

    # -- expressions --------------------------------------------------

    def eval(self, e):
        if isinstance(e, IntLit):
            return Fraction(e.value)
        if isinstance(e, Name):
            if e.name not in self.env:
                raise WorksheetRuntimeError(f"undefined name {e.name!r}", e.pos)
            return self.env[e.name]
        if isinstance(e, SchubertLit):
            if self.grassmann is None:
                raise WorksheetRuntimeError(
                    "no grassmannian context declared before Schubert class", e.pos
                )
            try:
                return SchubertElement.sigma(self.grassmann, e.parts)
            except ValueError as exc:
                raise WorksheetRuntimeError(str(exc), e.pos)
        if isinstance(e, Neg):
            return self.binop("*", Fraction(-1), self.eval(e.operand), e.pos)
        if isinstance(e, BinOp):
            return self.binop(e.op, self.eval(e.left), self.eval(e.right), e.pos)
        if isinstance(e, FieldAccess):
            base = self.eval(e.base)
            if not isinstance(base, Record):
                raise WorksheetRuntimeError(
                    f"cannot access field {e.name!r} on {render(base)}", e.pos
                )
            try:
                return base.get(e.name)
            except KeyError:
                raise WorksheetRuntimeError(
                    f"record has no field {e.name!r}"
                    f" (has: {', '.join(base.fields)})",
                    e.pos,
                )
        if isinstance(e, Call):
            return self.call(e)
        raise WorksheetRuntimeError(f"cannot evaluate {e!r}", getattr(e, "pos", Pos(0, 0)))

    def binop(self, op, a, b, pos):
        try:
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                out = a * b
                if isinstance(out, LinExpr) and out.is_constant:
                    out = out.as_fraction()
                return out
            if op == "/":
                if isinstance(b, Fraction) and b == 0:
                    raise ZeroDivisionError("division by zero")
                return a / b
        except WorksheetRuntimeError:
            raise
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise WorksheetRuntimeError(str(exc), pos)
        raise WorksheetRuntimeError(f"unknown operator {op!r}", pos)

    def scalar(self, e):
        """Evaluate to an exact scalar or a linear expression in unknowns."""
        return self.scalar_value(self.eval(e), getattr(e, "pos", Pos(0, 0)))

    def scalar_value(self, v, pos):
        if isinstance(v, (Fraction, LinExpr)):
            return v
        raise WorksheetRuntimeError(f"expected a scalar value, got {render(v)}", pos)

    def int_arg(self, v, pos) -> int:
        if isinstance(v, Fraction) and v.denominator == 1:
            return int(v)
        raise WorksheetRuntimeError(f"expected an integer, got {render(v)}", pos)

    # -- builtin functions --------------------------------------------

    def call(self, e: Call):
        args = [self.eval(a) for a in e.args]
        args2 = [self.eval(a) for a in e.args2] if e.args2 is not None else None
        kwargs = {k: self.eval(v) for k, v in e.kwargs}
        try:
            return self.dispatch(e, args, args2, kwargs)
        except WorksheetRuntimeError:
            raise
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise WorksheetRuntimeError(f"{e.func}: {exc}", e.pos)

    def dispatch(self, e: Call, args, args2, kwargs):
        name, pos = e.func, e.pos

        def arity(k, group2=None):
            if len(args) != k or (
                group2 is None and args2 is not None
            ) or (group2 is not None and len(args2 or ()) != group2):
                raise WorksheetRuntimeError(
                    f"{name}: wrong number of arguments", pos
                )

        if name == "integrate":
            arity(1)
            if not isinstance(args[0], SchubertElement):
                raise WorksheetRuntimeError("integrate needs a Schubert class", pos)
            return integrate(args[0])
        if name == "pdeg":
            arity(2)
            if not isinstance(args[0], SchubertElement):
                raise WorksheetRuntimeError("pdeg needs a Schubert class", pos)
            out = plucker_degree(args[0], self.int_arg(args[1], pos))
            if isinstance(out, LinExpr) and out.is_constant:
                out = out.as_fraction()
            return out
        if name == "jet2_c2":
            arity(1)
            if self.surface is None:
                raise WorksheetRuntimeError("no surface declared", pos)
            if not isinstance(args[0], SurfaceClass) or not args[0].is_divisor:
                raise WorksheetRuntimeError("jet2_c2 needs a divisor class", pos)
            ring = self.surface.ring
            if "K" not in ring.basis:
                raise WorksheetRuntimeError(
                    "surface must declare a canonical divisor named K", pos
                )
            omega = cotangent_bundle(ring.divisor("K"), self.surface.euler)
            c2 = jet_chern(args[0], 2, omega).c2
            return c2.as_fraction() if c2.is_constant else c2
        if name == "tau":
            arity(4)
            return triple_point_count(*(self.scalar_value(a, pos) for a in args))
        if name == "genus":
            arity(1)
            if not isinstance(args[0], ClassExpr):
                raise WorksheetRuntimeError("genus needs a lattice class", pos)
            return adjunction_genus(args[0])
        if name == "glue_genus":
            arity(3)
            return genus_additivity(*args)
        if name == "hurwitz":
            arity(3)
            return curves.hurwitz_ramification(
                *(self.int_arg(a, pos) for a in args)
            )
        if name == "coincidences":
            arity(2)
            return curves.correspondence_coincidences(*args)
        if name == "salmon_cayley":
            arity(3, 3)
            n1, n2, n3 = (self.int_arg(a, pos) for a in args)
            i12, i13, i23 = (self.int_arg(a, pos) for a in args2)
            deg, m1, m2, m3 = curves.salmon_cayley(
                curves.TripleScrollInput(n1, n2, n3, i12, i13, i23)
            )
            return Record({"degree": deg, "m1": m1, "m2": m2, "m3": m3})
        if name == "secant_pluecker":
            arity(2)
            return curves.secant_plucker_degree(
                *(self.int_arg(a, pos) for a in args)
            )
        if name == "odd_theta":
            arity(1)
            return curves.odd_theta_count(self.int_arg(args[0], pos))
        if name == "degmult":
            arity(1)
            return curves.degeneration_multiplicity(self.int_arg(args[0], pos))
        if name == "residual":
            if len(args) != 1 or args2 is None:
                raise WorksheetRuntimeError(
                    "residual takes residual(total; part, part, ...)", pos
                )
            return curves.residual_degree(args[0], [(1, p) for p in args2])
        if name == "pluecker":
            if args or args2:
                raise WorksheetRuntimeError(
                    "pluecker takes named arguments in braces", pos
                )
            known = {
                "d",
                "m",
                "nodes",
                "cusps",
                "bitangents",
                "flexes",
                "genus",
            }
            bad = set(kwargs) - known
            if bad:
                raise WorksheetRuntimeError(
                    f"pluecker: unknown characters {sorted(bad)}", pos
                )
            # unmentioned singularities on a given side default to absent
            if "d" in kwargs:
                kwargs.setdefault("nodes", 0)
                kwargs.setdefault("cusps", 0)
            elif "m" in kwargs:
                kwargs.setdefault("bitangents", 0)
                kwargs.setdefault("flexes", 0)
            data = curves.plucker_solve(curves.PlueckerData(**kwargs))
            return Record(
                {
                    "d": data.d,
                    "m": data.m,
                    "nodes": data.nodes,
                    "cusps": data.cusps,
                    "bitangents": data.bitangents,
                    "flexes": data.flexes,
                    "genus": data.genus,
                }
            )
        raise WorksheetRuntimeError(f"unknown function {name!r}", pos)


def evaluate(program: WorksheetProgram) -> EvaluationReport:
    """Evaluate a parsed worksheet; deterministic by construction."""
    return Evaluator().run(program)
