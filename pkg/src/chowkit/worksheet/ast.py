"""AST for the worksheet language, with canonical pretty printing.

Node equality is structural and ignores source positions, so
parse(pretty_print(p)) == p is a meaningful round-trip law.
"""

from __future__ import annotations

from dataclasses import dataclass, field

#: Names callable in worksheet expressions.
BUILTINS = frozenset(
    {
        "integrate",
        "pdeg",
        "jet2_c2",
        "tau",
        "genus",
        "hurwitz",
        "coincidences",
        "salmon_cayley",
        "secant_pluecker",
        "odd_theta",
        "degmult",
        "residual",
        "pluecker",
        "glue_genus",
    }
)


@dataclass(frozen=True)
class Pos:
    line: int
    col: int

    def __str__(self):
        return f"line {self.line}, column {self.col}"


def _pos_field():
    return field(default=Pos(0, 0), compare=False, repr=False)


# --- expressions -----------------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class Name:
    name: str
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class SchubertLit:
    parts: tuple
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    args2: tuple | None = None  # the group after ';', when present
    kwargs: tuple = ()  # ((name, expr), ...) for brace calls
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class FieldAccess:
    base: object
    name: str
    pos: Pos = _pos_field()


# --- statements ------------------------------------------------------------


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class Input:
    name: str
    expr: object
    citation: str
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class Assert:
    left: object
    right: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class GrassmannianDecl:
    k: int
    n: int
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class UnknownDecl:
    names: tuple
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class GramEntry:
    a: str
    b: str
    expr: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class SurfaceDecl:
    basis: tuple
    gram: tuple  # of GramEntry
    euler: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class ClassDecl:
    name: str
    expr: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class CanonicalDecl:
    expr: object
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class LatticeDecl:
    name: str
    items: tuple  # BasisDecl-like: ("basis", names) via dedicated nodes below
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class BasisDecl:
    names: tuple
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class SolveBlock:
    constraints: tuple  # of (left, right) expression pairs
    pos: Pos = _pos_field()


@dataclass(frozen=True)
class WorksheetProgram:
    statements: tuple
    pos: Pos = _pos_field()


# --- pretty printing -------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _fmt_expr(e, parent_prec=0, right_side=False):
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, Name):
        return e.name
    if isinstance(e, SchubertLit):
        return f"s[{','.join(map(str, e.parts))}]"
    if isinstance(e, FieldAccess):
        return f"{_fmt_expr(e.base, 3)}.{e.name}"
    if isinstance(e, Neg):
        inner = _fmt_expr(e.operand, 3)
        out = f"-{inner}"
        return f"({out})" if parent_prec >= 2 or right_side else out
    if isinstance(e, Call):
        if e.kwargs:
            inner = ", ".join(f"{k}={_fmt_expr(v)}" for k, v in e.kwargs)
            return f"{e.func}{{{inner}}}"
        inner = ", ".join(_fmt_expr(a) for a in e.args)
        if e.args2 is not None:
            inner += "; " + ", ".join(_fmt_expr(a) for a in e.args2)
        return f"{e.func}({inner})"
    if isinstance(e, BinOp):
        prec = _PREC[e.op]
        left = _fmt_expr(e.left, prec, right_side=False)
        right = _fmt_expr(e.right, prec, right_side=True)
        out = f"{left} {e.op} {right}"
        if prec < parent_prec or (prec == parent_prec and right_side):
            out = f"({out})"
        return out
    raise TypeError(f"not an expression node: {e!r}")


def _fmt_stmt(s):
    if isinstance(s, Let):
        return f"let {s.name} = {_fmt_expr(s.expr)}"
    if isinstance(s, Input):
        return f'input {s.name} = {_fmt_expr(s.expr)} from "{s.citation}"'
    if isinstance(s, Assert):
        return f"assert {_fmt_expr(s.left)} == {_fmt_expr(s.right)}"
    if isinstance(s, GrassmannianDecl):
        return f"grassmannian ({s.k}, {s.n})"
    if isinstance(s, UnknownDecl):
        return f"unknown {', '.join(s.names)}"
    if isinstance(s, SurfaceDecl):
        gram = ", ".join(f"{g.a}.{g.b} = {_fmt_expr(g.expr)}" for g in s.gram)
        return (
            f"surface {{ {', '.join(s.basis)}; {gram}; euler = {_fmt_expr(s.euler)} }}"
        )
    if isinstance(s, LatticeDecl):
        bits = []
        for item in s.items:
            if isinstance(item, BasisDecl):
                bits.append(f"basis {', '.join(item.names)}")
            elif isinstance(item, UnknownDecl):
                bits.append(f"unknown {', '.join(item.names)}")
            elif isinstance(item, GramEntry):
                bits.append(f"{item.a}.{item.b} = {_fmt_expr(item.expr)}")
            elif isinstance(item, ClassDecl):
                bits.append(f"class {item.name} = {_fmt_expr(item.expr)}")
            elif isinstance(item, CanonicalDecl):
                bits.append(f"canonical = {_fmt_expr(item.expr)}")
            else:
                raise TypeError(f"bad lattice item {item!r}")
        return f"lattice {s.name} {{ {'; '.join(bits)} }}"
    if isinstance(s, SolveBlock):
        cs = "; ".join(f"{_fmt_expr(a)} == {_fmt_expr(b)}" for a, b in s.constraints)
        return f"solve {{ {cs} }}"
    raise TypeError(f"not a statement node: {s!r}")


def pretty_print(p: WorksheetProgram) -> str:
    return "\n".join(_fmt_stmt(s) for s in p.statements) + "\n"
