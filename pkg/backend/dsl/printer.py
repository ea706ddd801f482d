from ..models.numeric import GQ, ExtNat
from ..models.operator_models import Atom, AtomKind, OperatorExpr
from ..operators.operator_model import adjoint_atom, normalize


def print_gq(z: GQ) -> str:
    return str(z)


def print_mult(m: ExtNat) -> str:
    return m.to_json()


def _shift(atom: Atom) -> str:
    name = "bshift" if atom.kind == AtomKind.BSHIFT else "ushift"
    if atom.a.is_zero() and atom.b == GQ(1):
        return name
    return f"{name}({print_gq(atom.a)}, {print_gq(atom.b)})"


def print_atom(atom: Atom) -> str:
    """DSL text for one atom; S* copies print through adj(...)."""
    suffix = "" if atom.mult == ExtNat(1) else f"^{print_mult(atom.mult)}"
    if atom.kind == AtomKind.USHIFT_ADJ:
        return f"adj({_shift(adjoint_atom(atom))}{suffix})"
    if atom.kind == AtomKind.DIAG:
        entries = ", ".join(f"{print_gq(v)}:{print_mult(m)}" for v, m in atom.values)
        return f"diag{{{entries}}}{suffix}"
    return _shift(atom) + suffix


def print_expr(expr: OperatorExpr) -> str:
    return " (+) ".join(print_atom(atom) for atom in normalize(expr).atoms)
