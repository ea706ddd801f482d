"""Turn parse trees into operator expressions; ``@path`` arguments read the expression from a file."""
import logging
from pathlib import Path
from typing import List

from ..models.numeric import ExtNat, ONE_GQ, ZERO_GQ
from ..models.operator_models import Atom, AtomKind, OperatorExpr
from ..operators.operator_model import adjoint_atom
from ..utils.errors import DslSemanticError, OperatorModelError
from .parser import AdjNode, Ast, PowerNode, ShiftNode, Span, SumNode, parse

logger = logging.getLogger(__name__)

SHIFT_KIND = {"ushift": AtomKind.USHIFT, "bshift": AtomKind.BSHIFT}


def _semantic(exc: Exception, span: Span) -> DslSemanticError:
    return DslSemanticError(str(exc), span.line, span.column)


def _power(node: PowerNode) -> Atom:
    mult = node.mult.value if node.mult is not None else ExtNat(1)
    atom = node.atom
    try:
        if isinstance(atom, ShiftNode):
            a = atom.a.value if atom.a is not None else ZERO_GQ
            b = atom.b.value if atom.b is not None else ONE_GQ
            if b.is_zero():
                raise DslSemanticError(f"{atom.kind} needs a nonzero coefficient b",
                                       atom.b.span.line, atom.b.span.column)
            return Atom(SHIFT_KIND[atom.kind], a, b, mult)
        seen = set()
        for value, _ in atom.entries:
            if value.value in seen:
                raise DslSemanticError(f"duplicate diag value {value.value}",
                                       value.span.line, value.span.column)
            seen.add(value.value)
        values = tuple((value.value, m.value) for value, m in atom.entries)
        return Atom(AtomKind.DIAG, mult=mult, values=values)
    except OperatorModelError as exc:
        raise _semantic(exc, node.mult.span if node.mult is not None else node.span) from exc


def _atoms(node: SumNode) -> List[Atom]:
    atoms: List[Atom] = []
    for term in node.terms:
        if isinstance(term, AdjNode):
            atoms.extend(adjoint_atom(atom) for atom in _atoms(term.expr))
        else:
            atoms.append(_power(term))
    return atoms


def elaborate(ast: Ast) -> OperatorExpr:
    atoms = _atoms(ast)
    try:
        return OperatorExpr(tuple(atoms))
    except OperatorModelError as exc:
        raise _semantic(exc, ast.span) from exc


def parse_expr(text: str) -> OperatorExpr:
    return elaborate(parse(text))


def load_expr(argument: str) -> OperatorExpr:
    """Inline expression, or ``@path`` to read it from a file."""
    if argument.startswith("@"):
        path = Path(argument[1:])
        logger.info("reading expression from %s", path)
        return parse_expr(path.read_text(encoding="utf-8"))
    return parse_expr(argument)
