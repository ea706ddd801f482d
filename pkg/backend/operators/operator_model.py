"""Adjoint, pointwise Fredholm data and kernel/cokernel bases of operator expressions."""
import logging
from itertools import count, cycle, islice
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from ..models.numeric import GQ, ExtInt, ExtNat, ZERO, abs2, extint_sub, extnat_add, extnat_scale
from ..models.operator_models import (
    INVERTIBLE, Atom, AtomKind, BasisAddress, BasisProfile, OperatorExpr, PointData,
)
from ..region.predicates import (
    INSIDE, ON, Circle, Evaluator, Predicate, SinglePoint, canonical_predicates,
)
from ..region.region_ops import PointEvaluator
from ..utils.errors import BasisError

logger = logging.getLogger(__name__)


def adjoint_atom(atom: Atom) -> Atom:
    if atom.kind == AtomKind.DIAG:
        return Atom(AtomKind.DIAG, mult=atom.mult,
                    values=tuple((v.conj(), m) for v, m in atom.values))
    kind = {AtomKind.USHIFT: AtomKind.USHIFT_ADJ,
            AtomKind.USHIFT_ADJ: AtomKind.USHIFT,
            AtomKind.BSHIFT: AtomKind.BSHIFT}[atom.kind]
    # conj(a) + conj(b)·U* is unitarily a bilateral shift again
    return Atom(kind, atom.a.conj(), atom.b.conj(), atom.mult)


def normalize(expr: OperatorExpr) -> OperatorExpr:
    if not expr.adjoint_pending:
        return expr
    return OperatorExpr(tuple(adjoint_atom(a) for a in expr.atoms))


def adjoint(expr: OperatorExpr) -> OperatorExpr:
    return OperatorExpr(tuple(adjoint_atom(a) for a in normalize(expr).atoms))


# -------------------------------------------------------------- point data


def shift_circle(atom: Atom) -> Circle:
    """|λ − a|² = |b|², where |μ| = 1 for μ = (λ − a)/b."""
    return Circle(atom.a, abs2(atom.b))


def _unit_model(kind: AtomKind, status: int) -> PointData:
    if kind == AtomKind.BSHIFT:
        return PointData(ZERO, ZERO, False) if status == ON else INVERTIBLE
    if status == INSIDE:
        data = PointData(ZERO, ExtNat(1), True)
    elif status == ON:
        data = PointData(ZERO, ZERO, False)
    else:
        data = INVERTIBLE
    return data.swapped() if kind == AtomKind.USHIFT_ADJ else data


def atom_point_data_in(atom: Atom, env: Evaluator) -> PointData:
    """PointData of one copy of ``atom − λ``, with λ described by ``env``."""
    if atom.is_shift:
        return _unit_model(atom.kind, env.circle(shift_circle(atom)))
    for value, m in atom.values:
        if env.point(SinglePoint(value)):
            return PointData(m, m, True)
    return INVERTIBLE


def atom_point_data(atom: Atom, lam: GQ) -> PointData:
    return atom_point_data_in(atom, PointEvaluator(GQ.of(lam)))


def point_data_in(expr: OperatorExpr, env: Evaluator) -> PointData:
    alpha, beta_bar, closed = ZERO, ZERO, True
    for atom in normalize(expr).atoms:
        data = atom_point_data_in(atom, env)
        alpha = extnat_add(alpha, extnat_scale(atom.mult, data.alpha))
        beta_bar = extnat_add(beta_bar, extnat_scale(atom.mult, data.beta_bar))
        closed = closed and data.closed
    return PointData(alpha, beta_bar, closed)


def point_data(expr: OperatorExpr, lam: GQ) -> PointData:
    return point_data_in(expr, PointEvaluator(GQ.of(lam)))


def index(expr: OperatorExpr, lam: GQ) -> ExtInt:
    data = point_data(expr, lam)
    return extint_sub(data.alpha, data.beta_alg)


def boundary_predicates(expr: OperatorExpr) -> Tuple[Predicate, ...]:
    preds: List[Predicate] = []
    for atom in normalize(expr).atoms:
        if atom.is_shift:
            preds.append(shift_circle(atom))
        else:
            preds.extend(SinglePoint(v) for v, _ in atom.values)
    return canonical_predicates(preds)


# ------------------------------------------------------------------ bases


def diag_coordinate(atom: Atom, value_index: int, k: int) -> int:
    """Coordinate of the k-th basis vector of eigenvalue ``value_index`` within one copy.

    Finite eigenspaces come first, contiguous and in list order; infinite
    eigenspaces follow, interleaved.
    """
    finite = [(i, m.value) for i, (_, m) in enumerate(atom.values) if m.is_finite]
    infinite = [i for i, (_, m) in enumerate(atom.values) if m.is_inf]
    offset = 0
    for i, m in finite:
        if i == value_index:
            return offset + k
        offset += m
    return offset + k * len(infinite) + infinite.index(value_index)


def _copy_vectors(atom: Atom, atom_index: int, lam: GQ,
                  cokernel: bool) -> Tuple[ExtNat, Callable[[int, int], BasisAddress]]:
    """Per-copy dimension of the kernel (or cokernel) and an address maker."""
    if atom.is_shift:
        mu = (lam - atom.a) / atom.b
        status = shift_circle(atom).status(lam)
        if status == ON:
            raise BasisError(f"{atom.kind.value} atom has non-closed range at λ={lam}")
        has_vector = status == INSIDE and (
            (atom.kind == AtomKind.USHIFT and cokernel) or
            (atom.kind == AtomKind.USHIFT_ADJ and not cokernel))
        if not has_vector:
            return ZERO, lambda c, k: None
        ratio = mu.conj() if cokernel else mu
        if ratio.is_zero():
            return ExtNat(1), lambda c, k: BasisAddress(atom_index, c, 0)
        return ExtNat(1), lambda c, k: BasisAddress(
            atom_index, c, 0, BasisProfile.GEOMETRIC, ratio)
    for i, (value, m) in enumerate(atom.values):
        if value == lam:
            return m, lambda c, k, i=i: BasisAddress(atom_index, c, diag_coordinate(atom, i, k))
    return ZERO, lambda c, k: None


def _pairs(copies: ExtNat, per_copy: ExtNat) -> Iterator[Tuple[int, int]]:
    """(copy, k) enumeration: nested when finite, diagonal when both infinite."""
    if copies.is_finite and per_copy.is_finite:
        for c in range(copies.value):
            for k in range(per_copy.value):
                yield c, k
    elif per_copy.is_finite:
        for c in count():
            for k in range(per_copy.value):
                yield c, k
    elif copies.is_finite:
        for k in count():
            for c in range(copies.value):
                yield c, k
    else:
        for s in count():
            for c in range(s + 1):
                yield c, s - c


def roundrobin(*iterables: Iterable) -> Iterator:
    """roundrobin('ABC', 'D', 'EF') --> A D E B F C"""
    num_active = len(iterables)
    nexts = cycle(iter(it).__next__ for it in iterables)
    while num_active:
        try:
            for nxt in nexts:
                yield nxt()
        except StopIteration:
            num_active -= 1
            nexts = cycle(islice(nexts, num_active))


def _basis(expr: OperatorExpr, lam: GQ, cokernel: bool) -> Iterator[BasisAddress]:
    expr = normalize(expr)
    lam = GQ.of(lam)
    streams = []
    for n, atom in enumerate(expr.atoms):
        per_copy, make = _copy_vectors(atom, n, lam, cokernel)
        if per_copy == ZERO:
            continue
        streams.append(_atom_stream(make, atom.mult, per_copy))
    return roundrobin(*streams)


def _atom_stream(make: Callable[[int, int], BasisAddress], copies: ExtNat,
                 per_copy: ExtNat) -> Iterator[BasisAddress]:
    for c, k in _pairs(copies, per_copy):
        yield make(c, k)


def kernel_basis(expr: OperatorExpr, lam: GQ) -> Iterator[BasisAddress]:
    """Orthonormal basis addresses of N(expr − λ); infinite streams never end."""
    return _basis(expr, lam, cokernel=False)


def cokernel_basis(expr: OperatorExpr, lam: GQ) -> Iterator[BasisAddress]:
    """Orthonormal basis addresses of R(expr − λ)^⊥."""
    return _basis(expr, lam, cokernel=True)


def take(stream: Iterator[BasisAddress], n: Optional[int]) -> List[BasisAddress]:
    return list(stream if n is None else islice(stream, n))
