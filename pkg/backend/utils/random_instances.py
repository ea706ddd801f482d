"""Seeded random operators and spectral parameters for reproducible corpora."""
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..models.numeric import GQ, ExtNat, INF, abs2
from ..models.operator_models import Atom, AtomKind, OperatorExpr
from ..region.predicates import Circle, Predicate, SinglePoint

UNIT_COEFFICIENTS = (GQ(1), GQ(-1), GQ(0, 1), GQ(0, -1), GQ(Fraction(3, 5), Fraction(4, 5)))
SHIFT_SCALES = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
# |b| is the radius of the boundary circle
SHIFT_COEFFICIENTS = tuple(unit * GQ(scale) for scale in SHIFT_SCALES for unit in UNIT_COEFFICIENTS)


def random_rat(rng: random.Random, bound: int = 2, denominator: int = 2) -> Fraction:
    return Fraction(rng.randint(-bound * denominator, bound * denominator), denominator)


def random_gq(rng: random.Random, bound: int = 2, denominator: int = 2) -> GQ:
    return GQ(random_rat(rng, bound, denominator), random_rat(rng, bound, denominator))


def random_mult(rng: random.Random, inf_weight: float = 0.2, max_finite: int = 2) -> ExtNat:
    if rng.random() < inf_weight:
        return INF
    return ExtNat(rng.randint(1, max_finite))


def random_atom(rng: random.Random, inf_weight: float = 0.2) -> Atom:
    kind = rng.choice(list(AtomKind))
    mult = random_mult(rng, inf_weight)
    if kind == AtomKind.DIAG:
        count = rng.randint(1, 2)
        values = []
        while len(values) < count:
            v = random_gq(rng)
            if v not in [x for x, _ in values]:
                values.append((v, random_mult(rng, inf_weight, max_finite=3)))
        return Atom(kind, mult=mult, values=tuple(values))
    return Atom(kind, random_gq(rng, bound=1), rng.choice(SHIFT_COEFFICIENTS), mult)


def random_expr(rng: random.Random, max_atoms: int = 2, inf_weight: float = 0.2) -> OperatorExpr:
    atoms = [random_atom(rng, inf_weight) for _ in range(rng.randint(1, max_atoms))]
    if not any(atom.is_infinite_dimensional for atom in atoms):
        atoms.append(Atom(AtomKind.USHIFT, random_gq(rng, bound=1), rng.choice(SHIFT_COEFFICIENTS)))
    return OperatorExpr(tuple(atoms))


def random_pair(rng: random.Random, max_atoms: int = 2,
                inf_weight: float = 0.2) -> Tuple[OperatorExpr, OperatorExpr]:
    return random_expr(rng, max_atoms, inf_weight), random_expr(rng, max_atoms, inf_weight)


def clear_of(predicates: Sequence[Predicate], lam: GQ, margin: Fraction) -> bool:
    """λ keeps distance at least ``margin`` from every circle and point."""
    m2 = margin * margin
    for p in predicates:
        if isinstance(p, SinglePoint):
            if abs2(lam - p.p) < m2:
                return False
            continue
        d2 = abs2(lam - p.center)
        # |λ−c| ≥ r + m  or  |λ−c| ≤ r − m, squared out exactly
        outer = d2 - p.r2 - m2
        inner = p.r2 + m2 - d2
        if outer >= 0 and outer * outer >= 4 * m2 * p.r2:
            continue
        if p.r2 >= m2 and inner >= 0 and inner * inner >= 4 * m2 * p.r2:
            continue
        return False
    return True


def random_lambda(rng: random.Random, predicates: Sequence[Predicate],
                  margin: Fraction = Fraction(1, 8), window: int = 4,
                  denominator: int = 16, attempts: int = 500) -> GQ:
    """A Gaussian rational in the window clear of every predicate.

    Half of the draws are taken near a predicate so bounded cells get hit.
    """
    anchors: List[GQ] = [p.center if isinstance(p, Circle) else p.p for p in predicates]
    for _ in range(attempts):
        if anchors and rng.random() < 0.5:
            base = rng.choice(anchors)
            lam = base + random_gq(rng, bound=1, denominator=denominator)
        else:
            lam = random_gq(rng, bound=window, denominator=denominator)
        if clear_of(predicates, lam, margin):
            return lam
    raise ValueError("no sample point clear of the predicates was found")


def random_lambdas(rng: random.Random, predicates: Sequence[Predicate], count: int,
                   margin: Fraction = Fraction(1, 8), window: int = 4) -> List[GQ]:
    return [random_lambda(rng, predicates, margin, window) for _ in range(count)]


def seeded(seed: Optional[int]) -> random.Random:
    return random.Random(0 if seed is None else seed)
