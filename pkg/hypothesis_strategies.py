"""Shared hypothesis strategies for the property suites."""
from fractions import Fraction

from hypothesis import strategies as st

from backend.models.numeric import GQ, ExtNat, INF
from backend.models.operator_models import Atom, AtomKind, OperatorExpr
from backend.region.region_ops import circle, closed_disk, complement, intersect, open_disk, points, union
from backend.utils.random_instances import SHIFT_COEFFICIENTS


def rats(bound: int = 4, max_denominator: int = 4):
    return st.builds(Fraction, st.integers(-bound * max_denominator, bound * max_denominator),
                     st.integers(1, max_denominator))


def gqs(bound: int = 2, max_denominator: int = 4):
    return st.builds(GQ, rats(bound, max_denominator), rats(bound, max_denominator))


def extnats(max_value: int = 5):
    return st.one_of(st.integers(0, max_value).map(ExtNat), st.just(INF))


def mults():
    return st.one_of(st.integers(1, 3).map(ExtNat), st.just(INF))


@st.composite
def shift_atoms(draw):
    kind = draw(st.sampled_from([AtomKind.USHIFT, AtomKind.USHIFT_ADJ, AtomKind.BSHIFT]))
    return Atom(kind, draw(gqs(1, 2)), draw(st.sampled_from(SHIFT_COEFFICIENTS)), draw(mults()))


@st.composite
def diag_atoms(draw):
    values = draw(st.lists(gqs(2, 2), min_size=1, max_size=3, unique=True))
    return Atom(AtomKind.DIAG, mult=draw(mults()),
                values=tuple((v, draw(mults())) for v in values))


@st.composite
def exprs(draw, max_atoms: int = 3):
    atoms = draw(st.lists(st.one_of(shift_atoms(), diag_atoms()), min_size=1, max_size=max_atoms))
    if not any(atom.is_infinite_dimensional for atom in atoms):
        atoms.append(draw(shift_atoms()))
    return OperatorExpr(tuple(atoms))


def basic_regions():
    """Disks, circles and points with small Gaussian-rational data."""
    centers = gqs(1, 2)
    radii = st.sampled_from([Fraction(1), Fraction(1, 4), Fraction(9, 4)])
    return st.one_of(
        st.builds(closed_disk, centers, radii),
        st.builds(open_disk, centers, radii),
        st.builds(circle, centers, radii),
        st.builds(lambda z: points(z), centers),
    )


def regions(max_leaves: int = 4):
    return st.recursive(
        basic_regions(),
        lambda children: st.one_of(
            st.builds(union, children, children),
            st.builds(intersect, children, children),
            st.builds(complement, children),
        ),
        max_leaves=max_leaves,
    )
