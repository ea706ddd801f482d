"""Symbolic operators on separable Hilbert space and their pointwise Fredholm data."""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from .numeric import GQ, ExtNat, INF, ONE_GQ, ZERO, ZERO_GQ, extnat_add
from ..utils.errors import OperatorModelError


class AtomKind(str, Enum):
    USHIFT = "ushift"
    USHIFT_ADJ = "ushift_adj"
    BSHIFT = "bshift"
    DIAG = "diag"


SHIFT_KINDS = (AtomKind.USHIFT, AtomKind.USHIFT_ADJ, AtomKind.BSHIFT)


@dataclass(frozen=True)
class Atom:
    """a·I + b·K for a shift kind K, or a diagonal with finitely many eigenvalues.

    ``mult`` counts orthogonal copies of the atom.
    """
    kind: AtomKind
    a: GQ = ZERO_GQ
    b: GQ = ONE_GQ
    mult: ExtNat = ExtNat(1)
    values: Tuple[Tuple[GQ, ExtNat], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", AtomKind(self.kind))
        object.__setattr__(self, "values", tuple((GQ.of(v), m) for v, m in self.values))
        if self.mult == ZERO:
            raise OperatorModelError("atom multiplicity must be at least 1")
        if self.kind in SHIFT_KINDS:
            if self.b.is_zero():
                raise OperatorModelError(f"{self.kind.value} atom needs a nonzero coefficient b")
            if self.values:
                raise OperatorModelError("shift atoms carry no eigenvalue list")
        else:
            if not self.values:
                raise OperatorModelError("diag atom needs at least one eigenvalue")
            seen = set()
            for value, m in self.values:
                if m == ZERO:
                    raise OperatorModelError(f"eigenvalue {value} has multiplicity 0")
                if value in seen:
                    raise OperatorModelError(f"duplicate diag value {value}")
                seen.add(value)
            # diag atoms have no affine part
            object.__setattr__(self, "a", ZERO_GQ)
            object.__setattr__(self, "b", ONE_GQ)

    @property
    def is_shift(self) -> bool:
        return self.kind in SHIFT_KINDS

    @property
    def copy_dimension(self) -> ExtNat:
        if self.is_shift:
            return INF
        total = ZERO
        for _, m in self.values:
            total = extnat_add(total, m)
        return total

    @property
    def is_infinite_dimensional(self) -> bool:
        return self.copy_dimension.is_inf or self.mult.is_inf

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value, "mult": self.mult.to_json()}
        if self.is_shift:
            data["a"] = self.a.to_json()
            data["b"] = self.b.to_json()
        else:
            data["values"] = [[v.to_json(), m.to_json()] for v, m in self.values]
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Atom":
        kind = AtomKind(data["kind"])
        mult = ExtNat.from_json(data.get("mult", "1"))
        if kind == AtomKind.DIAG:
            values = tuple((GQ.from_json(v), ExtNat.from_json(m)) for v, m in data["values"])
            return cls(kind, mult=mult, values=values)
        a = GQ.from_json(data["a"]) if "a" in data else ZERO_GQ
        b = GQ.from_json(data["b"]) if "b" in data else ONE_GQ
        return cls(kind, a, b, mult)


@dataclass(frozen=True)
class OperatorExpr:
    """Orthogonal direct sum of atoms; ``adjoint_pending`` is resolved by normalize."""
    atoms: Tuple[Atom, ...]
    adjoint_pending: bool = False

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.atoms:
            raise OperatorModelError("operator expression needs at least one atom")
        if not any(atom.is_infinite_dimensional for atom in self.atoms):
            raise OperatorModelError("operator expression acts on a finite-dimensional space")

    @classmethod
    def of(cls, *atoms: Atom) -> "OperatorExpr":
        return cls(tuple(atoms))

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"atoms": [atom.to_json() for atom in self.atoms]}
        if self.adjoint_pending:
            data["adjoint"] = True
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "OperatorExpr":
        return cls(tuple(Atom.from_json(a) for a in data["atoms"]),
                   bool(data.get("adjoint", False)))


def direct_sum(*exprs: OperatorExpr) -> OperatorExpr:
    """Concatenate atom lists; pending adjoints must be normalized first."""
    atoms = []
    for expr in exprs:
        if expr.adjoint_pending:
            raise OperatorModelError("normalize expressions before forming direct sums")
        atoms.extend(expr.atoms)
    return OperatorExpr(tuple(atoms))


@dataclass(frozen=True)
class PointData:
    """(α, β̄ = dim R(T−λ)^⊥, closed range) of T−λ."""
    alpha: ExtNat
    beta_bar: ExtNat
    closed: bool

    @property
    def beta_alg(self) -> ExtNat:
        return self.beta_bar if self.closed else INF

    def swapped(self) -> "PointData":
        return PointData(self.beta_bar, self.alpha, self.closed)

    def to_json(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha.to_json(),
            "beta_bar": self.beta_bar.to_json(),
            "beta_alg": self.beta_alg.to_json(),
            "closed": self.closed,
        }


INVERTIBLE = PointData(ZERO, ZERO, True)


class BasisProfile(str, Enum):
    STANDARD = "standard"
    GEOMETRIC = "geometric"


@dataclass(frozen=True)
class BasisAddress:
    """Orthonormal basis vector inside one copy of one atom.

    Standard vectors are e_coord. Geometric vectors are the normalized
    (1, μ, μ², …) starting at coordinate 0.
    """
    atom_index: int
    copy_index: int
    coord: int = 0
    profile: BasisProfile = BasisProfile.STANDARD
    ratio: Optional[GQ] = None

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "atom": self.atom_index,
            "copy": self.copy_index,
            "coord": self.coord,
            "profile": self.profile.value,
        }
        if self.ratio is not None:
            data["ratio"] = self.ratio.to_json()
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "BasisAddress":
        ratio = GQ.from_json(data["ratio"]) if data.get("ratio") is not None else None
        return cls(int(data["atom"]), int(data["copy"]), int(data.get("coord", 0)),
                   BasisProfile(data.get("profile", "standard")), ratio)

    def __str__(self) -> str:
        if self.profile == BasisProfile.GEOMETRIC:
            return f"({self.atom_index},{self.copy_index},geometric({self.ratio}))"
        return f"({self.atom_index},{self.copy_index},e{self.coord})"
