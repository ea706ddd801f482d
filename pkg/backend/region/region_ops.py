"""Region algebra: exact membership, set operations and topology on cells."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, BinaryIO, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..config import RegionConfig
from ..models.numeric import GQ
from ..utils.errors import RegionError
from .arrangement import Arrangement, Cell, CellKey, build_arrangement
from .predicates import (
    FALSE, TRUE, AtPoint, CellTest, Circle, Evaluator, Formula, InDisk, OnCircle,
    Predicate, SinglePoint, canonical_predicates, cell_key_to_json, conj, disj,
    formula_from_json, formula_to_json, neg, predicate_from_json, sign_literals,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegionExpr:
    """Exact subset of the plane given by a boolean formula over predicates."""
    formula: Formula

    def predicates(self) -> Tuple[Predicate, ...]:
        return self.formula.predicates()

    def member(self, z: GQ) -> bool:
        return member(self, z)

    def __or__(self, other: "RegionExpr") -> "RegionExpr":
        return union(self, other)

    def __and__(self, other: "RegionExpr") -> "RegionExpr":
        return intersect(self, other)

    def __sub__(self, other: "RegionExpr") -> "RegionExpr":
        return difference(self, other)

    def __invert__(self) -> "RegionExpr":
        return complement(self)

    def to_json(self) -> Dict[str, Any]:
        preds = list(self.predicates())
        return {"predicates": [p.to_json() for p in preds],
                "formula": formula_to_json(self.formula, preds.index)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "RegionExpr":
        preds = [predicate_from_json(p) for p in data.get("predicates", [])]
        return cls(formula_from_json(data["formula"], preds))


EMPTY = RegionExpr(FALSE)
PLANE = RegionExpr(TRUE)


def closed_disk(center: GQ, r2) -> RegionExpr:
    c = Circle(center, Fraction(r2))
    return RegionExpr(disj(InDisk(c), OnCircle(c)))


def open_disk(center: GQ, r2) -> RegionExpr:
    return RegionExpr(InDisk(Circle(center, Fraction(r2))))


def circle(center: GQ, r2) -> RegionExpr:
    return RegionExpr(OnCircle(Circle(center, Fraction(r2))))


def points(*zs: GQ) -> RegionExpr:
    return RegionExpr(disj(*(AtPoint(SinglePoint(z)) for z in zs)))


# ------------------------------------------------------------- membership


class PointEvaluator(Evaluator):
    def __init__(self, z: GQ):
        self.z = z

    def circle(self, c: Circle) -> int:
        return c.status(self.z)

    def point(self, p: SinglePoint) -> bool:
        return p.p == self.z

    def cell(self, test: CellTest) -> bool:
        return build_arrangement(test.arrangement).locate(self.z) == test.cell


class CellEvaluator(Evaluator):
    """Evaluates atomic tests on a whole cell of an arrangement containing them."""

    def __init__(self, arrangement: Arrangement, cell: Cell):
        self.arrangement = arrangement
        self.cell_ = cell

    def circle(self, c: Circle) -> int:
        return self.cell_.signs[self.arrangement.circle_index[c]]

    def point(self, p: SinglePoint) -> bool:
        return self.cell_.at[self.arrangement.point_index[p]]

    def cell(self, test: CellTest) -> bool:
        if test.arrangement == self.arrangement.predicates:
            return test.cell == self.cell_.key
        sub = build_arrangement(test.arrangement)
        return self.arrangement.map_cell(self.cell_, sub) == test.cell


def member(r: RegionExpr, z: GQ) -> bool:
    return r.formula.evaluate(PointEvaluator(GQ.of(z)))


def union(r1: RegionExpr, r2: RegionExpr) -> RegionExpr:
    return RegionExpr(disj(r1.formula, r2.formula))


def intersect(r1: RegionExpr, r2: RegionExpr) -> RegionExpr:
    return RegionExpr(conj(r1.formula, r2.formula))


def complement(r: RegionExpr) -> RegionExpr:
    return RegionExpr(neg(r.formula))


def difference(r1: RegionExpr, r2: RegionExpr) -> RegionExpr:
    return RegionExpr(conj(r1.formula, neg(r2.formula)))


def union_all(regions: Sequence[RegionExpr]) -> RegionExpr:
    return RegionExpr(disj(*(r.formula for r in regions)))


# ------------------------------------------------------------------ cells


@dataclass
class CellDecomp:
    arrangement: Arrangement
    regions: List[RegionExpr]
    labels: Dict[CellKey, Tuple[bool, ...]] = field(default_factory=dict)

    @property
    def cells(self) -> List[Cell]:
        return self.arrangement.cells

    def count(self, kind: str) -> int:
        return sum(1 for c in self.cells if c.kind == kind)

    def label(self, cell: Cell, which: int = 0) -> bool:
        return self.labels[cell.key][which]

    def to_json(self) -> Dict[str, Any]:
        data = self.arrangement.to_json()
        data["labels"] = [{"cell": cell_key_to_json(c.key), "in": list(self.labels[c.key])}
                          for c in self.cells]
        data["adjacency"] = [[cell_key_to_json(a), cell_key_to_json(b)]
                             for a, b in self.arrangement.adjacency()]
        return data


def _label(arrangement: Arrangement, cell: Cell, r: RegionExpr) -> bool:
    return r.formula.evaluate(CellEvaluator(arrangement, cell))


def cells(regions: Sequence[RegionExpr], config: Optional[RegionConfig] = None) -> CellDecomp:
    preds = canonical_predicates(p for r in regions for p in r.predicates())
    arrangement = build_arrangement(preds, config)
    decomp = CellDecomp(arrangement, list(regions))
    for cell in arrangement.cells:
        decomp.labels[cell.key] = tuple(_label(arrangement, cell, r) for r in regions)
    logger.debug("labelled %d cells for %d regions", len(arrangement.cells), len(regions))
    return decomp


def equals(r1: RegionExpr, r2: RegionExpr, config: Optional[RegionConfig] = None) -> bool:
    decomp = cells([r1, r2], config)
    return all(a == b for a, b in decomp.labels.values())


def is_empty(r: RegionExpr, config: Optional[RegionConfig] = None) -> bool:
    decomp = cells([r], config)
    return not any(label[0] for label in decomp.labels.values())


def is_subset(r1: RegionExpr, r2: RegionExpr, config: Optional[RegionConfig] = None) -> bool:
    return is_empty(difference(r1, r2), config)


def interior_is_empty(r: RegionExpr, config: Optional[RegionConfig] = None) -> bool:
    decomp = cells([r], config)
    return not any(decomp.label(c) for c in decomp.cells if c.kind == "face")


def is_bounded(r: RegionExpr, config: Optional[RegionConfig] = None) -> bool:
    decomp = cells([r], config)
    arrangement = decomp.arrangement
    return not decomp.labels[("face", arrangement.unbounded_face)][0]


# --------------------------------------------------------------- topology


def _cell_components(decomp: CellDecomp, inside: bool) -> List[List[Cell]]:
    graph = nx.Graph()
    chosen = {c.key: c for c in decomp.cells if decomp.label(c) == inside}
    graph.add_nodes_from(chosen)
    graph.add_edges_from((a, b) for a, b in decomp.arrangement.adjacency()
                         if a in chosen and b in chosen)
    order = {c.key: n for n, c in enumerate(decomp.cells)}
    groups = [sorted(comp, key=order.__getitem__) for comp in nx.connected_components(graph)]
    groups.sort(key=lambda g: order[g[0]])
    return [[chosen[k] for k in g] for g in groups]


def _cells_formula(arrangement: Arrangement, group: List[Cell]) -> Formula:
    """Formula true exactly on the cells of ``group``."""
    members = {c.key for c in group}
    classes: Dict[Tuple, List[Cell]] = {}
    for c in arrangement.cells:
        classes.setdefault((c.signs, c.at), []).append(c)
    parts: List[Formula] = []
    done = set()
    for c in group:
        cls = (c.signs, c.at)
        if cls in done:
            continue
        if all(other.key in members for other in classes[cls]):
            parts.append(sign_literals(arrangement.circles, c.signs, arrangement.points, c.at))
            done.add(cls)
        else:
            parts.append(CellTest(arrangement.predicates, c.key))
    return disj(*parts)


def components(r: RegionExpr, config: Optional[RegionConfig] = None) -> List[RegionExpr]:
    decomp = cells([r], config)
    return [RegionExpr(_cells_formula(decomp.arrangement, g))
            for g in _cell_components(decomp, True)]


def holes(r: RegionExpr, config: Optional[RegionConfig] = None) -> RegionExpr:
    return union_all(_hole_components(r, config))


def _hole_components(r: RegionExpr, config: Optional[RegionConfig]) -> List[RegionExpr]:
    decomp = cells([r], config)
    unbounded = ("face", decomp.arrangement.unbounded_face)
    found = []
    for group in _cell_components(decomp, False):
        if any(c.key == unbounded for c in group):
            continue
        found.append(RegionExpr(_cells_formula(decomp.arrangement, group)))
    logger.debug("%d holes", len(found))
    return found


@dataclass(frozen=True)
class Hull:
    """η(K): the region together with the holes it fills."""
    region: RegionExpr
    holes: Tuple[RegionExpr, ...]


def hull(r: RegionExpr, config: Optional[RegionConfig] = None) -> Hull:
    if not is_bounded(r, config):
        raise RegionError("polynomially-convex hull of an unbounded region")
    filled = tuple(_hole_components(r, config))
    return Hull(union_all([r, *filled]), filled)


def eta(r: RegionExpr, config: Optional[RegionConfig] = None) -> RegionExpr:
    return hull(r, config).region


# ------------------------------------------------------------------- grid


def sample_grid(r: RegionExpr, window: Tuple[GQ, GQ], n: int) -> np.ndarray:
    """n×n membership grid; row 0 is the top edge of the window."""
    if n < 1:
        raise RegionError("grid size must be at least 1")
    lower, upper = window
    if lower.re > upper.re or lower.im > upper.im:
        raise RegionError("window corners must be (lower-left, upper-right)")
    if n == 1:
        xs = [(lower.re + upper.re) / 2]
        ys = [(lower.im + upper.im) / 2]
    else:
        xs = [lower.re + (upper.re - lower.re) * Fraction(i, n - 1) for i in range(n)]
        ys = [upper.im - (upper.im - lower.im) * Fraction(i, n - 1) for i in range(n)]
    grid = np.zeros((n, n), dtype=bool)
    for row, y in enumerate(ys):
        for col, x in enumerate(xs):
            grid[row, col] = member(r, GQ(x, y))
    return grid


def grid_to_pgm(grid: np.ndarray) -> bytes:
    height, width = grid.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + (np.asarray(grid, dtype=np.uint8) * 255).astype(np.uint8).tobytes()


def write_pgm(grid: np.ndarray, out: BinaryIO) -> None:
    out.write(grid_to_pgm(grid))
