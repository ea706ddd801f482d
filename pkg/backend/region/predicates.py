"""Boundary predicates and the boolean formulas built over them."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Tuple, Union

from ..models.numeric import GQ, abs2, parse_rat, rat_to_str
from ..utils.errors import RegionError

INSIDE, ON, OUTSIDE = -1, 0, 1


@dataclass(frozen=True)
class Circle:
    """|λ − center|² = r2."""
    center: GQ
    r2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r2", Fraction(self.r2))
        if self.r2 <= 0:
            raise RegionError("circle predicate needs r2 > 0")

    def status(self, z: GQ) -> int:
        d = abs2(z - self.center) - self.r2
        return (d > 0) - (d < 0)

    def sort_key(self) -> Tuple:
        return (0, self.center.re, self.center.im, self.r2)

    def to_json(self) -> Dict[str, Any]:
        return {"type": "circle", "center": self.center.to_json(), "r2": rat_to_str(self.r2)}

    def __str__(self) -> str:
        return f"|λ-({self.center})|²={rat_to_str(self.r2)}"


@dataclass(frozen=True)
class SinglePoint:
    p: GQ

    def sort_key(self) -> Tuple:
        return (1, self.p.re, self.p.im, Fraction(0))

    def to_json(self) -> Dict[str, Any]:
        return {"type": "point", "p": self.p.to_json()}

    def __str__(self) -> str:
        return f"λ={self.p}"


Predicate = Union[Circle, SinglePoint]


def predicate_from_json(data: Dict[str, Any]) -> Predicate:
    if data["type"] == "circle":
        return Circle(GQ.from_json(data["center"]), parse_rat(str(data["r2"])))
    if data["type"] == "point":
        return SinglePoint(GQ.from_json(data["p"]))
    raise RegionError(f"unknown predicate type {data['type']!r}")


def canonical_predicates(preds: Iterable[Predicate]) -> Tuple[Predicate, ...]:
    return tuple(sorted(set(preds), key=lambda p: p.sort_key()))


# ---------------------------------------------------------------- formulas


class Formula:
    """Boolean formula over atomic tests; evaluated against an Evaluator."""

    def predicates(self) -> Tuple[Predicate, ...]:
        out: List[Predicate] = []
        self._collect(out)
        return canonical_predicates(out)

    def _collect(self, out: List[Predicate]) -> None:
        pass

    def evaluate(self, env: "Evaluator") -> bool:
        raise NotImplementedError


class Evaluator:
    """Answers atomic tests for one point or one cell."""

    def circle(self, c: Circle) -> int:
        raise NotImplementedError

    def point(self, p: SinglePoint) -> bool:
        raise NotImplementedError

    def cell(self, test: "CellTest") -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def evaluate(self, env: Evaluator) -> bool:
        return self.value


@dataclass(frozen=True)
class InDisk(Formula):
    """|λ − c|² < r2."""
    circle: Circle

    def _collect(self, out):
        out.append(self.circle)

    def evaluate(self, env: Evaluator) -> bool:
        return env.circle(self.circle) == INSIDE


@dataclass(frozen=True)
class OnCircle(Formula):
    circle: Circle

    def _collect(self, out):
        out.append(self.circle)

    def evaluate(self, env: Evaluator) -> bool:
        return env.circle(self.circle) == ON


@dataclass(frozen=True)
class AtPoint(Formula):
    point: SinglePoint

    def _collect(self, out):
        out.append(self.point)

    def evaluate(self, env: Evaluator) -> bool:
        return env.point(self.point)


@dataclass(frozen=True)
class CellTest(Formula):
    """λ lies in one specific cell of the arrangement of ``arrangement``.

    Needed where plain sign tests cannot separate cells, e.g. a hole and the
    unbounded face outside the same circles.
    """
    arrangement: Tuple[Predicate, ...]
    cell: Tuple

    def _collect(self, out):
        out.extend(self.arrangement)

    def evaluate(self, env: Evaluator) -> bool:
        return env.cell(self)


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def _collect(self, out):
        self.arg._collect(out)

    def evaluate(self, env: Evaluator) -> bool:
        return not self.arg.evaluate(env)


@dataclass(frozen=True)
class And(Formula):
    args: Tuple[Formula, ...]

    def _collect(self, out):
        for a in self.args:
            a._collect(out)

    def evaluate(self, env: Evaluator) -> bool:
        return all(a.evaluate(env) for a in self.args)


@dataclass(frozen=True)
class Or(Formula):
    args: Tuple[Formula, ...]

    def _collect(self, out):
        for a in self.args:
            a._collect(out)

    def evaluate(self, env: Evaluator) -> bool:
        return any(a.evaluate(env) for a in self.args)


TRUE = Const(True)
FALSE = Const(False)


def conj(*args: Formula) -> Formula:
    flat: List[Formula] = []
    for a in args:
        if a == FALSE:
            return FALSE
        if a == TRUE:
            continue
        flat.extend(a.args if isinstance(a, And) else (a,))
    if not flat:
        return TRUE
    return flat[0] if len(flat) == 1 else And(tuple(dict.fromkeys(flat)))


def disj(*args: Formula) -> Formula:
    flat: List[Formula] = []
    for a in args:
        if a == TRUE:
            return TRUE
        if a == FALSE:
            continue
        flat.extend(a.args if isinstance(a, Or) else (a,))
    if not flat:
        return FALSE
    return flat[0] if len(flat) == 1 else Or(tuple(dict.fromkeys(flat)))


def neg(a: Formula) -> Formula:
    if isinstance(a, Const):
        return Const(not a.value)
    if isinstance(a, Not):
        return a.arg
    return Not(a)


def outside(c: Circle) -> Formula:
    return conj(neg(InDisk(c)), neg(OnCircle(c)))


def sign_literals(circles: Tuple[Circle, ...], signs: Tuple[int, ...],
                  points: Tuple[SinglePoint, ...], at: Tuple[bool, ...]) -> Formula:
    """Conjunction pinning every circle status and point equality."""
    parts: List[Formula] = []
    for c, s in zip(circles, signs):
        parts.append(InDisk(c) if s == INSIDE else OnCircle(c) if s == ON else outside(c))
    for p, hit in zip(points, at):
        parts.append(AtPoint(p) if hit else neg(AtPoint(p)))
    return conj(*parts)


# ------------------------------------------------------------ serialization


def cell_key_to_json(key: Tuple) -> Any:
    return [list(k) if isinstance(k, tuple) else k for k in key]


def cell_key_from_json(data: Any) -> Tuple:
    return tuple(tuple(k) if isinstance(k, list) else k for k in data)


def formula_to_json(f: Formula, index: Callable[[Predicate], int]) -> Dict[str, Any]:
    if isinstance(f, Const):
        return {"op": "const", "value": f.value}
    if isinstance(f, InDisk):
        return {"op": "in_disk", "pred": index(f.circle)}
    if isinstance(f, OnCircle):
        return {"op": "on_circle", "pred": index(f.circle)}
    if isinstance(f, AtPoint):
        return {"op": "at_point", "pred": index(f.point)}
    if isinstance(f, CellTest):
        return {"op": "cell", "arrangement": [index(p) for p in f.arrangement],
                "cell": cell_key_to_json(f.cell)}
    if isinstance(f, Not):
        return {"op": "not", "arg": formula_to_json(f.arg, index)}
    if isinstance(f, And):
        return {"op": "and", "args": [formula_to_json(a, index) for a in f.args]}
    if isinstance(f, Or):
        return {"op": "or", "args": [formula_to_json(a, index) for a in f.args]}
    raise RegionError(f"cannot serialize formula node {type(f).__name__}")


def formula_from_json(data: Dict[str, Any], preds: List[Predicate]) -> Formula:
    op = data["op"]
    if op == "const":
        return Const(bool(data["value"]))
    if op == "in_disk":
        return InDisk(preds[data["pred"]])
    if op == "on_circle":
        return OnCircle(preds[data["pred"]])
    if op == "at_point":
        return AtPoint(preds[data["pred"]])
    if op == "cell":
        arrangement = canonical_predicates(preds[i] for i in data["arrangement"])
        return CellTest(arrangement, cell_key_from_json(data["cell"]))
    if op == "not":
        return Not(formula_from_json(data["arg"], preds))
    if op == "and":
        return And(tuple(formula_from_json(a, preds) for a in data["args"]))
    if op == "or":
        return Or(tuple(formula_from_json(a, preds) for a in data["args"]))
    raise RegionError(f"unknown formula op {op!r}")
