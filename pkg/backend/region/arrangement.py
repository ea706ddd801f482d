"""Exact cell decomposition of an arrangement of circles and points.

Vertices are circle intersections (exact in Q(√q)[i]) and point
predicates; arcs are the pieces of circles between vertices; faces are the
connected components of the plane minus all circles. Faces are found per
connected cluster of circles by half-edge traversal and combined across
clusters by exact point location.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..config import RegionConfig
from ..models.numeric import GQ, abs2
from ..utils.errors import ArrangementError
from ..utils.exact import (
    QuadNumber, QVec, angle_cmp, compare, cross_sign, equal, norm2_minus,
    relative_class, sqrt_approx, strictly_between,
)
from .predicates import Circle, Predicate, SinglePoint, canonical_predicates

logger = logging.getLogger(__name__)

HalfEdge = Tuple[int, int]  # (arc id, +1 counterclockwise / -1 clockwise)
CellKey = Tuple


@dataclass
class Vertex:
    key: Tuple
    point: QVec
    on_circles: Tuple[int, ...]
    at_points: Tuple[int, ...]
    signs: Tuple[int, ...] = ()
    faces: Set[int] = field(default_factory=set)
    arcs: List[int] = field(default_factory=list)


@dataclass
class Arc:
    circle: int
    index: int
    start: Optional[Tuple]
    end: Optional[Tuple]
    direction: GQ
    point: QVec
    signs: Tuple[int, ...] = ()
    inner_face: int = -1
    outer_face: int = -1


@dataclass
class Face:
    id: int
    key: Tuple[int, ...]
    bounded: bool
    sample: GQ
    signs: Tuple[int, ...] = ()
    arcs: Set[int] = field(default_factory=set)
    vertices: Set[Tuple] = field(default_factory=set)


@dataclass(frozen=True)
class Cell:
    kind: str
    key: CellKey
    signs: Tuple[int, ...]
    at: Tuple[bool, ...]
    sample: Optional[GQ]
    exact: Optional[QVec]
    bounded: bool = True


def _ray_directions(limit: int) -> Iterator[GQ]:
    seen = []
    for base in [(-1, 0), (1, 0), (0, 1), (0, -1)]:
        seen.append(base)
    n = 1
    while len(seen) < limit:
        n += 1
        for x, y in [(n, 1), (1, n), (-n, 1), (-1, n), (n, -1), (1, -n), (-n, -1), (-1, -n),
                     (1, 1), (-1, 1), (1, -1), (-1, -1)]:
            if (x, y) not in seen:
                seen.append((x, y))
    for x, y in seen[:limit]:
        yield GQ(Fraction(x), Fraction(y))


class Arrangement:
    def __init__(self, predicates: Sequence[Predicate], config: Optional[RegionConfig] = None):
        self.config = config or RegionConfig()
        self.predicates = canonical_predicates(predicates)
        if len(self.predicates) > self.config.max_predicates:
            raise ArrangementError(
                f"{len(self.predicates)} predicates exceed the limit of {self.config.max_predicates}")
        self.circles: Tuple[Circle, ...] = tuple(p for p in self.predicates if isinstance(p, Circle))
        self.points: Tuple[SinglePoint, ...] = tuple(p for p in self.predicates if isinstance(p, SinglePoint))
        self.circle_index = {c: i for i, c in enumerate(self.circles)}
        self.point_index = {p: k for k, p in enumerate(self.points)}

        self.vertices: Dict[Tuple, Vertex] = {}
        self.arcs: List[Arc] = []
        self.circle_arcs: List[List[int]] = [[] for _ in self.circles]
        self.circle_order: List[List[Tuple]] = [[] for _ in self.circles]
        self.separators: List[List[GQ]] = [[] for _ in self.circles]
        self.faces: List[Face] = []
        self._face_by_key: Dict[Tuple[int, ...], int] = {}

        self._find_vertices()
        for i in range(len(self.circles)):
            self._order_circle(i)
        self._trace_cycles()
        self._find_clusters()
        self._build_faces()
        self._finish_cells()
        logger.debug("arrangement of %d circles, %d points: %d vertices, %d arcs, %d faces",
                     len(self.circles), len(self.points), len(self.vertices),
                     len(self.arcs), len(self.faces))

    # ------------------------------------------------------------ vertices

    def _circle_through(self, v: QVec) -> Tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.circles)
                     if norm2_minus(v - c.center, c.r2) == 0)

    def _points_at(self, v: QVec) -> Tuple[int, ...]:
        return tuple(k for k, p in enumerate(self.points) if equal(v, p.p))

    def _side(self, i: int, j: int, v) -> int:
        return cross_sign(self.circles[j].center - self.circles[i].center,
                          (v if isinstance(v, QVec) else QVec.of(v)) - self.circles[i].center)

    def _intersections(self, i: int, j: int) -> List[QVec]:
        c1, c2 = self.circles[i], self.circles[j]
        delta = c2.center - c1.center
        d2 = abs2(delta)
        if d2 == 0:
            return []
        s = (d2 + c1.r2 - c2.r2) / (2 * d2)
        h2 = c1.r2 - s * s * d2
        if h2 < 0:
            return []
        m = c1.center + delta * GQ(s)
        w = GQ(-delta.im, delta.re)
        q = h2 / d2
        out = []
        for sgn in ((1,) if q == 0 else (1, -1)):
            out.append(QVec(QuadNumber(m.re, sgn * w.re, q), QuadNumber(m.im, sgn * w.im, q)))
        return out

    def _find_vertices(self) -> None:
        n = len(self.circles)
        for i in range(n):
            for j in range(i + 1, n):
                for v in self._intersections(i, j):
                    on = self._circle_through(v)
                    if on[:2] != (i, j):
                        continue
                    key = ("cc", i, j, self._side(i, j, v))
                    if key not in self.vertices:
                        self.vertices[key] = Vertex(key, v, on, self._points_at(v))
        for k, p in enumerate(self.points):
            v = QVec.of(p.p)
            on = self._circle_through(v)
            if len(on) >= 2:
                continue
            key = ("pt", k)
            self.vertices[key] = Vertex(key, v, on, self._points_at(v))

    # ----------------------------------------------------- angular order

    def _direction(self, i: int, v: QVec) -> QVec:
        return v - self.circles[i].center

    def _order_circle(self, i: int) -> None:
        keys = [k for k, v in self.vertices.items() if i in v.on_circles]
        dirs = {k: self._direction(i, self.vertices[k].point) for k in keys}
        if not keys:
            self.separators[i] = [GQ(Fraction(1))]
            self._add_arcs(i, [], self.separators[i])
            return
        if len(keys) == 1:
            approx = dirs[keys[0]].approx(32)
            sep = -approx
            if relative_class(sep, dirs[keys[0]]) == 0:
                raise ArrangementError("could not separate a single vertex from its antipode")
            self.circle_order[i] = keys
            self.separators[i] = [sep]
            self._add_arcs(i, keys, [sep])
            return
        for depth in range(self.config.max_refinement_depth):
            bits = 16 * (depth + 1)
            approx = {k: dirs[k].approx(bits) for k in keys}
            ordered = sorted(keys, key=cmp_to_key(lambda a, b: angle_cmp(approx[a], approx[b])))
            seps = []
            for j, k in enumerate(ordered):
                a, b = approx[k], approx[ordered[(j + 1) % len(ordered)]]
                c = cross_sign(a, b)
                if c > 0:
                    seps.append(a + b)
                elif c < 0:
                    seps.append(-(a + b))
                else:
                    seps.append(GQ(-a.im, a.re))
            if self._separators_valid(ordered, seps, dirs):
                self.circle_order[i] = ordered
                self.separators[i] = seps
                self._add_arcs(i, ordered, seps)
                logger.debug("circle %d ordered with %d vertices at %d bits", i, len(keys), bits)
                return
        raise ArrangementError(f"vertex order on circle {self.circles[i]} not certified "
                               f"after {self.config.max_refinement_depth} refinements")

    @staticmethod
    def _separators_valid(ordered, seps: List[GQ], dirs) -> bool:
        m = len(seps)
        if any(s.is_zero() for s in seps):
            return False
        # separators must be strictly counterclockwise and wind once
        for j in range(m):
            if m > 2 and not strictly_between(seps[j - 1], seps[j], seps[(j + 1) % m]):
                return False
            if relative_class(seps[j - 1], seps[j]) == 0:
                return False
            if not strictly_between(seps[j - 1], dirs[ordered[j]], seps[j]):
                return False
        if m > 2:
            turns = sum(1 for j in range(m) if angle_cmp(seps[j], seps[(j + 1) % m]) > 0)
            if turns != 1:
                return False
        return True

    def _add_arcs(self, i: int, ordered: List[Tuple], seps: List[GQ]) -> None:
        circle = self.circles[i]
        for j, d in enumerate(seps):
            t = QuadNumber.sqrt(circle.r2 / abs2(d))
            point = QVec(QuadNumber(circle.center.re) + t * d.re,
                         QuadNumber(circle.center.im) + t * d.im)
            start = ordered[j] if ordered else None
            end = ordered[(j + 1) % len(ordered)] if ordered else None
            arc = Arc(i, j, start, end, d, point)
            self.circle_arcs[i].append(len(self.arcs))
            self.arcs.append(arc)

    def arc_of_direction(self, i: int, x) -> CellKey:
        """Cell of circle i hit by direction x from its center: an arc or a vertex."""
        order = self.circle_order[i]
        arcs = self.circle_arcs[i]
        if not order:
            return ("arc", i, 0)
        dirs = [self._direction(i, self.vertices[k].point) for k in order]
        if len(order) == 1:
            if relative_class(dirs[0], x) == 0:
                return ("vertex", order[0])
            return ("arc", i, 0)
        seps = self.separators[i]
        m = len(order)
        for j in range(m):
            if relative_class(seps[j], x) == 0:
                return ("arc", i, j)
        for j in range(m):
            prev = seps[j - 1]
            if strictly_between(prev, x, seps[j]):
                if relative_class(dirs[j], x) == 0:
                    return ("vertex", order[j])
                if strictly_between(prev, x, dirs[j]):
                    return ("arc", i, (j - 1) % m)
                return ("arc", i, j)
        raise ArrangementError(f"direction not located on circle {self.circles[i]}")

    # --------------------------------------------------------- half edges

    def _origin(self, h: HalfEdge) -> Optional[Tuple]:
        arc = self.arcs[h[0]]
        return arc.start if h[1] > 0 else arc.end

    def _dest(self, h: HalfEdge) -> Optional[Tuple]:
        arc = self.arcs[h[0]]
        return arc.end if h[1] > 0 else arc.start

    def _outgoing_cmp(self, v: Vertex):
        def tangent(h: HalfEdge) -> QVec:
            arc = self.arcs[h[0]]
            t = self._direction(arc.circle, v.point).rot90()
            return t if h[1] > 0 else -t

        def cmp(h1: HalfEdge, h2: HalfEdge) -> int:
            c = angle_cmp(tangent(h1), tangent(h2))
            if c:
                return c
            o1, o2 = h1[1], h2[1]
            if o1 != o2:
                return -1 if o1 < o2 else 1
            r1, r2 = self.circles[self.arcs[h1[0]].circle].r2, self.circles[self.arcs[h2[0]].circle].r2
            if r1 == r2:
                return 0
            # curvature orientation/r ascending
            if o1 > 0:
                return -1 if r1 > r2 else 1
            return -1 if r1 < r2 else 1
        return cmp

    def _trace_cycles(self) -> None:
        self.outgoing: Dict[Tuple, List[HalfEdge]] = {k: [] for k in self.vertices}
        for a, arc in enumerate(self.arcs):
            if arc.start is not None:
                self.outgoing[arc.start].append((a, 1))
                self.outgoing[arc.end].append((a, -1))
        for key, hs in self.outgoing.items():
            hs.sort(key=cmp_to_key(self._outgoing_cmp(self.vertices[key])))
        self.cycle_of: Dict[HalfEdge, int] = {}
        self.cycles: List[List[HalfEdge]] = []
        for a in range(len(self.arcs)):
            for o in (1, -1):
                h = (a, o)
                if h in self.cycle_of:
                    continue
                cycle = []
                cur = h
                while cur not in self.cycle_of:
                    self.cycle_of[cur] = len(self.cycles)
                    cycle.append(cur)
                    cur = self._next(cur)
                if cur != h:
                    raise ArrangementError("half-edge traversal did not close")
                self.cycles.append(cycle)

    def _next(self, h: HalfEdge) -> HalfEdge:
        dest = self._dest(h)
        if dest is None:
            return h
        ring = self.outgoing[dest]
        pos = ring.index((h[0], -h[1]))
        return ring[(pos - 1) % len(ring)]

    # ------------------------------------------------------------ clusters

    def _find_clusters(self) -> None:
        parent = list(range(len(self.circles)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v in self.vertices.values():
            for k in v.on_circles[1:]:
                parent[find(k)] = find(v.on_circles[0])
        groups: Dict[int, List[int]] = {}
        for i in range(len(self.circles)):
            groups.setdefault(find(i), []).append(i)
        self.clusters: List[List[int]] = sorted(groups.values())
        self.cluster_of = {i: n for n, members in enumerate(self.clusters) for i in members}
        self.outer_cycle = [self._outer_cycle(members) for members in self.clusters]
        self.nest: Dict[Tuple[int, int], int] = {}
        for g in range(len(self.clusters)):
            for k in range(len(self.clusters)):
                if g != k:
                    p0 = self._point_near(self.clusters[g][0], self.clusters[k])
                    self.nest[(g, k)] = self._locate_in_cluster(k, p0)

    def _outer_cycle(self, members: List[int]) -> int:
        best = members[0]
        for i in members[1:]:
            ci, cb = self.circles[i], self.circles[best]
            left_i = QuadNumber(ci.center.re, Fraction(-1), ci.r2)
            left_b = QuadNumber(cb.center.re, Fraction(-1), cb.r2)
            order = compare(left_i, left_b)
            # tangent at the leftmost point: the larger circle is outermost
            if order < 0 or (order == 0 and ci.r2 > cb.r2):
                best = i
        cell = self.arc_of_direction(best, GQ(Fraction(-1)))
        if cell[0] == "vertex":
            j = self.circle_order[best].index(cell[1])
        else:
            j = cell[2]
        return self.cycle_of[(self.circle_arcs[best][j], -1)]

    def _point_near(self, h: int, obstacles: List[int]) -> GQ:
        """Rational point just outside circle h that no obstacle circle separates from it."""
        circle = self.circles[h]
        tstar = QuadNumber.sqrt(circle.r2)
        for depth in range(self.config.max_refinement_depth):
            bits = 8 * (depth + 1)
            t0 = sqrt_approx(circle.r2, bits) + Fraction(1, 1 << bits)
            clear = True
            for g in obstacles:
                other = self.circles[g]
                dx = circle.center.re - other.center.re
                dy = circle.center.im - other.center.im
                disc = other.r2 - dy * dy
                if disc < 0:
                    continue
                for sgn in (1, -1):
                    root = QuadNumber(-dx, Fraction(sgn), disc)
                    if compare(root, tstar) >= 0 and compare(root, QuadNumber(t0)) <= 0:
                        clear = False
            if clear:
                return GQ(circle.center.re + t0, circle.center.im)
        raise ArrangementError(f"no certified point near {circle}")

    def _locate_in_cluster(self, k: int, p: GQ) -> int:
        """Cycle of cluster k bounding the face that contains p (p off its circles)."""
        members = self.clusters[k]
        for e in _ray_directions(self.config.max_ray_directions):
            hit = self._first_hit(members, p, e)
            if hit is None:
                return self.outer_cycle[k]
            if hit == "degenerate":
                continue
            g, arc_j = hit
            orient = 1 if self.circles[g].status(p) < 0 else -1
            return self.cycle_of[(self.circle_arcs[g][arc_j], orient)]
        raise ArrangementError(f"point location failed for {p}")

    def _first_hit(self, members: List[int], p: GQ, e: GQ):
        a = abs2(e)
        best = None
        tie = False
        for g in members:
            circle = self.circles[g]
            pc = p - circle.center
            b = 2 * (e.re * pc.re + e.im * pc.im)
            c = abs2(pc) - circle.r2
            disc = b * b - 4 * a * c
            if disc < 0:
                continue
            if disc == 0:
                if -b / (2 * a) > 0:
                    return "degenerate"
                continue
            for sgn in (1, -1):
                s = QuadNumber(-b / (2 * a), Fraction(sgn) / (2 * a), disc)
                if s.sign() <= 0:
                    continue
                if best is None:
                    best, tie = (s, g), False
                else:
                    order = compare(s, best[0])
                    if order < 0:
                        best, tie = (s, g), False
                    elif order == 0:
                        tie = True
        if best is None:
            return None
        if tie:
            return "degenerate"
        s, g = best
        hit = QVec(QuadNumber(p.re) + s * e.re, QuadNumber(p.im) + s * e.im)
        for other in members:
            if other != g and norm2_minus(hit - self.circles[other].center, self.circles[other].r2) == 0:
                return "degenerate"
        if any(equal(hit, pt.p) for pt in self.points):
            return "degenerate"
        cell = self.arc_of_direction(g, self._direction(g, hit))
        if cell[0] != "arc":
            return "degenerate"
        return g, cell[2]

    # --------------------------------------------------------------- faces

    def _face_key_of_cycle(self, cycle: int) -> Tuple[int, ...]:
        h = self.cycles[cycle][0]
        g = self.cluster_of[self.arcs[h[0]].circle]
        return tuple(cycle if k == g else self.nest[(g, k)] for k in range(len(self.clusters)))

    def face_key_of_point(self, p: GQ) -> Tuple[int, ...]:
        return tuple(self._locate_in_cluster(k, p) for k in range(len(self.clusters)))

    def _build_faces(self) -> None:
        if not self.circles:
            self._face_by_key[()] = 0
            right = max((p.p.re for p in self.points), default=Fraction(0))
            self.faces.append(Face(0, (), False, GQ(right + 1), ()))
            self.unbounded_face = 0
            return
        keys_of_cycle = [self._face_key_of_cycle(c) for c in range(len(self.cycles))]
        unbounded_key = tuple(self.outer_cycle)
        for n, key in enumerate(sorted(set(keys_of_cycle))):
            self._face_by_key[key] = n
        self.unbounded_face = self._face_by_key.get(unbounded_key)
        if self.unbounded_face is None:
            raise ArrangementError("unbounded face not realized")
        self.face_of_half_edge: Dict[HalfEdge, int] = {
            h: self._face_by_key[keys_of_cycle[c]] for h, c in self.cycle_of.items()}
        first_edge: Dict[int, HalfEdge] = {}
        for h in sorted(self.face_of_half_edge):
            first_edge.setdefault(self.face_of_half_edge[h], h)
        for key, fid in sorted(self._face_by_key.items(), key=lambda kv: kv[1]):
            sample = self._face_sample(first_edge[fid])
            self.faces.append(Face(fid, key, fid != self.unbounded_face, sample))

    def _face_sample(self, h: HalfEdge) -> GQ:
        """Rational point reached by moving from the arc sample into the face left of h."""
        arc = self.arcs[h[0]]
        circle = self.circles[arc.circle]
        d = arc.direction
        nd = abs2(d)
        tstar = QuadNumber.sqrt(circle.r2 / nd)
        for depth in range(self.config.max_refinement_depth):
            bits = 8 * (depth + 1)
            step = Fraction(1, 1 << bits)
            approx = sqrt_approx(circle.r2 / nd, bits)
            t0 = approx - step if h[1] > 0 else approx + step
            if t0 <= 0:
                continue
            lo, hi = (QuadNumber(t0), tstar) if h[1] > 0 else (tstar, QuadNumber(t0))
            if not self._radial_clear(circle, d, lo, hi, tstar):
                continue
            sample = GQ(circle.center.re + t0 * d.re, circle.center.im + t0 * d.im)
            if any(sample == pt.p for pt in self.points):
                continue
            return sample
        raise ArrangementError(f"no certified face sample next to {circle}")

    def _radial_clear(self, circle: Circle, d: GQ, lo: QuadNumber, hi: QuadNumber,
                      tstar: QuadNumber) -> bool:
        a = abs2(d)
        for other in self.circles:
            delta = circle.center - other.center
            b = 2 * (d.re * delta.re + d.im * delta.im)
            c = abs2(delta) - other.r2
            disc = b * b - 4 * a * c
            if disc < 0:
                continue
            for sgn in (1, -1):
                root = QuadNumber(-b / (2 * a), Fraction(sgn) / (2 * a), disc)
                if compare(root, tstar) == 0:
                    continue
                if compare(root, lo) >= 0 and compare(root, hi) <= 0:
                    return False
        return True

    # --------------------------------------------------------------- cells

    def _finish_cells(self) -> None:
        for face in self.faces:
            face.signs = tuple(c.status(face.sample) for c in self.circles)
        for a, arc in enumerate(self.arcs):
            signs = []
            for g, other in enumerate(self.circles):
                if g == arc.circle:
                    signs.append(0)
                    continue
                s = norm2_minus(arc.point - other.center, other.r2)
                if s == 0:
                    raise ArrangementError("arc sample landed on another circle")
                signs.append(s)
            arc.signs = tuple(signs)
            arc.inner_face = self.face_of_half_edge[(a, 1)]
            arc.outer_face = self.face_of_half_edge[(a, -1)]
            self.faces[arc.inner_face].arcs.add(a)
            self.faces[arc.outer_face].arcs.add(a)
            for key in (arc.start, arc.end):
                if key is not None and a not in self.vertices[key].arcs:
                    self.vertices[key].arcs.append(a)
        for key, v in self.vertices.items():
            v.signs = tuple(0 if g in v.on_circles else norm2_minus(v.point - c.center, c.r2)
                            for g, c in enumerate(self.circles))
            if v.on_circles:
                v.faces = {self.face_of_half_edge[h] for h in self.outgoing[key]}
            else:
                v.faces = {self._face_by_key[self.face_key_of_point(v.point.as_gq())]}
            for f in v.faces:
                self.faces[f].vertices.add(key)
        self.cells: List[Cell] = []
        no_points = tuple(False for _ in self.points)
        for face in self.faces:
            self.cells.append(Cell("face", ("face", face.id), face.signs, no_points,
                                   face.sample, None, face.bounded))
        for arc in self.arcs:
            self.cells.append(Cell("arc", ("arc", arc.circle, arc.index), arc.signs,
                                   no_points, None, arc.point))
        for key, v in self.vertices.items():
            at = tuple(k in v.at_points for k in range(len(self.points)))
            sample = v.point.as_gq() if v.point.is_rational else None
            self.cells.append(Cell("vertex", ("vertex", key), v.signs, at, sample, v.point))
        self.cell_by_key = {c.key: c for c in self.cells}

    def adjacency(self) -> List[Tuple[CellKey, CellKey]]:
        """Closure-incidence edges between cells."""
        edges = []
        for arc in self.arcs:
            ak = ("arc", arc.circle, arc.index)
            edges.append((ak, ("face", arc.inner_face)))
            edges.append((ak, ("face", arc.outer_face)))
            for key in (arc.start, arc.end):
                if key is not None:
                    edges.append((ak, ("vertex", key)))
        for key, v in self.vertices.items():
            for f in v.faces:
                edges.append((("vertex", key), ("face", f)))
        return edges

    def arc_key(self, arc_id: int) -> CellKey:
        arc = self.arcs[arc_id]
        return ("arc", arc.circle, arc.index)

    # ------------------------------------------------------------ location

    def locate(self, z: GQ) -> CellKey:
        on = [i for i, c in enumerate(self.circles) if c.status(z) == 0]
        if len(on) >= 2:
            i, j = on[0], on[1]
            return ("vertex", ("cc", i, j, self._side(i, j, z)))
        for k, p in enumerate(self.points):
            if p.p == z:
                return ("vertex", ("pt", k))
        if on:
            cell = self.arc_of_direction(on[0], z - self.circles[on[0]].center)
            if cell[0] != "arc":
                raise ArrangementError(f"{z} located on an unknown vertex")
            return cell
        key = self.face_key_of_point(z)
        if key not in self._face_by_key:
            raise ArrangementError(f"{z} located in an unrealized face")
        return ("face", self._face_by_key[key])

    def map_cell(self, cell: Cell, sub: "Arrangement") -> CellKey:
        """Cell of ``sub`` (built on a subset of our predicates) containing ``cell``."""
        if cell.kind == "face":
            return sub.locate(cell.sample)
        if cell.kind == "arc":
            _, i, j = cell.key
            circle = self.circles[i]
            if circle in sub.circle_index:
                return sub.arc_of_direction(sub.circle_index[circle], cell.exact - circle.center)
            arc = self.arcs[self.circle_arcs[i][j]]
            return sub.locate(self.faces[arc.inner_face].sample)
        v = self.vertices[cell.key[1]]
        sub_on = sorted(sub.circle_index[self.circles[g]] for g in v.on_circles
                        if self.circles[g] in sub.circle_index)
        if len(sub_on) >= 2:
            i, j = sub_on[0], sub_on[1]
            return ("vertex", ("cc", i, j, sub._side(i, j, v.point)))
        sub_points = sorted(sub.point_index[self.points[k]] for k in v.at_points
                            if self.points[k] in sub.point_index)
        if sub_points:
            return ("vertex", ("pt", sub_points[0]))
        if sub_on:
            return sub.arc_of_direction(sub_on[0], v.point - sub.circles[sub_on[0]].center)
        if v.point.is_rational:
            return sub.locate(v.point.as_gq())
        face = next(iter(sorted(v.faces)))
        return sub.locate(self.faces[face].sample)

    def to_json(self) -> Dict:
        return {
            "predicates": [p.to_json() for p in self.predicates],
            "vertices": [{"key": list(k), "point": str(v.point), "on": list(v.on_circles),
                          "at": list(v.at_points), "faces": sorted(v.faces)}
                         for k, v in self.vertices.items()],
            "arcs": [{"circle": a.circle, "index": a.index,
                      "start": list(a.start) if a.start else None,
                      "end": list(a.end) if a.end else None,
                      "inner_face": a.inner_face, "outer_face": a.outer_face}
                     for a in self.arcs],
            "faces": [{"id": f.id, "bounded": f.bounded, "sample": f.sample.to_json(),
                       "signs": list(f.signs)} for f in self.faces],
        }


@lru_cache(maxsize=256)
def _cached_arrangement(predicates: Tuple[Predicate, ...]) -> Arrangement:
    return Arrangement(predicates)


def build_arrangement(predicates: Sequence[Predicate],
                      config: Optional[RegionConfig] = None) -> Arrangement:
    """Arrangement of ``predicates``; default-configured builds are memoized."""
    if config is not None:
        return Arrangement(predicates, config)
    return _cached_arrangement(canonical_predicates(predicates))
