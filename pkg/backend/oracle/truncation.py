"""Finite compressions P_n T P_n of operator expressions and block matrices."""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from ..completion.completion_engine import BlockMatrixExpr, certificate_pairs
from ..config import OracleConfig
from ..models.numeric import GQ
from ..models.operator_models import Atom, AtomKind, BasisAddress, BasisProfile, OperatorExpr
from ..operators.operator_model import diag_coordinate, normalize
from ..utils.errors import OracleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CopyBlock:
    """One copy of an atom; ``origin`` is the position of basis vector e_0 inside it."""
    atom_index: int
    copy_index: int
    offset: int
    dimension: int
    origin: int = 0


@dataclass
class Truncation:
    """A truncated matrix with its coordinate layout.

    ``edge`` marks coordinates where truncation artifacts live; ``capped``
    records that an infinite multiplicity was cut down.
    """
    matrix: np.ndarray
    edge: np.ndarray
    blocks: List[CopyBlock] = field(default_factory=list)
    capped: bool = False

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def anchor(self) -> int:
        """Position of e_0 in the first copy block."""
        if not self.blocks:
            return 0
        return self.blocks[0].offset + self.blocks[0].origin

    def locate(self, address: BasisAddress) -> Optional[CopyBlock]:
        for block in self.blocks:
            if block.atom_index == address.atom_index and block.copy_index == address.copy_index:
                return block
        return None

    def vector(self, address: BasisAddress) -> Optional[np.ndarray]:
        """The truncated basis vector at ``address``, or None when it falls outside."""
        block = self.locate(address)
        if block is None:
            return None
        v = np.zeros(self.dimension, dtype=complex)
        if address.profile == BasisProfile.GEOMETRIC:
            r = complex(address.ratio)
            k = np.arange(block.dimension)
            v[block.offset:block.offset + block.dimension] = r ** k * math.sqrt(1 - abs(r) ** 2)
            return v
        if block.origin + address.coord >= block.dimension:
            return None
        v[block.offset + block.origin + address.coord] = 1.0
        return v


def _copies(atom: Atom, n: int, config: OracleConfig):
    if atom.mult.is_finite:
        return atom.mult.value, False
    return min(n, config.cap_per_atom), True


def _copy_matrix(atom: Atom, n: int, config: OracleConfig):
    """Matrix of one copy, its edge mask and whether an eigenvalue multiplicity was capped."""
    if atom.is_shift:
        shift = np.eye(n, k=-1, dtype=complex)
        if atom.kind == AtomKind.USHIFT_ADJ:
            shift = shift.T
        m = complex(atom.a) * np.eye(n, dtype=complex) + complex(atom.b) * shift
        window = math.ceil(n * config.edge_fraction)
        edge = np.zeros(n, dtype=bool)
        edge[n - window:] = True
        if atom.kind == AtomKind.BSHIFT:
            # coordinates run from -n/2 to n/2-1, e_0 sits mid-section
            edge[:window] = True
        return m, edge, False
    kcap = min(n, config.cap_per_atom)
    infinite = sum(1 for _, m in atom.values if m.is_inf)
    finite_total = sum(m.value for _, m in atom.values if m.is_finite)
    dim = finite_total + infinite * kcap
    diag = np.zeros(dim, dtype=complex)
    for i, (value, m) in enumerate(atom.values):
        for k in range(m.value if m.is_finite else kcap):
            diag[diag_coordinate(atom, i, k)] = complex(value)
    return np.diag(diag), np.zeros(dim, dtype=bool), infinite > 0


def truncate_expr(expr: OperatorExpr, n: int, config: Optional[OracleConfig] = None) -> Truncation:
    config = config or OracleConfig()
    if n < 2:
        raise OracleError(f"truncation size must be at least 2, got {n}")
    parts, edges, blocks = [], [], []
    capped = False
    offset = 0
    for atom_index, atom in enumerate(normalize(expr).atoms):
        copies, cut = _copies(atom, n, config)
        m, edge, cut_values = _copy_matrix(atom, n, config)
        origin = n // 2 if atom.kind == AtomKind.BSHIFT else 0
        capped = capped or cut or cut_values
        for c in range(copies):
            blocks.append(CopyBlock(atom_index, c, offset, m.shape[0], origin))
            parts.append(m)
            edges.append(edge)
            offset += m.shape[0]
            if offset > config.max_dimension:
                raise OracleError(f"truncation exceeds the maximum dimension {config.max_dimension}")
    matrix = np.zeros((offset, offset), dtype=complex)
    for block, m in zip(blocks, parts):
        sl = slice(block.offset, block.offset + block.dimension)
        matrix[sl, sl] = m
    return Truncation(matrix, np.concatenate(edges), blocks, capped)


@dataclass(frozen=True)
class FiniteRankCorner:
    """Σ w_i ⊗ u_i* supported on e_0, e_1, ... of the first copy blocks of H and K."""
    left: np.ndarray   # shape (rank, support)
    right: np.ndarray  # shape (rank, support)

    @classmethod
    def random(cls, rng: np.random.Generator, rank: int, support: int = 4) -> "FiniteRankCorner":
        def draw():
            return rng.standard_normal((rank, support)) + 1j * rng.standard_normal((rank, support))
        return cls(draw(), draw())

    def materialize(self, rows: int, cols: int, row_start: int = 0, col_start: int = 0) -> np.ndarray:
        c = np.zeros((rows, cols), dtype=complex)
        s_rows = min(self.left.shape[1], rows - row_start)
        s_cols = min(self.right.shape[1], cols - col_start)
        for w, u in zip(self.left, self.right):
            c[row_start:row_start + s_rows, col_start:col_start + s_cols] += np.outer(
                w[:s_rows], u[:s_cols].conj())
        return c


def _certificate_corner(m: BlockMatrixExpr, ta: Truncation, tb: Truncation) -> np.ndarray:
    c = np.zeros((ta.dimension, tb.dimension), dtype=complex)
    skipped = 0
    for src, dst in certificate_pairs(m.c, m.a, m.b, limit=ta.dimension + tb.dimension):
        u, w = tb.vector(src), ta.vector(dst)
        if u is None or w is None:
            skipped += 1
            continue
        c += np.outer(w, u.conj())
    if skipped:
        logger.debug("%d certificate pairs fall outside the truncation", skipped)
    return c


def truncate_block(m: BlockMatrixExpr, n: int, config: Optional[OracleConfig] = None,
                   corner: Optional[FiniteRankCorner] = None) -> Truncation:
    """(A_n C_n; 0 B_n); ``corner`` replaces the certificate with a trial operator."""
    config = config or OracleConfig()
    ta, tb = truncate_expr(m.a, n, config), truncate_expr(m.b, n, config)
    if ta.dimension + tb.dimension > config.max_dimension:
        raise OracleError(f"truncation exceeds the maximum dimension {config.max_dimension}")
    if corner is not None:
        c = corner.materialize(ta.dimension, tb.dimension, ta.anchor(), tb.anchor())
    elif m.is_zero:
        c = np.zeros((ta.dimension, tb.dimension), dtype=complex)
    else:
        c = _certificate_corner(m, ta, tb)
    matrix = np.block([[ta.matrix, c],
                       [np.zeros((tb.dimension, ta.dimension), dtype=complex), tb.matrix]])
    return Truncation(matrix, np.concatenate([ta.edge, tb.edge]), [], ta.capped or tb.capped)


Target = Union[OperatorExpr, BlockMatrixExpr]


def truncation(target: Target, n: int, config: Optional[OracleConfig] = None,
               corner: Optional[FiniteRankCorner] = None) -> Truncation:
    if isinstance(target, BlockMatrixExpr):
        return truncate_block(target, n, config, corner)
    return truncate_expr(target, n, config)


def truncate(target: Target, n: int, config: Optional[OracleConfig] = None) -> np.ndarray:
    return truncation(target, n, config).matrix


def shifted(t: Truncation, lam: GQ) -> np.ndarray:
    return t.matrix - complex(GQ.of(lam)) * np.eye(t.dimension, dtype=complex)
