"""The Lie algebra generated by the vertex monomials.

Its basis is the set of points reachable from the vertices by
``u, w -> u ^ w`` whenever ``f(u, w) = 1``; the identification step reduces
twins, then either finds a line-graph root (quotient ``so(|root|)``) or reads
the quotient off the Lie-algebra table.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import kernels
from .classify import (FieldType, LieFamily, LieIsoType, Base, dim_of, lie_iso)
from .errors import DisconnectedGraphError
from .exact import RowSpace
from .gf2core import BitVec, classify_quadratic, radical_Q
from .graphs import ColoredGraph, build_space, line_graph_root, reduce_graph

CLOSURE_CAP = 24
STABILIZER_ENUM = 12


@dataclass(frozen=True)
class ClosureReport:
    points: frozenset[BitVec]
    dim: int

    def masks(self) -> list[int]:
        return sorted(p.bits for p in self.points)


def _closure_masks(g: ColoredGraph) -> np.ndarray:
    space, _ = build_space(g.recolored())
    seeds = np.asarray([1 << i for i in range(g.n)], dtype=np.uint64)
    return kernels.closure(np.asarray(space.f_rows, dtype=np.uint64), seeds, g.n)


def closure_points(g: ColoredGraph) -> ClosureReport:
    """Points of the vertex-generated closure; colors are treated as black."""
    if g.n > CLOSURE_CAP:
        raise ValueError(f"closure limited to {CLOSURE_CAP} vertices")
    if g.n == 0:
        return ClosureReport(frozenset(), 0)
    pts = _closure_masks(g)
    return ClosureReport(frozenset(BitVec(int(p), g.n) for p in pts), int(pts.size))


@dataclass(frozen=True)
class KReport:
    closure: ClosureReport | None
    reduced_size: int
    reduced_is_line_graph: bool
    root_size: int | None
    quotient: LieIsoType
    quotient_dim: int
    full_type: LieIsoType | None

    def to_dict(self) -> dict:
        from .classify import lie_to_dict
        return {
            "closure_dim": None if self.closure is None else self.closure.dim,
            "reduced_size": self.reduced_size,
            "is_line_graph": self.reduced_is_line_graph,
            "root_size": self.root_size,
            "quotient": lie_to_dict(self.quotient),
            "quotient_dim": self.quotient_dim,
            "full_type": None if self.full_type is None else lie_to_dict(self.full_type),
        }


def _stabilizer_dim(g: ColoredGraph, points: frozenset[BitVec]) -> int:
    """dim of ``{r in Rad(Q) : P ^ r = P}`` for the black-recolored space."""
    space, _ = build_space(g.recolored())
    basis = [v.bits for v in radical_Q(space)]
    if not basis:
        return 0
    masks = {p.bits for p in points}
    if len(basis) > STABILIZER_ENUM:
        basis = basis[:STABILIZER_ENUM]
    count = 0
    for k in range(1 << len(basis)):
        r = 0
        for i, b in enumerate(basis):
            if k >> i & 1:
                r ^= b
        if all((m ^ r) in masks for m in masks):
            count += 1
    return count.bit_length() - 1


def identify_K(g: ColoredGraph, ft: FieldType = FieldType.III) -> KReport:
    if not g.is_connected():
        raise DisconnectedGraphError("identify_K needs a connected graph")
    g = g.recolored()
    red = reduce_graph(g).reduced
    root = line_graph_root(red)
    if root.is_line_graph:
        quotient = LieIsoType(LieFamily.so, root.root.n, Base.F, 0)
        root_size = root.root.n
    else:
        space, _ = build_space(red)
        quotient = lie_iso(classify_quadratic(space), ft)[1]
        root_size = None
    qdim = dim_of(quotient)
    closure = closure_points(g) if g.n <= CLOSURE_CAP else None
    full = None
    if closure is not None:
        if closure.dim == qdim:
            full = quotient
        elif qdim and closure.dim % qdim == 0:
            ratio = closure.dim // qdim
            j = ratio.bit_length() - 1
            if ratio == 1 << j and j <= _stabilizer_dim(g, closure.points):
                full = LieIsoType(quotient.family, quotient.size, quotient.base,
                                  quotient.copies_log2 + j)
    return KReport(closure, red.n, root.is_line_graph, root_size, quotient, qdim, full)


# ---------------------------------------------------------------------------
# antisymmetric matrix model
# ---------------------------------------------------------------------------


def g_omega_model(omega_size: int) -> dict[tuple[int, int], np.ndarray]:
    """``E_ij - E_ji`` for every pair ``i < j`` of ``range(omega_size)``."""
    if not 2 <= omega_size <= 64:
        raise ValueError("omega_size must lie in 2..64")
    out = {}
    for i, j in combinations(range(omega_size), 2):
        m = np.zeros((omega_size, omega_size), dtype=np.int64)
        m[i, j], m[j, i] = 1, -1
        out[(i, j)] = m
    return out


def matrix_bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``(ab - ba)/2`` with exact rational entries."""
    c = a @ b - b @ a
    return np.vectorize(lambda x: Fraction(int(x), 2) if not isinstance(x, Fraction) else x / 2,
                        otypes=[object])(c)


def _as_vec(m: np.ndarray) -> dict:
    return {(int(i), int(j)): m[i, j] for i, j in zip(*np.nonzero(m))}


def matrix_lie_span_dim(gens) -> int:
    """Dimension of the Lie algebra generated by ``gens`` (exact)."""
    rs = RowSpace()
    basis = []
    for g in gens:
        g = np.asarray(g, dtype=object)
        if rs.add(_as_vec(g)):
            basis.append(g)
    gens = list(basis)
    k = 0
    while k < len(basis):
        for g in gens:
            c = matrix_bracket(basis[k], g)
            if rs.add(_as_vec(c)):
                basis.append(c)
        k += 1
    return rs.rank
