"""Generalized spin representations.

Left multiplication by a monomial permutes the monomial basis up to sign, so
operators are stored as :class:`SignedPermOp` (``op(e_w) = sign[w] e_{perm[w]}``)
instead of dense ``2^n x 2^n`` matrices.

The second half holds explicit matrix models of the nondegenerate classes
over ``GF(p)`` (entries ``a + b t`` with ``t^2 = -1`` kept formal) or over the
rationals (``p = 0``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from .algebra import AlgebraContext
from .classify import FieldType, algebra_iso, dim_of
from .errors import DisconnectedGraphError, SpinPreconditionError
from .exact import RowSpace
from .gf2core import QType, QuadClass
from .graphs import ColoredGraph, build_space

SPIN_CAP = 20


# ---------------------------------------------------------------------------
# signed permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SignedPermOp:
    perm: np.ndarray
    sign: np.ndarray

    @property
    def size(self) -> int:
        return self.perm.shape[0]

    @classmethod
    def identity(cls, size: int) -> "SignedPermOp":
        return cls(np.arange(size, dtype=np.int64), np.ones(size, dtype=np.int64))

    def compose(self, other: "SignedPermOp") -> "SignedPermOp":
        """``self after other``."""
        return SignedPermOp(self.perm[other.perm], other.sign * self.sign[other.perm])

    __matmul__ = compose

    def scaled(self, c) -> "SignedPermOp":
        return SignedPermOp(self.perm, self.sign * c)

    def __neg__(self) -> "SignedPermOp":
        return self.scaled(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermOp):
            return NotImplemented
        return bool(np.array_equal(self.perm, other.perm) and np.all(self.sign == other.sign))

    __hash__ = None

    def apply(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for w, x in vec.items():
            k = int(self.perm[w])
            out[k] = out.get(k, 0) + x * self.sign[w]
        return {k: x for k, x in out.items() if x}

    def to_dict(self) -> dict:
        return {"perm": [int(x) for x in self.perm], "sign": [str(x) for x in self.sign]}


def combo_is_zero(terms: Sequence[tuple[int, SignedPermOp]]) -> bool:
    """Whether ``sum c_k * op_k`` is the zero operator (exact)."""
    if not terms:
        return True
    size = terms[0][1].size
    cols = np.concatenate([np.arange(size, dtype=np.int64)] * len(terms))
    rows = np.concatenate([op.perm for _, op in terms])
    vals = np.concatenate([op.sign * c for c, op in terms])
    keys = rows * size + cols
    order = np.argsort(keys, kind="stable")
    keys, vals = keys[order], vals[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    sums = np.add.reduceat(vals, starts)
    return bool(np.all(sums == 0))


def _check_spin_graph(g: ColoredGraph) -> None:
    if g.n > SPIN_CAP:
        raise SpinPreconditionError(f"left-regular representation limited to {SPIN_CAP} vertices")
    if not g.all_black():
        raise SpinPreconditionError("white vertex: generators would square to +1")
    if not g.unit_labels():
        raise SpinPreconditionError("non-unit label: generators would not square to -1")


def monomial_op(ctx: AlgebraContext, v: int) -> SignedPermOp:
    """Left multiplication by ``e_v``."""
    n = ctx.dim
    idx = np.arange(1 << n, dtype=np.int64)
    row = 0
    b = v
    while b:
        low = b & -b
        row ^= ctx.space.gram_rows[low.bit_length() - 1]
        b ^= low
    # g(v, w) is linear in w: the parity of w against the xor of v's Gram rows
    par = (np.bitwise_count(idx.astype(np.uint64) & np.uint64(row)) & 1).astype(np.int64)
    sign = 1 - 2 * par
    if any(x != 1 for x in ctx.labels):
        lam = np.array([ctx.lam_bits(v & int(w)) for w in idx], dtype=object)
        sign = sign.astype(object) * lam
    return SignedPermOp(idx ^ v, sign)


def left_regular_rep(g: ColoredGraph) -> list[SignedPermOp]:
    _check_spin_graph(g)
    ctx = AlgebraContext.from_graph(g)
    return [monomial_op(ctx, 1 << i) for i in range(g.n)]


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpinReport:
    squares_ok: bool
    edge_anticommute_ok: bool
    nonedge_commute_ok: bool
    berman_ok: bool
    lie_span_dim: int

    @property
    def ok(self) -> bool:
        return self.squares_ok and self.edge_anticommute_ok and self.nonedge_commute_ok and self.berman_ok

    def to_dict(self) -> dict:
        return {"squares_ok": self.squares_ok, "edge_anticommute_ok": self.edge_anticommute_ok,
                "nonedge_commute_ok": self.nonedge_commute_ok, "berman_ok": self.berman_ok,
                "lie_span_dim": self.lie_span_dim}


def berman_holds(x: SignedPermOp, y: SignedPermOp) -> bool:
    """``[x,[x,y]] = -y`` with ``[a,b] = (ab - ba)/2``, scaled by 4."""
    xx = x @ x
    return combo_is_zero([(1, xx @ y), (-2, x @ y @ x), (1, y @ xx), (4, y)])


_COMMUTE = "commute"


def _bracket_op(x: SignedPermOp, y: SignedPermOp):
    """``(xy - yx)/2`` as a SignedPermOp, ``_COMMUTE``, or None when not monomial."""
    xy, yx = x @ y, y @ x
    if np.array_equal(xy.perm, yx.perm):
        if np.all(xy.sign == yx.sign):
            return _COMMUTE
        if np.all(xy.sign == -yx.sign):
            return xy
    return None


def _sparse(terms) -> dict:
    out: dict = {}
    for c, op in terms:
        for w in range(op.size):
            s = op.sign[w]
            if s:
                key = (int(op.perm[w]), w)
                out[key] = out.get(key, 0) + Fraction(c) * Fraction(s)
    return {k: v for k, v in out.items() if v}


def _sparse_mul(a: dict, b: dict) -> dict:
    by_row: dict = {}
    for (i, j), x in b.items():
        by_row.setdefault(i, []).append((j, x))
    out: dict = {}
    for (i, k), x in a.items():
        for j, y in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + x * y
    return {k: v for k, v in out.items() if v}


def _sparse_bracket(a: dict, b: dict) -> dict:
    out = _sparse_mul(a, b)
    for k, v in _sparse_mul(b, a).items():
        out[k] = out.get(k, 0) - v
    return {k: v / 2 for k, v in out.items() if v}


def lie_span_dim(ops: Sequence[SignedPermOp]) -> int:
    """Dimension of the Lie algebra generated by ``ops``.

    Fast path: while every element found is a signed permutation whose support
    is disjoint from the ones already kept, independence is immediate and
    scalar multiples are recognised directly.  Anything else falls back to
    exact sparse elimination.
    """
    basis: list[SignedPermOp] = []
    by_perm: dict[bytes, SignedPermOp] = {}
    occupied: set[int] = set()

    def try_add(op: SignedPermOp) -> bool | None:
        key = op.perm.tobytes()
        old = by_perm.get(key)
        nz = op.sign != 0
        if not np.any(nz):
            return False
        if old is not None:
            if not np.array_equal(nz, old.sign != 0):
                return None
            k = int(np.flatnonzero(nz)[0])
            # scalar multiple iff a * old[k] == old * a[k] entrywise
            return False if np.all(op.sign * old.sign[k] == old.sign * op.sign[k]) else None
        cells = (op.perm * op.size + np.arange(op.size))[nz].tolist()
        if occupied.intersection(cells):
            return None
        occupied.update(cells)
        by_perm[key] = op
        basis.append(op)
        return True

    gens = []
    for op in ops:
        res = try_add(op)
        if res is None:
            return _slow_span_dim(ops)
        if res:
            gens.append(op)
    k = 0
    while k < len(basis):
        for g in gens:
            br = _bracket_op(basis[k], g)
            if br is None:
                return _slow_span_dim(ops)
            if br is _COMMUTE:
                continue
            if try_add(br) is None:
                return _slow_span_dim(ops)
        k += 1
    return len(basis)


def _slow_span_dim(ops: Sequence[SignedPermOp]) -> int:
    rs = RowSpace()
    basis = []
    for op in ops:
        v = _sparse([(1, op)])
        if rs.add(v):
            basis.append(v)
    gens = list(basis)
    k = 0
    while k < len(basis):
        for g in gens:
            c = _sparse_bracket(basis[k], g)
            if rs.add(c):
                basis.append(c)
        k += 1
    return rs.rank


def verify_spin(ops: Sequence[SignedPermOp], g: ColoredGraph) -> SpinReport:
    if len(ops) != g.n:
        raise ValueError("need one operator per vertex")
    minus_id = -SignedPermOp.identity(ops[0].size) if ops else None
    squares = all(op @ op == minus_id for op in ops)
    anti = comm = berman = True
    for i in range(g.n):
        for j in range(i + 1, g.n):
            x, y = ops[i], ops[j]
            if g.adjacent(i, j):
                anti &= combo_is_zero([(1, x @ y), (1, y @ x)])
                berman &= berman_holds(x, y) and berman_holds(y, x)
            else:
                ok = combo_is_zero([(1, x @ y), (-1, y @ x)])
                comm &= ok
                berman &= ok
    return SpinReport(squares, anti, comm, berman, lie_span_dim(ops))


def check_spin_graph(g: ColoredGraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("spin check needs a connected graph")
    _check_spin_graph(g)


# ---------------------------------------------------------------------------
# explicit matrix models over GF(p) and the rationals
# ---------------------------------------------------------------------------


class Mat:
    """Square matrix ``re + t * im`` with ``t^2 = -1``; entries mod ``p`` (``p = 0``: integers)."""

    __slots__ = ("re", "im", "p")

    def __init__(self, re, im=None, p: int = 0):
        self.re = np.asarray(re, dtype=object)
        self.im = np.zeros_like(self.re) if im is None else np.asarray(im, dtype=object)
        self.p = p
        if p:
            self.re = self.re % p
            self.im = self.im % p

    def __matmul__(self, o: "Mat") -> "Mat":
        return Mat(self.re @ o.re - self.im @ o.im, self.re @ o.im + self.im @ o.re, self.p)

    def __neg__(self) -> "Mat":
        return Mat(-self.re, -self.im, self.p)

    def __eq__(self, o) -> bool:
        return bool(np.all(self.re == o.re) and np.all(self.im == o.im))

    __hash__ = None

    def kron(self, o: "Mat") -> "Mat":
        return Mat(np.kron(self.re, o.re) - np.kron(self.im, o.im),
                   np.kron(self.re, o.im) + np.kron(self.im, o.re), self.p)

    def conj_transpose(self) -> "Mat":
        return Mat(self.re.T, -self.im.T, self.p)

    def scaled(self, c: int) -> "Mat":
        return Mat(self.re * c, self.im * c, self.p)

    @property
    def n(self) -> int:
        return self.re.shape[0]

    @classmethod
    def eye(cls, n: int, p: int) -> "Mat":
        return cls(np.eye(n, dtype=np.int64).astype(object), None, p)


def field_type_of(p: int) -> FieldType:
    if p == 0:
        return FieldType.III
    return FieldType.I if p % 4 == 1 else FieldType.II


def _sqrt_minus_one(p: int) -> int:
    return next(x for x in range(2, p) if (x * x + 1) % p == 0)


def _two_squares_minus_one(p: int) -> tuple[int, int]:
    return next((x, y) for x in range(p) for y in range(p) if (x * x + y * y + 1) % p == 0)


def _plane(kind: QType, p: int) -> tuple[Mat, Mat]:
    if kind is QType.PLUS:
        return Mat([[0, 1], [1, 0]], p=p), Mat([[1, 0], [0, -1]], p=p)
    if p == 0:
        return (Mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
                Mat([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]))
    e1 = Mat([[0, 1], [-1, 0]], p=p)
    if p % 4 == 1:
        # diag(i, -i): a scalar i would commute with e1
        return e1, Mat([[0, 0], [0, 0]], [[1, 0], [0, -1]], p)
    x, y = _two_squares_minus_one(p)
    return e1, Mat([[x, -y], [-y, -x]], p=p)


def _check_model_args(c: QuadClass, p: int) -> None:
    if p != 0 and (p < 3 or p > 97 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))):
        raise ValueError("p must be an odd prime <= 97, or 0 for the rationals")
    if c.r != 0 or c.q_type is QType.ZERO or c.n_bar % 2 or c.n_bar > 8:
        raise ValueError(f"explicit models cover nondegenerate classes with n_bar <= 8, got {c}")


def model_q_values(c: QuadClass) -> list[int]:
    """Q of each generator in :func:`plane_models` order."""
    out = []
    planes = c.n_bar // 2
    for k in range(planes):
        minus = c.q_type is QType.MINUS and k == planes - 1
        out += [1, 1] if minus else [0, 0]
    return out


def plane_models(c: QuadClass, p: int) -> list[Mat]:
    """Generators ``a_1, b_1, a_2, b_2, ...`` of the hyperbolic-pair basis.

    The class is realised as ``(+ plane)^{k-1} (+) (last plane)`` and each
    plane model sits in its own tensor slot.
    """
    _check_model_args(c, p)
    planes = c.n_bar // 2
    kinds = [QType.PLUS] * planes
    if c.q_type is QType.MINUS:
        kinds[-1] = QType.MINUS
    models = [_plane(k, p) for k in kinds]
    eyes = [Mat.eye(m[0].n, p) for m in models]
    gens = []
    for k, (a, b) in enumerate(models):
        for m in (a, b):
            parts = eyes[:k] + [m] + eyes[k + 1:]
            gens.append(reduce(Mat.kron, parts))
    return gens


def _evaluate(m: Mat, p: int) -> np.ndarray:
    if p == 0:
        if np.any(m.im != 0):
            raise ValueError("formal t in a rational model")
        return m.re
    if not np.any(m.im != 0):
        return m.re
    return (m.re + m.im * _sqrt_minus_one(p)) % p


class _ModPRows:
    """Incremental echelon basis of vectors over GF(p)."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, list[int]] = {}

    def add(self, vec: list[int]) -> bool:
        p = self.p
        v = [x % p for x in vec]
        for col, x in enumerate(v):
            if not x:
                continue
            row = self.rows.get(col)
            if row is None:
                inv = pow(x, -1, p)
                self.rows[col] = [y * inv % p for y in v]
                return True
            v = [(a - x * b) % p for a, b in zip(v, row)]
        return False


class _RationalRows:
    def __init__(self):
        self.rs = RowSpace()

    def add(self, vec: list[int]) -> bool:
        return self.rs.add({k: x for k, x in enumerate(vec) if x})


def span_dim(gens: Sequence[Mat], p: int) -> int:
    """Dimension over the prime field of the unital algebra generated by ``gens``."""
    n = gens[0].n if gens else 1
    rows = _ModPRows(p) if p else _RationalRows()
    one = Mat.eye(n, p)
    rows.add([int(x) for x in _evaluate(one, p).ravel()])
    frontier, r = [one], 1
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = w @ g
                if rows.add([int(x) for x in _evaluate(cand, p).ravel()]):
                    r += 1
                    nxt.append(cand)
        frontier = nxt
    return r


def expected_span_dim(c: QuadClass, p: int) -> int:
    return dim_of(algebra_iso(c, field_type_of(p)))


def transpose_check(c: QuadClass, p: int, q_signs: Sequence[int] | None = None) -> bool:
    """Whether transpose-plus-conjugation acts as ``tau_Q`` on words of length <= 3.

    ``q_signs`` overrides the generator Q-values (negative controls).
    """
    gens = plane_models(c, p)
    qs = list(model_q_values(c)) if q_signs is None else list(q_signs)
    # Q of the xor of distinct letters: Q values add, f adds 1 only within a pair
    def q_of(word):
        mask = 0
        for k in word:
            mask ^= 1 << k
        q = sum(qs[k] for k in range(len(gens)) if mask >> k & 1)
        q += sum(1 for k in range(0, len(gens), 2) if mask >> k & 1 and mask >> (k + 1) & 1)
        return q & 1

    if not gens:
        return True
    words, layer = [()], [()]
    for _ in range(3):
        layer = [w + (k,) for w in layer for k in range(len(gens))]
        words += layer
    for word in words:
        m = reduce(Mat.__matmul__, (gens[k] for k in word), Mat.eye(gens[0].n, p))
        target = -m if q_of(word) else m
        if not m.conj_transpose() == target:
            return False
    return True
