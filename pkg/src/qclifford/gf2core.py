"""Linear and quadratic algebra over GF(2).

Vectors are Python-int bitsets wrapped in :class:`BitVec`.  A
:class:`QuadSpace` stores the Gram matrix of the (non-symmetric) bilinear
form ``g`` row by row; ``Q(v) = g(v, v)`` and ``f(u, v) = g(u, v) + g(v, u)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels

MAX_DIM = 4096
ENUM_DIM = 20


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVec:
    bits: int
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("negative dimension")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"bits {self.bits:#x} do not fit in dimension {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> "BitVec":
        return cls(0, dim)

    @classmethod
    def unit(cls, i: int, dim: int) -> "BitVec":
        return cls(1 << i, dim)

    @classmethod
    def from_indices(cls, idx: Iterable[int], dim: int) -> "BitVec":
        b = 0
        for i in idx:
            b ^= 1 << i
        return cls(b, dim)

    @classmethod
    def from_list(cls, coords: Sequence[int]) -> "BitVec":
        return cls(sum((c & 1) << i for i, c in enumerate(coords)), len(coords))

    def indices(self) -> list[int]:
        out, b = [], self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.dim)]

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "BitVec") -> "BitVec":
        _same_dim(self, other)
        return BitVec(self.bits ^ other.bits, self.dim)

    def __bool__(self) -> bool:
        return self.bits != 0


def _same_dim(u: BitVec, v: BitVec) -> None:
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")


@dataclass(frozen=True)
class QuadSpace:
    """A GF(2) space with bilinear form ``g`` on a fixed basis.

    ``gram_rows[i]`` has bit ``j`` set iff ``gram[i][j] = 1``.
    """

    dim: int
    gram_rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension {self.dim} outside 0..{MAX_DIM}")
        if len(self.gram_rows) != self.dim:
            raise ValueError("gram needs one row per basis vector")
        for row in self.gram_rows:
            if row < 0 or row >> self.dim:
                raise ValueError("gram row wider than the space")

    @classmethod
    def from_matrix(cls, gram) -> "QuadSpace":
        m = np.asarray(gram, dtype=np.int64) & 1
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            if m.size == 0:
                return cls(0, ())
            raise ValueError("gram must be square")
        rows = tuple(sum(int(x) << j for j, x in enumerate(r)) for r in m)
        return cls(m.shape[0], rows)

    @classmethod
    def zero_form(cls, dim: int) -> "QuadSpace":
        return cls(dim, (0,) * dim)

    @property
    def gram(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.uint8)
        for i, row in enumerate(self.gram_rows):
            for j in BitVec(row, self.dim).indices():
                out[i, j] = 1
        return out

    @cached_property
    def q_diag(self) -> tuple[int, ...]:
        return tuple((row >> i) & 1 for i, row in enumerate(self.gram_rows))

    @cached_property
    def f_rows(self) -> tuple[int, ...]:
        """Rows of the alternating Gram matrix ``gram + gram^T``."""
        cols = [0] * self.dim
        for i, row in enumerate(self.gram_rows):
            b = row
            while b:
                low = b & -b
                cols[low.bit_length() - 1] |= 1 << i
                b ^= low
        return tuple(r ^ c for r, c in zip(self.gram_rows, cols))

    def basis(self) -> list[BitVec]:
        return [BitVec.unit(i, self.dim) for i in range(self.dim)]

    # int-level helpers used by the other modules
    def g_bits(self, u: int, w: int) -> int:
        acc = 0
        b = u
        while b:
            low = b & -b
            acc ^= self.gram_rows[low.bit_length() - 1] & w
            b ^= low
        return parity(acc)

    def q_bits(self, v: int) -> int:
        return self.g_bits(v, v)

    def f_image(self, v: int) -> int:
        """The functional ``f(v, .)`` as a bitmask."""
        acc = 0
        b = v
        while b:
            low = b & -b
            acc ^= self.f_rows[low.bit_length() - 1]
            b ^= low
        return acc

    def f_bits(self, u: int, w: int) -> int:
        return parity(self.f_image(u) & w)


def _check(space: QuadSpace, *vs: BitVec) -> None:
    for v in vs:
        if v.dim != space.dim:
            raise ValueError(f"dimension mismatch: vector {v.dim}, space {space.dim}")


def eval_g(space: QuadSpace, u: BitVec, v: BitVec) -> int:
    _check(space, u, v)
    return space.g_bits(u.bits, v.bits)


def eval_Q(space: QuadSpace, v: BitVec) -> int:
    _check(space, v)
    return space.q_bits(v.bits)


def eval_f(space: QuadSpace, u: BitVec, v: BitVec) -> int:
    _check(space, u, v)
    return space.f_bits(u.bits, v.bits)


def _packed(rows: Sequence[int], dim: int) -> np.ndarray:
    return kernels.pack_rows(rows, dim)


def radical_f(space: QuadSpace) -> list[BitVec]:
    if space.dim == 0:
        return []
    null = kernels.nullspace(_packed(space.f_rows, space.dim), space.dim)
    return [BitVec(kernels.unpack_int(row), space.dim) for row in null]


def radical_Q(space: QuadSpace) -> list[BitVec]:
    rad = radical_f(space)
    # Q is additive on Rad(f), so its kernel there has codimension <= 1.
    odd = [v for v in rad if space.q_bits(v.bits)]
    if not odd:
        return rad
    pivot = odd[0]
    return [v ^ pivot if space.q_bits(v.bits) else v for v in rad if v is not pivot]


@dataclass(frozen=True)
class SymplecticDecomposition:
    pairs: tuple[tuple[BitVec, BitVec], ...]
    radical_basis: tuple[BitVec, ...]
    aniso_radical: BitVec | None

    def vectors(self) -> list[BitVec]:
        out = [x for p in self.pairs for x in p] + list(self.radical_basis)
        if self.aniso_radical is not None:
            out.append(self.aniso_radical)
        return out


def symplectic_decompose(space: QuadSpace) -> SymplecticDecomposition:
    """Hyperbolic pairs plus a basis of Rad(f).

    Pivot rule: the lowest working vector with a nonzero f-row pairs with the
    lowest vector it meets; every later vector is projected off that pair.
    """
    n = space.dim
    if n == 0:
        return SymplecticDecomposition((), (), None)
    F = _packed(space.f_rows, n)
    C = _packed([1 << i for i in range(n)], n)
    q = np.asarray(space.q_diag, dtype=np.uint8)
    pairs_idx, rad_idx = kernels.symplectic(F, q, C)

    def vec(i):
        return BitVec(kernels.unpack_int(C[i]), n)

    pairs = tuple((vec(i), vec(j)) for i, j in pairs_idx)
    rad = [(vec(k), int(q[k])) for k in rad_idx]
    aniso = None
    basis = []
    for v, qv in rad:
        if qv and aniso is None:
            aniso = v
        elif qv:
            basis.append(v ^ aniso)
        else:
            basis.append(v)
    return SymplecticDecomposition(pairs, tuple(basis), aniso)


class QType(enum.Enum):
    PLUS = "+"
    MINUS = "-"
    ZERO = "0"

    def __mul__(self, other: "QType") -> "QType":
        if QType.ZERO in (self, other):
            return QType.ZERO
        return QType.PLUS if self is other else QType.MINUS


@dataclass(frozen=True)
class QuadClass:
    n_bar: int
    r: int
    q_type: QType

    def __str__(self) -> str:
        return f"({self.n_bar}, {self.r}, {self.q_type.value})"


def classify_decomposition(space: QuadSpace, dec: SymplecticDecomposition) -> QuadClass:
    rad_q = len(dec.radical_basis)
    r = rad_q + (dec.aniso_radical is not None)
    if dec.aniso_radical is not None:
        t = QType.ZERO
    else:
        arf = 0
        for a, b in dec.pairs:
            arf ^= space.q_bits(a.bits) & space.q_bits(b.bits)
        t = QType.MINUS if arf else QType.PLUS
    return QuadClass(space.dim - rad_q, r, t)


def classify_quadratic(space: QuadSpace) -> QuadClass:
    return classify_decomposition(space, symplectic_decompose(space))


def change_basis(space: QuadSpace, M) -> QuadSpace:
    """Gram matrix of ``g`` on the basis given by the columns of ``M``."""
    M = np.asarray(M, dtype=np.int64) & 1
    G = space.gram.astype(np.int64)
    return QuadSpace.from_matrix((M.T @ G @ M) & 1)


def gf2_rank(rows: Sequence[int], dim: int) -> int:
    if not rows or dim == 0:
        return 0
    return dim - len(kernels.nullspace(_packed(rows, dim), dim))


def random_invertible(dim: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        M = rng.integers(0, 2, size=(dim, dim), dtype=np.int64)
        rows = [sum(int(x) << j for j, x in enumerate(r)) for r in M]
        if gf2_rank(rows, dim) == dim:
            return M


def random_basis_change(space: QuadSpace, seed) -> QuadSpace:
    rng = np.random.default_rng(seed)
    return change_basis(space, random_invertible(space.dim, rng))


def direct_sum(*spaces: QuadSpace) -> QuadSpace:
    rows, offset = [], 0
    for s in spaces:
        rows.extend(r << offset for r in s.gram_rows)
        offset += s.dim
    return QuadSpace(offset, tuple(rows))


def q_values(space: QuadSpace) -> np.ndarray:
    """Q of every vector, indexed by bitmask (exhaustive, dim <= 20)."""
    if space.dim > ENUM_DIM:
        raise ValueError(f"exhaustive enumeration limited to dim <= {ENUM_DIM}")
    if space.dim == 0:
        return np.zeros(1, dtype=np.uint8)
    return kernels.q_table(np.asarray(space.q_diag, dtype=np.uint8),
                           np.asarray(space.f_rows, dtype=np.uint64))


# planes used throughout the tests and the explicit models
PLUS_PLANE = QuadSpace(2, (0b10, 0b00))
MINUS_PLANE = QuadSpace(2, (0b11, 0b10))
ANISO_LINE = QuadSpace(1, (1,))
ISO_LINE = QuadSpace(1, (0,))
