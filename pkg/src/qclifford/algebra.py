"""The twisted group algebra over the rationals.

Basis monomials ``e_v`` are indexed by bitmasks ``v``; the product is
``e_v e_w = (-1)^{g(v,w)} Lambda(v,w) e_{v^w}`` with
``Lambda(v,w) = prod_{x in v & w} lambda_x``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import GraphFormatError
from .gf2core import BitVec, QuadSpace, parity
from .graphs import ColoredGraph, build_space

MAX_PRODUCT_TERMS = 1 << 16
CENTER_DIM = 20


@dataclass(frozen=True)
class AlgebraContext:
    space: QuadSpace
    labels: tuple[Fraction, ...]
    names: tuple[str, ...] | None = None
    _lam_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(self.labels) != self.space.dim:
            raise ValueError("need one label per basis vector")
        object.__setattr__(self, "labels", tuple(Fraction(x) for x in self.labels))
        if any(x == 0 for x in self.labels):
            raise ValueError("labels must be nonzero")

    @classmethod
    def from_graph(cls, g: ColoredGraph) -> "AlgebraContext":
        space, labels = build_space(g)
        return cls(space, labels, g.names)

    @classmethod
    def unit(cls, space: QuadSpace) -> "AlgebraContext":
        return cls(space, (Fraction(1),) * space.dim)

    @property
    def dim(self) -> int:
        return self.space.dim

    def lam_bits(self, common: int) -> Fraction:
        val = self._lam_cache.get(common)
        if val is None:
            val = Fraction(1)
            b = common
            while b:
                low = b & -b
                val *= self.labels[low.bit_length() - 1]
                b ^= low
            self._lam_cache[common] = val
        return val

    def mono_product(self, v: int, w: int) -> tuple[Fraction, int]:
        """``e_v e_w`` as (coefficient, index)."""
        c = self.lam_bits(v & w)
        return (-c if self.space.g_bits(v, w) else c), v ^ w


class AlgebraElement:
    """Sparse rational combination of monomials; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None):
        clean = {}
        for k, x in (terms or {}).items():
            x = Fraction(x)
            if x:
                clean[int(k)] = x
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({0: 1})

    @classmethod
    def monomial(cls, v: int | BitVec, coeff: Fraction | int = 1) -> "AlgebraElement":
        return cls({v.bits if isinstance(v, BitVec) else v: coeff})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self._terms)
        for k, x in other._terms.items():
            out[k] = out.get(k, 0) + x
        return AlgebraElement(out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({k: -x for k, x in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "AlgebraElement":
        return AlgebraElement({k: c * x for k, x in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)})"


def lambda_(ctx: AlgebraContext, v: BitVec, w: BitVec) -> Fraction:
    if v.dim != ctx.dim or w.dim != ctx.dim:
        raise ValueError("dimension mismatch")
    return ctx.lam_bits(v.bits & w.bits)


def multiply(ctx: AlgebraContext, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if len(a) * len(b) >= MAX_PRODUCT_TERMS:
        raise ValueError(f"product of {len(a)} x {len(b)} terms exceeds the {MAX_PRODUCT_TERMS} cap")
    out: dict[int, Fraction] = {}
    for v, x in a._terms.items():
        for w, y in b._terms.items():
            c, k = ctx.mono_product(v, w)
            out[k] = out.get(k, 0) + c * x * y
    return AlgebraElement(out)


def product(ctx: AlgebraContext, factors: Iterable[AlgebraElement]) -> AlgebraElement:
    acc = AlgebraElement.one()
    for f in factors:
        acc = multiply(ctx, acc, f)
    return acc


def bracket(ctx: AlgebraContext, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return (multiply(ctx, a, b) - multiply(ctx, b, a)).scale(Fraction(1, 2))


def tau_H(ctx: AlgebraContext, phi: BitVec, a: AlgebraElement) -> AlgebraElement:
    if phi.dim != ctx.dim:
        raise ValueError("dimension mismatch")
    if not phi.bits:
        raise ValueError("tau_H needs a nonzero functional")
    return AlgebraElement({v: -x if parity(phi.bits & v) else x for v, x in a._terms.items()})


def tau_Q(ctx: AlgebraContext, a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement({v: -x if ctx.space.q_bits(v) else x for v, x in a._terms.items()})


def center_basis(ctx: AlgebraContext) -> list[BitVec]:
    """Every ``v`` with ``f(v, b_i) = 0`` for all basis vectors (i.e. Rad(f))."""
    n = ctx.dim
    if n > CENTER_DIM:
        raise ValueError(f"center enumeration limited to dim <= {CENTER_DIM}")
    idx = np.arange(1 << n, dtype=np.uint64)
    ok = np.ones(1 << n, dtype=bool)
    for row in ctx.space.f_rows:
        ok &= (np.bitwise_count(idx & np.uint64(row)) & 1) == 0
    return [BitVec(int(v), n) for v in np.flatnonzero(ok)]


def ideal_split(ctx: AlgebraContext, r0: BitVec) -> tuple[list[AlgebraElement], list[AlgebraElement]]:
    """Bases of the two ideals cut out by the central idempotents ``(1 +- e_r0)/2``.

    Members are ``e_u (1 +- e_r0) = e_u +- (-1)^{g(u,r0)} e_{u^r0}`` over coset
    representatives ``u`` (bit ``top(r0)`` clear).
    """
    sp = ctx.space
    if r0.dim != ctx.dim:
        raise ValueError("dimension mismatch")
    if not r0.bits:
        raise ValueError("r0 must be nonzero")
    if sp.f_image(r0.bits):
        raise ValueError("r0 is not in Rad(f)")
    if any(x != 1 for x in ctx.labels):
        raise ValueError("ideal_split needs unit labels")
    if sp.q_bits(r0.bits):
        raise ValueError("Q(r0) = 1: e_r0 squares to -1 and gives no rational idempotent")
    top = 1 << (r0.bits.bit_length() - 1)
    plus, minus = [], []
    for u in range(1 << ctx.dim):
        if u & top:
            continue
        s = -1 if sp.g_bits(u, r0.bits) else 1
        plus.append(AlgebraElement({u: 1, u ^ r0.bits: s}))
        minus.append(AlgebraElement({u: 1, u ^ r0.bits: -s}))
    return plus, minus


GRADES = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def grade_of(ctx: AlgebraContext, phi: BitVec, v: int) -> tuple[int, int]:
    """Eigenvalues of ``(-tau_Q, tau_H)`` on ``e_v``."""
    i = 1 if ctx.space.q_bits(v) else -1
    j = -1 if parity(phi.bits & v) else 1
    return i, j


def grading(ctx: AlgebraContext, phi: BitVec) -> dict[tuple[int, int], list[int]]:
    if phi.dim != ctx.dim:
        raise ValueError("dimension mismatch")
    if not phi.bits:
        raise ValueError("grading needs a nonzero functional")
    parts: dict[tuple[int, int], list[int]] = {k: [] for k in GRADES}
    for v in range(1 << ctx.dim):
        parts[grade_of(ctx, phi, v)].append(v)
    return parts


# ---------------------------------------------------------------------------
# literal syntax: "-2 {v1,v2} + 1/3 1 + {v3}"
# ---------------------------------------------------------------------------

_TERM = re.compile(r"\s*(?:\(?([+-]?\d+(?:/\d+)?)\)?\s*)?(\{[^}]*\}|1)\s*\Z")


def format_element(a: AlgebraElement, names: Sequence[str] | None = None) -> str:
    if not a:
        return "0"
    parts = []
    for v, x in a.items():
        mono = "1" if v == 0 else "{" + ",".join(
            (names[i] if names else f"e{i}") for i in BitVec(v, v.bit_length()).indices()) + "}"
        parts.append(mono if x == 1 else f"({x}) {mono}")
    return " + ".join(parts)


def parse_element(text: str, names: Sequence[str]) -> AlgebraElement:
    pos = {nm: i for i, nm in enumerate(names)}
    out: dict[int, Fraction] = {}
    for chunk in text.split("+"):
        if not chunk.strip():
            raise GraphFormatError(f"empty term in {text!r}")
        m = _TERM.match(chunk)
        if not m:
            raise GraphFormatError(f"malformed term {chunk.strip()!r}")
        coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        mono = m.group(2)
        v = 0
        if mono != "1":
            for nm in filter(None, (s.strip() for s in mono[1:-1].split(","))):
                if nm not in pos:
                    raise GraphFormatError(f"unknown vertex {nm!r}")
                v ^= 1 << pos[nm]
        out[v] = out.get(v, 0) + coef
    return AlgebraElement(out)


def word_product(ctx: AlgebraContext, word: Sequence[str]) -> AlgebraElement:
    """Product of vertex generators, e.g. ``["u", "v", "u"]``."""
    names = ctx.names or tuple(f"e{i}" for i in range(ctx.dim))
    pos = {nm: i for i, nm in enumerate(names)}
    acc = AlgebraElement.one()
    for w in word:
        if w not in pos:
            raise GraphFormatError(f"unknown vertex {w!r}")
        acc = multiply(ctx, acc, AlgebraElement.monomial(1 << pos[w]))
    return acc
