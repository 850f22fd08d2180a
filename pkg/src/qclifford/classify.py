"""Isomorphism types of the algebras and of their Lie algebras.

The lookups below are the structure tables for ``C(V, Q)``, ``g(V, f)`` and
``g(V, Q)`` indexed by ``(n_bar, r, type)`` and the field type.  Types are
structural so dimensions can be cross-checked; rendering is separate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .gf2core import QType, QuadClass, classify_quadratic
from .graphs import build_space, family


class FieldType(enum.Enum):
    I = "I"      # -1 is a square
    II = "II"    # -1 is a sum of two squares, not a square
    III = "III"  # neither


class Tail(enum.Enum):
    NONE = "none"
    GAUSS = "F[i]"
    QUAT = "H"


class Base(enum.Enum):
    F = "F"
    F_i = "F[i]"
    H = "H"


class LieFamily(enum.Enum):
    gl = "gl"
    so = "so"
    sp = "sp"
    sl = "sl"
    su = "su"
    sp_H = "sp_H"


@dataclass(frozen=True)
class IsoType:
    """``(M(2,F)^{(x) m2} (x) tail)^{2^copies_log2}``."""

    tensor_m2_count: int
    tail: Tail
    copies_log2: int


@dataclass(frozen=True)
class LieIsoType:
    family: LieFamily
    size: int
    base: Base
    copies_log2: int = 0


def _validate(c: QuadClass) -> None:
    if c.n_bar < 0 or c.r < 0:
        raise ValueError(f"inconsistent class {c}")
    if c.q_type is QType.ZERO:
        if c.n_bar % 2 == 0 or c.r < 1:
            raise ValueError(f"zero type needs odd n_bar and r >= 1, got {c}")
    else:
        if c.n_bar % 2:
            raise ValueError(f"{c.q_type.value} type needs even n_bar, got {c}")
        if c.q_type is QType.MINUS and c.n_bar == 0:
            raise ValueError("minus type needs n_bar >= 2")


def algebra_iso(c: QuadClass, ft: FieldType) -> IsoType:
    _validate(c)
    n, r = c.n_bar, c.r
    if c.q_type is QType.PLUS:
        return IsoType(n // 2, Tail.NONE, r)
    if c.q_type is QType.MINUS:
        if ft is FieldType.III:
            return IsoType((n - 2) // 2, Tail.QUAT, r)
        return IsoType(n // 2, Tail.NONE, r)
    if ft is FieldType.I:
        return IsoType((n - 1) // 2, Tail.NONE, r)
    return IsoType((n - 1) // 2, Tail.GAUSS, r - 1)


def lie_iso(c: QuadClass, ft: FieldType) -> tuple[LieIsoType, LieIsoType]:
    """``(g(V,f), g(V,Q))`` for the given class and field type."""
    _validate(c)
    n, r = c.n_bar, c.r
    L = LieIsoType
    if c.q_type is QType.PLUS:
        k = 2 ** (n // 2)
        return L(LieFamily.gl, k, Base.F, r), L(LieFamily.so, k, Base.F, r)
    if c.q_type is QType.MINUS:
        if ft is FieldType.III:
            k = 2 ** ((n - 2) // 2)
            return L(LieFamily.gl, k, Base.H, r), L(LieFamily.sp_H, k, Base.H, r)
        k = 2 ** (n // 2)
        fam = LieFamily.sp if ft is FieldType.I else LieFamily.so
        return L(LieFamily.gl, k, Base.F, r), L(fam, k, Base.F, r)
    k = 2 ** ((n - 1) // 2)
    if ft is FieldType.I:
        return L(LieFamily.gl, k, Base.F, r), L(LieFamily.sl, k, Base.F, r)
    # the exponent (n-1)/2 also on the su entry of the type-III row; see notes
    return L(LieFamily.gl, k, Base.F_i, r - 1), L(LieFamily.su, k, Base.F_i, r - 1)


_TAIL_DIM = {Tail.NONE: 1, Tail.GAUSS: 2, Tail.QUAT: 4}
_BASE_DIM = {Base.F: 1, Base.F_i: 2, Base.H: 4}


def dim_of(t: IsoType | LieIsoType) -> int:
    """Dimension over the base field ``F``, copies included."""
    if isinstance(t, IsoType):
        return 4 ** t.tensor_m2_count * _TAIL_DIM[t.tail] << t.copies_log2
    k = t.size
    fam = t.family
    if fam is LieFamily.gl:
        d = k * k * _BASE_DIM[t.base]
    elif fam is LieFamily.so:
        d = k * (k - 1) // 2
    elif fam is LieFamily.sp:
        d = k * (k + 1) // 2
    elif fam in (LieFamily.sl, LieFamily.su):
        d = k * k - 1
    else:
        d = k * (2 * k + 1)
    return d << t.copies_log2


# so(4) is two copies of so(3); compare identifications up to that
def canonical(t: LieIsoType) -> LieIsoType:
    if t.family is LieFamily.so and t.size == 4 and t.base is Base.F:
        return LieIsoType(LieFamily.so, 3, Base.F, t.copies_log2 + 1)
    return t


def clifford_report(p: int, q: int, ft: FieldType = FieldType.III) -> tuple[QuadClass, IsoType]:
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 and p + q >= 1")
    space, _ = build_space(family("Cl", p, q))
    c = classify_quadratic(space)
    return c, algebra_iso(c, ft)


def en_report(n: int, ft: FieldType = FieldType.III) -> tuple[QuadClass, IsoType]:
    if n < 6:
        raise ValueError("E_n needs n >= 6")
    space, _ = build_space(family("E", n))
    c = classify_quadratic(space)
    return c, algebra_iso(c, ft)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _power(core: str, copies_log2: int, wrap: bool) -> str:
    if copies_log2 == 0:
        return core
    inner = f"({core})" if wrap else core
    return f"{inner}^{{{2 ** copies_log2}}}"


def render_iso(t: IsoType) -> str:
    core = f"M(2,F)^{{⊗{t.tensor_m2_count}}}"
    if t.tail is not Tail.NONE:
        core += f" ⊗ {t.tail.value}"
    return _power(core, t.copies_log2, True)


def render_lie(t: LieIsoType) -> str:
    core = f"{t.family.value}({t.size},{t.base.value})"
    return _power(core, t.copies_log2, False)


def iso_to_dict(t: IsoType) -> dict:
    return {"m2": t.tensor_m2_count, "tail": t.tail.name, "copies": 2 ** t.copies_log2}


def iso_from_dict(d: dict) -> IsoType:
    return IsoType(d["m2"], Tail[d["tail"]], int(d["copies"]).bit_length() - 1)


def lie_to_dict(t: LieIsoType) -> dict:
    return {"family": t.family.value, "size": t.size, "base": t.base.value,
            "copies": 2 ** t.copies_log2}


def lie_from_dict(d: dict) -> LieIsoType:
    return LieIsoType(LieFamily(d["family"]), d["size"], Base(d["base"]),
                      int(d["copies"]).bit_length() - 1)


def class_report(c: QuadClass, ft: FieldType) -> dict:
    t = algebra_iso(c, ft)
    return {"n": c.n_bar, "r": c.r, "type": c.q_type.value, "field": ft.value,
            "factors": {"m2": t.tensor_m2_count, "tail": t.tail.name},
            "copies": 2 ** t.copies_log2, "dim": dim_of(t)}


def report_iso(doc: dict) -> IsoType:
    return IsoType(doc["factors"]["m2"], Tail[doc["factors"]["tail"]],
                   int(doc["copies"]).bit_length() - 1)
