"""Regenerate the classification tables by sweeping small cases.

Nothing here is hard-coded: every row is computed from graphs or from the
lookups in :mod:`qclifford.classify`, then rendered with symbolic offsets
inferred from the sweep.
"""
from __future__ import annotations

from .classify import (Base, FieldType, IsoType, LieFamily, LieIsoType, Tail, algebra_iso,
                       canonical, clifford_report, dim_of, en_report, lie_iso)
from .gf2core import QType, QuadClass, QuadSpace, classify_quadratic
from .graphs import family
from .lie import identify_K

FIELDS = (FieldType.I, FieldType.II, FieldType.III)


def _half(offset: int, var: str) -> str:
    if offset == 0:
        return f"{var}/2"
    sign = "+" if offset > 0 else "-"
    return f"({var}{sign}{abs(offset)})/2"


def _copies(offset: int) -> str:
    if offset == 0:
        return "2^{r}"
    sign = "+" if offset > 0 else "-"
    return f"2^{{r{sign}{abs(offset)}}}"


_TAIL_TXT = {Tail.NONE: "", Tail.GAUSS: " ⊗ F[i]", Tail.QUAT: " ⊗ H"}


# -- tables 1 and 5: lookups with symbolic n, r ------------------------------

_ROWS = [(QType.PLUS, 0), (QType.MINUS, 0), (QType.ZERO, 1)]


def _samples(t: QType, parity: int) -> list[QuadClass]:
    ns = (4, 6) if parity == 0 else (5, 7)
    return [QuadClass(n, r, t) for n in ns for r in (1, 2)]


def table1_alg(c: QuadClass, ft: FieldType) -> str:
    iso = algebra_iso(c, ft)
    m_off = 2 * iso.tensor_m2_count - c.n_bar
    return f"(M(2,F)^{{⊗{_half(m_off, 'n')}}}{_TAIL_TXT[iso.tail]})^{{{_copies(iso.copies_log2 - c.r)}}}"


def table1_rows() -> list[tuple[str, str, str, str]]:
    rows = []
    for ft in FIELDS:
        for t, par in _ROWS:
            forms = {table1_alg(c, ft) for c in _samples(t, par)}
            if len(forms) != 1:
                raise AssertionError(f"lookup is not affine in n, r: {forms}")
            rows.append((f"n={par} (mod 2)", t.value, ft.value, forms.pop()))
    return rows


def _lie_sym(t: LieIsoType, c: QuadClass) -> str:
    off = 2 * (t.size.bit_length() - 1) - c.n_bar
    return f"{t.family.value}(2^{{{_half(off, 'n')}}},{t.base.value})^{{{_copies(t.copies_log2 - c.r)}}}"


def table5_rows() -> list[tuple[str, ...]]:
    rows = []
    for ft in FIELDS:
        for t, par in _ROWS:
            c = _samples(t, par)[0]
            gf, gq = lie_iso(c, ft)
            rows.append((f"n={par} (mod 2)", t.value, ft.value, table1_alg(c, ft),
                         _lie_sym(gf, c), _lie_sym(gq, c)))
    return rows


# -- table 2: types of Cl(p, q) -----------------------------------------------

def table2_grid(size: int = 5) -> list[list[str]]:
    def cell(p: int, q: int) -> str:
        if p + q == 0:
            return classify_quadratic(QuadSpace(0, ())).q_type.value
        return clifford_report(p, q)[0].q_type.value

    return [[cell(p, q) for q in range(size)] for p in range(size)]


# -- table 3: Cl(p, q) over a type III field ------------------------------------

_MAT_BASE = {Tail.NONE: "F", Tail.GAUSS: "F[i]", Tail.QUAT: "H"}


def _cl_form(iso: IsoType, pq: int) -> tuple[str, int]:
    off = 2 * iso.tensor_m2_count - pq
    expo = "(p+q)/2" if off == 0 else f"(p+q{'+' if off > 0 else '-'}{abs(off)})/2"
    core = f"M(2^{{{expo}}},{_MAT_BASE[iso.tail]})"
    return (core if iso.copies_log2 == 0 else f"{core}^{{{2 ** iso.copies_log2}}}"), off


def table3_rows(bound: int = 8) -> list[tuple[str, str, str]]:
    by_res: dict[int, set[tuple[str, str]]] = {}
    for p in range(bound + 1):
        for q in range(bound + 1):
            if p + q == 0:
                continue
            c, iso = clifford_report(p, q, FieldType.III)
            form, _ = _cl_form(iso, p + q)
            by_res.setdefault((p - q) % 8, set()).add((c.q_type.value, form))
    groups: dict[tuple[str, str], list[int]] = {}
    for res in sorted(by_res):
        entries = by_res[res]
        if len(entries) != 1:
            raise AssertionError(f"residue {res} is not uniform: {entries}")
        groups.setdefault(next(iter(entries)), []).append(res)
    return [(",".join(map(str, rs)), t, form) for (t, form), rs in groups.items()]


# -- table 4: C(E_n) --------------------------------------------------------------

def table4_rows(lo: int = 6, hi: int = 13) -> list[tuple[str, str, str, str]]:
    rows = []
    for n in sorted(range(lo, hi + 1), key=lambda n: n % 8):
        grouped: dict[tuple[str, str], list[str]] = {}
        for ft in FIELDS:
            c, iso = en_report(n, ft)
            off = 2 * iso.tensor_m2_count - n
            alg = f"M(2,F)^{{⊗{_half(off, 'n')}}}{_TAIL_TXT[iso.tail]}"
            if iso.copies_log2:
                alg = f"({alg})^{{{2 ** iso.copies_log2}}}"
            grouped.setdefault((c.q_type.value, alg), []).append(ft.value)
        for (t, alg), fts in grouped.items():
            rows.append((f"n={n % 8} (mod 8)", t, ", ".join(fts), alg))
    return rows


# -- table 6: A, D, E families --------------------------------------------------

def _so_dim_text(off: int, copies_log2: int) -> str:
    var = "n" if off == 0 else f"n{'+' if off > 0 else '-'}{abs(off)}"
    if copies_log2 == 1 and off == 0:
        return "n(n-1)"
    base = f"binom({var},2)"
    return base if copies_log2 == 0 else f"{2 ** copies_log2}*{base}"


def _family_row(name: str, ns: range) -> tuple[str, str, str]:
    reports = {n: identify_K(family(name, n)) for n in ns}
    top = max(ns)
    ref = reports[top].full_type
    if ref is None or ref.family is not LieFamily.so:
        raise AssertionError(f"{name}_{top} not identified as an so family")
    off = ref.size - top
    for n, rep in reports.items():
        want = LieIsoType(LieFamily.so, n + off, Base.F, ref.copies_log2)
        if rep.full_type is None or canonical(rep.full_type) != canonical(want):
            raise AssertionError(f"{name}_{n}: {rep.full_type} vs {want}")
        if rep.closure.dim != dim_of(want):
            raise AssertionError(f"{name}_{n}: closure {rep.closure.dim} vs {dim_of(want)}")
    var = "n" if off == 0 else f"n{'+' if off > 0 else '-'}{abs(off)}"
    single = f"so({var},F)"
    label = " ⊕ ".join([single] * (2 ** ref.copies_log2))
    return f"{name}_n", label, _so_dim_text(off, ref.copies_log2)


def table6_rows() -> list[tuple[str, str, str]]:
    from .classify import render_lie
    rows = [_family_row("A", range(2, 9)), _family_row("D", range(4, 9))]
    for n in (6, 7, 8):
        rep = identify_K(family("E", n))
        if rep.full_type is None:
            raise AssertionError(f"E_{n} not identified")
        rows.append((f"E_{n}", render_lie(rep.full_type), str(rep.closure.dim)))
    return rows


def table_rows(which: int):
    return {1: table1_rows, 2: table2_grid, 3: table3_rows, 4: table4_rows,
            5: table5_rows, 6: table6_rows}[which]()


HEADERS = {
    1: ("dim V", "type", "field", "algebra"),
    3: ("p-q (mod 8)", "type", "Cl(p,q)"),
    4: ("dim V", "type", "field", "C(E_n)"),
    5: ("dim V", "type", "field", "C(V,Q)", "g(V,f)", "g(V,Q)"),
    6: ("graph", "K", "dimension"),
}


def render_table(which: int) -> str:
    rows = table_rows(which)
    if which == 2:
        lines = ["p\\q | " + " ".join(str(q) for q in range(len(rows[0])))]
        lines += [f"{p:<3} | " + " ".join(r) for p, r in enumerate(rows)]
        return "\n".join(lines) + "\n"
    table = [HEADERS[which]] + [tuple(r) for r in rows]
    widths = [max(len(r[k]) for r in table) for k in range(len(table[0]))]
    out = [" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(out) + "\n"
