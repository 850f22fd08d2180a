"""Exact sparse row echelon form over the rationals.

A vector is a dict ``key -> Fraction`` with no zero values.  Keys only need
to be totally ordered; the pivot of a row is its smallest key.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping


def _axpy(dst: dict, coef: Fraction, src: Mapping) -> None:
    for k, x in src.items():
        y = dst.get(k, 0) - coef * x
        if y:
            dst[k] = y
        else:
            dst.pop(k, None)


class RowSpace:
    """Incrementally maintained echelon basis; ``add`` reports independence."""

    def __init__(self):
        self._rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        done: dict = {}
        while v:
            p = min(v)
            row = self._rows.get(p)
            if row is None:
                done[p] = v.pop(p)
                continue
            _axpy(v, v[p], row)
        return done

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping) -> bool:
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        self._rows[p] = {k: x / lead for k, x in r.items()}
        return True


def rank(vectors) -> int:
    rs = RowSpace()
    for v in vectors:
        rs.add(v)
    return rs.rank
