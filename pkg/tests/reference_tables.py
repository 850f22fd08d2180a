"""Reference values transcribed by hand from the published tables.

Each entry is written in the structural form used by ``qclifford.classify``:
``M(2^k, F)`` is ``IsoType(k, NONE, 0)``, ``M(2^k, H)`` is ``IsoType(k, QUAT, 0)``
and so on.  Exponents are functions of the parameters exactly as printed,
except where a note says otherwise.
"""
from qclifford.classify import FieldType, IsoType, Tail
from qclifford.gf2core import QType

I, II, III = FieldType.I, FieldType.II, FieldType.III
P, M, Z = QType.PLUS, QType.MINUS, QType.ZERO

# type of Q for Cl(p, q), rows p = 0..4, columns q = 0..4
TABLE2 = [
    "+0---",
    "++0--",
    "+++0-",
    "0+++0",
    "-0+++",
]


def table3(p: int, q: int) -> tuple[QType, IsoType]:
    """Cl(p, q) over a type III field by ``p - q mod 8``."""
    s, res = p + q, (p - q) % 8
    if res in (0, 2):
        return P, IsoType(s // 2, Tail.NONE, 0)
    if res in (4, 6):
        return M, IsoType((s - 2) // 2, Tail.QUAT, 0)
    if res == 1:
        return P, IsoType((s - 1) // 2, Tail.NONE, 1)
    if res in (3, 7):
        return Z, IsoType((s - 1) // 2, Tail.GAUSS, 0)
    return M, IsoType((s - 3) // 2, Tail.QUAT, 1)


def table4(n: int, ft: FieldType) -> tuple[QType, IsoType]:
    """C(E_n) by ``n mod 8``.

    The printed ``n = 5`` row for fields of type I and II reads
    ``(M(2,F)^{(x) n/2})^2`` with ``n`` odd; the exponent is taken as
    ``(n-1)/2``, the only value giving dimension ``2^n``.
    """
    res = n % 8
    if res in (0, 2):
        return P, IsoType(n // 2, Tail.NONE, 0)
    if res == 1:
        return P, IsoType((n - 1) // 2, Tail.NONE, 1)
    if res in (3, 7):
        if ft is I:
            return Z, IsoType((n - 1) // 2, Tail.NONE, 1)
        return Z, IsoType((n - 1) // 2, Tail.GAUSS, 0)
    if res in (4, 6):
        if ft is III:
            return M, IsoType((n - 2) // 2, Tail.QUAT, 0)
        return M, IsoType(n // 2, Tail.NONE, 0)
    if ft is III:
        return M, IsoType((n - 3) // 2, Tail.QUAT, 1)
    return M, IsoType((n - 1) // 2, Tail.NONE, 1)


# maximal compact subalgebras: (label, rendered type, dimension)
TABLE6_DIMS = {"E:6": 36, "E:7": 63, "E:8": 120}
