"""Bit-level hot loops over GF(2).

Every kernel exists twice: a pure-numpy version and a numba ``@njit`` version
with identical semantics.  The public names dispatch to numba when it is
importable, unless ``QCLIFFORD_DISABLE_NUMBA`` is set to ``1``/``true``.
Both sets stay reachable as :data:`numpy_impl` and :data:`numba_impl` so the
benchmark and the parity tests can run them side by side.

Bit conventions: a packed row is a ``uint64`` array, bit ``j`` of the row sits
in word ``j >> 6`` at position ``j & 63``.  Small-dimension kernels
(``q_table``, ``closure``) take one ``uint64`` mask per basis vector instead.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_flag = os.environ.get("QCLIFFORD_DISABLE_NUMBA", "").strip().lower()
USE_NUMBA = HAVE_NUMBA and _flag not in ("1", "true", "yes", "on")

ONE = np.uint64(1)


def words_for(nbits: int) -> int:
    return max(1, (nbits + 63) >> 6)


def pack_int(value: int, nwords: int) -> np.ndarray:
    return np.frombuffer(value.to_bytes(nwords * 8, "little"), dtype=np.uint64).copy()


def unpack_int(row: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(row, dtype=np.uint64).tobytes(), "little")


def pack_rows(values, nbits: int) -> np.ndarray:
    w = words_for(nbits)
    out = np.zeros((len(values), w), dtype=np.uint64)
    for i, v in enumerate(values):
        out[i] = pack_int(v, w)
    return out


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _bit_column(rows: np.ndarray, col: int) -> np.ndarray:
    return (rows[:, col >> 6] >> np.uint64(col & 63)) & ONE


def _nullspace_np(rows: np.ndarray, ncols: int) -> np.ndarray:
    R = np.array(rows, dtype=np.uint64, copy=True)
    m, w = R.shape
    pivcols = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        col = _bit_column(R[r:], c)
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        hit = _bit_column(R, c).astype(bool)
        hit[r] = False
        R[hit] ^= R[r]
        pivcols.append(c)
        r += 1
    pivset = set(pivcols)
    free = [c for c in range(ncols) if c not in pivset]
    out = np.zeros((len(free), w), dtype=np.uint64)
    piv = np.asarray(pivcols, dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f >> 6] |= ONE << np.uint64(f & 63)
        if piv.size:
            hits = piv[_bit_column(R[: piv.size], f).astype(bool)]
            for c in hits:
                out[k, c >> 6] |= ONE << np.uint64(c & 63)
    return out


def _symplectic_np(F: np.ndarray, q: np.ndarray, C: np.ndarray):
    """In-place hyperbolic-pair extraction.

    ``F`` holds the alternating form between the working vectors, ``q`` their
    Q-values and ``C`` their coordinates.  Returns ``(pairs, radical)`` as index
    arrays into the rows of ``C``.
    """
    m = F.shape[0]
    alive = np.ones(m, dtype=bool)
    pairs = []
    for i in range(m):
        if not alive[i]:
            continue
        nz = np.flatnonzero(F[i])
        if nz.size == 0:
            continue
        word = int(nz[0])
        x = int(F[i, word])
        j = (word << 6) + ((x & -x).bit_length() - 1)
        Fi, Fj = F[i].copy(), F[j].copy()
        Ci, Cj = C[i].copy(), C[j].copy()
        qi, qj = q[i], q[j]
        alpha = _bit_column(F, j).astype(bool) & alive
        beta = _bit_column(F, i).astype(bool) & alive
        alpha[[i, j]] = False
        beta[[i, j]] = False
        F[alpha] ^= Fi
        F[beta] ^= Fj
        C[alpha] ^= Ci
        C[beta] ^= Cj
        q ^= (alpha & bool(qi)) ^ (beta & bool(qj)) ^ (alpha & beta)
        alive[i] = alive[j] = False
        pairs.append((i, j))
    return np.asarray(pairs, dtype=np.int64).reshape(-1, 2), np.flatnonzero(alive)


def _q_table_np(qdiag: np.ndarray, fmask: np.ndarray) -> np.ndarray:
    n = len(qdiag)
    Q = np.zeros(1 << n, dtype=np.uint8)
    idx = np.arange(1 << n, dtype=np.uint64)
    for i in range(n):
        lo = idx[: 1 << i]
        par = (np.bitwise_count(lo & fmask[i]) & 1).astype(np.uint8)
        Q[1 << i: 2 << i] = Q[: 1 << i] ^ np.uint8(qdiag[i]) ^ par
    return Q


def _closure_np(fmask: np.ndarray, seeds: np.ndarray, n: int) -> np.ndarray:
    seen = np.zeros(1 << n, dtype=bool)
    pts = []
    fim = []
    for s in seeds:
        s = int(s)
        if not seen[s]:
            seen[s] = True
            pts.append(s)
            f = 0
            for i in range(n):
                if s >> i & 1:
                    f ^= int(fmask[i])
            fim.append(f)
    P = np.asarray(pts, dtype=np.uint64)
    Fi = np.asarray(fim, dtype=np.uint64)
    count = len(pts)
    head = 0
    while head < count:
        p, fp = P[head], Fi[head]
        hit = (np.bitwise_count(P[:head] & fp) & 1).astype(bool)
        cand = P[:head][hit] ^ p
        cand_f = Fi[:head][hit] ^ fp
        fresh = ~seen[cand]
        cand, cand_f = cand[fresh], cand_f[fresh]
        if cand.size:
            cand, first = np.unique(cand, return_index=True)
            seen[cand] = True
            P = np.concatenate([P[:count], cand])
            Fi = np.concatenate([Fi[:count], cand_f[first]])
            count = P.size
        head += 1
    return P[:count]


numpy_impl = SimpleNamespace(
    nullspace=_nullspace_np,
    symplectic=_symplectic_np,
    q_table=_q_table_np,
    closure=_closure_np,
)


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _parity(x):
        x ^= x >> np.uint64(32)
        x ^= x >> np.uint64(16)
        x ^= x >> np.uint64(8)
        x ^= x >> np.uint64(4)
        x ^= x >> np.uint64(2)
        x ^= x >> np.uint64(1)
        return x & np.uint64(1)

    @njit(cache=True)
    def _getbit(R, r, c):
        return (R[r, c >> 6] >> np.uint64(c & 63)) & np.uint64(1)

    @njit(cache=True)
    def _nullspace_nb(rows, ncols):
        R = rows.copy()
        m, w = R.shape
        pivcols = np.empty(min(m, ncols), dtype=np.int64)
        ispiv = np.zeros(ncols, dtype=np.bool_)
        r = 0
        for c in range(ncols):
            if r == m:
                break
            p = -1
            for k in range(r, m):
                if _getbit(R, k, c):
                    p = k
                    break
            if p < 0:
                continue
            if p != r:
                for t in range(w):
                    tmp = R[r, t]
                    R[r, t] = R[p, t]
                    R[p, t] = tmp
            for k in range(m):
                if k != r and _getbit(R, k, c):
                    for t in range(w):
                        R[k, t] ^= R[r, t]
            pivcols[r] = c
            ispiv[c] = True
            r += 1
        nfree = ncols - r
        out = np.zeros((nfree, w), dtype=np.uint64)
        k = 0
        for f in range(ncols):
            if ispiv[f]:
                continue
            out[k, f >> 6] |= np.uint64(1) << np.uint64(f & 63)
            for i in range(r):
                if _getbit(R, i, f):
                    c = pivcols[i]
                    out[k, c >> 6] |= np.uint64(1) << np.uint64(c & 63)
            k += 1
        return out

    @njit(cache=True)
    def _symplectic_nb(F, q, C):
        m, w = F.shape
        wc = C.shape[1]
        alive = np.ones(m, dtype=np.bool_)
        pairs = np.empty((m // 2, 2), dtype=np.int64)
        npairs = 0
        Fi = np.empty(w, dtype=np.uint64)
        Fj = np.empty(w, dtype=np.uint64)
        Ci = np.empty(wc, dtype=np.uint64)
        Cj = np.empty(wc, dtype=np.uint64)
        for i in range(m):
            if not alive[i]:
                continue
            j = -1
            for t in range(w):
                x = F[i, t]
                if x != 0:
                    b = 0
                    while not (x >> np.uint64(b)) & np.uint64(1):
                        b += 1
                    j = (t << 6) + b
                    break
            if j < 0:
                continue
            for t in range(w):
                Fi[t] = F[i, t]
                Fj[t] = F[j, t]
            for t in range(wc):
                Ci[t] = C[i, t]
                Cj[t] = C[j, t]
            qi = q[i]
            qj = q[j]
            for k in range(m):
                if not alive[k] or k == i or k == j:
                    continue
                a = _getbit(F, k, j)
                b = _getbit(F, k, i)
                if a:
                    for t in range(w):
                        F[k, t] ^= Fi[t]
                    for t in range(wc):
                        C[k, t] ^= Ci[t]
                if b:
                    for t in range(w):
                        F[k, t] ^= Fj[t]
                    for t in range(wc):
                        C[k, t] ^= Cj[t]
                q[k] ^= np.uint8((a & np.uint64(qi)) ^ (b & np.uint64(qj)) ^ (a & b))
            alive[i] = False
            alive[j] = False
            pairs[npairs, 0] = i
            pairs[npairs, 1] = j
            npairs += 1
        return pairs[:npairs], np.flatnonzero(alive)

    @njit(cache=True)
    def _q_table_nb(qdiag, fmask):
        n = qdiag.shape[0]
        Q = np.zeros(1 << n, dtype=np.uint8)
        for i in range(n):
            base = 1 << i
            fi = fmask[i]
            qi = qdiag[i]
            for lo in range(base):
                Q[base + lo] = Q[lo] ^ qi ^ np.uint8(_parity(np.uint64(lo) & fi))
        return Q

    @njit(cache=True)
    def _closure_row(P, Fi, seen, head, count):
        # scan one row; caller guarantees room for ``head`` new points
        p = P[head]
        fp = Fi[head]
        for k in range(head):
            if _parity(fp & P[k]):
                s = p ^ P[k]
                if not seen[np.int64(s)]:
                    seen[np.int64(s)] = True
                    P[count] = s
                    Fi[count] = fp ^ Fi[k]
                    count += 1
        return count

    @njit(cache=True)
    def _closure_nb(fmask, seeds, n):
        seen = np.zeros(np.int64(1) << n, dtype=np.bool_)
        cap = max(64, 2 * seeds.shape[0])
        P = np.empty(cap, dtype=np.uint64)
        Fi = np.empty(cap, dtype=np.uint64)
        count = 0
        for t in range(seeds.shape[0]):
            s = seeds[t]
            if not seen[np.int64(s)]:
                seen[np.int64(s)] = True
                f = np.uint64(0)
                for i in range(n):
                    if (s >> np.uint64(i)) & np.uint64(1):
                        f ^= fmask[i]
                P[count] = s
                Fi[count] = f
                count += 1
        head = 0
        while head < count:
            if count + head > cap:
                cap = max(2 * cap, count + head)
                P2 = np.empty(cap, dtype=np.uint64)
                F2 = np.empty(cap, dtype=np.uint64)
                P2[:count] = P[:count]
                F2[:count] = Fi[:count]
                P = P2
                Fi = F2
            count = _closure_row(P, Fi, seen, head, count)
            head += 1
        return P[:count].copy()

    numba_impl = SimpleNamespace(
        nullspace=_nullspace_nb,
        symplectic=_symplectic_nb,
        q_table=_q_table_nb,
        closure=_closure_nb,
    )
else:  # pragma: no cover
    numba_impl = None

_active = numba_impl if USE_NUMBA else numpy_impl


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def nullspace(rows: np.ndarray, ncols: int) -> np.ndarray:
    """Packed basis of ``{x : rows @ x = 0}`` over GF(2)."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    return _active.nullspace(rows, int(ncols))


def symplectic(F: np.ndarray, q: np.ndarray, C: np.ndarray):
    return _active.symplectic(F, q, C)


def q_table(qdiag: np.ndarray, fmask: np.ndarray) -> np.ndarray:
    """Q of every vector of a space of dimension ``len(qdiag)``, indexed by bitmask."""
    return _active.q_table(np.ascontiguousarray(qdiag, dtype=np.uint8),
                           np.ascontiguousarray(fmask, dtype=np.uint64))


def closure(fmask: np.ndarray, seeds: np.ndarray, n: int) -> np.ndarray:
    """Close ``seeds`` under ``u, w -> u ^ w`` whenever ``f(u, w) = 1``."""
    return _active.closure(np.ascontiguousarray(fmask, dtype=np.uint64),
                           np.ascontiguousarray(seeds, dtype=np.uint64), int(n))
