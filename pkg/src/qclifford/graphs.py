"""Colored labeled graphs and the quadratic space they define.

Adjacency is stored as one int bitset per vertex.  Vertex declaration order
is the total order used to build ``g``.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, GraphFormatError
from .gf2core import QuadSpace, QType, classify_quadratic


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class ColoredGraph:
    names: tuple[str, ...]
    color: tuple[Color, ...]
    label: tuple[Fraction, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.names)
        if not (len(self.color) == len(self.label) == len(self.adj) == n):
            raise ValueError("per-vertex fields must have equal length")
        if len(set(self.names)) != n:
            raise ValueError("duplicate vertex name")
        for i, a in enumerate(self.adj):
            if a >> i & 1:
                raise ValueError(f"loop at vertex {self.names[i]}")
            if a < 0 or a >> n:
                raise ValueError("adjacency refers to a missing vertex")
            for j in _bits(a):
                if not self.adj[j] >> i & 1:
                    raise ValueError("adjacency is not symmetric")
        for lab in self.label:
            if lab == 0:
                raise ValueError("labels must be nonzero")

    # -- construction -----------------------------------------------------
    @classmethod
    def from_edges(cls, names: Sequence[str], edges: Iterable[tuple[int, int]],
                   color: Sequence[Color] | None = None,
                   label: Sequence[Fraction | int] | None = None) -> "ColoredGraph":
        n = len(names)
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {names[a]}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        color = tuple(color) if color is not None else (Color.BLACK,) * n
        label = tuple(Fraction(x) for x in label) if label is not None else (Fraction(1),) * n
        return cls(tuple(names), color, label, tuple(adj))

    @classmethod
    def plain(cls, n: int, edges: Iterable[tuple[int, int]]) -> "ColoredGraph":
        """All-black, unit-labelled graph on vertices ``0..n-1``."""
        return cls.from_edges([str(i) for i in range(n)], edges)

    # -- queries ----------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GraphFormatError(f"unknown vertex {name!r}") from None

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = frontier = 1
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.adj[i]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def all_black(self) -> bool:
        return all(c is Color.BLACK for c in self.color)

    def unit_labels(self) -> bool:
        return all(x == 1 for x in self.label)

    def induced(self, verts: Sequence[int]) -> "ColoredGraph":
        pos = {v: k for k, v in enumerate(verts)}
        adj = []
        for v in verts:
            a = 0
            for w in _bits(self.adj[v]):
                if w in pos:
                    a |= 1 << pos[w]
            adj.append(a)
        return ColoredGraph(tuple(self.names[v] for v in verts),
                            tuple(self.color[v] for v in verts),
                            tuple(self.label[v] for v in verts), tuple(adj))

    def permuted(self, order: Sequence[int]) -> "ColoredGraph":
        return self.induced(order)

    def recolored(self, color: Color = Color.BLACK) -> "ColoredGraph":
        return ColoredGraph(self.names, (color,) * self.n, self.label, self.adj)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vertices": [{"name": nm, "color": c.value, "label": str(lab)}
                         for nm, c, lab in zip(self.names, self.color, self.label)],
            "edges": [[self.names[i], self.names[j]] for i, j in self.edges()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, doc: dict) -> "ColoredGraph":
        names = [v["name"] for v in doc["vertices"]]
        pos = {nm: i for i, nm in enumerate(names)}
        return cls.from_edges(
            names, [(pos[a], pos[b]) for a, b in doc["edges"]],
            [Color(v["color"]) for v in doc["vertices"]],
            [_parse_rational(v["label"]) for v in doc["vertices"]])

    def to_text(self) -> str:
        lines = [f"vertex {nm} {c.value} {lab}"
                 for nm, c, lab in zip(self.names, self.color, self.label)]
        lines += [f"edge {self.names[i]} {self.names[j]}" for i, j in self.edges()]
        return "\n".join(lines) + "\n"


_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?\Z")


def _parse_rational(tok: str) -> Fraction:
    if not _RATIONAL.match(tok):
        raise GraphFormatError(f"malformed rational {tok!r}")
    try:
        val = Fraction(tok)
    except ZeroDivisionError:
        raise GraphFormatError(f"zero denominator in {tok!r}") from None
    if val == 0:
        raise GraphFormatError("labels must be nonzero")
    return val


def parse_graph(text: str) -> ColoredGraph:
    names: list[str] = []
    colors: list[Color] = []
    labels: list[Fraction] = []
    pos: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        where = f"line {lineno}"
        if tok[0] == "vertex":
            if len(tok) not in (3, 4):
                raise GraphFormatError(f"{where}: expected 'vertex <name> <black|white> [<label>]'")
            name = tok[1]
            if name in pos:
                raise GraphFormatError(f"{where}: duplicate vertex {name!r}")
            try:
                col = Color(tok[2])
            except ValueError:
                raise GraphFormatError(f"{where}: unknown color {tok[2]!r}") from None
            lab = _parse_rational(tok[3]) if len(tok) == 4 else Fraction(1)
            pos[name] = len(names)
            names.append(name)
            colors.append(col)
            labels.append(lab)
        elif tok[0] == "edge":
            if len(tok) != 3:
                raise GraphFormatError(f"{where}: expected 'edge <name> <name>'")
            for t in tok[1:]:
                if t not in pos:
                    raise GraphFormatError(f"{where}: edge references unknown vertex {t!r}")
            a, b = pos[tok[1]], pos[tok[2]]
            if a == b:
                raise GraphFormatError(f"{where}: loop at {tok[1]!r}")
            edges.append((a, b))
        else:
            raise GraphFormatError(f"{where}: unknown directive {tok[0]!r}")
    return ColoredGraph.from_edges(names, edges, colors, labels)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

_FAMILY = re.compile(r"(A|D|E|K|Cl):(\d+)(?:,(\d+))?\Z")


def family(name: str, *params: int) -> ColoredGraph:
    """``family("E:8")`` or ``family("E", 8)``; Cl takes ``p,q`` (p white)."""
    if not params:
        m = _FAMILY.match(name.strip())
        if not m:
            raise GraphFormatError(f"bad family spec {name!r}")
        name = m.group(1)
        params = tuple(int(x) for x in m.groups()[1:] if x is not None)
    if name == "Cl":
        if len(params) != 2:
            raise GraphFormatError("Cl needs two parameters p,q")
        p, q = params
        if p < 0 or q < 0 or p + q < 1:
            raise GraphFormatError("Cl:p,q needs p, q >= 0 and p + q >= 1")
        names = [f"b{i}" for i in range(1, q + 1)] + [f"w{i}" for i in range(1, p + 1)]
        cols = [Color.BLACK] * q + [Color.WHITE] * p
        return ColoredGraph.from_edges(names, combinations(range(p + q), 2), cols)
    if len(params) != 1:
        raise GraphFormatError(f"family {name} takes one parameter")
    (n,) = params
    lo = {"A": 1, "D": 4, "E": 6, "K": 1}.get(name)
    if lo is None:
        raise GraphFormatError(f"unknown family {name!r}")
    if n < lo:
        raise GraphFormatError(f"{name}:n needs n >= {lo}")
    names = [f"v{i}" for i in range(1, n + 1)]
    if name == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif name == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(0, 2)]
    elif name == "E":
        edges = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)] + [(1, 3)]
    else:
        edges = list(combinations(range(n), 2))
    return ColoredGraph.from_edges(names, edges)


def build_space(g: ColoredGraph) -> tuple[QuadSpace, tuple[Fraction, ...]]:
    rows = []
    for i in range(g.n):
        above = g.adj[i] >> (i + 1) << (i + 1)
        rows.append(above | (int(g.color[i] is Color.BLACK) << i))
    return QuadSpace(g.n, tuple(rows)), g.label


# ---------------------------------------------------------------------------
# twin reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionReport:
    reduced: ColoredGraph
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]


def reduce_graph(g: ColoredGraph) -> ReductionReport:
    # Equal open neighbourhoods already force non-adjacency, and removing a
    # twin cannot create new twins, so one grouping pass is the fixed point.
    rep_of_nbhd: dict[int, int] = {}
    reps: list[int] = []
    class_of = []
    for i, a in enumerate(g.adj):
        if a not in rep_of_nbhd:
            rep_of_nbhd[a] = len(reps)
            reps.append(i)
        class_of.append(rep_of_nbhd[a])
    return ReductionReport(g.induced(reps), tuple(class_of), tuple(reps))


# ---------------------------------------------------------------------------
# line graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootGraph:
    """A plain graph on ``0..n-1``; ``edge_of[x]`` is the root edge for vertex ``x``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    edge_of: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RootReport:
    is_line_graph: bool
    root: RootGraph | None


def line_graph_adj(n_edges: int, edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    adj = [0] * n_edges
    for x in range(n_edges):
        for y in range(x + 1, n_edges):
            if set(edges[x]) & set(edges[y]):
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return tuple(adj)


def _is_clique(adj: Sequence[int], verts: int) -> bool:
    for v in _bits(verts):
        if (verts & ~(1 << v)) & ~adj[v]:
            return False
    return True


def _krausz(adj: Sequence[int]) -> list[int] | None:
    """Edge partition into cliques, each vertex in at most two; None if impossible."""
    n = len(adj)
    unc = list(adj)
    cnt = [0] * n
    cliques: list[int] = []

    def apply(K: int):
        touched = []
        ok = True
        for x in _bits(K):
            touched.append((x, unc[x]))
            unc[x] &= ~K
            cnt[x] += 1
        for x in _bits(K):
            if cnt[x] > 2 or (cnt[x] == 2 and unc[x]) or (cnt[x] == 1 and not _is_clique(unc, unc[x])):
                ok = False
                break
        return ok, touched

    def undo(K: int, touched):
        for x, old in touched:
            unc[x] = old
            cnt[x] -= 1

    def candidates(u: int, v: int):
        if cnt[u] == 1:
            yield unc[u] | (1 << u)
            return
        if cnt[v] == 1:
            yield unc[v] | (1 << v)
            return
        rest = unc[u] & ~(1 << v)
        forced_out = rest & ~unc[v]
        if not _is_clique(unc, forced_out):
            return
        common = list(_bits(rest & unc[v]))

        def rec(k: int, inside: int, outside: int):
            if k == len(common):
                yield inside | (1 << u) | (1 << v)
                return
            w = common[k]
            if inside & ~unc[w] == 0:
                yield from rec(k + 1, inside | (1 << w), outside)
            if outside & ~unc[w] == 0:
                yield from rec(k + 1, inside, outside | (1 << w))

        yield from rec(0, 0, forced_out)

    def solve() -> bool:
        u = next((i for i in range(n) if unc[i]), None)
        if u is None:
            return True
        v = (unc[u] & -unc[u]).bit_length() - 1
        for K in candidates(u, v):
            if not _is_clique(unc, K):
                continue
            ok, touched = apply(K)
            if ok:
                cliques.append(K)
                if solve():
                    return True
                cliques.pop()
            undo(K, touched)
        return False

    return cliques if solve() else None


def _root_from_cliques(n: int, cliques: list[int]) -> RootGraph:
    member: list[list[int]] = [[] for _ in range(n)]
    for c, K in enumerate(cliques):
        for x in _bits(K):
            member[x].append(c)
    nodes = len(cliques)
    edge_of = []
    for x in range(n):
        ends = list(member[x])
        while len(ends) < 2:
            ends.append(nodes)
            nodes += 1
        edge_of.append((ends[0], ends[1]))
    return RootGraph(nodes, tuple(sorted(edge_of)), tuple(edge_of))


def _is_triangle(g: ColoredGraph) -> bool:
    return g.n == 3 and all(a.bit_count() == 2 for a in g.adj)


def line_graph_root(g: ColoredGraph) -> RootReport:
    if not g.is_connected():
        raise DisconnectedGraphError("line_graph_root needs a connected graph")
    if _is_triangle(g):
        # both K3 and the claw have K3 as line graph; K3 is the conventional pick
        tri = ((0, 1), (1, 2), (0, 2))
        return RootReport(True, RootGraph(3, tri, tri))
    cliques = _krausz(g.adj)
    if cliques is None:
        return RootReport(False, None)
    return RootReport(True, _root_from_cliques(g.n, cliques))


# ---------------------------------------------------------------------------
# Beineke oracle
# ---------------------------------------------------------------------------


def _named(names: str, edges: str) -> tuple[int, tuple[int, ...]]:
    pos = {c: i for i, c in enumerate(names.split())}
    adj = [0] * len(pos)
    for e in edges.split():
        a, b = e.split("-")
        adj[pos[a]] |= 1 << pos[b]
        adj[pos[b]] |= 1 << pos[a]
    return len(pos), tuple(adj)


_G4_EDGES = "c-O O-e e-d d-c O-d b-c a-e"
_G6_EDGES = "q-c c-O O-e e-d e-p O-d d-c q-O d-p"

BEINEKE_GRAPHS: tuple[tuple[int, tuple[int, ...]], ...] = (
    _named("o x y z", "o-x o-y o-z"),
    _named("L R A T B", "L-A L-T L-B R-A R-T R-B A-B"),
    _named("a b c d e", "a-b a-c a-d a-e b-c b-d b-e c-d c-e"),
    _named("a b c d e O", _G4_EDGES),
    _named("a b c d e O", _G4_EDGES + " a-b"),
    _named("q c O e d p", _G6_EDGES),
    _named("r c O e d p", "c-O O-e e-d e-p O-d d-c d-p r-c p-O"),
    _named("q c O e d p", _G6_EDGES + " q-d p-O"),
    _named("h a b c d e", "h-a h-b h-c h-d h-e a-b b-c c-d d-e e-a"),
)

BEINEKE_CAP = 64


def find_induced(pattern: tuple[int, tuple[int, ...]], adj: Sequence[int]) -> list[int] | None:
    """An induced copy of ``pattern`` in the graph ``adj``, as an image list."""
    pn, padj = pattern
    n = len(adj)
    # visit pattern vertices so that each one after the first touches an earlier one
    order = [0]
    while len(order) < pn:
        nxt = next(v for v in range(pn) if v not in order and any(padj[v] >> u & 1 for u in order))
        order.append(nxt)
    image = [-1] * pn
    used = 0

    def rec(k: int) -> bool:
        nonlocal used
        if k == pn:
            return True
        pv = order[k]
        anchor = next((order[t] for t in range(k) if padj[pv] >> order[t] & 1), None)
        pool = adj[image[anchor]] if anchor is not None else (1 << n) - 1
        pool &= ~used
        for x in _bits(pool):
            good = True
            for t in range(k):
                pu = order[t]
                if bool(padj[pv] >> pu & 1) != bool(adj[x] >> image[pu] & 1):
                    good = False
                    break
            if good:
                image[pv] = x
                used |= 1 << x
                if rec(k + 1):
                    return True
                used &= ~(1 << x)
        return False

    return [image[i] for i in range(pn)] if rec(0) else None


def beineke_check(g: ColoredGraph) -> bool:
    if g.n > BEINEKE_CAP:
        raise ValueError(f"beineke_check limited to {BEINEKE_CAP} vertices")
    return all(find_induced(h, g.adj) is None for h in BEINEKE_GRAPHS)


# ---------------------------------------------------------------------------
# isomorphism (small graphs)
# ---------------------------------------------------------------------------


def is_isomorphic(adj_a: Sequence[int], adj_b: Sequence[int]) -> bool:
    n = len(adj_a)
    if n != len(adj_b):
        return False
    deg_a = [a.bit_count() for a in adj_a]
    deg_b = [b.bit_count() for b in adj_b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    # refine by the multiset of neighbour degrees
    sig_a = [(deg_a[i], tuple(sorted(deg_a[j] for j in _bits(adj_a[i])))) for i in range(n)]
    sig_b = [(deg_b[i], tuple(sorted(deg_b[j] for j in _bits(adj_b[i])))) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    order = sorted(range(n), key=lambda i: (sum(1 for s in sig_a if s == sig_a[i]), -deg_a[i]))
    image = [-1] * n
    used = 0

    def rec(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for x in range(n):
            if used >> x & 1 or sig_b[x] != sig_a[v]:
                continue
            if all(bool(adj_a[v] >> order[t] & 1) == bool(adj_b[x] >> image[order[t]] & 1)
                   for t in range(k)):
                image[v] = x
                used |= 1 << x
                if rec(k + 1):
                    return True
                used &= ~(1 << x)
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# minus-type hexads
# ---------------------------------------------------------------------------

HEXAD_CAP = 24


def _q_one_count(adj: Sequence[int], verts: Sequence[int]) -> int:
    k = len(verts)
    qd = [1] * k
    fm = []
    for a in range(k):
        m = 0
        for b in range(k):
            if adj[verts[a]] >> verts[b] & 1:
                m |= 1 << b
        fm.append(m)
    Q = [0] * (1 << k)
    for i in range(k):
        base = 1 << i
        for lo in range(base):
            Q[base | lo] = Q[lo] ^ qd[i] ^ ((lo & fm[i]).bit_count() & 1)
    return sum(Q)


def find_minus_type_6_subgraph(g: ColoredGraph) -> tuple[int, ...] | None:
    """Six vertices whose induced all-black graph is nondegenerate of minus type."""
    if g.n > HEXAD_CAP:
        raise ValueError(f"hexad search limited to {HEXAD_CAP} vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("hexad search needs a connected graph")
    if line_graph_root(reduce_graph(g).reduced).is_line_graph:
        raise ValueError("reduced graph is a line graph; no minus-type hexad is guaranteed")
    # 36 = 2^5 + 2^2 anisotropic vectors singles out (6, 0, -) among 6-dim forms
    for verts in combinations(range(g.n), 6):
        if _q_one_count(g.adj, verts) == 36:
            space, _ = build_space(g.induced(verts).recolored())
            c = classify_quadratic(space)
            if (c.n_bar, c.r, c.q_type) == (6, 0, QType.MINUS):
                return verts
    return None
