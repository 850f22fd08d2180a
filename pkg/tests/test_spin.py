import random
from fractions import Fraction

import numpy as np
import pytest

from helpers import random_connected_graph
from qclifford.algebra import AlgebraContext, AlgebraElement, multiply
from qclifford.errors import SpinPreconditionError
from qclifford.gf2core import QType, QuadClass
from qclifford.graphs import ColoredGraph, family, parse_graph
from qclifford.lie import closure_points
from qclifford.spin import (Mat, SignedPermOp, combo_is_zero, expected_span_dim, field_type_of,
                            left_regular_rep, model_q_values, monomial_op, plane_models,
                            span_dim, transpose_check, verify_spin)

P, M = QType.PLUS, QType.MINUS
NONDEGENERATE = [QuadClass(0, 0, P)] + [QuadClass(n, 0, t) for n in (2, 4, 6) for t in (P, M)]


def minus_id(size):
    return -SignedPermOp.identity(size)


# -- left-regular representation ------------------------------------------------------------

def test_single_vertex_operator():
    (op,) = left_regular_rep(family("A:1"))
    assert list(op.perm) == [1, 0]
    assert op @ op == minus_id(2)


def test_A2_generators_anticommute():
    x, y = left_regular_rep(family("A:2"))
    assert combo_is_zero([(1, x @ y), (1, y @ x)])
    assert not combo_is_zero([(1, x @ y), (-1, y @ x)])


@pytest.mark.parametrize("spec", ["A:5", "D:6", "E:7", "K:6"])
def test_generators_square_to_minus_one(spec):
    ops = left_regular_rep(family(spec))
    for op in ops:
        assert op @ op == minus_id(op.size)


@pytest.mark.parametrize("text", [
    "vertex a white\nvertex b black\nedge a b",
    "vertex a black 2\nvertex b black\nedge a b",
])
def test_rejects_non_spin_graphs(text):
    with pytest.raises(SpinPreconditionError):
        left_regular_rep(parse_graph(text))


def test_rejects_oversize():
    with pytest.raises(SpinPreconditionError):
        left_regular_rep(family("A:21"))


def test_operator_matches_algebra_multiplication():
    rng = random.Random(2)
    text = ("vertex a black -2\nvertex b white 3\nvertex c black 1/2\nvertex d white -1\n"
            "vertex e black\nedge a b\nedge b c\nedge c d\nedge d e\nedge a e\nedge b e")
    contexts = [AlgebraContext.from_graph(parse_graph(text)),
                AlgebraContext.from_graph(family("E:7"))]
    for ctx in contexts:
        N = 1 << ctx.dim
        for _ in range(500):
            v, w = rng.randrange(N), rng.randrange(N)
            op = monomial_op(ctx, v)
            got = op.apply({w: Fraction(1)})
            want = multiply(ctx, AlgebraElement.monomial(v), AlgebraElement.monomial(w))
            assert got == want.terms
            # composition matches the product of monomials
            u = rng.randrange(N)
            comp = monomial_op(ctx, u) @ op
            prod = multiply(ctx, AlgebraElement.monomial(u), AlgebraElement.monomial(v))
            ((k, c),) = prod.items()
            assert comp == monomial_op(ctx, k).scaled(c)


def test_composition_associative():
    rng = random.Random(3)
    ops = left_regular_rep(family("E:8"))
    for _ in range(200):
        a, b, c = (rng.choice(ops) for _ in range(3))
        assert (a @ b) @ c == a @ (b @ c)


# -- verification ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec,dim", [("A:3", 6), ("E:6", 36), ("E:8", 120), ("D:5", 20)])
def test_verify_families(spec, dim):
    g = family(spec)
    rep = verify_spin(left_regular_rep(g), g)
    assert rep.ok and rep.lie_span_dim == dim


def test_corrupted_sign_is_caught():
    g = family("A:3")
    ops = left_regular_rep(g)
    sign = ops[1].sign.copy()
    sign[0] = -sign[0]
    ops[1] = SignedPermOp(ops[1].perm, sign)
    rep = verify_spin(ops, g)
    assert not rep.squares_ok and not rep.ok


def test_wrong_graph_breaks_relations():
    g = family("A:3")
    ops = left_regular_rep(g)
    other = ColoredGraph.plain(3, [(0, 1), (1, 2), (0, 2)])
    rep = verify_spin(ops, other)
    assert rep.squares_ok and not rep.edge_anticommute_ok


def test_faithfulness_random_graphs():
    rng = random.Random(12)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 12), rng)
        rep = verify_spin(left_regular_rep(g), g)
        assert rep.ok
        assert rep.lie_span_dim == closure_points(g).dim


def test_berman_implies_anticommutation_on_edges():
    g = family("E:6")
    ops = left_regular_rep(g)
    for i, j in g.edges():
        x, y = ops[i], ops[j]
        # [x,[x,y]] = -y with squares -1 gives 2(xy + yx) = 0
        assert combo_is_zero([(1, x @ x @ y), (-2, x @ y @ x), (1, y @ x @ x), (4, y)])
        assert combo_is_zero([(1, x @ y), (1, y @ x)])


def test_report_dict():
    g = family("A:2")
    doc = verify_spin(left_regular_rep(g), g).to_dict()
    assert doc == {"squares_ok": True, "edge_anticommute_ok": True, "nonedge_commute_ok": True,
                   "berman_ok": True, "lie_span_dim": 3}


# -- explicit plane models ------------------------------------------------------------------

def test_plus_plane_matrices():
    a, b = plane_models(QuadClass(2, 0, P), 7)
    assert a == Mat([[0, 1], [1, 0]], p=7) and b == Mat([[1, 0], [0, -1]], p=7)


@pytest.mark.parametrize("p", [5, 7, 13])
@pytest.mark.parametrize("c", NONDEGENERATE, ids=str)
def test_plane_model_span_dimension(c, p):
    assert span_dim(plane_models(c, p), p) == expected_span_dim(c, p)


@pytest.mark.parametrize("c", NONDEGENERATE, ids=str)
def test_rational_model_span_dimension(c):
    assert span_dim(plane_models(c, 0), 0) == expected_span_dim(c, 0)


@pytest.mark.parametrize("p", [0, 5, 7, 13])
@pytest.mark.parametrize("c", NONDEGENERATE[1:], ids=str)
def test_plane_model_relations(c, p):
    gens = plane_models(c, p)
    qs = model_q_values(c)
    n = gens[0].n
    eye = Mat.eye(n, p)
    for k, g in enumerate(gens):
        assert g @ g == (-eye if qs[k] else eye)
        for m in range(k + 1, len(gens)):
            h = gens[m]
            same_pair = k // 2 == m // 2
            assert g @ h == (-(h @ g) if same_pair else h @ g)


def test_field_types():
    assert field_type_of(13).value == "I" and field_type_of(7).value == "II"
    assert field_type_of(0).value == "III"


@pytest.mark.parametrize("args", [(QuadClass(2, 1, P), 7), (QuadClass(3, 1, QType.ZERO), 7),
                                  (QuadClass(10, 0, P), 7), (QuadClass(2, 0, P), 9),
                                  (QuadClass(2, 0, P), 101)])
def test_plane_models_unsupported(args):
    with pytest.raises(ValueError):
        plane_models(*args)


def test_transpose_examples():
    assert transpose_check(QuadClass(2, 0, P), 7)
    assert transpose_check(QuadClass(2, 0, M), 13)


def test_transpose_negative_control():
    c = QuadClass(2, 0, P)
    qs = model_q_values(c)
    qs[0] ^= 1
    assert not transpose_check(c, 7, qs)


@pytest.mark.parametrize("c", NONDEGENERATE, ids=str)
def test_transpose_type_I_and_rational(c):
    for p in (0, 5, 13):
        assert transpose_check(c, p)


def test_transpose_fails_for_type_II_minus_plane():
    # over a type II field the 2x2 minus plane needs a symmetric generator with
    # square -1, so plain transposition cannot act as tau_Q there
    assert not transpose_check(QuadClass(2, 0, M), 7)
    b = plane_models(QuadClass(2, 0, M), 7)[1]
    assert b.conj_transpose() == b
