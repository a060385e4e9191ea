import random

import pytest

from hopftrees.action import (
    act,
    act_closed_form,
    act_coherent,
    act_sum,
    as_derivation,
    coherence_identity,
    leibnitz_identity,
    psi,
    psi_sum,
)
from hopftrees.connection import Connection, InducedConnection, flat_connection
from hopftrees.hopf import TreeSum, coproduct, gl_mul
from hopftrees.poly import (
    DiffOperator,
    Polynomial,
    parse_derivation,
    parse_polynomial,
)
from hopftrees.trees import t, u, unit_tree, v


def D(text, n=2):
    return parse_derivation(text, n)


def P(text, n=2):
    return parse_polynomial(text, n)


@pytest.fixture
def table2():
    return Connection(2, {(1, 1): D("d2"), (2, 1): D("(x1)*d1"), (1, 2): D("(x2)*d2")})


class TestAsDerivation:
    def test_two_node_tree(self, ring2, table2):
        e = D("(x1)*d2 + d1")
        for conn in (ring2["flat"], table2):
            assert as_derivation(v(e), conn) == e

    def test_chain_is_nabla(self, ring2, table2):
        e, f = D("(x1)*d1"), D("(x2)*d2")
        for conn in (ring2["flat"], table2):
            assert as_derivation(u(e, v(f)), conn) == conn.nabla(f, e)

    def test_two_branch_unfolding(self, table2):
        # u(F; v(E1), v(E2)) acts as nabla_{E1} nabla_{E2} F - nabla_{nabla_{E1} E2} F
        f, e1, e2 = D("(x2)*d1"), D("d1"), D("(x1)*d2")
        for conn in (flat_connection(2), table2):
            expected = conn.nabla(e1, conn.nabla(e2, f)) - conn.nabla(
                conn.nabla(e1, e2), f
            )
            assert as_derivation(u(f, v(e1), v(e2)), conn) == expected

    def test_two_branch_against_product_expansion(self, table2):
        # independent route: v(E1) u(F; v(E2)) = T + corrections, so acting with
        # the product both ways pins the tree's derivation on sample inputs
        f, e1, e2 = D("(x2)*d1"), D("d1"), D("(x1)*d2")
        tree = u(f, v(e1), v(e2))
        for conn in (flat_connection(2), table2):
            for s in (P("x1*x2"), P("x1^3 + x2^2")):
                total = act_sum(gl_mul(v(e1), u(f, v(e2))), s, conn)
                direct = act(v(e1), act(u(f, v(e2)), s, conn), conn)
                assert total == direct
                assert as_derivation(tree, conn).apply(s) == act(tree, s, conn)

    def test_requires_one_child_root(self, ring2):
        with pytest.raises(ValueError):
            as_derivation(unit_tree(), ring2["flat"])
        with pytest.raises(ValueError):
            as_derivation(t(v(ring2["d1"]), v(ring2["d2"])), ring2["flat"])


class TestAct:
    def test_single_derivation(self, ring2):
        assert act(v(ring2["d1"]), P("x1^2"), ring2["flat"]) == P("2*x1")

    def test_flat_chain_vanishes(self, ring2):
        tree = u(ring2["d1"], v(ring2["d1"]))
        for s in (P("x1^3"), P("x1*x2"), P("1")):
            assert act(tree, s, ring2["flat"]).is_zero()

    def test_two_branch_product(self, ring2):
        assert act(t(v(ring2["d1"]), v(ring2["d2"])), P("x1*x2"), ring2["flat"]) == P("1")

    def test_unit_is_identity(self, ring2):
        s = P("x1^2 - x2")
        assert act(unit_tree(), s, ring2["flat"]) == s

    def test_act_sum_linear(self, ring2):
        s = P("x1")
        assert act_sum(TreeSum.zero(), s, ring2["flat"]).is_zero()
        assert act_sum(TreeSum.from_tree(unit_tree()), s, ring2["flat"]) == s
        assert act_sum(2 * TreeSum.from_tree(v(ring2["d1"])), s, ring2["flat"]) == P("2")

    def test_module_axiom_instance(self, table2):
        t1 = t(v(D("(x1)*d1")), v(D("d2")))
        t2 = u(D("d1"), v(D("(x2)*d2")))
        s = P("x1^2*x2")
        lhs = act_sum(gl_mul(t1, t2), s, table2)
        rhs = act(t1, act(t2, s, table2), table2)
        assert lhs == rhs

    def test_module_algebra_instance(self, table2):
        tree = t(v(D("(x1)*d2")), v(D("d1")))
        p, q = P("x1 + x2"), P("x1*x2")
        lhs = act(tree, p * q, table2)
        rhs = Polynomial.zero(2)
        for (left, right), c in coproduct(tree).terms.items():
            rhs = rhs + c * (act(left, p, table2) * act(right, q, table2))
        assert lhs == rhs


class TestClosedForm:
    def test_leaf_instance(self):
        assert act_closed_form(v(D("(x1)*d2")), P("x2")) == P("x1")

    def test_constant_labels_chain(self):
        tree = u(D("d2"), v(D("d1")))
        for s in (P("x1*x2"), P("x1^2 + x2^3")):
            assert act_closed_form(tree, s).is_zero()

    def test_matches_induced_connection(self, hall):
        e1, e2 = hall
        induced = InducedConnection(8)
        x = lambda i: Polynomial.variable(8, i)
        for tree in [v(e2), u(e2, v(e1)), t(v(e1), v(e2)), u(e1, v(e2), v(e2))]:
            for s in (x(3), x(1) * x(2), x(4)):
                assert act_closed_form(tree, s) == act(tree, s, induced)


class TestPsi:
    def test_first_order(self, ring2, table2):
        e = D("(x1)*d2 + d1")
        for conn in (ring2["flat"], table2):
            assert psi(v(e), conn) == e.as_operator()

    def test_identity(self, ring2):
        assert psi(unit_tree(), ring2["flat"]) == DiffOperator.identity(2)

    def test_second_order(self, ring2):
        expected = DiffOperator(2, {(2, 0): Polynomial.one(2)})
        assert psi(t(v(ring2["d1"]), v(ring2["d1"])), ring2["flat"]) == expected

    def test_agrees_with_act(self, table2):
        tree = t(v(D("(x1)*d1")), u(D("d2"), v(D("(x2)*d1"))))
        op = psi(tree, table2)
        for s in (P("x1^2*x2"), P("x1 + x2^3")):
            assert op.apply(s) == act(tree, s, table2)

    def test_multiplicative(self, table2):
        a, b = v(D("(x1)*d2")), u(D("d1"), v(D("d2")))
        assert psi_sum(gl_mul(a, b), table2) == psi(a, table2).compose(psi(b, table2))


class TestLeibnitz:
    def test_leaf_node(self, ring2):
        tree = v(D("(x1)*d1"))
        lhs, rhs = leibnitz_identity(tree, (0,), P("x1"), D("d1"), P("x1"), ring2["flat"])
        assert lhs == P("x1")
        assert rhs == P("x1")

    def test_middle_node(self, ring2):
        # nabla_F(rE) = r nabla_F E + F(r) E at the node below the root
        tree = u(D("(x2)*d1"), v(D("d2")))
        s = P("x1^2")
        lhs, rhs = leibnitz_identity(tree, (0,), P("x2"), D("d1"), s, ring2["flat"])
        assert lhs == rhs == P("2*x1")

    def test_trivial_factorization(self, table2):
        tree = u(D("(x1)*d1"), v(D("(x2)*d2")))
        s = P("x1*x2^2")
        for path in [(0,), (0, 0)]:
            label = tree.children[0].label if path == (0,) else D("(x2)*d2")
            lhs, rhs = leibnitz_identity(tree, path, Polynomial.one(2), label, s, table2)
            assert lhs == act(tree, s, table2)
            assert lhs == rhs

    def test_label_mismatch_rejected(self, ring2):
        with pytest.raises(ValueError):
            leibnitz_identity(
                v(D("(x1)*d1")), (0,), P("x2"), D("d1"), P("x1"), ring2["flat"]
            )


class TestCoherence:
    def test_whole_tree_replacement(self, table2):
        tree = u(D("(x1)*d1"), v(D("d2")))
        lhs, rhs = coherence_identity(tree, (), table2)
        for s in (P("x1*x2"), P("x2^2")):
            assert lhs(s) == rhs(s)

    def test_two_node_subtree_is_identity(self, table2):
        # the subtree below the labeled node is v(E); collapsing it changes nothing
        tree = u(D("d1"), v(D("(x1)*d2")))
        lhs, rhs = coherence_identity(tree, (0,), table2)
        for s in (P("x1^2"), P("x1*x2")):
            assert lhs(s) == rhs(s)

    def test_zero_replacement(self, ring2):
        # under the flat table the inner chain acts as zero, killing both sides
        tree = u(ring2["d2"], u(ring2["d1"], v(ring2["d1"])))
        lhs, rhs = coherence_identity(tree, (0,), ring2["flat"])
        for s in (P("x1^2*x2"), P("x2")):
            assert lhs(s).is_zero()
            assert rhs(s).is_zero()

    def test_random_tree_with_table(self, table2):
        rng = random.Random(2)
        tree = t(u(D("(x2)*d1"), v(D("d2"))), v(D("(x1)*d2")))
        lhs, rhs = coherence_identity(tree, (0,), table2)
        for _ in range(3):
            s = Polynomial(
                2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(1, 3)}
            )
            assert lhs(s) == rhs(s)

    def test_requires_one_child(self, ring2):
        with pytest.raises(ValueError):
            coherence_identity(t(v(ring2["d1"]), v(ring2["d2"])), (), ring2["flat"])


class TestDetermination:
    def test_coherent_evaluator_matches_act(self, table2):
        trees = [
            unit_tree(),
            v(D("(x1)*d2")),
            t(v(D("d1")), v(D("(x2)*d2"))),
            t(v(D("d2")), u(D("(x1)*d1"), v(D("d2"))), v(D("d1"))),
        ]
        for conn in (flat_connection(2), table2):
            for tree in trees:
                for s in (P("x1^2*x2"), P("x1 + x2")):
                    assert act_coherent(tree, s, conn) == act(tree, s, conn)
