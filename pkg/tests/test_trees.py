import pytest

from hopftrees.poly import Derivation, ParseError, parse_derivation
from hopftrees.trees import (
    LabeledTree,
    canonical_key,
    format_tree,
    graft,
    iter_trees_up_to,
    label_at,
    node_paths,
    parse_tree,
    subtree_at,
    t,
    tree_from_shape,
    u,
    unit_tree,
    v,
)


def D(text, n=2):
    return parse_derivation(text, n)


class TestConstructors:
    def test_unit(self):
        assert unit_tree().degree == 0
        assert unit_tree() == LabeledTree(())

    def test_v(self, ring2):
        tree = v(ring2["d1"])
        assert tree.degree == 1
        assert len(tree.children) == 1
        assert tree.children[0].label == ring2["d1"]
        assert v(D("(x1)*d2")).degree == 1

    def test_zero_label_rejected(self, ring2):
        zero = Derivation.zero(2)
        with pytest.raises(ValueError):
            v(zero)
        with pytest.raises(ValueError):
            u(zero, v(ring2["d1"]))
        with pytest.raises(ValueError):
            graft(v(ring2["d1"]), (0,), zero, unit_tree())

    def test_u(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        chain = u(d2, v(d1))
        assert chain.degree == 2
        assert chain == parse_tree("*[ d2[ d1[] ] ]", 2)
        # adjoining through t is the same as adjoining the list
        assert u(d1, t(v(d1), v(d2))) == u(d1, v(d1), v(d2))
        assert u(d1, unit_tree()) == v(d1)
        assert u(d1) == v(d1)

    def test_t(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        pair = t(v(d1), v(d2))
        assert [node.label for node in pair.children] == [d1, d2]
        assert t(pair) == pair
        assert t() == unit_tree()
        assert t(t(v(d1), v(d2)), v(d1)) == t(v(d1), t(v(d2), v(d1)))

    def test_degree_additivity(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        a, b = u(d1, v(d2)), t(v(d1), v(d1))
        assert t(a, b).degree == a.degree + b.degree
        assert u(d2, a, b).degree == 1 + a.degree + b.degree


class TestSurgery:
    def test_subtree_at(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        assert subtree_at(v(d1), (0,)) == unit_tree()
        assert subtree_at(u(d1, v(d2)), (0,)) == v(d2)
        assert subtree_at(t(v(d1), v(d2)), (1,)) == unit_tree()

    def test_label_at(self, ring2):
        tree = u(ring2["d1"], v(ring2["d2"]))
        assert label_at(tree, (0,)) == ring2["d1"]
        assert label_at(tree, (0, 0)) == ring2["d2"]

    def test_path_errors(self, ring2):
        tree = v(ring2["d1"])
        with pytest.raises(ValueError):
            subtree_at(tree, ())
        with pytest.raises(ValueError):
            subtree_at(tree, (1,))
        with pytest.raises(ValueError):
            subtree_at(tree, (0, 0))

    def test_graft(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        assert graft(v(D("(x1)*d1")), (0,), d1, unit_tree()) == v(d1)
        assert graft(u(d1, v(d2)), (0,), d2, unit_tree()) == v(d2)
        # relabel-with-own-data round trip
        tree = u(d1, v(d2), v(d1))
        for path in node_paths(tree):
            rebuilt = graft(tree, path, label_at(tree, path), subtree_at(tree, path))
            assert rebuilt == tree

    def test_graft_then_read_back(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        tree = t(v(d1), u(d1, v(d2)))
        replacement = t(v(d2), v(d2))
        out = graft(tree, (1,), d2, replacement)
        assert label_at(out, (1,)) == d2
        assert subtree_at(out, (1,)) == replacement


class TestCanonicalForm:
    def test_key_determinism(self, ring2):
        assert canonical_key(unit_tree()) == canonical_key(unit_tree())
        assert canonical_key(v(ring2["d1"])) != canonical_key(v(ring2["d2"]))

    def test_order_sensitivity(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        assert canonical_key(t(v(d1), v(d2))) != canonical_key(t(v(d2), v(d1)))
        assert t(v(d1), v(d2)) != t(v(d2), v(d1))

    def test_key_injective_on_small_trees(self, ring2):
        trees = list(iter_trees_up_to([ring2["d1"], ring2["d2"]], 3))
        keys = {canonical_key(tree) for tree in trees}
        assert len(keys) == len(trees) == 51

    def test_round_trip(self, ring2):
        for tree in iter_trees_up_to([ring2["d1"], D("(x1)*d2")], 3):
            assert parse_tree(format_tree(tree), 2) == tree

    def test_grammar_examples(self):
        assert parse_tree("*", 2) == unit_tree()
        assert parse_tree("*[ d2[ d1[] ] ]", 2) == u(D("d2"), v(D("d1")))
        assert parse_tree("*[ (x1)*d1[] ]", 2) == v(D("(x1)*d1"))
        assert parse_tree("*[]", 2) == unit_tree()

    def test_parse_errors(self):
        for text in ["", "x", "*[ d1[] ", "*[ d1 ]", "*[ [] ]", "* junk", "*[ 0*d1[] ]"]:
            with pytest.raises(ParseError):
                parse_tree(text, 2)


class TestEnumeration:
    def test_counts(self, ring2):
        letters = [ring2["d1"], ring2["d2"]]
        by_degree = {}
        for tree in iter_trees_up_to(letters, 3):
            by_degree[tree.degree] = by_degree.get(tree.degree, 0) + 1
        # ordered shapes are Catalan: 1, 1, 2, 5; labelings multiply by 2^degree
        assert by_degree == {0: 1, 1: 2, 2: 8, 3: 40}

    def test_shape_builder_checks_label_count(self, ring2):
        with pytest.raises(ValueError):
            tree_from_shape(((),), [ring2["d1"], ring2["d2"]])
