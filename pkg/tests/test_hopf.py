from fractions import Fraction
from itertools import product

from hopftrees.hopf import (
    TreeSum,
    TreeTensorSum,
    antipode,
    antipode_sum,
    coproduct,
    counit,
    evaluate_product,
    express_one_child,
    gl_mul,
    mul,
)
from hopftrees.trees import iter_trees_up_to, t, u, unit_tree, v


def one(tree):
    return TreeSum.from_tree(tree)


class TestProduct:
    def test_pair_expansion(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        assert gl_mul(v(d1), v(d2)) == one(t(v(d1), v(d2))) + one(u(d2, v(d1)))

    def test_unit_laws(self, ring2):
        for tree in iter_trees_up_to([ring2["d1"], ring2["d2"]], 3):
            assert gl_mul(unit_tree(), tree) == one(tree)
            assert gl_mul(tree, unit_tree()) == one(tree)

    def test_attachment_count(self, ring2):
        # independent oracle: a forest of m subtrees maps into n nodes in n^m
        # ways, and collection preserves the total count of attachments
        d1, d2 = ring2["d1"], ring2["d2"]
        t1 = t(v(d1), v(d2))  # 2 root children
        t2 = u(d1, v(d2))  # 3 nodes
        total = sum(gl_mul(t1, t2).terms.values())
        assert total == Fraction(3**2) == Fraction(9)

    def test_ordering_convention(self, ring2):
        # an attached root precedes the existing children of its target node
        d1, d2 = ring2["d1"], ring2["d2"]
        result = gl_mul(v(d1), t(v(d2), v(d2)))
        root_attached = t(v(d1), v(d2), v(d2))
        assert result.coefficient(root_attached) == 1

    def test_bilinearity(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        zero = TreeSum.zero()
        b = one(v(d2))
        assert mul(zero, b) == zero
        assert mul(2 * one(v(d1)), b) == 2 * gl_mul(v(d1), v(d2))
        a = one(v(d1)) + 3 * one(v(d2))
        assert mul(a, b) == gl_mul(v(d1), v(d2)) + 3 * gl_mul(v(d2), v(d2))

    def test_associativity_samples(self, ring2):
        trees = list(iter_trees_up_to([ring2["d1"], ring2["d2"]], 2))
        for a, b, c in product(trees[:6], repeat=3):
            assert mul(gl_mul(a, b), one(c)) == mul(one(a), gl_mul(b, c))

    def test_grading(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        a, b = t(v(d1), v(d2)), u(d1, v(d1))
        for term in gl_mul(a, b).terms:
            assert term.degree == a.degree + b.degree


class TestCoproduct:
    def test_unit(self):
        assert coproduct(unit_tree()) == TreeTensorSum(
            {(unit_tree(), unit_tree()): 1}
        )

    def test_primitive(self, ring2):
        tree = v(ring2["d1"])
        assert coproduct(tree) == TreeTensorSum(
            {(tree, unit_tree()): 1, (unit_tree(), tree): 1}
        )

    def test_repeated_siblings_collect(self, ring2):
        d1 = ring2["d1"]
        tree = t(v(d1), v(d1))
        expected = TreeTensorSum(
            {
                (tree, unit_tree()): 1,
                (v(d1), v(d1)): 2,
                (unit_tree(), tree): 1,
            }
        )
        assert coproduct(tree) == expected

    def test_cocommutative(self, ring2):
        for tree in iter_trees_up_to([ring2["d1"], ring2["d2"]], 3):
            split = coproduct(tree)
            assert split.swap() == split

    def test_grading(self, ring2):
        for tree in iter_trees_up_to([ring2["d1"], ring2["d2"]], 3):
            for left, right in coproduct(tree).terms:
                assert left.degree + right.degree == tree.degree


class TestCounit:
    def test_values(self, ring2):
        assert counit(one(unit_tree())) == 1
        assert counit(one(v(ring2["d1"]))) == 0
        mixed = 3 * one(unit_tree()) + 5 * one(v(ring2["d1"]))
        assert counit(mixed) == 3


class TestAntipode:
    def test_unit(self):
        assert antipode(unit_tree()) == one(unit_tree())

    def test_primitive(self, ring2):
        tree = v(ring2["d1"])
        assert antipode(tree) == -1 * one(tree)

    def test_convolution_vanishes(self, ring2):
        # brute force both convolution sides on a degree-2 tree
        d1, d2 = ring2["d1"], ring2["d2"]
        tree = t(v(d1), v(d2))
        left = TreeSum.zero()
        right = TreeSum.zero()
        for (a, b), c in coproduct(tree).terms.items():
            left = left + c * mul(antipode(a), one(b))
            right = right + c * mul(one(a), antipode(b))
        assert left == TreeSum.zero()
        assert right == TreeSum.zero()

    def test_linear_extension(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        a = 2 * one(v(d1)) + one(unit_tree())
        assert antipode_sum(a) == -2 * one(v(d1)) + one(unit_tree())


class TestGeneration:
    def test_one_child_expansion(self, ring2):
        d1, d2 = ring2["d1"], ring2["d2"]
        tree = t(v(d1), u(d2, v(d1)))
        total = TreeSum.zero()
        for coeff, factors in express_one_child(tree):
            assert coeff.denominator == 1
            for factor in factors:
                assert len(factor.children) == 1
            total = total + coeff * evaluate_product(factors)
        assert total == one(tree)
