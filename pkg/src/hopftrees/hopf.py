"""The Hopf algebra of labeled ordered rooted trees.

Elements are finite rational linear combinations of trees.  The product of
two trees attaches the root children of the first operand to nodes of the
second in all possible ways; the coproduct splits the root forest into
complementary position subsets.  The algebra is graded by non-root node
count and connected, which forces the antipode recursion used here.

Ordering convention for the product: when a detached subtree is attached to a
node, its root precedes every existing child of that node, and subtrees
attached to the same node keep the order they had under the first operand's
root.  (Some treatments append instead of prepend; the two conventions give
different, equally valid orderings of the same sums.)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable

from .poly import _as_fraction
from .trees import LabeledTree, Node, canonical_key, node_paths, unit_tree


class TreeSum:
    """Finite linear combination of trees with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[LabeledTree, Fraction] = {}
        for tree, coeff in (terms or {}).items():
            c = _as_fraction(coeff)
            if not c:
                continue
            if not isinstance(tree, LabeledTree):
                raise TypeError("TreeSum keys must be trees")
            clean[tree] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "TreeSum":
        return cls()

    @classmethod
    def from_tree(cls, tree: LabeledTree, coeff=1) -> "TreeSum":
        return cls({tree: coeff})

    def coefficient(self, tree: LabeledTree) -> Fraction:
        return self.terms.get(tree, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[LabeledTree, Fraction]]:
        """Terms sorted by canonical key, for deterministic output."""
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __add__(self, other):
        if not isinstance(other, TreeSum):
            return NotImplemented
        out = dict(self.terms)
        for tree, c in other.terms.items():
            out[tree] = out.get(tree, Fraction(0)) + c
        return TreeSum(out)

    def __sub__(self, other):
        if not isinstance(other, TreeSum):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TreeSum({tree: -c for tree, c in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return TreeSum({tree: scalar * c for tree, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, TreeSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_tree_sum(self)

    def __repr__(self):
        return f"TreeSum({format_tree_sum(self)!r})"


class TreeTensorSum:
    """Linear combination of tree tensor pairs with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}
        for pair, coeff in (terms or {}).items():
            c = _as_fraction(coeff)
            if not c:
                continue
            clean[pair] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[tuple[LabeledTree, LabeledTree], Fraction]]:
        return sorted(
            self.terms.items(),
            key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1])),
        )

    def swap(self) -> "TreeTensorSum":
        return TreeTensorSum({(b, a): c for (a, b), c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, TreeTensorSum):
            return NotImplemented
        out = dict(self.terms)
        for pair, c in other.terms.items():
            out[pair] = out.get(pair, Fraction(0)) + c
        return TreeTensorSum(out)

    def __sub__(self, other):
        if not isinstance(other, TreeTensorSum):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TreeTensorSum({pair: -c for pair, c in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return TreeTensorSum({pair: scalar * c for pair, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, TreeTensorSum) and self.terms == other.terms

    def __str__(self):
        return format_tree_tensor_sum(self)

    def __repr__(self):
        return f"TreeTensorSum({format_tree_tensor_sum(self)!r})"


def gl_mul(t1: LabeledTree, t2: LabeledTree) -> TreeSum:
    """Product of two trees: sum over all attachments of t1's root forest.

    Each map d from the root children of t1 to the nodes of t2 (including the
    root) contributes one tree; attached roots precede the target node's
    existing children and keep their order from t1.  Like terms collect.
    """
    forest = t1.children
    if not forest:
        return TreeSum.from_tree(t2)
    targets: list[tuple[int, ...]] = [()] + node_paths(t2)
    acc: dict[LabeledTree, Fraction] = {}
    for assignment in _cartesian(targets, repeat=len(forest)):
        attach: dict[tuple[int, ...], list[int]] = {}
        for index, path in enumerate(assignment):
            attach.setdefault(path, []).append(index)
        tree = _attach(t2, forest, attach)
        acc[tree] = acc.get(tree, Fraction(0)) + 1
    return TreeSum(acc)


def _attach(
    t2: LabeledTree,
    forest: tuple[Node, ...],
    attach: dict[tuple[int, ...], list[int]],
) -> LabeledTree:
    def rebuild(node: Node, path: tuple[int, ...]) -> Node:
        pre = tuple(forest[k] for k in attach.get(path, ()))
        kids = pre + tuple(
            rebuild(child, path + (i,)) for i, child in enumerate(node.children)
        )
        return Node(node.label, kids)

    root_pre = tuple(forest[k] for k in attach.get((), ()))
    return LabeledTree(
        root_pre
        + tuple(rebuild(child, (i,)) for i, child in enumerate(t2.children))
    )


def mul(a: TreeSum, b: TreeSum) -> TreeSum:
    """Bilinear extension of the tree product."""
    acc: dict[LabeledTree, Fraction] = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            scale = ca * cb
            for tree, c in gl_mul(ta, tb).terms.items():
                acc[tree] = acc.get(tree, Fraction(0)) + scale * c
    return TreeSum(acc)


def coproduct(tree: LabeledTree) -> TreeTensorSum:
    """Split the root forest over all position subsets, preserving order.

    Identical sibling subtrees give the same split for several position
    subsets, so collected terms pick up binomial multiplicities.
    """
    kids = tree.children
    k = len(kids)
    acc: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}
    for mask in range(1 << k):
        left = LabeledTree(tuple(kids[i] for i in range(k) if mask >> i & 1))
        right = LabeledTree(tuple(kids[i] for i in range(k) if not mask >> i & 1))
        acc[(left, right)] = acc.get((left, right), Fraction(0)) + 1
    return TreeTensorSum(acc)


def counit(a: TreeSum) -> Fraction:
    """Coefficient of the unit tree."""
    return a.coefficient(unit_tree())


_ANTIPODE_MEMO: dict[LabeledTree, TreeSum] = {}


def antipode(tree: LabeledTree) -> TreeSum:
    """Antipode by the graded-connected recursion.

    S(1) = 1; for positive degree, the convolution identity
    sum S(T_(1)) . T_(2) = 0 solves for S(T) in terms of antipodes of strictly
    smaller trees.
    """
    cached = _ANTIPODE_MEMO.get(tree)
    if cached is not None:
        return cached
    if tree.degree == 0:
        result = TreeSum.from_tree(tree)
    else:
        acc: dict[LabeledTree, Fraction] = {}
        unit = unit_tree()
        for (left, right), c in coproduct(tree).terms.items():
            if left == tree and right == unit:
                continue
            partial = mul(antipode(left), TreeSum.from_tree(right))
            for out_tree, q in partial.terms.items():
                acc[out_tree] = acc.get(out_tree, Fraction(0)) - c * q
        result = TreeSum(acc)
    _ANTIPODE_MEMO[tree] = result
    return result


def antipode_sum(a: TreeSum) -> TreeSum:
    out = TreeSum.zero()
    for tree, c in a.terms.items():
        out = out + c * antipode(tree)
    return out


def express_one_child(tree: LabeledTree) -> list[tuple[Fraction, tuple[LabeledTree, ...]]]:
    """Write a tree as an integer combination of products of one-child trees.

    Returns (coefficient, factors) pairs whose products, summed, reproduce the
    tree; every factor is a tree whose root has exactly one child.  Witnesses
    that one-child trees generate the algebra.
    """
    if not tree.children:
        return [(Fraction(1), ())]
    if len(tree.children) == 1:
        return [(Fraction(1), (tree,))]
    head = LabeledTree(tree.children[:1])
    rest = LabeledTree(tree.children[1:])
    out: list[tuple[Fraction, tuple[LabeledTree, ...]]] = []
    for c, factors in express_one_child(rest):
        out.append((c, (head,) + factors))
    for other, c in gl_mul(head, rest).terms.items():
        if other == tree:
            continue
        for c2, factors in express_one_child(other):
            out.append((-c * c2, factors))
    return out


def evaluate_product(factors: Iterable[LabeledTree]) -> TreeSum:
    """Multiply a sequence of trees left to right (empty product = unit)."""
    out = TreeSum.from_tree(unit_tree())
    for tree in factors:
        out = mul(out, TreeSum.from_tree(tree))
    return out


# ---------------------------------------------------------------------------
# Text form.
# ---------------------------------------------------------------------------


def format_tree_sum(a: TreeSum) -> str:
    from .trees import format_tree

    if a.is_zero():
        return "0"
    return " + ".join(f"{c} * {format_tree(tree)}" for tree, c in a.items())


def format_tree_tensor_sum(a: TreeTensorSum) -> str:
    from .trees import format_tree

    if a.is_zero():
        return "0"
    return " + ".join(
        f"{c} * ({format_tree(left)} ⊗ {format_tree(right)})"
        for (left, right), c in a.items()
    )
