"""The tree-algebra action on Q[x1..xN] driven by a connection.

Construction: the two-node tree with label E acts as E, and the three-node
chain u(E; v(F)) acts as nabla_F E.  A tree whose root has one child reduces
to a derivation by the brush recursion (reduce each branch below the labeled
child to a derivation, then peel branches off one at a time, trading each
peel for a covariant derivative plus correction terms).  A general tree
reduces through the product: splitting off the first root branch B gives
B . rest = T + corrections, so T acts as B applied after rest, minus the
corrections, which have strictly fewer root children.

The same recursion run symbolically over operator normal forms yields the
realization of trees as higher-order differential operators.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Callable, Sequence
from weakref import WeakKeyDictionary

from .hopf import TreeSum, coproduct, gl_mul
from .poly import Derivation, DiffOperator, Polynomial
from .trees import LabeledTree, graft, label_at, subtree_at, v

_DERIV_MEMO: "WeakKeyDictionary" = WeakKeyDictionary()
_PSI_MEMO: "WeakKeyDictionary" = WeakKeyDictionary()


def _memo_for(conn, store: "WeakKeyDictionary") -> dict:
    memo = store.get(conn)
    if memo is None:
        memo = {}
        store[conn] = memo
    return memo


def as_derivation(tree: LabeledTree, conn) -> Derivation:
    """Derivation acted by a tree whose root has exactly one child.

    Trees of this form always act as first-order operators; the recursion
    revisits subtrees heavily, so results are memoized per connection.
    """
    if len(tree.children) != 1:
        raise ValueError("the root must have exactly one child")
    memo = _memo_for(conn, _DERIV_MEMO)
    cached = memo.get(tree)
    if cached is not None:
        return cached
    child = tree.children[0]
    branch_fields = [
        as_derivation(LabeledTree((branch,)), conn) for branch in child.children
    ]
    result = _brush(child.label, branch_fields, conn)
    memo[tree] = result
    return result


def _brush(e: Derivation, fields: list[Derivation], conn) -> Derivation:
    """Action of a one-child tree labeled e whose grandchildren act as ``fields``.

    Peeling the first field F trades the tree for nabla_F of the shorter tree
    minus the trees where F has been pushed onto one of the remaining fields.
    Zero fields flow through (nabla is additive, so zero slots give zero).
    """
    if not fields:
        return e
    first, rest = fields[0], fields[1:]
    out = conn.nabla(first, _brush(e, rest, conn))
    for i in range(len(rest)):
        pushed = conn.nabla(first, rest[i])
        out = out - _brush(e, rest[:i] + [pushed] + rest[i + 1 :], conn)
    return out


def act(tree: LabeledTree, s: Polynomial, conn) -> Polynomial:
    """Action of a tree on a polynomial.

    The unit tree is the identity.  Otherwise split off the first root branch
    B: the product B . rest equals the tree plus corrections whose roots have
    one child fewer, so the module axiom turns the action into a recursion.
    """
    if not tree.children:
        return s
    head = LabeledTree(tree.children[:1])
    rest = LabeledTree(tree.children[1:])
    field = as_derivation(head, conn)
    out = field.apply(act(rest, s, conn))
    if not rest.children:
        return out
    for other, c in gl_mul(head, rest).terms.items():
        if other == tree:
            continue
        out = out - c * act(other, s, conn)
    return out


def act_sum(a: TreeSum, s: Polynomial, conn) -> Polynomial:
    """Linear extension of the action to tree sums."""
    out = Polynomial.zero(s.nvars)
    for tree, c in a.terms.items():
        out = out + c * act(tree, s, conn)
    return out


def act_closed_form(tree: LabeledTree, s: Polynomial) -> Polynomial:
    """Action via the direct multi-index sum, independent of any recursion.

    Number the non-root nodes; for every assignment of a basis index to each,
    multiply the iterated partials of each node's chosen coefficient (of the
    target polynomial, for the root) with respect to its children's indices,
    and sum over all assignments.  Agrees with the connection-driven action
    under the induced (flat) connection.
    """
    nvars = s.nvars
    labels: list[Derivation] = []
    children_of: dict[int, list[int]] = {0: []}

    def number(node: Node, parent: int) -> None:
        labels.append(node.label)
        me = len(labels)
        if node.label.nvars != nvars:
            raise ValueError("tree labels and polynomial share one ring")
        children_of[me] = []
        children_of[parent].append(me)
        for child in node.children:
            number(child, me)

    for child in tree.children:
        number(child, 0)
    m = len(labels)
    total = Polynomial.zero(nvars)
    for assignment in _cartesian(range(1, nvars + 1), repeat=m):
        prod = Polynomial.one(nvars)
        for i in range(m + 1):
            base = s if i == 0 else labels[i - 1].coeff(assignment[i - 1])
            for j in children_of[i]:
                base = base.partial(assignment[j - 1])
            prod = prod * base
            if prod.is_zero():
                break
        total = total + prod
    return total


def act_coherent(tree: LabeledTree, s: Polynomial, conn) -> Polynomial:
    """Action evaluated through coherence alone, as a cross-check against act.

    Each root branch is first reduced to the single derivation it acts as;
    the remaining computation works on plain derivation lists (never on
    trees), peeling the first field and folding its covariant pushes onto the
    rest.
    """
    fields = [
        as_derivation(LabeledTree((branch,)), conn) for branch in tree.children
    ]
    return _act_fields(fields, s, conn)


def _act_fields(fields: list[Derivation], s: Polynomial, conn) -> Polynomial:
    if not fields:
        return s
    first, rest = fields[0], fields[1:]
    out = first.apply(_act_fields(rest, s, conn))
    for i in range(len(rest)):
        pushed = conn.nabla(first, rest[i])
        out = out - _act_fields(rest[:i] + [pushed] + rest[i + 1 :], s, conn)
    return out


def psi(tree: LabeledTree, conn) -> DiffOperator:
    """Differential operator realizing the tree's action.

    Runs the act recursion symbolically over operator normal forms, so
    applying the result to any polynomial matches act, and products of trees
    map to compositions of operators.
    """
    memo = _memo_for(conn, _PSI_MEMO)
    cached = memo.get(tree)
    if cached is not None:
        return cached
    if not tree.children:
        result = DiffOperator.identity(conn.nvars)
    else:
        head = LabeledTree(tree.children[:1])
        rest = LabeledTree(tree.children[1:])
        result = as_derivation(head, conn).as_operator().compose(psi(rest, conn))
        if rest.children:
            for other, c in gl_mul(head, rest).terms.items():
                if other == tree:
                    continue
                result = result - c * psi(other, conn)
    memo[tree] = result
    return result


def psi_sum(a: TreeSum, conn) -> DiffOperator:
    out = DiffOperator.zero(conn.nvars)
    for tree, c in a.terms.items():
        out = out + c * psi(tree, conn)
    return out


def leibnitz_identity(
    tree: LabeledTree,
    node: Sequence[int],
    r: Polynomial,
    e: Derivation,
    s: Polynomial,
    conn,
) -> tuple[Polynomial, Polynomial]:
    """Both sides of the label-splitting identity at a node.

    With node i labeled r*E and T_i the subtree below it, the action of the
    tree factors as sum over the coproduct of T_i of (T_i_(1) . r) times the
    action of the tree with node i relabeled E over T_i_(2).  Returns
    (plain action, factored form); they agree for every connection-driven
    action.
    """
    node = tuple(node)
    if label_at(tree, node) != r * e:
        raise ValueError("label of the node does not factor as r * E")
    lhs = act(tree, s, conn)
    below = subtree_at(tree, node)
    rhs = Polynomial.zero(s.nvars)
    for (left, right), c in coproduct(below).terms.items():
        weight = act(left, r, conn)
        if weight.is_zero():
            continue
        regrafted = graft(tree, node, e, right)
        rhs = rhs + c * weight * act(regrafted, s, conn)
    return lhs, rhs


def coherence_identity(
    tree: LabeledTree,
    node: Sequence[int],
    conn,
) -> tuple[Callable[[Polynomial], Polynomial], Callable[[Polynomial], Polynomial]]:
    """Evaluators for a tree and for the tree with a one-child subtree collapsed.

    The subtree rooted at ``node`` (the whole tree for the empty path) must
    have a one-child root; it is replaced by the two-node tree labeled with
    the derivation it acts as.  Both evaluators agree on every polynomial.
    A zero replacement label cannot appear in a tree, and a tree containing a
    zero label would annihilate everything, so that case returns the zero
    evaluator.
    """
    node = tuple(node)
    inner = subtree_at(tree, node) if node else tree
    if len(inner.children) != 1:
        raise ValueError("the addressed subtree's root must have exactly one child")
    field = as_derivation(inner, conn)
    if field.is_zero():
        replaced = None
    elif node:
        replaced = graft(tree, node, label_at(tree, node), v(field))
    else:
        replaced = v(field)

    def lhs(s: Polynomial) -> Polynomial:
        return act(tree, s, conn)

    if replaced is None:
        def rhs(s: Polynomial) -> Polynomial:
            return Polynomial.zero(s.nvars)
    else:
        def rhs(s: Polynomial) -> Polynomial:
            return act(replaced, s, conn)

    return lhs, rhs
