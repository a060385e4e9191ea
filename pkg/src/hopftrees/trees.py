"""Ordered rooted trees with derivation labels.

A tree has an unlabeled root; every other node carries a nonzero derivation
label and an ordered child tuple.  Child order is significant everywhere.
Trees are immutable values: all surgery returns new trees, so they can be
shared freely across sums and threads.

Text form: ``*`` is the single-node unit tree; a node is ``<label>[ child,
... ]`` (``label[]`` for a leaf) and a full tree is ``*[ child, ... ]``.
Labels use the derivation grammar from :mod:`hopftrees.poly`, e.g.
``*[ d2[ d1[] ] ]`` or ``*[ (x1)*d1[] ]``.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterator, Sequence

from .poly import Derivation, ParseError, format_derivation, parse_derivation

NodePath = tuple[int, ...]


class Node:
    """A labeled node: nonzero derivation label plus ordered children."""

    __slots__ = ("label", "children", "size", "_hash")

    def __init__(self, label: Derivation, children: Sequence["Node"] = ()):
        if not isinstance(label, Derivation):
            raise TypeError("node labels must be derivations")
        if label.is_zero():
            raise ValueError("the zero derivation cannot label a node")
        children = tuple(children)
        for child in children:
            if not isinstance(child, Node):
                raise TypeError("children must be nodes")
            if child.label.nvars != label.nvars:
                raise ValueError("all labels in a tree must share one ring")
        self.label = label
        self.children = children
        self.size = 1 + sum(c.size for c in children)
        self._hash = hash((label, children))

    def __eq__(self, other):
        return (
            isinstance(other, Node)
            and self._hash == other._hash
            and self.label == other.label
            and self.children == other.children
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Node({format_derivation(self.label)!r}, {len(self.children)} children)"


class LabeledTree:
    """Ordered rooted tree with an unlabeled root.

    ``degree`` is the number of non-root nodes; the single-node tree (degree
    0) is the multiplicative unit of the tree algebra.
    """

    __slots__ = ("children", "degree", "_hash")

    def __init__(self, children: Sequence[Node] = ()):
        children = tuple(children)
        for child in children:
            if not isinstance(child, Node):
                raise TypeError("children must be nodes")
            if child.label.nvars != children[0].label.nvars:
                raise ValueError("all labels in a tree must share one ring")
        self.children = children
        self.degree = sum(c.size for c in children)
        self._hash = hash(("LabeledTree", children))

    def __eq__(self, other):
        return (
            isinstance(other, LabeledTree)
            and self._hash == other._hash
            and self.children == other.children
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return format_tree(self)

    def __repr__(self):
        return f"LabeledTree({format_tree(self)!r})"


_UNIT = LabeledTree(())


def unit_tree() -> LabeledTree:
    """The single-node tree, the unit of the tree algebra."""
    return _UNIT


def v(label: Derivation) -> LabeledTree:
    """Two-node tree: the root with one child labeled ``label``."""
    return LabeledTree((Node(label),))


def u(label: Derivation, *subtrees: LabeledTree) -> LabeledTree:
    """Root with one child labeled ``label`` adopting the subtrees' root children.

    The child's children are the root children of the subtrees concatenated in
    argument order, so u(E; T1, ..., Tk) == u(E; t(T1, ..., Tk)) and
    u(E) == v(E).
    """
    merged: list[Node] = []
    for tree in subtrees:
        merged.extend(tree.children)
    return LabeledTree((Node(label, tuple(merged)),))


def t(*subtrees: LabeledTree) -> LabeledTree:
    """Identify the roots: concatenate root children in argument order."""
    merged: list[Node] = []
    for tree in subtrees:
        merged.extend(tree.children)
    return LabeledTree(tuple(merged))


def _node_at(tree: LabeledTree, path: Sequence[int]) -> Node:
    path = tuple(path)
    if not path:
        raise ValueError("path addresses the root; a non-root node is required")
    nodes = tree.children
    node = None
    for index in path:
        if not 0 <= index < len(nodes):
            raise ValueError(f"path {path!r} does not resolve in the tree")
        node = nodes[index]
        nodes = node.children
    return node


def subtree_at(tree: LabeledTree, path: Sequence[int]) -> LabeledTree:
    """Subtree rooted at the addressed node, with that node's label dropped."""
    return LabeledTree(_node_at(tree, path).children)


def label_at(tree: LabeledTree, path: Sequence[int]) -> Derivation:
    return _node_at(tree, path).label


def graft(
    tree: LabeledTree,
    path: Sequence[int],
    label: Derivation,
    replacement: LabeledTree,
) -> LabeledTree:
    """Relabel the addressed node and replace its subtree.

    The node keeps its position, takes ``label``, and its children become the
    root children of ``replacement``; grafting back label_at/subtree_at is the
    identity.
    """
    path = tuple(path)
    _node_at(tree, path)  # validates

    def rebuild(nodes: tuple[Node, ...], rest: tuple[int, ...]) -> tuple[Node, ...]:
        index = rest[0]
        node = nodes[index]
        if len(rest) == 1:
            new_node = Node(label, replacement.children)
        else:
            new_node = Node(node.label, rebuild(node.children, rest[1:]))
        return nodes[:index] + (new_node,) + nodes[index + 1 :]

    return LabeledTree(rebuild(tree.children, path))


def node_paths(tree: LabeledTree) -> list[NodePath]:
    """Paths of all non-root nodes, in depth-first preorder."""
    out: list[NodePath] = []

    def walk(nodes: tuple[Node, ...], prefix: NodePath) -> None:
        for index, node in enumerate(nodes):
            path = prefix + (index,)
            out.append(path)
            walk(node.children, path)

    walk(tree.children, ())
    return out


def tree_nvars(tree: LabeledTree) -> int | None:
    """Variable count of the labels; None for the unit tree."""
    for node in tree.children:
        return node.label.nvars
    return None


# ---------------------------------------------------------------------------
# Canonical text form.
# ---------------------------------------------------------------------------


def format_tree(tree: LabeledTree) -> str:
    if not tree.children:
        return "*"
    return "*[ " + ", ".join(_format_node(c) for c in tree.children) + " ]"


def _format_node(node: Node) -> str:
    head = format_derivation(node.label)
    if not node.children:
        return head + "[]"
    return head + "[ " + ", ".join(_format_node(c) for c in node.children) + " ]"


def canonical_key(tree: LabeledTree) -> str:
    """Deterministic total key; equal trees get equal keys, child order matters."""
    return format_tree(tree)


def parse_tree(text: str, nvars: int) -> LabeledTree:
    pos, tree = _parse_tree_at(text, _skip_ws(text, 0), nvars)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(text, pos, "trailing input after tree")
    return tree


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_tree_at(text: str, pos: int, nvars: int) -> tuple[int, LabeledTree]:
    if pos >= len(text) or text[pos] != "*":
        raise ParseError(text, pos, "a tree starts with '*'")
    pos = _skip_ws(text, pos + 1)
    if pos < len(text) and text[pos] == "[":
        pos, children = _parse_node_list(text, pos, nvars)
    else:
        children = ()
    return pos, LabeledTree(children)


def _parse_node_list(text: str, pos: int, nvars: int) -> tuple[int, tuple[Node, ...]]:
    # caller guarantees text[pos] == "["
    pos = _skip_ws(text, pos + 1)
    children: list[Node] = []
    if pos < len(text) and text[pos] == "]":
        return pos + 1, ()
    while True:
        pos, node = _parse_node(text, pos, nvars)
        children.append(node)
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == ",":
            pos = _skip_ws(text, pos + 1)
            continue
        if pos < len(text) and text[pos] == "]":
            return pos + 1, tuple(children)
        raise ParseError(text, pos, "expected ',' or ']' in child list")


def _parse_node(text: str, pos: int, nvars: int) -> tuple[int, Node]:
    # label text runs to the node's opening bracket; labels never contain '['
    start = pos
    while pos < len(text) and text[pos] != "[":
        if text[pos] in ",]":
            raise ParseError(text, pos, "node is missing its child bracket")
        pos += 1
    if pos >= len(text):
        raise ParseError(text, pos, "node is missing its child bracket")
    label_text = text[start:pos].strip()
    if not label_text:
        raise ParseError(text, start, "empty node label")
    label = parse_derivation(label_text, nvars)
    if label.is_zero():
        raise ParseError(text, start, "zero label in tree")
    pos, children = _parse_node_list(text, pos, nvars)
    return pos, Node(label, children)


# ---------------------------------------------------------------------------
# Enumeration of small trees, used by the exhaustive axiom sweeps.
# ---------------------------------------------------------------------------


def iter_forest_shapes(size: int) -> Iterator[tuple]:
    """All ordered forest shapes with the given node count.

    A shape is a tuple of node shapes; a node shape is the tuple of its
    children's shapes.
    """
    if size == 0:
        yield ()
        return
    for head_size in range(1, size + 1):
        for head in iter_forest_shapes(head_size - 1):
            for tail in iter_forest_shapes(size - head_size):
                yield (head,) + tail


def tree_from_shape(shape: tuple, labels: Sequence[Derivation]) -> LabeledTree:
    """Build a tree over a forest shape, consuming labels in preorder."""
    it = iter(labels)
    tree = LabeledTree(tuple(_build_node(s, it) for s in shape))
    leftover = sum(1 for _ in it)
    if leftover:
        raise ValueError(f"{leftover} unused labels for the shape")
    return tree


def iter_trees(alphabet: Sequence[Derivation], degree: int) -> Iterator[LabeledTree]:
    """All trees of the given degree with labels drawn from ``alphabet``."""
    for shape in iter_forest_shapes(degree):
        for labels in _cartesian(alphabet, repeat=degree):
            yield tree_from_shape(shape, labels)


def _build_node(shape: tuple, labels: Iterator[Derivation]) -> Node:
    label = next(labels)
    return Node(label, tuple(_build_node(s, labels) for s in shape))


def iter_trees_up_to(
    alphabet: Sequence[Derivation], max_degree: int
) -> Iterator[LabeledTree]:
    """All trees of degree 0..max_degree over ``alphabet``."""
    for degree in range(max_degree + 1):
        yield from iter_trees(alphabet, degree)
