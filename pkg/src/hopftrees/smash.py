"""The smash product of Q[x1..xN] with the tree algebra.

Elements are finite sums of polynomial-coefficient trees r # T.  The product
twists through the action: (r # T)(s # K) = sum r (T_(1) . s) # T_(2) K over
the coproduct of T, so a :class:`SmashAlgebra` context carries the connection
that drives the action.

Two tensor normal forms support the coproduct and the antiproduct:

* ``SmashTensorLeft`` holds sums over (J, K) of p (1#J) (x)_R (1#K); the
  middle relation (r b) (x) c = b (x) (r c) lets every coefficient migrate to
  the left factor, and freeness of the smash product over the tree basis
  makes the result unique.
* ``SmashTensorBi`` holds sums over K of b_K (x)_r (1#K) with full smash
  elements on the left; right multiplication by ring elements is realized by
  multiplying with s # 1 and re-normalizing.

``alpha`` rewrites every node label into basis partials by the substitution
that pulls label coefficients out through the subtree coproduct; its kernel
is exactly the compatibility ideal, so ``ideal_member`` is a kernel test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .action import act, psi
from .hopf import TreeSum, antipode, coproduct, gl_mul, mul as tree_mul
from .poly import (
    Derivation,
    DiffOperator,
    ParseError,
    Polynomial,
    format_polynomial,
    parse_polynomial,
)
from .trees import (
    LabeledTree,
    canonical_key,
    format_tree,
    graft,
    label_at,
    node_paths,
    parse_tree,
    subtree_at,
    unit_tree,
)


class SmashElement:
    """Finite sum of polynomial-coefficient trees over one ring."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean: dict[LabeledTree, Polynomial] = {}
        for tree, p in (terms or {}).items():
            if isinstance(p, (int, Fraction)):
                p = Polynomial.constant(nvars, p)
            if not isinstance(p, Polynomial) or p.nvars != nvars:
                raise ValueError("coefficients must be polynomials in the context ring")
            if p.is_zero():
                continue
            clean[tree] = p
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "SmashElement":
        return cls(nvars)

    @classmethod
    def unit(cls, nvars: int) -> "SmashElement":
        return cls(nvars, {unit_tree(): Polynomial.one(nvars)})

    @classmethod
    def from_parts(cls, p: Polynomial, tree: LabeledTree) -> "SmashElement":
        return cls(p.nvars, {tree: p})

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "SmashElement":
        return cls(p.nvars, {unit_tree(): p})

    @classmethod
    def from_tree_sum(cls, nvars: int, a: TreeSum) -> "SmashElement":
        return cls(nvars, {tree: Polynomial.constant(nvars, c) for tree, c in a.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[LabeledTree, Polynomial]]:
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __add__(self, other):
        if not isinstance(other, SmashElement):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("ring mismatch")
        out = dict(self.terms)
        for tree, p in other.terms.items():
            out[tree] = out[tree] + p if tree in out else p
        return SmashElement(self.nvars, out)

    def __sub__(self, other):
        if not isinstance(other, SmashElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SmashElement(self.nvars, {tree: -p for tree, p in self.terms.items()})

    def __rmul__(self, other):
        """Left module action of the ring (and scalars) on the smash product."""
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if isinstance(other, Polynomial):
            return SmashElement(
                self.nvars, {tree: other * p for tree, p in self.terms.items()}
            )
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, SmashElement)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        return format_smash(self)

    def __repr__(self):
        return f"SmashElement({format_smash(self)!r})"


class SmashTensorLeft:
    """Normal form sum over (J, K) of p (1#J) (x)_R (1#K)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean: dict[tuple[LabeledTree, LabeledTree], Polynomial] = {}
        for pair, p in (terms or {}).items():
            if isinstance(p, (int, Fraction)):
                p = Polynomial.constant(nvars, p)
            if p.is_zero():
                continue
            clean[pair] = p
        self.nvars = nvars
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1])),
        )

    def __add__(self, other):
        if not isinstance(other, SmashTensorLeft):
            return NotImplemented
        out = dict(self.terms)
        for pair, p in other.terms.items():
            out[pair] = out[pair] + p if pair in out else p
        return SmashTensorLeft(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return SmashTensorLeft(
                self.nvars, {pair: other * p for pair, p in self.terms.items()}
            )
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, SmashTensorLeft)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({format_polynomial(p)} # {format_tree(j)}) ⊗ (1 # {format_tree(k)})"
            for (j, k), p in self.items()
        )


class SmashTensorBi:
    """Normal form sum over K of b_K (x)_r (1#K), right factors bare trees."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean: dict[LabeledTree, SmashElement] = {}
        for tree, b in (terms or {}).items():
            if not isinstance(b, SmashElement) or b.nvars != nvars:
                raise ValueError("left factors must be smash elements in the ring")
            if b.is_zero():
                continue
            clean[tree] = b
        self.nvars = nvars
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __add__(self, other):
        if not isinstance(other, SmashTensorBi):
            return NotImplemented
        out = dict(self.terms)
        for tree, b in other.terms.items():
            out[tree] = out[tree] + b if tree in out else b
        return SmashTensorBi(self.nvars, out)

    def __sub__(self, other):
        if not isinstance(other, SmashTensorBi):
            return NotImplemented
        return self + SmashTensorBi(
            other.nvars, {tree: -b for tree, b in other.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, SmashTensorBi)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({format_smash(b)}) ⊗ (1 # {format_tree(k)})" for k, b in self.items()
        )


class SmashAlgebra:
    """Smash product context: a ring dimension plus the connection for the action."""

    def __init__(self, conn):
        self.conn = conn
        self.nvars = conn.nvars

    # -- basic structure ----------------------------------------------------

    def unit(self) -> SmashElement:
        return SmashElement.unit(self.nvars)

    def mul(self, a: SmashElement, b: SmashElement) -> SmashElement:
        """(r#T)(s#K) = sum over the coproduct of T of r (T_(1).s) # T_(2) K."""
        self._check(a), self._check(b)
        acc: dict[LabeledTree, Polynomial] = {}
        for ta, pa in a.terms.items():
            split = coproduct(ta)
            for tb, pb in b.terms.items():
                for (left, right), c in split.terms.items():
                    weight = pa * act(left, pb, self.conn) * c
                    if weight.is_zero():
                        continue
                    for tree, q in gl_mul(right, tb).terms.items():
                        extra = weight * q
                        acc[tree] = acc[tree] + extra if tree in acc else extra
        return SmashElement(self.nvars, acc)

    def delta(self, a: SmashElement) -> SmashTensorLeft:
        """Coproduct: r # T goes to sum (r # T_(1)) (x)_R (1 # T_(2))."""
        self._check(a)
        acc: dict[tuple[LabeledTree, LabeledTree], Polynomial] = {}
        for tree, p in a.terms.items():
            for pair, c in coproduct(tree).terms.items():
                extra = c * p
                acc[pair] = acc[pair] + extra if pair in acc else extra
        return SmashTensorLeft(self.nvars, acc)

    def counit(self, a: SmashElement) -> Polynomial:
        """Ring-valued counit: the coefficient of the unit tree."""
        self._check(a)
        return a.terms.get(unit_tree(), Polynomial.zero(self.nvars))

    def antiproduct(self, a: SmashElement) -> SmashTensorBi:
        """E(r#h) = sum (r # h_(1)) (x)_r (1 # S(h_(2)))."""
        self._check(a)
        acc: dict[LabeledTree, dict[LabeledTree, Polynomial]] = {}
        for tree, p in a.terms.items():
            for (left, right), c in coproduct(tree).terms.items():
                for w, q in antipode(right).terms.items():
                    bucket = acc.setdefault(w, {})
                    extra = (c * q) * p
                    bucket[left] = bucket[left] + extra if left in bucket else extra
        return SmashTensorBi(
            self.nvars,
            {w: SmashElement(self.nvars, bucket) for w, bucket in acc.items()},
        )

    # -- tensor manipulation ------------------------------------------------

    def stl_from_pairs(
        self, pairs: Iterable[tuple[SmashElement, SmashElement]]
    ) -> SmashTensorLeft:
        """Normalize raw left (x)_R right pairs: right coefficients migrate left."""
        acc: dict[tuple[LabeledTree, LabeledTree], Polynomial] = {}
        for left, right in pairs:
            for j, p in left.terms.items():
                for k, s in right.terms.items():
                    extra = p * s
                    key = (j, k)
                    acc[key] = acc[key] + extra if key in acc else extra
        return SmashTensorLeft(self.nvars, acc)

    def stl_mul(self, x: SmashTensorLeft, y: SmashTensorLeft) -> SmashTensorLeft:
        """Componentwise product on B (x)_R B, renormalized."""
        pairs = []
        for (j1, k1), p in x.terms.items():
            for (j2, k2), q in y.terms.items():
                left = self.mul(SmashElement(self.nvars, {j1: p}), SmashElement(self.nvars, {j2: q}))
                right = self.mul(
                    SmashElement(self.nvars, {k1: Polynomial.one(self.nvars)}),
                    SmashElement(self.nvars, {k2: Polynomial.one(self.nvars)}),
                )
                pairs.append((left, right))
        return self.stl_from_pairs(pairs)

    def stl_counit_left(self, x: SmashTensorLeft) -> SmashElement:
        """Contract the counit against the left factor."""
        acc: dict[LabeledTree, Polynomial] = {}
        unit = unit_tree()
        for (j, k), p in x.terms.items():
            if j != unit:
                continue
            acc[k] = acc[k] + p if k in acc else p
        return SmashElement(self.nvars, acc)

    def stl_counit_right(self, x: SmashTensorLeft) -> SmashElement:
        """Contract the counit against the right factor."""
        acc: dict[LabeledTree, Polynomial] = {}
        unit = unit_tree()
        for (j, k), p in x.terms.items():
            if k != unit:
                continue
            acc[j] = acc[j] + p if j in acc else p
        return SmashElement(self.nvars, acc)

    def stb_scale_left(self, r, x: SmashTensorBi) -> SmashTensorBi:
        return SmashTensorBi(self.nvars, {k: r * b for k, b in x.terms.items()})

    def stb_mul_right(self, x: SmashTensorBi, c: SmashElement) -> SmashTensorBi:
        """Multiply the right tensor factor and renormalize.

        (1#K) c generally has polynomial coefficients; each migrates across
        the bimodule tensor onto the left factor as right multiplication by
        s # 1.
        """
        acc: dict[LabeledTree, SmashElement] = {}
        for k, b in x.terms.items():
            prod = self.mul(SmashElement(self.nvars, {k: Polynomial.one(self.nvars)}), c)
            for tree, s in prod.terms.items():
                shifted = self.mul(b, SmashElement.from_polynomial(s))
                acc[tree] = acc[tree] + shifted if tree in acc else shifted
        return SmashTensorBi(
            self.nvars, {k: b for k, b in acc.items() if not b.is_zero()}
        )

    def stb_mul_right_poly(self, x: SmashTensorBi, r: Polynomial) -> SmashTensorBi:
        return self.stb_mul_right(x, SmashElement.from_polynomial(r))

    def mu_of_stb(self, x: SmashTensorBi) -> SmashElement:
        """Collapse the tensor by multiplication."""
        out = SmashElement.zero(self.nvars)
        for k, b in x.terms.items():
            out = out + self.mul(b, SmashElement(self.nvars, {k: Polynomial.one(self.nvars)}))
        return out

    # -- basis rewriting ----------------------------------------------------

    def alpha(self, a: SmashElement, rng=None) -> SmashElement:
        """Rewrite every node label into a single basis partial.

        At a node labeled sum_u r_u d_u, the substitution replaces the term by
        sum over u and over the coproduct of the node's subtree of
        (below_(1) . r_u) # (tree with the node relabeled d_u over below_(2)).
        Each step strictly reduces the number of non-basis labels, and the
        result does not depend on the node order (``rng`` picks random nodes,
        for exercising exactly that).
        """
        self._check(a)
        done: dict[LabeledTree, Polynomial] = {}
        work: list[tuple[Polynomial, LabeledTree]] = [
            (p, tree) for tree, p in a.terms.items()
        ]
        while work:
            p, tree = work.pop()
            pending = [
                path
                for path in node_paths(tree)
                if label_at(tree, path).is_basis() is None
            ]
            if not pending:
                done[tree] = done[tree] + p if tree in done else p
                continue
            path = pending[0] if rng is None else pending[rng.randrange(len(pending))]
            label = label_at(tree, path)
            below = subtree_at(tree, path)
            split = coproduct(below)
            for index, coeff in label.terms():
                basis = Derivation.basis(self.nvars, index)
                for (left, right), c in split.terms.items():
                    weight = p * act(left, coeff, self.conn) * c
                    if weight.is_zero():
                        continue
                    work.append((weight, graft(tree, path, basis, right)))
        return SmashElement(self.nvars, done)

    def beta(self, a: SmashElement) -> SmashElement:
        """Inclusion of the basis-labeled subalgebra; validates the labels."""
        self._check(a)
        for tree in a.terms:
            for path in node_paths(tree):
                if label_at(tree, path).is_basis() is None:
                    raise ValueError("beta expects basis-labeled trees only")
        return a

    def ideal_member(self, a: SmashElement) -> bool:
        """Membership in the label-compatibility ideal: the kernel of alpha."""
        return self.alpha(a).is_zero()

    def substitution_generator(
        self,
        tree: LabeledTree,
        node: Sequence[int],
        r: Polynomial,
        e: Derivation,
    ) -> SmashElement:
        """Ideal generator 1#T - sum (below_(1).r) # T(node, E, below_(2)).

        The node's label must factor as r * E; every such generator lies in
        the kernel of alpha.
        """
        node = tuple(node)
        if label_at(tree, node) != r * e:
            raise ValueError("label of the node does not factor as r * E")
        out = SmashElement(self.nvars, {tree: Polynomial.one(self.nvars)})
        below = subtree_at(tree, node)
        for (left, right), c in coproduct(below).terms.items():
            weight = c * act(left, r, self.conn)
            if weight.is_zero():
                continue
            out = out - SmashElement.from_parts(weight, graft(tree, node, e, right))
        return out

    # -- action and operators -----------------------------------------------

    def act(self, a: SmashElement, s: Polynomial) -> Polynomial:
        """r # T acts as r times the action of T."""
        self._check(a)
        out = Polynomial.zero(self.nvars)
        for tree, p in a.terms.items():
            out = out + p * act(tree, s, self.conn)
        return out

    def psi(self, a: SmashElement) -> DiffOperator:
        """Realize r # T as the operator r . psi(T)."""
        self._check(a)
        out = DiffOperator.zero(self.nvars)
        for tree, p in a.terms.items():
            out = out + p * psi(tree, self.conn)
        return out

    def word_maps(self, word: Sequence[Derivation]) -> tuple[SmashElement, DiffOperator]:
        """Both legs of the word diagram.

        A word E1..En maps to 1 # (v(E1) ... v(En)) on the tree side and to
        the composition E1 o ... o En in operator normal form; applying psi to
        the tree side must reproduce the operator side.
        """
        if not word:
            raise ValueError("the word must be nonempty")
        from .trees import v as _v

        for e in word:
            if e.nvars != self.nvars:
                raise ValueError("word entries must live in the context ring")
        tree_side = TreeSum.from_tree(_v(word[0]))
        op_side = word[0].as_operator()
        for e in word[1:]:
            tree_side = tree_mul(tree_side, TreeSum.from_tree(_v(e)))
            op_side = op_side.compose(e.as_operator())
        return SmashElement.from_tree_sum(self.nvars, tree_side), op_side

    def _check(self, a) -> None:
        if a.nvars != self.nvars:
            raise ValueError("element does not live in the context ring")


# ---------------------------------------------------------------------------
# Text form: ``poly # tree + poly # tree``; multi-term or negative-leading
# polynomial coefficients are parenthesized so the sum splits unambiguously.
# ---------------------------------------------------------------------------


def format_smash(a: SmashElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for tree, p in a.items():
        text = format_polynomial(p)
        if len(p.terms) > 1 or text.startswith("-"):
            text = f"({text})"
        parts.append(f"{text} # {format_tree(tree)}")
    return " + ".join(parts)


def parse_smash(text: str, nvars: int) -> SmashElement:
    out = SmashElement.zero(nvars)
    for sign, chunk, offset in _split_top_level(text):
        hash_pos = _find_hash(chunk)
        if hash_pos is None:
            raise ParseError(text, offset, "smash term needs the form 'poly # tree'")
        poly_text = chunk[:hash_pos].strip()
        tree_text = chunk[hash_pos + 1 :].strip()
        if not poly_text or not tree_text:
            raise ParseError(text, offset, "smash term needs the form 'poly # tree'")
        p = parse_polynomial(poly_text, nvars)
        if sign < 0:
            p = -p
        out = out + SmashElement.from_parts(p, parse_tree(tree_text, nvars))
    return out


def _split_top_level(text: str) -> list[tuple[int, str, int]]:
    """Split a sum on +/- outside parentheses and brackets."""
    chunks: list[tuple[int, str, int]] = []
    depth = 0
    sign = 1
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in "+-" and text[start:i].strip():
            chunks.append((sign, text[start:i], start))
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    if text[start:].strip():
        chunks.append((sign, text[start:], start))
    return chunks


def _find_hash(chunk: str) -> int | None:
    depth = 0
    for i, ch in enumerate(chunk):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "#" and depth == 0:
            return i
    return None
