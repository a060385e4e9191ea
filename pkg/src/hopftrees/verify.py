"""Exhaustive and seeded sweeps over the algebraic identities.

Three suites mirror the library layers: ``hopf`` (tree algebra axioms,
exhaustive over small trees), ``action`` (connection axioms, module and
module-algebra laws, label splitting, coherence, closed-form agreement, the
operator realization), and ``smash`` (smash product axioms, the antiproduct,
basis rewriting, and the word diagram).  Every check is an exact identity;
a failure carries a printable witness.  All sampling is driven by one seed,
so reports are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _cartesian

from . import action as act_mod
from . import hopf
from .connection import Connection, InducedConnection, axiom_check, flat_connection
from .poly import Derivation, Polynomial
from .smash import SmashAlgebra, SmashElement
from .trees import (
    LabeledTree,
    format_tree,
    iter_forest_shapes,
    iter_trees_up_to,
    label_at,
    node_paths,
    subtree_at,
    t,
    tree_from_shape,
    u,
    unit_tree,
    v,
)


@dataclass
class CheckResult:
    suite: str
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def hall_fields() -> tuple[Derivation, Derivation]:
    """The two vector fields on Q[x1..x8] used as a regression example."""
    n = 8
    x = lambda i: Polynomial.variable(n, i)
    half = Fraction(1, 2)
    e1 = Derivation.basis(n, 1)
    e2 = Derivation.from_terms(
        n,
        [
            (2, Polynomial.one(n)),
            (3, -x(1)),
            (4, half * (x(1) * x(1))),
            (5, x(1) * x(2)),
            (6, Fraction(-1, 6) * (x(1) * x(1) * x(1))),
            (7, -half * (x(1) * x(1) * x(2))),
            (8, -half * (x(1) * x(2) * x(2))),
        ],
    )
    return e1, e2


# ---------------------------------------------------------------------------
# Random generators (all driven by one Random instance).
# ---------------------------------------------------------------------------


def _rand_poly(rng: random.Random, nvars: int, max_degree: int, nonzero=False) -> Polynomial:
    while True:
        terms: dict[tuple[int, ...], Fraction] = {}
        for _ in range(rng.randint(1, 3)):
            exps = [0] * nvars
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(nvars)] += 1
            coeff = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        p = Polynomial(nvars, terms)
        if not (nonzero and p.is_zero()):
            return p


_SHAPES = {degree: list(iter_forest_shapes(degree)) for degree in range(5)}


def _rand_tree(rng: random.Random, alphabet, degree: int) -> LabeledTree:
    shape = rng.choice(_SHAPES[degree])
    labels = [rng.choice(alphabet) for _ in range(degree)]
    return tree_from_shape(shape, labels)


def _rand_derivation(rng: random.Random, nvars: int, max_degree=1) -> Derivation:
    coeffs = []
    for _ in range(nvars):
        if rng.random() < 0.5:
            coeffs.append(Polynomial.zero(nvars))
        else:
            coeffs.append(_rand_poly(rng, nvars, max_degree))
    return Derivation(coeffs)


def _rand_connection(rng: random.Random, nvars: int) -> Connection:
    table = {}
    for _ in range(rng.randint(1, nvars)):
        i, j = rng.randint(1, nvars), rng.randint(1, nvars)
        table[(i, j)] = _rand_derivation(rng, nvars)
    return Connection(nvars, table)


def _label_alphabet(nvars: int) -> list[Derivation]:
    """The sweep alphabet: basis partials d_i plus the fields x_j d_i."""
    out = [Derivation.basis(nvars, i) for i in range(1, nvars + 1)]
    for i in range(1, nvars + 1):
        for j in range(1, nvars + 1):
            out.append(Polynomial.variable(nvars, j) * Derivation.basis(nvars, i))
    return out


def _factorizations(label: Derivation) -> list[tuple[Polynomial, Derivation]]:
    """Some exact splittings label = r * E used by the splitting sweeps."""
    n = label.nvars
    out = [(Polynomial.one(n), label)]
    out.append((Polynomial.constant(n, 2), Fraction(1, 2) * label))
    terms = label.terms()
    if len(terms) == 1:
        index, coeff = terms[0]
        if not coeff.is_one() and len(coeff.terms) == 1:
            out.append((coeff, Derivation.basis(n, index)))
    return out


# ---------------------------------------------------------------------------
# Tensor helpers for the tree-algebra axioms.
# ---------------------------------------------------------------------------


def _coproduct_sum(a: hopf.TreeSum) -> hopf.TreeTensorSum:
    out = hopf.TreeTensorSum()
    for tree, c in a.terms.items():
        out = out + c * hopf.coproduct(tree)
    return out


def _tensor_mul(x: hopf.TreeTensorSum, y: hopf.TreeTensorSum) -> hopf.TreeTensorSum:
    acc: dict = {}
    for (a1, b1), c1 in x.terms.items():
        for (a2, b2), c2 in y.terms.items():
            scale = c1 * c2
            for ta, qa in hopf.gl_mul(a1, a2).terms.items():
                for tb, qb in hopf.gl_mul(b1, b2).terms.items():
                    key = (ta, tb)
                    acc[key] = acc.get(key, Fraction(0)) + scale * qa * qb
    return hopf.TreeTensorSum(acc)


def _triple_split(tree: LabeledTree, left_first: bool) -> dict:
    acc: dict = {}
    for (left, right), c in hopf.coproduct(tree).terms.items():
        inner = hopf.coproduct(left if left_first else right)
        for (p, q), c2 in inner.terms.items():
            key = (p, q, right) if left_first else (left, p, q)
            acc[key] = acc.get(key, Fraction(0)) + c * c2
    return {k: c for k, c in acc.items() if c}


# ---------------------------------------------------------------------------
# Suites.
# ---------------------------------------------------------------------------


def suite_hopf(seed: int = 0) -> list[CheckResult]:
    results: list[CheckResult] = []
    n = 2
    letters = [Derivation.basis(n, 1), Derivation.basis(n, 2)]
    trees4 = list(iter_trees_up_to(letters, 3))  # all trees with <= 4 nodes
    trees3 = [tree for tree in trees4 if tree.degree <= 2]
    unit = unit_tree()

    # associativity, exhaustive over <= 3-node operands
    failures = []
    cases = 0
    singles = {tree: hopf.TreeSum.from_tree(tree) for tree in trees4}
    for a in trees3:
        for b in trees3:
            ab = hopf.gl_mul(a, b)
            for c in trees3:
                cases += 1
                lhs = hopf.mul(ab, singles[c])
                rhs = hopf.mul(singles[a], hopf.gl_mul(b, c))
                if lhs != rhs:
                    failures.append(
                        f"({format_tree(a)}) ({format_tree(b)}) ({format_tree(c)})"
                    )
    results.append(CheckResult("hopf", "associativity", cases, failures))

    # unit laws
    failures = []
    for tree in trees4:
        one = hopf.TreeSum.from_tree(tree)
        if hopf.gl_mul(unit, tree) != one or hopf.gl_mul(tree, unit) != one:
            failures.append(format_tree(tree))
    results.append(CheckResult("hopf", "unit-laws", len(trees4), failures))

    # grading of products and coproducts
    failures = []
    cases = 0
    for a in trees3:
        for b in trees3:
            cases += 1
            for term in hopf.gl_mul(a, b).terms:
                if term.degree != a.degree + b.degree:
                    failures.append(f"product grading: {format_tree(a)}, {format_tree(b)}")
                    break
    for tree in trees4:
        cases += 1
        for (left, right) in hopf.coproduct(tree).terms:
            if left.degree + right.degree != tree.degree:
                failures.append(f"coproduct grading: {format_tree(tree)}")
                break
    results.append(CheckResult("hopf", "grading", cases, failures))

    # coassociativity and cocommutativity
    failures = []
    for tree in trees4:
        if _triple_split(tree, True) != _triple_split(tree, False):
            failures.append(f"coassociativity: {format_tree(tree)}")
        split = hopf.coproduct(tree)
        if split.swap() != split:
            failures.append(f"cocommutativity: {format_tree(tree)}")
    results.append(CheckResult("hopf", "coalgebra", 2 * len(trees4), failures))

    # counit axioms
    failures = []
    for tree in trees4:
        left = hopf.TreeSum.zero()
        right = hopf.TreeSum.zero()
        for (a, b), c in hopf.coproduct(tree).terms.items():
            if a == unit:
                left = left + c * hopf.TreeSum.from_tree(b)
            if b == unit:
                right = right + c * hopf.TreeSum.from_tree(a)
        if left != hopf.TreeSum.from_tree(tree) or right != hopf.TreeSum.from_tree(tree):
            failures.append(format_tree(tree))
    results.append(CheckResult("hopf", "counit", len(trees4), failures))

    # bialgebra compatibility on <= 3-node operands
    failures = []
    cases = 0
    for a in trees3:
        da = hopf.coproduct(a)
        for b in trees3:
            cases += 1
            lhs = _coproduct_sum(hopf.gl_mul(a, b))
            rhs = _tensor_mul(da, hopf.coproduct(b))
            if lhs != rhs:
                failures.append(f"{format_tree(a)}, {format_tree(b)}")
    results.append(CheckResult("hopf", "bialgebra-compatibility", cases, failures))

    # antipode convolution identities
    failures = []
    for tree in trees4:
        target = hopf.counit(hopf.TreeSum.from_tree(tree)) * hopf.TreeSum.from_tree(unit)
        left = hopf.TreeSum.zero()
        right = hopf.TreeSum.zero()
        for (a, b), c in hopf.coproduct(tree).terms.items():
            left = left + c * hopf.mul(hopf.antipode(a), hopf.TreeSum.from_tree(b))
            right = right + c * hopf.mul(hopf.TreeSum.from_tree(a), hopf.antipode(b))
        if left != target or right != target:
            failures.append(format_tree(tree))
    results.append(CheckResult("hopf", "antipode", len(trees4), failures))

    # generation by trees whose root has one child, degree <= 4
    failures = []
    cases = 0
    for tree in iter_trees_up_to(letters, 4):
        cases += 1
        total = hopf.TreeSum.zero()
        good = True
        for coeff, factors in hopf.express_one_child(tree):
            if coeff.denominator != 1:
                failures.append(f"non-integer coefficient: {format_tree(tree)}")
                good = False
                break
            total = total + coeff * hopf.evaluate_product(factors)
        if good and total != hopf.TreeSum.from_tree(tree):
            failures.append(f"re-expansion mismatch: {format_tree(tree)}")
    results.append(CheckResult("hopf", "one-child-generation", cases, failures))

    return results


def _action_connections(nvars: int) -> list:
    x = lambda i: Polynomial.variable(nvars, i)
    table = {
        (1, 1): Derivation.basis(nvars, 2),
        (1, 2): x(1) * Derivation.basis(nvars, nvars),
        (2, 1): Derivation.basis(nvars, 1) + x(2) * Derivation.basis(nvars, 2),
    }
    return [flat_connection(nvars), Connection(nvars, table)]


def suite_action(seed: int = 0, connections=None) -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = random.Random(seed)
    n = 3
    alphabet = _label_alphabet(n)
    conns = connections if connections is not None else _action_connections(n)

    # connection axioms on the sweep connections plus random tables
    failures = []
    cases = 0
    derivs = [
        Derivation.basis(n, 1),
        Polynomial.variable(n, 1) * Derivation.basis(n, 2),
        Derivation.basis(n, 3) + Polynomial.variable(n, 2) * Derivation.basis(n, 1),
    ]
    polys = [_rand_poly(rng, n, 2, nonzero=True) for _ in range(2)]
    for conn in list(conns) + [_rand_connection(rng, n) for _ in range(2)]:
        checked, bad = axiom_check(conn, derivs, polys)
        cases += checked
        failures.extend(bad)
    results.append(CheckResult("action", "connection-axioms", cases, failures))

    # pair identity: t(v(E), v(F)) = v(E) v(F) - u(F; v(E))
    failures = []
    cases = 0
    for e in alphabet:
        for f in alphabet:
            cases += 1
            lhs = hopf.TreeSum.from_tree(t(v(e), v(f)))
            rhs = hopf.gl_mul(v(e), v(f)) - hopf.TreeSum.from_tree(u(f, v(e)))
            if lhs != rhs:
                failures.append(f"E={e}, F={f}")
    results.append(CheckResult("action", "pair-identity", cases, failures))

    # brush identity for up to three branches
    failures = []
    cases = 0
    n4 = 4
    symbols = [Derivation.basis(n4, i) for i in range(1, n4 + 1)]
    for length in range(1, 4):
        for picks in _cartesian(symbols, repeat=length + 1):
            f, es = picks[0], list(picks[1:])
            cases += 1
            lhs = hopf.TreeSum.from_tree(u(f, *[v(e) for e in es]))
            rest = u(f, *[v(e) for e in es[1:]])
            rhs = hopf.mul(
                hopf.TreeSum.from_tree(v(es[0])), hopf.TreeSum.from_tree(rest)
            )
            for i in range(1, len(es)):
                inner = [v(e) for e in es[1:]]
                inner[i - 1] = u(es[i], v(es[0]))
                rhs = rhs - hopf.TreeSum.from_tree(u(f, *inner))
            rhs = rhs - hopf.TreeSum.from_tree(t(v(es[0]), rest))
            if lhs != rhs:
                failures.append(f"F={f}, Es={[str(e) for e in es]}")
    results.append(CheckResult("action", "brush-identity", cases, failures))

    # Hall regression: iterated brackets and their unit evaluations
    failures = []
    e1, e2 = hall_fields()
    n8 = 8
    x8 = lambda i: Polynomial.variable(n8, i)
    half = Fraction(1, 2)
    b1 = e2.bracket(e1)
    expect_b1 = Derivation.from_terms(
        n8,
        [
            (3, Polynomial.one(n8)),
            (4, -x8(1)),
            (5, -x8(2)),
            (6, half * (x8(1) * x8(1))),
            (7, x8(1) * x8(2)),
            (8, half * (x8(2) * x8(2))),
        ],
    )
    b2 = b1.bracket(e1)
    expect_b2 = Derivation.from_terms(
        n8, [(4, Polynomial.one(n8)), (6, -x8(1)), (7, -x8(2))]
    )
    b3 = b1.bracket(e2)
    expect_b3 = Derivation.from_terms(
        n8, [(5, Polynomial.one(n8)), (7, -x8(1)), (8, -x8(2))]
    )
    one8 = Polynomial.one(n8)
    checks = [
        (b1 == expect_b1, "[E2,E1] coefficients"),
        (b2 == expect_b2, "[[E2,E1],E1] coefficients"),
        (b3 == expect_b3, "[[E2,E1],E2] coefficients"),
        (b1.apply(x8(3)) == one8, "[E2,E1](x3) = 1"),
        (b2.apply(x8(4)) == one8, "[[E2,E1],E1](x4) = 1"),
        (b3.apply(x8(5)) == one8, "[[E2,E1],E2](x5) = 1"),
    ]
    for ok, name in checks:
        if not ok:
            failures.append(name)
    results.append(CheckResult("action", "hall-regression", len(checks), failures))

    # module axiom: (T1 T2) . s = T1 . (T2 . s)
    failures = []
    cases = 0
    for conn in conns:
        for _ in range(60):
            t1 = _rand_tree(rng, alphabet, rng.randint(0, 3))
            t2 = _rand_tree(rng, alphabet, rng.randint(0, 3))
            s = _rand_poly(rng, n, 3)
            cases += 1
            lhs = act_mod.act_sum(hopf.gl_mul(t1, t2), s, conn)
            rhs = act_mod.act(t1, act_mod.act(t2, s, conn), conn)
            if lhs != rhs:
                failures.append(f"{format_tree(t1)}, {format_tree(t2)}, s={s}")
    results.append(CheckResult("action", "module-axiom", cases, failures))

    # module-algebra law: T . (p q) = sum (T_(1) . p)(T_(2) . q)
    failures = []
    cases = 0
    for conn in conns:
        for degree in range(0, 4):
            for shape in _SHAPES[degree]:
                for _ in range(3):
                    labels = [rng.choice(alphabet) for _ in range(degree)]
                    tree = tree_from_shape(shape, labels)
                    p = _rand_poly(rng, n, 3)
                    q = _rand_poly(rng, n, 3)
                    cases += 1
                    lhs = act_mod.act(tree, p * q, conn)
                    rhs = Polynomial.zero(n)
                    for (left, right), c in hopf.coproduct(tree).terms.items():
                        rhs = rhs + c * (
                            act_mod.act(left, p, conn) * act_mod.act(right, q, conn)
                        )
                    if lhs != rhs:
                        failures.append(f"{format_tree(tree)}, p={p}, q={q}")
    results.append(CheckResult("action", "module-algebra-law", cases, failures))

    # label splitting at every node, several factorizations
    failures = []
    cases = 0
    for conn in conns:
        for _ in range(40):
            tree = _rand_tree(rng, alphabet, rng.randint(1, 3))
            s = _rand_poly(rng, n, 3)
            for path in node_paths(tree):
                label = label_at(tree, path)
                for r, e in _factorizations(label):
                    cases += 1
                    lhs, rhs = act_mod.leibnitz_identity(tree, path, r, e, s, conn)
                    if lhs != rhs:
                        failures.append(
                            f"{format_tree(tree)} at {list(path)} with r={r}"
                        )
    results.append(CheckResult("action", "label-splitting", cases, failures))

    # coherence: collapse any one-child subtree to its derivation
    failures = []
    cases = 0
    for conn in conns:
        for _ in range(30):
            tree = _rand_tree(rng, alphabet, rng.randint(1, 3))
            spots = [()] if len(tree.children) == 1 else []
            for path in node_paths(tree):
                if len(subtree_at(tree, path).children) == 1:
                    spots.append(path)
            s = _rand_poly(rng, n, 3)
            for path in spots:
                cases += 1
                lhs, rhs = act_mod.coherence_identity(tree, path, conn)
                if lhs(s) != rhs(s):
                    failures.append(f"{format_tree(tree)} at {list(path)}")
    results.append(CheckResult("action", "coherence", cases, failures))

    # closed form against the induced connection
    failures = []
    cases = 0
    induced = InducedConnection(n)
    for _ in range(60):
        tree = _rand_tree(rng, alphabet, rng.randint(0, 3))
        s = _rand_poly(rng, n, 3)
        cases += 1
        if act_mod.act_closed_form(tree, s) != act_mod.act(tree, s, induced):
            failures.append(f"{format_tree(tree)}, s={s}")
    hall = [hall_fields()[0], hall_fields()[1]]
    induced8 = InducedConnection(8)
    sample8 = [Polynomial.variable(8, 3), Polynomial.variable(8, 1) * Polynomial.variable(8, 2)]
    for tree in iter_trees_up_to(hall, 2):
        for s in sample8:
            cases += 1
            if act_mod.act_closed_form(tree, s) != act_mod.act(tree, s, induced8):
                failures.append(f"hall: {format_tree(tree)}, s={s}")
    results.append(CheckResult("action", "closed-form", cases, failures))

    # coherence-only evaluator agrees with the product-driven action
    failures = []
    cases = 0
    for conn in conns:
        for _ in range(40):
            tree = _rand_tree(rng, alphabet, rng.randint(0, 3))
            s = _rand_poly(rng, n, 3)
            cases += 1
            if act_mod.act_coherent(tree, s, conn) != act_mod.act(tree, s, conn):
                failures.append(f"{format_tree(tree)}, s={s}")
    results.append(CheckResult("action", "determination", cases, failures))

    # operator realization matches the action
    failures = []
    cases = 0
    for conn in conns:
        for _ in range(40):
            tree = _rand_tree(rng, alphabet, rng.randint(0, 3))
            s = _rand_poly(rng, n, 3)
            cases += 1
            if act_mod.psi(tree, conn).apply(s) != act_mod.act(tree, s, conn):
                failures.append(f"{format_tree(tree)}, s={s}")
    results.append(CheckResult("action", "operator-realization", cases, failures))

    # degree > 0 trees with constant labels annihilate constants under flat
    failures = []
    cases = 0
    flat = conns[0]
    one = Polynomial.one(n)
    basis_alphabet = [Derivation.basis(n, i) for i in range(1, n + 1)]
    for tree in iter_trees_up_to(basis_alphabet, 2):
        if tree.degree == 0:
            continue
        cases += 1
        if not act_mod.act(tree, one, flat).is_zero():
            failures.append(format_tree(tree))
    results.append(CheckResult("action", "counit-compatibility", cases, failures))

    return results


def _smash_contexts(nvars: int) -> list[SmashAlgebra]:
    x = lambda i: Polynomial.variable(nvars, i)
    table = {
        (1, 1): Derivation.basis(nvars, 2),
        (2, 1): x(1) * Derivation.basis(nvars, 1),
    }
    return [
        SmashAlgebra(flat_connection(nvars)),
        SmashAlgebra(Connection(nvars, table)),
    ]


def suite_smash(seed: int = 0) -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = random.Random(seed)
    n = 2
    alphabet = _label_alphabet(n)
    contexts = _smash_contexts(n)
    unit = unit_tree()

    def rand_element(ctx, max_degree=2, max_terms=2) -> SmashElement:
        out = SmashElement.zero(ctx.nvars)
        for _ in range(rng.randint(1, max_terms)):
            tree = _rand_tree(rng, alphabet, rng.randint(0, max_degree))
            out = out + SmashElement.from_parts(_rand_poly(rng, ctx.nvars, 1), tree)
        return out

    # associativity and unit laws
    failures = []
    cases = 0
    for ctx in contexts:
        one = ctx.unit()
        for _ in range(20):
            a, b, c = (rand_element(ctx) for _ in range(3))
            cases += 2
            if ctx.mul(ctx.mul(a, b), c) != ctx.mul(a, ctx.mul(b, c)):
                failures.append(f"associativity: {a}; {b}; {c}")
            if ctx.mul(one, a) != a or ctx.mul(a, one) != a:
                failures.append(f"unit law: {a}")
    results.append(CheckResult("smash", "product", cases, failures))

    # ring-coalgebra axioms for the coproduct and counit
    failures = []
    cases = 0
    for ctx in contexts:
        if ctx.delta(ctx.unit()).terms != {(unit, unit): Polynomial.one(n)}:
            failures.append("delta(1) != 1 (x) 1")
        if not ctx.counit(ctx.unit()).is_one():
            failures.append("counit(1) != 1")
        cases += 2
        for tree in iter_trees_up_to(alphabet[:4], 2):
            r = _rand_poly(rng, n, 1)
            b = SmashElement.from_parts(r, tree)
            split = ctx.delta(b)
            cases += 4
            # coassociativity in left-normal form
            lhs: dict = {}
            rhs: dict = {}
            for (j, k), p in split.terms.items():
                for (j1, j2), c in hopf.coproduct(j).terms.items():
                    key = (j1, j2, k)
                    lhs[key] = lhs.get(key, Polynomial.zero(n)) + c * p
                for (k1, k2), c in hopf.coproduct(k).terms.items():
                    key = (j, k1, k2)
                    rhs[key] = rhs.get(key, Polynomial.zero(n)) + c * p
            lhs = {k: p for k, p in lhs.items() if not p.is_zero()}
            rhs = {k: p for k, p in rhs.items() if not p.is_zero()}
            if lhs != rhs:
                failures.append(f"coassociativity: {b}")
            if ctx.stl_counit_left(split) != b or ctx.stl_counit_right(split) != b:
                failures.append(f"counit sides: {b}")
            # module maps over the ring
            r2 = _rand_poly(rng, n, 1)
            if ctx.delta(r2 * b) != r2 * ctx.delta(b):
                failures.append(f"delta not a module map: {b}")
            if ctx.counit(r2 * b) != r2 * ctx.counit(b):
                failures.append(f"counit not a module map: {b}")
            # middle relation: (r b) (x) c and b (x) (r c) normalize identically
            cases += 1
            other = SmashElement.from_parts(_rand_poly(rng, n, 1), tree)
            if ctx.stl_from_pairs([(r2 * b, other)]) != ctx.stl_from_pairs(
                [(b, r2 * other)]
            ):
                failures.append(f"middle relation: {b}")
    results.append(CheckResult("smash", "ring-coalgebra", cases, failures))

    # multiplicativity of delta and the counit product rule
    failures = []
    cases = 0
    for ctx in contexts:
        for _ in range(15):
            a, b = rand_element(ctx), rand_element(ctx)
            cases += 2
            if ctx.delta(ctx.mul(a, b)) != ctx.stl_mul(ctx.delta(a), ctx.delta(b)):
                failures.append(f"delta multiplicativity: {a}; {b}")
            scaled = ctx.mul(a, SmashElement.from_polynomial(ctx.counit(b)))
            if ctx.counit(ctx.mul(a, b)) != ctx.counit(scaled):
                failures.append(f"counit product rule: {a}; {b}")
    results.append(CheckResult("smash", "bialgebra-compatibility", cases, failures))

    # antiproduct axioms
    failures = []
    cases = 0
    for ctx in contexts:
        for tree in iter_trees_up_to(alphabet[:3], 2):
            r = _rand_poly(rng, n, 1, nonzero=True)
            b = SmashElement.from_parts(r, tree)
            anti = ctx.antiproduct(b)
            cases += 4
            r2 = _rand_poly(rng, n, 1, nonzero=True)
            scaled = ctx.antiproduct(r2 * b)
            if scaled != ctx.stb_scale_left(r2, anti):
                failures.append(f"left linearity: {b}")
            if scaled != ctx.stb_mul_right_poly(anti, r2):
                failures.append(f"right linearity: {b}")
            total = None
            for (j, k), p in ctx.delta(b).terms.items():
                part = ctx.stb_mul_right(
                    ctx.antiproduct(SmashElement.from_parts(p, j)),
                    SmashElement(n, {k: Polynomial.one(n)}),
                )
                total = part if total is None else total + part
            from .smash import SmashTensorBi

            expected = SmashTensorBi(n, {unit: b})
            if (total or SmashTensorBi(n)) != expected:
                failures.append(f"contraction to b (x) 1: {b}")
            lhs: dict = {}
            for (j, k), p in ctx.delta(b).terms.items():
                inner = ctx.antiproduct(SmashElement(n, {k: Polynomial.one(n)}))
                for k2, bk in inner.terms.items():
                    for j2, q in bk.terms.items():
                        key = (j, j2, k2)
                        lhs[key] = lhs.get(key, Polynomial.zero(n)) + q * p
            rhs: dict = {}
            for k2, bk in anti.terms.items():
                for (j, j2), p in ctx.delta(bk).terms.items():
                    key = (j, j2, k2)
                    rhs[key] = rhs.get(key, Polynomial.zero(n)) + p
            lhs = {k: p for k, p in lhs.items() if not p.is_zero()}
            rhs = {k: p for k, p in rhs.items() if not p.is_zero()}
            if lhs != rhs:
                failures.append(f"coproduct compatibility: {b}")
            if ctx.mu_of_stb(anti) != SmashElement.from_polynomial(ctx.counit(b)):
                failures.append(f"mu contraction: {b}")
    results.append(CheckResult("smash", "antiproduct", cases, failures))

    # rewriting: identity on basis labels, order independence, kernel, action
    failures = []
    cases = 0
    basis_letters = [Derivation.basis(n, i) for i in range(1, n + 1)]
    for k in range(100):
        ctx = contexts[k % 2]
        z = SmashElement.zero(n)
        for _ in range(rng.randint(1, 2)):
            tree = _rand_tree(rng, basis_letters, rng.randint(0, 3))
            z = z + SmashElement.from_parts(_rand_poly(rng, n, 2), tree)
        cases += 1
        if ctx.alpha(ctx.beta(z)) != z:
            failures.append(f"alpha(beta(z)) != z: {z}")
    results.append(CheckResult("smash", "alpha-beta-identity", cases, failures))

    failures = []
    cases = 0
    for ctx in contexts:
        for _ in range(12):
            tree = _rand_tree(rng, alphabet, rng.randint(1, 3))
            z = SmashElement.from_parts(_rand_poly(rng, n, 1), tree)
            base = ctx.alpha(z)
            cases += 1
            for _ in range(3):
                if ctx.alpha(z, rng=rng) != base:
                    failures.append(f"order dependence: {z}")
                    break
    results.append(CheckResult("smash", "alpha-order-independence", cases, failures))

    failures = []
    cases = 0
    for ctx in contexts:
        for _ in range(20):
            tree = _rand_tree(rng, alphabet, rng.randint(1, 3))
            paths = node_paths(tree)
            path = paths[rng.randrange(len(paths))]
            r, e = rng.choice(_factorizations(label_at(tree, path)))
            gen = ctx.substitution_generator(tree, path, r, e)
            cases += 2
            if not ctx.ideal_member(gen):
                failures.append(f"generator escapes the kernel: {format_tree(tree)}")
            if not ctx.ideal_member(gen + gen):
                failures.append(f"kernel not closed under sums: {format_tree(tree)}")
    results.append(CheckResult("smash", "ideal-kernel", cases, failures))

    failures = []
    cases = 0
    for ctx in contexts:
        for _ in range(15):
            z = rand_element(ctx, max_degree=3)
            s = _rand_poly(rng, n, 2)
            cases += 1
            if ctx.act(z, s) != ctx.act(ctx.alpha(z), s):
                failures.append(f"action changed by rewriting: {z}")
    results.append(CheckResult("smash", "alpha-preserves-action", cases, failures))

    # the operator realization is multiplicative through the smash product
    failures = []
    cases = 0
    for ctx in contexts:
        for _ in range(15):
            a, b = rand_element(ctx), rand_element(ctx)
            s = _rand_poly(rng, n, 2)
            cases += 1
            if ctx.act(ctx.mul(a, b), s) != ctx.act(a, ctx.act(b, s)):
                failures.append(f"smash action not multiplicative: {a}; {b}")
    results.append(CheckResult("smash", "psi-homomorphism", cases, failures))

    # word diagram on the regression fields
    failures = []
    cases = 0
    e1, e2 = hall_fields()
    n8 = 8
    letters8 = [Derivation.basis(n8, 1), Derivation.basis(n8, 2), e1, e2]
    table8 = Connection(n8, {(1, 2): Polynomial.variable(n8, 1) * Derivation.basis(n8, 3)})
    for conn in [flat_connection(n8), table8]:
        ctx8 = SmashAlgebra(conn)
        for length in range(1, 4):
            for word in _cartesian(letters8, repeat=length):
                cases += 1
                tree_side, op_side = ctx8.word_maps(list(word))
                if ctx8.psi(tree_side) != op_side:
                    failures.append(f"word {[str(e) for e in word]}")
    ctx8 = SmashAlgebra(flat_connection(n8))
    ab, _ = ctx8.word_maps([e2, e1])
    ba, _ = ctx8.word_maps([e1, e2])
    cases += 1
    if ctx8.act(ab - ba, Polynomial.variable(n8, 3)) != Polynomial.one(n8):
        failures.append("commutator word on x3")
    results.append(CheckResult("smash", "word-diagram", cases, failures))

    return results


SUITES = {
    "hopf": suite_hopf,
    "action": suite_action,
    "smash": suite_smash,
}


def run_suites(names, seed: int = 0) -> list[CheckResult]:
    ordered = ["hopf", "action", "smash"] if "all" in names else list(names)
    results: list[CheckResult] = []
    for name in ordered:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        results.extend(SUITES[name](seed=seed))
    return results


def format_report(results) -> str:
    lines = []
    total_cases = 0
    failed = 0
    for result in results:
        total_cases += result.cases
        if result.ok:
            lines.append(f"[{result.suite}] {result.name}: {result.cases} cases: ok")
        else:
            failed += 1
            lines.append(
                f"[{result.suite}] {result.name}: {result.cases} cases: "
                f"FAIL ({len(result.failures)} failures)"
            )
            for failure in result.failures[:5]:
                lines.append(f"    {failure}")
    if failed:
        lines.append(f"verify: FAIL ({failed} of {len(results)} checks failing)")
    else:
        lines.append(f"verify: PASS ({len(results)} checks, {total_cases} cases)")
    return "\n".join(lines)
