"""Exact arithmetic over Q[x1..xN]: polynomials, derivations, differential operators.

All values are immutable and exact (arbitrary-precision rationals).  Each type
keeps a unique normal form -- zero coefficients are dropped everywhere -- so
structural equality is mathematical equality.  The tree and rewriting layers
rely on that.

Variable and basis indices are 1-based throughout the public API, matching the
text grammar (``x1``, ``d1``).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Sequence

Scalar = int | Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """Sparse multivariate polynomial over Q with a fixed variable count.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero rational
    coefficients.  Instances never share mutable state; treat them as frozen.
    """

    __slots__ = ("nvars", "terms", "_key", "_hash")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            c = _as_fraction(coeff)
            if not c:
                continue
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {nvars} variables")
            clean[exps] = c
        self.nvars = nvars
        self.terms = clean
        self._key = tuple(sorted(clean.items()))
        self._hash = hash((nvars, self._key))

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _as_fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The variable x_index, 1-based."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls(nvars, {tuple(exps): _as_fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self._key == (((0,) * self.nvars, Fraction(1)),)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _require_same_ring(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return Polynomial(self.nvars, out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Polynomial(self.nvars)
            return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})
        if isinstance(other, Polynomial):
            self._require_same_ring(other)
            out: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return Polynomial(self.nvars, out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Polynomial.one(self.nvars)
        for _ in range(exponent):
            out = out * self
        return out

    def partial(self, index: int) -> "Polynomial":
        """Partial derivative with respect to x_index, 1-based."""
        if not 1 <= index <= self.nvars:
            raise ValueError(f"variable index {index} out of range 1..{self.nvars}")
        i = index - 1
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1 :]
            out[key] = out.get(key, Fraction(0)) + c * e
        return Polynomial(self.nvars, out)

    def partial_many(self, alpha: Sequence[int]) -> "Polynomial":
        """Iterated partial d^alpha with alpha a multi-index of length nvars."""
        alpha = tuple(alpha)
        if len(alpha) != self.nvars or any(a < 0 for a in alpha):
            raise ValueError(f"bad multi-index {alpha!r}")
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            if any(e < a for e, a in zip(exps, alpha)):
                continue
            factor = 1
            for e, a in zip(exps, alpha):
                for k in range(a):
                    factor *= e - k
            key = tuple(e - a for e, a in zip(exps, alpha))
            out[key] = out.get(key, Fraction(0)) + c * factor
        return Polynomial(self.nvars, out)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return self._key

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {format_polynomial(self)!r})"


class Derivation:
    """First-order operator sum_u p_u * d/dx_u with polynomial coefficients.

    The coefficient of d/dx_u sits at position u-1 of ``coeffs``; the zero
    derivation (all coefficients zero) is a legal value.
    """

    __slots__ = ("nvars", "coeffs", "_hash")

    def __init__(self, coeffs: Sequence[Polynomial]):
        coeffs = tuple(coeffs)
        nvars = len(coeffs)
        for p in coeffs:
            if not isinstance(p, Polynomial) or p.nvars != nvars:
                raise ValueError("coefficients must be polynomials in the same ring")
        self.nvars = nvars
        self.coeffs = coeffs
        self._hash = hash(("Derivation", coeffs))

    @classmethod
    def zero(cls, nvars: int) -> "Derivation":
        return cls([Polynomial.zero(nvars)] * nvars)

    @classmethod
    def basis(cls, nvars: int, index: int) -> "Derivation":
        """The basis partial d/dx_index, 1-based."""
        if not 1 <= index <= nvars:
            raise ValueError(f"basis index {index} out of range 1..{nvars}")
        coeffs = [Polynomial.zero(nvars)] * nvars
        coeffs[index - 1] = Polynomial.one(nvars)
        return cls(coeffs)

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[tuple[int, Polynomial]]) -> "Derivation":
        coeffs = [Polynomial.zero(nvars)] * nvars
        for index, p in terms:
            if not 1 <= index <= nvars:
                raise ValueError(f"basis index {index} out of range 1..{nvars}")
            coeffs[index - 1] = coeffs[index - 1] + p
        return cls(coeffs)

    def coeff(self, index: int) -> Polynomial:
        """Coefficient of d/dx_index, 1-based."""
        if not 1 <= index <= self.nvars:
            raise ValueError(f"basis index {index} out of range 1..{self.nvars}")
        return self.coeffs[index - 1]

    def terms(self) -> list[tuple[int, Polynomial]]:
        """Nonzero (index, coefficient) pairs, sorted by basis index."""
        return [(u + 1, p) for u, p in enumerate(self.coeffs) if not p.is_zero()]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coeffs)

    def is_basis(self) -> int | None:
        """The basis index if this is exactly d/dx_u for some u, else None."""
        found = None
        for u, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            if found is not None or not p.is_one():
                return None
            found = u + 1
        return found

    def _require_same_ring(self, other: "Derivation") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def apply(self, p: Polynomial) -> Polynomial:
        """Apply to a polynomial: sum_u coeff_u * dp/dx_u."""
        if p.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {p.nvars}")
        out = Polynomial.zero(self.nvars)
        for u, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            out = out + c * p.partial(u + 1)
        return out

    def bracket(self, other: "Derivation") -> "Derivation":
        """Lie bracket [self, other] = self*other - other*self as a derivation."""
        self._require_same_ring(other)
        coeffs = [
            self.apply(other.coeffs[u]) - other.apply(self.coeffs[u])
            for u in range(self.nvars)
        ]
        return Derivation(coeffs)

    def as_operator(self) -> "DiffOperator":
        """Embed as a first-order differential operator."""
        terms: dict[tuple[int, ...], Polynomial] = {}
        for u, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            alpha = [0] * self.nvars
            alpha[u] = 1
            terms[tuple(alpha)] = p
        return DiffOperator(self.nvars, terms)

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        self._require_same_ring(other)
        return Derivation([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Derivation([-p for p in self.coeffs])

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Derivation([p * c for p in self.coeffs])
        if isinstance(other, Polynomial):
            return Derivation([other * p for p in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return tuple(p.sort_key() for p in self.coeffs)

    def __str__(self):
        return format_derivation(self)

    def __repr__(self):
        return f"Derivation({format_derivation(self)!r})"


class DiffOperator:
    """Higher-order differential operator in normal form sum_alpha p_alpha * d^alpha.

    ``terms`` maps multi-indices (length nvars) to nonzero polynomial
    coefficients; d^alpha is the product of commuting basis partials.  The
    normal form is unique, so equality of operators is dictionary equality.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        clean: dict[tuple[int, ...], Polynomial] = {}
        for alpha, p in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != nvars or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha!r} for {nvars} variables")
            if not isinstance(p, Polynomial) or p.nvars != nvars:
                raise ValueError("coefficients must be polynomials in the same ring")
            if p.is_zero():
                continue
            clean[alpha] = p
        self.nvars = nvars
        self.terms = clean
        self._hash = hash((nvars, tuple(sorted((a, p._key) for a, p in clean.items()))))

    @classmethod
    def zero(cls, nvars: int) -> "DiffOperator":
        return cls(nvars)

    @classmethod
    def identity(cls, nvars: int) -> "DiffOperator":
        return cls(nvars, {(0,) * nvars: Polynomial.one(nvars)})

    @classmethod
    def from_derivation(cls, e: Derivation) -> "DiffOperator":
        return e.as_operator()

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_ring(self, other: "DiffOperator") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def apply(self, p: Polynomial) -> Polynomial:
        """Apply to a polynomial: sum_alpha coeff_alpha * d^alpha p."""
        if p.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {p.nvars}")
        out = Polynomial.zero(self.nvars)
        for alpha, c in self.terms.items():
            part = p.partial_many(alpha)
            if not part.is_zero():
                out = out + c * part
        return out

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        """Operator composition self o other, renormalized to sum p_alpha d^alpha.

        Uses the multivariate Leibniz rule to push each d^alpha through the
        coefficients of ``other``: d^alpha (q d^beta) expands over all gamma <=
        alpha with binomial weights.
        """
        self._require_same_ring(other)
        out: dict[tuple[int, ...], Polynomial] = {}
        for alpha, p in self.terms.items():
            for beta, q in other.terms.items():
                for gamma in _cartesian(*(range(a + 1) for a in alpha)):
                    weight = 1
                    for a, g in zip(alpha, gamma):
                        weight *= _binomial(a, g)
                    dq = q.partial_many(tuple(a - g for a, g in zip(alpha, gamma)))
                    if dq.is_zero():
                        continue
                    key = tuple(g + b for g, b in zip(gamma, beta))
                    coeff = p * dq * weight
                    if key in out:
                        out[key] = out[key] + coeff
                    else:
                        out[key] = coeff
        return DiffOperator(self.nvars, out)

    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        self._require_same_ring(other)
        out = dict(self.terms)
        for alpha, p in other.terms.items():
            out[alpha] = out[alpha] + p if alpha in out else p
        return DiffOperator(self.nvars, out)

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return DiffOperator(self.nvars, {a: -p for a, p in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return DiffOperator(self.nvars, {a: other * p for a, p in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, DiffOperator)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for alpha in sorted(self.terms, key=lambda a: (sum(a), a)):
            factors = [
                f"d{u + 1}" if e == 1 else f"d{u + 1}^{e}"
                for u, e in enumerate(alpha)
                if e
            ]
            head = f"({format_polynomial(self.terms[alpha])})"
            parts.append("*".join([head] + factors) if factors else head)
        return " + ".join(parts)

    def __repr__(self):
        return f"DiffOperator({self.nvars}, {str(self)!r})"


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# Text form.
#
# Polynomials: rational literals ``p`` / ``p/q``, variables ``x1..xN``, and
# ``+ - * ^`` with parentheses.  Derivations extend the grammar with basis
# symbols ``d1..dN``; a derivation is a sum of terms, each a polynomial times
# exactly one ``d<k>``.
# ---------------------------------------------------------------------------


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    ordered = sorted(p.terms, key=lambda e: (-sum(e), tuple(-k for k in e)))
    rendered = []
    for exps in ordered:
        c = p.terms[exps]
        factors = [
            f"x{u + 1}" if e == 1 else f"x{u + 1}^{e}" for u, e in enumerate(exps) if e
        ]
        if not factors:
            rendered.append(str(c))
        elif c == 1:
            rendered.append("*".join(factors))
        elif c == -1:
            rendered.append("-" + "*".join(factors))
        else:
            rendered.append("*".join([str(c)] + factors))
    out = rendered[0]
    for term in rendered[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def format_derivation(e: Derivation) -> str:
    terms = e.terms()
    if not terms:
        return "0"
    parts = []
    for u, p in terms:
        if p.is_one():
            parts.append(f"d{u}")
        else:
            parts.append(f"({format_polynomial(p)})*d{u}")
    return " + ".join(parts)


class ParseError(ValueError):
    """Raised on malformed input text; carries the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_Token = tuple[str, object, int]  # kind, value, position


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in ("x", "d"):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(text, i, f"expected an index after {ch!r}")
            tokens.append(("var" if ch == "x" else "dvar", int(text[i + 1 : j]), i))
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(text, i, f"unexpected character {ch!r}")
    tokens.append(("end", None, n))
    return tokens


class _LinComb:
    """Parse-time value: a polynomial part plus first-order d-parts.

    Monomials are sparse ((var, exp), ...) tuples so the variable count can be
    fixed after parsing.
    """

    __slots__ = ("poly", "dparts")

    def __init__(self, poly=None, dparts=None):
        self.poly = poly or {}
        self.dparts = dparts or {}

    def has_d(self) -> bool:
        return bool(self.dparts)


def _mono_mul(m1, m2):
    exps = dict(m1)
    for var, e in m2:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _poly_add(a, b):
    out = dict(a)
    for m, c in b.items():
        c2 = out.get(m, Fraction(0)) + c
        if c2:
            out[m] = c2
        elif m in out:
            del out[m]
    return out


def _poly_mul(a, b):
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = _mono_mul(m1, m2)
            c = out.get(m, Fraction(0)) + c1 * c2
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(self.text, tok[2], f"expected {kind!r}")
        return self.advance()

    def parse_expr(self) -> _LinComb:
        value = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.parse_term()
            if op == "-":
                rhs = _negate(rhs)
            value = _LinComb(
                _poly_add(value.poly, rhs.poly),
                _dparts_add(value.dparts, rhs.dparts),
            )
        return value

    def parse_term(self) -> _LinComb:
        value = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            rhs = self.parse_factor()
            value = _lin_mul(value, rhs, self.text, self.peek()[2])
        return value

    def parse_factor(self) -> _LinComb:
        value = self.parse_base()
        if self.peek()[0] == "^":
            pos = self.advance()[2]
            exp_tok = self.expect("int")
            if value.has_d():
                raise ParseError(self.text, pos, "cannot exponentiate a derivation")
            out = _LinComb({(): Fraction(1)})
            for _ in range(exp_tok[1]):
                out = _LinComb(_poly_mul(out.poly, value.poly))
            return out
        return value

    def parse_base(self) -> _LinComb:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.advance()
            num = tok[1]
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int")
                if den_tok[1] == 0:
                    raise ParseError(self.text, den_tok[2], "zero denominator")
                return _LinComb({(): Fraction(num, den_tok[1])})
            return _LinComb({(): Fraction(num)})
        if kind == "var":
            self.advance()
            return _LinComb({((tok[1], 1),): Fraction(1)})
        if kind == "dvar":
            self.advance()
            return _LinComb(dparts={tok[1]: {(): Fraction(1)}})
        if kind == "(":
            self.advance()
            value = self.parse_expr()
            self.expect(")")
            return value
        if kind == "-":
            self.advance()
            return _negate(self.parse_factor())
        if kind == "+":
            self.advance()
            return self.parse_factor()
        raise ParseError(self.text, tok[2], "expected a value")


def _negate(v: _LinComb) -> _LinComb:
    return _LinComb(
        {m: -c for m, c in v.poly.items()},
        {u: {m: -c for m, c in part.items()} for u, part in v.dparts.items()},
    )


def _dparts_add(a, b):
    out = {u: dict(part) for u, part in a.items()}
    for u, part in b.items():
        merged = _poly_add(out.get(u, {}), part)
        if merged:
            out[u] = merged
        elif u in out:
            del out[u]
    return out


def _lin_mul(a: _LinComb, b: _LinComb, text: str, pos: int) -> _LinComb:
    if a.has_d() and b.has_d():
        raise ParseError(text, pos, "cannot multiply two derivations")
    if b.has_d():
        a, b = b, a
    # a may carry d-parts, b is pure polynomial
    return _LinComb(
        _poly_mul(a.poly, b.poly),
        {u: _poly_mul(part, b.poly) for u, part in a.dparts.items()},
    )


def _realize_poly(sparse: dict, nvars: int, text: str) -> Polynomial:
    terms = {}
    for mono, c in sparse.items():
        exps = [0] * nvars
        for var, e in mono:
            if not 1 <= var <= nvars:
                raise ParseError(text, 0, f"variable x{var} exceeds {nvars} variables")
            exps[var - 1] = e
        terms[tuple(exps)] = c
    return Polynomial(nvars, terms)


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    parser = _Parser(text)
    value = parser.parse_expr()
    parser.expect("end")
    if value.has_d():
        raise ParseError(text, 0, "derivation symbols are not allowed in a polynomial")
    return _realize_poly(value.poly, nvars, text)


def parse_derivation(text: str, nvars: int) -> Derivation:
    parser = _Parser(text)
    value = parser.parse_expr()
    parser.expect("end")
    if value.poly:
        raise ParseError(text, 0, "derivation has a term without a d<k> factor")
    coeffs = [Polynomial.zero(nvars)] * nvars
    for u, part in value.dparts.items():
        if not 1 <= u <= nvars:
            raise ParseError(text, 0, f"basis index d{u} exceeds {nvars} variables")
        coeffs[u - 1] = coeffs[u - 1] + _realize_poly(part, nvars, text)
    return Derivation(coeffs)


def scan_nvars(*texts: str) -> int:
    """Smallest usable variable count for the given expressions (at least 1)."""
    best = 1
    for text in texts:
        i, n = 0, len(text)
        while i < n:
            if text[i] in ("x", "d"):
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                if j > i + 1:
                    best = max(best, int(text[i + 1 : j]))
                i = j
            else:
                i += 1
    return best
