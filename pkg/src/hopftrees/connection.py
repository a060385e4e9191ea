"""Connections on the derivations of Q[x1..xN].

A connection is determined by a Christoffel table giving nabla_{d_i} d_j for
basis partials; extension to arbitrary derivations is forced by additivity,
R-linearity in the first slot, and the Leibniz rule in the second.  Because
every connection here is table-generated, the defining axioms hold by
construction; ``axiom_check`` exists as a regression guard and as a detector
for deliberately corrupted evaluators.

File format (JSON): ``{"vars": N, "entries": [{"i": 1, "j": 2, "derivation":
"d3"}, ...]}``; omitted pairs are zero, so the flat connection is the empty
table.
"""

from __future__ import annotations

import json
from typing import Sequence

from .poly import (
    Derivation,
    Polynomial,
    format_derivation,
    parse_derivation,
)


class Connection:
    """Table-generated connection; the empty table is flat."""

    __slots__ = ("nvars", "table", "__weakref__")

    def __init__(self, nvars: int, table=None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: dict[tuple[int, int], Derivation] = {}
        for (i, j), gamma in (table or {}).items():
            if not (1 <= i <= nvars and 1 <= j <= nvars):
                raise ValueError(f"table index ({i},{j}) out of range 1..{nvars}")
            if not isinstance(gamma, Derivation) or gamma.nvars != nvars:
                raise ValueError("table entries must be derivations in the same ring")
            if gamma.is_zero():
                continue
            clean[(i, j)] = gamma
        self.nvars = nvars
        self.table = clean

    def gamma(self, i: int, j: int) -> Derivation:
        """nabla_{d_i} d_j; zero when the pair is absent from the table."""
        if not (1 <= i <= self.nvars and 1 <= j <= self.nvars):
            raise ValueError(f"index ({i},{j}) out of range 1..{self.nvars}")
        return self.table.get((i, j), Derivation.zero(self.nvars))

    def nabla(self, e: Derivation, f: Derivation) -> Derivation:
        """Covariant derivative of f along e.

        With e = sum e_i d_i and f = sum f_j d_j this is
        sum_j e(f_j) d_j + sum_{i,j} e_i f_j gamma(i, j).
        """
        if e.nvars != self.nvars or f.nvars != self.nvars:
            raise ValueError("derivation dimension does not match the connection")
        coeffs = [e.apply(f.coeffs[j]) for j in range(self.nvars)]
        out = Derivation(coeffs)
        for (i, j), gamma in self.table.items():
            weight = e.coeffs[i - 1] * f.coeffs[j - 1]
            if not weight.is_zero():
                out = out + weight * gamma
        return out

    def __repr__(self):
        return f"Connection(nvars={self.nvars}, entries={len(self.table)})"


def flat_connection(nvars: int) -> Connection:
    return Connection(nvars)


class InducedConnection:
    """Coefficient-derivative evaluator: nabla_E F = sum_{m,n} e_m (d_m f_n) d_n.

    This is the closed form the flat table produces on polynomial coefficient
    fields, computed through an independent code path so the two can be
    cross-checked.
    """

    __slots__ = ("nvars", "__weakref__")

    def __init__(self, nvars: int):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars

    def nabla(self, e: Derivation, f: Derivation) -> Derivation:
        if e.nvars != self.nvars or f.nvars != self.nvars:
            raise ValueError("derivation dimension does not match the connection")
        coeffs = [Polynomial.zero(self.nvars) for _ in range(self.nvars)]
        for mu in range(1, self.nvars + 1):
            e_mu = e.coeff(mu)
            if e_mu.is_zero():
                continue
            for nu in range(1, self.nvars + 1):
                step = f.coeff(nu).partial(mu)
                if not step.is_zero():
                    coeffs[nu - 1] = coeffs[nu - 1] + e_mu * step
        return Derivation(coeffs)

    def __repr__(self):
        return f"InducedConnection(nvars={self.nvars})"


def induced_connection(labels: Sequence[Derivation]) -> InducedConnection:
    """Evaluator matching the flat connection on the given label fields."""
    if not labels:
        raise ValueError("at least one label is required to fix the ring")
    nvars = labels[0].nvars
    for e in labels:
        if e.nvars != nvars:
            raise ValueError("labels must share one ring")
    return InducedConnection(nvars)


def axiom_check(
    conn,
    derivations: Sequence[Derivation],
    polys: Sequence[Polynomial],
) -> tuple[int, list[str]]:
    """Exercise the four connection axioms on sample data.

    Checks additivity in both slots over derivation pairs, R-linearity in the
    first slot, and the Leibniz rule in the second slot over (E, F, f)
    triples.  Returns (number of checks, violation descriptions); a
    table-generated connection must report no violations.
    """
    checks = 0
    violations: list[str] = []

    def note(name: str, *args) -> None:
        rendered = ", ".join(format_derivation(a) if isinstance(a, Derivation) else str(a) for a in args)
        violations.append(f"{name} fails on ({rendered})")

    ds = list(derivations)
    for a in ds:
        for b in ds:
            for f in ds:
                checks += 1
                if conn.nabla(a + b, f) != conn.nabla(a, f) + conn.nabla(b, f):
                    note("first-slot additivity", a, b, f)
                checks += 1
                if conn.nabla(f, a + b) != conn.nabla(f, a) + conn.nabla(f, b):
                    note("second-slot additivity", f, a, b)
    for f in polys:
        for e in ds:
            for g in ds:
                checks += 1
                if conn.nabla(f * e, g) != f * conn.nabla(e, g):
                    note("first-slot R-linearity", f, e, g)
                checks += 1
                expected = f * conn.nabla(e, g) + e.apply(f) * g
                if conn.nabla(e, f * g) != expected:
                    note("second-slot Leibniz rule", e, f, g)
    return checks, violations


def connection_to_json(conn: Connection) -> dict:
    entries = [
        {"i": i, "j": j, "derivation": format_derivation(gamma)}
        for (i, j), gamma in sorted(conn.table.items())
    ]
    return {"vars": conn.nvars, "entries": entries}


def connection_from_json(doc: dict) -> Connection:
    nvars = doc.get("vars")
    if not isinstance(nvars, int) or nvars < 1:
        raise ValueError("connection document needs a positive integer 'vars'")
    table: dict[tuple[int, int], Derivation] = {}
    for entry in doc.get("entries", []):
        i, j = entry["i"], entry["j"]
        gamma = parse_derivation(entry["derivation"], nvars)
        key = (int(i), int(j))
        table[key] = table.get(key, Derivation.zero(nvars)) + gamma
    return Connection(nvars, table)


def load_connection(path: str) -> Connection:
    with open(path, "r", encoding="utf-8") as handle:
        return connection_from_json(json.load(handle))


def save_connection(conn: Connection, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(connection_to_json(conn), handle, indent=2, sort_keys=True)
        handle.write("\n")
