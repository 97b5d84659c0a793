"""Elementary conditional-independence statements and structures.

A CI structure over the ground set {1, ..., n} is a set of elementary
statements (i:j|K) with i != j and K a subset of the remaining elements.
This module provides the inference machinery on such structures: expansion
of global statements into elementary ones, axiom checking with witnesses,
closure under selected inference rules, statement-wise duality, relabeling
orbits, and meet-irreducible elements of structure families.

Symmetry is a representation-level identification: statements are stored
with i < j, so (i:j|K) and (j:i|K) are the same object.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    FileFormatError,
    MixedGroundSetsError,
    NotMeetClosedError,
    OverlappingSetsError,
    UnknownRuleError,
)

AXIOMS = (
    "semigraphoid",
    "intersection",
    "composition",
    "weak_transitivity",
    "graphoid",
    "compositional_graphoid",
    "gaussoid",
)

_COMPOSITE_AXIOMS = {
    "graphoid": ("semigraphoid", "intersection"),
    "compositional_graphoid": ("semigraphoid", "intersection", "composition"),
    "gaussoid": ("semigraphoid", "intersection", "composition", "weak_transitivity"),
}

CLOSURE_RULES = ("semigraphoid", "intersection", "composition")


@dataclass(frozen=True)
class CIStatement:
    """Elementary statement (i:j|K), stored with i < j."""

    i: int
    j: int
    K: frozenset[int]

    @staticmethod
    def make(i: int, j: int, K: Iterable[int] = ()) -> "CIStatement":
        K = frozenset(K)
        if i == j:
            raise OverlappingSetsError(f"statement requires i != j, got i = j = {i}")
        if i in K or j in K:
            raise OverlappingSetsError(f"conditioning set {sorted(K)} overlaps ({i},{j})")
        if min(i, j) < 1 or any(e < 1 for e in K):
            raise OverlappingSetsError("ground-set elements are 1-based positive integers")
        return CIStatement(min(i, j), max(i, j), K)

    def sort_key(self) -> tuple:
        return (self.i, self.j, tuple(sorted(self.K)))

    def dual(self, n: int) -> "CIStatement":
        rest = frozenset(range(1, n + 1)) - {self.i, self.j} - self.K
        return CIStatement(self.i, self.j, rest)

    def relabel(self, perm: dict[int, int]) -> "CIStatement":
        return CIStatement.make(perm[self.i], perm[self.j], (perm[e] for e in self.K))

    def max_element(self) -> int:
        return max(self.j, max(self.K, default=0))

    def __str__(self) -> str:
        cond = ",".join(str(e) for e in sorted(self.K))
        return f"({self.i}:{self.j}|{cond})"


def _check_elements(stmt: CIStatement, n: int) -> None:
    if stmt.j > n or any(e > n for e in stmt.K):
        raise OverlappingSetsError(f"statement {stmt} does not fit ground set of size {n}")


@dataclass(frozen=True)
class CIStructure:
    """A set of elementary CI statements over {1, ..., n}."""

    n: int
    statements: frozenset[CIStatement]

    @staticmethod
    def make(n: int, statements: Iterable[CIStatement] = ()) -> "CIStructure":
        stmts = frozenset(statements)
        for s in stmts:
            _check_elements(s, n)
        return CIStructure(n, stmts)

    def sorted_statements(self) -> list[CIStatement]:
        return sorted(self.statements, key=CIStatement.sort_key)

    def __contains__(self, stmt: CIStatement) -> bool:
        return stmt in self.statements

    def __iter__(self) -> Iterator[CIStatement]:
        return iter(self.sorted_statements())

    def __len__(self) -> int:
        return len(self.statements)

    def __and__(self, other: "CIStructure") -> "CIStructure":
        self._same_ground(other)
        return CIStructure(self.n, self.statements & other.statements)

    def __or__(self, other: "CIStructure") -> "CIStructure":
        self._same_ground(other)
        return CIStructure(self.n, self.statements | other.statements)

    def __le__(self, other: "CIStructure") -> bool:
        self._same_ground(other)
        return self.statements <= other.statements

    def _same_ground(self, other: "CIStructure") -> None:
        if self.n != other.n:
            raise MixedGroundSetsError(f"ground sets differ: {self.n} vs {other.n}")

    def dual(self) -> "CIStructure":
        return CIStructure(self.n, frozenset(s.dual(self.n) for s in self.statements))

    def relabel(self, perm: dict[int, int]) -> "CIStructure":
        return CIStructure(self.n, frozenset(s.relabel(perm) for s in self.statements))

    def canonical_orbit_form(self) -> "CIStructure":
        return canonical_orbit_form(self)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "statements": [[s.i, s.j, sorted(s.K)] for s in self.sorted_statements()],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "CIStructure":
        try:
            n = int(data["n"])
            triples = data["statements"]
        except (KeyError, TypeError) as exc:
            raise FileFormatError(f"structure object needs 'n' and 'statements': {exc}")
        stmts = []
        for t in triples:
            if len(t) != 3:
                raise FileFormatError(f"statement triple expected, got {t!r}")
            i, j, K = t
            stmts.append(CIStatement.make(int(i), int(j), (int(e) for e in K)))
        return CIStructure.make(n, stmts)


def all_elementary_statements(n: int) -> list[CIStatement]:
    out = []
    elems = range(1, n + 1)
    for i, j in itertools.combinations(elems, 2):
        rest = [e for e in elems if e not in (i, j)]
        for K in _subsets_lex(rest):
            out.append(CIStatement(i, j, frozenset(K)))
    return out


def full_structure(n: int) -> CIStructure:
    return CIStructure(n, frozenset(all_elementary_statements(n)))


def _subsets_lex(elems: Sequence[int]) -> list[tuple[int, ...]]:
    subs = itertools.chain.from_iterable(
        itertools.combinations(elems, r) for r in range(len(elems) + 1)
    )
    return sorted(subs)


def expand_global(I: Iterable[int], J: Iterable[int], K: Iterable[int], n: int) -> frozenset[CIStatement]:
    """Elementary statements equivalent to the global statement (I:J|K).

    The expansion ranges over all i in I, j in J and all L with
    K <= L <= (I u J u K) \\ {i, j}.
    """
    I, J, K = frozenset(I), frozenset(J), frozenset(K)
    if not I or not J:
        raise OverlappingSetsError("I and J must be nonempty")
    if I & J or I & K or J & K:
        raise OverlappingSetsError("I, J, K must be pairwise disjoint")
    if max(I | J | K) > n or min(I | J | K) < 1:
        raise OverlappingSetsError(f"sets do not fit ground set of size {n}")
    out = set()
    for i in I:
        for j in J:
            middle = sorted((I | J) - {i, j})
            for M in _subsets_lex(middle):
                out.add(CIStatement.make(i, j, K | set(M)))
    return frozenset(out)


def holds_global(S: CIStructure, I: Iterable[int], J: Iterable[int], K: Iterable[int]) -> bool:
    return expand_global(I, J, K, S.n) <= S.statements


# ---------------------------------------------------------------------------
# Inference rules and axiom instances.
#
# An instance is a quadruple (i, j, k, L) of distinct elements i, j, k and
# L a subset of the remaining ground set.  Enumeration is lexicographic in
# (i, j, k, L) so that witnesses are reproducible.

def _instances(n: int) -> Iterator[tuple[int, int, int, tuple[int, ...]]]:
    elems = range(1, n + 1)
    for i in elems:
        for j in elems:
            if j == i:
                continue
            for k in elems:
                if k in (i, j):
                    continue
                rest = [e for e in elems if e not in (i, j, k)]
                for L in _subsets_lex(rest):
                    yield i, j, k, L


def _rule_semigraphoid(i, j, k, L):
    Ls = frozenset(L)
    premises = (CIStatement.make(i, j, Ls), CIStatement.make(i, k, Ls | {j}))
    conclusions = (CIStatement.make(i, k, Ls), CIStatement.make(i, j, Ls | {k}))
    return premises, conclusions


def _rule_intersection(i, j, k, L):
    Ls = frozenset(L)
    premises = (CIStatement.make(i, j, Ls | {k}), CIStatement.make(i, k, Ls | {j}))
    conclusions = (CIStatement.make(i, j, Ls), CIStatement.make(i, k, Ls))
    return premises, conclusions


def _rule_composition(i, j, k, L):
    Ls = frozenset(L)
    premises = (CIStatement.make(i, j, Ls), CIStatement.make(i, k, Ls))
    conclusions = (CIStatement.make(i, j, Ls | {k}), CIStatement.make(i, k, Ls | {j}))
    return premises, conclusions


_RULES = {
    "semigraphoid": _rule_semigraphoid,
    "intersection": _rule_intersection,
    "composition": _rule_composition,
}


def closure(S: CIStructure, rules: Iterable[str] = ()) -> CIStructure:
    """Least fixed point of the selected inference rules over all instances.

    The semigraphoid rule is always active.  Weak transitivity is not a
    closure rule (its consequent is a disjunction, so there is no least
    fixed point); use :func:`satisfies_axiom` to check it.
    """
    active = {"semigraphoid"}
    for r in rules:
        if r == "weak_transitivity":
            raise UnknownRuleError(
                "weak_transitivity has a disjunctive consequent and cannot be "
                "used for closure; check it with satisfies_axiom instead"
            )
        if r not in _RULES:
            raise UnknownRuleError(f"unknown closure rule {r!r}; choose from {CLOSURE_RULES}")
        active.add(r)

    stmts = set(S.statements)
    instances = list(_instances(S.n))
    changed = True
    while changed:
        changed = False
        for inst in instances:
            for name in active:
                premises, conclusions = _RULES[name](*inst)
                if all(p in stmts for p in premises):
                    for c in conclusions:
                        if c not in stmts:
                            stmts.add(c)
                            changed = True
    return CIStructure(S.n, frozenset(stmts))


@dataclass(frozen=True)
class AxiomWitness:
    """First instance (i, j, k | L) violating an axiom."""

    axiom: str
    i: int
    j: int
    k: int
    L: tuple[int, ...]

    def render(self, names: Sequence[str] | None = None) -> str:
        def nm(e):
            return names[e - 1] if names else str(e)

        cond = ",".join(nm(e) for e in self.L) if self.L else "∅"
        return f"({nm(self.i)};{nm(self.j)},{nm(self.k)}|{cond})"


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: AxiomWitness | None

    def __bool__(self) -> bool:
        return self.holds


def satisfies_axiom(S: CIStructure, axiom: str) -> AxiomVerdict:
    """Check an axiom on every instance; report the first violation.

    Composite axioms: graphoid = semigraphoid + intersection;
    compositional_graphoid adds composition; gaussoid adds weak transitivity.
    """
    if axiom in _COMPOSITE_AXIOMS:
        for part in _COMPOSITE_AXIOMS[axiom]:
            verdict = satisfies_axiom(S, part)
            if not verdict.holds:
                return AxiomVerdict(axiom, False, verdict.witness)
        return AxiomVerdict(axiom, True, None)
    if axiom == "weak_transitivity":
        return _check_weak_transitivity(S)
    if axiom not in _RULES:
        raise UnknownRuleError(f"unknown axiom {axiom!r}; choose from {AXIOMS}")

    rule = _RULES[axiom]
    for inst in _instances(S.n):
        premises, conclusions = rule(*inst)
        if all(p in S.statements for p in premises):
            if not all(c in S.statements for c in conclusions):
                return AxiomVerdict(axiom, False, AxiomWitness(axiom, *inst))
    return AxiomVerdict(axiom, True, None)


def _check_weak_transitivity(S: CIStructure) -> AxiomVerdict:
    # (i:j|L) and (i:j|kL) imply (i:k|L) or (j:k|L)
    for i, j, k, L in _instances(S.n):
        Ls = frozenset(L)
        if CIStatement.make(i, j, Ls) in S.statements and CIStatement.make(i, j, Ls | {k}) in S.statements:
            if CIStatement.make(i, k, Ls) not in S.statements and CIStatement.make(j, k, Ls) not in S.statements:
                return AxiomVerdict("weak_transitivity", False, AxiomWitness("weak_transitivity", i, j, k, L))
    return AxiomVerdict("weak_transitivity", True, None)


# ---------------------------------------------------------------------------
# Orbits under relabeling of the ground set.

def _canonical_key(statements: frozenset[CIStatement], n: int) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        m = {old: perm[old - 1] for old in range(1, n + 1)}
        key = tuple(sorted(
            (min(m[s.i], m[s.j]), max(m[s.i], m[s.j]), tuple(sorted(m[e] for e in s.K)))
            for s in statements
        ))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def canonical_orbit_form(S: CIStructure) -> CIStructure:
    """Lexicographically least relabeling of S; constant on orbits."""
    key = _canonical_key(S.statements, S.n)
    stmts = frozenset(CIStatement(i, j, frozenset(K)) for i, j, K in key)
    return CIStructure(S.n, stmts)


def orbit_count(family: Iterable[CIStructure]) -> int:
    family = list(family)
    if not family:
        return 0
    n = family[0].n
    keys = set()
    for S in family:
        if S.n != n:
            raise MixedGroundSetsError(f"family mixes ground sets {n} and {S.n}")
        keys.add(_canonical_key(S.statements, n))
    return len(keys)


# ---------------------------------------------------------------------------
# Lattice structure: meet is set intersection of statements.

def meet_irreducibles(family: Iterable[CIStructure]) -> list[CIStructure]:
    """Members that are not the meet of all members strictly above them.

    The family must be closed under pairwise intersection; maximal elements
    are excluded by convention.
    """
    family = list(family)
    if not family:
        return []
    n = family[0].n
    sets = []
    seen = set()
    for S in family:
        if S.n != n:
            raise MixedGroundSetsError(f"family mixes ground sets {n} and {S.n}")
        if S.statements not in seen:
            seen.add(S.statements)
            sets.append(S.statements)

    universe = set(sets)
    by_size: dict[int, list[frozenset]] = {}
    for s in sets:
        by_size.setdefault(len(s), []).append(s)

    for a, b in itertools.combinations(sets, 2):
        if a & b not in universe:
            wa = CIStructure(n, a)
            wb = CIStructure(n, b)
            raise NotMeetClosedError(
                f"intersection of members is missing from the family; witness pair "
                f"{[str(s) for s in wa.sorted_statements()]} and "
                f"{[str(s) for s in wb.sorted_statements()]}"
            )

    irreducible = []
    for s in sets:
        larger = [t for t in sets if len(t) > len(s) and s < t]
        if not larger:
            continue  # maximal element, excluded
        meet = frozenset.intersection(*larger)
        if meet != s:
            irreducible.append(CIStructure(n, s))
    irreducible.sort(key=lambda S: (len(S.statements),
                                    tuple(s.sort_key() for s in S.sorted_statements())))
    return irreducible


# ---------------------------------------------------------------------------
# File formats.

def dumps_structure(S: CIStructure) -> str:
    return json.dumps(S.to_json_dict(), indent=2) + "\n"


def loads_structure(text: str) -> CIStructure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}")
    return CIStructure.from_json_dict(data)


def parse_catalog(text: str, n: int | None = None) -> list[CIStructure]:
    """One structure per line: a JSON list of [i, j, [k, ...]] triples.

    Blank lines and '#' comments are skipped.  The ground set size is the
    maximum element across the whole file unless given explicitly.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            triples = json.loads(stripped)
            stmts = [CIStatement.make(int(i), int(j), (int(e) for e in K))
                     for i, j, K in triples]
        except (ValueError, TypeError, OverlappingSetsError) as exc:
            raise FileFormatError(f"line {lineno}: {exc}")
        rows.append(stmts)
    if n is None:
        n = max((s.max_element() for stmts in rows for s in stmts), default=0)
    return [CIStructure.make(n, stmts) for stmts in rows]
