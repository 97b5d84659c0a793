"""Polymatroid rank functions and their CI structures.

A polymatroid on {1, ..., n} is a normalized, monotone, submodular rank
function with rational values; all three axioms are checked exactly on
construction.  A statement (i:j|K) holds for a rank function r exactly when
r(iK) + r(jK) = r(ijK) + r(K).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadParameterError,
    DimensionMismatchError,
    NotMonotoneError,
    NotSubmodularError,
)
from .structures import CIStatement, CIStructure, _subsets_lex


@dataclass(frozen=True)
class Polymatroid:
    n: int
    ranks: Mapping[frozenset[int], Fraction]

    def rank(self, S: Iterable[int]) -> Fraction:
        return self.ranks[frozenset(S)]

    @property
    def is_matroid(self) -> bool:
        """Integer-valued with unit increments."""
        ground = frozenset(range(1, self.n + 1))
        for S, r in self.ranks.items():
            if r.denominator != 1:
                return False
        for S in _all_subsets(self.n):
            for e in ground - S:
                if self.ranks[S | {e}] - self.ranks[S] not in (0, 1):
                    return False
        return True

    def ci_structure(self) -> CIStructure:
        return polymatroid_ci(self)


def _all_subsets(n: int) -> list[frozenset[int]]:
    elems = range(1, n + 1)
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(elems, r)]


def from_rank_table(n: int, table: Mapping) -> Polymatroid:
    """Build and exactly validate a polymatroid from a subset -> rank table.

    The empty set may be omitted (rank 0 implied).  Violations are reported
    with a witness.
    """
    ranks: dict[frozenset[int], Fraction] = {frozenset(): Fraction(0)}
    for key, value in table.items():
        ranks[frozenset(key)] = Fraction(value)
    for S in _all_subsets(n):
        if S not in ranks:
            raise BadParameterError(f"rank table is missing subset {sorted(S)}")
    if ranks[frozenset()] != 0:
        raise BadParameterError(f"rank of the empty set must be 0, got {ranks[frozenset()]}")

    ground = frozenset(range(1, n + 1))
    for S in _all_subsets(n):
        for e in ground - S:
            if ranks[S | {e}] < ranks[S]:
                raise NotMonotoneError(
                    f"rank({sorted(S | {e})}) = {ranks[S | {e}]} < rank({sorted(S)}) = {ranks[S]}"
                )
    for S in _all_subsets(n):
        outside = sorted(ground - S)
        for a, b in itertools.combinations(outside, 2):
            lhs = ranks[S | {a}] + ranks[S | {b}]
            rhs = ranks[S | {a, b}] + ranks[S]
            if lhs < rhs:
                raise NotSubmodularError(
                    f"submodularity fails at S={sorted(S)}, i={a}, j={b}: "
                    f"{lhs} < {rhs}"
                )
    return Polymatroid(n, ranks)


def uniform_matroid(r: int, n: int) -> Polymatroid:
    if not 0 <= r <= n:
        raise BadParameterError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Polymatroid(n, {S: Fraction(min(len(S), r)) for S in _all_subsets(n)})


def free_matroid(n: int) -> Polymatroid:
    return Polymatroid(n, {S: Fraction(len(S)) for S in _all_subsets(n)})


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    work = [[Fraction(v) for v in row] for row in rows]
    if not work:
        return 0
    cols = len(work[0])
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, len(work)) if work[k][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c]
        work[r] = [v / inv for v in work[r]]
        for k in range(len(work)):
            if k != r and work[k][c] != 0:
                f = work[k][c]
                work[k] = [v - f * w for v, w in zip(work[k], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def from_subspace_generators(generators: Sequence[Sequence[Sequence]]) -> Polymatroid:
    """Polymatroid of a subspace arrangement.

    ``generators[e]`` lists spanning vectors (rational entries) of the
    subspace attached to ground element e+1; the rank of a subset is the
    dimension of the span of the union of its generators.
    """
    if not generators:
        raise BadParameterError("need at least one subspace")
    mats = [[[Fraction(v) for v in vec] for vec in gen] for gen in generators]
    dims = {len(vec) for gen in mats for vec in gen}
    if len(dims) > 1:
        raise DimensionMismatchError(f"generator vectors mix ambient dimensions {sorted(dims)}")
    n = len(mats)
    ranks = {}
    for S in _all_subsets(n):
        rows = [vec for e in sorted(S) for vec in mats[e - 1]]
        ranks[S] = Fraction(matrix_rank(rows))
    return Polymatroid(n, ranks)


def polymatroid_ci(P: Polymatroid) -> CIStructure:
    """Elementary statements satisfying r(iK) + r(jK) = r(ijK) + r(K)."""
    stmts = []
    elems = range(1, P.n + 1)
    for i, j in itertools.combinations(elems, 2):
        rest = [e for e in elems if e not in (i, j)]
        for K in _subsets_lex(rest):
            Ks = frozenset(K)
            if P.ranks[Ks | {i}] + P.ranks[Ks | {j}] == P.ranks[Ks | {i, j}] + P.ranks[Ks]:
                stmts.append(CIStatement.make(i, j, Ks))
    return CIStructure.make(P.n, stmts)
