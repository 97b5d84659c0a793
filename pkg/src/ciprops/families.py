"""Constructors for the concrete distribution families used as test corpus
and CLI generators.

Binary triples use the index convention p[a][x][y]: the designated variable
A is the first schema slot, matching the coordinate order of the
parametrized families below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .distributions import JointDistribution, VariableSchema, independent_join, mixture
from .errors import (
    BadParameterError,
    DecompositionMismatchError,
    InvalidMassesError,
    NotRankOneError,
    SchemaMismatchError,
)

_F = Fraction


def _frac(value) -> Fraction:
    if isinstance(value, float):
        raise BadParameterError(f"parameters must be exact rationals, got float {value}")
    return Fraction(value)


def _axy_schema() -> VariableSchema:
    return VariableSchema.make([("A", 2), ("X", 2), ("Y", 2)])


# ---------------------------------------------------------------------------
# Binary Intersection violators: two support patterns on (A, X, Y) whose
# zero cells force X and Y to determine each other, making both premises
# (A:X|Y) and (A:Y|X) hold for every choice of the four free masses.

_VIOLATOR_FREE = {
    1: ((0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)),
    2: ((0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)),
}


def intersection_violator(variant: int, free: Sequence) -> JointDistribution:
    """Binary triple with the Intersection premises built into the support.

    ``variant`` selects which four coordinates are zeroed; ``free`` gives
    the four remaining masses in increasing binary order of (a, x, y).
    """
    if variant not in _VIOLATOR_FREE:
        raise BadParameterError(f"variant must be 1 or 2, got {variant}")
    free = [_frac(v) for v in free]
    if len(free) != 4:
        raise InvalidMassesError(f"need exactly four free masses, got {len(free)}")
    for cell, p in zip(_VIOLATOR_FREE[variant], free):
        if p < 0:
            raise InvalidMassesError(f"mass at {cell} is negative: {p}")
    if sum(free) != 1:
        raise InvalidMassesError(f"free masses sum to {sum(free)}, expected 1")
    mass = {cell: p for cell, p in zip(_VIOLATOR_FREE[variant], free) if p > 0}
    return JointDistribution.from_mass(_axy_schema(), mass)


# ---------------------------------------------------------------------------
# Marginal-independence parametrization of binary (A, X, Y): A is
# independent of X and of Y for every valid parameter point, with
# perturbations delta (inside A=0) and epsilon (inside A=1) steering the
# dependence of A on the pair.

@dataclass(frozen=True)
class KirkupParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    epsilon: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = _frac(getattr(self, name))
            object.__setattr__(self, name, v)
            if not 0 < v < 1:
                raise BadParameterError(f"{name} must lie in (0, 1), got {v}")
        object.__setattr__(self, "delta", _frac(self.delta))
        object.__setattr__(self, "epsilon", _frac(self.epsilon))
        for cell, p in self.masses().items():
            if p < 0:
                raise InvalidMassesError(f"mass at {cell} is negative: {p}")

    def masses(self) -> dict[tuple[int, int, int], Fraction]:
        a, b, c = self.alpha, self.beta, self.gamma
        na, nb, nc = 1 - a, 1 - b, 1 - c
        dl, ep = self.delta, self.epsilon
        return {
            (0, 0, 0): a * b * c - dl,
            (0, 0, 1): a * b * nc + dl,
            (0, 1, 0): a * nb * c + dl,
            (0, 1, 1): a * nb * nc - dl,
            (1, 0, 0): na * b * c - ep,
            (1, 0, 1): na * b * nc + ep,
            (1, 1, 0): na * nb * c + ep,
            (1, 1, 1): na * nb * nc - ep,
        }


def kirkup_family(params: KirkupParams) -> JointDistribution:
    mass = {cell: p for cell, p in params.masses().items() if p > 0}
    return JointDistribution.from_mass(_axy_schema(), mass)


# ---------------------------------------------------------------------------
# Common-cause extension: split the joint table of a pair into weighted
# rank-one blocks and record the block index in a new variable, which then
# separates the pair exactly.

def common_cause_extension(d: JointDistribution, parts=None, name: str = "A") -> JointDistribution:
    """Extend a two-variable distribution by a separating cause variable.

    ``parts`` is a list of (weight, table) pairs where each table is a
    nested list over the two variables' states, non-negative, rank one and
    of unit total mass, and the weighted tables must sum exactly to the
    joint table.  With ``parts=None`` every support cell becomes its own
    block, the finest decomposition.
    """
    if len(d.schema) != 2:
        raise SchemaMismatchError(f"need a two-variable distribution, got {len(d.schema)} variables")
    (xn, xc), (yn, yc) = d.schema.variables

    if parts is None:
        weighted = []
        for outcome in d.support():
            table = [[_F(0)] * yc for _ in range(xc)]
            table[outcome[0]][outcome[1]] = _F(1)
            weighted.append((d.mass[outcome], table))
    else:
        weighted = [(_frac(w), [[_frac(v) for v in row] for row in table]) for w, table in parts]

    total = {o: _F(0) for o in d.schema.outcomes()}
    dists = []
    for idx, (w, table) in enumerate(weighted):
        if w <= 0:
            raise BadParameterError(f"part {idx}: weight must be positive, got {w}")
        if len(table) != xc or any(len(row) != yc for row in table):
            raise SchemaMismatchError(f"part {idx}: table shape does not match {xc}x{yc}")
        norm = _F(0)
        for row in table:
            for v in row:
                if v < 0:
                    raise InvalidMassesError(f"part {idx}: negative entry {v}")
                norm += v
        if norm != 1:
            raise DecompositionMismatchError(f"part {idx}: table mass is {norm}, expected 1")
        for r1 in range(xc):
            for r2 in range(r1 + 1, xc):
                for c1 in range(yc):
                    for c2 in range(c1 + 1, yc):
                        if table[r1][c1] * table[r2][c2] != table[r1][c2] * table[r2][c1]:
                            raise NotRankOneError(
                                f"part {idx}: 2x2 minor at rows ({r1},{r2}), cols ({c1},{c2}) is nonzero"
                            )
        mass = {}
        for xs in range(xc):
            for ys in range(yc):
                if table[xs][ys] > 0:
                    mass[(xs, ys)] = table[xs][ys]
                    total[(xs, ys)] += w * table[xs][ys]
        dists.append(JointDistribution.from_mass(d.schema, mass))

    for o in d.schema.outcomes():
        if total[o] != d.p(o):
            raise DecompositionMismatchError(
                f"decomposition puts mass {total[o]} on {o}, table has {d.p(o)}"
            )
    return mixture([w for w, _ in weighted], dists, name)


# ---------------------------------------------------------------------------
# Group-sum family: X, Y independent uniform on Z/kZ and A = X + Y mod k.
# Any two of the three variables determine the third; all three pairwise
# marginals are independent while I(A : X,Y) = log k.

def group_sum_family(k: int) -> JointDistribution:
    if k < 2:
        raise BadParameterError(f"group order must be at least 2, got {k}")
    schema = VariableSchema.make([("A", k), ("X", k), ("Y", k)])
    p = Fraction(1, k * k)
    mass = {((x + y) % k, x, y): p for x in range(k) for y in range(k)}
    return JointDistribution.from_mass(schema, mass)


# ---------------------------------------------------------------------------
# Almost-tight family: an exact copy pair (X, Y) joined independently to a
# binary A.  The only nonzero diagram atoms are H(A|X,Y) = H(A) and
# I(X:Y|A) = H(X), which defeats any perturbed version of the tight
# entropy bound.

def tight_violation_family(x_bias, a_bias) -> JointDistribution:
    x_bias, a_bias = _frac(x_bias), _frac(a_bias)
    for name, v in (("x_bias", x_bias), ("a_bias", a_bias)):
        if not 0 < v < 1:
            raise BadParameterError(f"{name} must lie in the open interval (0, 1), got {v}")
    pair = JointDistribution.from_mass(
        VariableSchema.make([("X", 2), ("Y", 2)]),
        {(0, 0): 1 - x_bias, (1, 1): x_bias},
    )
    a = JointDistribution.from_mass(
        VariableSchema.make([("A", 2)]),
        {(0,): 1 - a_bias, (1,): a_bias},
    )
    return independent_join(pair, a)


# ---------------------------------------------------------------------------
# Four binary variables where G is the common information of (X, Y): the
# support graph has two components, yet A is independent of the pair, so
# Intersection holds without the connectivity criterion.

def non_gk_example() -> JointDistribution:
    schema = VariableSchema.make([("A", 2), ("X", 2), ("Y", 2), ("G", 2)])
    q = Fraction(1, 4)
    mass = {
        (0, 0, 1, 1): q,
        (0, 1, 0, 0): q,
        (1, 0, 1, 1): q,
        (1, 1, 0, 0): q,
    }
    return JointDistribution.from_mass(schema, mass)


# ---------------------------------------------------------------------------
# Reproducible full-support rational distributions for test corpora.

def random_rational_distribution(seed: int, schema: VariableSchema,
                                 denominator_bound: int) -> JointDistribution:
    """Deterministic full-support pmf with common denominator <= bound."""
    outcomes = list(schema.outcomes())
    m = len(outcomes)
    if denominator_bound < m:
        raise BadParameterError(
            f"denominator bound {denominator_bound} is below the {m} outcomes"
        )
    rng = random.Random(seed)
    cuts = sorted(rng.sample(range(1, denominator_bound), m - 1)) if m > 1 else []
    edges = [0] + cuts + [denominator_bound]
    mass = {
        o: Fraction(edges[t + 1] - edges[t], denominator_bound)
        for t, o in enumerate(outcomes)
    }
    return JointDistribution.from_mass(schema, mass)
