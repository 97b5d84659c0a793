"""Exact discrete joint distributions over named variables.

Probabilities are :class:`fractions.Fraction` throughout; no operation ever
rounds.  Conditional independence is decided by exact cross-multiplication
of marginal masses, never by thresholding an information measure: the
properties under study are statements about exact zeros of mutual
information, which floating point cannot certify.

All values are immutable after construction and every operation is a pure
function of its inputs.  Zero masses are never stored, so iteration over
``mass`` is iteration over the support.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    ArityMismatchError,
    EmptySubsetError,
    FileFormatError,
    IndexOutOfRangeError,
    MassNotOneError,
    NameCollisionError,
    NegativeMassError,
    OverlappingSetsError,
    SchemaMismatchError,
    StoredZeroMassError,
    UnknownVariableError,
    WeightsNotOneError,
    ZeroProbabilityError,
    FunctionRangeError,
)
from .structures import CIStatement, CIStructure, _subsets_lex

Outcome = tuple[int, ...]

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class VariableSchema:
    """Ordered list of (name, cardinality) pairs with unique names."""

    variables: tuple[tuple[str, int], ...]

    @staticmethod
    def make(variables: Iterable[tuple[str, int]]) -> "VariableSchema":
        variables = tuple((str(n), int(c)) for n, c in variables)
        names = [n for n, _ in variables]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise NameCollisionError(f"duplicate variable name {dup!r}")
        for n, c in variables:
            if c < 1:
                raise IndexOutOfRangeError(f"variable {n!r} needs cardinality >= 1, got {c}")
        return VariableSchema(variables)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.variables)

    def cardinality(self, name: str) -> int:
        return self.variables[self.index(name)][1]

    def index(self, name: str) -> int:
        for pos, (n, _) in enumerate(self.variables):
            if n == name:
                return pos
        raise UnknownVariableError(f"unknown variable {name!r}")

    def __len__(self) -> int:
        return len(self.variables)

    def outcomes(self) -> Iterable[Outcome]:
        return itertools.product(*(range(c) for _, c in self.variables))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)  # handles "a/b" and decimal literals exactly
    raise FileFormatError(f"cannot read probability {value!r} exactly; use int, Fraction or string")


def _names_tuple(arg) -> tuple[str, ...]:
    if isinstance(arg, str):
        return (arg,)
    return tuple(arg)


@dataclass(frozen=True)
class JointDistribution:
    """Finite joint pmf with exact rational masses.

    ``mass`` maps outcome tuples (one state index per schema variable) to
    positive Fractions summing to one; absent outcomes have mass zero.
    """

    schema: VariableSchema
    mass: Mapping[Outcome, Fraction]

    @staticmethod
    def from_mass(schema: VariableSchema, mass: Mapping[Outcome, object]) -> "JointDistribution":
        cleaned = {}
        for outcome, p in mass.items():
            p = _as_fraction(p)
            if p != 0:
                cleaned[tuple(outcome)] = p
        d = JointDistribution(schema, cleaned)
        d.validate()
        return d

    # -- invariants ---------------------------------------------------------

    def validate(self) -> None:
        """Raise a typed error naming the offending outcome, if any."""
        arity = len(self.schema)
        cards = [c for _, c in self.schema.variables]
        total = ZERO
        for outcome, p in self.mass.items():
            if len(outcome) != arity:
                raise ArityMismatchError(f"outcome {outcome} has arity {len(outcome)}, expected {arity}")
            for slot, (value, card) in enumerate(zip(outcome, cards), start=1):
                if not 0 <= value < card:
                    raise IndexOutOfRangeError(
                        f"outcome {outcome}: index {value} out of range for slot {slot} "
                        f"(cardinality {card})"
                    )
            if p < 0:
                raise NegativeMassError(f"outcome {outcome} has negative mass {p}")
            if p == 0:
                raise StoredZeroMassError(f"outcome {outcome} stores an explicit zero mass")
            total += p
        if total != 1:
            raise MassNotOneError(f"masses sum to {total}, expected 1")

    def p(self, outcome: Outcome) -> Fraction:
        return self.mass.get(tuple(outcome), ZERO)

    def support(self) -> list[Outcome]:
        return sorted(self.mass)

    # -- core operations ------------------------------------------------------

    def marginalize(self, names) -> "JointDistribution":
        """Marginal over the given variables, kept in schema order."""
        names = _names_tuple(names)
        if not names:
            raise EmptySubsetError("cannot marginalize to the empty set of variables")
        keep = set(names)
        for n in names:
            self.schema.index(n)  # raises UnknownVariableError
        idxs = [i for i, (n, _) in enumerate(self.schema.variables) if n in keep]
        sub_schema = VariableSchema(tuple(self.schema.variables[i] for i in idxs))
        out: dict[Outcome, Fraction] = {}
        for outcome, p in self.mass.items():
            key = tuple(outcome[i] for i in idxs)
            out[key] = out.get(key, ZERO) + p
        return JointDistribution(sub_schema, out)

    def condition(self, name: str, value: int) -> "JointDistribution":
        """Exact conditional distribution over the remaining variables."""
        pos = self.schema.index(name)
        total = sum((p for o, p in self.mass.items() if o[pos] == value), ZERO)
        if total == 0:
            raise ZeroProbabilityError(f"conditioning event {name} = {value} has probability 0")
        rest = [i for i in range(len(self.schema)) if i != pos]
        sub_schema = VariableSchema(tuple(self.schema.variables[i] for i in rest))
        out = {}
        for outcome, p in self.mass.items():
            if outcome[pos] == value:
                out[tuple(outcome[i] for i in rest)] = p / total
        return JointDistribution(sub_schema, out)

    def function_extend(self, name: str, fn: Callable[[Outcome], int], cardinality: int) -> "JointDistribution":
        """Append a new variable that is a deterministic function of the outcome."""
        if name in self.schema.names:
            raise NameCollisionError(f"variable {name!r} already exists")
        schema = VariableSchema(self.schema.variables + ((name, cardinality),))
        out = {}
        for outcome, p in self.mass.items():
            value = fn(outcome)
            if not 0 <= value < cardinality:
                raise FunctionRangeError(
                    f"function value {value} for outcome {outcome} outside [0, {cardinality})"
                )
            out[outcome + (value,)] = p
        return JointDistribution(schema, out)

    # -- conditional independence ----------------------------------------------

    def is_ci_exact(self, I, J, K=()) -> bool:
        """Exact test of the statement (I : J | K).

        Holds iff p(ijk) * p(k) == p(ik) * p(jk) for every outcome of the
        (I u J u K)-marginal, evaluated in rationals.
        """
        I, J, K = _names_tuple(I), _names_tuple(J), _names_tuple(K)
        if not I or not J:
            raise OverlappingSetsError("I and J must be nonempty")
        si, sj, sk = set(I), set(J), set(K)
        if si & sj or si & sk or sj & sk:
            raise OverlappingSetsError(f"sets overlap: I={I}, J={J}, K={K}")
        for n in (*I, *J, *K):
            self.schema.index(n)

        pos_i = [self.schema.index(n) for n in self.schema.names if n in si]
        pos_j = [self.schema.index(n) for n in self.schema.names if n in sj]
        pos_k = [self.schema.index(n) for n in self.schema.names if n in sk]

        # Group the support by K-value; within each group the pair table of
        # (I-projection, J-projection) must factor as rows x columns.
        groups: dict[tuple, dict] = {}
        for outcome, p in self.mass.items():
            gk = tuple(outcome[t] for t in pos_k)
            g = groups.setdefault(gk, {"cells": {}, "rows": {}, "cols": {}, "total": ZERO})
            gi = tuple(outcome[t] for t in pos_i)
            gj = tuple(outcome[t] for t in pos_j)
            g["cells"][gi, gj] = g["cells"].get((gi, gj), ZERO) + p
            g["rows"][gi] = g["rows"].get(gi, ZERO) + p
            g["cols"][gj] = g["cols"].get(gj, ZERO) + p
            g["total"] += p
        for g in groups.values():
            cells, total = g["cells"], g["total"]
            for gi, r in g["rows"].items():
                for gj, c in g["cols"].items():
                    if cells.get((gi, gj), ZERO) * total != r * c:
                        return False
        return True

    def ci_structure(self) -> CIStructure:
        """All elementary statements that hold exactly, over schema indices."""
        names = self.schema.names
        n = len(names)
        stmts = []
        for a, b in itertools.combinations(range(n), 2):
            rest = [t for t in range(n) if t not in (a, b)]
            for L in _subsets_lex(rest):
                if self.is_ci_exact(names[a], names[b], tuple(names[t] for t in L)):
                    stmts.append(CIStatement.make(a + 1, b + 1, (t + 1 for t in L)))
        return CIStructure.make(n, stmts)


def independent_join(d1: JointDistribution, d2: JointDistribution) -> JointDistribution:
    """Product measure on the concatenated schemas."""
    if set(d1.schema.names) & set(d2.schema.names):
        clash = sorted(set(d1.schema.names) & set(d2.schema.names))
        raise NameCollisionError(f"variable names occur on both sides: {clash}")
    schema = VariableSchema(d1.schema.variables + d2.schema.variables)
    out = {}
    for o1, p1 in d1.mass.items():
        for o2, p2 in d2.mass.items():
            out[o1 + o2] = p1 * p2
    return JointDistribution(schema, out)


def mixture(weights: Sequence[Fraction], parts: Sequence[JointDistribution], label: str) -> JointDistribution:
    """Mixture with an explicit label variable appended to the schema.

    Conditional on label = i the distribution is parts[i]; the marginal over
    the label is the weighted mixture of the parts.
    """
    if len(weights) != len(parts) or not parts:
        raise SchemaMismatchError("need one weight per part and at least one part")
    weights = [_as_fraction(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise WeightsNotOneError(f"weights must be positive, got {weights}")
    if sum(weights) != 1:
        raise WeightsNotOneError(f"weights sum to {sum(weights)}, expected 1")
    schema0 = parts[0].schema
    for part in parts[1:]:
        if part.schema != schema0:
            raise SchemaMismatchError("all mixture parts must share one schema")
    if label in schema0.names:
        raise NameCollisionError(f"label {label!r} collides with a part variable")
    schema = VariableSchema(schema0.variables + ((label, len(parts)),))
    out = {}
    for idx, (w, part) in enumerate(zip(weights, parts)):
        for outcome, p in part.mass.items():
            out[outcome + (idx,)] = w * p
    return JointDistribution(schema, out)


# ---------------------------------------------------------------------------
# Distribution file format:
#   {"variables": [{"name": ..., "cardinality": ...}, ...],
#    "mass": [{"outcome": [...], "p": "a/b" | decimal literal}, ...]}
# Duplicate outcomes are an error; omitted outcomes have mass zero.  Decimal
# literals are converted exactly, never through binary floats.

def to_json_dict(d: JointDistribution) -> dict:
    return {
        "variables": [{"name": n, "cardinality": c} for n, c in d.schema.variables],
        "mass": [{"outcome": list(o), "p": str(d.mass[o])} for o in d.support()],
    }


def from_json_dict(data: dict) -> JointDistribution:
    try:
        variables = [(v["name"], v["cardinality"]) for v in data["variables"]]
        rows = data["mass"]
    except (KeyError, TypeError) as exc:
        raise FileFormatError(f"distribution object needs 'variables' and 'mass': {exc}")
    schema = VariableSchema.make(variables)
    mass: dict[Outcome, Fraction] = {}
    for row in rows:
        try:
            outcome = tuple(int(v) for v in row["outcome"])
            p = _as_fraction(row["p"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"bad mass row {row!r}: {exc}")
        if outcome in mass:
            raise FileFormatError(f"duplicate outcome {list(outcome)}")
        mass[outcome] = p
    return JointDistribution.from_mass(schema, mass)


def dumps_distribution(d: JointDistribution) -> str:
    return json.dumps(to_json_dict(d), indent=2) + "\n"


def loads_distribution(text: str) -> JointDistribution:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}")
    return from_json_dict(data)
