"""Sufficient conditions for the Intersection and Composition properties.

All criteria are evaluated with exact CI tests; the only floating-point
comparisons are entropy inequalities (interaction-information sign, the
conditional-entropy bound of the support criterion), which use the shared
``TOLERANCE``.

Roles follow the standard trivariate reduction: a designated variable A and
a pair X, Y, optionally with an auxiliary G.

    Intersection:  (A:X|Y) and (A:Y|X)  =>  (A:X) and (A:Y)
    Composition:   (A:X) and (A:Y)      =>  (A:X|Y) and (A:Y|X)

In both cases the conclusion pair is implied by the joint statement
(A:X,Y), which is what the criteria certify.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .distributions import JointDistribution
from .errors import DuplicateVariableError, NameCollisionError
from .information import TOLERANCE, conditional_entropy, entropy_profile, interaction_information


# ---------------------------------------------------------------------------
# Characteristic bipartite support graph and the common-information variable.

@dataclass(frozen=True)
class BipartiteSupportGraph:
    """Bipartite graph on the positive-mass states of two variables.

    Edges join x- and y-states of positive joint mass.  Component ids are
    0-based, ordered by the smallest left (x-side) state they contain; every
    node has degree at least one, so every component contains a left node.
    """

    x_var: str
    y_var: str
    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    component_of_left: Mapping[int, int]
    component_of_right: Mapping[int, int]

    @property
    def n_components(self) -> int:
        return 1 + max(self.component_of_left.values(), default=-1)

    def is_connected(self) -> bool:
        return self.n_components == 1


def support_graph(d: JointDistribution, x: str, y: str) -> BipartiteSupportGraph:
    if x == y:
        raise DuplicateVariableError(f"need two distinct variables, got {x!r} twice")
    pair = d.marginalize([x, y])
    # marginal keeps schema order; find where x landed
    x_pos = pair.schema.index(x)
    y_pos = 1 - x_pos
    edges = set()
    for outcome in pair.support():
        edges.add((outcome[x_pos], outcome[y_pos]))
    left = sorted({e[0] for e in edges})
    right = sorted({e[1] for e in edges})

    # union-find over ("x", state) / ("y", state) nodes
    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru

    for s in left:
        parent[("x", s)] = ("x", s)
    for s in right:
        parent[("y", s)] = ("y", s)
    for ex, ey in edges:
        union(("x", ex), ("y", ey))

    roots = []
    for s in left:
        r = find(("x", s))
        if r not in roots:
            roots.append(r)
    comp_id = {r: i for i, r in enumerate(roots)}  # ordered by smallest left state
    component_of_left = {s: comp_id[find(("x", s))] for s in left}
    component_of_right = {s: comp_id[find(("y", s))] for s in right}
    return BipartiteSupportGraph(
        x_var=x,
        y_var=y,
        left=tuple(left),
        right=tuple(right),
        edges=frozenset(edges),
        component_of_left=component_of_left,
        component_of_right=component_of_right,
    )


def gk_extend(d: JointDistribution, x: str, y: str, name: str) -> JointDistribution:
    """Append the common-information variable of (x, y).

    The new variable evaluates to the connected component of the support
    graph containing the outcome, so it is exactly a function of x alone
    and of y alone: H(new|x) = H(new|y) = 0.
    """
    if name in d.schema.names:
        raise NameCollisionError(f"variable {name!r} already exists")
    graph = support_graph(d, x, y)
    x_pos = d.schema.index(x)
    comp = graph.component_of_left
    return d.function_extend(name, lambda outcome: comp[outcome[x_pos]],
                             max(graph.n_components, 1))


@dataclass(frozen=True)
class GKCriterion:
    """Connectivity criterion for Intersection.

    ``applicable`` when the support graph of (x, y) is connected, in which
    case the Intersection implication is guaranteed for any A;
    ``certifies`` additionally requires the premises to hold, asserting the
    conclusion (A:X,Y).
    """

    applicable: bool
    certifies: bool
    components: int


def _check_roles(d: JointDistribution, *roles: str) -> None:
    present = [r for r in roles if r is not None]
    if len(set(present)) != len(present):
        raise DuplicateVariableError(f"roles must be distinct, got {present}")
    for r in present:
        d.schema.index(r)


def intersection_premises(d: JointDistribution, a: str, x: str, y: str) -> bool:
    return d.is_ci_exact(a, x, y) and d.is_ci_exact(a, y, x)


def composition_premises(d: JointDistribution, a: str, x: str, y: str) -> bool:
    return d.is_ci_exact(a, x) and d.is_ci_exact(a, y)


def gk_criterion(d: JointDistribution, a: str, x: str, y: str) -> GKCriterion:
    _check_roles(d, a, x, y)
    graph = support_graph(d, x, y)
    applicable = graph.is_connected()
    certifies = applicable and intersection_premises(d, a, x, y)
    return GKCriterion(applicable, certifies, graph.n_components)


@dataclass(frozen=True)
class DoubleMarkovResult:
    premises_hold: bool
    conclusion_holds: bool


def double_markov_check(d: JointDistribution, a: str, x: str, y: str) -> DoubleMarkovResult:
    """(A:X|Y) and (A:Y|X) imply (A:X,Y | G) for the common-information G."""
    _check_roles(d, a, x, y)
    premises = intersection_premises(d, a, x, y)
    g = _fresh_name(d, "_gk")
    extended = gk_extend(d, x, y, g)
    conclusion = extended.is_ci_exact(a, [x, y], g)
    return DoubleMarkovResult(premises, conclusion)


def _fresh_name(d: JointDistribution, base: str) -> str:
    name = base
    k = 0
    while name in d.schema.names:
        k += 1
        name = f"{base}{k}"
    return name


def conditional_ingleton_check(d: JointDistribution, a: str, x: str, y: str, g: str) -> tuple[bool, bool, bool]:
    """Synthetic conditions on an auxiliary G, each certifying Intersection.

    (i)   (A:G)  and (X:Y|G)
    (ii)  (X:G)  and (A:Y|G)
    (iii) (Y:G)  and (A:X|G)
    """
    _check_roles(d, a, x, y, g)
    c1 = d.is_ci_exact(a, g) and d.is_ci_exact(x, y, g)
    c2 = d.is_ci_exact(x, g) and d.is_ci_exact(a, y, g)
    c3 = d.is_ci_exact(y, g) and d.is_ci_exact(a, x, g)
    return (c1, c2, c3)


def dual_conditional_ingleton_check(d: JointDistribution, a: str, x: str, y: str, g: str) -> tuple[bool, bool, bool]:
    """Dual synthetic conditions, certifying Composition conditionally on G.

    (i)   (A:G|X,Y) and (X:Y|A)
    (ii)  (X:G|A,Y) and (A:Y|X)
    (iii) (Y:G|A,X) and (A:X|Y)

    The certified implication is (A:X|G) and (A:Y|G) => (A:X,Y|G); it does
    not promise Composition inside each G-slice separately.
    """
    _check_roles(d, a, x, y, g)
    c1 = d.is_ci_exact(a, g, [x, y]) and d.is_ci_exact(x, y, a)
    c2 = d.is_ci_exact(x, g, [a, y]) and d.is_ci_exact(a, y, x)
    c3 = d.is_ci_exact(y, g, [a, x]) and d.is_ci_exact(a, x, y)
    return (c1, c2, c3)


def third_implication_check(d: JointDistribution, a: str, x: str, y: str, g: str) -> bool:
    """(A:Y|G) and (Y:G|X) certify (A:X) and (A:X|Y) => (A:X,Y)."""
    _check_roles(d, a, x, y, g)
    return d.is_ci_exact(a, y, g) and d.is_ci_exact(y, g, x)


@dataclass(frozen=True)
class InteractionCriterion:
    """Sign test on the interaction information I(A:X:Y).

    Under the Composition premises the central atom equals -I(A:X|Y), so a
    non-negative sign forces the conclusion; under the Intersection premises
    it equals +I(A:X), so a non-positive sign does.
    """

    sign: float
    certifies_composition: bool
    certifies_intersection: bool


def interaction_criterion(d: JointDistribution, a: str, x: str, y: str,
                          tol: float = TOLERANCE) -> InteractionCriterion:
    _check_roles(d, a, x, y)
    profile = entropy_profile(d.marginalize([a, x, y]))
    sign = interaction_information(profile, a, x, y)
    return InteractionCriterion(
        sign=sign,
        certifies_composition=sign >= -tol,
        certifies_intersection=sign <= tol,
    )


def krv_support_check(d: JointDistribution, a: str, x: str, y: str) -> bool:
    """Support condition for Composition.

    Holds iff for every (x-state, y-state) pair there is at most one
    a-state with positive mass in both the (A,X)- and (A,Y)-marginals; it
    entails H(A|X) + H(A|Y) <= H(A).
    """
    _check_roles(d, a, x, y)
    ax = d.marginalize([a, x])
    ay = d.marginalize([a, y])

    def pairs(marg, first, second):
        out: dict[int, set[int]] = {}
        fi, si = marg.schema.index(first), marg.schema.index(second)
        for outcome in marg.mass:
            out.setdefault(outcome[si], set()).add(outcome[fi])
        return out

    a_by_x = pairs(ax, a, x)
    a_by_y = pairs(ay, a, y)
    for xs, ys in itertools.product(a_by_x, a_by_y):
        if len(a_by_x[xs] & a_by_y[ys]) > 1:
            return False

    profile = entropy_profile(d.marginalize([a, x, y]))
    slack = (profile.h(a) - conditional_entropy(profile, a, x)
             - conditional_entropy(profile, a, y))
    assert slack >= -TOLERANCE, f"entropy bound violated by {slack}"
    return True


def mtp2_check(d: JointDistribution) -> bool:
    """Log-supermodularity of the mass function in the state order.

    p(u v v) * p(u ^ v) >= p(u) * p(v) with componentwise max and min,
    compared exactly.  State order is the integer order of the schema
    indices; no reordering is attempted.
    """
    support = d.support()
    for u, v in itertools.combinations(support, 2):
        join = tuple(max(s, t) for s, t in zip(u, v))
        meet = tuple(min(s, t) for s, t in zip(u, v))
        if join == u or join == v:
            continue  # comparable pair, identity is trivial
        if d.p(join) * d.p(meet) < d.mass[u] * d.mass[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# Aggregated report.

@dataclass(frozen=True)
class CriterionEntry:
    """Verdict of one criterion: evaluable at all, and condition met."""

    applicable: bool
    implies_property: bool
    detail: dict

    def to_json_dict(self) -> dict:
        out = {"applicable": self.applicable, "implies_property": self.implies_property}
        out.update(self.detail)
        return out


@dataclass(frozen=True)
class PropertyVerdict:
    premises_hold: bool
    conclusion_holds: bool
    criteria: dict[str, CriterionEntry]

    def to_json_dict(self) -> dict:
        return {
            "premises_hold": self.premises_hold,
            "conclusion_holds": self.conclusion_holds,
            "criteria": {k: v.to_json_dict() for k, v in self.criteria.items()},
        }


@dataclass(frozen=True)
class CriterionReport:
    """Verdicts of every criterion for one (A, X, Y[, G]) role assignment."""

    a: str
    x: str
    y: str
    g: str | None
    intersection: PropertyVerdict
    composition: PropertyVerdict

    # convenience accessors with stable meanings
    @property
    def gk_applicable(self) -> bool:
        return self.intersection.criteria["gacs_korner"].applicable

    @property
    def gk_components(self) -> int:
        return self.intersection.criteria["gacs_korner"].detail["components"]

    @property
    def cond_ingleton(self) -> tuple[bool, bool, bool] | None:
        c = self.intersection.criteria["conditional_ingleton"].detail["conditions"]
        return tuple(c) if c is not None else None

    @property
    def interaction_sign(self) -> float:
        return self.intersection.criteria["interaction_information"].detail["sign"]

    @property
    def interaction_nonneg(self) -> bool:
        return self.composition.criteria["interaction_information"].implies_property

    @property
    def krv_holds(self) -> bool:
        return self.composition.criteria["krv_support"].implies_property

    @property
    def mtp2_holds(self) -> bool:
        return self.composition.criteria["mtp2"].implies_property

    @property
    def dual_cond_ingleton(self) -> tuple[bool, bool, bool] | None:
        c = self.composition.criteria["dual_conditional_ingleton"].detail["conditions"]
        return tuple(c) if c is not None else None

    def to_json_dict(self) -> dict:
        return {
            "roles": {"a": self.a, "x": self.x, "y": self.y, "g": self.g},
            "intersection": self.intersection.to_json_dict(),
            "composition": self.composition.to_json_dict(),
        }


def evaluate_all(d: JointDistribution, a: str, x: str, y: str, g: str | None = None) -> CriterionReport:
    """Evaluate every criterion; G-based ones are skipped when G is absent."""
    _check_roles(d, a, x, y, g)

    inter_premises = intersection_premises(d, a, x, y)
    compo_premises = composition_premises(d, a, x, y)
    inter_conclusion = compo_premises  # (A:X) and (A:Y)
    compo_conclusion = inter_premises  # (A:X|Y) and (A:Y|X)

    gk = gk_criterion(d, a, x, y)
    inter_criteria = {
        "gacs_korner": CriterionEntry(
            applicable=gk.applicable,
            implies_property=gk.applicable,
            detail={"components": gk.components, "certifies_conclusion": gk.certifies},
        ),
    }
    interaction = interaction_criterion(d, a, x, y)
    inter_criteria["interaction_information"] = CriterionEntry(
        applicable=True,
        implies_property=interaction.certifies_intersection,
        detail={"sign": interaction.sign},
    )
    if g is not None:
        conds = conditional_ingleton_check(d, a, x, y, g)
        inter_criteria["conditional_ingleton"] = CriterionEntry(
            applicable=True,
            implies_property=any(conds),
            detail={"conditions": list(conds)},
        )
    else:
        inter_criteria["conditional_ingleton"] = CriterionEntry(
            applicable=False, implies_property=False, detail={"conditions": None},
        )

    compo_criteria = {
        "interaction_information": CriterionEntry(
            applicable=True,
            implies_property=interaction.certifies_composition,
            detail={"sign": interaction.sign},
        ),
        "krv_support": CriterionEntry(
            applicable=True,
            implies_property=krv_support_check(d, a, x, y),
            detail={},
        ),
        "mtp2": CriterionEntry(
            applicable=True,
            implies_property=mtp2_check(d),
            detail={},
        ),
    }
    if g is not None:
        conds = dual_conditional_ingleton_check(d, a, x, y, g)
        compo_criteria["dual_conditional_ingleton"] = CriterionEntry(
            applicable=True,
            implies_property=any(conds),
            detail={"conditions": list(conds), "certifies": "composition_conditional_on_g"},
        )
    else:
        compo_criteria["dual_conditional_ingleton"] = CriterionEntry(
            applicable=False, implies_property=False,
            detail={"conditions": None, "certifies": "composition_conditional_on_g"},
        )

    return CriterionReport(
        a=a, x=x, y=y, g=g,
        intersection=PropertyVerdict(inter_premises, inter_conclusion, inter_criteria),
        composition=PropertyVerdict(compo_premises, compo_conclusion, compo_criteria),
    )
