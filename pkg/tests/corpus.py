"""Shared deterministic test corpus.

Everything here is seeded; two runs produce identical distributions.  The
sweep corpus bundles every family the suite exercises plus random
distributions and their common-cause / common-information extensions.
"""

import random
from fractions import Fraction

from ciprops import (
    JointDistribution,
    KirkupParams,
    VariableSchema,
    common_cause_extension,
    gk_extend,
    group_sum_family,
    intersection_violator,
    kirkup_family,
    non_gk_example,
    random_rational_distribution,
    tight_violation_family,
)

F = Fraction


def random_schema(index: int) -> VariableSchema:
    templates = [
        [("A", 2), ("B", 2), ("C", 2)],
        [("A", 2), ("B", 3), ("C", 2)],
        [("A", 3), ("B", 3), ("C", 3)],
        [("A", 2), ("B", 2), ("C", 2), ("D", 2)],
        [("A", 2), ("B", 2), ("C", 3), ("D", 2)],
        [("A", 3), ("B", 2), ("C", 2), ("D", 3)],
    ]
    return VariableSchema.make(templates[index % len(templates)])


def random_corpus(count: int = 500, seed0: int = 1000, bound: int = 120):
    """Full-support rational distributions on 3-4 variables, cards <= 3."""
    out = []
    for t in range(count):
        schema = random_schema(t)
        need = 1
        for _, c in schema.variables:
            need *= c
        out.append(random_rational_distribution(seed0 + t, schema, max(bound, need)))
    return out


def composition_of(rng: random.Random, total: int, parts: int):
    """Random composition of ``total`` into ``parts`` positive integers."""
    if parts == 1:
        return [total]
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    edges = [0] + cuts + [total]
    return [edges[i + 1] - edges[i] for i in range(parts)]


def block_mixture(seed: int) -> JointDistribution:
    """Premise-satisfying triple for the double Markov check.

    The (X, Y) support splits into 2-3 complete-bipartite blocks with
    disjoint state ranges; conditional on the block, (A, X, Y) is a product.
    Both (A:X|Y) and (A:Y|X) then hold exactly for any block weights, and
    the common-information variable of (X, Y) is the block label.
    """
    rng = random.Random(seed)
    n_blocks = rng.choice([2, 3])
    a_card = rng.choice([2, 3])
    x_sizes = [rng.choice([1, 2]) for _ in range(n_blocks)]
    y_sizes = [rng.choice([1, 2]) for _ in range(n_blocks)]
    weights = composition_of(rng, 16, n_blocks)

    mass = {}
    x_off = 0
    y_off = 0
    for b in range(n_blocks):
        w = F(weights[b], 16)
        pa = composition_of(rng, 8, a_card)
        px = composition_of(rng, 8, x_sizes[b])
        py = composition_of(rng, 8, y_sizes[b])
        for a in range(a_card):
            for xi in range(x_sizes[b]):
                for yi in range(y_sizes[b]):
                    p = w * F(pa[a], 8) * F(px[xi], 8) * F(py[yi], 8)
                    mass[(a, x_off + xi, y_off + yi)] = p
        x_off += x_sizes[b]
        y_off += y_sizes[b]
    schema = VariableSchema.make([("A", a_card), ("X", x_off), ("Y", y_off)])
    return JointDistribution.from_mass(schema, mass)


def violator_draws(variant: int, count: int, seed0: int = 7000, denom: int = 64):
    out = []
    for t in range(count):
        rng = random.Random(seed0 + 2 * t + variant)
        free = [F(part, denom) for part in composition_of(rng, denom, 4)]
        out.append(intersection_violator(variant, free))
    return out


def kirkup_grid():
    """Valid parameter points including Composition violators and the exact
    conditional-independence submodel epsilon = delta * (1-alpha)/alpha."""
    pts = [
        KirkupParams(F(1, 2), F(1, 2), F(1, 2), F(0), F(0)),
        KirkupParams(F(1, 2), F(1, 2), F(1, 2), F(0), F(1, 16)),
        KirkupParams(F(1, 2), F(1, 2), F(1, 2), F(0), F(1, 100)),
        KirkupParams(F(1, 2), F(1, 2), F(1, 2), F(0), F(1, 1000)),
        KirkupParams(F(1, 2), F(1, 2), F(1, 2), F(1, 32), F(1, 32)),
        KirkupParams(F(1, 3), F(1, 2), F(1, 4), F(1, 50), F(1, 25)),
        KirkupParams(F(1, 3), F(2, 5), F(1, 4), F(1, 100), F(1, 50)),
        KirkupParams(F(2, 3), F(1, 2), F(1, 2), F(1, 32), F(1, 64)),
        KirkupParams(F(1, 4), F(1, 3), F(2, 3), F(0), F(1, 64)),
        KirkupParams(F(1, 2), F(1, 3), F(2, 3), F(1, 64), F(0)),
    ]
    return [kirkup_family(p) for p in pts]


def kirkup_submodel_draws(count: int = 20, seed0: int = 9000):
    """Random valid points on the submodel where (A : X,Y) holds exactly."""
    out = []
    t = 0
    attempts = 0
    while len(out) < count:
        rng = random.Random(seed0 + attempts)
        attempts += 1
        alpha = F(rng.randint(1, 9), 10)
        beta = F(rng.randint(1, 9), 10)
        gamma = F(rng.randint(1, 9), 10)
        delta = F(rng.randint(-20, 20), 400)
        epsilon = delta * (1 - alpha) / alpha
        try:
            out.append(kirkup_family(KirkupParams(alpha, beta, gamma, delta, epsilon)))
        except Exception:
            continue
    return out


def group_grid():
    return [group_sum_family(k) for k in range(2, 7)]


def tight_grid():
    return [
        tight_violation_family(F(1, 2), F(1, 2)),
        tight_violation_family(F(9, 10), F(99, 100)),
        tight_violation_family(F(1, 3), F(1, 5)),
    ]


def sweep_entries(random_count: int = 500, mixtures: int = 100):
    """(label, distribution) pairs for the soundness sweep."""
    entries = []
    for i, d in enumerate(kirkup_grid()):
        entries.append((f"kirkup[{i}]", d))
    for i, d in enumerate(kirkup_submodel_draws()):
        entries.append((f"kirkup-submodel[{i}]", d))
    for k, d in zip(range(2, 7), group_grid()):
        entries.append((f"group[{k}]", d))
    entries.append(("non-gk", non_gk_example()))
    for variant in (1, 2):
        for i, d in enumerate(violator_draws(variant, 25)):
            entries.append((f"violator{variant}[{i}]", d))
    for i, d in enumerate(tight_grid()):
        entries.append((f"tight[{i}]", d))
    for i in range(mixtures):
        entries.append((f"mixture[{i}]", block_mixture(5000 + i)))

    randoms = random_corpus(random_count)
    for i, d in enumerate(randoms):
        entries.append((f"random[{i}]", d))
        names = d.schema.names
        if i % 5 == 0:
            entries.append((f"random[{i}]+gk", gk_extend(d, names[1], names[2], "_G")))
            pair = d.marginalize([names[1], names[2]])
            entries.append((f"random[{i}]+cause", common_cause_extension(pair, name="_A")))
    return entries


def role_triples(d: JointDistribution):
    """All (a, {x, y}, g) role choices; g is the leftover on four variables."""
    names = d.schema.names
    out = []
    for a in names:
        rest = [n for n in names if n != a]
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                x, y = rest[i], rest[j]
                leftover = [n for n in rest if n not in (x, y)]
                g = leftover[0] if len(leftover) == 1 else None
                out.append((a, x, y, g))
    return out
