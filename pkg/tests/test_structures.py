import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ciprops import (
    CIStatement,
    CIStructure,
    canonical_orbit_form,
    closure,
    expand_global,
    full_structure,
    holds_global,
    meet_irreducibles,
    orbit_count,
    satisfies_axiom,
)
from ciprops.errors import (
    MixedGroundSetsError,
    NotMeetClosedError,
    OverlappingSetsError,
    UnknownRuleError,
)
from ciprops.structures import all_elementary_statements, dumps_structure, loads_structure, parse_catalog

S = CIStatement.make


def struct(n, *stmts):
    return CIStructure.make(n, stmts)


# -- statements -----------------------------------------------------------------

def test_statement_canonical_symmetry():
    assert S(2, 1) == S(1, 2)
    assert S(3, 1, {2}) == S(1, 3, {2})


def test_statement_rejects_overlap():
    with pytest.raises(OverlappingSetsError):
        S(1, 1)
    with pytest.raises(OverlappingSetsError):
        S(1, 2, {2})


def test_elementary_count():
    # n(n-1)/2 * 2^(n-2) statements
    assert len(all_elementary_statements(3)) == 6
    assert len(all_elementary_statements(4)) == 24


# -- global expansion --------------------------------------------------------------

def test_expand_global_basic():
    got = expand_global([1], [2, 3], [], 3)
    want = {S(1, 2), S(1, 2, {3}), S(1, 3), S(1, 3, {2})}
    assert got == want


def test_expand_global_already_elementary():
    assert expand_global([1], [2], [], 3) == {S(1, 2)}
    assert expand_global([1], [2], [3], 4) == {S(1, 2, {3})}


def test_expand_global_overlap_error():
    with pytest.raises(OverlappingSetsError):
        expand_global([1], [1, 2], [], 3)


def test_holds_global():
    assert holds_global(full_structure(3), [1], [2, 3], [])
    assert not holds_global(struct(3, S(1, 2)), [1], [2, 3], [])


# -- closure ------------------------------------------------------------------------

def test_closure_semigraphoid_exchange():
    got = closure(struct(3, S(1, 2), S(1, 3, {2})))
    assert got.statements == {S(1, 2), S(1, 3, {2}), S(1, 3), S(1, 2, {3})}


def test_closure_composition_rule():
    got = closure(struct(3, S(1, 2), S(1, 3)), rules=["composition"])
    assert got.statements == {S(1, 2), S(1, 3), S(1, 2, {3}), S(1, 3, {2})}


def test_closure_empty():
    for rules in ([], ["intersection"], ["composition"]):
        assert closure(struct(3), rules=rules).statements == frozenset()


def test_closure_rejects_weak_transitivity():
    with pytest.raises(UnknownRuleError, match="satisfies_axiom"):
        closure(struct(3), rules=["weak_transitivity"])
    with pytest.raises(UnknownRuleError):
        closure(struct(3), rules=["bogus"])


@st.composite
def structures(draw, n=4, max_size=8):
    pool = all_elementary_statements(n)
    picked = draw(st.sets(st.sampled_from(pool), max_size=max_size))
    return CIStructure.make(n, picked)


@settings(max_examples=40, deadline=None)
@given(structures(), st.sampled_from([(), ("intersection",), ("composition",), ("intersection", "composition")]))
def test_closure_extensive_idempotent(s, rules):
    c = closure(s, rules=rules)
    assert s.statements <= c.statements
    assert closure(c, rules=rules).statements == c.statements


@settings(max_examples=40, deadline=None)
@given(structures(max_size=5), structures(max_size=5))
def test_closure_monotone(s, t):
    u = CIStructure.make(4, s.statements | t.statements)
    assert closure(s).statements <= closure(u).statements


# -- axioms ---------------------------------------------------------------------------

def test_axiom_full_structure_everything_holds():
    full = full_structure(4)
    for axiom in ("semigraphoid", "intersection", "composition",
                  "weak_transitivity", "graphoid", "compositional_graphoid", "gaussoid"):
        assert satisfies_axiom(full, axiom).holds


def test_axiom_witness_lexicographic():
    # pairwise-independent structure (the group pattern): composition fails
    # at the first instance
    s = struct(3, S(1, 2), S(1, 3), S(2, 3))
    verdict = satisfies_axiom(s, "composition")
    assert not verdict.holds
    w = verdict.witness
    assert (w.i, w.j, w.k, w.L) == (1, 2, 3, ())
    assert w.render() == "(1;2,3|∅)"
    assert w.render(("A", "X", "Y")) == "(A;X,Y|∅)"


def test_weak_transitivity_violation():
    s = struct(3, S(1, 2), S(1, 2, {3}))
    verdict = satisfies_axiom(s, "weak_transitivity")
    assert not verdict.holds
    assert (verdict.witness.i, verdict.witness.j, verdict.witness.k) == (1, 2, 3)
    # adding one disjunct fixes it
    assert satisfies_axiom(struct(3, S(1, 2), S(1, 2, {3}), S(1, 3)), "weak_transitivity").holds


def test_composite_axioms_delegate():
    s = struct(3, S(1, 2), S(1, 3), S(2, 3))
    assert satisfies_axiom(s, "semigraphoid").holds
    assert satisfies_axiom(s, "graphoid").holds
    assert not satisfies_axiom(s, "compositional_graphoid").holds


# -- duality ------------------------------------------------------------------------------

def test_dual_examples():
    assert struct(3, S(1, 2)).dual().statements == {S(1, 2, {3})}


@settings(max_examples=60, deadline=None)
@given(structures())
def test_dual_involution(s):
    assert s.dual().dual().statements == s.statements


def test_duality_swaps_properties_exhaustively_n3():
    """All 64 structures on n=3: intersection <-> composition under duality,
    and the semigraphoid count agrees with the brute-force oracle."""
    semigraphoid_lib = 0
    semigraphoid_oracle = 0
    for raw in oracles.all_substructures(3):
        s = CIStructure.make(3, [S(i, j, K) for i, j, K in raw])
        assert s.dual().dual().statements == s.statements
        assert satisfies_axiom(s, "intersection").holds == satisfies_axiom(s.dual(), "composition").holds
        assert satisfies_axiom(s, "composition").holds == satisfies_axiom(s.dual(), "intersection").holds
        # cross-check each axiom against the oracle on the raw representation
        assert satisfies_axiom(s, "semigraphoid").holds == oracles.semigraphoid_ok(raw, 3)
        assert satisfies_axiom(s, "intersection").holds == oracles.intersection_ok(raw, 3)
        assert satisfies_axiom(s, "composition").holds == oracles.composition_ok(raw, 3)
        semigraphoid_lib += satisfies_axiom(s, "semigraphoid").holds
        semigraphoid_oracle += oracles.semigraphoid_ok(raw, 3)
    assert semigraphoid_lib == semigraphoid_oracle


# -- orbits ----------------------------------------------------------------------------------

def test_canonical_orbit_identities():
    a = struct(3, S(1, 2))
    b = struct(3, S(2, 3))
    c = struct(3, S(1, 2, {3}))
    assert canonical_orbit_form(a) == canonical_orbit_form(b)
    assert canonical_orbit_form(a) != canonical_orbit_form(c)


def test_singleton_orbits_n3():
    singles = [struct(3, s) for s in all_elementary_statements(3)]
    assert orbit_count(singles) == 2
    raw = [frozenset({(s.i, s.j, tuple(sorted(s.K)))}) for s in all_elementary_statements(3)]
    assert oracles.orbit_count_brute(raw, 3) == 2


def test_orbit_count_empty_and_mixed():
    assert orbit_count([]) == 0
    with pytest.raises(MixedGroundSetsError):
        orbit_count([struct(3), struct(4)])


@settings(max_examples=40, deadline=None)
@given(structures(), st.permutations([1, 2, 3, 4]))
def test_canonical_form_is_orbit_invariant(s, perm):
    mapping = {old: perm[old - 1] for old in (1, 2, 3, 4)}
    assert canonical_orbit_form(s.relabel(mapping)) == canonical_orbit_form(s)


# -- lattice ---------------------------------------------------------------------------------

def test_meet_irreducibles_square():
    a, b = S(1, 2), S(1, 3)
    family = [struct(3), struct(3, a), struct(3, b), struct(3, a, b)]
    got = meet_irreducibles(family)
    assert [g.statements for g in got] == [frozenset({a}), frozenset({b})]


def test_meet_irreducibles_chain():
    a, b = S(1, 2), S(1, 3)
    family = [struct(3), struct(3, a), struct(3, a, b)]
    got = meet_irreducibles(family)
    assert [g.statements for g in got] == [frozenset(), frozenset({a})]


def test_meet_irreducibles_singleton_family():
    assert meet_irreducibles([struct(3, S(1, 2))]) == []


def test_meet_irreducibles_not_closed():
    a, b = S(1, 2), S(1, 3)
    with pytest.raises(NotMeetClosedError):
        meet_irreducibles([struct(3, a), struct(3, b)])


# -- files ------------------------------------------------------------------------------------

def test_structure_file_roundtrip():
    s = struct(4, S(1, 2, {3}), S(2, 4))
    text = dumps_structure(s)
    assert loads_structure(text) == s
    assert dumps_structure(loads_structure(text)) == text


def test_structure_file_accepts_j_less_i():
    s = loads_structure('{"n": 3, "statements": [[2, 1, [3]]]}')
    assert s.statements == {S(1, 2, {3})}


def test_parse_catalog():
    text = """
    # a comment
    [[1,2,[]],[1,2,[3]]]
    []
    [[3,4,[1]]]  # inline comment
    """
    cat = parse_catalog(text)
    assert [len(c) for c in cat] == [2, 0, 1]
    assert all(c.n == 4 for c in cat)
    cat5 = parse_catalog(text, n=5)
    assert all(c.n == 5 for c in cat5)
