"""Independent brute-force oracles.

These are written directly from the definitions, before and separately from
the library under test.  They deliberately use their own representations
(plain tuples, bitmasks, raw dicts) so that agreement with the library is a
real cross-check and not a tautology.
"""

import itertools
import math
from fractions import Fraction

# ---------------------------------------------------------------------------
# Elementary CI statements on a small ground set, as plain tuples (i, j, K)
# with i < j and K a sorted tuple.  No library types.

def elementary_statements(n):
    out = []
    elems = range(1, n + 1)
    for i, j in itertools.combinations(elems, 2):
        rest = [e for e in elems if e not in (i, j)]
        for r in range(len(rest) + 1):
            for K in itertools.combinations(rest, r):
                out.append((i, j, K))
    return sorted(out)


def _canon(i, j, K):
    i, j = min(i, j), max(i, j)
    return (i, j, tuple(sorted(K)))


def _instances(n):
    elems = range(1, n + 1)
    for i in elems:
        for j in elems:
            if j == i:
                continue
            for k in elems:
                if k in (i, j):
                    continue
                rest = [e for e in elems if e not in (i, j, k)]
                for r in range(len(rest) + 1):
                    for L in itertools.combinations(rest, r):
                        yield i, j, k, L


def semigraphoid_ok(stmts, n):
    """{(i:j|L), (i:k|jL)} => {(i:k|L), (i:j|kL)} for every instance."""
    S = {_canon(*t) for t in stmts}
    for i, j, k, L in _instances(n):
        if _canon(i, j, L) in S and _canon(i, k, L + (j,)) in S:
            if _canon(i, k, L) not in S or _canon(i, j, L + (k,)) not in S:
                return False
    return True


def intersection_ok(stmts, n):
    S = {_canon(*t) for t in stmts}
    for i, j, k, L in _instances(n):
        if _canon(i, j, L + (k,)) in S and _canon(i, k, L + (j,)) in S:
            if _canon(i, j, L) not in S or _canon(i, k, L) not in S:
                return False
    return True


def composition_ok(stmts, n):
    S = {_canon(*t) for t in stmts}
    for i, j, k, L in _instances(n):
        if _canon(i, j, L) in S and _canon(i, k, L) in S:
            if _canon(i, j, L + (k,)) not in S or _canon(i, k, L + (j,)) not in S:
                return False
    return True


def dual_statements(stmts, n):
    full = set(range(1, n + 1))
    out = set()
    for i, j, K in stmts:
        out.add(_canon(i, j, tuple(full - {i, j} - set(K))))
    return out


def all_substructures(n):
    """Every subset of the elementary statements on [n], as frozensets."""
    elem = elementary_statements(n)
    for r in range(len(elem) + 1):
        for combo in itertools.combinations(elem, r):
            yield frozenset(combo)


def orbit_count_brute(families, n):
    """Distinct relabeling classes by exhaustive permutation of [n]."""
    seen = set()
    for stmts in families:
        best = None
        for perm in itertools.permutations(range(1, n + 1)):
            m = {old: perm[old - 1] for old in range(1, n + 1)}
            img = tuple(sorted(_canon(m[i], m[j], tuple(m[e] for e in K))
                               for i, j, K in stmts))
            if best is None or img < best:
                best = img
        seen.add(best)
    return len(seen)


# ---------------------------------------------------------------------------
# Raw information measures straight from mass dictionaries.

def entropy_brute(mass, idxs):
    """H of the marginal on the given coordinate positions, in nats.

    mass: dict mapping outcome tuples to Fraction.
    """
    marg = {}
    for outcome, p in mass.items():
        key = tuple(outcome[i] for i in idxs)
        marg[key] = marg.get(key, Fraction(0)) + p
    h = 0.0
    for key in sorted(marg):
        p = marg[key]
        if p > 0:
            h -= float(p) * math.log(float(p))
    return h


def cmi_brute(mass, I, J, K):
    """I(I:J|K) = H(IK) + H(JK) - H(IJK) - H(K) from a raw mass dict."""
    hik = entropy_brute(mass, sorted(set(I) | set(K)))
    hjk = entropy_brute(mass, sorted(set(J) | set(K)))
    hijk = entropy_brute(mass, sorted(set(I) | set(J) | set(K)))
    hk = entropy_brute(mass, sorted(set(K))) if K else 0.0
    return hik + hjk - hijk - hk


def ci_brute(mass, I, J, K):
    """Exact factorization test p(ijk)p(k) == p(ik)p(jk), all outcomes."""
    def marg(idxs):
        out = {}
        for outcome, p in mass.items():
            key = tuple(outcome[i] for i in idxs)
            out[key] = out.get(key, Fraction(0)) + p
        return out

    iI, iJ, iK = sorted(I), sorted(J), sorted(K)
    iIK, iJK = sorted(set(I) | set(K)), sorted(set(J) | set(K))
    iIJK = sorted(set(I) | set(J) | set(K))
    m_ijk, m_ik, m_jk = marg(iIJK), marg(iIK), marg(iJK)
    m_k = marg(iK)

    def proj(key, src, dst):
        pos = {c: t for t, c in enumerate(src)}
        return tuple(key[pos[c]] for c in dst)

    # iterate the full product space of the IJK marginal states
    states = {}
    for outcome in mass:
        for c in iIJK:
            states.setdefault(c, set()).add(outcome[c])
    # include every index combination seen per coordinate
    for combo in itertools.product(*(sorted(states[c]) for c in iIJK)):
        lhs = m_ijk.get(combo, Fraction(0)) * (m_k.get(proj(combo, iIJK, iK), Fraction(0)) if iK else Fraction(1))
        rhs = m_ik.get(proj(combo, iIJK, iIK), Fraction(0)) * m_jk.get(proj(combo, iIJK, iJK), Fraction(0))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Matrix rank over the rationals by hand-rolled elimination (for cross-checks
# of the subspace-arrangement polymatroid).

def rank_brute(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [v - f * w for v, w in zip(rows[k], rows[r])]
        r += 1
        rank += 1
    return rank
