"""Acceptance gate: ten criteria covering the census, the finite decision
procedures, the ladder machinery, and the symbolic real-line constructions.

Each test prints one "criterion N: PASS/FAIL" line (run pytest with -s to
see them on passing runs).  Criteria 1, 2 and 6 carry wall-clock budgets.
"""

import functools
import random
import time
from fractions import Fraction as F

from gtopo.pwmaps import constant_map, make_pwmap
from gtopo.rationals import dyadics_by_level
from gtopo.realline import (check_continuity_sym, classify,
                            disjoint_open_triple, effective_F, gul_witness,
                            ladder_from_F, tietze_extend)
from gtopo.spaces import (census_count, enumerate_strong_gts,
                          generated_topology, points_from_mask, product,
                          separation_profile, validate_gt)
from gtopo.urysohn import (EMPTY_U_FAMILY, check_continuity_finite,
                           check_ladder, combine_effective_witnesses,
                           decide_gul_pair, decide_statement, decide_ul_pair,
                           effective_witness, extend_ladder_step,
                           extend_u_family, function_from_ladder, is_u_normal,
                           ladder_from_function, make_ladder,
                           validate_u_family)
from census_oracle import brute_force_strong_gts
from continuity_oracle import oracle_continuous_gtaun, oracle_continuous_taun
from test_realline import (S, _assert_ladder_clauses, rand_closed_pair,
                           rand_monotone_continuous)

A01, B23 = S("[0,1]"), S("[2,3]")

_STMT: dict = {}


def _holds(space, statement):
    key = (space, statement)
    if key not in _STMT:
        _STMT[key] = decide_statement(space, statement).holds
    return _STMT[key]


def _pairs(space):
    return [(a, b) for a in space.closeds for b in space.closeds
            if not a & b]


def criterion(num, label):
    def deco(fn):
        @functools.wraps(fn)
        def run(*args, **kw):
            try:
                fn(*args, **kw)
            except BaseException:
                print(f"criterion {num}: FAIL - {label}")
                raise
            print(f"criterion {num}: PASS - {label}")
        return run
    return deco


@criterion(1, "census integrity against the brute-force oracle")
def test_criterion_01_census_integrity():
    start = time.monotonic()
    assert census_count(2) == 4
    lib = list(enumerate_strong_gts(3))
    oracle = brute_force_strong_gts(3)
    assert len(lib) == len(oracle) == 45
    as_families = {frozenset(frozenset(points_from_mask(u)) for u in s.opens)
                   for s in lib}
    assert as_families == set(oracle)
    assert time.monotonic() - start < 10


@criterion(2, "the four separation statements collapse on finite spaces")
def test_criterion_02_finite_collapse(corpus):
    start = time.monotonic()
    for s in corpus:
        normal = separation_profile(s).normal
        clopen_sep = True
        for a, b in _pairs(s):
            if not any(a & ~c == 0 and c & b == 0
                       for c in s.opens if (s.full ^ c) in s.open_set):
                clopen_sep = False
                break
        gul = _holds(s, "GUL")
        ul = _holds(s, "UL")
        assert normal == clopen_sep == gul == ul
        # spot-verify the produced witnesses with the value-level oracle
        for a, b in _pairs(s):
            f = decide_gul_pair(s, a, b)
            if f is not None:
                assert oracle_continuous_gtaun(f.values, s.opens)
                assert all(f.values[p] == 0 for p in points_from_mask(a))
                assert all(f.values[p] == 1 for p in points_from_mask(b))
            g = decide_ul_pair(s, a, b)
            assert (f is None) == (g is None)
            if g is not None and a and b:
                assert oracle_continuous_taun(g.values, s.opens)
    assert time.monotonic() - start < 120


@criterion(3, "pairwise implications between the statements")
def test_criterion_03_implication_suite(corpus):
    for s in corpus:
        for a, b in _pairs(s):
            if decide_ul_pair(s, a, b) is not None:
                assert decide_gul_pair(s, a, b) is not None
        if _holds(s, "GUL"):
            assert separation_profile(s).normal
        if s.is_topology:
            assert _holds(s, "UL") == _holds(s, "GUL")
            assert _holds(s, "TET") == _holds(s, "GTET")
            if _holds(s, "TET"):
                assert _holds(s, "UL")


@criterion(4, "ladders extracted from witnesses and back")
def test_criterion_04_ladder_round_trips(corpus):
    seeded = []
    pair_checked = 0
    for s in corpus:
        for a, b in _pairs(s):
            if a == 0 or b == 0:
                continue
            f = decide_gul_pair(s, a, b)
            if f is None:
                continue
            lad = ladder_from_function(s, f, mode="single")
            assert check_ladder(s, lad, a, b).ok
            seeded.append((s, lad, a, b))
            if pair_checked < 200:
                g = decide_ul_pair(s, a, b)
                plad = ladder_from_function(s, g, mode="pair")
                assert check_ladder(s, plad, a, b).ok
                pair_checked += 1
    assert len(seeded) >= 100
    rng = random.Random(1007)
    for s, lad, a, b in rng.sample(seeded, 100):
        g = function_from_ladder(s, lad, b)
        assert check_continuity_finite(g, s, "gtaun")
        assert all(g.values[p] == 0 for p in points_from_mask(a))
        assert all(g.values[p] == 1 for p in points_from_mask(b))


@criterion(5, "stepwise ladder and chain-family extension cores")
def test_criterion_05_step_cores(census3):
    for s in census3:
        if not separation_profile(s).normal:
            continue
        for a, b in _pairs(s):
            if a == 0 or b == 0:
                continue
            lad = make_ladder({})
            for r in dyadics_by_level(5):
                lad = extend_ladder_step(s, lad, a, b, r)
            assert len(lad.entries) == 31
            assert check_ladder(s, lad, a, b).ok
    for s in census3:
        rep = is_u_normal(s, 3)
        for a, b in _pairs(s):
            if a == 0 or b == 0:
                continue
            for n in range(rep.n_max):
                if not rep.per_n[n]:
                    continue
                fam = EMPTY_U_FAMILY
                for _ in range(n):
                    fam = extend_u_family(s, fam, a, b)
                assert fam.length == n
                assert validate_u_family(s, fam, a, b).ok


@criterion(6, "real-line separation is g-continuous but never window-continuous")
def test_criterion_06_headline_separation():
    start = time.monotonic()
    f = gul_witness(A01, B23, "gtn")
    assert check_continuity_sym(f, "gtn", "gtaun")
    assert not check_continuity_sym(f, "gtn", "taun")
    rng = random.Random(60701)
    for _ in range(100):
        g = _random_pinned_candidate(rng)
        assert not check_continuity_sym(g, "gtn", "taun")
    t = disjoint_open_triple(f)
    assert t.verdicts[1] not in ("open", "clopen")
    assert classify(t.v, "gtn") == "neither"
    assert time.monotonic() - start < 30


def _random_pinned_candidate(rng):
    """Piecewise-affine map sending [0,1] to 0 and [2,3] to 1, otherwise
    arbitrary: constant on the pinned stretches, random elsewhere."""
    def q():
        return F(rng.randrange(-3, 4))
    left = F(rng.randrange(-4, 0))
    right = F(rng.randrange(4, 8))
    mid = F(rng.randrange(5, 8), 4)
    return make_pwmap(
        (left, F(1), mid, F(2), right),
        ((q(), q()), (0, 0), (q(), q()), (q(), q()), (0, 1), (q(), q())),
        (q(), F(0), q(), F(1), q()))


@criterion(7, "extension from the three closed forms, both targets")
def test_criterion_07_extension_forms():
    rng = random.Random(2407)
    for p in (S("[-2,3]"), S("(-inf,1]"), S("[-1,inf)")):
        for _ in range(50):
            g = rand_monotone_continuous(rng)
            ext = tietze_extend(p, g, "gtaun")
            assert ext.equals_on(g, p)
            assert check_continuity_sym(ext, "gtn", "gtaun")
            c = constant_map(F(rng.randrange(-6, 7), rng.randrange(1, 5)))
            ext2 = tietze_extend(p, c, "taun")
            assert ext2.equals_on(c, p)
            assert check_continuity_sym(ext2, "gtn", "taun")


@criterion(8, "uniform effective separator is total; its dyadic ladder holds")
def test_criterion_08_effective_separator():
    rng = random.Random(3508)
    for space in ("gtn", "gts"):
        for _ in range(200):
            a, b = rand_closed_pair(rng, space)
            w = effective_F(a, b, space)
            assert classify(w.u, space) in ("open", "clopen")
            assert classify(w.v, space) in ("open", "clopen")
            assert w.u.isdisjoint(w.v)
            assert a.issubset(w.u) and b.issubset(w.v)
    lad = ladder_from_F(A01, B23, "gtn", 6)
    assert len(lad.indices()) == 63
    _assert_ladder_clauses(lad, A01, B23, "gtn")
    lad1 = ladder_from_F(A01, B23, "gtn", 1)
    assert lad1.get(F(1, 2)) == S("(-inf,3/2)")


@criterion(9, "products preserve strength, GUL, UL, and effective witnesses")
def test_criterion_09_product_transfers():
    census2 = [s for n in range(3) for s in enumerate_strong_gts(n)]
    from gtopo.spaces import sample_strong_gts
    triples = sample_strong_gts(3, 20, seed=9099)
    rng = random.Random(415)
    pairs = [(s1, s2) for s1 in census2 for s2 in census2]
    pairs += [(rng.choice(triples), rng.choice(triples)) for _ in range(50)]
    for s1, s2 in pairs:
        prod = product(s1, s2)
        rep = validate_gt(prod.opens, prod.n)
        assert rep.is_gt and rep.is_strong
        if _holds(s1, "GUL") and _holds(s2, "GUL"):
            assert _holds(prod, "GUL")
        if _holds(s1, "UL") and _holds(s2, "UL"):
            assert _holds(prod, "UL")
        w1, w2 = effective_witness(s1), effective_witness(s2)
        if w1 is None or w2 is None:
            continue
        w = combine_effective_witnesses(s1, s2, w1, w2)
        for a, b in _pairs(prod):
            u, v = w.apply(a, b)
            assert prod.is_open(u) and prod.is_open(v)
            assert a & ~u == 0 and b & ~v == 0 and u & v == 0


@criterion(10, "GUL spaces upgrade to UL under the generated topology")
def test_criterion_10_generated_topology_upgrade(census3):
    for s in census3:
        if _holds(s, "GUL"):
            tau = generated_topology(s)
            assert decide_statement(tau, "UL").holds
