import pytest

from gtopo.errors import InputError, PreconditionError, ResourceError
from gtopo.spaces import (
    FiniteGT, canonical_key, census_count, close_under_union, closure,
    enumerate_strong_gts, generated_topology, interior, make_space,
    mask_from_points, parse_space_dict, points_from_mask, product,
    sample_strong_gts, separation_profile, space_to_dict, subspace,
    validate_gt,
)

from census_oracle import brute_force_strong_gts

# frozen from the brute-force oracle over all candidate families
ORACLE_COUNTS = {0: 1, 1: 1, 2: 4, 3: 45, 4: 2271}


def m(*points, n=None):
    return mask_from_points(points, n if n is not None else max(points) + 1)


def space(n, *sets):
    return make_space(n, [mask_from_points(s, n) for s in sets])


SIERPINSKI3 = space(3, [], [0, 1], [1, 2], [0, 1, 2])


# ---------------------------------------------------------------- validate

def test_validate_missing_union():
    r = validate_gt([0, 0b011, 0b110], 3)
    assert not r.is_gt
    assert "union" in r.violation


def test_validate_discrete_two_points():
    r = validate_gt([0, 0b01, 0b10, 0b11], 2)
    assert r.is_gt and r.is_strong and r.is_topology and r.violation is None


def test_validate_gt_but_not_topology():
    r = validate_gt([0, 0b011, 0b110, 0b111], 3)
    assert r.is_gt and r.is_strong and not r.is_topology
    assert "intersection" in r.violation


def test_validate_missing_empty_set():
    r = validate_gt([0b01, 0b11], 2)
    assert not r.is_gt and "empty" in r.violation


def test_validate_point_out_of_range():
    with pytest.raises(InputError):
        validate_gt([0, 0b100], 2)
    with pytest.raises(InputError):
        make_space(2, [0, 0b1000])


def test_make_space_rejects_non_gt():
    with pytest.raises(PreconditionError):
        make_space(3, [0, 0b011, 0b110])


# ---------------------------------------------------------------- closure

def test_closure_only_superset_is_whole_space():
    assert closure(SIERPINSKI3, 0b010) == 0b111


def test_closure_of_closed_point():
    assert closure(SIERPINSKI3, 0b001) == 0b001


def test_closure_empty_in_strong_space():
    assert closure(SIERPINSKI3, 0) == 0


def test_closure_properties_over_census():
    for sp in enumerate_strong_gts(3):
        for a in range(8):
            c = closure(sp, a)
            assert a & ~c == 0
            assert closure(sp, c) == c
            assert sp.is_closed(c)
            for b in range(8):
                if a & ~b == 0:
                    assert c & ~closure(sp, b) == 0


# ---------------------------------------------------------------- interior

def test_interior_of_open_set():
    assert interior(SIERPINSKI3, 0b011) == 0b011


def test_interior_no_open_inside():
    assert interior(SIERPINSKI3, 0b010) == 0


def test_interior_whole_strong_space():
    assert interior(SIERPINSKI3, 0b111) == 0b111


def test_interior_properties_and_clopen():
    for sp in enumerate_strong_gts(3):
        for a in range(8):
            i = interior(sp, a)
            assert i & ~a == 0
            assert interior(sp, i) == i
            clopen = interior(sp, a) == a and closure(sp, a) == a
            assert clopen == (sp.is_open(a) and sp.is_closed(a))


# ---------------------------------------------------------------- subspace

def test_subspace_traces_and_relabels():
    sub = subspace(SIERPINSKI3, 0b101)
    assert sub.n == 2
    assert sub.opens == (0, 0b01, 0b10, 0b11)


def test_subspace_whole_is_identity():
    assert subspace(SIERPINSKI3, 0b111) == SIERPINSKI3


def test_subspace_empty():
    sub = subspace(SIERPINSKI3, 0)
    assert sub.n == 0 and sub.opens == (0,)


# ---------------------------------------------------------------- product

def test_product_expands_formula():
    s1 = space(2, [], [0], [0, 1])
    s2 = space(2, [], [0, 1])
    p = product(s1, s2)
    assert p.n == 4
    assert p.opens == (0, 0b0011, 0b1111)


def test_product_of_indiscrete_is_indiscrete():
    s = space(2, [], [0, 1])
    p = product(s, s)
    assert p.opens == (0, 0b1111)


def test_product_closed_sets_are_rectangles():
    spaces2 = list(enumerate_strong_gts(2))
    for s1 in spaces2:
        for s2 in spaces2:
            p = product(s1, s2)
            assert validate_gt(p.opens, p.n).is_strong
            rects = {_rect(s1.full ^ u, s2.full ^ v, s1.n, s2.n)
                     for u in s1.opens for v in s2.opens}
            assert set(p.closeds) == rects


def _rect(a: int, b: int, n1: int, n2: int) -> int:
    out = 0
    for x in points_from_mask(a):
        for y in points_from_mask(b):
            out |= 1 << (x * n2 + y)
    return out


def test_product_requires_strong_factors():
    weak = FiniteGT(2, (0, 0b01))
    strong = space(2, [], [0, 1])
    with pytest.raises(PreconditionError):
        product(weak, strong)


# ---------------------------------------------------------------- tau(mu)

def test_generated_topology_adds_intersection():
    t = generated_topology(SIERPINSKI3)
    assert t.opens == (0, 0b010, 0b011, 0b110, 0b111)
    assert validate_gt(t.opens, 3).is_topology


def test_generated_topology_fixpoint_on_topology():
    disc = space(2, [], [0], [1], [0, 1])
    assert generated_topology(disc) == disc
    ind = space(2, [], [0, 1])
    assert generated_topology(ind) == ind


def test_generated_topology_contains_and_closed():
    for sp in enumerate_strong_gts(3):
        t = generated_topology(sp)
        assert set(sp.opens) <= set(t.opens)
        r = validate_gt(t.opens, 3)
        assert r.is_topology and r.is_strong


# ---------------------------------------------------------------- profile

def test_profile_discrete():
    disc = space(2, [], [0], [1], [0, 1])
    pr = separation_profile(disc)
    assert pr.t0 and pr.t1 and pr.t2 and pr.normal


def test_profile_sierpinski_like():
    pr = separation_profile(SIERPINSKI3)
    assert pr.t0 and not pr.t1 and not pr.normal


def test_profile_clopen_partition_is_normal():
    pr = separation_profile(space(4, [], [0, 1], [2, 3], [0, 1, 2, 3]))
    assert pr.normal


def test_profile_hierarchy_over_census():
    for n in (2, 3):
        for sp in enumerate_strong_gts(n):
            pr = separation_profile(sp)
            if pr.t2:
                assert pr.t1
            if pr.t1:
                assert pr.t0


# ---------------------------------------------------------------- census

def test_census_counts_match_oracle():
    for n, expected in ORACLE_COUNTS.items():
        assert census_count(n) == expected
        assert len(brute_force_strong_gts(n)) == expected


def test_census_families_match_oracle_exactly():
    for n in (2, 3, 4):
        ours = {frozenset(frozenset(points_from_mask(u)) for u in sp.opens)
                for sp in enumerate_strong_gts(n)}
        assert ours == set(brute_force_strong_gts(n))


def test_census_stream_deterministic_and_canonical():
    first = list(enumerate_strong_gts(3))
    second = list(enumerate_strong_gts(3))
    assert first == second
    assert first[0].opens == (0, 0b111)
    assert len(first[-1].opens) == 8
    for sp in first:
        assert sp.opens == tuple(sorted(sp.opens, key=canonical_key))


def test_census_resource_limits():
    with pytest.raises(ResourceError):
        next(enumerate_strong_gts(5))
    with pytest.raises(ResourceError):
        next(enumerate_strong_gts(6, max_points=6))
    with pytest.warns(UserWarning):
        gen = enumerate_strong_gts(5, max_points=5)
        assert next(gen).opens == (0, 0b11111)


def test_sampler_deterministic_distinct_valid():
    a = sample_strong_gts(4, 50, seed=7)
    b = sample_strong_gts(4, 50, seed=7)
    assert a == b
    assert len({sp.opens for sp in a}) == 50
    for sp in a:
        r = validate_gt(sp.opens, 4)
        assert r.is_gt and r.is_strong


# ---------------------------------------------------------------- plumbing

def test_space_dict_round_trip():
    doc = space_to_dict(SIERPINSKI3)
    assert doc == {"points": 3, "open_sets": [[], [0, 1], [1, 2], [0, 1, 2]]}
    n, masks = parse_space_dict(doc)
    assert make_space(n, masks) == SIERPINSKI3


def test_parse_space_dict_rejects_junk():
    for doc in (["not", "a", "dict"], {"points": 2}, {"open_sets": []},
                {"points": -1, "open_sets": []},
                {"points": True, "open_sets": []},
                {"points": 2, "open_sets": [[0], "x"]},
                {"points": 2, "open_sets": [[2]]}):
        with pytest.raises(InputError):
            parse_space_dict(doc)


def test_close_under_union():
    fam = close_under_union([0b001, 0b010])
    assert fam == {0b001, 0b010, 0b011}
