"""The 53-part construction: zones, the four part families, golden tables."""

import pytest

from perfpart.construct_l61 import (
    DEFAULT_PATTERN,
    DEFAULT_SEED,
    DEFAULT_Y0,
    Pattern,
    build_l61,
    build_t1,
    build_t3,
    build_t4,
    canonical_rep,
    class_of,
    linked_zones,
    pattern_apply,
    propagate_zone,
    t1_subset,
)
from perfpart.graph_model import l_graph
from perfpart.matchings import label_l61
from perfpart.perm_core import cycles_of, from_cycle_tuples, inverse, parse_cycles
from perfpart.tables import (
    canonical_parts,
    diff_parts,
    l61_golden_parts,
    t1_table,
    t3_table,
    t4_table,
    zone_table,
)
from perfpart.verifier import check_partition


def default_zones():
    return linked_zones(DEFAULT_SEED, Pattern.for_rep(DEFAULT_SEED, DEFAULT_PATTERN), DEFAULT_Y0)


def c33_reps(l61_classes):
    return sorted({canonical_rep(p) for p in l61_classes["C33"]})


def patterns_of(rep):
    (_, x, y), (a, b, c) = cycles_of(rep)
    return [Pattern(x=x, y=y, word=w) for w in ((a, b, c), (a, c, b))]


def test_class_of_examples():
    assert class_of(parse_cycles("(1 2 3)(4 6 5)", 6)) == 2
    assert class_of(parse_cycles("(1 2 3)(4 5 6)", 6)) == 3
    assert class_of(parse_cycles("(1 3 2)(4 5 6)", 6)) == 2


def test_class_is_inverse_invariant_and_balanced(l61_classes):
    for p in l61_classes["C33"]:
        assert class_of(p) == class_of(inverse(p))
    counts = {y: 0 for y in range(2, 7)}
    for p in l61_classes["C33"]:
        counts[class_of(p)] += 1
    assert counts == {y: 8 for y in range(2, 7)}


def test_canonical_rep(l61_classes):
    for p in l61_classes["C33"]:
        rep = canonical_rep(p)
        assert rep in (p, inverse(p))
        _, second = cycles_of(rep)
        assert list(second) == sorted(second)


def test_class_of_rejects_other_types():
    with pytest.raises(ValueError, match="double 3-cycle"):
        class_of(parse_cycles("(1 2 3 4 5 6)", 6))


def test_pattern_normalizes_word_rotation():
    a = Pattern(x=3, y=2, word=(4, 6, 5))
    b = Pattern(x=3, y=2, word=(6, 5, 4))
    assert a == b and a.word[0] == 4
    assert a.nxt(4) == 6 and a.nxt(6) == 5 and a.nxt(5) == 4
    assert a.prv(4) == 5 and a.perm() == DEFAULT_PATTERN


def test_pattern_validation():
    with pytest.raises(ValueError, match="six points"):
        Pattern(x=3, y=2, word=(4, 6, 3))
    with pytest.raises(ValueError, match="does not fit"):
        Pattern.for_rep(DEFAULT_SEED, parse_cycles("(1 2 3)(4 6 5)", 6))


def test_pattern_apply_frozen_example():
    beta = Pattern.for_rep(DEFAULT_SEED, DEFAULT_PATTERN)
    got = pattern_apply(beta)
    want = (
        parse_cycles("(1 4 3 6)(2 5)", 6),
        parse_cycles("(1 5 3 4)(2 6)", 6),
        parse_cycles("(1 6 3 5)(2 4)", 6),
    )
    assert got == want


def test_t1_subset_pairs_each_anchor_with_four_six_cycles():
    sigma = parse_cycles("(1 2)(3 4 5 6)", 6)
    part = t1_subset(sigma)
    assert sigma in part and len(part) == 5
    assert sorted(label_l61(p) for p in part) == ["C24_0"] + ["C6"] * 4
    with pytest.raises(ValueError):
        t1_subset(parse_cycles("(2 3)(1 4 5 6)", 6))


def test_t1_matches_table():
    assert diff_parts(build_t1(), t1_table()) == ([], [])


def test_zone_reseeding_reproduces_the_zone():
    zone = default_zones()[class_of(DEFAULT_SEED)]
    for rep, pat in zone.rows:
        assert propagate_zone(rep, pat) == zone


def test_propagate_zone_validation():
    with pytest.raises(ValueError, match="canonical"):
        propagate_zone(inverse(DEFAULT_SEED), Pattern.for_rep(DEFAULT_SEED, DEFAULT_PATTERN))
    other = canonical_rep(parse_cycles("(1 2 3)(4 5 6)", 6))
    with pytest.raises(ValueError, match="does not fit"):
        propagate_zone(other, Pattern.for_rep(DEFAULT_SEED, DEFAULT_PATTERN))


def test_linked_zones_cover_c33_and_c24_disjointly(l61_classes):
    zones = default_zones()
    assert sorted(zones) == [2, 3, 4, 5, 6]
    members = [p for z in zones.values() for sub in z.subsets for p in sub]
    assert len(members) == len(set(members)) == 100
    assert set(members) == set(l61_classes["C33"]) | set(l61_classes["C24"])
    for y, zone in zones.items():
        assert zone.y == y
        for rep, _ in zone.rows:
            assert class_of(rep) == y


def test_zones_match_printed_tables():
    zones = default_zones()
    want = zone_table()
    for y in range(2, 7):
        assert diff_parts(zones[y].subsets, want[y]) == ([], []), f"zone {y}"


def test_t3_matches_table_and_t4_matches_table():
    zones = default_zones()
    assert diff_parts(build_t3(DEFAULT_Y0, zones[DEFAULT_Y0]), t3_table()) == ([], [])
    assert diff_parts(build_t4(DEFAULT_Y0, zones[DEFAULT_Y0]), t4_table()) == ([], [])


def test_t3_agrees_with_the_closed_formula(l61_classes):
    """Independent route: each anchor mu = (1 y0)(x a')(b'c') determines its

    part as {mu, (1 b'a'c')(y0 x), (1 c'x b')(y0 a'), (1 x c'a')(y0 b'),
    (1 a'b'x)(y0 c')} with b', c' the word neighbors of a'.  The same parts
    must come out of every row frame and of the constrained matching.
    """
    zones = default_zones()
    zone = zones[DEFAULT_Y0]
    anchors = [
        p for p in l61_classes["C222"] if (1, DEFAULT_Y0) in cycles_of(p)
    ]
    assert len(anchors) == 3

    def f_mu(mu, pat):
        pairs = [set(c) for c in cycles_of(mu)]
        assert {1, DEFAULT_Y0} in pairs
        a = (next(s for s in pairs if pat.x in s) - {pat.x}).pop()
        b, c = pat.prv(a), pat.nxt(a)
        return frozenset(
            {
                mu,
                from_cycle_tuples([(1, b, a, c), (DEFAULT_Y0, pat.x)], 6),
                from_cycle_tuples([(1, c, pat.x, b), (DEFAULT_Y0, a)], 6),
                from_cycle_tuples([(1, pat.x, c, a), (DEFAULT_Y0, b)], 6),
                from_cycle_tuples([(1, a, b, pat.x), (DEFAULT_Y0, c)], 6),
            }
        )

    frames = [{f_mu(mu, pat) for mu in anchors} for _, pat in zone.rows]
    assert all(frame == frames[0] for frame in frames), "formula frame varies"
    formula_parts = [tuple(sorted(part)) for part in frames[0]]
    assert canonical_parts(formula_parts) == canonical_parts(
        build_t3(DEFAULT_Y0, zone)
    )


def test_builders_reject_mismatched_zone():
    zones = default_zones()
    with pytest.raises(ValueError, match="axis"):
        build_t3(3, zones[4])
    with pytest.raises(ValueError, match="axis"):
        build_t4(3, zones[4])
    with pytest.raises(ValueError, match="axis"):
        linked_zones(DEFAULT_SEED, Pattern.for_rep(DEFAULT_SEED, DEFAULT_PATTERN), 7)


def test_default_build_matches_golden_parts(l61_cert):
    assert diff_parts(l61_cert.parts, l61_golden_parts()) == ([], [])
    assert len(l61_cert.parts) == 53
    assert check_partition(l61_cert).ok


def test_part_type_census(l61_cert):
    by_size = {}
    for part in l61_cert.parts:
        labels = tuple(sorted(label_l61(p) for p in part))
        by_size[labels] = by_size.get(labels, 0) + 1
    t1 = ("C24_0", "C6", "C6", "C6", "C6")
    zone_row = ("C24", "C24", "C24", "C33", "C33")
    t3 = ("C222", "C24", "C24", "C24", "C24")
    t4 = ("C222", "C222", "C222", "C33", "C33")
    assert by_size == {t1: 30, zone_row: 16, t3: 3, t4: 4}


def test_non_canonical_seed_is_normalized():
    assert build_l61(seed=inverse(DEFAULT_SEED), pattern=DEFAULT_PATTERN).parts == (
        build_l61(seed=DEFAULT_SEED, pattern=DEFAULT_PATTERN).parts
    )


def test_every_axis_choice_builds_a_complete_partition():
    for y0 in range(2, 7):
        cert = build_l61(y0)
        assert len(cert.parts) == 53
        assert check_partition(cert).ok, f"axis {y0}"


def test_every_seed_and_pattern_of_one_class_builds(l61_classes):
    reps = [r for r in c33_reps(l61_classes) if class_of(r) == 2]
    assert len(reps) == 4
    for rep in reps:
        for pat in patterns_of(rep):
            cert = build_l61(seed=rep, pattern=pat)
            assert check_partition(cert).ok, f"seed {rep} word {pat.word}"


def test_build_l61_rejects_bad_axis():
    with pytest.raises(ValueError, match="axis"):
        build_l61(1)
