from permclass.constructions import alternating, direct_product, pgammal_2_9, symmetric
from permclass.group import trivial_group
from permclass.instance_checks import (
    commuting_pair_report,
    coprime_action_report,
    index_lemma_report,
    normal_divisibility_report,
    subgroup_conjugation_orbit_size,
    wreath_involution_report,
)
from permclass.permutation import parse_cycles


def test_subgroup_conjugation_orbit(s6, a6):
    # the transposition class of S6 splits under A6-conjugation into
    # orbits whose size divides the S6 class size
    x = parse_cycles("(1,2)", 6)
    sub = subgroup_conjugation_orbit_size(a6, x)
    full = s6.conjugacy_class_of(x).size.value
    assert full % sub == 0


def test_normal_divisibility_small(s6, a6):
    report = normal_divisibility_report([("A6 normal in S6", s6, a6)])
    assert report.passed
    assert len(report.assertions) == 2


def test_normal_divisibility_socle_pair():
    full, socle = pgammal_2_9()
    report = normal_divisibility_report(
        [("the socle normal in PGammaL(2,9)", full, socle)]
    )
    assert report.passed


def test_commuting_pairs_sampled(a6xa6, s6):
    report = commuting_pair_report(
        a6xa6,
        "A6 x A6",
        pair_count=500,
        seed=1729,
        exact_subsample=3,
        exhaustive_group=s6,
    )
    assert report.passed
    by_desc = {a.id: a for a in report.assertions}
    exhaustive = report.assertions[-1]
    pairs_checked = {i.name: i.value for i in exhaustive.inputs}["pairs"]
    assert pairs_checked > 0


def test_commuting_pairs_deterministic(a6xa6):
    one = commuting_pair_report(a6xa6, "A6 x A6", pair_count=200, seed=5)
    two = commuting_pair_report(a6xa6, "A6 x A6", pair_count=200, seed=5)
    assert one.to_json() == two.to_json()


def test_wreath_report():
    report = wreath_involution_report()
    assert report.passed
    sizes = [
        {i.name: i.value for i in a.inputs}["|a^W|"] for a in report.assertions
    ]
    assert sizes == [1, 6, 60, 360, 1440]


def test_index_lemma_on_a6(a6):
    report = index_lemma_report([("A6", a6)])
    assert report.passed
    rows = {
        ({i.name: i.value for i in a.inputs}["p"]): {
            i.name: i.value for i in a.inputs
        }["applicable classes"]
        for a in report.assertions
    }
    # only the class of size 90 has 2-part strictly between 1 and |G|_2
    assert rows == {2: 1, 3: 0, 5: 0}


def test_index_lemma_on_s6(s6):
    report = index_lemma_report([("S6", s6)])
    assert report.passed


def test_coprime_action_report_small():
    report = coprime_action_report(max_dim=2)
    assert report.passed
    scanned = [
        {i.name: i.value for i in a.inputs}.get("matrices scanned")
        for a in report.assertions
    ]
    assert scanned == [1, 31, 0, 20, 20]
