import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import databases, random_db, random_thresholds, thresholds
from negmine.measures import Thresholds, negative_partitions
from negmine.miner import (
    MinerConfig,
    count_level,
    frequent_singletons,
    generate_temp,
    mine,
    run_level,
)
from negmine.transactions import TransactionDB, scan_count

MODES = ["literal", "freq"]


@pytest.fixture
def fam(table1):
    """Encode a whitespace-separated family like ``"AB CD"`` as a set of itemsets."""
    return lambda text: {table1.encode(w) for w in text.split()}


def test_frequent_singletons(table1, fam):
    assert set(frequent_singletons(table1, Thresholds("0.3"))) == fam("A B C D E F")
    assert len(frequent_singletons(table1, Thresholds(0))) == table1.num_items
    assert set(frequent_singletons(table1, Thresholds("0.55"))) == fam("B C D")


def test_generate_temp_level2(table1, fam):
    freq1 = frequent_singletons(table1, Thresholds("0.3"))
    assert set(generate_temp({1: freq1}, 2)) == fam("AB AC AD AE AF BC BD BE BF CD CE CF DE DF EF")


def test_generate_temp_single_item():
    assert generate_temp({1: [(0,)]}, 2) == []


def _brute_temp(freq_levels, k, universe):
    pool = [set(q) for i in range(1, k) for q in freq_levels.get(i, ())]
    return {
        q for q in combinations(universe, k)
        if any(a | b == set(q) for a in pool for b in pool)
    }


def test_generate_temp_matches_brute_force(table1, thr1):
    result = mine(table1, thr1)
    freq_levels = {1: result.freq1, **{lv.k: lv.freq for lv in result.levels}}
    for k in range(2, 7):
        assert set(generate_temp(freq_levels, k)) == _brute_temp(freq_levels, k, range(table1.num_items))


def test_temp3_listing_discrepancy(table1, thr1, fam):
    """Hand listing has AEF and DEF, which no two frequent itemsets produce."""
    listed = fam("ABC ABD ABE ABF ACD ACE ACF ADE ADF AEF BCD BCE BCF BDE BDF BEF CDE CDF CEF DEF")
    temp3 = set(mine(table1, thr1).level(3).temp)
    assert listed - temp3 == fam("AEF DEF")
    assert temp3 <= listed


def test_temp4_listing_discrepancy(table1, thr1, fam):
    """Hand listing omits ACDF = AD | CF."""
    listed = fam("ABCD ABCF ABDE ABDF BCDE BCDF")
    assert set(mine(table1, thr1).level(4).temp) == listed | fam("ACDF")


def test_count_level(table1, thr1, fam):
    result = mine(table1, thr1)
    counts = result.level(2).counts
    assert counts[table1.encode("BD")] == 6
    assert counts[table1.encode("DE")] == 1
    assert count_level(table1, []) == {}
    assert result.level(4).counts[table1.encode("ABCD")] == 2
    for lv in result.levels:
        for q, c in lv.counts.items():
            assert c == scan_count(table1, q)


@pytest.mark.parametrize("mode", MODES)
def test_run_level_2(table1, thr1, fam, mode):
    freq1 = frequent_singletons(table1, thr1)
    lv = run_level(table1, thr1, MinerConfig(mode), {1: freq1}, freq1, 2)
    assert set(lv.freq) == fam("AB AC AD BC BD BF CD CF")
    assert set(lv.positive_pruned) == fam("BD")
    assert set(lv.nn) == fam("AE AF BE CE DE DF EF")
    assert set(lv.negative_interesting) == fam("BE DE DF")


@pytest.mark.parametrize("mode", MODES)
def test_levels_3_to_5(table1, thr1, fam, mode):
    result = mine(table1, thr1, MinerConfig(mode))
    lv3 = result.level(3)
    assert set(lv3.positive_pruned) == fam("ABD BCD")
    assert set(lv3.negative_interesting) == fam("ABE ADE BDE BDF BEF CDF CEF")
    lv4 = result.level(4)
    assert lv4.freq == []
    assert set(lv4.negative_interesting) == fam("ABCD ABDE BCDF")
    lv5 = result.level(5)
    assert set(lv5.temp) == fam("ABCDF")
    assert lv5.freq == [] and lv5.negative_interesting == []
    assert [lv.k for lv in result.levels] == [2, 3, 4, 5]


def test_abcdf_only_valid_split(table1, thr1):
    from fractions import Fraction
    from negmine.measures import partitions

    q = table1.encode("ABCDF")
    valid = [p for p in partitions(q)
             if table1.support(p.left) >= thr1.minsprt and table1.support(p.right) >= thr1.minsprt]
    assert [(set(table1.decode(p.left)), set(table1.decode(p.right))) for p in valid] == [
        ({"A", "B", "D"}, {"C", "F"})
    ]
    p = valid[0]
    lev = table1.support(q) - table1.support(p.left) * table1.support(p.right)
    assert abs(lev) == Fraction(1, 100)


def test_level_invariants(table1, thr1):
    for mode in MODES:
        for lv in mine(table1, thr1, MinerConfig(mode)).levels:
            assert set(lv.candidates) <= set(lv.temp)
            assert set(lv.freq) <= set(lv.candidates)
            assert set(lv.nn) == set(lv.temp) - set(lv.freq)
            assert set(lv.positive_pruned) <= set(lv.freq)
            assert set(lv.negative_interesting) <= set(lv.nn)
            assert all(len(q) == lv.k for q in lv.temp)


def test_mine_table1(table1, thr1, fam):
    result = mine(table1, thr1)
    assert set(result.ps) == fam("BD ABD BCD")
    listed_ns = fam("BE DF ABE ADE BDE BDF BEF CDF CEF ABCD ABDE")
    assert set(result.ns) == listed_ns | fam("DE BCDF")
    st = result.stats
    assert (st.frequent_count, st.positive_interesting_count,
            st.negative_candidate_count, st.negative_interesting_count) == (10, 3, 31, 13)


def test_output_order_is_canonical(table1, thr1):
    result = mine(table1, thr1)
    for fam_ in (result.ps, result.ns):
        assert fam_ == sorted(fam_, key=lambda q: (len(q), q))


def test_perfect_correlation_yields_nothing():
    db = TransactionDB.from_baskets([["A", "B"]] * 5)
    result = mine(db, Thresholds("0.3", 0, "0.07"))
    assert result.ps == [] and result.ns == []


def test_paper_literal_termination(table1, thr1):
    default = mine(table1, thr1)
    literal = mine(table1, thr1, MinerConfig(termination="paper_literal"))
    # both stop after level 5 here: P_5 and N_5 are empty, and Temp_6 is empty
    assert [lv.k for lv in literal.levels] == [2, 3, 4, 5]
    assert (literal.ps, literal.ns) == (default.ps, default.ns)


def test_paper_literal_stops_early():
    # level 2 has nothing of interest, but a 3-itemset can still be generated
    db = TransactionDB.from_baskets([["a", "b", "c"]] * 4)
    thr = Thresholds("0.5", 0, "0.1")
    assert [lv.k for lv in mine(db, thr).levels] == [2, 3]
    assert [lv.k for lv in mine(db, thr, MinerConfig(termination="paper_literal")).levels] == [2]


def test_bad_config():
    with pytest.raises(ValueError):
        MinerConfig("apriori")
    with pytest.raises(ValueError):
        MinerConfig(termination="never")


def test_empty_db_rejected():
    with pytest.raises(ValueError):
        mine(TransactionDB((), ()), Thresholds("0.3"))


@given(databases(), thresholds)
@settings(max_examples=150, deadline=None)
def test_downward_closure_and_membership(db, thr):
    for mode in MODES:
        result = mine(db, thr, MinerConfig(mode))
        freq = {1: set(result.freq1), **{lv.k: set(lv.freq) for lv in result.levels}}
        all_freq = set().union(*freq.values())
        for k, fam_ in freq.items():
            for q in fam_:
                for sub in combinations(q, k - 1):
                    if sub:
                        assert db.support(sub) >= thr.minsprt
                        if mode == "freq":
                            assert sub in freq[k - 1]
        assert set(result.ps) <= all_freq
        assert not set(result.ns) & all_freq
        assert not set(result.ps) & set(result.ns)
        for q in result.ns:
            assert negative_partitions(db, q, thr)
        assert all(len(q) >= 2 for q in result.ps + result.ns)


def test_mine_is_deterministic():
    rng = random.Random(3)
    for _ in range(20):
        db, thr = random_db(rng), random_thresholds(rng)
        a, b = mine(db, thr), mine(db, thr)
        assert (a.ps, a.ns, a.levels) == (b.ps, b.ns, b.levels)


def test_modes_agree_on_table1(table1, thr1):
    literal = mine(table1, thr1, MinerConfig("literal"))
    freq = mine(table1, thr1, MinerConfig("freq"))
    assert (literal.ps, literal.ns) == (freq.ps, freq.ns)
    # holds here because every frequent 3-itemset contains BD
    bd = table1.encode("BD")
    assert all(set(bd) <= set(q) for lv in freq.levels if lv.k >= 3 for q in lv.freq)
