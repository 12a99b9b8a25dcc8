import threading

import pytest

from partitionkit import counting
from partitionkit.counting import CountTable, partition_number, q_count, s_sum, statistic, v_count
from partitionkit.partitions import count_partitions_brute, q_count_brute, s_sum_brute, v_count_brute


def test_examples():
    assert partition_number(5) == 7
    assert partition_number(-3) == 0
    assert partition_number(19) == 490
    assert q_count(5, 9) == 5
    assert q_count(5, 4) == 0
    assert q_count(1, 5) == 12
    assert v_count(2, 6) == 8
    assert v_count(1, 5) == 12
    assert v_count(7, 6) == 0
    assert s_sum(5) == 12
    assert s_sum(0) == 0
    assert s_sum(6) == 19


def test_p19_against_enumeration():
    assert count_partitions_brute(19) == 490


def test_partition_number_matches_enumeration():
    for n in range(41):
        assert partition_number(n) == count_partitions_brute(n)


def test_exceeds_64_bits_exactly():
    # values past the fixed-width range must stay exact
    big = partition_number(500)
    assert big > 2**64
    assert big == 2300165032574323995027


def test_lemma_recurrence():
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert q_count(k, n) == q_count(k, n - k) + partition_number(n - k)


def test_against_brute_grid():
    for n in range(1, 41):
        assert s_sum(n) == s_sum_brute(n)
        for k in range(1, n + 1):
            assert q_count(k, n) == q_count_brute(k, n)
            assert v_count(k, n) == v_count_brute(k, n)


def test_monotone():
    values = [partition_number(n) for n in range(1, 300)]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_domain_errors():
    with pytest.raises(ValueError):
        q_count(0, 5)
    with pytest.raises(ValueError):
        v_count(0, 5)
    with pytest.raises(ValueError):
        s_sum(-1)


def test_statistic_dispatch():
    assert statistic("P", 5) == 7
    assert statistic("q", 9, k=5) == 5
    assert statistic("S", 6) == 19
    with pytest.raises(ValueError):
        statistic("Q", 5)
    with pytest.raises(ValueError):
        statistic("P", 5, k=1)
    with pytest.raises(ValueError):
        statistic("X", 5)


def test_table_growth_and_concurrent_extension():
    table = CountTable()
    assert table.high_water == 0
    table.ensure(10)
    assert table.high_water >= 10
    results = {}

    def worker(i):
        results[i] = [table[n] for n in range(0, 600, 7)]

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [counting.partition_number(n) for n in range(0, 600, 7)]
    assert all(r == expected for r in results.values())
