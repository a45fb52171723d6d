import pytest

from qlambert.partitions import (
    congruence_scan,
    partition_count,
    partitions_ascending,
    pw_count,
    pw_omega_crosscheck,
    pwbar_count,
)


def test_partitions_ascending_enumeration():
    assert sorted(map(tuple, partitions_ascending(4))) == [
        (1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,),
    ]
    assert list(partitions_ascending(0)) == [[]]


def test_pw_small_values():
    assert pw_count(0) == 0
    assert pw_count(1) == 1  # (1)
    assert pw_count(2) == 2  # (2), (1,1)
    assert pw_count(3) == 3  # (3), (2,1), (1,1,1)


def test_pwbar_small_values():
    assert pwbar_count(0) == 0
    assert pwbar_count(1) == 1  # only the overlined (1)
    # (3 overlined), (2,1) with 2 overlined or not, (1,1,1) smallest overlined
    assert pwbar_count(3) == 4
    assert pwbar_count(3) % 4 == 0


def test_pwbar_at_least_pw():
    for n in range(1, 25):
        assert pwbar_count(n) >= pw_count(n)


def test_pw_at_most_unrestricted_partition_count():
    for n in range(1, 25):
        assert pw_count(n) <= partition_count(n)


def test_partition_count_known_values():
    known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [partition_count(n) for n in range(11)] == known
    assert partition_count(100) == 190569292


def test_pwbar_terms_beyond_single_distinct_size_are_even():
    # weight 2^(d-1) is even whenever d >= 2, so pwbar minus the d = 1
    # contribution must be even
    for n in range(1, 20):
        single = sum(
            1 for p in partitions_ascending(n)
            if len(set(p)) == 1 and all(x < 2 * p[0] for x in p if x % 2)
        )
        assert (pwbar_count(n) - single) % 2 == 0


def test_congruence_scan_small_bounds():
    assert congruence_scan(3, 4, 4, 23).all_pass
    assert congruence_scan(6, 8, 4, 22).all_pass


def test_congruence_scan_negative_control():
    report = congruence_scan(0, 1, 2, 10)
    assert not report.all_pass  # pwbar(1) = 1 is odd


def test_congruence_scan_rejects_bad_args():
    with pytest.raises(ValueError):
        congruence_scan(4, 4, 4, 10)
    with pytest.raises(ValueError):
        congruence_scan(0, 1, 1, 10)


def test_scan_report_json_shape():
    report = congruence_scan(3, 4, 4, 11)
    blob = report.as_json()
    assert blob[0] == {"n": 3, "value": "4", "residue": 0, "pass": True}


def test_pw_omega_crosscheck():
    assert pw_omega_crosscheck(1).ok
    assert pw_omega_crosscheck(3).ok
    assert pw_omega_crosscheck(40).ok
