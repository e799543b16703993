import pytest

import repart


def test_partition_count():
    assert repart.partition_count(0) == 1
    assert repart.partition_count(5) == 7
    assert repart.partition_count(50) == 204226


def test_enumeration_golden():
    assert repart.enumerate_partitions(5) == [
        [5], [4, 1], [3, 2], [3, 1, 1], [2, 2, 1], [2, 1, 1, 1], [1, 1, 1, 1, 1]]
    assert repart.enumerate_partitions(0) == [[]]


def test_statistics_and_conjugate():
    assert repart.distinct_part_count([3, 2, 1]) == 3
    assert repart.consecutive_run_count([4, 1]) == 2
    assert repart.conjugate([2, 1, 1]) == [3, 1]
    assert repart.quot_rem(15, 6) == (2, 3)
    assert repart.exponent_blocks([7, 6, 6]) == [(7, 1), (6, 2)]


def test_validation_errors():
    with pytest.raises(ValueError):
        repart.make_partition([3, 5])
    with pytest.raises(ValueError):
        repart.enumerate_family(8, "cp:r=3,j=7")


def test_family_goldens():
    assert repart.enumerate_family(8, "cp:r=3,j=1") == [
        [7, 1], [4, 4], [4, 1, 1, 1, 1], [1] * 8]
    assert repart.enumerate_family(8, "rp:r=3,j=1") == [
        [8], [6, 1, 1], [4, 2, 2], [3, 2, 2, 1]]
    assert repart.count_family(12, "rp:r=6,s=1+3") == 5
    assert repart.generate_rp_pattern(12, 6, [1, 3]) == repart.enumerate_family(
        12, "rp:r=6,s=1+3")
    assert repart.in_family([9, 1, 1, 1], "cp:r=6,s=1+3")
    assert not repart.in_family([9, 3], "cp:r=6,s=1+3")


def test_map_goldens():
    assert repart.forward_map([15, 9, 7, 3, 1], 6) == [7, 6, 6, 4, 4, 4, 2, 1, 1]
    assert repart.hook_strip_sizes([15, 9, 7, 3, 1], 6) == [7, 6, 6, 4, 4, 4, 2, 1, 1]
    assert repart.inverse_map(
        [12, 10, 10, 9, 9, 9, 7, 6, 6, 3, 3, 3, 2, 1, 1], 6) == [
        21, 15, 15, 13, 9, 9, 7, 1, 1]
    assert repart.build_tableau([15, 9, 7, 3, 1], 6) == [
        [6, 6, 3], [6, 3], [6, 1], [3], [1]]
    assert repart.brute_force_inverse(
        [7, 6, 6, 4, 4, 4, 2, 1, 1], 6, "cp:r=6,s=1+3") == [15, 9, 7, 3, 1]


def test_verification_reports():
    report = repart.verify_theorem3(3, [1, 2], "free", 10)
    assert report.all_match
    assert report.records[-1].n == 10
    assert report.records[-1].left == 10
    assert report.records[-1].right == 10
    assert report.to_csv().startswith("theorem,params,n,m,left,right,match\n")
    assert repart.reports_exit_code([report]) == 0

    sylvester = repart.verify_theorem1(8)
    assert sylvester.all_match
    assert repart.verify_theorem4(2, 10).all_match
    assert repart.verify_bijection(6, [1, 3], "free", 12).all_match


def test_small_campaign():
    reports = repart.run_campaign(r_max=2, n_max=8)
    assert repart.reports_exit_code(reports) == 0
