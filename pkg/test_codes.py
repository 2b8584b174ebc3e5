#!/usr/bin/env python3
"""
Tests for optimal code sizes, closed forms, construction, verification and code files
"""

import os
import tempfile

import pytest

from channels import DeletionChannel, MultisetChannel, ShiftChannel, SubsetChannel, SubspaceChannel, ZChannel, dual
from codes import (
    ALL,
    closed_form_size,
    code_from,
    construct_code,
    optimal_code_size,
    resolve_radius,
    verify_code,
    zchannel_middle_residue_size,
)
from counting import binomial, partitions_count, q_binomial
from posets import RankRange
from storage.code_files import CodeFileError, parse_code_file, read_code_file, render_code_file, write_code_file
from utils.errors import DomainError

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def test_boolean_sizes():
    ch = SubsetChannel(4)
    report = optimal_code_size(ch, t=1)
    assert report.generic_total == 8
    assert report.closed_form_total == 8
    assert report.residue == 0
    assert report.ranks == (0, 2, 4)
    for t in (3, 4, ALL):
        assert optimal_code_size(ch, t=t).generic_total == binomial(4, 2)


def test_subspace_sperner_value():
    ch = SubspaceChannel(2, 3)
    assert optimal_code_size(ch, t=3).generic_total == 7
    assert optimal_code_size(ch, t=ALL).closed_form_total == 7


def test_closed_form_examples():
    assert closed_form_size("zchannel", {"a": 3, "n": 2}, 1) == 5
    assert closed_form_size("multiset", {"n": 2, "lo": 0, "hi": 3}, 1) == 6
    assert closed_form_size("subset", {"n": 4}, 3) == 6
    assert closed_form_size("deletion", {"a": 2, "lo": 0, "hi": 3}, 1) == 10
    assert closed_form_size("shift", {"n": 4, "w": 2}, 1) == 4
    assert closed_form_size("subspace", {"p": 2, "n": 4}, 0) == 67


def test_zchannel_closed_form_uses_the_best_residue():
    # levels 1,3,6,7,6,3,1: the even ranks hold 14 words, the odd ranks 13
    assert closed_form_size("zchannel", {"a": 3, "n": 3}, 1) == 14
    assert optimal_code_size(ZChannel(3, 3), t=1).generic_total == 14


def test_zchannel_middle_residue_is_reported():
    report = optimal_code_size(ZChannel(3, 3), t=1)
    assert report.middle_residue_total == zchannel_middle_residue_size(3, 3, 1) == 13
    assert report.to_dict()["middle_residue_total"] == "13"

    report = optimal_code_size(ZChannel(4, 3), t=2)
    assert (report.middle_residue_total, report.generic_total) == (21, 22)

    assert optimal_code_size(ZChannel(3, 2), t=1).middle_residue_total == 5
    assert optimal_code_size(SubsetChannel(4), t=1).middle_residue_total is None


def test_closed_form_rejects_bad_parameters():
    with pytest.raises(DomainError):
        closed_form_size("subspace", {"p": 4, "n": 2}, 0)
    with pytest.raises(DomainError):
        closed_form_size("subset", {"n": 4, "lo": 1, "hi": 4}, 0)
    with pytest.raises(DomainError):
        closed_form_size("deletion", {"a": 2}, 0)
    with pytest.raises(DomainError):
        closed_form_size("torus", {"n": 2}, 0)


def test_formula_matches_rank_selection_on_full_ranges():
    cases = [SubsetChannel(n) for n in range(1, 9)]
    cases += [ZChannel(a, n) for a in (2, 3, 4) for n in (1, 2, 3, 4)]
    cases += [SubspaceChannel(p, n) for p in (2, 3, 5) for n in (1, 2, 3, 4, 5)]
    for ch in cases:
        for t in range(ch.rank_range.span + 1):
            report = optimal_code_size(ch, t=t)
            assert report.closed_form_total == report.generic_total, (ch.describe(), t)


def test_formula_matches_rank_selection_on_restricted_ranges():
    for hi in range(5):
        for lo in range(hi + 1):
            for ch in (MultisetChannel(3, RankRange(lo, hi)), DeletionChannel(3, RankRange(lo, hi))):
                for t in range(hi - lo + 2):
                    report = optimal_code_size(ch, t=t)
                    assert report.closed_form_total == report.generic_total, (ch.describe(), t)


def test_restricted_full_range_family_has_no_closed_form():
    report = optimal_code_size(SubsetChannel(5, RankRange(1, 3)), t=1)
    assert report.closed_form_total is None
    assert report.generic_total == 15
    assert report.ranks == (1, 3)


def mixed_channels():
    return [
        SubsetChannel(6),
        MultisetChannel(3, RankRange(0, 6)),
        MultisetChannel(2, RankRange(2, 7)),
        ZChannel(3, 3),
        ZChannel(4, 3),
        dual(ZChannel(3, 4)),
        SubspaceChannel(2, 5),
        SubspaceChannel(3, 4),
        DeletionChannel(2, RankRange(0, 6)),
        DeletionChannel(3, RankRange(1, 4)),
        ShiftChannel(8, 3),
        ShiftChannel(7, 2),
    ]


def test_optimal_size_never_grows_with_t():
    for ch in mixed_channels():
        span = ch.rank_range.span
        sizes = [optimal_code_size(ch, t=t).generic_total for t in range(span + 1)]
        assert all(a >= b for a, b in zip(sizes, sizes[1:])), (ch.describe(), sizes)
        assert optimal_code_size(ch, t=ALL).generic_total == sizes[-1]


def test_rank_selection_dominates_best_residue():
    for ch in mixed_channels():
        for t in range(ch.rank_range.span + 1):
            report = optimal_code_size(ch, t=t)
            assert report.generic_total >= report.residue_total
            if report.rank_unimodal:
                assert report.generic_total == report.residue_total, (ch.describe(), t)


def test_shift_bound_never_exceeds_rank_selection():
    for n in range(1, 9):
        for w in range(n + 1):
            ch = ShiftChannel(n, w)
            for t in range(ch.rank_range.span + 1):
                report = optimal_code_size(ch, t=t)
                assert report.bound_only
                assert report.closed_form_total <= report.generic_total


def test_resolve_radius():
    r = RankRange(2, 6)
    assert resolve_radius(ALL, r) == 4
    assert resolve_radius(1, r) == 1
    with pytest.raises(DomainError):
        resolve_radius(-1, r)
    with pytest.raises(DomainError):
        resolve_radius("two", r)


def test_size_report_json_shape():
    data = optimal_code_size(SubsetChannel(4), t=1).to_dict()
    assert list(data)[:7] == ["family", "params", "t", "size", "residue", "ranks", "bound_only"]
    assert data["size"] == "8"
    assert data["params"] == {"n": 4, "lo": 0, "hi": 4}


def test_dual_channels_have_equal_sizes_and_codes():
    channels = [
        SubsetChannel(5),
        MultisetChannel(2, RankRange(0, 4)),
        ZChannel(3, 3),
        SubspaceChannel(2, 3),
        DeletionChannel(2, RankRange(1, 4)),
        ShiftChannel(6, 2),
    ]
    for ch in channels:
        for t in range(ch.rank_range.span + 1):
            forward = optimal_code_size(ch, t=t)
            backward = optimal_code_size(dual(ch), t=t)
            assert forward.generic_total == backward.generic_total
            assert forward.closed_form_total == backward.closed_form_total
            assert len(construct_code(ch, t=t)) == len(construct_code(dual(ch), t=t))
        assert optimal_code_size(dual(ch), t=1).params["dual"] == 1


def test_construct_code_examples():
    ch = SubsetChannel(4)
    code = construct_code(ch, t=1)
    assert sorted(ch.render(x) for x in code.codewords) == [
        "0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111",
    ]

    shift = ShiftChannel(4, 2)
    shift_code = construct_code(shift, t=1)
    assert len(shift_code) == 4
    assert sorted({shift.rank(x) for x in shift_code.codewords}) == [0, 2, 4]

    widest = construct_code(SubsetChannel(5), t=5)
    assert len(widest) == 10
    assert len({ch.rank(x) for x in widest.codewords}) == 1


def test_constructed_codes_verify():
    channels = [
        SubsetChannel(5),
        MultisetChannel(3, RankRange(0, 4)),
        ZChannel(3, 3),
        SubspaceChannel(2, 4),
        SubspaceChannel(3, 3),
        DeletionChannel(2, RankRange(0, 4)),
        DeletionChannel(3, RankRange(1, 3)),
        ShiftChannel(6, 3),
    ]
    for ch in channels:
        for t in list(range(ch.rank_range.span + 1)) + [ALL]:
            code = construct_code(ch, t=t)
            report = verify_code(code)
            assert report.passed, (ch.describe(), t, report.violations[:3])
            assert report.checked == len(code) == optimal_code_size(ch, t=t).generic_total


def test_verify_reports_violations():
    ch = SubsetChannel(3)
    code = code_from(ch, [ch.parse("100"), ch.parse("110")], 1)
    report = verify_code(code)
    assert not report.passed
    assert [(ch.render(x), ch.render(y)) for x, y in report.violations] == [("110", "100")]


def test_level_set_detects_all_errors():
    ch = SubspaceChannel(3, 3)
    code = code_from(ch, ch.enumerate_level(1), ALL)
    assert verify_code(code).passed
    assert not verify_code(code_from(ch, ch.elements(RankRange(1, 2)), ALL)).passed


def test_verify_rejects_codewords_outside_the_range():
    ch = SubsetChannel(4, RankRange(2, 4))
    code = code_from(ch, [ch.parse("1000"), ch.parse("1100")], 1)
    with pytest.raises(DomainError):
        verify_code(code)


def test_code_file_matches_golden_files():
    cases = [
        ("subset_n4_t1.code", SubsetChannel(4), 1),
        ("subset_n3_t2.code", SubsetChannel(3), 2),
        ("deletion_a2_0_3_t1.code", DeletionChannel(2, RankRange(0, 3)), 1),
        ("multiset_n2_0_0_t0.code", MultisetChannel(2, RankRange(0, 0)), 0),
    ]
    for name, ch, t in cases:
        with open(os.path.join(FIXTURES, name), "r", encoding="utf-8") as f:
            golden = f.read()
        assert render_code_file(construct_code(ch, t=t)) == golden, name


def test_code_file_round_trip():
    ch = dual(ZChannel(3, 2))
    code = construct_code(ch, t=1)
    with tempfile.TemporaryDirectory() as tmp:
        path = write_code_file(code, os.path.join(tmp, "codes", "z.code"))
        loaded = read_code_file(path)
    assert loaded.channel.is_dual
    assert loaded.channel.params() == ch.params()
    assert loaded.t == 1
    assert set(loaded.codewords) == set(code.codewords)
    assert verify_code(loaded).passed


def test_code_file_errors_carry_line_numbers():
    text = "#channel=subset\n#params=n=3,lo=0,hi=3\n#t=1\n100\n1x0\n"
    with pytest.raises(CodeFileError) as info:
        parse_code_file(text)
    assert info.value.line_number == 5

    with pytest.raises(CodeFileError) as info:
        parse_code_file("#channel=subset\n#params=n=3\n#t=one\n")
    assert info.value.line_number == 3

    text = "#channel=multiset\n#params=n=2,lo=0,hi=4\n#t=1\n1,\u00b2\n"
    with pytest.raises(CodeFileError) as info:
        parse_code_file(text)
    assert info.value.line_number == 4

    with pytest.raises(CodeFileError):
        parse_code_file("100\n#t=1\n", channel=SubsetChannel(3))

    with pytest.raises(CodeFileError):
        parse_code_file("#channel=deletion\n#t=1\n100\n", channel=SubsetChannel(3))


def test_code_file_explicit_channel_and_t_override_header():
    code = parse_code_file("100\n010\n", channel=SubsetChannel(3), t=ALL)
    assert code.t == ALL
    assert verify_code(code).passed


def test_large_counts_stay_exact():
    report = optimal_code_size(SubspaceChannel(5, 5), t=0)
    assert report.generic_total == sum(q_binomial(5, l, 5) for l in range(6))
    assert report.to_dict()["size"] == str(report.generic_total)
    assert partitions_count(4, 4, 8) == 8
