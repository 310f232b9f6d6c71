import itertools

import numpy as np
import pytest

from selfdual import tables
from selfdual.errors import GuardExceeded, PreconditionError, SearchFailure
from selfdual.stgc import (
    DiffSeq,
    SdsOrdering,
    Stgc,
    TrackSpace,
    build_diff_ordering,
    build_diff_stgc,
    build_recursive_stgc,
    check_ordering,
    components,
    construct_thm3,
    construct_thm4,
    construct_thm7,
    covers_all_words,
    diff_to_sds,
    difference_classes,
    find_cyclic_order,
    find_sds_ordering,
    is_max_period,
    parse_stgc,
    read_stgc,
    sds_to_diff,
    search_thm3_max_period,
    verify_stgc,
    window_F,
    write_stgc,
)
from selfdual.zmseq import CyclicSeq, Word, canonical, is_self_dual


def cs(text, m=2):
    return CyclicSeq.from_str(text, m)


def ternary_code():
    cols = tables.columns(tables.TERNARY_ARRAY)
    return Stgc.from_words([c[:3] for c in cols[3:]], 3)


def rows_of(code):
    return ["".join(map(str, r)) for r in code.rows.tolist()]


# -- verifier -----------------------------------------------------------------


def test_printed_ternary_code_verifies():
    rep = verify_stgc(ternary_code())
    assert rep.passed and rep.period == 27


def test_printed_quaternary_code_verifies():
    o = SdsOrdering(4, [CyclicSeq(4, c) for c in tables.columns(tables.QUATERNARY_TRACKS)], 15)
    rep = verify_stgc(construct_thm7(o))
    assert rep.passed and rep.period == 256


def test_verifier_failures():
    rep = verify_stgc(Stgc.from_words(["00", "01", "00", "01"], 2))
    assert not rep.distinct and rep.duplicate == (0, 2)
    rep = verify_stgc(Stgc.from_words(["00", "11", "01", "10"], 2))
    assert not rep.gray and rep.gray_violation == 0
    # Gray code but not single-track
    rep = verify_stgc(Stgc.from_words(["000", "001", "011", "010", "110", "111", "101", "100"], 2))
    assert rep.gray and not rep.single_track and rep.column_shifts[0] == 0
    assert "FAIL" in rep.to_text()


def test_binary_divisibility_is_enforced():
    rep = verify_stgc(Stgc.from_words(["0", "1"], 2))
    assert rep.passed and rep.divisibility
    rep = verify_stgc(Stgc.from_words(["0", "1", "2"], 3))
    assert rep.passed and rep.divisibility is None and rep.period_mod_mn == 0


def test_column_shifts_are_exact():
    code = build_diff_stgc(4)
    rep = verify_stgc(code)
    for c, k in enumerate(rep.column_shifts):
        assert np.array_equal(code.rows[:, c], np.roll(code.rows[:, 0], -k))


def test_report_text_mentions_every_check():
    text = verify_stgc(ternary_code()).to_text()
    for key in ("distinct", "gray", "single_track", "divisibility", "coverage", "result: PASS"):
        assert key in text


# -- file format ----------------------------------------------------------------


def test_file_roundtrip(tmp_path):
    code = build_diff_stgc(3)
    path = tmp_path / "c.stgc"
    write_stgc(code, path)
    back = read_stgc(path)
    assert back.modulus == 3 and np.array_equal(back.rows, code.rows)
    assert path.read_text().splitlines()[0] == "STGC m=3 n=3 P=27"
    assert parse_stgc(code.to_text()).period == 27


@pytest.mark.parametrize(
    "text",
    ["", "STGC m=2 n=2\n00\n", "STGC m=2 n=2 P=2\n00\n", "STGC m=2 n=2 P=1\n02\n", "STGC m=2 n=2 P=1\n0\n", "CODE m=2 n=1 P=1\n0\n"],
)
def test_parse_errors(text):
    with pytest.raises(PreconditionError):
        parse_stgc(text)


# -- windows and constructions ----------------------------------------------------


def test_window_F():
    assert window_F(cs("001011"), 0, 3) == Word.from_str("001")
    assert window_F(cs("001011"), 4, 3) == Word.from_str("110")
    col = CyclicSeq(3, tables.columns(tables.TERNARY_ARRAY)[1])
    assert window_F(col, 0, 3) == Word.from_str("010", 3)
    with pytest.raises(PreconditionError):
        window_F(cs("01"), 0, 3)


def test_thm3_small():
    code = construct_thm3([cs("001"), cs("011")], 1)
    assert code.period == 6 and verify_stgc(code).passed


def test_thm3_single_sequence_is_rejected():
    with pytest.raises(PreconditionError):
        construct_thm3([cs("001")], 1)


def test_thm3_reports_offending_index():
    with pytest.raises(PreconditionError, match="sequences 0 and 1"):
        construct_thm3([cs("00001"), cs("00111")], 1)
    with pytest.raises(PreconditionError, match="ell"):
        construct_thm3([cs("001"), cs("011")], 3)


def test_thm4_examples():
    code = construct_thm4(SdsOrdering(2, [cs("0011")], 1))
    assert rows_of(code) == ["00", "01", "11", "10"]
    code = construct_thm4(SdsOrdering(2, [cs("000111")], 1))
    assert rows_of(code) == ["000", "001", "011", "111", "110", "100"]
    o = find_sds_ordering(2, 5)
    assert len(o.seqs) == 3
    assert construct_thm4(o).period == 30
    with pytest.raises(PreconditionError):
        construct_thm4(SdsOrdering(3, [cs("012", 3)], 1))


def test_thm7_binary_equals_thm4():
    o = find_sds_ordering(2, 5, seed=1)
    assert np.array_equal(construct_thm7(o).rows, construct_thm4(o).rows)


def test_thm7_ternary_reproduces_printed_code():
    o = SdsOrdering(3, [CyclicSeq(3, c) for c in tables.columns(tables.TERNARY_ARRAY)[:3]], 4)
    assert np.array_equal(construct_thm7(o).rows, ternary_code().rows)


def test_ordering_preconditions():
    good = build_diff_ordering(3)
    check_ordering(good)
    dup = SdsOrdering(3, [good.seqs[0], good.seqs[0]], good.ell)
    with pytest.raises(PreconditionError, match="repeats"):
        check_ordering(dup)
    with pytest.raises(PreconditionError, match="not a unit"):
        check_ordering(SdsOrdering(3, good.seqs, 3))
    with pytest.raises(PreconditionError, match="period"):
        check_ordering(SdsOrdering(2, [cs("0101")], 1))
    with pytest.raises(PreconditionError, match="self-dual"):
        check_ordering(SdsOrdering(2, [cs("0001")], 1))


# -- difference construction ------------------------------------------------------


def test_diff_to_sds_examples():
    assert str(diff_to_sds(DiffSeq(4, (0, 1, 0, 0)))) == "0011112222333300"
    assert canonical(diff_to_sds(DiffSeq(2, (1, 0)))) == cs("0011")
    with pytest.raises(PreconditionError):
        DiffSeq(4, (0, 0, 0, 0))


def test_diff_roundtrip_and_classes():
    for m in (2, 3, 4, 5):
        classes = difference_classes(m)
        assert len(classes) == m ** (m - 2)
        for d in classes:
            s = diff_to_sds(d)
            assert is_self_dual(s) and sds_to_diff(s) == d


@pytest.mark.parametrize("m", [3, 4, 5])
def test_build_diff(m):
    o = build_diff_ordering(m)
    assert len(o.seqs) == m ** (m - 2)
    code = construct_thm7(o)
    assert code.period == m**m and verify_stgc(code).passed and covers_all_words(code)


def test_build_diff_ternary_matches_printed_up_to_rotation():
    built, printed = build_diff_stgc(3), ternary_code()
    assert any(np.array_equal(built.rotate(k).rows, printed.rows) for k in range(27))


def test_build_diff_quaternary_first_row():
    o = build_diff_ordering(4)
    assert "".join(str(sds_to_diff(s).digits[0]) for s in o.seqs) == "0012232331111100"
    assert o.ell == 15


@pytest.mark.parametrize("m", [3, 4])
def test_unseeded_search_also_works(m):
    code = build_diff_stgc(m, seeded=False, seed=2)
    assert code.period == m**m and covers_all_words(code)


def test_build_diff_guard():
    with pytest.raises(PreconditionError):
        build_diff_stgc(6)


# -- recursive and maximum period -------------------------------------------------


@pytest.mark.parametrize("p,t", [(3, 1), (5, 1)])
def test_recursive_first_level(p, t):
    code = build_recursive_stgc(p, t)
    assert code.period == p ** (p**t) and verify_stgc(code).passed and covers_all_words(code)


def test_components_of_ternary_level_one():
    comps = components(3, build_diff_ordering(3))
    assert len(comps) == 9 * 27
    assert all(len(c) == 3 for c in comps)
    space = TrackSpace(3, 9, 3)
    assert len({space.key(v) for c in comps for v in c}) == 729


def test_recursive_guards():
    with pytest.raises(GuardExceeded):
        build_recursive_stgc(5, 2)
    with pytest.raises(PreconditionError):
        build_recursive_stgc(7, 1)
    with pytest.raises(PreconditionError):
        build_recursive_stgc(3, 0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_search_thm3(p):
    code = search_thm3_max_period(p)
    assert code is not None and code.period == 2**p - 2 and verify_stgc(code).passed
    assert is_max_period(2, p, code.period)


def test_search_thm3_guard():
    with pytest.raises(PreconditionError):
        search_thm3_max_period(11)


def test_is_max_period():
    assert is_max_period(2, 5, 30)
    assert is_max_period(3, 3, 27)
    assert not is_max_period(2, 4, 8)
    assert is_max_period(2, 3, 6)
    assert not is_max_period(3, 3, 26)
    assert is_max_period(2, 2, 4)
    # 16 meets the inequality for n=4, but no such code exists for lengths 2^t, t > 1
    assert not is_max_period(2, 4, 16)
    assert not is_max_period(2, 8, 256)


def test_search_failure_is_reported():
    space = TrackSpace(2, 4, 1)
    with pytest.raises(SearchFailure):
        find_cyclic_order(space, [[(0, 0, 0, 1)], [(0, 1, 1, 1)]], max_steps=200)


def test_segments_sharing_a_class_are_rejected():
    space = TrackSpace(2, 3, 1)
    with pytest.raises(PreconditionError):
        find_cyclic_order(space, [[(0, 0, 1)], [(0, 1, 0)]])


def test_search_is_deterministic():
    a = build_diff_stgc(5, seed=7)
    b = build_diff_stgc(5, seed=7)
    assert np.array_equal(a.rows, b.rows)


def test_ternary_code_lists_every_word():
    code = build_diff_stgc(3)
    assert sorted(map(tuple, code.rows.tolist())) == list(itertools.product(range(3), repeat=3))
