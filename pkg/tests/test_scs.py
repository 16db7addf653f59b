import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from floodit.scs import (SCSBudgetExceeded, SCSInstance, SCSParseError, fresh_symbol, is_ab_form,
                         is_supersequence, normalize_to_ab_form, parse_scs, serialize_scs,
                         solve_scs_exact, transform_drop_length1, transform_split_aa)


@st.composite
def instances(draw, max_k=3, max_len=3, max_r=3, min_len=0):
    r = draw(st.integers(1, max_r))
    k = draw(st.integers(1, max_k))
    words = draw(st.lists(st.lists(st.integers(1, r), min_size=min_len, max_size=max_len),
                          min_size=k, max_size=k))
    return SCSInstance(tuple(tuple(w) for w in words), r)


def test_is_supersequence():
    assert is_supersequence((1, 2), ())
    assert is_supersequence((2, 1, 3, 2), (3, 2))
    assert is_supersequence((2, 1, 3, 2), (1, 3))
    assert not is_supersequence((2, 1, 3, 2), (3, 1))


def test_examples():
    assert solve_scs_exact(SCSInstance.of("1")) == (1, (1,))
    length, witness = solve_scs_exact(SCSInstance.of("23", "12", "32", "21"))
    assert length == 4 and witness == (2, 1, 3, 2)
    assert solve_scs_exact(SCSInstance.of("12", "21"))[0] == 3


@given(instances())
def test_dp_matches_brute_force(inst):
    length, witness = solve_scs_exact(inst)
    assert length == oracles.brute_scs(inst.strings, inst.alphabet)
    assert len(witness) == length
    assert all(is_supersequence(witness, s) for s in inst.strings)
    assert inst.max_length <= length <= sum(len(s) for s in inst.strings)


def test_witness_is_lexicographically_smallest():
    inst = SCSInstance.of("12", "21")
    length, witness = solve_scs_exact(inst)
    best = min(w for w in itertools.product((1, 2), repeat=length)
               if all(is_supersequence(w, s) for s in inst.strings))
    assert witness == best == (1, 2, 1)


def test_budget():
    inst = SCSInstance.of("1212", "2121", "1122")
    with pytest.raises(SCSBudgetExceeded):
        solve_scs_exact(inst, budget=10)


def test_alphabet_checked():
    with pytest.raises(ValueError):
        SCSInstance(((1, 3),), 2)


def test_file_roundtrip():
    inst = SCSInstance(((2, 3), (1, 2)), 3, target=3)
    assert serialize_scs(inst) == "2 3 3\n2 3\n1 2\n"
    assert parse_scs(serialize_scs(inst)) == inst
    for bad in ("", "x 2\n", "2 2\n1 2\n", "1 2\n1 3\n"):
        with pytest.raises(SCSParseError):
            parse_scs(bad)


def test_drop_length1_examples():
    assert transform_drop_length1(SCSInstance.of("12", "1")) == (SCSInstance.of("12"), 0)
    out, delta = transform_drop_length1(SCSInstance.of("12", "3"))
    assert out.strings == ((1, 2),) and delta == 1
    with pytest.raises(ValueError):
        transform_drop_length1(SCSInstance.of("12"))


@given(instances())
def test_drop_length1_bookkeeping(inst):
    if not any(len(s) == 1 for s in inst.strings):
        return
    out, delta = transform_drop_length1(inst)
    assert out.k == inst.k - 1
    assert solve_scs_exact(inst)[0] == solve_scs_exact(out)[0] + delta


def test_split_examples():
    out, delta = transform_split_aa(SCSInstance.of("11", alphabet=2))
    assert out.strings == ((1, 3), (3, 1)) and delta == 1
    assert solve_scs_exact(out)[0] == 3
    out, _ = transform_split_aa(SCSInstance.of("11", "22"))
    assert out.alphabet == 3
    with pytest.raises(ValueError):
        transform_split_aa(SCSInstance.of("12"))
    with pytest.raises(ValueError):
        transform_split_aa(SCSInstance.of("11", "1"))


def test_fresh_symbol():
    assert fresh_symbol(SCSInstance.of("11", alphabet=2)) == 3
    assert fresh_symbol(SCSInstance.of("11", alphabet=1)) == 2


@given(instances(min_len=2, max_len=2))
def test_split_bookkeeping(inst):
    if not any(s[0] == s[1] for s in inst.strings):
        return
    out, delta = transform_split_aa(inst)
    assert delta == 1
    assert solve_scs_exact(out)[0] == solve_scs_exact(inst)[0] + 1


@given(instances(max_len=2, max_k=4))
def test_normalize_bookkeeping(inst):
    out, delta = normalize_to_ab_form(inst)
    assert is_ab_form(out)
    assert solve_scs_exact(inst)[0] == solve_scs_exact(out)[0] + delta


def test_normalize_examples():
    out, delta = normalize_to_ab_form(SCSInstance.of("1", "11", "12"))
    assert is_ab_form(out)
    assert solve_scs_exact(SCSInstance.of("1", "11", "12"))[0] == solve_scs_exact(out)[0] + delta
    ab = SCSInstance.of("12", "21")
    assert normalize_to_ab_form(ab) == (ab, 0)
    out, delta = normalize_to_ab_form(SCSInstance.of("11", alphabet=2))
    assert out.strings == ((1, 3), (3, 1)) and delta == -1
    with pytest.raises(ValueError):
        normalize_to_ab_form(SCSInstance.of("123"))
