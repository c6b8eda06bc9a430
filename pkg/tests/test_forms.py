"""Linear-form parsing, formatting, and arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexmagic.forms import (
    FormSyntaxError,
    LinearForm,
    MissingParameterError,
    format_form,
    parse_form,
)

coef = st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12)
forms = st.builds(
    LinearForm,
    coef,
    st.dictionaries(st.sampled_from("abcdefg"), coef, max_size=5),
)


def test_parse_specific():
    f = parse_form("2a+b-1/2c+3")
    assert f.coefficient("a") == 2
    assert f.coefficient("b") == 1
    assert f.coefficient("c") == Fraction(-1, 2)
    assert f.constant == 3


def test_zero_form():
    assert format_form(LinearForm(0)) == "0"
    assert parse_form("0") == LinearForm(0)
    assert not LinearForm(0)


def test_zero_coefficients_dropped():
    f = LinearForm(1, {"a": 0, "b": 2})
    assert f.parameters == ("b",)
    assert f == LinearForm(1, {"b": 2})


def test_multi_letter_parameters():
    f = parse_form("3k12-m")
    assert f.coefficient("k12") == 3
    assert f.coefficient("m") == -1
    assert parse_form(format_form(f)) == f


def test_repeated_parameter_accumulates():
    assert parse_form("a+a-3a") == LinearForm(0, {"a": -1})


@pytest.mark.parametrize("bad", ["", "a b", "2*", "++a", "a 3", "&"])
def test_rejects_malformed(bad):
    with pytest.raises(FormSyntaxError):
        parse_form(bad)


def test_digit_suffix_is_part_of_the_parameter_name():
    assert parse_form("2a3") == LinearForm(0, {"a3": 2})


def test_unsigned_second_term_rejected():
    with pytest.raises(FormSyntaxError):
        parse_form("2a 3")


@settings(max_examples=100, deadline=None)
@given(forms)
def test_format_parse_round_trip(f):
    assert parse_form(format_form(f)) == f


@settings(max_examples=50, deadline=None)
@given(forms, forms, coef)
def test_linearity_of_evaluation(f, g, c):
    assignment = {name: Fraction(3, 2) for name in set(f.parameters) | set(g.parameters)}
    lhs = (f + g * c).evaluate(assignment)
    rhs = f.evaluate(assignment) + c * g.evaluate(assignment)
    assert lhs == rhs


def test_evaluate_missing_parameter():
    with pytest.raises(MissingParameterError):
        LinearForm(0, {"a": 1}).evaluate({})


def test_subtraction_and_negation():
    f = parse_form("2a-b+1")
    assert f - f == LinearForm(0)
    assert -f == f * -1
