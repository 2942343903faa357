from fractions import Fraction

import pytest

from powerideals.errors import ArrangementFormatError, InputError
from powerideals.harness.fileformat import (
    builtin_text,
    format_arrangement,
    load_builtin,
    load_file,
    parse_arrangement,
    parse_rational,
)


def test_prop1_file():
    a = parse_arrangement(builtin_text("prop1"))
    assert a.n == 6
    assert a.ambient_dim == 4
    assert a.forms[3] == (1, 0, 0, -1)


def test_rationals_are_exact():
    a = parse_arrangement("dim 4\nform 1/2 -3 0 7\n")
    assert a.forms[0] == (Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(7))
    assert parse_rational("+4/6", 1) == Fraction(2, 3)


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("dim 4\nform 0 0 0 0\n", 2, "zero form"),
        ("dim 2\nform 1.5 1\n", 2, "malformed rational"),
        ("dim 2\nform 1/0 1\n", 2, "zero denominator"),
        ("dim 2\n\n# comment\nform 1 2 3\n", 4, "dimension mismatch"),
        ("form 1 2\ndim 2\n", 1, "'form' before 'dim'"),
        ("dim 2\ndim 3\n", 2, "dimension declared twice"),
        ("dim 2\nplane 1 2\n", 2, "unknown declaration"),
        ("# nothing here\n", 1, "missing 'dim' declaration"),
        ("dim zero\n", 1, "expected 'dim <positive integer>'"),
        ("dim ²\nform 1 0\n", 1, "expected 'dim <positive integer>'"),
        ("dim ٣\n", 1, "expected 'dim <positive integer>'"),
        ("dim 0\n", 1, "expected 'dim <positive integer>'"),
        ("dim 2\nform 1 ٣\n", 2, "malformed rational"),
    ],
)
def test_malformed_files(text, line, message):
    with pytest.raises(ArrangementFormatError, match=message) as excinfo:
        parse_arrangement(text)
    assert excinfo.value.line_number == line
    assert str(excinfo.value).startswith(f"line {line}: ")


def test_comments_and_blank_lines():
    a = parse_arrangement("# header\n\ndim 2   # plane\nform 1 1 # diagonal\n")
    assert a.forms == ((1, 1),)


def test_format_then_parse(prop1):
    assert parse_arrangement(format_arrangement(prop1)) == prop1


def test_load_file(tmp_path):
    path = tmp_path / "u23.arr"
    path.write_text("dim 2\nform 1 0\nform 0 1\nform 1 1\n")
    assert load_file(path) == load_builtin("u23")


def test_unknown_builtin():
    with pytest.raises(InputError):
        load_builtin("nope")
