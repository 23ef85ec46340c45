import pytest

from quandle_closure.core.congruence import Congruence
from quandle_closure.core.quandle import trivial_quandle
from quandle_closure.errors import AxiomViolation, ParseError
from quandle_closure.utils.textformat import (
    format_classes,
    format_map,
    format_quandle,
    parse_classes,
    parse_quandle_file,
    parse_quandle_text,
    parse_subset,
)
from tests.helpers import E_TABLE, E_TEXT


def test_parse_e():
    assert parse_quandle_text(E_TEXT).rows == E_TABLE


def test_parse_one_element():
    assert parse_quandle_text("1\n0\n").order == 1


def test_comments_and_blank_lines():
    text = "# the standard example\n3\n\n0 0 1   # row 0\n1 1 0\n2 2 2\n"
    assert parse_quandle_text(text).rows == E_TABLE


def test_format_is_stable(e_quandle):
    assert format_quandle(e_quandle) == E_TEXT
    assert format_quandle(parse_quandle_text(E_TEXT)) == E_TEXT


def test_format_with_comments():
    text = format_quandle(trivial_quandle(2), comments=["unit: 0 0 1"])
    assert text == "2\n0 0\n1 1\n# unit: 0 0 1\n"


def test_idempotency_failure_keeps_the_path(tmp_path):
    path = tmp_path / "bad.qnd"
    path.write_text("3\n0 0 1\n1 1 0\n2 2 1\n")
    with pytest.raises(AxiomViolation) as info:
        parse_quandle_file(path)
    assert info.value.axiom == "A1"
    assert info.value.witness == (2, 2)
    assert info.value.source == str(path)
    assert "A1" in str(info.value) and "(2,2)" in str(info.value)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("x\n", 1),
        ("-2\n", 1),
        ("2\n0 0\n", 2),
        ("2\n0 0\n1\n", 3),
        ("2\n0 a\n1 1\n", 2),
        ("2\n0 0\n1 5\n", 3),
        ("# header\n\n2\n0 0\n1 1 1\n", 5),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_quandle_text(text, source="t.qnd")
    assert info.value.line == line
    assert info.value.source == "t.qnd"


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        parse_quandle_file(tmp_path / "absent.qnd")


def test_subsets():
    assert parse_subset("0,2", 3).members == (0, 2)
    assert parse_subset(" 1 ", 3).members == (1,)
    assert parse_subset("", 3).members == ()
    with pytest.raises(ParseError):
        parse_subset("3", 3)
    with pytest.raises(ParseError):
        parse_subset("a", 3)


def test_classes():
    c = parse_classes("0,1;2", 3)
    assert c == Congruence.from_classes(3, [[0, 1]])
    assert format_classes(c) == "0,1;2"
    assert format_classes(parse_classes("1,2", 4)) == "0;1,2;3"


def test_classes_reject_repeats():
    with pytest.raises(ParseError):
        parse_classes("0,1;1,2", 3)


def test_format_map():
    assert format_map((0, 0, 1)) == "0 0 1"
    assert format_map(()) == ""


def test_non_utf8_file(tmp_path):
    path = tmp_path / "latin.qnd"
    path.write_bytes(b"3\n0 0 1\n1 1 0\n2 2 \xff\n")
    with pytest.raises(ParseError) as info:
        parse_quandle_file(path)
    assert info.value.line == 4
    assert info.value.source == str(path)
    assert "0xff" in info.value.reason


def test_argument_errors_name_the_flag():
    with pytest.raises(ParseError) as info:
        parse_subset("5", 3, flag="--sub")
    assert info.value.line is None
    assert str(info.value) == "--sub: element 5 outside 0..2 in subset '5'"
    with pytest.raises(ParseError) as info:
        parse_classes("0;0", 3, flag="--cong")
    assert str(info.value) == "--cong: element 0 listed twice in classes '0;0'"


def test_empty_comment_has_no_trailing_space():
    assert format_quandle(trivial_quandle(0), comments=["unit: "]) == "0\n# unit:\n"
