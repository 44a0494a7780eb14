import pytest

from bracketstraight.core import BracketPolynomial
from bracketstraight.errors import ParseError, SymbolRangeError
from bracketstraight.harness import generate_corpus
from bracketstraight.textio import (
    parse_cases_file,
    parse_tableau_file,
    serialize_cases,
    serialize_polynomial,
)

GOLDEN_NF = BracketPolynomial.from_terms(
    [(1, [[1, 3, 5], [2, 4, 6]]), (-1, [[1, 2, 5], [3, 4, 6]]), (-1, [[1, 2, 3], [4, 5, 6]])])


def test_parse_plain_monomial():
    assert parse_tableau_file("1 4 6 ; 2 3 5") == BracketPolynomial.monomial([[1, 4, 6], [2, 3, 5]])


def test_parse_coefficient():
    assert parse_tableau_file("-1 : 1 2 3 ; 4 5 6") == BracketPolynomial.monomial([[1, 2, 3], [4, 5, 6]], -1)


def test_comments_and_blank_lines():
    text = "# a comment\n\n  2 : 1 2 ; 3 4   # trailing\n\n1 3 ; 2 4\n"
    assert parse_tableau_file(text) == BracketPolynomial.from_terms([(2, [[1, 2], [3, 4]]), (1, [[1, 3], [2, 4]])])


def test_terms_are_normalized_and_combined():
    assert parse_tableau_file("2 1 ; 3 4\n1 : 1 2 ; 3 4") == BracketPolynomial()
    assert parse_tableau_file("1 1 ; 2 3") == BracketPolynomial()


@pytest.mark.parametrize("text, line", [
    ("1 2 ; 3 4\nx : 1 2 ; 3 4", 2),
    ("1 2 ; 3 4\n\n1 2 ; 3 q", 3),
    ("1 2 ; 3", 1),
    ("1 2 ; ; 3 4", 1),
    ("1 2 ; 3 4\n1 2 3 ; 4 5 6", 2),
    ("1 2 ; 3 4\nsymbols=4", 2),
])
def test_parse_errors_report_lines(text, line):
    with pytest.raises(ParseError) as exc:
        parse_tableau_file(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_symbol_range():
    with pytest.raises(SymbolRangeError):
        parse_tableau_file("0 1 ; 2 3")
    with pytest.raises(SymbolRangeError):
        parse_tableau_file("symbols=4\n1 2 ; 3 5")
    assert parse_tableau_file("symbols=5\n1 2 ; 3 5")


def test_zero_based_header():
    p = parse_tableau_file("symbols=4 base=0\n0 1 ; 2 3")
    assert p == BracketPolynomial.monomial([[1, 2], [3, 4]])
    with pytest.raises(SymbolRangeError):
        parse_tableau_file("symbols=4 base=0\n0 1 ; 2 4")


def test_serialize_golden():
    text = serialize_polynomial(GOLDEN_NF)
    assert text.splitlines() == ["1 : 1 3 5 ; 2 4 6", "-1 : 1 2 5 ; 3 4 6", "-1 : 1 2 3 ; 4 5 6"]


def test_serialize_zero():
    assert serialize_polynomial(BracketPolynomial()).strip() == "0"
    assert parse_tableau_file(serialize_polynomial(BracketPolynomial())) == BracketPolynomial()


def test_serialize_zero_based():
    text = serialize_polynomial(GOLDEN_NF, base=0)
    assert text.splitlines()[:2] == ["symbols=6 base=0", "1 : 0 2 4 ; 1 3 5"]
    assert parse_tableau_file(text) == GOLDEN_NF


def test_round_trip_on_corpus():
    for t in generate_corpus(2, 3, 7) + generate_corpus(3, 3, 5, multilinear=False):
        p = BracketPolynomial({t: 3}) + (GOLDEN_NF if len(t) == 2 else BracketPolynomial())
        assert parse_tableau_file(serialize_polynomial(p)) == p


def test_cases_file_round_trip():
    cases = {"a": GOLDEN_NF, "b": BracketPolynomial.monomial([[1, 8, 9], [2, 6, 7], [3, 4, 5]]),
             "zero": BracketPolynomial()}
    text = serialize_cases(cases)
    assert parse_cases_file(text) == cases
    assert parse_cases_file(serialize_cases(cases, base=0)) == cases


def test_cases_file_variants():
    assert parse_cases_file("") == {}
    assert parse_cases_file("1 4 6 ; 2 3 5\n") == {"case": BracketPolynomial.monomial([[1, 4, 6], [2, 3, 5]])}
    shared = parse_cases_file("symbols=6 base=0\n== x\n0 3 5 ; 1 2 4\n")
    assert shared["x"] == BracketPolynomial.monomial([[1, 4, 6], [2, 3, 5]])


def test_cases_file_errors():
    with pytest.raises(ParseError) as exc:
        parse_cases_file("== a\n1 2 ; 3 4\n== b\n1 2 ; 3 x\n")
    assert exc.value.line == 4
    with pytest.raises(ParseError):
        parse_cases_file("== a\n1 2 ; 3 4\n== a\n1 3 ; 2 4\n")
    with pytest.raises(ParseError):
        parse_cases_file("1 2 ; 3 4\n== a\n1 3 ; 2 4\n")
