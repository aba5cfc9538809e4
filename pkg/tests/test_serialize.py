from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semiforge import Mat, WeightedAutomaton
from semiforge.serialize import (ParseError, automaton_from_json,
                                 automaton_to_json, frac_from_str, frac_to_str,
                                 generators_from_json, generators_to_json,
                                 matrix_from_json, matrix_to_json, parse_word,
                                 vass_from_json, vass_to_json, word_to_str)
from conftest import ROT90, mat, table_from
from test_vass import two_state_machine

F = Fraction


class TestFractions:
    def test_round_trip_examples(self):
        assert frac_to_str(F(3)) == "3"
        assert frac_to_str(F(-1, 2)) == "-1/2"
        assert frac_from_str("-1/2") == F(-1, 2)
        assert frac_from_str(7) == F(7)

    @given(st.fractions(min_value=-100, max_value=100, max_denominator=50))
    def test_round_trip(self, x):
        assert frac_from_str(frac_to_str(x)) == x

    def test_rejects_garbage(self):
        for bad in ("", "1/0", "1/-2", "0.5", "a", None, 1.5):
            with pytest.raises(ParseError):
                frac_from_str(bad)


class TestMatrixJson:
    def test_round_trip(self):
        m = mat([[F(1, 2), -1], [0, 3]])
        assert matrix_from_json(matrix_to_json(m)) == m

    def test_rejects_non_square(self):
        with pytest.raises(ParseError):
            matrix_from_json({"n": 2, "entries": [["1", "2"]]})
        with pytest.raises(ParseError):
            matrix_from_json({"entries": [["1", "2"], ["3"]]})
        with pytest.raises(ParseError):
            matrix_from_json([["1"]])


class TestGeneratorsJson:
    def test_round_trip(self):
        t = table_from({"a": ROT90, "b": Mat.identity(2)})
        back = generators_from_json(generators_to_json(t))
        assert back.n == 2 and back.alphabet == ("a", "b")
        assert back.mapping == t.mapping

    def test_alphabet_is_sorted(self):
        obj = {"n": 1, "generators": {"z": {"n": 1, "entries": [["1"]]},
                                      "a": {"n": 1, "entries": [["2"]]}}}
        assert generators_from_json(obj).alphabet == ("a", "z")

    def test_rejects_bad_shapes(self):
        with pytest.raises(ParseError):
            generators_from_json({"generators": {}})
        with pytest.raises(ParseError):
            generators_from_json({"n": 2, "generators": {}})
        with pytest.raises(ParseError):
            generators_from_json(
                {"n": 2, "generators": {"a": {"n": 1, "entries": [["1"]]}}})


class TestAutomatonJson:
    def test_round_trip(self):
        A = WeightedAutomaton(table_from({"a": ROT90}), (1, 0), (F(1, 3), 2))
        back = automaton_from_json(automaton_to_json(A))
        assert back.alpha == A.alpha and back.eta == A.eta
        assert back.table.mapping == A.table.mapping

    def test_missing_fields(self):
        with pytest.raises(ParseError):
            automaton_from_json({"n": 1})


class TestVassJson:
    def test_round_trip(self):
        V = two_state_machine()
        back = vass_from_json(vass_to_json(V))
        assert back.d == V.d and back.states == V.states
        assert back.transitions == V.transitions

    def test_rejects_bad_transition(self):
        obj = vass_to_json(two_state_machine())
        del obj["transitions"][0]["A"]
        with pytest.raises(ParseError):
            vass_from_json(obj)


class TestWords:
    def test_single_char_alphabet(self):
        assert parse_word("abba", ("a", "b")) == ("a", "b", "b", "a")
        assert parse_word("", ("a",)) == ()
        assert parse_word("a,b,a", ("a", "b")) == ("a", "b", "a")

    def test_multi_char_letters_need_commas(self):
        assert parse_word("s0,s1", ("s0", "s1")) == ("s0", "s1")
        assert parse_word("s0", ("s0", "s1")) == ("s0",)

    def test_unknown_letter(self):
        with pytest.raises(ParseError):
            parse_word("abc", ("a", "b"))

    def test_word_to_str(self):
        assert word_to_str(("a", "b")) == "ab"
        assert word_to_str(("s0", "s1")) == "s0,s1"
        assert word_to_str(()) == ""
