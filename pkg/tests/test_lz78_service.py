import math
import numpy as np
import pytest
from itertools import product
from errors import ParseError
from services.automaton_service import automaton_service
from services.lz78_service import lz78_service

FULL_WIDTH = 65900
REFERENCE_COMPLEXITY = 6068


def random_strings(count, max_length, seed):
    rng = np.random.default_rng(seed)
    for length in rng.integers(0, max_length + 1, count):
        yield ''.join('1' if bit else '0' for bit in rng.integers(0, 2, length))


def test_parse_empty_string():
    """Test that the empty string has no phrases"""
    parsed = lz78_service.lz78_parse("")

    assert parsed.phrases == []
    assert parsed.count == 0
    assert lz78_service.lz78_phrase_count("") == 0


def test_parse_all_zeros():
    """Test the ten-zero example"""
    parsed = lz78_service.lz78_parse("0000000000")

    assert parsed.phrases == ["0", "00", "000", "0000"]
    assert parsed.count == 4
    assert lz78_service.lz78_phrase_count("0000000000") == 4


def test_parse_final_phrase_repeats_dictionary_entry():
    """Test that an unextended final match still counts as one phrase"""
    parsed = lz78_service.lz78_parse("010101")

    assert parsed.phrases == ["0", "1", "01", "01"]
    assert parsed.count == 4
    assert lz78_service.lz78_phrase_count("010101") == 4


def test_parse_rejects_other_symbols():
    """Test parse errors carry the offset of the first bad symbol"""
    for parse in (lz78_service.lz78_parse, lz78_service.lz78_phrase_count):
        try:
            parse("0102")
            assert False, "Should have raised ParseError"
        except ParseError as e:
            assert e.offset == 3


def test_phrase_structure_invariants():
    """Test concatenation, one-symbol extension and distinctness of phrases"""
    for text in random_strings(300, 300, seed=5):
        phrases = lz78_service.lz78_parse(text).phrases
        assert ''.join(phrases) == text

        seen = {''}
        for phrase in phrases[:-1]:
            assert phrase[:-1] in seen
            assert phrase not in seen
            seen.add(phrase)
        if phrases:
            assert phrases[-1][:-1] in seen or phrases[-1] in seen


def test_dictionary_has_one_node_per_extended_phrase():
    """Test trie node count is phrase count + 1 when the last phrase was extended"""
    dictionary = lz78_service.lz78_parse("0000000000").dictionary

    assert dictionary.node_count == 5
    assert dictionary.phrases() == ["0", "00", "000", "0000"]


def test_oracle_matches_examples():
    """Test the naive parser on the worked examples"""
    assert lz78_service.naive_lz78_parse("") == []
    assert lz78_service.naive_lz78_parse("0000000000") == ["0", "00", "000", "0000"]
    assert lz78_service.naive_lz78_parse("010101") == ["0", "1", "01", "01"]


def test_fast_count_matches_oracle_exhaustive():
    """Test every binary string of length <= 16 against the naive parser"""
    for length in range(17):
        for symbols in product('01', repeat=length):
            text = ''.join(symbols)
            assert lz78_service.lz78_phrase_count(text) == len(lz78_service.naive_lz78_parse(text)), text


def test_fast_count_matches_oracle_random():
    """Test 10,000 seeded random strings of length <= 4096 against the naive parser"""
    for text in random_strings(10000, 4096, seed=2012):
        assert lz78_service.lz78_phrase_count(text) == len(lz78_service.naive_lz78_parse(text))


def test_parse_and_count_agree():
    """Test that the trie parse and the flat count agree"""
    for text in random_strings(200, 2000, seed=9):
        assert lz78_service.lz78_parse(text).count == lz78_service.lz78_phrase_count(text)


def test_count_is_monotone_in_prefix_length():
    """Test count(s) <= count(s + t)"""
    for text in random_strings(200, 500, seed=13):
        for cut in range(0, len(text) + 1, 17):
            assert lz78_service.lz78_phrase_count(text[:cut]) <= lz78_service.lz78_phrase_count(text)


def test_periodic_input_is_compressed():
    """Test count <= 4 * sqrt(2n) for periodic strings"""
    rng = np.random.default_rng(21)
    for n in (100, 1000, 10000, 100000):
        for _ in range(5):
            period = ''.join('1' if bit else '0' for bit in rng.integers(0, 2, int(rng.integers(1, 17))))
            text = (period * (n // len(period) + 1))[:n]
            assert lz78_service.lz78_phrase_count(text) <= 4 * math.sqrt(2 * n)


def test_parse_is_deterministic():
    """Test identical inputs give identical parses"""
    text = "0110100110010110" * 20

    assert lz78_service.lz78_parse(text) == lz78_service.lz78_parse(text)


def test_random_row_complexity_band():
    """Test 20 random 65,900-cell rows fall in [5500, 6700] with mean near 6068"""
    counts = [
        lz78_service.lz78_phrase_count(automaton_service.random_configuration(FULL_WIDTH, 0.5, seed).to_string())
        for seed in range(20)
    ]

    assert all(5500 <= count <= 6700 for count in counts)
    assert abs(np.mean(counts) - REFERENCE_COMPLEXITY) <= 0.08 * REFERENCE_COMPLEXITY


@pytest.mark.slow
def test_random_row_complexity_falls_under_rule_110(rule_110):
    """Test whole-row complexity at t=2000 is below 80% of t=0 for every seed"""
    for seed in range(20):
        config = automaton_service.random_configuration(FULL_WIDTH, 0.5, seed)
        initial = lz78_service.lz78_phrase_count(config.to_string())
        for _ in range(2000):
            config = automaton_service.step(config, rule_110)
        assert lz78_service.lz78_phrase_count(config.to_string()) < 0.8 * initial
