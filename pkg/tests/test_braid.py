import pytest
from hypothesis import given

from oracles import strand_events
from twistwarp.braid import (
    BraidParseError,
    BraidRangeError,
    BraidWord,
    Permutation,
    bar,
    bar_count_per_strand,
    closure_cycles,
    crossing_count,
    exponent_sum,
    parse_braid_word,
    permutation,
    random_word,
    sigma,
    strand_paths,
    virt,
)
from strategies import braid_words


def test_parse_tokens():
    w = parse_braid_word("n=3; s1 S2 v1 b3")
    assert w.n == 3
    assert w.gens == (sigma(1), sigma(2, -1), virt(1), bar(3))


def test_render_empty_word():
    assert str(BraidWord(3)) == "n=3;"
    assert parse_braid_word("n=3;") == BraidWord(3)


def test_comments_and_whitespace():
    w = parse_braid_word("# header\n n = 2 ;\n s1  # first\n b2\n")
    assert str(w) == "n=2; s1 b2"


@pytest.mark.parametrize("text", ["s1 s2", "n=2 s1", "n=2; x1", "n=2; s", "n=2; s1a"])
def test_parse_errors(text):
    with pytest.raises(BraidParseError):
        parse_braid_word(text)


@pytest.mark.parametrize("text", ["n=2; s2", "n=2; b3", "n=1; v1", "n=3; s0", "n=0;"])
def test_range_errors(text):
    with pytest.raises(BraidRangeError):
        parse_braid_word(text)


@given(braid_words())
def test_roundtrip(w):
    assert parse_braid_word(str(w)) == w


@given(braid_words())
def test_permutation_matches_simulation(w):
    _, bottom = strand_events(w)
    assert permutation(w).image == tuple(bottom[s] for s in range(1, w.n + 1))


@given(braid_words())
def test_strand_paths_match_simulation(w):
    events, _ = strand_events(w)
    for p in strand_paths(w):
        got = [(e.gen, "bar" if not hasattr(e, "role") else e.role) for e in p.events]
        assert got == events[p.strand]


def test_permutation_algebra():
    p = Permutation((2, 3, 1))
    assert p.then(p.inverse()).is_identity()
    assert p.cycles() == [(1, 2, 3)]
    assert Permutation.identity(3).cycles() == [(1,), (2,), (3,)]
    with pytest.raises(ValueError):
        Permutation((1, 1))


def test_counts():
    w = parse_braid_word("n=3; s1 b1 S2 v1 b3 b1")
    assert crossing_count(w) == 2
    assert exponent_sum(w) == 0
    assert bar_count_per_strand(w) == (1, 1, 1)
    assert closure_cycles(parse_braid_word("n=3; s1 s2")) == [(1, 3, 2)]


def test_random_word_respects_degree(rng):
    for _ in range(50):
        w = random_word(rng, rng.randint(1, 5), 20)
        assert len(w) == 20 or w.n == 1
