import pytest
from hypothesis import given, settings

from strategies import braid_words
from twistwarp.braid import crossing_count, exponent_sum, parse_braid_word, permutation
from twistwarp.labeling import updown_map, z2_map, z2_polynomial
from twistwarp.moves import (
    BACKWARD,
    FORWARD,
    MoveSite,
    NoMatchError,
    TraceFormatError,
    apply_move,
    bounded_search,
    enumerate_moves,
    format_trace,
    inverse_site,
    parse_move,
    parse_trace,
    random_walk,
    replay,
    rule_catalog,
)


def B(text):
    return parse_braid_word(text)


@pytest.mark.parametrize("before, line, after", [
    ("n=2; s1 S1", "R2 forward @0 i=1 eps=+", "n=2;"),
    ("n=2;", "R2 backward @0 i=1 eps=-", "n=2; S1 s1"),
    ("n=3; s1 s2 s1", "R3 forward @0 i=1 eps=+", "n=3; s2 s1 s2"),
    ("n=3; S2 S1 S2", "R3 backward @0 i=1 eps=-", "n=3; S1 S2 S1"),
    ("n=4; s1 v3", "FarCommute forward @0", "n=4; v3 s1"),
    ("n=3; v1 s2 v1", "V4 forward @0 i=1 eps=+", "n=3; v2 s1 v2"),
    ("n=3; b1 b2 s1", "T3 forward @0 i=1 eps=+", "n=3; v1 s1 v1 b1 b2"),
    ("n=2; b1 b2 s1", "T3 forward @0 i=1 eps=+", "n=2; v1 s1 v1 b1 b2"),
    ("n=2; v1 b2", "T2 forward @0 i=1", "n=2; b1 v1"),
    ("n=2; b1 b1", "T1 forward @0 i=1", "n=2;"),
    ("n=3; b3 s1", "BarPastCrossing forward @0", "n=3; s1 b3"),
    ("n=3; s1 b2 s2", "Forbidden2 forward @1 i=2 eps=+", "n=3; s1 s2 b3"),
])
def test_examples(before, line, after):
    assert str(apply_move(B(before), parse_move(line))) == after


def test_no_match():
    with pytest.raises(NoMatchError):
        apply_move(B("n=2; s1 s1"), parse_move("R2 forward @0 i=1 eps=+"))
    with pytest.raises(NoMatchError):
        apply_move(B("n=2; s1"), parse_move("T1 backward @5 i=1"))


@pytest.mark.parametrize("line", ["R9 forward @0", "R2 sideways @0", "R2 forward 0",
                                  "R2 forward @x", "R2 forward @0 eps=2", "R2 forward @0 k=1"])
def test_bad_trace_lines(line):
    with pytest.raises(TraceFormatError):
        parse_move(line)


def test_trace_roundtrip():
    moves = [MoveSite("R2", BACKWARD, 3, 1, -1), MoveSite("FarCommute", FORWARD, 0, 1)]
    assert parse_trace(format_trace(moves) + "\n# done\n") == moves


def test_catalog_sides_are_consistent():
    for n in range(1, 6):
        for rule in rule_catalog(n):
            for side in (rule.lhs, rule.rhs):
                for g in side:
                    g.check(n)


@settings(max_examples=150, deadline=None)
@given(braid_words(max_len=8))
def test_every_move_preserves_permutation_and_degree(w):
    perm = permutation(w)
    for m in enumerate_moves(w, include_forbidden=True):
        out = apply_move(w, m)
        assert out.n == w.n
        assert permutation(out) == perm
        delta = crossing_count(out) - crossing_count(w)
        if m.rule == "R2":
            assert delta == (-2 if m.direction == FORWARD else 2)
        else:
            assert delta == 0
        if not m.rule.startswith("Forbidden"):
            assert exponent_sum(out) == exponent_sum(w)


@settings(max_examples=150, deadline=None)
@given(braid_words(max_len=8))
def test_non_r2_moves_keep_the_map(w):
    m0 = updown_map(w)
    for m in enumerate_moves(w):
        if m.rule != "R2":
            assert updown_map(apply_move(w, m)) == m0, m


@settings(max_examples=150, deadline=None)
@given(braid_words(max_len=8))
def test_r2_keeps_z2_data(w):
    g, p = z2_map(w), z2_polynomial(w)
    for m in enumerate_moves(w, rules=["R2"]):
        out = apply_move(w, m)
        assert z2_map(out) == g and z2_polynomial(out) == p


def test_welded_forbidden_move_keeps_labels():
    for text in ["n=3; s1 s2 v1", "n=4; b2 s1 s2 v1 b4 s3", "n=3; b1 v1 S2 S1 b2"]:
        w = B(text)
        for m in enumerate_moves(w, include_forbidden=True, rules=["Forbidden1"]):
            assert updown_map(apply_move(w, m)) == updown_map(w)


def test_bar_slide_changes_z2_map():
    w = B("n=3; s1 b2 s2")
    out = apply_move(w, parse_move("Forbidden2 forward @1 i=2 eps=+"))
    assert z2_map(w)((0, 0, 0)) == (1, 0, 1)
    assert z2_map(out)((0, 0, 0)) == (1, 1, 0)


@settings(max_examples=100, deadline=None)
@given(braid_words(max_len=8))
def test_inverse_round_trip(w):
    for m in enumerate_moves(w, include_forbidden=True):
        out = apply_move(w, m)
        assert apply_move(out, inverse_site(w, m)) == w


def test_walk_is_seeded():
    w = B("n=3; s1 b2 S2 v1")
    a = random_walk(w, 25, seed=3)
    b = random_walk(w, 25, seed=3)
    assert a.word == b.word and a.trace == b.trace
    assert replay(w, a.trace) == a.word


def test_walk_without_r2_keeps_map():
    w = B("n=3; s1 b2 S2 v1 s2")
    res = random_walk(w, 40, allow_r2=False, seed=11)
    assert all(m.rule != "R2" for m in res.trace)
    assert updown_map(res.word) == updown_map(w)


def test_search_finds_single_r2():
    res = bounded_search(B("n=2; s1 S1"), B("n=2;"))
    assert res.found and len(res.path) == 1 and res.path[0].rule == "R2"


def test_search_reports_limits():
    assert bounded_search(B("n=2; s1"), B("n=2;")).reason == "permutations differ"
    res = bounded_search(B("n=2; s1 S1"), B("n=2;"), allow_r2=False)
    assert not res.found and "crossing" in res.reason
    res = bounded_search(B("n=3; s1 s1"), B("n=3; S1 S1"), max_visited=20)
    assert not res.found and res.limit_hit == "max_visited"
    with pytest.raises(ValueError):
        bounded_search(B("n=2;"), B("n=3;"))


def test_search_paths_replay():
    src, dst = B("n=3; v2 s2 S2"), B("n=3; v2 S1 s1")
    res = bounded_search(src, dst, max_length_growth=1)
    assert res.found
    assert replay(src, res.path) == dst


def test_sign_flipping_bar_pair_form():
    # pushing a bar pair through a crossing while flipping its sign keeps the
    # labeling but not the exponent sum, so it is not used as T3
    w, flipped = B("n=2; b1 b2 s1"), B("n=2; S1 b1 b2")
    assert updown_map(w) == updown_map(flipped)
    assert exponent_sum(w) != exponent_sum(flipped)
