import pytest
from hypothesis import given, settings

from oracles import updown_oracle, warping_oracle
from strategies import gauss_texts
from twistwarp.corpus import load_code
from twistwarp.gauss import mirror, parse_gauss_code, reverse_orientation, reversed_edge, td_code
from twistwarp.warping import (
    EVEN_PATTERNS,
    ODD_PATTERNS,
    InvalidEdge,
    check_relations,
    code_t1_r1_simplify,
    crossing_patterns,
    edge_degrees,
    is_alternating,
    knot_invariant_upper_bound,
    satisfies_local_rules,
    updown_solver,
    warping_degree,
    warping_degree_at,
    warping_labeling,
)


def G(text):
    return parse_gauss_code(text)


def test_basic_example():
    r = warping_degree(G("U1 ! O1 !"))
    assert r.degrees == [1, 1, 0, 0]
    assert (r.minimum, r.argmin, r.crossings, r.bars) == (0, 2, 1, 2)


@settings(max_examples=300)
@given(gauss_texts())
def test_degrees_match_oracle(text):
    c = G(text)
    assert edge_degrees(c) == warping_oracle(text.split())
    assert [warping_degree_at(c, j) for j in range(c.edge_count)] == edge_degrees(c)


def test_invalid_edge():
    with pytest.raises(InvalidEdge):
        warping_degree_at(G("O1 U1"), 2)


def test_empty_and_bar_only_codes():
    assert edge_degrees(G("")) == [0]
    assert edge_degrees(G("! !")) == [0, 0]
    assert updown_solver(G("!")).kind == "Unique"


@settings(max_examples=200, deadline=None)
@given(gauss_texts(max_crossings=4, max_bars=3))
def test_solver_matches_brute_force(text):
    c = G(text)
    if not c.skeleton():
        return
    bound = 3 * c.crossing_count + 3
    brute = updown_oracle(text.split(), bound)
    fam = updown_solver(c)
    if fam.kind == "Unique":
        assert brute == [fam.labels]
    else:
        expected = [fam.member(t) for t in range(-3 * bound, 3 * bound + 1)]
        assert sorted(brute) == sorted(e for e in expected if -bound <= e[0] <= bound)


@given(gauss_texts())
def test_parity_of_bars_decides_uniqueness(text):
    c = G(text)
    fam = updown_solver(c)
    assert (fam.kind == "Unique") == (c.bar_count % 2 == 1)


@given(gauss_texts())
def test_warping_labeling_solves_local_rules(text):
    c = G(text)
    assert warping_labeling(c) == edge_degrees(c)
    assert satisfies_local_rules(c, warping_labeling(c))


def test_local_rules_reject_wrong_labels():
    c = G("U1 ! O1 !")
    assert satisfies_local_rules(c, [1, 1, 0, 0])
    assert not satisfies_local_rules(c, [1, 1, 0, 1])


def test_unique_solution_example():
    fam = updown_solver(G("O1 U1 ! O2 U2"))
    assert fam.kind == "Unique" and fam.start_value == 1
    assert fam.equation == (-1, 2)


def test_one_parameter_family():
    fam = updown_solver(G("U1 ! O1 !"))
    assert fam.kind == "OneParameter"
    assert fam.shift == [1, 1, -1, -1]
    assert satisfies_local_rules(G("U1 ! O1 !"), fam.member(5))


@given(gauss_texts())
def test_crossing_patterns_follow_bar_parity(text):
    c = G(text)
    allowed = ODD_PATTERNS if c.bar_count % 2 else EVEN_PATTERNS
    for pattern in crossing_patterns(c).values():
        assert pattern in allowed


@given(gauss_texts())
def test_relations_hold_whenever_claimed(text):
    for rel in check_relations(G(text)):
        if rel.applies:
            assert rel.holds, rel


@given(gauss_texts(max_bars=0))
def test_reverse_identity_on_classical_codes(text):
    c = G(text)
    rev = edge_degrees(reverse_orientation(c))
    deg = edge_degrees(c)
    assert all(deg[j] + rev[reversed_edge(c, j)] == c.crossing_count for j in range(len(deg)))


def brute_alternating(tokens):
    roles = [t[0] for t in tokens if t[0] in "OU"]
    return bool(roles) and all(roles[k] != roles[k - 1] for k in range(len(roles)))


@given(gauss_texts(max_bars=0, max_virtual=0))
def test_reverse_bound_equality_iff_alternating(text):
    c = G(text)
    if c.crossing_count == 0:
        return
    total = min(edge_degrees(c)) + min(edge_degrees(reverse_orientation(c))) + 1
    assert total <= c.crossing_count
    assert (total == c.crossing_count) == brute_alternating(text.split())
    assert is_alternating(c) == brute_alternating(text.split())


@given(gauss_texts())
def test_mirror_identity(text):
    c = G(text)
    assert [a + b for a, b in zip(edge_degrees(c), edge_degrees(mirror(c)))] == \
        [c.crossing_count] * c.edge_count


@pytest.mark.parametrize("n", range(1, 6))
def test_td_family(n):
    c = td_code(n)
    assert edge_degrees(c) == [n] * c.edge_count
    assert 2 * min(edge_degrees(c)) == c.crossing_count


def test_upper_bound():
    assert knot_invariant_upper_bound(G("O1 U2 O3 U1 O2 U3")) == 1
    assert knot_invariant_upper_bound(td_code(2)) == 2


@pytest.mark.parametrize("before, after", [
    ("O1 U1 ! !", ""),
    ("! O1 U2 ! O2 U1", "! O1 U2 ! O2 U1"),
    ("!", "!"),
    ("O1 ! ! U1 O2 U2", ""),
    ("O1 U2 O2 U1 ! O3 U3", "!"),
])
def test_simplify(before, after):
    assert code_t1_r1_simplify(G(before)) == G(after)


def test_bar_fixture_values():
    c = load_code("fig5")
    deg = edge_degrees(c)
    a, b, base_c = 1, 0, 3
    assert (deg[a], deg[b], deg[base_c], min(deg), c.crossing_count) == (1, 0, 2, 0, 2)
    rev = edge_degrees(reverse_orientation(c))
    assert deg[a] + rev[reversed_edge(c, a)] == 1
