"""Local rewrite rules on twisted virtual braid words.

Every rule instance is a pair of concrete generator strings ``lhs <-> rhs``.
Applying it forward replaces an occurrence of ``lhs`` by ``rhs``; backward
does the opposite.  Rules with an empty side (R2, V2, T1) can be inserted
backward at every position of a word.
"""

from __future__ import annotations

import functools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .braid import (
    BraidWord,
    Generator,
    Kind,
    bar,
    crossing_count,
    permutation,
    render_braid_word,
    sigma,
    virt,
)

FORWARD, BACKWARD = "forward", "backward"

RULE_NAMES = (
    "R2", "R3", "FarCommute",
    "V2", "V3", "V4",
    "T1", "T2", "T3", "BarCommute", "BarPastCrossing",
    "Forbidden1", "Forbidden2",
)
FORBIDDEN = frozenset({"Forbidden1", "Forbidden2"})


@dataclass(frozen=True)
class MoveRule:
    name: str
    lhs: tuple[Generator, ...]
    rhs: tuple[Generator, ...]
    i: int | None = None
    eps: int | None = None
    reversible: bool = True

    @property
    def forbidden(self) -> bool:
        return self.name in FORBIDDEN

    def __str__(self) -> str:
        def side(gs):
            return " ".join(map(str, gs)) or "()"

        return f"{self.name}: {side(self.lhs)} <-> {side(self.rhs)}"


def _crossings(n: int) -> list[Generator]:
    return [Generator(k, i) for k in (Kind.POS, Kind.NEG, Kind.VIRT) for i in range(1, n)]


@functools.lru_cache(maxsize=None)
def rule_catalog(n: int) -> tuple[MoveRule, ...]:
    """All rule instances for degree ``n``, forbidden ones included (flagged)."""
    rules: list[MoveRule] = []
    add = rules.append
    signs = (1, -1)
    for i in range(1, n):
        for e in signs:
            add(MoveRule("R2", (sigma(i, e), sigma(i, -e)), (), i, e))
    for i in range(1, n - 1):
        for e in signs:
            a, b = sigma(i, e), sigma(i + 1, e)
            add(MoveRule("R3", (a, b, a), (b, a, b), i, e))
    cross = _crossings(n)
    for g in cross:
        for h in cross:
            if g.key < h.key and not (g.support & h.support):
                add(MoveRule("FarCommute", (g, h), (h, g), g.index))
    for i in range(1, n):
        add(MoveRule("V2", (virt(i), virt(i)), (), i))
    for i in range(1, n - 1):
        a, b = virt(i), virt(i + 1)
        add(MoveRule("V3", (a, b, a), (b, a, b), i))
        for e in signs:
            add(MoveRule("V4", (a, sigma(i + 1, e), a), (b, sigma(i, e), b), i, e))
    for i in range(1, n + 1):
        add(MoveRule("T1", (bar(i), bar(i)), (), i))
    for i in range(1, n):
        add(MoveRule("T2", (virt(i), bar(i + 1)), (bar(i), virt(i)), i))
        add(MoveRule("T2", (virt(i), bar(i)), (bar(i + 1), virt(i)), i))
        for e in signs:
            add(MoveRule(
                "T3",
                (bar(i), bar(i + 1), sigma(i, e)),
                (virt(i), sigma(i, e), virt(i), bar(i), bar(i + 1)),
                i, e,
            ))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(MoveRule("BarCommute", (bar(i), bar(j)), (bar(j), bar(i)), i))
    for g in cross:
        for j in range(1, n + 1):
            if j not in g.support:
                add(MoveRule("BarPastCrossing", (bar(j), g), (g, bar(j)), g.index, g.sign))
    # welded overpass: the strand crossing both others passes over both
    for i in range(1, n - 1):
        add(MoveRule(
            "Forbidden1",
            (sigma(i), sigma(i + 1), virt(i)), (virt(i + 1), sigma(i), sigma(i + 1)), i, 1,
        ))
        add(MoveRule(
            "Forbidden1",
            (virt(i), sigma(i + 1, -1), sigma(i, -1)),
            (sigma(i + 1, -1), sigma(i, -1), virt(i + 1)), i, -1,
        ))
    # a single bar slides along its strand through a classical crossing
    for i in range(1, n):
        for e in signs:
            add(MoveRule("Forbidden2", (bar(i), sigma(i, e)), (sigma(i, e), bar(i + 1)), i, e))
            add(MoveRule("Forbidden2", (bar(i + 1), sigma(i, e)), (sigma(i, e), bar(i)), i, e))
    return tuple(rules)


@dataclass(frozen=True)
class MoveSite:
    rule: str
    direction: str
    position: int
    i: int | None = None
    eps: int | None = None

    def __str__(self) -> str:
        parts = [self.rule, self.direction, f"@{self.position}"]
        if self.i is not None:
            parts.append(f"i={self.i}")
        if self.eps is not None:
            parts.append(f"eps={'+' if self.eps > 0 else '-'}")
        return " ".join(parts)


class NoMatchError(ValueError):
    """The move's pattern does not occur at the requested site."""


class TraceFormatError(ValueError):
    pass


def parse_move(line: str) -> MoveSite:
    """Parse one trace line ``<rule> <direction> @<position> [i=<i>] [eps=<+|->]``."""
    toks = line.split()
    if len(toks) < 3 or not toks[2].startswith("@"):
        raise TraceFormatError(f"bad move line {line!r}")
    rule, direction = toks[0], toks[1]
    if rule not in RULE_NAMES or direction not in (FORWARD, BACKWARD):
        raise TraceFormatError(f"bad move line {line!r}")
    try:
        pos = int(toks[2][1:])
        i = eps = None
        for t in toks[3:]:
            key, _, val = t.partition("=")
            if key == "i":
                i = int(val)
            elif key == "eps" and val in "+-" and len(val) == 1:
                eps = 1 if val == "+" else -1
            else:
                raise TraceFormatError(f"bad field {t!r} in {line!r}")
    except ValueError as exc:
        raise TraceFormatError(f"bad move line {line!r}") from exc
    return MoveSite(rule, direction, pos, i, eps)


def parse_trace(text: str) -> list[MoveSite]:
    lines = (line.split("#", 1)[0].strip() for line in text.splitlines())
    return [parse_move(line) for line in lines if line]


def format_trace(moves: Iterable[MoveSite]) -> str:
    return "\n".join(map(str, moves))


def _site(rule: MoveRule, direction: str, pos: int) -> MoveSite:
    return MoveSite(rule.name, direction, pos, rule.i, rule.eps)


@functools.lru_cache(maxsize=None)
def _index(n: int, include_forbidden: bool):
    by_first: dict[Generator, list] = {}
    inserts = []
    for rule in rule_catalog(n):
        if rule.forbidden and not include_forbidden:
            continue
        for direction, side in ((FORWARD, rule.lhs), (BACKWARD, rule.rhs)):
            if side:
                by_first.setdefault(side[0], []).append((rule, direction, side))
            else:
                inserts.append((rule, direction))
    return by_first, inserts


def _matches(w: BraidWord, include_forbidden: bool, rules: frozenset | None = None):
    by_first, inserts = _index(w.n, include_forbidden)
    gens = w.gens
    for pos, g in enumerate(gens):
        for rule, direction, side in by_first.get(g, ()):
            if rules is not None and rule.name not in rules:
                continue
            if gens[pos:pos + len(side)] == side:
                yield rule, direction, pos
    for rule, direction in inserts:
        if rules is not None and rule.name not in rules:
            continue
        for pos in range(len(gens) + 1):
            yield rule, direction, pos


def enumerate_moves(
    w: BraidWord, include_forbidden: bool = False, rules: Iterable[str] | None = None
) -> list[MoveSite]:
    """Every site where a catalog pattern matches, optionally restricted to some rule names."""
    wanted = frozenset(rules) if rules is not None else None
    sites = [_site(r, d, p) for r, d, p in _matches(w, include_forbidden, wanted)]
    sites.sort(key=lambda m: (m.position, RULE_NAMES.index(m.rule), m.direction,
                              m.i or 0, m.eps or 0))
    return sites


def _resolve(w: BraidWord, m: MoveSite) -> tuple[tuple, tuple]:
    if m.direction not in (FORWARD, BACKWARD):
        raise NoMatchError(f"unknown direction {m.direction!r}")
    if not 0 <= m.position <= len(w.gens):
        raise NoMatchError(f"position {m.position} outside the word")
    for rule in rule_catalog(w.n):
        if rule.name != m.rule:
            continue
        if m.i is not None and rule.i != m.i:
            continue
        if m.eps is not None and rule.eps != m.eps:
            continue
        old, new = (rule.lhs, rule.rhs) if m.direction == FORWARD else (rule.rhs, rule.lhs)
        if not old and (rule.i != m.i or rule.eps != m.eps):
            continue  # insertions need their parameters spelled out
        if w.gens[m.position:m.position + len(old)] == old:
            return old, new
    raise NoMatchError(f"{m} does not match {render_braid_word(w)}")


def apply_move(w: BraidWord, m: MoveSite) -> BraidWord:
    old, new = _resolve(w, m)
    return w.replace(m.position, m.position + len(old), new)


def inverse_site(w: BraidWord, m: MoveSite) -> MoveSite:
    """The site that undoes ``m`` on ``apply_move(w, m)``."""
    _resolve(w, m)
    back = BACKWARD if m.direction == FORWARD else FORWARD
    return MoveSite(m.rule, back, m.position, m.i, m.eps)


def replay(w: BraidWord, moves: Iterable[MoveSite]) -> BraidWord:
    for m in moves:
        w = apply_move(w, m)
    return w


@dataclass
class WalkResult:
    word: BraidWord
    trace: list[MoveSite]
    stopped_early: bool = False


def random_walk(
    w: BraidWord,
    steps: int,
    allow_r2: bool = True,
    include_forbidden: bool = False,
    seed: int | None = None,
    rules: Iterable[str] | None = None,
) -> WalkResult:
    """Seeded random walk on the move graph.

    Each step first picks a rule name uniformly among those with a site, then
    a site of that rule uniformly, so insertion sites do not swamp the rest.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    wanted = set(rules) if rules is not None else set(RULE_NAMES)
    if not allow_r2:
        wanted.discard("R2")
    trace = []
    for _ in range(steps):
        sites = enumerate_moves(w, include_forbidden, wanted)
        if not sites:
            return WalkResult(w, trace, True)
        names = sorted({s.rule for s in sites}, key=RULE_NAMES.index)
        name = rng.choice(names)
        m = rng.choice([s for s in sites if s.rule == name])
        w = apply_move(w, m)
        trace.append(m)
    return WalkResult(w, trace)


@dataclass
class SearchResult:
    found: bool
    path: list[MoveSite] = field(default_factory=list)
    visited: int = 0
    limit_hit: str | None = None  # "max_visited", or None when the space was exhausted
    reason: str = ""


def bounded_search(
    src: BraidWord,
    dst: BraidWord,
    max_length_growth: int = 2,
    max_visited: int = 100_000,
    allow_r2: bool = True,
    include_forbidden: bool = False,
) -> SearchResult:
    """Breadth-first search from ``src`` to ``dst`` over words no longer than
    ``max(len(src), len(dst)) + max_length_growth``.

    Nodes are hashed by their rendered token stream.  A returned path is
    always a genuine move sequence; ``found=False`` only means no path was
    seen within the limits (or an invariant of the move set rules one out).
    """
    if src.n != dst.n:
        raise ValueError(f"degree mismatch: {src.n} vs {dst.n}")
    if permutation(src) != permutation(dst):
        return SearchResult(False, reason="permutations differ")
    if not allow_r2 and crossing_count(src) != crossing_count(dst):
        return SearchResult(False, reason="crossing counts differ and R2 is excluded")
    limit = max(len(src), len(dst)) + max_length_growth
    wanted = set(RULE_NAMES) - ({"R2"} if not allow_r2 else set())
    start, goal = render_braid_word(src), render_braid_word(dst)
    parent: dict[str, tuple[str, MoveSite] | None] = {start: None}
    queue = deque([src])
    while queue:
        w = queue.popleft()
        key = render_braid_word(w)
        if key == goal:
            path = []
            while parent[key] is not None:
                key, m = parent[key]
                path.append(m)
            path.reverse()
            return SearchResult(True, path, len(parent))
        for m in enumerate_moves(w, include_forbidden, wanted):
            nxt = apply_move(w, m)
            if len(nxt) > limit:
                continue
            k = render_braid_word(nxt)
            if k in parent:
                continue
            if len(parent) >= max_visited:
                return SearchResult(False, visited=len(parent), limit_hit="max_visited")
            parent[k] = (key, m)
            queue.append(nxt)
    return SearchResult(False, visited=len(parent), reason="search space exhausted")
