"""Twisted knot diagrams as cyclic Gauss words with bars.

Tokens are ``O<id>``/``U<id>`` (over/under pass of classical crossing
``id``), ``V<id>`` (virtual pass) and ``!`` (bar).  The word is cyclic and
oriented.  No planarity check is made.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from . import kernels
from .braid import OVER, BarEvent, BraidWord, closure_cycles, strand_paths


class GaussParseError(ValueError):
    pass


class ClosureNotKnotError(ValueError):
    def __init__(self, cycles):
        self.cycles = cycles
        super().__init__(
            f"closure has {len(cycles)} components {cycles}, expected a single one"
        )


@dataclass(frozen=True)
class Token:
    kind: str  # "O", "U", "V" or "!"
    ident: int | None = None

    @property
    def is_bar(self) -> bool:
        return self.kind == "!"

    @property
    def is_pass(self) -> bool:
        return self.kind in ("O", "U")

    def __str__(self) -> str:
        return "!" if self.kind == "!" else f"{self.kind}{self.ident}"


BAR_TOKEN = Token("!")


class TwistedGaussCode:
    """Immutable cyclic code.  The stored order fixes edge numbering;
    equality and hashing ignore rotation."""

    __slots__ = ("tokens", "_canon")

    def __init__(self, tokens=()):
        tokens = tuple(tokens)
        _validate(tokens)
        object.__setattr__(self, "tokens", tokens)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("TwistedGaussCode is immutable")

    @classmethod
    def parse(cls, text: str) -> TwistedGaussCode:
        return parse_gauss_code(text)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def canonical(self) -> str:
        if self._canon is None:
            strs = [str(t) for t in self.tokens]
            best = " ".join(strs)
            for r in range(1, len(strs)):
                cand = " ".join(strs[r:] + strs[:r])
                if cand < best:
                    best = cand
            object.__setattr__(self, "_canon", best)
        return self._canon

    def render(self, canonical: bool = True) -> str:
        return self.canonical() if canonical else " ".join(map(str, self.tokens))

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"TwistedGaussCode({self.render(canonical=False)!r})"

    def __eq__(self, other):
        if not isinstance(other, TwistedGaussCode):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    @property
    def crossings(self) -> list[int]:
        return sorted({t.ident for t in self.tokens if t.kind == "O"})

    @property
    def crossing_count(self) -> int:
        return sum(1 for t in self.tokens if t.kind == "O")

    @property
    def bar_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_bar)

    @property
    def has_virtual(self) -> bool:
        return any(t.kind == "V" for t in self.tokens)

    def skeleton(self) -> list[Token]:
        """Non-virtual tokens in stored order; edge ``j`` sits just before ``skeleton()[j]``."""
        return [t for t in self.tokens if t.kind != "V"]

    @property
    def edge_count(self) -> int:
        return max(1, len(self.skeleton()))

    def streams(self) -> tuple[list[int], list[int], int]:
        """Kernel input: kinds, dense 0-based crossing ids, number of crossings."""
        dense = {c: k for k, c in enumerate(self.crossings)}
        kinds, ids = [], []
        for t in self.skeleton():
            if t.is_bar:
                kinds.append(kernels.BAR)
                ids.append(-1)
            else:
                kinds.append(kernels.OVER if t.kind == "O" else kernels.UNDER)
                ids.append(dense[t.ident])
        return kinds, ids, len(dense)


def _validate(tokens) -> None:
    passes = Counter()
    virtuals = Counter()
    for t in tokens:
        if not isinstance(t, Token):
            raise GaussParseError(f"not a token: {t!r}")
        if t.kind in ("O", "U"):
            passes[t.ident, t.kind] += 1
        elif t.kind == "V":
            virtuals[t.ident] += 1
        elif t.kind != "!":
            raise GaussParseError(f"bad token kind {t.kind!r}")
    for cid in {c for c, _ in passes}:
        o, u = passes[cid, "O"], passes[cid, "U"]
        if o != 1 or u != 1:
            raise GaussParseError(
                f"crossing {cid} must occur once as O and once as U (found O x{o}, U x{u})"
            )
    for vid, k in virtuals.items():
        if k != 2:
            raise GaussParseError(f"virtual crossing {vid} must occur exactly twice (found {k})")


def parse_gauss_code(text: str) -> TwistedGaussCode:
    """Whitespace separated ``O<id>``, ``U<id>``, ``V<id>``, ``!``; ``#`` comments allowed."""
    body = " ".join(line.split("#", 1)[0] for line in text.splitlines())
    tokens = []
    for tok in body.split():
        if tok == "!":
            tokens.append(BAR_TOKEN)
            continue
        head, rest = tok[0], tok[1:]
        if head not in "OUV" or not rest.isdigit():
            raise GaussParseError(f"bad token {tok!r}")
        tokens.append(Token(head, int(rest)))
    return TwistedGaussCode(tokens)


def reverse_orientation(c: TwistedGaussCode) -> TwistedGaussCode:
    return TwistedGaussCode(reversed(c.tokens))


def mirror(c: TwistedGaussCode) -> TwistedGaussCode:
    swap = {"O": "U", "U": "O"}
    return TwistedGaussCode(
        Token(swap[t.kind], t.ident) if t.kind in swap else t for t in c.tokens
    )


def reversed_edge(c: TwistedGaussCode, edge: int) -> int:
    """Index in ``reverse_orientation(c)`` of the edge holding the same base point."""
    e = c.edge_count
    return (e - edge) % e if len(c.skeleton()) else 0


def braid_closure_code(w: BraidWord) -> TwistedGaussCode:
    """Gauss code of a braid closure with one component, read from the top of strand 1.

    Crossings are numbered in order of first appearance.
    """
    cycles = closure_cycles(w)
    if len(cycles) != 1:
        raise ClosureNotKnotError(cycles)
    paths = strand_paths(w)
    number: dict[int, int] = {}
    vnumber: dict[int, int] = {}
    tokens = []
    for s in cycles[0]:
        for ev in paths[s - 1].events:
            if isinstance(ev, BarEvent):
                tokens.append(BAR_TOKEN)
            elif ev.role == "virtual":
                vid = vnumber.setdefault(ev.gen, len(vnumber) + 1)
                tokens.append(Token("V", vid))
            else:
                cid = number.setdefault(ev.gen, len(number) + 1)
                tokens.append(Token("O" if ev.role == OVER else "U", cid))
    return TwistedGaussCode(tokens)


def random_code(
    rng: random.Random, crossings: int, bars: int, virtuals: int = 0
) -> TwistedGaussCode:
    """Random double-occurrence word (fuzzing helper)."""
    tokens = [Token(k, c) for c in range(1, crossings + 1) for k in "OU"]
    tokens += [BAR_TOKEN] * bars
    tokens += [Token("V", v) for v in range(1, virtuals + 1) for _ in range(2)]
    rng.shuffle(tokens)
    return TwistedGaussCode(tokens)


def td_code(n: int) -> TwistedGaussCode:
    """Two-bar diagram with 2n crossings on which every edge has warping degree n.

    ``! A ! B`` where ``A`` alternates ``O1 U2 ... U2n`` and ``B`` runs back
    through the same crossings with the roles swapped.
    """
    if n < 1:
        raise ValueError("n must be positive")
    front = [Token("O" if k % 2 == 0 else "U", k + 1) for k in range(2 * n)]
    back = [Token("U" if t.kind == "O" else "O", t.ident) for t in reversed(front)]
    return TwistedGaussCode([BAR_TOKEN, *front, BAR_TOKEN, *back])
