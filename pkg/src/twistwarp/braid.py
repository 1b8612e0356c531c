"""Twisted virtual braid words: data model, text format, strand traversal.

A word of degree ``n`` is read top to bottom.  Strands are named by the
position at which they enter the top of the diagram (1-based).

Crossing convention: in ``s<i>`` the strand entering at position ``i`` passes
over the strand at ``i+1``; in ``S<i>`` it passes under.  Virtual crossings
``v<i>`` swap positions without over/under information.  A bar ``b<i>`` marks
the strand currently at position ``i`` and does not move it.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidParseError(ValueError):
    """Malformed braid text (bad token or missing degree header)."""


class BraidRangeError(BraidParseError):
    """A generator index does not fit the degree of the word."""


class Kind(enum.Enum):
    POS = "s"
    NEG = "S"
    VIRT = "v"
    BAR = "b"


@dataclass(frozen=True)
class Generator:
    kind: Kind
    index: int

    @property
    def key(self) -> tuple[str, int]:
        return (self.kind.value, self.index)

    @property
    def is_classical(self) -> bool:
        return self.kind is Kind.POS or self.kind is Kind.NEG

    @property
    def is_crossing(self) -> bool:
        return self.kind is not Kind.BAR

    @property
    def sign(self) -> int | None:
        if self.kind is Kind.POS:
            return 1
        if self.kind is Kind.NEG:
            return -1
        return None

    @property
    def support(self) -> frozenset[int]:
        """Strand positions touched by this generator."""
        if self.kind is Kind.BAR:
            return frozenset((self.index,))
        return frozenset((self.index, self.index + 1))

    def check(self, n: int) -> None:
        top = n if self.kind is Kind.BAR else n - 1
        if not 1 <= self.index <= top:
            raise BraidRangeError(
                f"{self} out of range for degree {n} (index must be in 1..{top})"
            )

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


def sigma(i: int, eps: int = 1) -> Generator:
    return Generator(Kind.POS if eps > 0 else Kind.NEG, i)


def virt(i: int) -> Generator:
    return Generator(Kind.VIRT, i)


def bar(i: int) -> Generator:
    return Generator(Kind.BAR, i)


@dataclass(frozen=True)
class BraidWord:
    n: int
    gens: tuple[Generator, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BraidRangeError(f"degree must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            g.check(self.n)

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        return parse_braid_word(text)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return render_braid_word(self)

    def replace(self, start: int, stop: int, new: Iterable[Generator]) -> BraidWord:
        return BraidWord(self.n, self.gens[:start] + tuple(new) + self.gens[stop:])


_HEADER = re.compile(r"\A\s*n\s*=\s*([0-9]+)\s*;")
_TOKEN = re.compile(r"\A([sSvb])([0-9]+)\Z")


def parse_braid_word(text: str) -> BraidWord:
    """Parse ``n=<int>; tok tok ...`` where each token is s/S/v/b plus an index.

    ``#`` starts a comment running to the end of the line.
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    m = _HEADER.match(body)
    if m is None:
        raise BraidParseError("missing or invalid degree header 'n=<int>;'")
    n = int(m.group(1))
    if n < 1:
        raise BraidRangeError("degree must be at least 1")
    gens = []
    for tok in body[m.end():].split():
        t = _TOKEN.match(tok)
        if t is None:
            raise BraidParseError(f"bad token {tok!r}")
        gens.append(Generator(Kind(t.group(1)), int(t.group(2))))
    return BraidWord(n, tuple(gens))


def render_braid_word(w: BraidWord) -> str:
    if not w.gens:
        return f"n={w.n};"
    return f"n={w.n}; " + " ".join(map(str, w.gens))


@dataclass(frozen=True)
class Permutation:
    """``image[i-1]`` is the bottom position of the strand entering at top ``i``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.image, 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, p in enumerate(self.image, 1):
            inv[p - 1] = i
        return Permutation(tuple(inv))

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(p) for p in self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "(" + ", ".join(f"{i}->{p}" for i, p in enumerate(self.image, 1)) + ")"


def permutation(w: BraidWord) -> Permutation:
    """Top-to-bottom strand permutation; bars and crossing types are ignored."""
    at = list(range(w.n + 1))  # at[pos] = strand currently at pos
    for g in w.gens:
        if g.is_crossing:
            i = g.index
            at[i], at[i + 1] = at[i + 1], at[i]
    image = [0] * w.n
    for pos in range(1, w.n + 1):
        image[at[pos] - 1] = pos
    return Permutation(tuple(image))


OVER, UNDER, VIRTUAL = "over", "under", "virtual"


@dataclass(frozen=True)
class CrossingEvent:
    gen: int  # position of the generator instance in the word
    role: str  # OVER, UNDER or VIRTUAL
    before: int
    after: int


@dataclass(frozen=True)
class BarEvent:
    gen: int
    position: int


@dataclass(frozen=True)
class StrandPath:
    strand: int
    events: tuple[CrossingEvent | BarEvent, ...]
    bottom: int

    @property
    def bars(self) -> int:
        return sum(isinstance(e, BarEvent) for e in self.events)


def strand_paths(w: BraidWord) -> list[StrandPath]:
    at = list(range(w.n + 1))
    events: list[list] = [[] for _ in range(w.n + 1)]
    for k, g in enumerate(w.gens):
        i = g.index
        if g.kind is Kind.BAR:
            events[at[i]].append(BarEvent(k, i))
            continue
        left, right = at[i], at[i + 1]
        if g.kind is Kind.VIRT:
            lrole = rrole = VIRTUAL
        elif g.kind is Kind.POS:
            lrole, rrole = OVER, UNDER
        else:
            lrole, rrole = UNDER, OVER
        events[left].append(CrossingEvent(k, lrole, i, i + 1))
        events[right].append(CrossingEvent(k, rrole, i + 1, i))
        at[i], at[i + 1] = right, left
    bottom = [0] * (w.n + 1)
    for pos in range(1, w.n + 1):
        bottom[at[pos]] = pos
    return [StrandPath(s, tuple(events[s]), bottom[s]) for s in range(1, w.n + 1)]


def closure_cycles(w: BraidWord) -> list[tuple[int, ...]]:
    """Closed components of the closure, each as the strands it runs through in order."""
    return permutation(w).cycles()


def crossing_count(w: BraidWord) -> int:
    return sum(g.is_classical for g in w.gens)


def bar_count_per_strand(w: BraidWord) -> tuple[int, ...]:
    return tuple(p.bars for p in strand_paths(w))


def exponent_sum(w: BraidWord) -> int:
    return sum(g.sign or 0 for g in w.gens)


ALL_KINDS = (Kind.POS, Kind.NEG, Kind.VIRT, Kind.BAR)


def random_word(
    rng: random.Random,
    n: int,
    length: int,
    kinds: Sequence[Kind] = ALL_KINDS,
) -> BraidWord:
    """Uniformly random word over the allowed generator kinds (fuzzing helper)."""
    usable = [k for k in kinds if k is Kind.BAR or n >= 2]
    if not usable:
        return BraidWord(n)
    gens = []
    for _ in range(length):
        k = rng.choice(usable)
        top = n if k is Kind.BAR else n - 1
        gens.append(Generator(k, rng.randint(1, top)))
    return BraidWord(n, tuple(gens))
