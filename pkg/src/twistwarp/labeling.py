"""Up-down labelings of twisted virtual braid diagrams and the invariants built on them.

Edges are strand segments cut at classical crossings and bars; virtual
crossings do not cut edges.  Crossing the bar on an edge sends label ``l`` to
``#C - l``.  At a classical crossing the label is kept when the closed path on
the closure that leaves the crossing along this strand and first comes back to
it carries an odd number of bars; otherwise it goes up by one on the over
strand and down by one on the under strand.

The resulting top-to-bottom map is affine with coefficients ``+-1`` on every
strand, so it is stored as a permutation plus per-strand sign and offset.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .braid import (
    OVER,
    UNDER,
    BarEvent,
    BraidWord,
    CrossingEvent,
    Permutation,
    crossing_count,
    permutation,
    strand_paths,
)


def closure_streams(w: BraidWord):
    """Token streams of the closed components of the closure.

    Returns ``(streams, located)`` where ``streams`` holds one ``(kinds, ids)``
    pair per component (virtual crossings dropped) and ``located`` maps
    ``(strand, event index)`` to ``(component, token index)`` for bars and
    classical passes.
    """
    paths = strand_paths(w)
    perm = permutation(w)
    streams = []
    located = {}
    for comp, cycle in enumerate(perm.cycles()):
        kinds, ids = [], []
        for s in cycle:
            for k, ev in enumerate(paths[s - 1].events):
                if isinstance(ev, BarEvent):
                    located[s, k] = (comp, len(kinds))
                    kinds.append(kernels.BAR)
                    ids.append(-1)
                elif ev.role != "virtual":
                    located[s, k] = (comp, len(kinds))
                    kinds.append(kernels.OVER if ev.role == OVER else kernels.UNDER)
                    ids.append(ev.gen)
        streams.append((kinds, ids))
    return streams, located, paths


def _crossing_steps(w: BraidWord) -> tuple[list, dict]:
    """Per-strand label increments at classical crossings, keyed by ``(strand, event index)``."""
    streams, located, paths = closure_streams(w)
    parities = [kernels.arc_bar_parities(k, i) for k, i in streams]
    steps = {}
    for (s, k), (comp, pos) in located.items():
        ev = paths[s - 1].events[k]
        if isinstance(ev, CrossingEvent):
            if parities[comp][pos]:
                steps[s, k] = 0
            else:
                steps[s, k] = 1 if ev.role == OVER else -1
    return paths, steps


def return_path_bar_parity(w: BraidWord, crossing: int, strand: int | str) -> int:
    """Bar parity (0 even, 1 odd) of the return path at a classical crossing.

    ``crossing`` is the position of the crossing generator in the word;
    ``strand`` is the top position of one of the two strands through it, or
    ``"over"``/``"under"``.
    """
    if not 0 <= crossing < len(w.gens) or not w.gens[crossing].is_classical:
        raise ValueError(f"no classical crossing at word position {crossing}")
    streams, located, paths = closure_streams(w)
    for (s, k), (comp, pos) in located.items():
        ev = paths[s - 1].events[k]
        if not isinstance(ev, CrossingEvent) or ev.gen != crossing:
            continue
        if strand == s or strand == ev.role:
            return kernels.arc_bar_parities(*streams[comp])[pos]
    raise ValueError(f"strand {strand!r} does not pass through crossing {crossing}")


@dataclass(frozen=True)
class EdgeLabeling:
    """Labels keyed by ``(strand, segment)``; segment 0 is the top edge of the strand."""

    labels: dict
    bottom: tuple[int, ...]

    def strand(self, s: int) -> list[int]:
        out = []
        k = 0
        while (s, k) in self.labels:
            out.append(self.labels[s, k])
            k += 1
        return out


def propagate_labels(w: BraidWord, top: Sequence[int]) -> EdgeLabeling:
    """Concrete up-down labeling with the given top labels."""
    if len(top) != w.n:
        raise ValueError(f"expected {w.n} top labels, got {len(top)}")
    ncross = crossing_count(w)
    paths, steps = _crossing_steps(w)
    labels = {}
    bottom = [0] * w.n
    for p in paths:
        s = p.strand
        value = top[s - 1]
        seg = 0
        labels[s, 0] = value
        for k, ev in enumerate(p.events):
            if isinstance(ev, BarEvent):
                value = ncross - value
            elif ev.role == "virtual":
                continue
            else:
                value += steps[s, k]
            seg += 1
            labels[s, seg] = value
        bottom[p.bottom - 1] = value
    return EdgeLabeling(labels, tuple(bottom))


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AffineLabelMap:
    """Output at bottom position ``perm[i]`` is ``sign[i] * x[i] + offset[i]``."""

    n: int
    perm: tuple[int, ...]
    sign: tuple[int, ...]
    offset: tuple[int, ...]

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return evaluate(self, x)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "perm": list(self.perm),
            "sign": list(self.sign),
            "offset": list(self.offset),
        }

    @classmethod
    def from_dict(cls, d: dict) -> AffineLabelMap:
        return cls(d["n"], tuple(d["perm"]), tuple(d["sign"]), tuple(d["offset"]))

    def formula(self) -> str:
        """Human readable form, e.g. ``(1+x2, 1+x1, 3-x3)``."""
        parts = [""] * self.n
        for i in range(self.n):
            var = f"x{i + 1}"
            o, s = self.offset[i], self.sign[i]
            if o == 0:
                term = var if s > 0 else f"-{var}"
            else:
                term = f"{o}{'+' if s > 0 else '-'}{var}"
            parts[self.perm[i] - 1] = term
        return "(" + ", ".join(parts) + ")"


def updown_map(w: BraidWord) -> AffineLabelMap:
    """The up-down labeling function as an affine map (composed symbolically per strand)."""
    ncross = crossing_count(w)
    paths, steps = _crossing_steps(w)
    sign, offset = [], []
    for p in paths:
        s, o = 1, 0
        for k, ev in enumerate(p.events):
            if isinstance(ev, BarEvent):
                s, o = -s, ncross - o
            elif ev.role != "virtual":
                o += steps[p.strand, k]
        sign.append(s)
        offset.append(o)
    return AffineLabelMap(w.n, tuple(p.bottom for p in paths), tuple(sign), tuple(offset))


def evaluate(m: AffineLabelMap, x: Sequence[int]) -> tuple[int, ...]:
    if len(x) != m.n:
        raise LengthMismatch(f"expected a tuple of length {m.n}, got {len(x)}")
    y = [0] * m.n
    for i in range(m.n):
        y[m.perm[i] - 1] = m.sign[i] * x[i] + m.offset[i]
    return tuple(y)


@dataclass(frozen=True)
class Z2LabelMap:
    """Over the two-element field: output at ``perm[i]`` is ``x[i] + c[i]``."""

    n: int
    perm: tuple[int, ...]
    c: tuple[int, ...]

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.n:
            raise LengthMismatch(f"expected a tuple of length {self.n}, got {len(x)}")
        y = [0] * self.n
        for i in range(self.n):
            y[self.perm[i] - 1] = (x[i] + self.c[i]) % 2
        return tuple(y)

    def is_identity(self) -> bool:
        return not any(self.c) and Permutation(self.perm).is_identity()

    def to_dict(self) -> dict:
        return {"n": self.n, "perm": list(self.perm), "c": list(self.c)}

    @classmethod
    def from_dict(cls, d: dict) -> Z2LabelMap:
        return cls(d["n"], tuple(d["perm"]), tuple(d["c"]))


def z2_reduce(m: AffineLabelMap) -> Z2LabelMap:
    return Z2LabelMap(m.n, m.perm, tuple(o % 2 for o in m.offset))


def z2_map(w: BraidWord) -> Z2LabelMap:
    return z2_reduce(updown_map(w))


def reduce_mod2(m: AffineLabelMap, x: Sequence[int]) -> tuple[int, ...]:
    """``f'`` : integer input, output reduced modulo 2."""
    return tuple(v % 2 for v in evaluate(m, x))


@dataclass(frozen=True)
class Z2Polynomial:
    """``x^k (x+1)^m`` over the two-element field."""

    k: int
    m: int

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append("x" if self.k == 1 else f"x^{self.k}")
        if self.m:
            parts.append("(x+1)" if self.m == 1 else f"(x+1)^{self.m}")
        return "".join(parts) or "1"

    def to_dict(self) -> dict:
        return {"k": self.k, "m": self.m}

    def coefficients(self) -> list[int]:
        """Coefficients mod 2, lowest degree first."""
        poly = [1]
        for root in [0] * self.k + [1] * self.m:
            nxt = [0] * (len(poly) + 1)
            for d, a in enumerate(poly):
                nxt[d + 1] ^= a
                nxt[d] ^= a & root
            poly = nxt
        return poly


def z2_polynomial(w: BraidWord) -> Z2Polynomial:
    c = z2_map(w).c
    zeros = sum(1 for v in c if v == 0)
    return Z2Polynomial(zeros, len(c) - zeros)


class Verdict(enum.Enum):
    REQUIRES_R2 = "RequiresR2"
    INCONCLUSIVE = "Inconclusive"
    DEGREE_MISMATCH = "DegreeMismatch"

    def __str__(self) -> str:
        return self.value


def r2_indicator(a: BraidWord, b: BraidWord) -> Verdict:
    """Distinct up-down maps certify that any move sequence between a and b uses R2.

    Equal maps say nothing about equivalence.
    """
    if a.n != b.n:
        return Verdict.DEGREE_MISMATCH
    if updown_map(a) != updown_map(b):
        return Verdict.REQUIRES_R2
    return Verdict.INCONCLUSIVE


def nontriviality_witness(w: BraidWord) -> tuple[int, ...] | None:
    """Lexicographically first ``x`` in {0,1}^n with ``g(x) != x``, if any."""
    g = z2_map(w)
    if any(g.c):
        return (0,) * w.n
    moved = [i for i, p in enumerate(g.perm, 1) if p != i]
    if not moved:
        return None
    x = [0] * w.n
    x[max(moved) - 1] = 1
    return tuple(x)
