"""Warping degree and up-down labelings of twisted knot diagrams.

Base points are identified with edges of the code: edge ``j`` lies just in
front of the ``j``-th non-virtual token.  A crossing is a warping crossing for
a base point when it is first met as an under pass after an even number of
bars, or as an over pass after an odd number of bars.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from . import kernels
from .gauss import (
    TwistedGaussCode,
    mirror,
    reverse_orientation,
    reversed_edge,
)


class InvalidEdge(ValueError):
    pass


class LabelingInconsistency(RuntimeError):
    """The closing equation has no solution; the warping labeling should always solve it."""


def warping_degree_at(c: TwistedGaussCode, base: int) -> int:
    """Reference scan for a single base point."""
    if not 0 <= base < c.edge_count:
        raise InvalidEdge(f"edge {base} not in 0..{c.edge_count - 1}")
    skel = c.skeleton()
    seen = set()
    odd = False
    count = 0
    for t in skel[base:] + skel[:base]:
        if t.is_bar:
            odd = not odd
        elif t.ident not in seen:
            seen.add(t.ident)
            count += (t.kind == "U") != odd
    return count


def edge_degrees(c: TwistedGaussCode) -> list[int]:
    """``d(D_a)`` for every edge, via the scan kernel."""
    kinds, ids, ncross = c.streams()
    return list(kernels.warping_degrees(kinds, ids, ncross))


def is_alternating(c: TwistedGaussCode) -> bool:
    """Passes strictly alternate over/under around the cycle (bars and virtual passes ignored)."""
    roles = [t.kind for t in c.tokens if t.is_pass]
    return bool(roles) and all(roles[k] != roles[k - 1] for k in range(len(roles)))


@dataclass
class WarpingReport:
    degrees: list[int]
    minimum: int
    argmin: int
    crossings: int
    bars: int
    has_bars: bool
    is_classical: bool
    is_alternating: bool

    def to_dict(self) -> dict:
        return asdict(self)


def warping_degree(c: TwistedGaussCode) -> WarpingReport:
    degrees = edge_degrees(c)
    low = min(degrees)
    return WarpingReport(
        degrees=degrees,
        minimum=low,
        argmin=degrees.index(low),
        crossings=c.crossing_count,
        bars=c.bar_count,
        has_bars=c.bar_count > 0,
        is_classical=c.bar_count == 0 and not c.has_virtual,
        is_alternating=is_alternating(c),
    )


def crossing_steps(c: TwistedGaussCode) -> list[int | None]:
    """Label change across each skeleton token that is a pass (``None`` for bars).

    0 when the path leaving the pass and running on to the other pass of the
    same crossing carries an odd number of bars, else +1 over / -1 under.
    """
    kinds, ids, _ = c.streams()
    parities = kernels.arc_bar_parities(kinds, ids)
    out: list[int | None] = []
    for kind, par in zip(kinds, parities):
        if kind == kernels.BAR:
            out.append(None)
        elif par:
            out.append(0)
        else:
            out.append(1 if kind == kernels.OVER else -1)
    return out


def _propagate(c: TwistedGaussCode):
    """Labels of all edges as ``a*x + b`` for label ``x`` on edge 0, plus the closing pair."""
    ncross = c.crossing_count
    steps = crossing_steps(c)
    a, b = 1, 0
    coeffs = []
    for step in steps:
        coeffs.append((a, b))
        if step is None:
            a, b = -a, ncross - b
        else:
            b += step
    if not coeffs:
        coeffs.append((1, 0))
    return coeffs, (a, b)


def warping_labeling(c: TwistedGaussCode) -> list[int]:
    """Warping labeling obtained from one scan plus the local rules.

    Independent of :func:`edge_degrees`, which scans every edge.
    """
    start = warping_degree_at(c, 0)
    coeffs, _ = _propagate(c)
    return [a * start + b for a, b in coeffs]


@dataclass
class UpDownFamily:
    kind: str  # "Unique" or "OneParameter"
    labels: list[int]  # the unique labeling, or the warping labeling as base member
    shift: list[int]  # coefficient of the free parameter on each edge (+1 or -1)
    equation: tuple[int, int]  # (a, b) with a*x + b = x on edge 0
    start_value: int | None = None  # solution on edge 0 when unique

    def to_dict(self) -> dict:
        d = asdict(self)
        d["equation"] = list(self.equation)
        return d

    def member(self, t: int) -> list[int]:
        """Labeling with ``t`` added along the shift pattern (only meaningful for OneParameter)."""
        return [v + s * t for v, s in zip(self.labels, self.shift)]


def updown_solver(c: TwistedGaussCode) -> UpDownFamily:
    coeffs, (a, b) = _propagate(c)
    shift = [ca for ca, _ in coeffs]
    if a == -1:
        if b % 2:
            raise LabelingInconsistency(f"-x + {b} = x has no integer solution for {c!r}")
        x = b // 2
        return UpDownFamily("Unique", [ca * x + cb for ca, cb in coeffs], shift, (a, b), x)
    if b != 0:
        raise LabelingInconsistency(f"x + {b} = x is inconsistent for {c!r}")
    return UpDownFamily("OneParameter", warping_labeling(c), shift, (a, b))


def satisfies_local_rules(c: TwistedGaussCode, labels: list[int]) -> bool:
    """Check the bar rule and the crossing rule between consecutive edges."""
    steps = crossing_steps(c)
    if not steps:
        return len(labels) == 1
    ncross = c.crossing_count
    size = len(steps)
    for j, step in enumerate(steps):
        before, after = labels[j], labels[(j + 1) % size]
        if step is None:
            if before + after != ncross:
                return False
        elif after - before != step:
            return False
    return True


def crossing_patterns(c: TwistedGaussCode) -> dict[int, tuple[int, int]]:
    """Per crossing id: (change on the over strand, change on the under strand)."""
    skel = c.skeleton()
    out: dict[int, list[int]] = {}
    for t, step in zip(skel, crossing_steps(c)):
        if step is not None:
            out.setdefault(t.ident, [0, 0])[0 if t.kind == "O" else 1] = step
    return {k: (v[0], v[1]) for k, v in out.items()}


ODD_PATTERNS = frozenset({(0, -1), (1, 0)})
EVEN_PATTERNS = frozenset({(1, -1), (0, 0)})


@dataclass
class Relation:
    relation: str
    holds: bool
    applies: bool  # whether the statement is claimed for this diagram
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def check_relations(c: TwistedGaussCode) -> list[Relation]:
    """Evaluate the identities and inequalities relating warping degrees of a diagram,
    its mirror image and its reverse."""
    ncross = c.crossing_count
    skel = c.skeleton()
    deg = edge_degrees(c)
    size = len(skel)
    out = []

    bad = []
    for j, t in enumerate(skel):
        if t.is_bar and deg[j] + deg[(j + 1) % size] != ncross:
            bad.append({"bar": j, "before": deg[j], "after": deg[(j + 1) % size]})
    out.append(Relation("bar_sum", not bad, True, {"violations": bad}))

    bad = []
    for j, (t, step) in enumerate(zip(skel, crossing_steps(c))):
        if step is not None and deg[(j + 1) % size] - deg[j] != step:
            bad.append({"pass": str(t), "edge": j, "expected_step": step,
                        "before": deg[j], "after": deg[(j + 1) % size]})
    out.append(Relation("crossing_step", not bad, True, {"violations": bad}))

    low = min(deg)
    out.append(Relation("half_bound", 2 * low <= ncross, c.bar_count > 0,
                        {"d": low, "crossings": ncross}))

    mdeg = edge_degrees(mirror(c))
    bad = [j for j in range(len(deg)) if deg[j] + mdeg[j] != ncross]
    out.append(Relation("mirror_sum", not bad, True, {"violations": bad, "mirror": mdeg}))
    out.append(Relation("mirror_bound", low + min(mdeg) <= ncross, True,
                        {"d": low, "d_mirror": min(mdeg), "crossings": ncross}))

    rev = reverse_orientation(c)
    rdeg = edge_degrees(rev)
    classical = c.bar_count == 0
    sums = [deg[j] + rdeg[reversed_edge(c, j)] for j in range(len(deg))]
    bad = [j for j, s in enumerate(sums) if s != ncross]
    out.append(Relation("reverse_sum", not bad, classical,
                        {"violations": bad, "sums": sums, "crossings": ncross}))
    total = low + min(rdeg) + 1
    alt = is_alternating(c)
    holds = total <= ncross and ((total == ncross) == alt)
    out.append(Relation("reverse_bound", holds, classical and ncross >= 1,
                        {"d": low, "d_reverse": min(rdeg), "crossings": ncross,
                         "equality": total == ncross, "alternating": alt}))
    return out


def knot_invariant_upper_bound(c: TwistedGaussCode) -> int:
    """``min(d(D), d(-D))``, an upper bound for the warping degree of the knot."""
    return min(min(edge_degrees(c)), min(edge_degrees(reverse_orientation(c))))


def code_t1_r1_simplify(c: TwistedGaussCode) -> TwistedGaussCode:
    """Cancel cyclically adjacent bar pairs and one-crossing kinks until none remain."""
    tokens = list(c.tokens)
    k = 0
    while len(tokens) >= 2 and k < len(tokens):
        nxt = (k + 1) % len(tokens)
        a, b = tokens[k], tokens[nxt]
        if (a.is_bar and b.is_bar) or (a.is_pass and b.is_pass and a.ident == b.ident):
            tokens = [t for m, t in enumerate(tokens) if m not in (k, nxt)]
            k = 0
        else:
            k += 1
    return TwistedGaussCode(tokens)
