"""Pure-Python versions of the scan kernels.

Token streams are parallel integer sequences: ``kinds`` holds BAR, OVER or
UNDER for every non-virtual token of a cyclic word and ``ids`` holds the
crossing id (0-based, ``-1`` for bars).
"""

BAR, OVER, UNDER = 0, 1, 2


def warping_degrees(kinds, ids, ncross):
    """Warping degree for the base point in front of every token."""
    size = len(kinds)
    if size == 0:
        return [0]
    out = []
    for base in range(size):
        seen = [False] * ncross
        odd = 0
        count = 0
        for t in range(size):
            k = base + t
            if k >= size:
                k -= size
            kind = kinds[k]
            if kind == BAR:
                odd ^= 1
                continue
            c = ids[k]
            if seen[c]:
                continue
            seen[c] = True
            if (kind == UNDER) != bool(odd):
                count += 1
        out.append(count)
    return out


def arc_bar_parities(kinds, ids):
    """For each pass, parity of the bars met walking forward until the crossing recurs.

    A crossing id occurring only once in the stream closes up after a full turn.
    Bars get ``-1``.
    """
    size = len(kinds)
    prefix = [0] * (size + 1)
    for k in range(size):
        prefix[k + 1] = prefix[k] + (kinds[k] == BAR)
    total = prefix[size]
    where = {}
    for k in range(size):
        if kinds[k] != BAR:
            where.setdefault(ids[k], []).append(k)
    out = [-1] * size
    for occ in where.values():
        if len(occ) == 1:
            out[occ[0]] = total & 1
        else:
            p, q = occ
            inner = prefix[q] - prefix[p + 1]
            out[p] = inner & 1
            out[q] = (total - inner) & 1
    return out
