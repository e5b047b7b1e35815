"""Pure-Python hot kernels.

Same call signatures and results as the compiled ``_kernels`` extension;
``ooctools._accel`` picks whichever is importable. Bitsets are plain ints
with bit ``i`` standing for vertex ``i``.
"""

from __future__ import annotations

import time

# deadline checks happen once every this many search nodes
_CHECK_EVERY = 1024


def diff_counts(a, b, v):
    """Multiplicity of each residue ``(x - y) mod v`` over ``x in a, y in b``."""
    counts = [0] * v
    for x in a:
        for y in b:
            counts[(x - y) % v] += 1
    return counts


def max_auto(a, v):
    counts = diff_counts(a, a, v)
    counts[0] = 0
    return max(counts)


def max_cross(a, b, v):
    return max(diff_counts(a, b, v))


def adjacency(reps, v, lc):
    """Bitset rows: ``j`` in row ``i`` iff every cross entry of the pair is <= lc."""
    n = len(reps)
    rows = [0] * n
    for i in range(n):
        a = reps[i]
        for j in range(i + 1, n):
            if max_cross(a, reps[j], v) <= lc:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _color_sort(p, adj):
    """Greedy sequential colouring of bitset ``p`` in ascending vertex order.

    Returns parallel lists (vertices, colours) with colours non-decreasing.
    """
    verts = []
    colors = []
    k = 0
    uncolored = p
    while uncolored:
        k += 1
        q = uncolored
        while q:
            low = q & -q
            u = low.bit_length() - 1
            q &= ~adj[u]
            q ^= low
            uncolored ^= low
            verts.append(u)
            colors.append(k)
    return verts, colors


def _n_colors(p, adj):
    k = 0
    uncolored = p
    while uncolored:
        k += 1
        q = uncolored
        while q:
            low = q & -q
            u = low.bit_length() - 1
            q &= ~adj[u]
            q ^= low
            uncolored ^= low
    return k


class _Stop(Exception):
    pass


def max_clique(adj, n, lower=0, upper=-1, deadline=-1.0):
    """Colour-bounded branch and bound for a maximum clique.

    ``adj`` must already be relabelled in the preferred branching order.
    Stops early once a clique of size ``upper`` is found (``upper < 0``
    disables this) and softly at ``deadline`` (``time.monotonic`` seconds,
    negative disables). Returns ``(clique, nodes, completed)``; ``completed``
    is False only when the deadline fired.
    """
    best = []
    best_size = lower
    nodes = 0
    current = []

    def expand(p):
        nonlocal best, best_size, nodes
        nodes += 1
        if deadline >= 0 and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Stop
        verts, colors = _color_sort(p, adj)
        for idx in range(len(verts) - 1, -1, -1):
            if len(current) + colors[idx] <= best_size:
                return
            u = verts[idx]
            current.append(u)
            child = p & adj[u]
            if child:
                expand(child)
            elif len(current) > best_size:
                best = list(current)
                best_size = len(current)
                if 0 <= upper <= best_size:
                    raise _Stop
            current.pop()
            p &= ~(1 << u)

    completed = True
    if n:
        try:
            expand((1 << n) - 1)
        except _Stop:
            completed = 0 <= upper <= best_size
    return best, nodes, completed


def lex_least_clique(adj, n, size, deadline=-1.0):
    """First clique of exactly ``size`` vertices in lexicographic index order.

    Returns ``(clique or None, nodes, completed)``.
    """
    nodes = 0
    current = []
    if size <= 0:
        return [], 0, True

    def search(p):
        nonlocal nodes
        nodes += 1
        if deadline >= 0 and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Stop
        need = size - len(current)
        if p.bit_count() < need or _n_colors(p, adj) < need:
            return False
        while p:
            if p.bit_count() < need:
                return False
            low = p & -p
            u = low.bit_length() - 1
            p ^= low
            current.append(u)
            if need == 1:
                return True
            if search(p & adj[u]):
                return True
            current.pop()
        return False

    try:
        found = search((1 << n) - 1 if n else 0)
    except _Stop:
        return None, nodes, False
    return (list(current) if found else None), nodes, True
