"""Exact search for largest OOCs as a maximum-clique problem.

Vertices are shift-orbit representatives meeting the auto-correlation bound;
two vertices are adjacent when every relative shift keeps their collisions
within the cross-correlation bound. A clique is then an OOC.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from . import _accel
from .bounds import johnson_bound, upper_int
from .core import Codeword, OocError, OocFamily, max_auto, verify_ooc


def _is_least_translate(rest: tuple[int, ...], v: int) -> bool:
    # candidate is (0,) + rest; compare against every translate that keeps a 0
    cand = (0,) + rest
    for q in rest:
        t = sorted((x - q) % v for x in cand)
        if tuple(t) < cand:
            return False
    return True


def enumerate_orbit_reps(v: int, w: int) -> list[Codeword]:
    """One codeword per shift orbit of ``w``-subsets of ``Z_v``: the
    lexicographically least translate. Short orbits are included; their
    ``period`` is below ``v``."""
    if not 1 <= w <= v:
        raise OocError(f"need 1 <= w <= v, got w={w}, v={v}")
    return [
        Codeword(v, (0,) + rest)
        for rest in combinations(range(1, v), w - 1)
        if _is_least_translate(rest, v)
    ]


@dataclass(frozen=True)
class CompatibilityGraph:
    v: int
    w: int
    lambda_a: int
    lambda_c: int
    vertices: tuple[Codeword, ...]
    adjacency: tuple[int, ...]  # bitset rows

    @property
    def order(self) -> int:
        return len(self.vertices)

    def neighbours(self, i: int) -> list[int]:
        row = self.adjacency[i]
        return [j for j in range(self.order) if row >> j & 1]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)


def build_graph(v: int, w: int, lambda_a: int, lambda_c: int, include_short: bool = False) -> CompatibilityGraph:
    if w > 1 and lambda_a < 1:
        raise OocError("lambda_a = 0 forces w = 1")
    reps = [
        c
        for c in enumerate_orbit_reps(v, w)
        if (include_short or c.period == v) and max_auto(c) <= lambda_a
    ]
    adj = _accel.kernels.adjacency([c.support for c in reps], v, lambda_c)
    return CompatibilityGraph(v, w, lambda_a, lambda_c, tuple(reps), tuple(adj))


@dataclass(frozen=True)
class SearchResult:
    size: int
    clique: tuple[int, ...]
    witness: OocFamily | None
    exhaustive: bool
    nodes: int
    elapsed: float
    backend: str

    @property
    def phi(self) -> int:
        return self.size


def _degree_order(adj: list[int], n: int) -> list[int]:
    return sorted(range(n), key=lambda i: (-adj[i].bit_count(), i))


def _relabel(adj: list[int], order: list[int]) -> list[int]:
    pos = {old: new for new, old in enumerate(order)}
    out = []
    for old in order:
        row = adj[old]
        new_row = 0
        while row:
            low = row & -row
            new_row |= 1 << pos[low.bit_length() - 1]
            row ^= low
        out.append(new_row)
    return out


def max_clique(
    g: CompatibilityGraph,
    budget: float | None = None,
    upper_bound: int | None = None,
    kernels=None,
) -> SearchResult:
    """Deterministic branch and bound with greedy-colouring bounds.

    A first pass on a degree-ordered relabelling finds the clique number; a
    second pass walks vertices in index order and returns the
    lexicographically least clique of that size. ``upper_bound`` (when
    known, e.g. the Johnson bound) lets the first pass stop as soon as it is
    met, which still proves optimality. ``budget`` is a soft wall-clock
    limit in seconds; when it fires the best clique found so far is returned
    with ``exhaustive=False``.
    """
    k = kernels or _accel.kernels
    backend = "cython" if k is _accel.compiled else "python"
    start = time.monotonic()
    deadline = start + budget if budget is not None else -1.0
    n = g.order
    adj = list(g.adjacency)
    order = _degree_order(adj, n)
    relabelled = _relabel(adj, order)
    ub = -1 if upper_bound is None else upper_bound
    found, nodes, completed = k.max_clique(relabelled, n, 0, ub, deadline)
    best = sorted(order[i] for i in found)
    if completed and best:
        lex, more, done = k.lex_least_clique(adj, n, len(best), deadline)
        nodes += more
        if done and lex is not None:
            best = lex
        completed = done
    clique = tuple(best)
    witness = OocFamily(g.v, tuple(g.vertices[i] for i in clique)) if clique else None
    return SearchResult(len(clique), clique, witness, completed, nodes, time.monotonic() - start, backend)


def phi_search(
    v: int,
    w: int,
    lambda_a: int,
    lambda_c: int,
    budget: float | None = None,
    use_johnson: bool = True,
    include_short: bool = False,
    kernels=None,
) -> SearchResult:
    """Largest non-degenerate ``(v, w, lambda_a, lambda_c)``-OOC found by
    clique search; the witness is re-verified before returning."""
    start = time.monotonic()
    g = build_graph(v, w, lambda_a, lambda_c, include_short=include_short)
    ub = None
    # the Johnson bound only covers non-degenerate families
    if use_johnson and not include_short and w > max(lambda_a, lambda_c):
        ub = upper_int(johnson_bound(v, w, lambda_a, lambda_c))
    remaining = None if budget is None else max(0.0, budget - (time.monotonic() - start))
    res = max_clique(g, budget=remaining, upper_bound=ub, kernels=kernels)
    if res.witness is not None and not verify_ooc(res.witness, lambda_a, lambda_c):
        raise RuntimeError("search witness failed verification")
    return SearchResult(
        res.size, res.clique, res.witness, res.exhaustive, res.nodes, time.monotonic() - start, res.backend
    )
