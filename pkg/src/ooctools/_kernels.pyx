# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_kernels_py`` call for call."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy

import time

cdef extern from *:
    """
    static inline int ooc_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int ooc_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    """
    int ooc_ctz(unsigned long long x) nogil
    int ooc_popcount(unsigned long long x) nogil

cdef enum:
    CHECK_EVERY = 1024


def diff_counts(a, b, Py_ssize_t v):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef long *xa = <long *> malloc(max(na, 1) * sizeof(long))
    cdef long *xb = <long *> malloc(max(nb, 1) * sizeof(long))
    cdef long *counts = <long *> calloc(v, sizeof(long))
    try:
        for i in range(na):
            xa[i] = a[i]
        for j in range(nb):
            xb[j] = b[j]
        for i in range(na):
            for j in range(nb):
                counts[(xa[i] - xb[j] + v) % v] += 1
        return [counts[i] for i in range(v)]
    finally:
        free(xa)
        free(xb)
        free(counts)


cdef long _max_diff(long *xa, Py_ssize_t na, long *xb, Py_ssize_t nb,
                    long v, long *counts, bint skip_zero) nogil:
    cdef Py_ssize_t i, j
    cdef long d, best = 0
    for i in range(na):
        for j in range(nb):
            d = xa[i] - xb[j]
            if d < 0:
                d += v
            counts[d] += 1
    for i in range(na):
        for j in range(nb):
            d = xa[i] - xb[j]
            if d < 0:
                d += v
            if counts[d] > best and not (skip_zero and d == 0):
                best = counts[d]
            counts[d] = 0
    return best


def max_auto(a, long v):
    cdef Py_ssize_t i, na = len(a)
    cdef long *xa = <long *> malloc(max(na, 1) * sizeof(long))
    cdef long *counts = <long *> calloc(v, sizeof(long))
    try:
        for i in range(na):
            xa[i] = a[i]
        return _max_diff(xa, na, xa, na, v, counts, True)
    finally:
        free(xa)
        free(counts)


def max_cross(a, b, long v):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef long *xa = <long *> malloc(max(na, 1) * sizeof(long))
    cdef long *xb = <long *> malloc(max(nb, 1) * sizeof(long))
    cdef long *counts = <long *> calloc(v, sizeof(long))
    try:
        for i in range(na):
            xa[i] = a[i]
        for i in range(nb):
            xb[i] = b[i]
        return _max_diff(xa, na, xb, nb, v, counts, False)
    finally:
        free(xa)
        free(xb)
        free(counts)


def adjacency(reps, long v, long lc):
    cdef Py_ssize_t n = len(reps)
    if n == 0:
        return []
    cdef Py_ssize_t w = len(reps[0])
    cdef Py_ssize_t words = (n + 63) // 64
    cdef Py_ssize_t i, j, k
    cdef long *flat = <long *> malloc(max(n * w, 1) * sizeof(long))
    cdef long *counts = <long *> calloc(v, sizeof(long))
    cdef uint64_t *rows = <uint64_t *> calloc(n * words, sizeof(uint64_t))
    try:
        for i in range(n):
            rep = reps[i]
            if len(rep) != w:
                raise ValueError("all representatives must share one weight")
            for k in range(w):
                flat[i * w + k] = rep[k]
        with nogil:
            for i in range(n):
                for j in range(i + 1, n):
                    if _max_diff(flat + i * w, w, flat + j * w, w, v, counts, False) <= lc:
                        rows[i * words + j // 64] |= (<uint64_t> 1) << (j % 64)
                        rows[j * words + i // 64] |= (<uint64_t> 1) << (i % 64)
        return [_to_int(rows + i * words, words) for i in range(n)]
    finally:
        free(flat)
        free(counts)
        free(rows)


cdef object _to_int(uint64_t *row, Py_ssize_t words):
    return int.from_bytes((<char *> row)[:words * 8], "little")


cdef void _from_int(object x, uint64_t *row, Py_ssize_t words):
    cdef bytes raw = x.to_bytes(words * 8, "little")
    memcpy(row, <char *> raw, words * 8)


cdef inline bint _empty(uint64_t *s, Py_ssize_t words) nogil:
    cdef Py_ssize_t k
    for k in range(words):
        if s[k]:
            return False
    return True


cdef inline Py_ssize_t _count(uint64_t *s, Py_ssize_t words) nogil:
    cdef Py_ssize_t k, c = 0
    for k in range(words):
        c += ooc_popcount(s[k])
    return c


cdef Py_ssize_t _color_sort(uint64_t *p, uint64_t *adj, Py_ssize_t words,
                            uint64_t *u_buf, uint64_t *q_buf,
                            int *verts, int *colors) nogil:
    # greedy sequential colouring in ascending vertex order; colours non-decreasing
    cdef Py_ssize_t k, m = 0, wi
    cdef int color = 0, u
    cdef uint64_t low
    memcpy(u_buf, p, words * sizeof(uint64_t))
    while not _empty(u_buf, words):
        color += 1
        memcpy(q_buf, u_buf, words * sizeof(uint64_t))
        wi = 0
        while wi < words:
            if q_buf[wi] == 0:
                wi += 1
                continue
            low = q_buf[wi] & (~q_buf[wi] + 1)
            u = <int> (wi * 64 + ooc_ctz(q_buf[wi]))
            for k in range(words):
                q_buf[k] &= ~adj[u * words + k]
            q_buf[wi] &= ~low
            u_buf[wi] &= ~low
            verts[m] = u
            colors[m] = color
            m += 1
    return m


cdef int _n_colors(uint64_t *p, uint64_t *adj, Py_ssize_t words,
                   uint64_t *u_buf, uint64_t *q_buf) nogil:
    cdef Py_ssize_t k, wi
    cdef int color = 0, u
    cdef uint64_t low
    memcpy(u_buf, p, words * sizeof(uint64_t))
    while not _empty(u_buf, words):
        color += 1
        memcpy(q_buf, u_buf, words * sizeof(uint64_t))
        wi = 0
        while wi < words:
            if q_buf[wi] == 0:
                wi += 1
                continue
            low = q_buf[wi] & (~q_buf[wi] + 1)
            u = <int> (wi * 64 + ooc_ctz(q_buf[wi]))
            for k in range(words):
                q_buf[k] &= ~adj[u * words + k]
            q_buf[wi] &= ~low
            u_buf[wi] &= ~low
    return color


cdef struct Search:
    uint64_t *adj
    Py_ssize_t n
    Py_ssize_t words
    int *current
    int depth
    int *best
    int best_size
    int upper
    double deadline
    long long nodes
    bint stopped
    bint timed_out
    uint64_t *scratch      # (n + 2) * words per-level candidate sets, then two colouring buffers
    int *verts             # (n + 1) * n
    int *colors            # (n + 1) * n


cdef bint _past_deadline(Search *s) with gil:
    return time.monotonic() > s.deadline


cdef void _expand(Search *s, int level) nogil:
    cdef Py_ssize_t words = s.words, k, m, idx
    cdef uint64_t *p = s.scratch + level * words
    cdef uint64_t *child = s.scratch + (level + 1) * words
    cdef uint64_t *ubuf = s.scratch + (s.n + 2) * words
    cdef uint64_t *qbuf = ubuf + words
    cdef int *verts = s.verts + level * s.n
    cdef int *colors = s.colors + level * s.n
    cdef int u
    cdef bint nonempty
    s.nodes += 1
    if s.deadline >= 0 and s.nodes % CHECK_EVERY == 0 and _past_deadline(s):
        s.stopped = True
        s.timed_out = True
        return
    m = _color_sort(p, s.adj, words, ubuf, qbuf, verts, colors)
    idx = m - 1
    while idx >= 0:
        if s.depth + colors[idx] <= s.best_size:
            return
        u = verts[idx]
        s.current[s.depth] = u
        s.depth += 1
        nonempty = False
        for k in range(words):
            child[k] = p[k] & s.adj[u * words + k]
            if child[k]:
                nonempty = True
        if nonempty:
            _expand(s, level + 1)
            if s.stopped:
                return
        elif s.depth > s.best_size:
            memcpy(s.best, s.current, s.depth * sizeof(int))
            s.best_size = s.depth
            if 0 <= s.upper <= s.best_size:
                s.stopped = True
                return
        s.depth -= 1
        p[u // 64] &= ~((<uint64_t> 1) << (u % 64))
        idx -= 1


cdef bint _alloc(Search *s, list adj, Py_ssize_t n):
    cdef Py_ssize_t i, words = (n + 63) // 64
    s.n = n
    s.words = words
    s.adj = <uint64_t *> calloc(max(n * words, 1), sizeof(uint64_t))
    s.scratch = <uint64_t *> calloc((n + 4) * words + 1, sizeof(uint64_t))
    s.current = <int *> calloc(n + 1, sizeof(int))
    s.best = <int *> calloc(n + 1, sizeof(int))
    s.verts = <int *> calloc((n + 1) * n + 1, sizeof(int))
    s.colors = <int *> calloc((n + 1) * n + 1, sizeof(int))
    if not (s.adj and s.scratch and s.current and s.best and s.verts and s.colors):
        return False
    for i in range(n):
        _from_int(adj[i], s.adj + i * words, words)
    for i in range(n):
        s.scratch[i // 64] |= (<uint64_t> 1) << (i % 64)
    s.depth = 0
    s.nodes = 0
    s.stopped = False
    s.timed_out = False
    return True


cdef void _release(Search *s):
    free(s.adj)
    free(s.scratch)
    free(s.current)
    free(s.best)
    free(s.verts)
    free(s.colors)


def max_clique(list adj, Py_ssize_t n, int lower=0, int upper=-1, double deadline=-1.0):
    cdef Search s
    if n == 0:
        return [], 0, True
    if not _alloc(&s, adj, n):
        _release(&s)
        raise MemoryError
    try:
        s.best_size = lower
        s.upper = upper
        s.deadline = deadline
        _expand(&s, 0)
        clique = [s.best[i] for i in range(s.best_size)] if s.best_size > lower else []
        return clique, s.nodes, not s.timed_out
    finally:
        _release(&s)


cdef int _lex_search(Search *s, int level, int size) nogil:
    # 1 found, 0 exhausted, -1 deadline
    cdef Py_ssize_t words = s.words, k, wi
    cdef uint64_t *p = s.scratch + level * words
    cdef uint64_t *child = s.scratch + (level + 1) * words
    cdef uint64_t *ubuf = s.scratch + (s.n + 2) * words
    cdef uint64_t *qbuf = ubuf + words
    cdef int need = size - s.depth, u, r
    cdef uint64_t low
    s.nodes += 1
    if s.deadline >= 0 and s.nodes % CHECK_EVERY == 0 and _past_deadline(s):
        return -1
    if _count(p, words) < need or _n_colors(p, s.adj, words, ubuf, qbuf) < need:
        return 0
    wi = 0
    while wi < words:
        if p[wi] == 0:
            wi += 1
            continue
        if _count(p, words) < need:
            return 0
        low = p[wi] & (~p[wi] + 1)
        u = <int> (wi * 64 + ooc_ctz(p[wi]))
        p[wi] &= ~low
        s.current[s.depth] = u
        s.depth += 1
        if need == 1:
            return 1
        for k in range(words):
            child[k] = p[k] & s.adj[u * words + k]
        r = _lex_search(s, level + 1, size)
        if r != 0:
            return r
        s.depth -= 1
    return 0


def lex_least_clique(list adj, Py_ssize_t n, int size, double deadline=-1.0):
    cdef Search s
    cdef int r
    if size <= 0:
        return [], 0, True
    if n == 0:
        return None, 1, True
    if not _alloc(&s, adj, n):
        _release(&s)
        raise MemoryError
    try:
        s.deadline = deadline
        r = _lex_search(&s, 0, size)
        if r < 0:
            return None, s.nodes, False
        if r == 0:
            return None, s.nodes, True
        return [s.current[i] for i in range(s.depth)], s.nodes, True
    finally:
        _release(&s)
