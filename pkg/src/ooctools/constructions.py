"""Explicit OOC families. Every constructor brute-force verifies its output
against the advertised parameters before returning it."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Codeword, OocError, OocFamily, verify_ooc
from .primes import is_prime, multiplicative_order


class ConstructionError(RuntimeError):
    """A constructed family failed its own verification (an internal bug)."""


@dataclass(frozen=True)
class ConstructionRecipe:
    family: str
    params: tuple[int, ...]
    expected: tuple[int, int, int, int, int] | None  # (v, w, la, lc, N); None = measured

    def check(self, f: OocFamily) -> OocFamily:
        if self.expected is None:
            return f
        v, w, la, lc, n = self.expected
        report = verify_ooc(f, la, lc)
        if (f.v, f.w, f.n) != (v, w, n) or not report:
            raise ConstructionError(f"{self.family}{self.params} failed verification: {report.violations[:3]}")
        if (f.lambda_a, f.lambda_c) != (la, lc):
            raise ConstructionError(
                f"{self.family}{self.params}: advertised ({la},{lc}) not attained, "
                f"measured ({f.lambda_a},{f.lambda_c})"
            )
        return f


def _family(v, supports):
    return OocFamily(v, tuple(Codeword.of(v, s) for s in supports))


def _block_sets(v, w):
    if w < 1 or v < 2 or v % w or (w * w) % v:
        raise OocError(f"block construction needs w | v and v | w^2 (v={v}, w={w})")
    lc = w * w // v
    x = range(w)
    y = [d * w + j for d in range(v // w) for j in range(lc)]
    return x, y, lc


def construct_block(v: int, w: int) -> OocFamily:
    """``X = {0..w-1}`` and ``Y`` = runs of ``w^2/v`` ones at the start of each
    length-``w`` block; a ``(v, w, w, w^2/v)``-OOC."""
    x, y, lc = _block_sets(v, w)
    f = _family(v, [x, y])
    return ConstructionRecipe("block", (v, w), (v, w, w, lc, 2)).check(f)


def construct_appended(v: int, w: int) -> OocFamily:
    """The block pair with a 0 appended to each sequence: length ``v + 1``."""
    x, y, _ = _block_sets(v, w)
    lc = -(-w * w // (v + 1))
    f = _family(v + 1, [x, y])
    return ConstructionRecipe("appended", (v, w), (v + 1, w, w - 1, lc, 2)).check(f)


def construct_powers_of_two(n: int) -> OocFamily:
    """``X_i`` for ``i = 1..n``: square waves of period ``2^i`` starting with
    ``2^(i-1)`` ones; a ``(2^n, 2^(n-1), 2^(n-1), 2^(n-2))``-OOC."""
    if n <= 1:
        raise OocError("powers-of-two construction needs N > 1")
    v = 2**n
    supports = [[t for t in range(v) if t % 2**i < 2 ** (i - 1)] for i in range(1, n + 1)]
    f = _family(v, supports)
    return ConstructionRecipe("powers_of_two", (n,), (v, v // 2, v // 2, v // 4, n)).check(f)


def construct_t_family(m: int) -> OocFamily:
    """``T_i = {0, i, m-i, m+i, 2m-i}`` in ``Z_2m`` for ``i = 1..(m-1)/2``."""
    if m % 2 == 0 or m <= 3:
        raise OocError(f"T-family needs odd m > 3, got {m}")
    v = 2 * m
    supports = [[0, i, m - i, m + i, 2 * m - i] for i in range(1, (m - 1) // 2 + 1)]
    f = _family(v, supports)
    return ConstructionRecipe("t_family", (m,), (v, 5, 4, 3, (m - 1) // 2)).check(f)


def construct_cosets(p: int, g: int) -> OocFamily:
    """The multiplicative cosets of ``<g>`` in ``Z_p^*``, ordered by least element.

    Correlation values are measured, not assumed.
    """
    if not is_prime(p):
        raise OocError(f"{p} is not prime")
    if g % p == 0:
        raise OocError("generator must be a unit")
    w = multiplicative_order(g, p)
    subgroup = [pow(g, k, p) for k in range(w)]
    seen: set[int] = set()
    cosets = []
    for c in range(1, p):
        if c not in seen:
            coset = [c * h % p for h in subgroup]
            seen.update(coset)
            cosets.append(coset)
    f = _family(p, cosets)
    if f.n != (p - 1) // w or len(seen) != p - 1:
        raise ConstructionError("cosets do not partition the nonzero residues")
    return f


def construct_paley(p: int) -> OocFamily:
    """Nonzero squares and non-squares of GF(p), ``p = 1 (mod 4)``; a
    ``(p, (p-1)/2, (p-1)/4, (p-1)/4)``-OOC."""
    if not is_prime(p) or p % 4 != 1:
        raise OocError(f"Paley construction needs a prime p = 1 (mod 4), got {p}")
    squares = sorted({x * x % p for x in range(1, p)})
    rest = sorted(set(range(1, p)) - set(squares))
    f = _family(p, [squares, rest])
    k = (p - 1) // 4
    return ConstructionRecipe("paley", (p,), (p, (p - 1) // 2, k, k, 2)).check(f)


RECIPES = {
    "block": (construct_block, 2),
    "appended": (construct_appended, 2),
    "powers_of_two": (construct_powers_of_two, 1),
    "t_family": (construct_t_family, 1),
    "cosets": (construct_cosets, 2),
    "paley": (construct_paley, 1),
}


def construct(family: str, *params: int) -> OocFamily:
    try:
        fn, arity = RECIPES[family]
    except KeyError:
        raise OocError(f"unknown family {family!r}; choose from {sorted(RECIPES)}") from None
    if len(params) != arity:
        raise OocError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)
