"""Left-greedy normal form for braid words.

A braid word is rewritten as Delta^d f_1 ... f_m where Delta is the
half twist, each factor f_k is a permutation braid (every pair of
strands crosses at most once, so the factor is described by its
permutation alone), no factor is trivial or the full twist w0, and the
sequence is left weighted: the finishing set of f_k contains the
starting set of f_{k+1}.  That data is unique, so braids are compared by
comparing it.

The permutation conventions follow `perms`: one-line tuples are
0-based and `compose(p, q)` applies p first.  Under that convention the
starting set of a factor is `left_descents` and the finishing set is
`right_descents`, letter sigma_i contributes the adjacent transposition
at 0-based position i - 1, and tau(p) = w0 p w0 is the conjugation that
carries a factor through one power of Delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import perms
from .perms import Perm
from .words import BraidWord, delta_word


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy data: strand count, Delta exponent, proper factors."""

    n: int
    delta_power: int
    factors: tuple[Perm, ...]

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def _tau(p: Perm, w0: Perm) -> Perm:
    return perms.compose(perms.compose(w0, p), w0)


def _left_weighted(factors: list[Perm], n: int) -> list[Perm]:
    """Slide letters leftward until every adjacent pair is left weighted.

    A transfer moves one adjacent transposition from the head of a
    factor to the tail of its left neighbour.  Each transfer shifts
    length toward lower positions, so the sweep loop terminates.
    """
    identity = perms.identity(n)
    facs = [p for p in factors if p != identity]
    changed = True
    while changed:
        changed = False
        for k in range(len(facs) - 1):
            a, b = facs[k], facs[k + 1]
            while True:
                movable = perms.left_descents(b) - perms.right_descents(a)
                if not movable:
                    break
                i = min(movable)
                a = perms.swap_values(a, i)
                b = perms.swap_positions(b, i)
                changed = True
            facs[k], facs[k + 1] = a, b
        if changed:
            facs = [p for p in facs if p != identity]
    return facs


def normal_form(w: BraidWord) -> NormalForm:
    n = w.n
    w0 = perms.longest(n)
    # One factor per letter, negative letters borrowing an inverse half
    # twist: sigma_i^-1 = Delta^-1 (Delta sigma_i^-1) and the bracketed
    # braid is the permutation braid w0 with values i-1, i exchanged.
    pows: list[int] = []
    raw: list[Perm] = []
    for index, sign in w.letters:
        if sign == 1:
            pows.append(0)
            raw.append(perms.transposition(n, index - 1))
        else:
            pows.append(-1)
            raw.append(perms.swap_values(w0, index - 1))
    # Float every Delta power to the front; a factor is twisted by tau
    # once for each Delta passing through it from the right.
    total = sum(pows)
    suffix = 0
    factors: list[Perm] = []
    for k in range(len(raw) - 1, -1, -1):
        factors.append(_tau(raw[k], w0) if suffix % 2 else raw[k])
        suffix += pows[k]
    factors.reverse()

    factors = _left_weighted(factors, n)
    while factors and factors[0] == w0:
        factors.pop(0)
        total += 1
    return NormalForm(n, total, tuple(factors))


@lru_cache(maxsize=1 << 20)
def _cached_form(w: BraidWord) -> NormalForm:
    return normal_form(w)


def equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide equality in the braid group via normal forms."""
    if u.n != v.n:
        return False
    return _cached_form(u) == _cached_form(v)


def canonical_key(w: BraidWord) -> str:
    """Stable text key, equal for exactly the words equal as braids."""
    nf = _cached_form(w)
    body = "|".join(
        ",".join(str(v + 1) for v in f) for f in nf.factors
    )
    return f"{nf.n}:{nf.delta_power}:{body}"


def _factor_word(p: Perm) -> list[tuple[int, int]]:
    letters: list[tuple[int, int]] = []
    q = p
    while True:
        starts = perms.left_descents(q)
        if not starts:
            break
        i = min(starts)
        letters.append((i + 1, 1))
        q = perms.swap_positions(q, i)
    return letters


def to_word(nf: NormalForm) -> BraidWord:
    """A braid word spelling the normal form back out.

    Delta powers are spelt with the standard half-twist word, factors by
    greedily reading off descents, so the output is deterministic.
    """
    letters: list[tuple[int, int]] = []
    if nf.delta_power:
        half = delta_word(nf.n).letters
        if nf.delta_power < 0:
            half = tuple((i, -s) for i, s in reversed(half))
        letters.extend(half * abs(nf.delta_power))
    for f in nf.factors:
        letters.extend(_factor_word(f))
    return BraidWord(nf.n, tuple(letters))
