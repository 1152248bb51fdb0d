"""The diamond product of ab- and cd-polynomials.

The product is bilinear.  On words it is computed by peeling the last letter
of the right factor::

    u <> (w a) = (u <> w) a + sum (u1 <> w) ab u2
    u <> (w b) = (u <> w) b + sum (u1 <> w) ba u2
    u <> (w c) = (u <> w) c + sum (u1 <> w) d u2
    u <> (w d) = (u <> w) d + sum (u1 <> w) d Pyr(u2)

where the sums run over the coproduct of ``u`` and ``u <> 1 = u``.
"""

from __future__ import annotations

from functools import lru_cache

from .coalg import coproduct_ab_terms, coproduct_cd_terms, pyr_terms
from .ncalg import AB, CD, AlphabetMismatch, NcPolynomial, add_into

# Word-level results are cached by the ordered pair (u, v).  The cached dicts
# are shared and must never be mutated by callers.


@lru_cache(maxsize=None)
def diamond_ab_words(u: str, v: str) -> dict[str, int]:
    if not v:
        return {u: 1}
    w, last = v[:-1], v[-1]
    middle = "ab" if last == "a" else "ba"
    out: dict[str, int] = {}
    add_into(out, diamond_ab_words(u, w), suffix=last)
    for left, right, k in coproduct_ab_terms(u):
        add_into(out, diamond_ab_words(left, w), k, suffix=middle + right)
    return out


@lru_cache(maxsize=None)
def diamond_cd_words(u: str, v: str) -> dict[str, int]:
    if not v:
        return {u: 1}
    w, last = v[:-1], v[-1]
    out: dict[str, int] = {}
    add_into(out, diamond_cd_words(u, w), suffix=last)
    for left, right, k in coproduct_cd_terms(u):
        inner = diamond_cd_words(left, w)
        if last == "c":
            add_into(out, inner, k, suffix="d" + right)
        else:
            for tail, m in pyr_terms(right):
                add_into(out, inner, k * m, suffix="d" + tail)
    return out


def clear_cache() -> None:
    diamond_ab_words.cache_clear()
    diamond_cd_words.cache_clear()


def _bilinear(u: NcPolynomial, v: NcPolynomial, word_product) -> dict[str, int]:
    out: dict[str, int] = {}
    for x, i in u._terms.items():
        for y, j in v._terms.items():
            add_into(out, word_product(x, y), i * j)
    return out


def diamond_ab(u: NcPolynomial, v: NcPolynomial) -> NcPolynomial:
    if u.alphabet is not AB or v.alphabet is not AB:
        raise AlphabetMismatch("diamond_ab expects two ab-polynomials")
    return NcPolynomial._raw(_bilinear(u, v, diamond_ab_words), AB)


def diamond_cd(u: NcPolynomial, v: NcPolynomial) -> NcPolynomial:
    if u.alphabet is not CD or v.alphabet is not CD:
        raise AlphabetMismatch("diamond_cd expects two cd-polynomials")
    return NcPolynomial._raw(_bilinear(u, v, diamond_cd_words), CD)


def diamond(u: NcPolynomial, v: NcPolynomial) -> NcPolynomial:
    """Diamond product, dispatching on the (shared) alphabet."""
    if u.alphabet is not v.alphabet:
        raise AlphabetMismatch("diamond product of polynomials over different alphabets")
    return diamond_cd(u, v) if u.alphabet is CD else diamond_ab(u, v)
