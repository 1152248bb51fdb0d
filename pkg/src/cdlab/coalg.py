"""Coproduct, the derivation G and the Pyr operator.

On an ab-word the coproduct deletes one letter at a time and splits the word
at the gap.  On cd-words the letters split as ``c -> 2 (1 x 1)`` and
``d -> 1 x c + c x 1``, applied one position at a time, so cd-words never need
to be expanded into the ab-alphabet.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .ncalg import AB, CD, Alphabet, AlphabetMismatch, NcPolynomial, add_into, canonical_key


class TensorPolynomial:
    """Integer combination of ordered word pairs ``left (x) right``."""

    __slots__ = ("alphabet", "_terms")

    def __init__(self, terms: Mapping[tuple[str, str], int] | Iterable = (), alphabet: Alphabet | str = CD):
        self.alphabet = Alphabet.coerce(alphabet)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[str, str], int] = {}
        for pair, k in items:
            k = clean.get(pair, 0) + int(k)
            if k:
                clean[pair] = k
            else:
                clean.pop(pair, None)
        self._terms = clean

    @property
    def terms(self) -> dict[tuple[str, str], int]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[str, str], int]]:
        return sorted(self._terms.items(), key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1])))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        if other.alphabet is not self.alphabet:
            raise AlphabetMismatch("tensor alphabets differ")
        return TensorPolynomial(list(self._terms.items()) + list(other._terms.items()), self.alphabet)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        return self.alphabet is other.alphabet and self._terms == other._terms

    __hash__ = None

    def map_slots(self, f: Callable[[NcPolynomial], NcPolynomial], alphabet: Alphabet) -> "TensorPolynomial":
        """Apply a linear map to each tensor slot."""
        out: dict[tuple[str, str], int] = {}
        for (left, right), k in self._terms.items():
            fl = f(NcPolynomial.word(left, self.alphabet))
            fr = f(NcPolynomial.word(right, self.alphabet))
            for lw, lk in fl._terms.items():
                for rw, rk in fr._terms.items():
                    out[(lw, rw)] = out.get((lw, rw), 0) + k * lk * rk
        return TensorPolynomial(out, alphabet)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (left, right), k in self.items():
            body = f"{left or '1'}⊗{right or '1'}"
            parts.append(body if k == 1 else f"{k}*({body})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorPolynomial({str(self)!r})"


def left_multiply(tensor: TensorPolynomial, u: str) -> TensorPolynomial:
    """``u * t(1) (x) t(2)``"""
    return TensorPolynomial({(u + a, b): k for (a, b), k in tensor._terms.items()}, tensor.alphabet)


def right_multiply(tensor: TensorPolynomial, v: str) -> TensorPolynomial:
    """``t(1) (x) t(2) * v``"""
    return TensorPolynomial({(a, b + v): k for (a, b), k in tensor._terms.items()}, tensor.alphabet)


@lru_cache(maxsize=None)
def coproduct_ab_terms(word: str) -> tuple[tuple[str, str, int], ...]:
    out: dict[tuple[str, str], int] = {}
    for i in range(len(word)):
        key = (word[:i], word[i + 1:])
        out[key] = out.get(key, 0) + 1
    return tuple((a, b, k) for (a, b), k in out.items())


@lru_cache(maxsize=None)
def coproduct_cd_terms(word: str) -> tuple[tuple[str, str, int], ...]:
    out: dict[tuple[str, str], int] = {}
    for i, ch in enumerate(word):
        prefix, suffix = word[:i], word[i + 1:]
        if ch == "c":
            pieces = ((prefix, suffix, 2),)
        else:
            pieces = ((prefix, "c" + suffix, 1), (prefix + "c", suffix, 1))
        for a, b, k in pieces:
            out[(a, b)] = out.get((a, b), 0) + k
    return tuple((a, b, k) for (a, b), k in out.items() if k)


def _coproduct(p: NcPolynomial | str, alphabet: Alphabet, terms_of) -> TensorPolynomial:
    if isinstance(p, str):
        p = NcPolynomial.word(p, alphabet)
    if p.alphabet is not alphabet:
        raise AlphabetMismatch(f"expected a {alphabet.value}-polynomial")
    out: dict[tuple[str, str], int] = {}
    for word, k in p._terms.items():
        for a, b, m in terms_of(word):
            out[(a, b)] = out.get((a, b), 0) + k * m
    return TensorPolynomial(out, alphabet)


def coproduct_ab(p: NcPolynomial | str) -> TensorPolynomial:
    return _coproduct(p, AB, coproduct_ab_terms)


def coproduct_cd(p: NcPolynomial | str) -> TensorPolynomial:
    return _coproduct(p, CD, coproduct_cd_terms)


def coproduct(p: NcPolynomial) -> TensorPolynomial:
    return coproduct_cd(p) if p.alphabet is CD else coproduct_ab(p)


_G_IMAGE = {"a": "ba", "b": "ab", "c": "d", "d": "cd"}


@lru_cache(maxsize=None)
def derivation_terms(word: str) -> tuple[tuple[str, int], ...]:
    out: dict[str, int] = {}
    for i, ch in enumerate(word):
        w = word[:i] + _G_IMAGE[ch] + word[i + 1:]
        out[w] = out.get(w, 0) + 1
    return tuple(out.items())


def derivation_G(p: NcPolynomial) -> NcPolynomial:
    """The derivation with a -> ba, b -> ab, c -> d, d -> cd."""
    out: dict[str, int] = {}
    for word, k in p._terms.items():
        add_into(out, dict(derivation_terms(word)), k)
    return NcPolynomial._raw(out, p.alphabet)


@lru_cache(maxsize=None)
def pyr_terms(word: str) -> tuple[tuple[str, int], ...]:
    out = dict(derivation_terms(word))
    out[word + "c"] = out.get(word + "c", 0) + 1
    return tuple((w, k) for w, k in out.items() if k)


def pyr(p: NcPolynomial) -> NcPolynomial:
    """``Pyr(u) = u*c + G(u)`` on cd-polynomials."""
    if p.alphabet is not CD:
        raise AlphabetMismatch("pyr expects a cd-polynomial")
    out: dict[str, int] = {}
    for word, k in p._terms.items():
        add_into(out, dict(pyr_terms(word)), k)
    return NcPolynomial._raw(out, CD)
