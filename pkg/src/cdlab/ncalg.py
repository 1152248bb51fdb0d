"""Noncommutative polynomials over the ab- and cd-alphabets.

Words are plain strings (``"abba"``, ``"cddc"``); the empty string is the
unit word and prints as ``1``.  Coefficients are Python integers, so there is
no overflow at any degree.

In the ab-alphabet both letters have degree 1.  In the cd-alphabet ``c`` has
degree 1 and ``d`` has degree 2, matching the substitution ``c = a + b``,
``d = ab + ba``.
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, Iterator, Mapping


class Alphabet(enum.Enum):
    AB = "ab"
    CD = "cd"

    @property
    def letters(self) -> str:
        return self.value

    def letter_degree(self, letter: str) -> int:
        if letter not in self.value:
            raise ValueError(f"letter {letter!r} is not in alphabet {self.value}")
        return 2 if letter == "d" else 1

    def word_degree(self, word: str) -> int:
        if self is Alphabet.CD:
            return len(word) + word.count("d")
        return len(word)

    @classmethod
    def coerce(cls, value: "Alphabet | str") -> "Alphabet":
        if isinstance(value, Alphabet):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown alphabet {value!r}; expected 'ab' or 'cd'") from None


AB = Alphabet.AB
CD = Alphabet.CD


class AlphabetMismatch(ValueError):
    pass


class NotExpressible(ValueError):
    """The ab-polynomial is not in the span of expanded cd-words."""


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def word_degree(word: str) -> int:
    """Degree of a word, inferring the alphabet from its letters."""
    return len(word) + word.count("d")


def canonical_key(word: str) -> tuple[int, str]:
    # graded, then lexicographic with a < b and c < d
    return (len(word) + word.count("d"), word)


def words_of_degree(alphabet: Alphabet, n: int) -> list[str]:
    """All words of exact degree ``n`` in canonical order."""
    if n < 0:
        return []
    if alphabet is AB:
        out = [""]
        for _ in range(n):
            out = [w + x for w in out for x in "ab"]
        return out
    table: list[list[str]] = [[""], ["c"]]
    for k in range(2, n + 1):
        table.append([w + "c" for w in table[k - 1]] + [w + "d" for w in table[k - 2]])
    return sorted(table[n])


def words_up_to(alphabet: Alphabet, n: int) -> list[str]:
    return [w for k in range(n + 1) for w in words_of_degree(alphabet, k)]


def _check_word(word: str, alphabet: Alphabet) -> None:
    for ch in word:
        if ch not in alphabet.value:
            raise AlphabetMismatch(f"letter {ch!r} in word {word!r} is not in alphabet {alphabet.value}")


class NcPolynomial:
    """An integer combination of words over a single alphabet.

    Instances are immutable.  Zero coefficients are dropped on construction.
    """

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, terms: Mapping[str, int] | Iterable[tuple[str, int]] = (), alphabet: Alphabet | str = CD):
        alphabet = Alphabet.coerce(alphabet)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[str, int] = {}
        for word, coeff in items:
            _check_word(word, alphabet)
            coeff = clean.get(word, 0) + int(coeff)
            if coeff:
                clean[word] = coeff
            else:
                clean.pop(word, None)
        self.alphabet = alphabet
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[str, int], alphabet: Alphabet) -> "NcPolynomial":
        # trusted constructor for internal use; terms must already be clean
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def word(cls, word: str, alphabet: Alphabet | str = CD, coeff: int = 1) -> "NcPolynomial":
        return cls({word: coeff}, alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet | str = CD) -> "NcPolynomial":
        return cls({"": 1}, alphabet)

    @classmethod
    def zero(cls, alphabet: Alphabet | str = CD) -> "NcPolynomial":
        return cls({}, alphabet)

    @property
    def terms(self) -> dict[str, int]:
        """A copy of the word -> coefficient map."""
        return dict(self._terms)

    def items(self) -> list[tuple[str, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def words(self) -> list[str]:
        return [w for w, _ in self.items()]

    def coefficient(self, word: str) -> int:
        return self._terms.get(word, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({self.alphabet.word_degree(w) for w in self._terms}) <= 1

    def degree(self) -> int:
        """Largest degree of a term; -1 for the zero polynomial."""
        return max((self.alphabet.word_degree(w) for w in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self.items())

    def _coerce_other(self, other) -> "NcPolynomial":
        if isinstance(other, int):
            return NcPolynomial({"": other}, self.alphabet)
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        if other.alphabet is not self.alphabet:
            raise AlphabetMismatch(f"cannot combine {self.alphabet.value}- and {other.alphabet.value}-polynomials")
        return other

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, k in other._terms.items():
            k += out.get(w, 0)
            if k:
                out[w] = k
            else:
                del out[w]
        return NcPolynomial._raw(out, self.alphabet)

    __radd__ = __add__

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial._raw({w: -k for w, k in self._terms.items()}, self.alphabet)

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return NcPolynomial.zero(self.alphabet)
            return NcPolynomial._raw({w: k * other for w, k in self._terms.items()}, self.alphabet)
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({"": other} if other else {})
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return self.alphabet is other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"NcPolynomial({str(self)!r}, {self.alphabet.value!r})"

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.value,
            "terms": [{"word": w, "coeff": k} for w, k in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "NcPolynomial":
        alphabet = Alphabet.coerce(data["alphabet"])
        return cls([(t["word"], int(t["coeff"])) for t in data["terms"]], alphabet)


def multiply(p: NcPolynomial, q: NcPolynomial) -> NcPolynomial:
    """Concatenation product, extended bilinearly."""
    if p.alphabet is not q.alphabet:
        raise AlphabetMismatch(f"cannot multiply {p.alphabet.value}- and {q.alphabet.value}-polynomials")
    out: dict[str, int] = {}
    for u, x in p._terms.items():
        for v, y in q._terms.items():
            w = u + v
            k = out.get(w, 0) + x * y
            if k:
                out[w] = k
            else:
                del out[w]
    return NcPolynomial._raw(out, p.alphabet)


def add_into(acc: dict[str, int], terms: Mapping[str, int], scale: int = 1, prefix: str = "", suffix: str = "") -> None:
    """``acc += scale * prefix * terms * suffix`` on raw term dictionaries."""
    for w, k in terms.items():
        key = prefix + w + suffix
        k = acc.get(key, 0) + scale * k
        if k:
            acc[key] = k
        else:
            del acc[key]


_EXPAND = {"c": (("a", 1), ("b", 1)), "d": (("ab", 1), ("ba", 1))}


def _expand_word(word: str) -> dict[str, int]:
    out = {"": 1}
    for ch in word:
        nxt: dict[str, int] = {}
        for w, k in out.items():
            for piece, m in _EXPAND[ch]:
                key = w + piece
                nxt[key] = nxt.get(key, 0) + k * m
        out = nxt
    return out


def expand_cd_to_ab(p: NcPolynomial) -> NcPolynomial:
    """Apply the ring map c -> a+b, d -> ab+ba."""
    if p.alphabet is not CD:
        raise AlphabetMismatch("expand_cd_to_ab expects a cd-polynomial")
    out: dict[str, int] = {}
    for word, k in p._terms.items():
        add_into(out, _expand_word(word), k)
    return NcPolynomial._raw(out, AB)


def _leading_cd_word(ab_word: str) -> str | None:
    # inverse of c -> a, d -> ab, the lexicographically least term of an expansion
    out = []
    i = 0
    n = len(ab_word)
    while i < n:
        if ab_word[i] != "a":
            return None
        if i + 1 < n and ab_word[i + 1] == "b":
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def convert_ab_to_cd(p: NcPolynomial) -> NcPolynomial:
    """Rewrite an ab-polynomial in terms of c = a+b and d = ab+ba.

    Raises NotExpressible when ``p`` is not in the span of the expanded
    cd-words (e.g. the ab-index of a non-Eulerian poset).
    """
    if p.alphabet is not AB:
        raise AlphabetMismatch("convert_ab_to_cd expects an ab-polynomial")
    remainder = dict(p._terms)
    result: dict[str, int] = {}
    while remainder:
        lead = min(remainder, key=canonical_key)
        cd_word = _leading_cd_word(lead)
        if cd_word is None:
            raise NotExpressible(f"term {lead!r} cannot be the leading term of a cd-word expansion")
        coeff = remainder[lead]
        result[cd_word] = coeff
        add_into(remainder, _expand_word(cd_word), -coeff)
    return NcPolynomial._raw(result, CD)


def format_polynomial(p: NcPolynomial) -> str:
    """Canonical text form, e.g. ``cc + 2*d`` or ``a - 3*bb``."""
    items = p.items()
    if not items:
        return "0"
    parts = []
    for i, (word, k) in enumerate(items):
        body = word or "1"
        mag = abs(k)
        if word:
            text = body if mag == 1 else f"{mag}*{body}"
        else:
            text = str(mag)
        if i == 0:
            parts.append(text if k > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if k > 0 else f"- {text}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z]+)|(?P<op>[+\-*])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise PolynomialSyntaxError(f"unexpected character {m.group(kind)!r}", text, start)
        yield kind, m.group(kind), start
        pos = m.end()


def parse_polynomial(text: str, alphabet: Alphabet | str = CD) -> NcPolynomial:
    """Parse ``3*cddc + 2*cdcd``-style input.

    ``1`` denotes the empty word and a bare integer ``k`` means ``k*1``.
    Terms may be joined by ``-`` as well as ``+``, and coefficients may carry
    a leading minus (``a + -2*b``).  ``0`` parses to the zero polynomial.
    """
    alphabet = Alphabet.coerce(alphabet)
    toks = list(_tokens(text))
    toks.append(("end", "", len(text)))
    terms: list[tuple[str, int]] = []
    i = 0

    def expect_term(sign: int) -> None:
        nonlocal i
        kind, val, pos = toks[i]
        if kind == "op" and val == "-":
            sign = -sign
            i += 1
            kind, val, pos = toks[i]
        coeff = 1
        if kind == "int":
            coeff = int(val)
            i += 1
            kind, val, pos = toks[i]
            if kind == "op" and val == "*":
                i += 1
                kind, val, pos = toks[i]
                if kind == "int" and val == "1":
                    i += 1
                    terms.append(("", sign * coeff))
                    return
            else:
                terms.append(("", sign * coeff))
                return
        if kind != "word":
            raise PolynomialSyntaxError("expected a word", text, pos)
        for offset, ch in enumerate(val):
            if ch not in alphabet.value:
                raise PolynomialSyntaxError(
                    f"letter {ch!r} is not in alphabet {alphabet.value}", text, pos + offset
                )
        i += 1
        terms.append((val, sign * coeff))

    if toks[0][0] == "end":
        raise PolynomialSyntaxError("empty polynomial", text, 0)
    expect_term(1)
    while toks[i][0] != "end":
        kind, val, pos = toks[i]
        if kind != "op" or val not in "+-":
            raise PolynomialSyntaxError("expected '+' or '-'", text, pos)
        i += 1
        expect_term(-1 if val == "-" else 1)
    return NcPolynomial(terms, alphabet)


def as_polynomial(value: "NcPolynomial | str", alphabet: Alphabet | str = CD) -> NcPolynomial:
    if isinstance(value, NcPolynomial):
        return value
    return parse_polynomial(value, alphabet)
