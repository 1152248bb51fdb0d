import itertools

import pytest

from cdlab.diamond import clear_cache, diamond, diamond_ab, diamond_cd
from cdlab.ncalg import (
    AB,
    CD,
    AlphabetMismatch,
    NcPolynomial,
    expand_cd_to_ab,
    parse_polynomial,
    words_of_degree,
    words_up_to,
)

EXAMPLE = "3*cddc + ccdcc + ccdd + cdccc + 2*cdcd + 2*ddcc + 4*dcdc + 2*dccd + 4*ddd"


def ab(text):
    return parse_polynomial(text, AB)


def cd(text):
    return parse_polynomial(text, CD)


@pytest.mark.parametrize(
    "u, v, expected",
    [("abab", "1", "abab"), ("a", "a", "aa + ab"), ("a", "b", "ab + ba"), ("1", "1", "1")],
)
def test_diamond_ab_examples(u, v, expected):
    assert diamond_ab(ab(u), ab(v)) == ab(expected)


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ("cd", "dc", EXAMPLE),
        ("c", "c", "cc + 2*d"),
        ("c", "d", "cd + 2*dc"),
        ("d", "c", "cd + 2*dc"),
        ("c", "1", "c"),
    ],
)
def test_diamond_cd_examples(u, v, expected):
    assert diamond_cd(cd(u), cd(v)) == cd(expected)


def test_cache_clear_does_not_change_results():
    first = diamond(cd("cd"), cd("dc"))
    clear_cache()
    assert diamond(cd("cd"), cd("dc")) == first


def test_bilinear():
    u, v, w = cd("c + 2*d"), cd("cc"), cd("d - c")
    assert diamond(u, v + w) == diamond(u, v) + diamond(u, w)
    assert diamond(3 * u, v) == 3 * diamond(u, v)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        diamond(ab("a"), cd("c"))
    with pytest.raises(AlphabetMismatch):
        diamond_cd(ab("a"), ab("b"))


def test_unit():
    for w in words_up_to(CD, 8):
        p = NcPolynomial.word(w, CD)
        one = NcPolynomial.one(CD)
        assert diamond(p, one) == p and diamond(one, p) == p


def test_commutative_on_cd_words():
    words = words_up_to(CD, 6)
    for u, v in itertools.combinations(words, 2):
        U, V = NcPolynomial.word(u, CD), NcPolynomial.word(v, CD)
        assert diamond(U, V) == diamond(V, U), (u, v)


def test_commutative_on_ab_words():
    words = words_up_to(AB, 4)
    for u, v in itertools.combinations(words, 2):
        U, V = NcPolynomial.word(u, AB), NcPolynomial.word(v, AB)
        assert diamond(U, V) == diamond(V, U), (u, v)


def test_associative_on_small_cd_words():
    words = [NcPolynomial.word(w, CD) for w in words_up_to(CD, 3)]
    for x, y, z in itertools.product(words, repeat=3):
        assert diamond(diamond(x, y), z) == diamond(x, diamond(y, z))


def test_ab_and_cd_products_agree():
    for n in range(6):
        for m in range(6 - n):
            for u in words_of_degree(CD, n):
                for v in words_of_degree(CD, m):
                    U, V = NcPolynomial.word(u, CD), NcPolynomial.word(v, CD)
                    assert expand_cd_to_ab(diamond_cd(U, V)) == diamond_ab(expand_cd_to_ab(U), expand_cd_to_ab(V))


def test_degree_and_nonnegativity():
    words = words_up_to(CD, 6)
    for u, v in itertools.product(words, words):
        if CD.word_degree(u) + CD.word_degree(v) > 6:
            continue
        out = diamond(NcPolynomial.word(u, CD), NcPolynomial.word(v, CD))
        assert all(k > 0 for _, k in out.items())
        assert out.is_homogeneous()
        assert out.degree() == CD.word_degree(u) + CD.word_degree(v)
