import itertools

import pytest

from cdlab.coalg import (
    TensorPolynomial,
    coproduct,
    coproduct_ab,
    coproduct_cd,
    derivation_G,
    left_multiply,
    pyr,
    right_multiply,
)
from cdlab.ncalg import AB, CD, NcPolynomial, expand_cd_to_ab, parse_polynomial, words_of_degree, words_up_to


def tensor(pairs, alphabet):
    return TensorPolynomial(pairs, alphabet)


def delete_one_letter(word):
    """Oracle: the ab-coproduct written out by hand."""
    out = {}
    for i in range(len(word)):
        key = (word[:i], word[i + 1:])
        out[key] = out.get(key, 0) + 1
    return TensorPolynomial(out, AB)


@pytest.mark.parametrize(
    "word, expected",
    [
        ("", {}),
        ("a", {("", ""): 1}),
        ("b", {("", ""): 1}),
        ("ab", {("", "b"): 1, ("a", ""): 1}),
    ],
)
def test_coproduct_ab_examples(word, expected):
    assert coproduct_ab(word) == tensor(expected, AB)


@pytest.mark.parametrize(
    "word, expected",
    [
        ("", {}),
        ("c", {("", ""): 2}),
        ("d", {("", "c"): 1, ("c", ""): 1}),
        ("cd", {("", "d"): 2, ("c", "c"): 1, ("cc", ""): 1}),
    ],
)
def test_coproduct_cd_examples(word, expected):
    assert coproduct_cd(word) == tensor(expected, CD)


def test_coproduct_ab_matches_letter_deletion():
    for n in range(7):
        for w in words_of_degree(AB, n):
            assert coproduct_ab(w) == delete_one_letter(w)


@pytest.mark.parametrize("alphabet", [AB, CD])
def test_newtonian_identity(alphabet):
    delta = coproduct_ab if alphabet is AB else coproduct_cd
    words = words_up_to(alphabet, 5)
    for u, v in itertools.product(words, words):
        if alphabet.word_degree(u) + alphabet.word_degree(v) > 5:
            continue
        lhs = delta(u + v)
        rhs = right_multiply(delta(u), v) + left_multiply(delta(v), u)
        assert lhs == rhs, (u, v)


def test_cd_coproduct_agrees_with_ab_coproduct():
    for w in words_up_to(CD, 6):
        via_cd = coproduct_cd(w).map_slots(expand_cd_to_ab, AB)
        via_ab = TensorPolynomial({}, AB)
        for x, k in expand_cd_to_ab(NcPolynomial.word(w, CD)).items():
            via_ab = via_ab + TensorPolynomial({pair: k * m for pair, m in coproduct_ab(x).terms.items()}, AB)
        assert via_cd == via_ab, w


def test_coproduct_dispatch_is_linear():
    p = parse_polynomial("2*c + d", CD)
    assert coproduct(p) == tensor({("", ""): 4, ("", "c"): 1, ("c", ""): 1}, CD)


def test_tensor_text():
    assert str(coproduct_cd("cd")) == "2*(1⊗d) + c⊗c + cc⊗1"
    assert str(coproduct_cd("")) == "0"


@pytest.mark.parametrize(
    "source, alphabet, expected",
    [
        ("c", CD, "d"),
        ("d", CD, "cd"),
        ("ab", AB, "bab + aab"),
        ("1", CD, "0"),
        ("a", AB, "ba"),
    ],
)
def test_derivation_examples(source, alphabet, expected):
    assert derivation_G(parse_polynomial(source, alphabet)) == parse_polynomial(expected, alphabet)


def test_derivation_commutes_with_expansion():
    for w in words_up_to(CD, 6):
        p = NcPolynomial.word(w, CD)
        assert expand_cd_to_ab(derivation_G(p)) == derivation_G(expand_cd_to_ab(p)), w


def test_derivation_product_rule():
    words = words_up_to(CD, 3)
    for u, v in itertools.product(words, words):
        U, V = NcPolynomial.word(u, CD), NcPolynomial.word(v, CD)
        assert derivation_G(U * V) == derivation_G(U) * V + U * derivation_G(V)


@pytest.mark.parametrize("source, expected", [("1", "c"), ("c", "cc + d"), ("d", "dc + cd")])
def test_pyr_examples(source, expected):
    assert pyr(parse_polynomial(source, CD)) == parse_polynomial(expected, CD)


def test_pyr_raises_degree_by_one():
    for w in words_up_to(CD, 8):
        out = pyr(NcPolynomial.word(w, CD))
        assert out.is_homogeneous() and out.degree() == CD.word_degree(w) + 1
