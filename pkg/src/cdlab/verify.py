"""Exhaustive verification sweeps.

Each suite checks an identity on every case within its bounds and returns a
:class:`SweepResult`.  Cases are independent, so a sweep can be spread over
worker processes; results are sorted before they are reported.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .coalg import coproduct_ab, coproduct_cd, derivation_G, left_multiply, pyr, right_multiply
from .diamond import diamond_ab, diamond_ab_words, diamond_cd, diamond_cd_words
from .latpaths import sum_weights_ab, sum_weights_cd, sum_weights_lambda
from .ncalg import AB, CD, NcPolynomial, convert_ab_to_cd, expand_cd_to_ab, words_up_to
from . import poset as posets

PRODUCT_POSETS = ("boolean:2", "boolean:3", "boolean:4", "polygon:3", "polygon:4", "polygon:5",
                 "polygon:6", "cube:3", "butterfly:2", "butterfly:3")
FREE_JOIN_POSETS = ("boolean:2", "boolean:3", "polygon:3", "polygon:4", "polygon:5")


@dataclass(frozen=True)
class Case:
    name: str
    group: str
    ok: bool
    detail: str = ""


@dataclass
class SweepResult:
    suite: str
    noun: str
    cases: list[Case] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def checked(self) -> int:
        return len(self.cases)

    @property
    def mismatches(self) -> list[Case]:
        return [c for c in self.cases if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        if self.suite == "lee" and self.ok:
            return f"lee: identity holds on all {self.checked} listed poset pairs"
        if self.ok:
            return f"{self.suite}: all {self.checked} {self.noun} OK"
        return f"{self.suite}: {len(self.mismatches)} of {self.checked} {self.noun} FAILED"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "mismatches": [{"case": c.name, "detail": c.detail} for c in self.mismatches],
            "ok": self.ok,
        }


def _cd(word: str) -> NcPolynomial:
    return NcPolynomial._raw({word: 1}, CD)


def _ab(word: str) -> NcPolynomial:
    return NcPolynomial._raw({word: 1}, AB)


def _deg(word: str) -> int:
    return len(word) + word.count("d")


def _pair_name(u: str, v: str) -> str:
    return f"{u or '1'} <> {v or '1'}"


# per-case checks; module level so worker processes can pickle them

def _check_omega(pair: tuple[str, str]) -> Case:
    u, v = pair
    paths = sum_weights_ab(u, v)
    rec = NcPolynomial(diamond_ab_words(u, v), AB)
    return Case(_pair_name(u, v), f"deg {len(u) + len(v)}", paths == rec,
                "" if paths == rec else f"paths {paths} != recursion {rec}")


def _check_gamma(pair: tuple[str, str]) -> Case:
    u, v = pair
    paths = sum_weights_cd(u, v)
    rec = NcPolynomial(diamond_cd_words(u, v), CD)
    return Case(_pair_name(u, v), f"deg {_deg(u) + _deg(v)}", paths == rec,
                "" if paths == rec else f"paths {paths} != recursion {rec}")


def _check_lambda(pq: tuple[int, int]) -> Case:
    p, q = pq
    paths = sum_weights_lambda(p, q)
    rec = diamond_cd(_cd("c" * p), _cd("c" * q))
    return Case(f"c^{p} <> c^{q}", f"deg {p + q}", paths == rec,
                "" if paths == rec else f"paths {paths} != recursion {rec}")


def _check_poset_product(pair: tuple[str, str]) -> Case:
    a, b = pair
    P, Q = posets.generate(a), posets.generate(b)
    lhs = posets.cd_index(posets.diamond_product_poset(P, Q))
    rhs = diamond_cd(posets.cd_index(P), posets.cd_index(Q))
    return Case(f"{a} <> {b}", f"rank {P.rank + Q.rank - 1}", lhs == rhs,
                "" if lhs == rhs else f"poset {lhs} != product {rhs}")


def _check_free_join(pair: tuple[str, str]) -> Case:
    a, b = pair
    P, Q = posets.generate(a), posets.generate(b)
    lhs = posets.ab_index(posets.cartesian_product(P, Q))
    rhs = (posets.ab_index(posets.diamond_product_poset(posets.pyramid_poset(P), Q))
           + posets.ab_index(posets.diamond_product_poset(P, posets.pyramid_poset(Q)))
           - posets.ab_index(posets.prism_poset(posets.diamond_product_poset(P, Q))))
    return Case(f"{a} x {b}", f"rank {P.rank + Q.rank}", lhs == rhs,
                "" if lhs == rhs else f"product {lhs} != combination {rhs}")


def _newtonian(u: str, v: str, alphabet) -> bool:
    cop = coproduct_cd if alphabet is CD else coproduct_ab
    lhs = cop(u + v)
    rhs = right_multiply(cop(u), v) + left_multiply(cop(v), u)
    return lhs == rhs


def _check_newtonian(item: tuple[str, str, str]) -> Case:
    alpha, u, v = item
    alphabet = CD if alpha == "cd" else AB
    ok = _newtonian(u, v, alphabet)
    return Case(f"newtonian {alpha} {_pair_name(u, v)}", f"newtonian {alpha}", ok)


def _check_compat(w: str) -> Case:
    lhs = coproduct_cd(w).map_slots(expand_cd_to_ab, AB)
    rhs = coproduct_ab(expand_cd_to_ab(_cd(w)))
    return Case(f"compat {w or '1'}", "cd/ab coproduct", lhs == rhs)


def _check_roundtrip(w: str) -> Case:
    ok = convert_ab_to_cd(expand_cd_to_ab(_cd(w))) == _cd(w)
    return Case(f"roundtrip {w or '1'}", "ab<->cd round trip", ok)


def _check_derivation(item: tuple[str, str, str]) -> Case:
    alpha, u, v = item
    mk = _cd if alpha == "cd" else _ab
    ok = derivation_G(mk(u + v)) == derivation_G(mk(u)) * mk(v) + mk(u) * derivation_G(mk(v))
    return Case(f"derivation {alpha} {_pair_name(u, v)}", f"derivation {alpha}", ok)


def _check_pyr_degree(w: str) -> Case:
    image = pyr(_cd(w))
    ok = image.is_homogeneous() and image.degree() == _deg(w) + 1
    return Case(f"pyr degree {w or '1'}", "pyr degree", ok)


def _check_unit(item: tuple[str, str]) -> Case:
    alpha, u = item
    mk = _cd if alpha == "cd" else _ab
    prod = diamond_cd if alpha == "cd" else diamond_ab
    one = mk("")
    ok = prod(mk(u), one) == mk(u) and prod(one, mk(u)) == mk(u)
    return Case(f"unit {alpha} {u or '1'}", f"unit {alpha}", ok)


def _check_commutative(item: tuple[str, str, str]) -> Case:
    alpha, u, v = item
    mk = _cd if alpha == "cd" else _ab
    prod = diamond_cd if alpha == "cd" else diamond_ab
    ok = prod(mk(u), mk(v)) == prod(mk(v), mk(u))
    return Case(f"commutative {alpha} {_pair_name(u, v)}", f"commutativity {alpha}", ok)


def _check_associative(triple: tuple[str, str, str]) -> Case:
    u, v, w = (_cd(x) for x in triple)
    ok = diamond_cd(diamond_cd(u, v), w) == diamond_cd(u, diamond_cd(v, w))
    return Case("associative " + " <> ".join(x or "1" for x in triple), "associativity cd", ok)


def _check_consistency(pair: tuple[str, str]) -> Case:
    u, v = pair
    lhs = expand_cd_to_ab(diamond_cd(_cd(u), _cd(v)))
    rhs = diamond_ab(expand_cd_to_ab(_cd(u)), expand_cd_to_ab(_cd(v)))
    return Case(f"ab/cd {_pair_name(u, v)}", "ab/cd consistency", lhs == rhs)


def _check_nonnegative(pair: tuple[str, str]) -> Case:
    u, v = pair
    prod = diamond_cd(_cd(u), _cd(v))
    ok = all(k > 0 for _, k in prod.items())
    return Case(f"nonnegative {_pair_name(u, v)}", "nonnegativity", ok)


def _dispatch(item):
    fn, arg = item
    return fn(arg)


def _run(tasks: Sequence[tuple[Callable, object]], workers: int) -> list[Case]:
    if workers <= 1 or len(tasks) < 2:
        cases = [fn(arg) for fn, arg in tasks]
    else:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(_dispatch, tasks, chunksize=chunk))
    return cases


def _sweep(suite: str, noun: str, tasks, workers: int) -> SweepResult:
    start = time.perf_counter()
    cases = _run(tasks, workers)
    return SweepResult(suite, noun, cases, time.perf_counter() - start)


def omega_sweep(max_u: int = 5, max_v: int = 5, workers: int = 1) -> SweepResult:
    """Omega path sums against the ab recursion for every word pair."""
    pairs = [(u, v) for u in words_up_to(AB, max_u) for v in words_up_to(AB, max_v)]
    return _sweep("thm42", "pairs", [(_check_omega, p) for p in pairs], workers)


def gamma_sweep(max_u: int = 6, max_v: int = 6, workers: int = 1) -> SweepResult:
    """Gamma path sums against the cd recursion for every word pair."""
    pairs = [(u, v) for u in words_up_to(CD, max_u) for v in words_up_to(CD, max_v)]
    return _sweep("thm52", "pairs", [(_check_gamma, p) for p in pairs], workers)


def lambda_sweep(max_pq: int = 8, workers: int = 1) -> SweepResult:
    pqs = [(p, q) for p in range(max_pq + 1) for q in range(max_pq + 1)]
    return _sweep("slone", "(p,q)", [(_check_lambda, pq) for pq in pqs], workers)


def poset_product_sweep(names: Sequence[str] = PRODUCT_POSETS, workers: int = 1) -> SweepResult:
    pairs = [(a, b) for a in names for b in names]
    return _sweep("prop32", "poset pairs", [(_check_poset_product, p) for p in pairs], workers)


def free_join_sweep(names: Sequence[str] = FREE_JOIN_POSETS, workers: int = 1) -> SweepResult:
    pairs = [(a, b) for a in names for b in names]
    return _sweep("lee", "poset pairs", [(_check_free_join, p) for p in pairs], workers)


def coalgebra(max_newtonian: int = 5, max_compat: int = 6, max_roundtrip: int = 8,
              max_derivation: int = 6, max_pyr: int = 8, workers: int = 1) -> SweepResult:
    tasks: list[tuple[Callable, object]] = []
    for alpha, alphabet in (("cd", CD), ("ab", AB)):
        words = words_up_to(alphabet, max_newtonian)
        tasks += [(_check_newtonian, (alpha, u, v)) for u in words for v in words]
    tasks += [(_check_compat, w) for w in words_up_to(CD, max_compat)]
    tasks += [(_check_roundtrip, w) for w in words_up_to(CD, max_roundtrip)]
    for alpha, alphabet in (("cd", CD), ("ab", AB)):
        # derivation pairs with total degree <= max_derivation
        words = words_up_to(alphabet, max_derivation)
        tasks += [(_check_derivation, (alpha, u, v)) for u in words for v in words
                  if alphabet.word_degree(u) + alphabet.word_degree(v) <= max_derivation]
    tasks += [(_check_pyr_degree, w) for w in words_up_to(CD, max_pyr)]
    return _sweep("coalgebra", "checks", tasks, workers)


def diamond_props(max_unit: int = 8, max_comm_cd: int = 6, max_comm_ab: int = 5, max_assoc: int = 3,
                  max_consistency: int = 5, max_nonneg: int = 6, workers: int = 1) -> SweepResult:
    tasks: list[tuple[Callable, object]] = []
    tasks += [(_check_unit, ("cd", w)) for w in words_up_to(CD, max_unit)]
    tasks += [(_check_unit, ("ab", w)) for w in words_up_to(AB, max_unit)]
    cd = words_up_to(CD, max_comm_cd)
    tasks += [(_check_commutative, ("cd", u, v)) for u in cd for v in cd if u <= v]
    ab = words_up_to(AB, max_comm_ab)
    tasks += [(_check_commutative, ("ab", u, v)) for u in ab for v in ab if u <= v]
    small = words_up_to(CD, max_assoc)
    tasks += [(_check_associative, (u, v, w)) for u in small for v in small for w in small]
    cons = words_up_to(CD, max_consistency)
    tasks += [(_check_consistency, (u, v)) for u in cons for v in cons]
    nn = words_up_to(CD, max_nonneg)
    tasks += [(_check_nonnegative, (u, v)) for u in nn for v in nn]
    return _sweep("diamond-props", "checks", tasks, workers)


SUITES = ("thm42", "thm52", "slone", "prop32", "lee", "coalgebra", "diamond-props")
