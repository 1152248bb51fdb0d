"""Finite bounded graded posets, flag vectors and ab/cd-indices.

A poset is stored by its cover relation.  Ranks are inferred from the bottom
element and checked for consistency; order tests go through per-rank
reachability matrices.
"""

from __future__ import annotations

import itertools
import json
import os
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .ncalg import AB, NcPolynomial, NotExpressible, convert_ab_to_cd

DEFAULT_MAX_ELEMENTS = 20_000


def max_elements() -> int:
    """Size cap for constructed posets; ``CDLAB_MAX_ELEMENTS`` overrides it."""
    raw = os.environ.get("CDLAB_MAX_ELEMENTS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"CDLAB_MAX_ELEMENTS must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_ELEMENTS


class PosetError(ValueError):
    pass


class PosetTooLarge(PosetError):
    pass


class GradedPoset:
    """A finite graded poset with a unique bottom and top.

    ``covers`` lists pairs ``(lower, upper)`` of element labels.  Construction
    validates that the relation is acyclic, that every element lies between
    ``bottom`` and ``top`` and that each cover raises the rank by one.
    """

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str]],
                 bottom: str | None = None, top: str | None = None, *, name: str = ""):
        elements = [str(e) for e in elements]
        cap = max_elements()
        if len(elements) > cap:
            raise PosetTooLarge(f"poset has {len(elements)} elements, cap is {cap} (set CDLAB_MAX_ELEMENTS)")
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise PosetError("duplicate element labels")
        n = len(elements)
        if n < 2:
            raise PosetError("a bounded poset needs distinct bottom and top elements")
        up: list[list[int]] = [[] for _ in range(n)]
        down: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for lo, hi in covers:
            try:
                i, j = index[str(lo)], index[str(hi)]
            except KeyError as exc:
                raise PosetError(f"cover mentions unknown element {exc.args[0]!r}") from None
            if i == j:
                raise PosetError(f"self-cover on {lo!r}")
            if (i, j) in seen:
                continue
            seen.add((i, j))
            up[i].append(j)
            down[j].append(i)

        minimal = [i for i in range(n) if not down[i]]
        maximal = [i for i in range(n) if not up[i]]
        if len(minimal) != 1 or len(maximal) != 1:
            raise PosetError(f"expected a unique minimum and maximum, found {len(minimal)} minimal "
                             f"and {len(maximal)} maximal elements")
        b, t = minimal[0], maximal[0]
        if bottom is not None and index.get(str(bottom)) != b:
            raise PosetError(f"declared bottom {bottom!r} is not the unique minimal element")
        if top is not None and index.get(str(top)) != t:
            raise PosetError(f"declared top {top!r} is not the unique maximal element")

        rank = [-1] * n
        rank[b] = 0
        queue = deque([b])
        while queue:
            i = queue.popleft()
            for j in up[i]:
                if rank[j] == -1:
                    rank[j] = rank[i] + 1
                    queue.append(j)
                elif rank[j] != rank[i] + 1:
                    raise PosetError(f"not graded: cover {elements[i]!r} < {elements[j]!r} "
                                     f"does not raise the rank by one")
        # every element is reachable from the unique minimum of a finite acyclic
        # relation; unreachable elements therefore signal a cycle
        if -1 in rank:
            raise PosetError("cover relation has a cycle")

        self.elements = tuple(elements)
        self.index = index
        self.up = tuple(tuple(sorted(u)) for u in up)
        self.down = tuple(tuple(sorted(d)) for d in down)
        self.ranks = tuple(rank)
        self.bottom = b
        self.top = t
        self.name = name

    # basic structure ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.ranks[self.top]

    @property
    def n(self) -> int:
        """Rank of the interior, ``rank - 1``."""
        return self.rank - 1

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = self.name or "GradedPoset"
        return f"<{label}: {len(self)} elements, rank {self.rank}>"

    @property
    def covers(self) -> list[tuple[str, str]]:
        return [(self.elements[i], self.elements[j]) for i in range(len(self)) for j in self.up[i]]

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for i, r in enumerate(self.ranks):
            out[r].append(i)
        return tuple(tuple(level) for level in out)

    @cached_property
    def _position(self) -> tuple[int, ...]:
        pos = [0] * len(self)
        for level in self.levels:
            for k, i in enumerate(level):
                pos[i] = k
        return tuple(pos)

    def _cover_matrix(self, r: int) -> np.ndarray:
        lower, upper = self.levels[r], self.levels[r + 1]
        m = np.zeros((len(lower), len(upper)), dtype=bool)
        pos = self._position
        for k, i in enumerate(lower):
            for j in self.up[i]:
                m[k, pos[j]] = True
        return m

    @cached_property
    def _reach(self) -> dict[tuple[int, int], np.ndarray]:
        # _reach[r, s][k, l]: k-th element of rank r lies below l-th of rank s
        reach: dict[tuple[int, int], np.ndarray] = {}
        covers = [self._cover_matrix(r) for r in range(self.rank)]
        for r in range(self.rank + 1):
            m = np.eye(len(self.levels[r]), dtype=bool)
            reach[r, r] = m
            for s in range(r + 1, self.rank + 1):
                m = (m.astype(np.int64) @ covers[s - 1].astype(np.int64)) > 0
                reach[r, s] = m
        return reach

    def _idx(self, x) -> int:
        # ints are element indices, strings are labels
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if not 0 <= x < len(self.elements):
                raise PosetError(f"element index {x} out of range")
            return int(x)
        try:
            return self.index[str(x)]
        except KeyError:
            raise PosetError(f"unknown element {x!r}") from None

    def leq(self, x, y) -> bool:
        i, j = self._idx(x), self._idx(y)
        r, s = self.ranks[i], self.ranks[j]
        if r > s:
            return False
        return bool(self._reach[r, s][self._position[i], self._position[j]])

    def upset(self, x) -> list[int]:
        i = self._idx(x)
        r, k = self.ranks[i], self._position[i]
        out = []
        for s in range(r, self.rank + 1):
            row = self._reach[r, s][k]
            out.extend(self.levels[s][l] for l in np.flatnonzero(row))
        return out

    # serialization -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [list(c) for c in self.covers],
            "bottom": self.elements[self.bottom],
            "top": self.elements[self.top],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "GradedPoset":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["elements"], [tuple(c) for c in data["covers"]],
                   data.get("bottom"), data.get("top"))

    def with_name(self, name: str) -> "GradedPoset":
        """Set the display name in place and return the poset."""
        self.name = name
        return self


# Flag vectors ------------------------------------------------------------------

@dataclass(frozen=True)
class FlagVector:
    """Values indexed by subsets of ``{1, ..., n}`` (as sorted tuples)."""

    n: int
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, s: Iterable[int]) -> int:
        return self.counts.get(tuple(sorted(s)), 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return [(s, self.counts.get(s, 0)) for s in all_subsets(self.n)]

    def to_json(self) -> dict:
        return {"n": self.n, "values": [{"S": list(s), "value": v} for s, v in self.items()]}


def all_subsets(n: int) -> list[tuple[int, ...]]:
    """Subsets of {1..n}, ordered by size then lexicographically."""
    ground = range(1, n + 1)
    return [s for k in range(n + 1) for s in itertools.combinations(ground, k)]


def format_subset(s: Sequence[int]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def flag_f_vector(P: GradedPoset) -> FlagVector:
    """Chain counts ``f_S`` for every rank set ``S`` of interior ranks."""
    n = P.n
    top = P.rank
    reach = P._reach
    # vector over the elements of rank max(S): chains from the bottom through S
    vectors: dict[tuple[int, ...], np.ndarray] = {(): np.ones(1, dtype=object)}
    counts: dict[tuple[int, ...], int] = {}
    for s in all_subsets(n):
        if s:
            prefix, last = s[:-1], s[-1]
            start = prefix[-1] if prefix else 0
            vectors[s] = vectors[prefix] @ reach[start, last].astype(object)
        end = s[-1] if s else 0
        counts[s] = int((vectors[s] @ reach[end, top].astype(object)).sum())
    return FlagVector(n, counts)


def flag_h_vector(f: FlagVector) -> FlagVector:
    """``h_S = sum over T in S of (-1)^|S-T| f_T``."""
    out = {}
    for s in all_subsets(f.n):
        total = 0
        for k in range(len(s) + 1):
            for t in itertools.combinations(s, k):
                total += (-1) ** (len(s) - k) * f.counts.get(t, 0)
        out[s] = total
    return FlagVector(f.n, out)


def flag_f_from_h(h: FlagVector) -> FlagVector:
    """Inverse transform, ``f_S = sum over T in S of h_T``."""
    out = {}
    for s in all_subsets(h.n):
        out[s] = sum(h.counts.get(t, 0) for k in range(len(s) + 1) for t in itertools.combinations(s, k))
    return FlagVector(h.n, out)


def subset_word(s: Sequence[int], n: int) -> str:
    members = set(s)
    return "".join("b" if i in members else "a" for i in range(1, n + 1))


def ab_index(P: GradedPoset) -> NcPolynomial:
    h = flag_h_vector(flag_f_vector(P))
    return NcPolynomial([(subset_word(s, h.n), v) for s, v in h.items()], AB)


def cd_index(P: GradedPoset) -> NcPolynomial:
    """The cd-index; raises NotExpressible when the ab-index has none."""
    return convert_ab_to_cd(ab_index(P))


# Mobius function ----------------------------------------------------------------

def mobius_row(P: GradedPoset, x) -> dict[int, int]:
    """``mu(x, y)`` for every ``y >= x``, keyed by element index."""
    i = P._idx(x)
    above = sorted(P.upset(i), key=lambda j: P.ranks[j])
    mu = {i: 1}
    for y in above[1:]:
        mu[y] = -sum(v for z, v in mu.items() if P.leq(z, y))
    return mu


def mobius(P: GradedPoset, x, y) -> int:
    i, j = P._idx(x), P._idx(y)
    if not P.leq(i, j):
        raise PosetError(f"{P.elements[i]!r} and {P.elements[j]!r} do not form an interval")
    return mobius_row(P, i)[j]


def is_eulerian(P: GradedPoset) -> bool:
    """Whether ``mu(x, y) = (-1)^(rank y - rank x)`` on every interval."""
    for i in range(len(P)):
        for j, v in mobius_row(P, i).items():
            if v != (-1) ** (P.ranks[j] - P.ranks[i]):
                return False
    return True


# Constructions ----------------------------------------------------------------------

def _pair(x: str, y: str) -> str:
    return f"({x},{y})"


def cartesian_product(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """Componentwise order on pairs; ranks add."""
    cap = max_elements()
    if len(P) * len(Q) > cap:
        raise PosetTooLarge(f"product would have {len(P) * len(Q)} elements, cap is {cap}")
    elements = [_pair(x, y) for x in P.elements for y in Q.elements]
    covers = []
    for i, x in enumerate(P.elements):
        for j, y in enumerate(Q.elements):
            for k in P.up[i]:
                covers.append((_pair(x, y), _pair(P.elements[k], y)))
            for k in Q.up[j]:
                covers.append((_pair(x, y), _pair(x, Q.elements[k])))
    return GradedPoset(elements, covers, name=f"({P.name or 'P'} x {Q.name or 'Q'})")


def diamond_product_poset(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """``(P - 0) x (Q - 0)`` with a new bottom element adjoined."""
    size = (len(P) - 1) * (len(Q) - 1) + 1
    cap = max_elements()
    if size > cap:
        raise PosetTooLarge(f"diamond product would have {size} elements, cap is {cap}")
    pe = [i for i in range(len(P)) if i != P.bottom]
    qe = [j for j in range(len(Q)) if j != Q.bottom]
    bottom = "0"
    elements = [bottom] + [_pair(P.elements[i], Q.elements[j]) for i in pe for j in qe]
    covers = []
    for i in pe:
        for j in qe:
            here = _pair(P.elements[i], Q.elements[j])
            if P.ranks[i] == 1 and Q.ranks[j] == 1:
                covers.append((bottom, here))
            for k in P.up[i]:
                covers.append((here, _pair(P.elements[k], Q.elements[j])))
            for k in Q.up[j]:
                covers.append((here, _pair(P.elements[i], Q.elements[k])))
    return GradedPoset(elements, covers, name=f"({P.name or 'P'} <> {Q.name or 'Q'})")


def prism_poset(P: GradedPoset) -> GradedPoset:
    return diamond_product_poset(P, boolean_lattice(2)).with_name(f"Prism({P.name or 'P'})")


def pyramid_poset(P: GradedPoset) -> GradedPoset:
    """Free join with a point: ``P x B_1``."""
    return cartesian_product(P, boolean_lattice(1)).with_name(f"Pyr({P.name or 'P'})")


# Generators -----------------------------------------------------------------------------

def _check_size(count: int, what: str) -> None:
    cap = max_elements()
    if count > cap:
        raise PosetTooLarge(f"{what} would have {count} elements, cap is {cap} (set CDLAB_MAX_ELEMENTS)")


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of {1..n} ordered by inclusion (face lattice of the (n-1)-simplex)."""
    if n < 1:
        raise PosetError("boolean lattice needs n >= 1")
    _check_size(2 ** n, f"boolean:{n}")
    labels = [format_subset([i + 1 for i in range(n) if mask >> i & 1]) for mask in range(2 ** n)]
    covers = [(labels[mask], labels[mask | 1 << i]) for mask in range(2 ** n) for i in range(n) if not mask >> i & 1]
    return GradedPoset(labels, covers, name=f"B_{n}")


def chain(n: int) -> GradedPoset:
    """Totally ordered set of rank n."""
    if n < 1:
        raise PosetError("chain needs rank n >= 1")
    _check_size(n + 1, f"chain:{n}")
    labels = [str(i) for i in range(n + 1)]
    return GradedPoset(labels, list(zip(labels, labels[1:])), name=f"chain_{n}")


def butterfly(n: int) -> GradedPoset:
    """Rank n+1: two elements at each interior rank, each below both at the next."""
    if n < 0:
        raise PosetError("butterfly needs n >= 0")
    _check_size(2 * n + 2, f"butterfly:{n}")
    levels = [["0"]] + [[f"{r}a", f"{r}b"] for r in range(1, n + 1)] + [["1"]]
    covers = [(x, y) for lo, hi in zip(levels, levels[1:]) for x in lo for y in hi]
    return GradedPoset([e for level in levels for e in level], covers, name=f"butterfly_{n}")


def polygon(m: int) -> GradedPoset:
    """Face lattice of an m-gon."""
    if m < 3:
        raise PosetError("polygon needs m >= 3")
    _check_size(2 * m + 2, f"polygon:{m}")
    verts = [f"v{i}" for i in range(m)]
    edges = [f"e{i}" for i in range(m)]
    covers = [("empty", v) for v in verts]
    covers += [(verts[i], edges[i]) for i in range(m)] + [(verts[(i + 1) % m], edges[i]) for i in range(m)]
    covers += [(e, "polygon") for e in edges]
    return GradedPoset(["empty"] + verts + edges + ["polygon"], covers, name=f"polygon_{m}")


def cube(n: int) -> GradedPoset:
    """Face lattice of the n-cube, built as the n-fold diamond power of B_2."""
    if n < 0:
        raise PosetError("cube needs n >= 0")
    _check_size(3 ** n + 1, f"cube:{n}")
    result = boolean_lattice(1)
    for _ in range(n):
        result = diamond_product_poset(result, boolean_lattice(2))
    return result.with_name(f"cube_{n}")


def simplex(n: int) -> GradedPoset:
    """Face lattice of the n-simplex, B_{n+1}."""
    if n < 0:
        raise PosetError("simplex needs n >= 0")
    return boolean_lattice(n + 1).with_name(f"simplex_{n}")


GENERATORS = {
    "boolean": boolean_lattice,
    "butterfly": butterfly,
    "polygon": polygon,
    "cube": cube,
    "simplex": simplex,
    "chain": chain,
}

_SPEC = re.compile(r"^\s*([a-z]+)\s*:\s*(\d+)\s*$")


def generate(spec: str) -> GradedPoset:
    """Build a poset from ``name:n``, e.g. ``boolean:3`` or ``polygon:5``."""
    m = _SPEC.match(spec)
    if m is None or m.group(1) not in GENERATORS:
        known = ", ".join(f"{k}:n" for k in GENERATORS)
        raise PosetError(f"unknown poset spec {spec!r}; expected one of {known}")
    poset = GENERATORS[m.group(1)](int(m.group(2)))
    poset.name = f"{m.group(1)}:{m.group(2)}"
    return poset


def load_poset(source: str) -> GradedPoset:
    """A generator spec, or the path of a poset JSON file."""
    if os.path.exists(source) or source.endswith(".json"):
        with open(source, encoding="utf-8") as fh:
            poset = GradedPoset.from_json(json.load(fh))
        poset.name = os.path.basename(source)
        return poset
    return generate(source)


def cd_index_or_none(P: GradedPoset) -> NcPolynomial | None:
    try:
        return cd_index(P)
    except NotExpressible:
        return None
