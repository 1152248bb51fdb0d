"""Lattice path families and their weights.

Three families are enumerated explicitly:

* ``omega(p, q)`` / ``lambda(p, q)``: steps R=(1,0), U=(0,1), D=(1,1) from the
  origin to (p, q) with no ``UR`` factor.
* ``gamma(u, v)``: the steps above plus the double steps RR=(2,0) and UU=(0,2),
  restricted by the cd-labels ``u`` (columns) and ``v`` (rows).

Summing the weights over a family reproduces the diamond product, which makes
the recursion in :mod:`cdlab.diamond` and the enumeration here independent
checks of each other.

Grid conventions: column ``x`` is the unit interval [x, x+1] of the horizontal
axis and row ``y`` the unit [y, y+1] of the vertical one.  A ``d`` label spans
two columns (rows); the lower-indexed one is its first part (bottom).  A step
starting at (x, y) is "above" the labels of the columns it spans and "to the
right of" the labels of the rows it spans.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .ncalg import AB, CD, Alphabet, AlphabetMismatch, NcPolynomial, add_into


class Step(enum.Enum):
    R = ("R", 1, 0)
    U = ("U", 0, 1)
    D = ("D", 1, 1)
    RR = ("RR", 2, 0)
    UU = ("UU", 0, 2)

    def __init__(self, token: str, dx: int, dy: int):
        self.token = token
        self.dx = dx
        self.dy = dy

    @property
    def vector(self) -> tuple[int, int]:
        return (self.dx, self.dy)

    @property
    def degree(self) -> int:
        return 1 if self in (Step.R, Step.U) else 2

    @property
    def order(self) -> int:
        return _STEP_ORDER[self]

    @property
    def symbol(self) -> str:
        return _STEP_SYMBOL[self]

    @property
    def is_horizontal(self) -> bool:
        return self.dy == 0

    @property
    def is_vertical(self) -> bool:
        return self.dx == 0


R, U, D, RR, UU = Step.R, Step.U, Step.D, Step.RR, Step.UU
_STEP_ORDER = {R: 0, U: 1, D: 2, RR: 3, UU: 4}
_STEP_SYMBOL = {R: "R", U: "U", D: "D", RR: "R̄", UU: "Ū"}
_MACRON = "\u0304"
_BY_TOKEN = {"R": R, "U": U, "D": D, "RR": RR, "UU": UU, "R̄": RR, "Ū": UU}
# no vertical step may be followed directly by a horizontal one
_BANNED_AFTER = {U: (R, RR), UU: (R, RR)}


@dataclass(frozen=True)
class LatticePath:
    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        return parse_path(text)

    @property
    def coordinates(self) -> tuple[tuple[int, int], ...]:
        """Points visited, starting at the origin."""
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            x += s.dx
            y += s.dy
            pts.append((x, y))
        return tuple(pts)

    @property
    def endpoint(self) -> tuple[int, int]:
        return (sum(s.dx for s in self.steps), sum(s.dy for s in self.steps))

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.steps)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(s.order for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(self.steps + other.steps)

    def text(self) -> str:
        """Space-separated step tokens, e.g. ``R RR UU U``."""
        if len(self.steps) == 1:
            # a lone "RR" would read back as two steps
            return str(self)
        return " ".join(s.token for s in self.steps)

    def to_json(self) -> dict:
        return {"steps": [s.token for s in self.steps]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticePath":
        return cls(tuple(_BY_TOKEN[t] for t in data["steps"]))

    def __str__(self) -> str:
        return unicodedata.normalize("NFC", "".join(s.symbol for s in self.steps)) or "(empty)"


def parse_path(text: str) -> LatticePath:
    """Parse step text.

    A single run such as ``UDRRD`` is read one letter per step, with ``R̄``
    and ``Ū`` for the double steps.  Once the text holds several
    whitespace-separated tokens, ``RR`` and ``UU`` tokens are double steps
    (``R RR UU U``); any other token is read letter by letter.
    """
    tokens = unicodedata.normalize("NFD", text).split()
    steps: list[Step] = []
    for tok in tokens:
        if len(tokens) > 1 and tok in _BY_TOKEN:
            steps.append(_BY_TOKEN[tok])
            continue
        i = 0
        while i < len(tok):
            ch = tok[i]
            if i + 1 < len(tok) and tok[i + 1] == _MACRON:
                ch += _MACRON
            if ch not in _BY_TOKEN:
                raise ValueError(f"unknown step {ch!r} in {text!r}")
            steps.append(_BY_TOKEN[ch])
            i += len(ch)
    return LatticePath(tuple(steps))


def sort_paths(paths: Iterable[LatticePath]) -> list[LatticePath]:
    return sorted(paths, key=LatticePath.sort_key)


# Axis labels ----------------------------------------------------------------

@dataclass(frozen=True)
class AxisLabeling:
    """Horizontal and vertical label words of the path grid."""

    horizontal: str
    vertical: str
    alphabet: Alphabet = CD

    def __post_init__(self):
        alpha = Alphabet.coerce(self.alphabet)
        object.__setattr__(self, "alphabet", alpha)
        for w in (self.horizontal, self.vertical):
            bad = set(w) - set(alpha.value)
            if bad:
                raise AlphabetMismatch(f"labels {w!r} use letters outside {alpha.value}")

    @property
    def columns(self) -> tuple[tuple[str, int | None], ...]:
        return axis_cells(self.horizontal)

    @property
    def rows(self) -> tuple[tuple[str, int | None], ...]:
        return axis_cells(self.vertical)

    @property
    def width(self) -> int:
        return self.alphabet.word_degree(self.horizontal)

    @property
    def height(self) -> int:
        return self.alphabet.word_degree(self.vertical)


@lru_cache(maxsize=None)
def axis_cells(word: str) -> tuple[tuple[str, int | None], ...]:
    """One entry per unit of the axis: ``(letter, part)``.

    ``part`` is 0/1 for the first/second unit of a ``d`` and ``None`` for a
    one-unit letter.
    """
    cells: list[tuple[str, int | None]] = []
    for ch in word:
        if ch == "d":
            cells += [("d", 0), ("d", 1)]
        else:
            cells.append((ch, None))
    return tuple(cells)


def _labels(labels: AxisLabeling | tuple[str, str], alphabet: Alphabet) -> AxisLabeling:
    if isinstance(labels, AxisLabeling):
        if labels.alphabet is not alphabet:
            raise AlphabetMismatch(f"expected {alphabet.value}-labels")
        return labels
    u, v = labels
    return AxisLabeling(u, v, alphabet)


# Horizontal paths -------------------------------------------------------------

def tau(u: str) -> LatticePath:
    """The all-R path along an ab-word."""
    return LatticePath((R,) * len(u))


def pi(u: str) -> LatticePath:
    """The horizontal path along a cd-word: c -> R, d -> RR."""
    return LatticePath(tuple(R if ch == "c" else RR for ch in u))


# Omega / Lambda -------------------------------------------------------------

@lru_cache(maxsize=None)
def _omega(p: int, q: int) -> tuple[LatticePath, ...]:
    found: list[tuple[Step, ...]] = []
    order = (R, U, D)

    def walk(x: int, y: int, prev: Step | None, acc: list[Step]) -> None:
        if x == p and y == q:
            found.append(tuple(acc))
            return
        for s in order:
            if prev is U and s is R:
                continue
            nx, ny = x + s.dx, y + s.dy
            if nx > p or ny > q:
                continue
            acc.append(s)
            walk(nx, ny, s, acc)
            acc.pop()

    walk(0, 0, None, [])
    return tuple(LatticePath(s) for s in found)


def enumerate_omega(p: int, q: int) -> list[LatticePath]:
    """Paths over R, U, D from (0, 0) to (p, q) with no UR factor, sorted."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return list(_omega(p, q))


def enumerate_lambda(p: int, q: int) -> list[LatticePath]:
    """Paths for cd-weights with all-c labels; same set as :func:`enumerate_omega`."""
    return enumerate_omega(p, q)


def _check_box(path: LatticePath, width: int, height: int, allowed: Sequence[Step]) -> None:
    x = y = 0
    for s in path.steps:
        if s not in allowed:
            raise ValueError(f"step {s.token} is not allowed here")
        x += s.dx
        y += s.dy
        if x > width or y > height:
            raise ValueError(f"path {path} leaves the labeled {width}x{height} box")


def _weight_ab_word(steps: Sequence[Step], cols: str, rows: str) -> str:
    out = []
    x = y = 0
    for s in steps:
        if s is R:
            out.append(cols[x])
        elif s is U:
            out.append(rows[y])
        else:
            out.append("ab" if rows[y] == "a" else "ba")
        x += s.dx
        y += s.dy
    return "".join(out)


def weight_ab(path: LatticePath, labels: AxisLabeling | tuple[str, str]) -> NcPolynomial:
    """Weight of an Omega path with ab-labels.

    R takes the column label, U the row label, and D gives ``ab`` or ``ba``
    according to its row label.
    """
    labels = _labels(labels, AB)
    _check_box(path, labels.width, labels.height, (R, U, D))
    return NcPolynomial._raw({_weight_ab_word(path.steps, labels.horizontal, labels.vertical): 1}, AB)


def weight_lambda(path: LatticePath) -> NcPolynomial:
    """All-c weight: R, U -> c and D -> 2d."""
    word = []
    k = 1
    for s in path.steps:
        if s is D:
            word.append("d")
            k *= 2
        elif s in (R, U):
            word.append("c")
        else:
            raise ValueError(f"step {s.token} does not occur in Lambda paths")
    return NcPolynomial._raw({"".join(word): k}, CD)


def sum_weights_ab(u: str, v: str) -> NcPolynomial:
    """Sum of ``weight_ab`` over ``omega(deg u, deg v)``."""
    AxisLabeling(u, v, AB)
    out: dict[str, int] = {}
    for path in _omega(len(u), len(v)):
        w = _weight_ab_word(path.steps, u, v)
        out[w] = out.get(w, 0) + 1
    return NcPolynomial(out, AB)


def sum_weights_lambda(p: int, q: int) -> NcPolynomial:
    out: dict[str, int] = {}
    for path in _omega(p, q):
        add_into(out, weight_lambda(path)._terms)
    return NcPolynomial._raw(out, CD)


# Gamma ------------------------------------------------------------------------

def _gamma_step_ok(prev: Step | None, prev_armed: bool, s: Step, x: int, y: int,
                   cols: tuple, rows: tuple) -> bool:
    """Whether step ``s`` may follow ``prev`` when starting at (x, y).

    ``prev_armed`` says the previous step was a D lying in the top row of a
    vertical d and above the first part of a horizontal d.
    """
    p, q = len(cols), len(rows)
    if x + s.dx > p or y + s.dy > q:
        return False
    if prev in _BANNED_AFTER and s in _BANNED_AFTER[prev]:
        return False
    if s is U:
        # no U at the bottom of a vertical d
        return rows[y] != ("d", 0)
    if s is UU:
        # UU covers exactly one vertical d
        return rows[y] == ("d", 0)
    if s is RR:
        return cols[x] == ("d", 0)
    if s is R:
        # no R R pair along one horizontal d
        if prev is R and cols[x] == ("d", 1):
            return False
        # no D R inside the top half of a vertical d entered by a D
        return not prev_armed
    return True  # D


def _arms(s: Step, x: int, y: int, cols: tuple, rows: tuple) -> bool:
    # A path can only reach the middle of a vertical d with a D step (U is
    # banned there and UU jumps over it), so a D in the top row of a vertical
    # d always follows a D at its bottom.  The forbidden R must lie over the
    # same horizontal d as the D, i.e. the D is over its first part.
    return s is D and rows[y] == ("d", 1) and cols[x] == ("d", 0)


@lru_cache(maxsize=None)
def _gamma(u: str, v: str) -> tuple[LatticePath, ...]:
    cols, rows = axis_cells(u), axis_cells(v)
    p, q = len(cols), len(rows)
    found: list[tuple[Step, ...]] = []
    order = (R, U, D, RR, UU)

    def walk(x: int, y: int, prev: Step | None, armed: bool, acc: list[Step]) -> None:
        if x == p and y == q:
            found.append(tuple(acc))
            return
        for s in order:
            if not _gamma_step_ok(prev, armed, s, x, y, cols, rows):
                continue
            acc.append(s)
            walk(x + s.dx, y + s.dy, s, _arms(s, x, y, cols, rows), acc)
            acc.pop()

    walk(0, 0, None, False, [])
    return tuple(LatticePath(s) for s in found)


def enumerate_gamma(labels: AxisLabeling | tuple[str, str]) -> list[LatticePath]:
    """All paths of ``Gamma(u, v)`` in canonical order (R < U < D < RR < UU)."""
    labels = _labels(labels, CD)
    return list(_gamma(labels.horizontal, labels.vertical))


def is_gamma_path(path: LatticePath, labels: AxisLabeling | tuple[str, str]) -> bool:
    labels = _labels(labels, CD)
    cols, rows = labels.columns, labels.rows
    x = y = 0
    prev, armed = None, False
    for s in path.steps:
        if not _gamma_step_ok(prev, armed, s, x, y, cols, rows):
            return False
        armed = _arms(s, x, y, cols, rows)
        prev = s
        x += s.dx
        y += s.dy
    return (x, y) == (len(cols), len(rows))


def diagonal_scalar(col: tuple[str, int | None], row: tuple[str, int | None], following: Step | None) -> int:
    """The coefficient k of a D step's weight ``k*d``."""
    if col[0] == "c" and (row[0] == "c" or row == ("d", 0)):
        return 2
    if col == ("d", 0):
        if row[0] == "c" and following in (U, UU, D):
            return 2
        if row == ("d", 0) and following is U:
            return 2
    return 1


def _weight_cd_term(steps: Sequence[Step], cols: tuple, rows: tuple) -> tuple[str, int]:
    out = []
    k = 1
    x = y = 0
    last = len(steps) - 1
    for i, s in enumerate(steps):
        if s is R or s is U:
            out.append("c")
        elif s is RR or s is UU:
            out.append("d")
        else:
            out.append("d")
            k *= diagonal_scalar(cols[x], rows[y], steps[i + 1] if i < last else None)
        x += s.dx
        y += s.dy
    return "".join(out), k


def weight_cd(path: LatticePath, labels: AxisLabeling | tuple[str, str]) -> NcPolynomial:
    """Weight of a Gamma path: R, U -> c; RR, UU -> d; D -> k*d."""
    labels = _labels(labels, CD)
    cols, rows = labels.columns, labels.rows
    x = y = 0
    prev, armed = None, False
    for s in path.steps:
        if not _gamma_step_ok(prev, armed, s, x, y, cols, rows):
            raise ValueError(f"step {s.token} at ({x}, {y}) is not legal for labels "
                             f"{labels.horizontal or '1'}/{labels.vertical or '1'}")
        armed = _arms(s, x, y, cols, rows)
        prev = s
        x += s.dx
        y += s.dy
    word, k = _weight_cd_term(path.steps, cols, rows)
    return NcPolynomial._raw({word: k}, CD)


def sum_weights_cd(u: str, v: str) -> NcPolynomial:
    """Sum of ``weight_cd`` over ``gamma(u, v)``."""
    AxisLabeling(u, v, CD)
    cols, rows = axis_cells(u), axis_cells(v)
    out: dict[str, int] = {}
    for path in _gamma(u, v):
        w, k = _weight_cd_term(path.steps, cols, rows)
        out[w] = out.get(w, 0) + k
    return NcPolynomial(out, CD)


def sum_weights(u: NcPolynomial, v: NcPolynomial) -> NcPolynomial:
    """Bilinear extension of the path sums to polynomials."""
    if u.alphabet is not v.alphabet:
        raise AlphabetMismatch("path sums need two polynomials over one alphabet")
    word_sum = sum_weights_cd if u.alphabet is CD else sum_weights_ab
    out: dict[str, int] = {}
    for x, i in u._terms.items():
        for y, j in v._terms.items():
            add_into(out, word_sum(x, y)._terms, i * j)
    return NcPolynomial._raw(out, u.alphabet)


def clear_cache() -> None:
    _omega.cache_clear()
    _gamma.cache_clear()


def render_paths(labels: AxisLabeling, paths: Iterable[LatticePath], format: str = "svg", **kwargs):
    """Draw labeled grids with one panel per path.

    ``format`` is ``svg``, ``png``, ``pdf`` (via matplotlib) or ``tikz``.
    Returns ``str`` for svg/tikz and ``bytes`` for png/pdf.
    """
    from .plotting import render_path_panels

    return render_path_panels(labels, list(paths), format=format, **kwargs)
