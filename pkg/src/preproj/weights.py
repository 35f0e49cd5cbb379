"""Weights on extended Dynkin quivers: ordered-field arithmetic, dual
reflections, quasi-dominance, and the numbers game used to find smooth
deformations.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .dynkin import ExtDynkinType, cartan, delta_vector
from .errors import DomainError, SearchBudgetExceeded


@dataclass(frozen=True, order=False)
class FieldElem:
    """An element a + b*i with exact rational a, b.

    The total order is lexicographic on (re, im): it extends the order on
    the rationals, is translation invariant, and every element is below
    some integer, which is all the theory needs from it.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElem(Fraction(x))
        if isinstance(x, str):
            return parse_field_elem(x)
        raise DomainError(f"cannot coerce {x!r} to a field element")

    def __add__(self, other) -> "FieldElem":
        o = FieldElem.of(other)
        return FieldElem(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.re, -self.im)

    def __sub__(self, other) -> "FieldElem":
        return self + (-FieldElem.of(other))

    def __rsub__(self, other) -> "FieldElem":
        return FieldElem.of(other) + (-self)

    def __mul__(self, other) -> "FieldElem":
        o = FieldElem.of(other)
        return FieldElem(self.re * o.re - self.im * o.im,
                         self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElem":
        o = FieldElem.of(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero field element")
        return self * FieldElem(o.re / norm, -o.im / norm)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        try:
            o = FieldElem.of(other)
        except DomainError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def _key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __lt__(self, other) -> bool:
        return self._key() < FieldElem.of(other)._key()

    def __le__(self, other) -> bool:
        return self._key() <= FieldElem.of(other)._key()

    def __gt__(self, other) -> bool:
        return self._key() > FieldElem.of(other)._key()

    def __ge__(self, other) -> bool:
        return self._key() >= FieldElem.of(other)._key()

    def is_rational(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return format_field_elem(self)

    def __repr__(self) -> str:
        return f"FieldElem({str(self)!r})"


ZERO = FieldElem()
ONE = FieldElem(Fraction(1))

_RAT = r"[+-]?\d+(?:/\d+)?"
_ELEM_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?:\s*(?P<im1>[+-]\s*(?:\d+(?:/\d+)?)?)\s*i)?"
    rf"|(?P<im2>[+-]?(?:\d+(?:/\d+)?)?)\s*i)\s*$")


def parse_field_elem(text: str) -> FieldElem:
    """Parse "a", "a/b", "a/b+c/d i", or a pure imaginary like "-i"."""
    m = _ELEM_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse field element {text!r}")
    if m.group("im2") is not None:
        im = m.group("im2").replace(" ", "")
        if im in ("", "+"):
            im = "1"
        elif im == "-":
            im = "-1"
        return FieldElem(Fraction(0), Fraction(im))
    re_part = Fraction(m.group("re"))
    im_part = Fraction(0)
    if m.group("im1") is not None:
        s = m.group("im1").replace(" ", "")
        if s in ("+", "-"):
            s += "1"
        im_part = Fraction(s)
    return FieldElem(re_part, im_part)


def format_field_elem(x: FieldElem) -> str:
    if x.im == 0:
        return str(x.re)
    im = f"{abs(x.im)}i" if abs(x.im) != 1 else "i"
    sign = "+" if x.im > 0 else "-"
    if x.re == 0:
        return f"{'-' if x.im < 0 else ''}{im}"
    return f"{x.re}{sign}{im}"


def compare(a: FieldElem, b: FieldElem) -> int:
    """-1, 0 or 1 for the total order on the field."""
    ka, kb = FieldElem.of(a)._key(), FieldElem.of(b)._key()
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Weight:
    """A label from the field at each vertex 0..n."""

    entries: tuple[FieldElem, ...]

    @staticmethod
    def of(values) -> "Weight":
        return Weight(tuple(FieldElem.of(v) for v in values))

    def __getitem__(self, i: int) -> FieldElem:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_weight(self)


def parse_weight(text: str, n_vertices: int | None = None) -> Weight:
    parts = [p for p in text.split(",")]
    w = Weight.of([parse_field_elem(p) for p in parts])
    if n_vertices is not None and len(w) != n_vertices:
        raise DomainError(f"weight has {len(w)} entries, expected {n_vertices}")
    return w


def format_weight(w: Weight) -> str:
    return ",".join(format_field_elem(x) for x in w.entries)


def _check_length(t: ExtDynkinType, w: Weight) -> None:
    if len(w) != t.n + 1:
        raise DomainError(f"weight has {len(w)} entries but {t} has {t.n + 1} vertices")


def epsilon0(t: ExtDynkinType) -> Weight:
    return Weight.of([1] + [0] * t.n)


def dot_delta(t: ExtDynkinType, w: Weight) -> FieldElem:
    _check_length(t, w)
    d = delta_vector(t)
    total = ZERO
    for x, di in zip(w.entries, d):
        total = total + x * di
    return total


def is_quasi_dominant(t: ExtDynkinType, w: Weight) -> bool:
    _check_length(t, w)
    return all(w[i] >= ZERO for i in range(1, t.n + 1))


def dual_reflection(t: ExtDynkinType, w: Weight, i: int) -> Weight:
    """r_i(w)_j = w_j - C~_{ij} w_i; preserves w . delta and the lattice."""
    _check_length(t, w)
    if not 0 <= i <= t.n:
        raise DomainError(f"vertex {i} out of range for {t}")
    row = cartan(t).cartan_ext[i]
    wi = w[i]
    return Weight(tuple(w[j] - wi * row[j] for j in range(t.n + 1)))


def apply_reflections(t: ExtDynkinType, w: Weight, seq: list[int]) -> Weight:
    for i in seq:
        w = dual_reflection(t, w, i)
    return w


@dataclass(frozen=True)
class WeightClass:
    """Classification flags for O^lambda; singular/smooth require
    quasi-dominance and are None otherwise."""

    commutative: bool
    quasi_dominant: bool
    dominant: bool
    singular: bool | None
    smooth: bool | None


def classify_weight(t: ExtDynkinType, w: Weight) -> WeightClass:
    _check_length(t, w)
    qd = is_quasi_dominant(t, w)
    dom = qd and w[0] >= ZERO
    commutative = dot_delta(t, w) == ZERO
    singular = smooth = None
    if qd:
        singular = any(not w[i] for i in range(1, t.n + 1))
        smooth = not singular
    return WeightClass(commutative, qd, dom, singular, smooth)


QUASI_DOM_CAP = 10 ** 6


def quasi_dominantize(t: ExtDynkinType, w: Weight) -> tuple[Weight, list[int]]:
    """Reflect at non-extending vertices until the weight is quasi-dominant.

    Plays the finite-type numbers game (fire the most negative vertex, ties
    to the smallest index); this terminates within the number of positive
    roots of the Dynkin part.
    """
    _check_length(t, w)
    seq: list[int] = []
    steps = 0
    while True:
        neg = [i for i in range(1, t.n + 1) if w[i] < ZERO]
        if not neg:
            return w, seq
        i = min(neg, key=lambda j: (w[j]._key(), j))
        w = dual_reflection(t, w, i)
        seq.append(i)
        steps += 1
        if steps > QUASI_DOM_CAP:
            raise SearchBudgetExceeded("quasi-dominantization exceeded the orbit cap")


def schedler_configuration(t: ExtDynkinType) -> Weight:
    """(1 - sum_{i>=1} delta_i, 1, 1, ..., 1)."""
    d = delta_vector(t)
    return Weight.of([1 - sum(d[1:])] + [1] * t.n)


def numbers_game(t: ExtDynkinType, w: Weight, max_steps: int = 200_000
                 ) -> tuple[Weight, list[int]]:
    """Fire negative vertices (any index, most negative first) until none
    remain.  Returns the terminal weight and the firing sequence."""
    _check_length(t, w)
    fired: list[int] = []
    for _ in range(max_steps):
        neg = [i for i in range(t.n + 1) if w[i] < ZERO]
        if not neg:
            return w, fired
        i = min(neg, key=lambda j: (w[j]._key(), j))
        w = dual_reflection(t, w, i)
        fired.append(i)
    raise SearchBudgetExceeded("numbers game did not terminate within the step budget")


def _candidate_positives(t: ExtDynkinType, max_entry: int = 3):
    """Integer weights with all non-extending entries positive, on the
    level-1 hyperplane, ordered by total size."""
    n = t.n
    d = delta_vector(t)
    yield schedler_configuration(t)
    pools: list[tuple[int, ...]] = []
    for total in range(n, max_entry * n + 1):
        for comp in _compositions(total, n, max_entry):
            pools.append(comp)
    for comp in pools:
        w = Weight.of([1 - sum(c * d[i + 1] for i, c in enumerate(comp))] + list(comp))
        if w != schedler_configuration(t):
            yield w


def _compositions(total: int, parts: int, max_entry: int):
    if parts == 1:
        if 1 <= total <= max_entry:
            yield (total,)
        return
    for first in range(1, max_entry + 1):
        rest = total - first
        if parts - 1 <= rest <= (parts - 1) * max_entry:
            for tail in _compositions(rest, parts - 1, max_entry):
                yield (first,) + tail


def resolve_to_smooth(t: ExtDynkinType, max_candidates: int = 20_000
                      ) -> tuple[list[int], Weight]:
    """A reflection sequence rho with rho(eps_0)_i > 0 for all i >= 1.

    Searches small all-positive integer configurations mu on the level-1
    hyperplane and plays the numbers game from mu; when the game ends at
    eps_0 the reversed firing sequence is the wanted rho.
    """
    eps = epsilon0(t)
    tried = 0
    for mu in _candidate_positives(t):
        tried += 1
        if tried > max_candidates:
            break
        try:
            terminal, fired = numbers_game(t, mu)
        except SearchBudgetExceeded:
            continue
        if terminal == eps:
            seq = list(reversed(fired))
            if apply_reflections(t, eps, seq) != mu:
                raise SearchBudgetExceeded("replay of the found sequence failed")
            return seq, mu
    raise SearchBudgetExceeded(f"no smooth deformation found for {t} within the budget")
