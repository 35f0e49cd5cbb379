"""Type ~A specifics: the generators-and-relations presentation of the
corner algebra and the interior family of short exact sequences with the
type-A translation rule.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dynkin import ExtDynkinType
from .errors import DomainError
from .weights import FieldElem, ONE, Weight, ZERO, dot_delta


def _poly_mul(a: list[FieldElem], b: list[FieldElem]) -> list[FieldElem]:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_shift(coeffs: tuple[FieldElem, ...], shift: FieldElem) -> tuple[FieldElem, ...]:
    """Coefficients of p(z + shift) from those of p(z), ascending degree."""
    out = [ZERO]
    for c in reversed(coeffs):  # Horner: p = p*(z+shift) + c
        out = _poly_mul(out, [shift, ONE])
        out[0] = out[0] + c
    return tuple(out[: len(coeffs)])


@dataclass(frozen=True)
class TypeAPresentation:
    """Relations of the corner algebra of ~A_n:

        xz = (z + shift) x,   yz = (z - shift) y,
        xy = prod_{i=0}^{n} (z + lam_1 + ... + lam_i),
        yx = xy evaluated at z - shift,

    with shift = lam . delta; polynomial coefficients ascend in degree.
    """

    n: int
    shift: FieldElem
    xy: tuple[FieldElem, ...]
    yx: tuple[FieldElem, ...]


def presentation(n: int, w: Weight) -> TypeAPresentation:
    t = ExtDynkinType("A", n)
    if len(w) != n + 1:
        raise DomainError(f"weight has {len(w)} entries but ~A{n} has {n + 1} vertices")
    shift = dot_delta(t, w)
    xy: list[FieldElem] = [ONE]
    partial = ZERO
    for i in range(n + 1):
        partial = partial + w[i] if i >= 1 else partial
        xy = _poly_mul(xy, [partial, ONE])
    xy_t = tuple(xy)
    yx_t = poly_shift(xy_t, -shift)
    return TypeAPresentation(n, shift, xy_t, yx_t)


@dataclass(frozen=True)
class TypeASequence:
    """0 -> V_k -> V_i (+) V_j -> V_{i+j-k} -> 0 with V_{n+1} read as V_0."""

    n: int
    i: int
    j: int
    kernel: int
    cokernel: int

    @property
    def middle(self) -> tuple[int, int]:
        n1 = self.n + 1
        return (self.i % n1, self.j % n1)

    def translation_image(self, k: int) -> int:
        if not self.i < k < self.j:
            raise DomainError(f"vertex {k} is not interior to ({self.i}, {self.j})")
        return self.i + self.j - k


def type_a_sequence(n: int, w: Weight, i: int, j: int, k: int) -> TypeASequence:
    """The interior member of the sequence family: requires i < k < j and
    vanishing weights strictly between i and j."""
    if len(w) != n + 1:
        raise DomainError(f"weight has {len(w)} entries but ~A{n} has {n + 1} vertices")
    if not (0 <= i < j <= n + 1):
        raise DomainError(f"need 0 <= i < j <= n+1, got i={i}, j={j}")
    if not (i < k < j):
        raise DomainError(f"need i < k < j, got k={k}")
    for m in range(i + 1, j):
        if w[m] != ZERO:
            raise DomainError(f"weight at interior vertex {m} must vanish, got {w[m]}")
    return TypeASequence(n, i, j, k, i + j - k)
