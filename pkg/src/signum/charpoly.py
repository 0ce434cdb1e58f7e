"""Characteristic polynomials, cycle-sum signs, and sign-variation counts.

The characteristic polynomial of any realization expands over composite
cycles: the coefficient of x^(n-k) is (-1)^k times the properly signed sum
of all length-k cycles.  Working over the pattern alone therefore gives
each coefficient a symbolic sign (possibly ambiguous), and counting sign
variations bounds the number of positive and negative real eigenvalues.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import NonFinite, OrderCapExceeded, ZeroLeading
from .graphs import build_digraph
from .patterns import AmbSign, SignPattern
from .cycles import composite_cycles_of_length

__all__ = [
    "CharPoly",
    "EkSign",
    "Variations",
    "VariationRange",
    "DetSign",
    "char_poly",
    "ek_sign",
    "descartes",
    "descartes_symbolic",
    "sign_det",
    "coefficient_sign_threshold",
]

EK_ORDER_CAP = 16


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial, coefficients ascending: coeffs[k] multiplies x^k."""

    coeffs: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def descending(self) -> tuple[float, ...]:
        return tuple(reversed(self.coeffs))

    def __call__(self, x: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class EkSign:
    k: int
    sign: AmbSign


@dataclass(frozen=True)
class Variations:
    v_plus: int
    v_minus: int


@dataclass(frozen=True)
class VariationRange:
    """Variation counts over every resolution of ambiguous coefficients."""

    v_plus: tuple[int, int]
    v_minus: tuple[int, int]


@dataclass(frozen=True)
class DetSign:
    value: AmbSign


def char_poly(matrix: np.ndarray) -> CharPoly:
    """Monic characteristic polynomial via Hessenberg reduction.

    After the orthogonal reduction, the leading principal characteristic
    polynomials of an upper Hessenberg matrix satisfy a short recurrence
    whose subdiagonal products are the only couplings.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("char_poly needs a square matrix")
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has non-finite entries")
    n = a.shape[0]
    if n == 0:
        return CharPoly((1.0,))
    h = scipy.linalg.hessenberg(a)
    # polys[k] holds the ascending coefficients of det(xI - H[:k, :k])
    polys: list[np.ndarray] = [np.array([1.0])]
    for k in range(1, n + 1):
        term = np.zeros(k + 1)
        shifted = polys[k - 1]
        term[1 : k + 1] += shifted
        term[:k] -= h[k - 1, k - 1] * shifted
        subdiag = 1.0
        for m in range(1, k):
            subdiag *= h[k - m, k - m - 1]
            low = h[k - 1 - m, k - 1] * subdiag
            term[: k - m] -= low * polys[k - 1 - m]
        polys.append(term)
    return CharPoly(tuple(float(c) for c in polys[n]))


def ek_sign(pattern: SignPattern, k: int) -> EkSign:
    """Symbolic sign of the properly signed sum of length-k cycles.

    ZERO when no length-k composite cycle exists, PLUS or MINUS when all
    agree, AMBIGUOUS when both signs occur.  Loops count as length-1
    cycles.  Exhaustive, so capped at order 16.
    """
    if not 1 <= k <= pattern.n:
        raise ValueError(f"k={k} out of range 1..{pattern.n}")
    if pattern.n > EK_ORDER_CAP:
        raise OrderCapExceeded(f"cycle-sum sign enumeration capped at order {EK_ORDER_CAP}")
    digraph = build_digraph(pattern)
    acc = AmbSign.ZERO
    for comp in composite_cycles_of_length(digraph, k, include_loops=True):
        acc = acc.add(AmbSign.from_int(comp.sign))
        if acc is AmbSign.AMBIGUOUS:
            break
    return EkSign(k, acc)


def coefficient_sign_threshold(coeffs: Sequence[float]) -> float:
    """Relative zero threshold for coefficient signs."""
    return 1e-8 * (1.0 + max(abs(float(c)) for c in coeffs))


def _as_descending_signs(poly) -> list[int]:
    if isinstance(poly, CharPoly):
        coeffs = poly.descending()
    else:
        coeffs = tuple(poly)
    values = [float(c) for c in coeffs]
    tau = coefficient_sign_threshold(values)
    return [0 if abs(v) <= tau else (1 if v > 0 else -1) for v in values]


def _variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def descartes(poly) -> Variations:
    """Sign-variation counts bounding positive and negative real root counts.

    Accepts a CharPoly or a descending coefficient sequence (leading
    first).  v_plus counts variations of the coefficients as given, v_minus
    after substituting x -> -x.  The positive (negative) real root count
    equals the corresponding variation count minus a nonnegative even
    number.
    """
    signs = _as_descending_signs(poly)
    if not signs or signs[0] == 0:
        raise ZeroLeading("leading coefficient is zero")
    degree = len(signs) - 1
    flipped = [s if (degree - t) % 2 == 0 else -s for t, s in enumerate(signs)]
    return Variations(_variations(signs), _variations(flipped))


def descartes_symbolic(signs: Sequence[AmbSign]) -> VariationRange:
    """Variation ranges for a descending symbolic sign vector.

    Each AMBIGUOUS coefficient may resolve to +, -, or 0; the returned
    ranges cover every resolution, so conclusions drawn from them hold for
    the whole qualitative class.
    """
    if not signs or signs[0] in (AmbSign.ZERO, AmbSign.AMBIGUOUS):
        raise ZeroLeading("leading coefficient sign must be + or -")
    amb_positions = [t for t, s in enumerate(signs) if s is AmbSign.AMBIGUOUS]
    if len(amb_positions) > 10:
        degree = len(signs) - 1
        return VariationRange((0, degree), (0, degree))
    base = [1 if s is AmbSign.PLUS else (-1 if s is AmbSign.MINUS else 0) for s in signs]
    vp_lo = vm_lo = len(signs)
    vp_hi = vm_hi = 0
    for combo in itertools.product((-1, 0, 1), repeat=len(amb_positions)):
        resolved = list(base)
        for pos, val in zip(amb_positions, combo):
            resolved[pos] = val
        var = descartes(resolved)
        vp_lo, vp_hi = min(vp_lo, var.v_plus), max(vp_hi, var.v_plus)
        vm_lo, vm_hi = min(vm_lo, var.v_minus), max(vm_hi, var.v_minus)
    return VariationRange((vp_lo, vp_hi), (vm_lo, vm_hi))


def sign_det(pattern: SignPattern) -> DetSign:
    """Determinant sign over the qualitative class.

    PLUS or MINUS certify sign nonsingularity, ZERO certifies sign
    singularity, AMBIGUOUS means both a zero and a nonzero determinant are
    attainable.  The determinant terms are exactly the spanning composite
    cycles with their proper signs.
    """
    return DetSign(ek_sign(pattern, pattern.n).sign)
