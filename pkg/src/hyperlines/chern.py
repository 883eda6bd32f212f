"""Chern classes of symmetric powers of a rank-two bundle and their differences.

With Chern roots ``a``, ``b`` of ``U*``, the total Chern class of ``S^k U*``
is ``prod_{i=0}^{k} (1 + (k-i) a + i b)``. Everything here is exact and
symbolic; identities with factorial or ``(a - b)^l`` denominators are checked
after clearing them.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from hyperlines.exactpoly import ONE, VANDERMONDE, ZERO, BiPoly, InvariantViolation, product


@dataclass(frozen=True)
class ChernSeries:
    """``graded[i] = c_i(S^k U*)`` for ``0 <= i <= k+1``."""

    k: int
    graded: tuple[BiPoly, ...]

    def __getitem__(self, i: int) -> BiPoly:
        # c_i vanishes above the rank
        if 0 <= i < len(self.graded):
            return self.graded[i]
        return ZERO

    @property
    def top(self) -> BiPoly:
        return self.graded[self.k + 1]


@dataclass(frozen=True)
class DifferenceSeries:
    """``graded[i] = c_i(S^d U* - S^k U*)`` for ``0 <= i <= upto``."""

    d: int
    k: int
    graded: tuple[BiPoly, ...]

    @property
    def l(self) -> int:  # noqa: E743
        return self.d - self.k

    def __getitem__(self, i: int) -> BiPoly:
        return self.graded[i]


@dataclass(frozen=True)
class SegreCoefficient:
    """``f_i(a, b; l)``: degree-``i`` part of ``1 / c(S^l U*)``."""

    l: int  # noqa: E741
    i: int
    value: BiPoly


def root_form(k: int, i: int) -> BiPoly:
    """The Chern root ``(k-i) a + i b`` of ``S^k U*``."""
    return BiPoly.linear(k - i, i)


@lru_cache(maxsize=None)
def chern_sym_power(k: int) -> ChernSeries:
    if k < 0:
        raise ValueError(f"symmetric power degree must be nonnegative, got {k}")
    # graded[j] accumulates the j-th elementary symmetric function of the roots
    graded = [ONE]
    for i in range(k + 1):
        root = root_form(k, i)
        graded.append(ZERO)
        for j in range(len(graded) - 1, 0, -1):
            graded[j] = graded[j] + graded[j - 1] * root
    return ChernSeries(k, tuple(graded))


@lru_cache(maxsize=None)
def _difference(d: int, k: int, upto: int) -> tuple[BiPoly, ...]:
    if upto == 0:
        return (ONE,)
    prev = _difference(d, k, upto - 1)
    cd, ck = chern_sym_power(d), chern_sym_power(k)
    value = cd[upto]
    for j in range(upto):
        value = value - prev[j] * ck[upto - j]
    return prev + (value,)


def difference_class(d: int, k: int, upto: int) -> DifferenceSeries:
    """Inductive Chern classes of the formal difference ``S^d U* - S^k U*``."""
    if not d > k >= 0:
        raise ValueError(f"need d > k >= 0, got d={d}, k={k}")
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    return DifferenceSeries(d, k, _difference(d, k, upto))


@lru_cache(maxsize=None)
def _segre_series(l: int, upto: int) -> tuple[BiPoly, ...]:  # noqa: E741
    if upto == 0:
        return (ONE,)
    prev = _segre_series(l, upto - 1)
    c = chern_sym_power(l)
    value = ZERO
    for i in range(1, upto + 1):
        value = value - c[i] * prev[upto - i]
    return prev + (value,)


def segre_f(l: int, i: int) -> SegreCoefficient:  # noqa: E741
    if l < 1 or i < 0:
        raise ValueError(f"need l >= 1 and i >= 0, got l={l}, i={i}")
    return SegreCoefficient(l, i, _segre_series(l, i)[i])


def lemma_3_4_rhs(l: int, i: int) -> BiPoly:  # noqa: E741
    """``sum_j (-1)^(i+j) C(l,j) ((l-j)a + jb)^(l+i)``, i.e. ``l! (a-b)^l f_i``."""
    total = ZERO
    for j in range(l + 1):
        term = root_form(l, j) ** (l + i) * comb(l, j)
        total = total + (term if (i + j) % 2 == 0 else -term)
    return total


def verify_lemma_3_4(l: int, i_max: int) -> bool:  # noqa: E741
    """Closed form of the Segre coefficients, denominators cleared."""
    scale = VANDERMONDE**l * factorial(l)
    return all(
        segre_f(l, i).value * scale == lemma_3_4_rhs(l, i) for i in range(i_max + 1)
    )


def verify_eq_3_6(l: int) -> bool:  # noqa: E741
    """``sum_j (-1)^(j+l) C(l,j) prod_{i != j} ((l-i)a + ib) == l! (a-b)^l``."""
    roots = [root_form(l, i) for i in range(l + 1)]
    lhs = ZERO
    for j in range(l + 1):
        term = product(r for i, r in enumerate(roots) if i != j) * comb(l, j)
        lhs = lhs + (term if (j + l) % 2 == 0 else -term)
    return lhs == VANDERMONDE**l * factorial(l)


def verify_lemma_3_7(l: int) -> bool:  # noqa: E741
    """``sum_j (-1)^j C(l,j) ((l-j)a + jb)^n == 0`` for ``0 <= n <= l-1``."""
    for n in range(l):
        total = ZERO
        for j in range(l + 1):
            term = root_form(l, j) ** n * comb(l, j)
            total = total + (term if j % 2 == 0 else -term)
        if total:
            return False
    return True


def theorem_3_3_terms(k: int, l: int) -> tuple[BiPoly, BiPoly, BiPoly]:  # noqa: E741
    """The two summands and the right-hand side of the splitting identity."""
    d = k + l
    left = chern_sym_power(k).top * difference_class(d, k, l)[l]
    right = chern_sym_power(l).top * difference_class(d, l, k)[k]
    return left, right, chern_sym_power(d).top


def verify_theorem_3_3(k: int, l: int) -> bool:  # noqa: E741
    if k < 1 or l < 1:
        raise ValueError(f"need k, l >= 1, got k={k}, l={l}")
    left, right, total = theorem_3_3_terms(k, l)
    return left + right == total


def predicted_lambda(k: int, l: int) -> int:  # noqa: E741
    return sum(comb(l + j, j) for j in range(k + 1))


def verify_prop_3_11(k: int, l: int) -> tuple[bool, int | None]:  # noqa: E741
    """Divide ``c_{l+1}(S^{k+l} - S^k)`` by ``c_{l+1}(S^l)``.

    Returns ``(ok, quotient)``; ``quotient`` is None when the division is not
    exact or not a constant.
    """
    if k < 0 or l < 1:
        raise ValueError(f"need k >= 0 and l >= 1, got k={k}, l={l}")
    num = difference_class(k + l, k, l + 1)[l + 1]
    den = chern_sym_power(l).top
    try:
        quot = num.exact_div(den)
    except InvariantViolation:
        return False, None
    if quot.degree() not in (0, None):
        return False, None
    lam = quot.coeff(0, 0)
    return lam == predicted_lambda(k, l), lam


def clear_caches() -> None:
    """Drop memoized series (used to time computations from a cold start)."""
    chern_sym_power.cache_clear()
    _difference.cache_clear()
    _segre_series.cache_clear()
