"""Two-row partitions and symmetric-function bases in two variables."""
from __future__ import annotations

from collections import namedtuple
from typing import Mapping

from hyperlines.exactpoly.bipoly import (
    VANDERMONDE,
    BiPoly,
    InvariantViolation,
    PreconditionError,
)

_Partition2 = namedtuple("_Partition2", "p q")


class Partition2(_Partition2):
    """Partition ``(p, q)`` with ``p >= q >= 0``; indexes ``s_(p,q)`` and ``sigma_{p,q}``."""

    __slots__ = ()

    def __new__(cls, p: int, q: int = 0):
        if not (p >= q >= 0):
            raise ValueError(f"({p}, {q}) is not a partition with p >= q >= 0")
        return super().__new__(cls, int(p), int(q))

    @property
    def size(self) -> int:
        return self.p + self.q

    def __str__(self):
        return f"({self.p},{self.q})"


SchurExpansion = dict  # Partition2 -> int, no zero coefficients


def schur_poly(p: int, q: int = 0) -> BiPoly:
    """``s_(p,q)(a, b) = (ab)^q * h_{p-q}(a, b)``."""
    lam = Partition2(p, q)
    return BiPoly({(i, lam.p + lam.q - i): 1 for i in range(lam.q, lam.p + 1)})


def to_schur(x: BiPoly) -> dict[Partition2, int]:
    """Expand a symmetric polynomial in the Schur basis.

    ``x * (a - b)`` is antisymmetric; its lex-leading monomial ``a^{p+1} b^q``
    (always with ``p+1 > q``) is peeled off together with its mirror image,
    which is exactly ``c * (a - b) * s_(p,q)``.
    """
    if not x.is_symmetric():
        raise PreconditionError(f"{x} is not symmetric in a, b")
    rem = dict((x * VANDERMONDE).items())
    out: dict[Partition2, int] = {}
    last = None
    while rem:
        (p1, q) = max(rem)
        if last is not None and (p1, q) >= last:
            raise InvariantViolation("Schur peeling failed to decrease the leading monomial")
        last = (p1, q)
        c = rem[(p1, q)]
        if p1 <= q:
            raise InvariantViolation(f"antisymmetric remainder has leading monomial {(p1, q)}")
        out[Partition2(p1 - 1, q)] = c
        for key, v in (((p1, q), -c), ((q, p1), c)):
            nv = rem.get(key, 0) + v
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    return out


def from_schur(expansion: Mapping[tuple[int, int], int]) -> BiPoly:
    result = BiPoly()
    for (p, q), c in expansion.items():
        result = result + schur_poly(p, q) * c
    return result


def to_elementary(x: BiPoly) -> dict[tuple[int, int], int]:
    """Write a symmetric ``x`` as ``sum c_{ij} e1^i e2^j`` with ``e1 = a+b``, ``e2 = ab``.

    Returns ``{(i, j): c_ij}``. The lex-leading monomial ``a^p b^q`` of a
    symmetric polynomial has ``p >= q`` and equals the leading monomial of
    ``e1^(p-q) e2^q``.
    """
    if not x.is_symmetric():
        raise PreconditionError(f"{x} is not symmetric in a, b")
    e1 = BiPoly.linear(1, 1)
    e2 = BiPoly.monomial(1, 1)
    rem = x
    out = {}
    while rem:
        (p, q), c = rem.leading_term()
        out[(p - q, q)] = c
        rem = rem - (e1 ** (p - q)) * (e2**q) * c
    return out
