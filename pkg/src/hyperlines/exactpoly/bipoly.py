"""Exact bivariate polynomials in the Chern roots ``a`` and ``b``."""
from __future__ import annotations

from typing import Iterable, Mapping, Optional

from hyperlines.exactpoly import kernels


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class InvariantViolation(ArithmeticError):
    """An exact computation that must succeed did not (e.g. nonzero remainder)."""


class BiPoly:
    """Immutable polynomial ``sum c * a**p * b**q`` with Python-integer coefficients.

    Terms are kept as a dict ``{(p, q): c}`` with no zero coefficients; the
    zero polynomial is the empty dict.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple[int, int], int]] = None):
        clean = {}
        if terms:
            for (p, q), c in terms.items():
                if p < 0 or q < 0:
                    raise ValueError(f"negative exponent in term {(p, q)}")
                if c:
                    clean[(int(p), int(q))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "BiPoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._wrap({(0, 0): c} if c else {})

    @classmethod
    def linear(cls, ca: int, cb: int) -> "BiPoly":
        """The linear form ``ca*a + cb*b``."""
        return cls({(1, 0): ca, (0, 1): cb})

    @classmethod
    def monomial(cls, p: int, q: int, c: int = 1) -> "BiPoly":
        return cls({(p, q): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, p: int, q: int) -> int:
        return self._terms.get((p, q), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(p + q for p, q in self._terms)

    def is_homogeneous(self, deg: Optional[int] = None) -> bool:
        if not self._terms:
            return True
        degs = {p + q for p, q in self._terms}
        if len(degs) != 1:
            return False
        return deg is None or degs == {deg}

    def graded_part(self, deg: int) -> "BiPoly":
        return BiPoly._wrap({k: c for k, c in self._terms.items() if k[0] + k[1] == deg})

    def swap(self) -> "BiPoly":
        """Image under the substitution ``a <-> b``."""
        return BiPoly._wrap({(q, p): c for (p, q), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        t = self._terms
        return all(t.get((q, p)) == c for (p, q), c in t.items())

    def is_antisymmetric(self) -> bool:
        t = self._terms
        return all(t.get((q, p)) == -c for (p, q), c in t.items())

    def leading_term(self) -> tuple[tuple[int, int], int]:
        """Lexicographically largest term (``a > b``)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self._terms)
        return key, self._terms[key]

    def evaluate(self, a, b):
        return sum(c * a**p * b**q for (p, q), c in self._terms.items())

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return BiPoly._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return BiPoly()
            return BiPoly._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return BiPoly._wrap(kernels.mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (p, q) in sorted(self._terms, reverse=True):
            c = self._terms[(p, q)]
            mono = "*".join(
                s for s in (_power("a", p), _power("b", q)) if s
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def exact_div(self, divisor: "BiPoly") -> "BiPoly":
        """Quotient ``q`` with ``q * divisor == self``; raises if not divisible.

        Lexicographic leading-term division; the remainder must vanish.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        (dp, dq), dc = divisor.leading_term()
        rem = dict(self._terms)
        quot = {}
        dterms = list(divisor._terms.items())
        while rem:
            (p, q) = max(rem)
            c = rem[(p, q)]
            if p < dp or q < dq or c % dc:
                raise InvariantViolation(f"{self} is not divisible by {divisor}")
            step = (p - dp, q - dq)
            qc = c // dc
            quot[step] = qc
            for (s, t), e in dterms:
                key = (s + step[0], t + step[1])
                v = rem.get(key, 0) - qc * e
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return BiPoly._wrap(quot)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


A = BiPoly.monomial(1, 0)
B = BiPoly.monomial(0, 1)
ONE = BiPoly.const(1)
ZERO = BiPoly()
VANDERMONDE = A - B


def add(x: BiPoly, y: BiPoly) -> BiPoly:
    return x + y


def mul(x: BiPoly, y: BiPoly) -> BiPoly:
    return x * y


def pow(x: BiPoly, e: int) -> BiPoly:  # noqa: A001 - mirrors the ring operation name
    return x**e


def product(factors: Iterable[BiPoly]) -> BiPoly:
    result = ONE
    for f in factors:
        result = result * f
    return result


def is_symmetric(x: BiPoly) -> bool:
    return x.is_symmetric()


def divide_by_vandermonde(x: BiPoly) -> BiPoly:
    """Return ``q`` with ``q * (a - b) == x`` for antisymmetric ``x``."""
    if not x.is_antisymmetric():
        raise PreconditionError(f"{x} is not antisymmetric in a, b")
    # synthetic division by a - b, peeling the lex-leading term each step
    rem = dict(x._terms)
    quot = {}
    while rem:
        (p, q) = max(rem)
        c = rem.pop((p, q))
        if p == 0:
            raise InvariantViolation(f"{x} is not divisible by a - b")
        quot[(p - 1, q)] = c
        key = (p - 1, q + 1)
        v = rem.get(key, 0) + c
        if v:
            rem[key] = v
        else:
            rem.pop(key, None)
    return BiPoly._wrap(quot)
