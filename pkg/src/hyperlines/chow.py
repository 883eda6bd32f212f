"""The Chow ring of the Grassmannian ``G(2, n+1)`` of lines in ``P^n``.

Schubert classes ``sigma_{p,q}`` (``n-1 >= p >= q >= 0``) correspond to Schur
polynomials ``s_(p,q)`` in the Chern roots of ``U*``, so ``c_1(U*) = sigma_1``
and ``c_2(U*) = sigma_{1,1}``. Two independent evaluation routes are provided:
Schur expansion followed by truncation, and Pieri-rule recursion from the
elementary-basis form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from hyperlines.exactpoly import BiPoly, Partition2, to_elementary

SIGMA_1 = Partition2(1, 0)
SIGMA_11 = Partition2(1, 1)


class DegreeError(ValueError):
    """A class was integrated that is not of top codimension."""


@dataclass(frozen=True)
class GrassmannianContext:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"G(2, n+1) needs n >= 2, got n={self.n}")

    @property
    def dim(self) -> int:
        return 2 * (self.n - 1)

    def admits(self, lam: tuple[int, int]) -> bool:
        p, q = lam
        return self.n - 1 >= p >= q >= 0


@dataclass(frozen=True)
class ChowElement:
    """An element of ``A(G(2, n+1))`` in the Schubert basis."""

    context: GrassmannianContext
    coeffs: Mapping[Partition2, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition2(*lam)
            if not self.context.admits(lam):
                raise ValueError(f"sigma_{lam} does not live on G(2, {self.context.n + 1})")
            if c:
                clean[lam] = int(c)
        ordered = sorted(clean.items(), key=lambda kv: (kv[0].size, -kv[0].p))
        object.__setattr__(self, "coeffs", dict(ordered))

    @classmethod
    def unit(cls, ctx: GrassmannianContext) -> "ChowElement":
        return cls(ctx, {Partition2(0, 0): 1})

    @classmethod
    def schubert(cls, ctx: GrassmannianContext, p: int, q: int = 0, c: int = 1) -> "ChowElement":
        return cls(ctx, {Partition2(p, q): c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def codimensions(self) -> set[int]:
        return {lam.size for lam in self.coeffs}

    def __add__(self, other: "ChowElement") -> "ChowElement":
        if self.context != other.context:
            raise ValueError("cannot add classes on different Grassmannians")
        acc = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            acc[lam] = acc.get(lam, 0) + c
        return ChowElement(self.context, acc)

    def scale(self, c: int) -> "ChowElement":
        return ChowElement(self.context, {lam: c * v for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.context, frozenset(self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{'' if c == 1 else c}{format_sigma(lam)}" for lam, c in self.coeffs.items()
        )

    def to_json(self) -> list[dict]:
        return [
            {"partition": [lam.p, lam.q], "coefficient": str(c)}
            for lam, c in self.coeffs.items()
        ]

    @classmethod
    def from_json(cls, ctx: GrassmannianContext, data: list[dict]) -> "ChowElement":
        return cls(ctx, {Partition2(*d["partition"]): int(d["coefficient"]) for d in data})


def format_sigma(lam: Partition2) -> str:
    if lam.q == 0:
        return f"σ_{{{lam.p}}}"
    return f"σ_{{{lam.p},{lam.q}}}"


def project(x: Mapping[tuple[int, int], int], ctx: GrassmannianContext) -> ChowElement:
    """Truncate a Schur expansion to ``G(2, n+1)``: ``sigma_{p,q} = 0`` for ``p > n-1``."""
    return ChowElement(ctx, {lam: c for lam, c in x.items() if lam[0] <= ctx.n - 1})


def integrate(x: ChowElement) -> int:
    """Degree of a top-codimension class (coefficient of the point class)."""
    bad = [lam for lam in x.coeffs if lam.size != x.context.dim]
    if bad:
        raise DegreeError(
            f"class {x} has terms of codimension {sorted({lam.size for lam in bad})}, "
            f"expected only {x.context.dim}"
        )
    top = x.context.n - 1
    return x.coeffs.get(Partition2(top, top), 0)


def pieri_multiply(x: ChowElement, special: tuple[int, int]) -> ChowElement:
    """Multiply by ``sigma_1`` or ``sigma_{1,1}`` using the Pieri rule on ``G(2, n+1)``."""
    special = Partition2(*special)
    top = x.context.n - 1
    acc: dict[Partition2, int] = {}

    def put(p, q, c):
        if top >= p >= q:
            key = Partition2(p, q)
            acc[key] = acc.get(key, 0) + c

    if special == SIGMA_1:
        for (p, q), c in x.coeffs.items():
            put(p + 1, q, c)
            put(p, q + 1, c)
    elif special == SIGMA_11:
        for (p, q), c in x.coeffs.items():
            put(p + 1, q + 1, c)
    else:
        raise ValueError(f"Pieri multiplication only by sigma_1 or sigma_11, got {special}")
    return ChowElement(x.context, acc)


def evaluate_via_pieri(x: BiPoly, ctx: GrassmannianContext) -> ChowElement:
    """Evaluate a symmetric polynomial in ``A(G(2, n+1))`` with ``e1 -> sigma_1``, ``e2 -> sigma_11``."""
    elementary = to_elementary(x)
    result = ChowElement(ctx)
    # e2^j computed once per j, then pushed through e1 repeatedly
    by_j: dict[int, dict[int, int]] = {}
    for (i, j), c in elementary.items():
        by_j.setdefault(j, {})[i] = c
    for j, row in by_j.items():
        cls = ChowElement.unit(ctx)
        for _ in range(j):
            cls = pieri_multiply(cls, SIGMA_11)
        for i in range(max(row) + 1):
            if i in row:
                result = result + cls.scale(row[i])
            cls = pieri_multiply(cls, SIGMA_1)
            if cls.is_zero():
                break
    return result
