"""Classes of the limiting lines when a hypersurface degenerates to ``K ∪ L``.

For ``deg K = k`` and ``deg L = l = d - k`` the lines in ``K`` that meet
``K ∩ L ∩ D`` suitably have class ``c_{k+1}(S^k U*) c_l(S^d U* - S^k U*)``;
together with the mirror class for ``L`` they add up to the class
``c_{d+1}(S^d U*)`` of lines on a generic degree-``d`` hypersurface.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from hyperlines.chern import chern_sym_power, difference_class
from hyperlines.chow import ChowElement, GrassmannianContext, integrate, project
from hyperlines.exactpoly import to_schur


@dataclass(frozen=True)
class DegenerationReport:
    n: int
    d: int
    k: int
    l: int  # noqa: E741
    class_K: ChowElement
    class_L: ChowElement
    total: ChowElement
    sum_matches: bool
    counts: Optional[tuple[int, int, int]] = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "l": self.l,
            "class_K": self.class_K.to_json(),
            "class_L": self.class_L.to_json(),
            "total": self.total.to_json(),
            "sum_matches": self.sum_matches,
            "counts": None if self.counts is None else [str(c) for c in self.counts],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DegenerationReport":
        ctx = GrassmannianContext(data["n"])
        counts = data.get("counts")
        return cls(
            n=data["n"],
            d=data["d"],
            k=data["k"],
            l=data["l"],
            class_K=ChowElement.from_json(ctx, data["class_K"]),
            class_L=ChowElement.from_json(ctx, data["class_L"]),
            total=ChowElement.from_json(ctx, data["total"]),
            sum_matches=data["sum_matches"],
            counts=None if counts is None else tuple(int(c) for c in counts),
        )


@dataclass(frozen=True)
class SplittingType:
    """Degrees ``a_i`` of ``N_{alpha/K} = ⊕ O(a_i)``, sorted descending."""

    entries: tuple[int, ...]

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.entries) + ")"


def _check_range(n: int, d: int, k: int) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if not 1 <= k <= d - 1:
        raise ValueError(f"need 1 <= k <= d-1, got d={d}, k={k}")


def sigma_class(n: int, d: int, k: int) -> ChowElement:
    """Class of the lines in ``K`` (degree ``k``) that are limits of lines on ``X_s``."""
    _check_range(n, d, k)
    l = d - k  # noqa: E741
    poly = chern_sym_power(k).top * difference_class(d, k, l)[l]
    return project(to_schur(poly), GrassmannianContext(n))


def total_class(n: int, d: int) -> ChowElement:
    """Class of the lines on a generic degree-``d`` hypersurface in ``P^n``."""
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    return project(to_schur(chern_sym_power(d).top), GrassmannianContext(n))


def report(n: int, d: int, k: int) -> DegenerationReport:
    _check_range(n, d, k)
    class_K = sigma_class(n, d, k)
    class_L = sigma_class(n, d, d - k)
    total = total_class(n, d)
    counts = None
    if d == 2 * n - 3:
        counts = (integrate(class_K), integrate(class_L), integrate(total))
    return DegenerationReport(
        n=n,
        d=d,
        k=k,
        l=d - k,
        class_K=class_K,
        class_L=class_L,
        total=total,
        sum_matches=(class_K + class_L == total),
        counts=counts,
    )


def normal_bundle_types(n: int, k: int) -> list[SplittingType]:
    """Splitting types allowed for lines on a generic degree-``k`` hypersurface in ``P^n``.

    Entries lie in ``[-1, 1]`` and sum to ``n - 1 - k``; there are ``n - 2`` of
    them. Output is in descending lexicographic order.
    """
    if n < 3 or k < 1:
        raise ValueError(f"need n >= 3 and k >= 1, got n={n}, k={k}")
    if k > 2 * n - 3:
        warnings.warn(
            f"a generic hypersurface of degree {k} > 2n-3 = {2 * n - 3} in P^{n} contains no lines",
            stacklevel=2,
        )
        return []
    rank = n - 2
    target = n - 1 - k
    types = []
    # choose counts of +1 and -1; zeros fill the rest
    for plus in range(rank + 1):
        minus = plus - target
        zeros = rank - plus - minus
        if minus < 0 or zeros < 0:
            continue
        types.append(SplittingType((1,) * plus + (0,) * zeros + (-1,) * minus))
    return sorted(types, key=lambda t: t.entries, reverse=True)

