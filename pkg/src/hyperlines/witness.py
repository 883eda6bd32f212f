"""Exact linear-algebra checks on an explicit degeneration witness.

The witness is the family

    D: x_n x0^(d-1) + x_{n-1} x0^(d-3) x1^2 + ... + x_{n-r+1} x0^(d-2r+1) x1^(2r-2)
    K: x_2 x0^(k-1) + x_3 x0^(k-3) x1^2 + ... + x_{m+1} x0^(k-2m+1) x1^(2m-2) + x_{m+2} x1^(k-1)
    L: x0^l - x1^l
    alpha: x_2 = ... = x_n = 0

with ``m = k // 2`` and ``r = (l + 1) // 2``. For it we check that
``Phi_{K,alpha}(a_0..a_n) = sum a_i dK/dx_i |_alpha`` is onto
``H^0(O_alpha(k))`` with kernel of dimension ``2n - k + 1``, and that the
monomials ``x0^d, x0^(d-1) x1, ..., x0^(d-l+1) x1^(l-1)`` restrict onto the
``l`` points of ``alpha ∩ L``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

Monomials = dict  # exponent tuple of length n+1 -> int


@dataclass(frozen=True)
class WitnessProblem:
    n: int
    d: int
    k: int

    def __post_init__(self):
        n, d, k = self.n, self.d, self.k
        if n < 3:
            raise ValueError(f"witness needs n >= 3, got n={n}")
        if not 1 <= k < d:
            raise ValueError(f"need 1 <= k < d, got d={d}, k={k}")
        if d > 2 * n - 3:
            raise ValueError(f"d={d} exceeds 2n-3={2 * n - 3}: generic hypersurface has no lines")
        m, r = self.m, self.r
        bound = n - 1 if k % 2 else n
        if m + 2 > bound:
            raise ValueError(f"m+2={m + 2} exceeds {bound} (k={k} {'odd' if k % 2 else 'even'})")
        if n - r + 1 < m + 2:
            raise ValueError(f"n-r+1={n - r + 1} < m+2={m + 2}: D and K share variables")

    @property
    def l(self) -> int:  # noqa: E743
        return self.d - self.k

    @property
    def m(self) -> int:
        return self.k // 2

    @property
    def r(self) -> int:
        return (self.l + 1) // 2


@dataclass(frozen=True)
class LinearMapMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in self.entries]

    def rank(self) -> int:
        return matrix_rank(self.entries)


@dataclass(frozen=True)
class WitnessReport:
    phi_surjective: bool
    kernel_dim: int
    expected_kernel_dim: int
    restriction_surjective: bool
    nodes_distinct: bool
    kernel_vector_ok: Optional[bool] = None  # only defined for even k

    @property
    def all_passed(self) -> bool:
        return (
            self.phi_surjective
            and self.kernel_dim == self.expected_kernel_dim
            and self.restriction_surjective
            and self.nodes_distinct
            and self.kernel_vector_ok is not False
        )


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix by fraction-free (Bareiss) elimination."""
    work = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        work.append([int(x * scale) for x in row])
    if not work:
        return 0
    nrows, ncols = len(work), len(work[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        piv = work[rank][col]
        for i in range(rank + 1, nrows):
            lead = work[i][col]
            row_i, row_r = work[i], work[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) // prev
            row_i[col] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


# homogeneous polynomials in x0..xn as {exponent tuple: coefficient}


def _mono(n: int, **powers) -> tuple[int, ...]:
    e = [0] * (n + 1)
    for name, v in powers.items():
        e[int(name[1:])] += v
    return tuple(e)


def _term(n: int, var: int, e0: int, e1: int) -> tuple[int, ...]:
    e = [0] * (n + 1)
    e[0] += e0
    e[1] += e1
    e[var] += 1
    return tuple(e)


def referee_family(p: WitnessProblem) -> dict[str, Monomials]:
    """The polynomials ``D``, ``K``, ``L`` of the witness family."""
    n, d, k, l, m, r = p.n, p.d, p.k, p.l, p.m, p.r
    D = {_term(n, n - j, d - 1 - 2 * j, 2 * j): 1 for j in range(r)}
    K = {_term(n, 2 + j, k - 1 - 2 * j, 2 * j): 1 for j in range(m)}
    key = _term(n, m + 2, 0, k - 1)
    K[key] = K.get(key, 0) + 1
    L = {_mono(n, x0=l): 1, _mono(n, x1=l): -1}
    return {"D": D, "K": K, "L": L}


def _partial(poly: Monomials, var: int) -> Monomials:
    out = {}
    for e, c in poly.items():
        if e[var]:
            f = list(e)
            f[var] -= 1
            out[tuple(f)] = out.get(tuple(f), 0) + c * e[var]
    return {e: c for e, c in out.items() if c}


def _restrict_to_line(poly: Monomials) -> dict[int, int]:
    """Restrict to ``x2 = ... = xn = 0``; result keyed by the power of ``x1``."""
    out = {}
    for e, c in poly.items():
        if not any(e[2:]):
            out[e[1]] = out.get(e[1], 0) + c
    return {j: c for j, c in out.items() if c}


def build_phi(p: WitnessProblem) -> LinearMapMatrix:
    """Matrix of ``Phi_{K,alpha}`` in monomial bases.

    Column ``2i`` is ``x0 * e_i`` and column ``2i+1`` is ``x1 * e_i``; row ``s``
    is the coefficient of ``x0^(k-s) x1^s``.
    """
    n, k = p.n, p.k
    K = referee_family(p)["K"]
    cols = []
    for i in range(n + 1):
        grad = _restrict_to_line(_partial(K, i))
        for shift in (0, 1):  # multiply by x0, then by x1
            col = [Fraction(0)] * (k + 1)
            for j, c in grad.items():
                col[j + shift] += c
            cols.append(col)
    entries = tuple(tuple(col[s] for col in cols) for s in range(k + 1))
    return LinearMapMatrix(k + 1, 2 * (n + 1), entries)


def check_phi(p: WitnessProblem) -> tuple[bool, int]:
    phi = build_phi(p)
    rank = phi.rank()
    return rank == p.k + 1, phi.cols - rank


def paper_kernel_vector(p: WitnessProblem) -> list[Fraction]:
    """``a_{m+1} = x1``, ``a_{m+2} = -x0``, all other ``a_i = 0`` (``mu = 1``)."""
    if p.k % 2:
        raise ValueError("the explicit kernel vector exists only for even k")
    v = [Fraction(0)] * (2 * (p.n + 1))
    v[2 * (p.m + 1) + 1] = Fraction(1)
    v[2 * (p.m + 2)] = Fraction(-1)
    return v


# univariate polynomials over Q as coefficient lists, index = power of t


def _trim(f: list[Fraction]) -> list[Fraction]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_rem(f: Sequence, g: Sequence) -> list[Fraction]:
    f = _trim([Fraction(c) for c in f])
    g = _trim([Fraction(c) for c in g])
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    while len(f) >= len(g):
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[shift + i] -= factor * c
        _trim(f)
    return f


def poly_gcd(f: Sequence, g: Sequence) -> list[Fraction]:
    """Monic gcd over Q."""
    f = _trim([Fraction(c) for c in f])
    g = _trim([Fraction(c) for c in g])
    while g:
        f, g = g, poly_rem(f, g)
    if not f:
        return f
    return [c / f[-1] for c in f]


def _derivative(f: Sequence) -> list[Fraction]:
    return [Fraction(i * c) for i, c in enumerate(f)][1:]


def line_section_of_L(l: int) -> list[Fraction]:  # noqa: E741
    """``L = x0^l - x1^l`` on ``alpha`` dehomogenized at ``x0 = 1`` (``t = x1/x0``)."""
    f = [Fraction(0)] * (l + 1)
    f[0] += 1
    f[l] -= 1
    return f


def check_restriction(l: int, top_exponents: Sequence[int]) -> tuple[bool, bool]:  # noqa: E741
    """Whether ``t^e`` for the given exponents span functions on the zeros of ``L``.

    Returns ``(surjective, nodes_distinct)``. Reducing modulo the squarefree
    ``t^l - 1`` is the same as evaluating at its ``l`` roots.
    """
    if l < 1:
        raise ValueError(f"need l >= 1, got l={l}")
    if len(top_exponents) != l or any(e < 0 for e in top_exponents):
        raise ValueError(f"need {l} nonnegative exponents, got {list(top_exponents)}")
    modulus = line_section_of_L(l)
    nodes_distinct = len(poly_gcd(modulus, _derivative(modulus))) == 1
    columns = []
    for e in top_exponents:
        mono = [0] * e + [1]
        red = poly_rem(mono, modulus)
        columns.append(red + [Fraction(0)] * (l - len(red)))
    matrix = [[columns[j][i] for j in range(l)] for i in range(l)]
    return matrix_rank(matrix) == l, nodes_distinct


def witness_report(p: WitnessProblem) -> WitnessReport:
    surjective, kernel_dim = check_phi(p)
    restriction, distinct = check_restriction(p.l, list(range(p.l)))
    kernel_vector_ok = None
    if p.k % 2 == 0:
        image = build_phi(p).apply(paper_kernel_vector(p))
        kernel_vector_ok = not any(image)
    return WitnessReport(
        phi_surjective=surjective,
        kernel_dim=kernel_dim,
        expected_kernel_dim=2 * p.n - p.k + 1,
        restriction_surjective=restriction,
        nodes_distinct=distinct,
        kernel_vector_ok=kernel_vector_ok,
    )
