"""Exact truncated q-series and the quadratic-form lattice evaluation.

Series keep arbitrary-precision integer coefficients c_0..c_D and all
arithmetic is exact below the truncation order.  The lattice sum runs over
nonnegative integer vectors m of length n-1 subject to the congruence
t + sum(i * m_i) ≡ 0 (mod n); each admissible vector contributes
q^Q(m) / prod((q)_{m_i}) with

    Q(m) = m^T C^{-1} m - m^T C^{-1} e_{s-t+n} + s*t/n

where C is the (n-1)x(n-1) Cartan matrix of sl(n) and e_n = 0.  The
individual pieces of Q are fractional; each admissible exponent must come
out a nonnegative integer, and anything else is raised as a hard error
rather than rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


class TruncatedSeries:
    """q-power-series with exact integer coefficients up to a truncation order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries([other], self.order)
        if isinstance(other, TruncatedSeries):
            return other
        raise TypeError(f"cannot combine series with {type(other).__name__}")

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[d] + other.coeffs[d] for d in range(order + 1)]
        )

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[d] - other.coeffs[d] for d in range(order + 1)]
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self.coeffs])
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def shift_up(self, s: int, order: int | None = None) -> "TruncatedSeries":
        """Multiply by q^s, keeping (or resetting) the truncation order."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        if order is None:
            order = self.order
        return TruncatedSeries([0] * s + list(self.coeffs), order)

    def shift_down(self, s: int) -> "TruncatedSeries":
        """Divide by q^s; the dropped coefficients must vanish."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        if any(self.coeffs[:s]):
            raise ValueError(f"cannot shift down by {s}: low-order terms are nonzero")
        return TruncatedSeries(self.coeffs[s:], self.order - s)

    def __repr__(self) -> str:
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{head}q^{d}" if d > 1 else f"{head}q")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def inv_pochhammer(k: int, order: int) -> TruncatedSeries:
    """Expansion of 1 / ((1-q)(1-q^2)...(1-q^k)) to the given order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for i in range(1, k + 1):
        for d in range(i, order + 1):
            c[d] += c[d - i]
    return TruncatedSeries(c)


def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """The (n-1)x(n-1) Cartan matrix of sl(n)."""
    size = n - 1
    return tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(size))
        for i in range(size)
    )


def inverse_cartan(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of the sl(n) Cartan matrix: entry (i,j) = min(i,j) - ij/n."""
    return tuple(
        tuple(Fraction(min(i, j)) - Fraction(i * j, n) for j in range(1, n))
        for i in range(1, n)
    )


@dataclass(frozen=True)
class QuadraticFormData:
    """The quadratic exponent data for a target class L(s) + L(t), s <= t."""

    n: int
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    s: int
    t: int

    @classmethod
    def create(cls, n: int, s: int, t: int) -> "QuadraticFormData":
        if not 0 <= s <= t < n:
            raise ValueError(f"need 0 <= s <= t < n, got s={s}, t={t}, n={n}")
        return cls(n, inverse_cartan(n), s, t)

    def exponent(self, m) -> Fraction:
        """Q(m); fractional pieces cancel only on admissible vectors."""
        inv = self.inverse_cartan
        quad = Fraction(0)
        for i, mi in enumerate(m):
            if mi:
                row = inv[i]
                quad += mi * sum(row[j] * mj for j, mj in enumerate(m) if mj)
        u = self.s - self.t + self.n
        linear = Fraction(0)
        if u < self.n:
            linear = sum(inv[i][u - 1] * mi for i, mi in enumerate(m) if mi)
        return quad - linear + Fraction(self.s * self.t, self.n)

    def admissible(self, m) -> bool:
        return (self.t + sum((i + 1) * mi for i, mi in enumerate(m))) % self.n == 0


def canonical_pair(n: int, s: int, t: int) -> tuple[int, int]:
    """Fold (s, t) into the domain s + t <= n via the index reflection.

    The classes L(s)+L(t) and L(n-t)+L(n-s) carry equal branching series
    (the diagram symmetry fixing node 0 exchanges them), and the lattice
    formula's constant term s*t/n is normalized for the folded domain: on
    the raw pair with s + t > n it overshoots the series by q^(s+t-n).
    """
    if not 0 <= s <= t < n:
        raise ValueError(f"need 0 <= s <= t < n, got s={s}, t={t}, n={n}")
    return (n - t, n - s) if s + t > n else (s, t)


def _shell_lower_bound(n: int, shell: int) -> Fraction:
    """Certified lower bound for the quadratic exponent on |m|_1 = shell.

    Uses m^T C^{-1} m >= |m|_2^2 / 4 >= shell^2 / (4(n-1)) (the largest
    Cartan eigenvalue is below 4) and C^{-1} entries <= n/4 for the linear
    term.
    """
    return Fraction(shell * shell, 4 * (n - 1)) - Fraction(n * shell, 4)


def lattice_enumeration_bound(n: int, s: int, t: int, order: int) -> int:
    """A shell size beyond which every lattice vector exceeds the order.

    Every m with some coordinate above the bound lies in a shell past it and
    its exponent provably exceeds `order`.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    shell = n * (n - 1) // 2 + 1  # past the vertex of the bounding parabola
    while _shell_lower_bound(n, shell) <= order:
        shell += 1
    return shell


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def lattice_points(
    n: int, s: int, t: int, order: int, bound: int | None = None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Admissible vectors with exponent <= order, as (m, Q) pairs.

    Walks shells of constant |m|_1 up to the certified bound (or an explicit
    larger one; enlarging it never adds points below the order).  The pair
    (s, t) is folded into the domain s + t <= n first (see canonical_pair).
    Raises ArithmeticError if an admissible exponent fails to be a
    nonnegative integer (a convention bug, never expected).
    """
    s, t = canonical_pair(n, s, t)
    qf = QuadraticFormData.create(n, s, t)
    if bound is None:
        bound = lattice_enumeration_bound(n, s, t, order)
    for shell in range(bound + 1):
        for m in _compositions(shell, n - 1):
            if not qf.admissible(m):
                continue
            q = qf.exponent(m)
            if q > order:
                continue
            if q.denominator != 1 or q < 0:
                raise ArithmeticError(
                    f"admissible vector {m} has non-integral exponent {q} "
                    f"(n={n}, s={s}, t={t})"
                )
            yield m, int(q)


def fermionic_series(
    n: int, s: int, t: int, order: int, bound: int | None = None
) -> TruncatedSeries:
    """The lattice-sum evaluation of the branching series for L(s) + L(t).

    Pair with the enumeration methods via j = (s + t) mod n.  Pairs with
    s + t > n are folded through the index reflection before evaluating
    (canonical_pair); the resulting coefficients grade by the count of
    residue-0 nodes, matching the enumeration methods exactly.
    """
    total = TruncatedSeries.zero(order)
    for m, q in lattice_points(n, s, t, order, bound):
        term = TruncatedSeries.one(order - q)
        for mi in m:
            if mi:
                term = term * inv_pochhammer(mi, order - q)
        total = total + term.shift_up(q, order)
    return total
