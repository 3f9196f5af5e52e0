"""n-cores, n-weights, and block dimensions via beta numbers on an abacus.

With L beads, the beta numbers of a partition are the first-column hook
lengths beta_i = part_i + (L - i), a strictly decreasing set.  Sliding every
bead to the top of its runner (position mod n) yields the n-core; the result
does not depend on L.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, as_partition, exponent_form, partitions_of


@dataclass(frozen=True)
class AbacusDisplay:
    n: int
    beta: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.beta, self.beta[1:]):
            if a <= b:
                raise ValueError("beta numbers must be strictly decreasing")
        if self.beta and self.beta[-1] < 0:
            raise ValueError("beta numbers must be nonnegative")


def default_bead_count(p: Partition, n: int) -> int:
    """max(len(p), 1) rounded up to a multiple of n."""
    base = max(len(p), 1)
    return base + (-base) % n


def abacus_display(p: Partition, n: int, beads: int | None = None) -> AbacusDisplay:
    if beads is None:
        beads = default_bead_count(p, n)
    if beads < len(p):
        raise ValueError(f"need at least {len(p)} beads, got {beads}")
    padded = list(p) + [0] * (beads - len(p))
    return AbacusDisplay(n, tuple(padded[i - 1] + beads - i for i in range(1, beads + 1)))


def _partition_from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    count = len(beta)
    parts = [b - (count - i) for i, b in enumerate(beta, start=1)]
    return as_partition([part for part in parts if part > 0])


def n_core(p: Partition, n: int, beads: int | None = None) -> Partition:
    """The partition left after sliding all abacus beads up their runners.

    Equivalently: remove rim n-hooks until none remain.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    display = abacus_display(p, n, beads)
    runner_counts = [0] * n
    for b in display.beta:
        runner_counts[b % n] += 1
    pushed = [r + q * n for r in range(n) for q in range(runner_counts[r])]
    return _partition_from_beta(pushed)


def n_weight(p: Partition, n: int) -> int:
    """Number of rim n-hooks removed in passing to the n-core."""
    diff = sum(p) - sum(n_core(p, n))
    assert diff % n == 0
    return diff // n


def is_n_core(p: Partition, n: int) -> bool:
    return n_core(p, n) == p


def block_dimension(n: int, m: int, mu: Partition) -> int:
    """Number of n-regular partitions of m whose n-core is mu."""
    if m < 0:
        return 0
    return sum(1 for p in partitions_of(m, regular=n) if n_core(p, n) == mu)


def is_rectangle_le_n(mu: Partition, n: int) -> tuple[int, int] | None:
    """(k, l) if mu is the rectangle (k^l) with k + l <= n, else None.

    The empty partition counts as the degenerate rectangle (0, 0).
    """
    if not mu:
        return (0, 0)
    ef = exponent_form(mu)
    if len(ef) != 1:
        return None
    k, l = ef[0]
    return (k, l) if k + l <= n else None
