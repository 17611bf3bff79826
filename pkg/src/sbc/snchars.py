"""Exact symmetric-group character values via the Murnaghan-Nakayama rule."""

from __future__ import annotations

from functools import cache

from .partitions import Hook, Partition, binomial, check_hook, check_partition, weight

CycleType = tuple[int, ...]


def character_value(lam: Partition, cycle_type) -> int:
    """chi^lam evaluated on a permutation of the given cycle type.

    Recursive border-strip removal; the largest cycle is stripped first,
    which keeps the branching factor small.
    """
    lam = check_partition(lam)
    ct = check_partition(tuple(sorted(cycle_type, reverse=True)))
    if weight(lam) != weight(ct):
        raise ValueError("cycle type must be a partition of the same weight")
    return _mn(lam, ct)


@cache
def _mn(lam: Partition, ct: CycleType) -> int:
    if not lam:
        return 1
    strip = ct[0]
    rest = ct[1:]
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]  # strictly decreasing
    present = set(beta)
    total = 0
    for b in beta:
        if b < strip or (b - strip) in present:
            continue
        height = sum(1 for c in beta if b - strip < c < b)
        newbeta = sorted([c for c in beta if c != b] + [b - strip], reverse=True)
        newlam = []
        for i, nb in enumerate(newbeta):
            part = nb - (m - 1 - i)
            if part <= 0:
                break
            newlam.append(part)
        total += (-1) ** height * _mn(tuple(newlam), rest)
    return total


def hook_degree(h: Hook) -> int:
    """Degree of the hook character: C(n-1, x)."""
    check_hook(h)
    return binomial(h.n - 1, h.x)
