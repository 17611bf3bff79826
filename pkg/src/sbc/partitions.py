"""Partitions, hooks, binary expansions, and box predicates.

Conventions used throughout the package:

* a partition is a tuple of weakly decreasing positive ints; () is empty
* a composition is a tuple of non-negative ints (zeros allowed)
* ``Hook(n, x)`` stands for the partition (n - x, 1, ..., 1) with x
  trailing ones, so 0 <= x <= n - 1; x is the leg length
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


def is_partition(seq) -> bool:
    parts = tuple(seq)
    return all(isinstance(p, int) for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    ) and (not parts or parts[-1] >= 1)


def check_partition(seq) -> Partition:
    parts = tuple(seq)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def check_composition(seq) -> tuple[int, ...]:
    entries = tuple(seq)
    if any(not isinstance(e, int) or e < 0 for e in entries):
        raise ValueError(f"not a composition: {entries}")
    return entries


def weight(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def partitions_of(
    n: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """All partitions of n, largest part first, in descending lex order."""
    if n < 0:
        return
    top = n if max_part is None else min(max_part, n)
    rows = n if max_len is None else max_len

    def rec(remaining: int, bound: int, slots: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        if slots == 0:
            return
        for part in range(min(bound, remaining), 0, -1):
            if part * slots < remaining:
                break
            prefix.append(part)
            yield from rec(remaining - part, part, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, top, rows, [])


def bounded_partitions(n: int, bounds: Partition) -> Iterator[Partition]:
    """Partitions of n that fit under ``bounds`` row by row."""

    def rec(remaining: int, i: int, prev: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        if i >= len(bounds):
            return
        for part in range(min(prev, bounds[i], remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, i + 1, part, prefix)
            prefix.pop()

    yield from rec(n, 0, n, [])


class Hook(NamedTuple):
    """The hook partition (n - x, 1^x) stored by weight and leg length."""

    n: int
    x: int

    @property
    def parts(self) -> Partition:
        return (self.n - self.x,) + (1,) * self.x

    @property
    def arm(self) -> int:
        return self.n - self.x


def check_hook(h: Hook) -> Hook:
    if not (h.n >= 1 and 0 <= h.x <= h.n - 1):
        raise ValueError(f"invalid hook coordinates {h}")
    return h


def is_hook(p: Partition) -> bool:
    return bool(p) and all(part == 1 for part in p[1:])


def hook_from_partition(p: Partition) -> Hook:
    if not is_hook(p):
        raise ValueError(f"not a hook partition: {p}")
    return Hook(weight(p), len(p) - 1)


def hooks_of(n: int) -> list[Hook]:
    if n < 1:
        raise ValueError("n must be positive")
    return [Hook(n, x) for x in range(n)]


def conjugate_hook(h: Hook) -> Hook:
    check_hook(h)
    return Hook(h.n, h.n - 1 - h.x)


def binary_expansion(n: int) -> tuple[int, ...]:
    """Exponents k_1 > ... > k_t >= 0 with n = sum of 2^{k_i}."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(k for k in range(n.bit_length() - 1, -1, -1) if n >> k & 1)


def binary_digits(x: int, width: int) -> tuple[int, ...]:
    """Digits (a_width, ..., a_0) of x; leading zeros kept."""
    if not 0 <= x < 1 << (width + 1):
        raise ValueError(f"x={x} out of range for width {width}")
    return tuple(x >> i & 1 for i in range(width, -1, -1))


def in_box(p: Partition, t: int) -> bool:
    """Whether the diagram of p fits in a t x t square."""
    return len(p) <= t and (not p or p[0] <= t)


def hooks_in_box(n: int, t: int) -> list[Hook]:
    """Hooks of n fitting in a t x t box, sorted by leg length."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    return [Hook(n, x) for x in range(n) if n - x <= t and x + 1 <= t]


def binomial(t: int, y: int) -> int:
    """Binomial coefficient, 0 whenever y is outside [0, t]."""
    if y < 0 or y > t:
        return 0
    return math.comb(t, y)
