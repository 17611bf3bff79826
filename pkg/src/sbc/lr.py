"""Littlewood-Richardson coefficients.

The general coefficient is computed by enumerating LR skew tableaux
(column-strict fillings whose reverse reading word is a lattice word);
no symmetric-function machinery is involved, so this can serve as an
independent oracle for the closed hook formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import kernels
from .partitions import (
    Hook,
    Partition,
    binomial,
    bounded_partitions,
    check_hook,
    check_partition,
    contains,
    is_hook,
    partitions_of,
    weight,
)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of chi^lam in the induction of chi^mu x chi^nu."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if weight(mu) + weight(nu) != weight(lam):
        raise ValueError("weights of mu and nu must sum to the weight of lam")
    if not contains(lam, mu):
        return 0
    return kernels.count_lr(lam, mu, nu)


def lr_positive(lam: Partition, mu: Partition, nu: Partition) -> bool:
    if weight(mu) + weight(nu) != weight(lam):
        raise ValueError("weights of mu and nu must sum to the weight of lam")
    if not mu:
        return lam == nu
    if not nu:
        return lam == mu
    if not contains(lam, mu):
        return False
    if is_hook(lam) and is_hook(mu) and is_hook(nu):
        # a pair of hooks induces to a hook with coefficient C(1, y)
        y = (len(lam) - 1) - (len(mu) - 1) - (len(nu) - 1)
        return y in (0, 1)
    return kernels.count_lr(lam, mu, nu, limit=1) > 0


def lr_multi(lam: Partition, inners) -> int:
    """Iterated coefficient: multiplicity of chi^lam in the induction of
    chi^{mu_1} x ... x chi^{mu_k} from the matching Young subgroup.

    Zero-weight inner partitions are allowed and contribute nothing.
    """
    lam = check_partition(lam)
    cleaned = tuple(p for p in (check_partition(q) for q in inners) if p)
    if sum(weight(p) for p in cleaned) != weight(lam):
        raise ValueError("inner weights must sum to the weight of lam")
    if len(cleaned) == 2:  # keep plain pair queries out of the memo
        return lr_coefficient(lam, cleaned[0], cleaned[1])
    return _multi(lam, cleaned)


@cache
def _multi(lam: Partition, inners: tuple[Partition, ...]) -> int:
    if not inners:
        return 1 if not lam else 0
    if len(inners) == 1:
        return 1 if lam == inners[0] else 0
    if len(inners) == 2:
        return lr_coefficient(lam, inners[0], inners[1])
    last = inners[-1]
    rest = inners[:-1]
    w = weight(lam) - weight(last)
    total = 0
    for nu in bounded_partitions(w, lam):
        c = lr_coefficient(lam, nu, last)
        if c:
            total += c * _multi(nu, rest)
    return total


def lr_hook(h: Hook, hooks) -> int:
    """Closed form for an all-hook coefficient: C(t-1, y) with
    y = x - sum of the inner leg lengths."""
    check_hook(h)
    hooks = tuple(hooks)
    for hi in hooks:
        check_hook(hi)
    if sum(hi.n for hi in hooks) != h.n:
        raise ValueError("hook weights must sum to the outer weight")
    y = h.x - sum(hi.x for hi in hooks)
    return binomial(len(hooks) - 1, y)


def restrict_hook_to_young(h: Hook, shape) -> dict[tuple[Hook, ...], int]:
    """Decomposition of chi^h restricted to the Young subgroup of a
    composition with positive entries: hook tuples -> multiplicity."""
    check_hook(h)
    shape = tuple(shape)
    if any(n_i < 1 for n_i in shape):
        raise ValueError("shape entries must be positive")
    if sum(shape) != h.n:
        raise ValueError("shape must sum to the hook weight")
    t = len(shape)
    out: dict[tuple[Hook, ...], int] = {}

    def rec(i: int, legs: list[int], legsum: int):
        if i == t:
            mult = binomial(t - 1, h.x - legsum)
            if mult:
                out[tuple(Hook(shape[j], legs[j]) for j in range(t))] = mult
            return
        for x_i in range(shape[i]):
            if legsum + x_i > h.x:
                break
            legs.append(x_i)
            rec(i + 1, legs, legsum + x_i)
            legs.pop()

    rec(0, [], 0)
    return out


@dataclass(frozen=True)
class PartitionSet:
    """A finite set of partitions of a common weight."""

    n: int
    members: frozenset[Partition]

    def __post_init__(self):
        for p in self.members:
            if weight(check_partition(p)) != self.n:
                raise ValueError(f"{p} does not have weight {self.n}")

    @staticmethod
    def of(n: int, members) -> "PartitionSet":
        return PartitionSet(n, frozenset(tuple(p) for p in members))

    def sorted_members(self) -> list[Partition]:
        return sorted(self.members, reverse=True)


def box_set(n: int, t: int) -> PartitionSet:
    """All partitions of n inside a t x t box."""
    return PartitionSet.of(n, partitions_of(n, max_part=t, max_len=t))


def hook_box_set(n: int, t: int) -> PartitionSet:
    """Hook partitions of n inside a t x t box."""
    return PartitionSet.of(
        n, (h.parts for h in (Hook(n, x) for x in range(n)) if n - h.x <= t and h.x + 1 <= t)
    )


@cache
def _pair_star(mu: Partition, nu: Partition) -> frozenset[Partition]:
    if not mu:
        return frozenset({nu})
    if not nu:
        return frozenset({mu})
    n = weight(mu) + weight(nu)
    found = set()
    for lam in partitions_of(n, max_part=mu[0] + nu[0], max_len=len(mu) + len(nu)):
        if contains(lam, mu) and lr_positive(lam, mu, nu):
            found.add(lam)
    return frozenset(found)


def star(a: PartitionSet, b: PartitionSet) -> PartitionSet:
    """Partitions appearing with positive coefficient for some pair."""
    found: set[Partition] = set()
    for mu in a.members:
        for nu in b.members:
            found |= _pair_star(mu, nu)
    return PartitionSet(a.n + b.n, frozenset(found))


def diamond(a: PartitionSet, b: PartitionSet) -> PartitionSet:
    """The star product filtered to hook partitions; enumerated over the
    hooks of the target weight directly rather than through a full star."""
    n = a.n + b.n
    found: set[Partition] = set()
    for x in range(n):
        lam = Hook(n, x).parts
        if any(
            lr_positive(lam, mu, nu) for mu in a.members for nu in b.members
        ):
            found.add(lam)
    return PartitionSet(n, frozenset(found))
