"""Restriction of hook characters of S_n to a Sylow 2-subgroup P_n.

Two independent routes live here:

* an oracle, ``restrict_to_sylow``, that computes every multiplicity as an
  exact class-function inner product (group classes and character values
  from :mod:`sbc.wreath`, symmetric-group values from
  :mod:`sbc.snchars`);
* the closed formulas: the bit sequence of the unique linear constituent
  for 2-power n, binomial multiplicities for all linear constituents, the
  count of degree-2 constituents, and the box thresholds that describe
  exactly which hooks admit a constituent of each 2-power degree.

The formulas are cheap and reach far beyond the oracle; the oracle is the
ground truth the formulas are tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from . import config, wreath
from .errors import InternalConsistencyError, NeedsOracleError
from .partitions import (
    Hook,
    binary_digits,
    binary_expansion,
    binomial,
    check_hook,
    conjugate_hook,
    hooks_in_box,
    in_box,
)
from .snchars import character_value, hook_degree
from .wreath import Label, alpha, linear_label, sylow_order

ProductLabel = tuple[Label, ...]


# ---------------------------------------------------------------------------
# oracle


@dataclass
class DegreeProfile:
    """Distinct-constituent and total-multiplicity counts per degree
    exponent."""

    distinct: dict[int, int]
    total: dict[int, int]


@dataclass
class Decomposition:
    """Constituents of chi^hook restricted to P_n, keyed by tuples of
    factor labels (one per binary digit of n, largest factor first).
    ``complete`` records whether every irreducible was considered or only
    a selected family.  Treat instances as read-only; they are cached."""

    hook: Hook
    constituents: dict[ProductLabel, int]
    complete: bool

    def profile(self) -> DegreeProfile:
        distinct: dict[int, int] = {}
        total: dict[int, int] = {}
        for labels, mult in self.constituents.items():
            e = sum(wreath.degree_exp(l) for l in labels)
            distinct[e] = distinct.get(e, 0) + 1
            total[e] = total.get(e, 0) + mult
        return DegreeProfile(distinct, total)

    def sorted_items(self) -> list[tuple[ProductLabel, int]]:
        return sorted(
            self.constituents.items(),
            key=lambda it: (sum(wreath.degree_exp(l) for l in it[0]), it[0]),
        )


def _check_oracle_cap(n: int) -> tuple[int, ...]:
    exps = binary_expansion(n)
    cap = config.level_cap()
    if exps[0] > cap:
        raise NeedsOracleError(exps[0])
    return exps


@cache
def _factor_types(exponent: int):
    """Cycle types occurring in P_{2^exponent} plus, per class, the index
    of its type."""
    cls = wreath.classes(exponent)
    types = sorted({c.cycle_type for c in cls}, reverse=True)
    tindex = {t: i for i, t in enumerate(types)}
    return types, tuple(tindex[c.cycle_type] for c in cls)


@cache
def _label_type_vector(exponent: int, label: Label) -> tuple[int, ...]:
    """Character values of ``label`` aggregated over classes of equal
    cycle type, weighted by class size."""
    types, class_type = _factor_types(exponent)
    row = wreath.label_row(exponent, label)
    vec = [0] * len(types)
    for ci, c in enumerate(wreath.classes(exponent)):
        vec[class_type[ci]] += c.size * row[ci]
    return tuple(vec)


@cache
def _mn_tensor(h: Hook) -> dict[tuple[int, ...], int]:
    """Symmetric-group character values of the hook on every combination
    of factor cycle types, keyed by type-index tuples."""
    exps = binary_expansion(h.n)
    typelists = [_factor_types(e)[0] for e in exps]
    out: dict[tuple[int, ...], int] = {}
    for combo in itertools.product(*[range(len(tl)) for tl in typelists]):
        merged = tuple(
            sorted(
                (part for ti, tl in zip(combo, typelists) for part in tl[ti]),
                reverse=True,
            )
        )
        val = character_value(h.parts, merged)
        if val:
            out[combo] = val
    return out


def _exact_multiplicity(total: int, n: int) -> int:
    q, r = divmod(total, sylow_order(n))
    if r or q < 0:
        raise InternalConsistencyError(
            f"inner product {total} is not a non-negative multiple of |P_{n}|"
        )
    return q


def multiplicity(h: Hook, labels: ProductLabel) -> int:
    """Exact multiplicity of one irreducible of P_n (a tuple of factor
    labels) in the restriction of chi^h."""
    check_hook(h)
    exps = _check_oracle_cap(h.n)
    if len(labels) != len(exps) or any(
        wreath.label_level(l) != e for l, e in zip(labels, exps)
    ):
        raise ValueError("labels do not match the binary expansion of n")
    vecs = [_label_type_vector(e, l) for e, l in zip(exps, labels)]
    total = 0
    for combo, mn in _mn_tensor(h).items():
        w = mn
        for vec, ti in zip(vecs, combo):
            w *= vec[ti]
            if not w:
                break
        total += w
    return _exact_multiplicity(total, h.n)


def _factor_label_lists(exps, select) -> list[tuple[Label, ...]]:
    if select == "all":
        return [wreath.irr_labels(e) for e in exps]
    if select == "linear":
        return [
            tuple(sorted(linear_label(bits) for bits in itertools.product((0, 1), repeat=e)))
            for e in exps
        ]
    raise ValueError(f"unknown selection {select!r}")


def restrict_to_sylow(h: Hook, select: str = "all") -> Decomposition:
    """Decompose chi^h restricted to P_n.

    ``select`` is "all" for the full decomposition or "linear" to compute
    only the multiplicities of linear characters (much cheaper at n=32).
    Results are cached; treat them as read-only.
    """
    return _restrict(check_hook(h), select)


@cache
def _restrict(h: Hook, select: str) -> Decomposition:
    exps = _check_oracle_cap(h.n)
    label_lists = _factor_label_lists(exps, select)
    t = len(exps)

    current: dict[tuple, int] = dict(_mn_tensor(h))
    for pos in range(t - 1, -1, -1):
        vecs = [_label_type_vector(exps[pos], lab) for lab in label_lists[pos]]
        buckets: dict[tuple, dict[int, int]] = {}
        for key, val in current.items():
            buckets.setdefault(key[:pos] + key[pos + 1 :], {})[key[pos]] = val
        new: dict[tuple, int] = {}
        for bkey, tvals in buckets.items():
            for li, vec in enumerate(vecs):
                s = sum(vec[ti] * v for ti, v in tvals.items())
                if s:
                    new[bkey[:pos] + (li,) + bkey[pos:]] = s
        current = new

    constituents: dict[ProductLabel, int] = {}
    for key, total in current.items():
        mult = _exact_multiplicity(total, h.n)
        if mult:
            constituents[tuple(label_lists[i][key[i]] for i in range(t))] = mult

    dec = Decomposition(h, constituents, complete=(select == "all"))
    if dec.complete:
        degsum = sum(
            m * (1 << sum(wreath.degree_exp(l) for l in labels))
            for labels, m in constituents.items()
        )
        if degsum != hook_degree(h):
            raise InternalConsistencyError(
                f"restriction of {h} has degree {degsum}, expected {hook_degree(h)}"
            )
    return dec


def _allocations(total: int, bounds: list[int]):
    """Tuples of non-negative ints below the bounds summing to total."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest = bounds[1:]
    rest_sum = sum(rest)
    for first in range(max(0, total - rest_sum), min(bounds[0], total) + 1):
        for tail in _allocations(total - first, rest):
            yield (first,) + tail


def distinct_count(h: Hook, e: int, limit: int | None = None) -> int:
    """Number of distinct constituents of chi^h|_{P_n} of degree 2^e,
    stopping early once ``limit`` are found."""
    check_hook(h)
    exps = _check_oracle_cap(h.n)
    if exps[0] <= config.table_cap():
        # cheap regime: reuse the cached full decomposition
        full = restrict_to_sylow(h).profile().distinct.get(e, 0)
        return full if limit is None else min(full, limit)
    count = 0
    alphas = [alpha(1 << k) for k in exps]
    for alloc in _allocations(e, alphas):
        lists = [wreath.labels_with_exp(k, a) for k, a in zip(exps, alloc)]
        for labels in itertools.product(*lists):
            if multiplicity(h, labels) > 0:
                count += 1
                if limit is not None and count >= limit:
                    return count
    return count


# ---------------------------------------------------------------------------
# closed formulas for linear constituents


def unique_linear_bits(h: Hook) -> tuple[int, ...]:
    """Bit sequence of the unique linear constituent of chi^h|_{P_{2^k}}:
    adjacent-digit sums mod 2 of the leg length's binary digits."""
    check_hook(h)
    if h.n & (h.n - 1):
        raise ValueError("defined only when n is a power of 2")
    k = h.n.bit_length() - 1
    digits = binary_digits(h.x, k)
    return tuple((digits[i] + digits[i + 1]) % 2 for i in range(k))


def factor_hooks(h: Hook, legs) -> tuple[Hook, ...]:
    """One hook per binary digit of n with the given leg lengths."""
    exps = binary_expansion(h.n)
    legs = tuple(legs)
    if len(legs) != len(exps):
        raise ValueError("need one leg length per binary digit of n")
    return tuple(Hook(1 << k, x) for k, x in zip(exps, legs))


def linear_multiplicity(h: Hook, parts) -> int:
    """Multiplicity of the linear character attached to the given factor
    hooks: C(t-1, x - sum of factor legs)."""
    check_hook(h)
    parts = tuple(parts)
    exps = binary_expansion(h.n)
    if tuple(p.n for p in parts) != tuple(1 << k for k in exps):
        raise ValueError("factor hooks must match the binary expansion of n")
    for p in parts:
        check_hook(p)
    y = h.x - sum(p.x for p in parts)
    return binomial(len(parts) - 1, y)


def linear_constituent_label(parts) -> ProductLabel:
    """The product label of the linear character attached to factor hooks."""
    return tuple(linear_label(unique_linear_bits(p)) for p in parts)


def linear_profile(h: Hook) -> dict[ProductLabel, int]:
    """All linear constituents of chi^h|_{P_n} with multiplicities."""
    check_hook(h)
    exps = binary_expansion(h.n)
    t = len(exps)
    out: dict[ProductLabel, int] = {}
    for xs in itertools.product(*[range(1 << k) for k in exps]):
        mult = binomial(t - 1, h.x - sum(xs))
        if mult:
            parts = tuple(Hook(1 << k, x) for k, x in zip(exps, xs))
            out[linear_constituent_label(parts)] = mult
    return out


def degree_two_count(exponent: int, x: int) -> int:
    """Distinct degree-2 constituents of chi^{(2^e - x, 1^x)}|:
    min(x, 2^e - 1 - x)."""
    if exponent < 2:
        raise ValueError("needs 2^exponent >= 4")
    n = 1 << exponent
    if not 0 <= x <= n - 1:
        raise ValueError("leg length out of range")
    return min(x, n - 1 - x)


def leg_one_degrees(exponent: int) -> tuple[int, ...]:
    """Constituent degrees of chi^{(2^k - 1, 1)}|: each power of two below
    2^k exactly once."""
    if exponent < 1:
        raise ValueError("exponent must be positive")
    return tuple(1 << i for i in range(exponent))


# ---------------------------------------------------------------------------
# box thresholds


@cache
def top_threshold(exponent: int) -> int:
    """Box threshold at the maximal degree exponent for P_{2^exponent}.
    The exponent-0 value 1 covers trivial factors of odd n."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    table = {0: 1, 1: 2, 2: 3, 3: 7, 4: 13, 5: 26}
    if exponent in table:
        return table[exponent]
    return (
        (1 << (exponent - 1))
        + (1 << (exponent - 2))
        + (1 << (exponent - 5))
        + (1 << (exponent - 6))
    )


@cache
def boundary_correction(exponent: int, w: int) -> int:
    """-1 when the extreme hook of the degree-2^w box has a unique
    degree-2^w constituent, 0 when it has at least two."""
    if exponent > config.level_cap():
        raise NeedsOracleError(exponent)
    t = box_threshold_pow2(exponent, w)
    lam = Hook(1 << exponent, (1 << exponent) - t)
    cnt = distinct_count(lam, w, limit=2)
    if cnt == 0:
        raise InternalConsistencyError(
            f"extreme hook {lam} has no degree-2^{w} constituent"
        )
    return 0 if cnt >= 2 else -1


@cache
def box_threshold_pow2(exponent: int, k: int) -> int:
    """The threshold t with: hooks of 2^exponent whose restriction has a
    degree-2^k constituent = hooks in a t x t box.

    Recursion over the tower; the boundary correction is consulted only
    when the pairwise candidates do not already dominate, which keeps the
    oracle horizon as wide as possible.  Raises NeedsOracleError beyond
    it.
    """
    n = 1 << exponent
    if not 0 <= k <= alpha(n):
        raise ValueError(f"k={k} out of range for n={n}")
    if k == 0:
        return n
    if k == 1:
        return n - 1
    if k == 2:
        if exponent < 3:
            raise InternalConsistencyError("k=2 requires exponent >= 3")
        return n - 1
    sub = exponent - 1
    suba = alpha(1 << sub)
    cands = []
    for i in range((k - 1) // 2 + 1):
        j = k - 1 - i
        if i == j or j > suba:
            continue
        cands.append(box_threshold_pow2(sub, i) + box_threshold_pow2(sub, j))
    pair_max = max(cands, default=None)
    result = pair_max
    if (k - 1) % 2 == 0:
        w = (k - 1) // 2
        tw = box_threshold_pow2(sub, w)
        if pair_max is None or pair_max < 2 * tw:
            corrected = 2 * tw + boundary_correction(sub, w)
            result = corrected if pair_max is None else max(pair_max, corrected)
    if result is None:
        raise InternalConsistencyError(f"no candidates for t at ({exponent}, {k})")
    if not (1 << (exponent - 1)) < result <= n:
        raise InternalConsistencyError(
            f"threshold {result} outside (2^{exponent-1}, 2^{exponent}]"
        )
    return result


def box_threshold(n: int, k: int) -> int:
    """General-n threshold T with: hooks of n whose restriction has a
    degree-2^k constituent = hooks in a T x T box.  Maximizes the sum of
    factor thresholds over degree budgets."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= k <= alpha(n):
        raise ValueError(f"k={k} out of range for n={n}")
    exps = binary_expansion(n)
    suffix = [0] * (len(exps) + 1)
    for i in range(len(exps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + alpha(1 << exps[i])
    best = {0: 0}
    for i, e in enumerate(exps):
        a_e = alpha(1 << e)
        new: dict[int, int] = {}
        for acc, val in best.items():
            lo = max(0, k - acc - suffix[i + 1])
            hi = min(a_e, k - acc)
            for j in range(lo, hi + 1):
                cand = val + box_threshold_pow2(e, j)
                key = acc + j
                if new.get(key, -1) < cand:
                    new[key] = cand
        best = new
    return best[k]


def tau_sum(n: int) -> int:
    """Sum of top thresholds over the binary expansion of n; equals the
    box threshold at the maximal degree exponent."""
    return sum(top_threshold(e) for e in binary_expansion(n))


def degree_set(n: int, k: int) -> list[Hook]:
    """Hooks of n whose restriction has a degree-2^k constituent."""
    return hooks_in_box(n, box_threshold(n, k))


def in_degree_set(h: Hook, k: int, mode: str = "formula") -> bool:
    """Membership of a hook in the degree-2^k set, by threshold box
    ("formula"), by restriction ("oracle"), or cross-checked ("both")."""
    check_hook(h)
    if not 0 <= k <= alpha(h.n):
        return False
    if mode == "formula":
        return in_box(h.parts, box_threshold(h.n, k))
    if mode == "oracle":
        return distinct_count(h, k, limit=1) > 0
    if mode == "both":
        fast = in_box(h.parts, box_threshold(h.n, k))
        slow = distinct_count(h, k, limit=1) > 0
        if fast != slow:
            raise InternalConsistencyError(
                f"threshold box and oracle disagree at {h}, k={k}"
            )
        return fast
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# structure checks (each one is a theorem; False flags a bug)


def degree_sets_nested(n: int, k: int, l: int, mode: str = "oracle") -> bool:
    """Whether every hook with a degree-2^k constituent also has one of
    degree 2^l, for l <= k."""
    if not 0 <= l <= k <= alpha(n):
        raise ValueError("need 0 <= l <= k <= alpha(n)")
    return all(
        in_degree_set(h, l, mode)
        for h in hooks_in_box(n, n)
        if in_degree_set(h, k, mode)
    )


def interior_has_three(n: int, k: int) -> bool:
    """Whether every hook strictly inside the degree-2^k box has at least
    three distinct constituents of that degree (k > 1)."""
    if k <= 1:
        raise ValueError("meaningful only for k > 1")
    t = box_threshold(n, k) - 1
    if t < 1:
        return True
    return all(distinct_count(h, k, limit=3) >= 3 for h in hooks_in_box(n, t))


def top_threshold_consistent(n: int) -> bool:
    """Whether the recursion's threshold at the maximal exponent matches
    the closed-form sum of top thresholds."""
    return box_threshold(n, alpha(n)) == tau_sum(n)


def sign_bits(exponent: int) -> tuple[int, ...]:
    """Bits of the restriction of the sign character of S_{2^exponent}."""
    return unique_linear_bits(Hook(1 << exponent, (1 << exponent) - 1)) if exponent else ()


def twist_by_sign(labels: ProductLabel, n: int) -> ProductLabel:
    """Tensor a product label with the restricted sign character of S_n."""
    exps = binary_expansion(n)
    return tuple(
        wreath.tensor_with_linear(l, sign_bits(e)) for l, e in zip(labels, exps)
    )


def conjugate_restriction_matches(h: Hook) -> bool:
    """Whether restricting the conjugate hook equals the sign-twist of the
    original restriction (and in particular the degree profiles agree)."""
    dec = restrict_to_sylow(h)
    cdec = restrict_to_sylow(conjugate_hook(h))
    twisted = {
        twist_by_sign(labels, h.n): m for labels, m in dec.constituents.items()
    }
    return twisted == cdec.constituents
