"""The Sylow 2-subgroups P_{2^k} = P_{2^{k-1}} wr C_2 and general P_n.

Irreducible characters of G wr C_2 over a base copy G x G come in two
kinds, and the recursive labels here mirror that:

* ``ext(sub, bit)`` - the canonical extension of sub x sub, twisted by
  the linear character of the top C_2 selected by ``bit``;
* ``ind(a, b)`` - induced from a x b with a != b on the base group
  (unordered; stored with a < b in the canonical label order).

Labels are plain nested tuples, hence hashable and totally ordered:
``(0,)`` is the trivial character of the trivial group, ``(1, sub, bit)``
an extension, ``(2, a, b)`` an induced pair.

Conjugacy classes are recursive as well: a class of the base group is an
unordered pair of classes of G (fused by the swap), and each class c of G
yields one outer-coset class with representative (rep(c), 1; swap) whose
cycle type doubles every cycle of c.  Everything is exact integers.

Class lists and dense tables are built once per level behind a lock and
are immutable afterwards, so concurrent readers are safe.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cache

from . import config
from .errors import InternalConsistencyError
from .partitions import binary_expansion
from .snchars import CycleType

Label = tuple
TRIVIAL: Label = (0,)
_EXT, _IND = 1, 2


def ext(sub: Label, bit: int) -> Label:
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    return (_EXT, sub, bit)


def ind(a: Label, b: Label) -> Label:
    if a == b:
        raise ValueError("induced pairs need two distinct labels")
    return (_IND, a, b) if a < b else (_IND, b, a)


def label_level(label: Label) -> int:
    return 0 if label == TRIVIAL else label_level(label[1]) + 1


@cache
def degree_exp(label: Label) -> int:
    """log2 of the character degree: extensions square the degree of the
    base character, inductions double the product of the pair."""
    if label == TRIVIAL:
        return 0
    if label[0] == _EXT:
        return 2 * degree_exp(label[1])
    return degree_exp(label[1]) + degree_exp(label[2]) + 1


def degree(label: Label) -> int:
    return 1 << degree_exp(label)


def is_linear(label: Label) -> bool:
    return degree_exp(label) == 0


def linear_label(bits) -> Label:
    """The all-extension label with the given bit sequence, innermost
    bit first."""
    label = TRIVIAL
    for bit in bits:
        label = ext(label, bit)
    return label


def tensor_with_linear(label: Label, bits) -> Label:
    """Multiply a character by the linear character with the given bits
    (same level).  Extensions twist recursively and flip the top bit;
    induced pairs twist both members."""
    bits = tuple(bits)
    if label == TRIVIAL:
        if bits:
            raise ValueError("bit sequence longer than the label level")
        return TRIVIAL
    if label[0] == _EXT:
        return ext(tensor_with_linear(label[1], bits[:-1]), label[2] ^ bits[-1])
    return ind(
        tensor_with_linear(label[1], bits[:-1]),
        tensor_with_linear(label[2], bits[:-1]),
    )


def linear_bits(label: Label) -> tuple[int, ...]:
    bits = []
    while label != TRIVIAL:
        if label[0] != _EXT or not is_linear(label):
            raise ValueError(f"not a linear label: {label}")
        bits.append(label[2])
        label = label[1]
    return tuple(reversed(bits))


@cache
def irr_labels(k: int) -> tuple[Label, ...]:
    """All irreducible-character labels of P_{2^k}, canonically sorted."""
    if k < 0:
        raise ValueError("level must be non-negative")
    if k == 0:
        return (TRIVIAL,)
    prev = irr_labels(k - 1)
    labels = [ext(sub, bit) for sub in prev for bit in (0, 1)]
    labels += [ind(prev[i], prev[j]) for i in range(len(prev)) for j in range(i + 1, len(prev))]
    return tuple(sorted(labels))


def labels_with_exp(k: int, e: int) -> tuple[Label, ...]:
    """Labels of P_{2^k} with degree 2^e, without enumerating the rest."""
    return _labels_with_exp(k, e)


@cache
def _labels_with_exp(k: int, e: int) -> tuple[Label, ...]:
    if e < 0 or e > alpha(1 << k):
        return ()
    if k == 0:
        return (TRIVIAL,)
    out = []
    if e % 2 == 0:
        for sub in _labels_with_exp(k - 1, e // 2):
            out.append(ext(sub, 0))
            out.append(ext(sub, 1))
    for e1 in range((e - 1) // 2 + 1):
        e2 = e - 1 - e1
        if e2 < e1:
            continue
        first = _labels_with_exp(k - 1, e1)
        if e1 == e2:
            out += [ind(first[i], first[j]) for i in range(len(first)) for j in range(i + 1, len(first))]
        else:
            out += [ind(a, b) for a in first for b in _labels_with_exp(k - 1, e2)]
    return tuple(sorted(out))


def alpha(n: int) -> int:
    """Largest e with 2^e an irreducible character degree of P_n;
    additive over the binary expansion of n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for t in binary_expansion(n):
        if t <= 1:
            continue
        total += 1 if t == 2 else (1 << (t - 2)) + (1 << (t - 3)) - 1
    return total


def char_degrees(n: int) -> set[int]:
    return {1 << j for j in range(alpha(n) + 1)}


def sylow_order(n: int) -> int:
    """Order of a Sylow 2-subgroup of S_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return 1 << sum((1 << k) - 1 for k in binary_expansion(n))


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class of P_{2^level}.

    ``parents`` holds indices into the class list one level down:
    a pair (ia <= ib) for base-group classes, a single index for
    outer-coset classes."""

    level: int
    kind: str  # "id" | "base" | "outer"
    parents: tuple[int, ...]
    size: int
    cycle_type: CycleType


_classes_cache: dict[int, tuple[ConjClass, ...]] = {}
_tables_cache: dict[int, "CharTable"] = {}
_build_lock = threading.RLock()


def classes(k: int) -> tuple[ConjClass, ...]:
    """Conjugacy classes of P_{2^k}, in a deterministic order: base-group
    classes by parent index pairs, then outer classes by parent index."""
    if k < 0:
        raise ValueError("level must be non-negative")
    if k > config.level_cap():
        raise ValueError(f"level {k} exceeds the configured cap {config.level_cap()}")
    with _build_lock:
        if k in _classes_cache:
            return _classes_cache[k]
        if k == 0:
            built = (ConjClass(0, "id", (), 1, (1,)),)
        else:
            prev = classes(k - 1)
            order_prev = sylow_order(1 << (k - 1))
            out = []
            for ia in range(len(prev)):
                for ib in range(ia, len(prev)):
                    size = prev[ia].size * prev[ib].size * (1 if ia == ib else 2)
                    ct = tuple(sorted(prev[ia].cycle_type + prev[ib].cycle_type, reverse=True))
                    out.append(ConjClass(k, "base", (ia, ib), size, ct))
            for ic, c in enumerate(prev):
                ct = tuple(sorted((2 * part for part in c.cycle_type), reverse=True))
                out.append(ConjClass(k, "outer", (ic,), order_prev * c.size, ct))
            built = tuple(out)
            if sum(c.size for c in built) != sylow_order(1 << k):
                raise InternalConsistencyError(f"class sizes at level {k} do not sum to the group order")
        _classes_cache[k] = built
        return built


@dataclass(frozen=True)
class CharTable:
    """Dense exact character table of P_{2^k}: one row per label."""

    level: int
    labels: tuple[Label, ...]
    classes: tuple[ConjClass, ...]
    values: tuple[tuple[int, ...], ...]

    @property
    def label_index(self) -> dict[Label, int]:
        return _label_index(self.level)

    def value(self, label: Label, class_index: int) -> int:
        return self.values[self.label_index[label]][class_index]

    def verify_row_orthogonality(self) -> None:
        order = sylow_order(1 << self.level)
        sizes = [c.size for c in self.classes]
        for i, row in enumerate(self.values):
            for j in range(i, len(self.values)):
                other = self.values[j]
                got = sum(s * a * b for s, a, b in zip(sizes, row, other))
                expected = order if i == j else 0
                if got != expected:
                    raise InternalConsistencyError(
                        f"row orthogonality fails at level {self.level} rows {i},{j}"
                    )

    def verify_column_orthogonality(self) -> None:
        order = sylow_order(1 << self.level)
        ncls = len(self.classes)
        for i in range(ncls):
            for j in range(i, ncls):
                got = sum(row[i] * row[j] for row in self.values)
                expected = order // self.classes[i].size if i == j else 0
                if got != expected:
                    raise InternalConsistencyError(
                        f"column orthogonality fails at level {self.level} columns {i},{j}"
                    )


@cache
def _label_index(k: int) -> dict[Label, int]:
    return {label: i for i, label in enumerate(irr_labels(k))}


def char_table(k: int) -> CharTable:
    """Build (once) and return the dense table for level k <= table cap."""
    if k < 0:
        raise ValueError("level must be non-negative")
    if k > config.table_cap():
        raise ValueError(
            f"dense table at level {k} exceeds the cap {config.table_cap()} "
            f"(a level-5 table has ~7.2e8 entries); use label_row instead"
        )
    with _build_lock:
        if k in _tables_cache:
            return _tables_cache[k]
        cls = classes(k)
        labels = irr_labels(k)
        if k == 0:
            values: tuple[tuple[int, ...], ...] = ((1,),)
        else:
            prev = char_table(k - 1)
            values = tuple(_build_row(label, cls, prev) for label in labels)
        table = CharTable(k, labels, cls, values)
        _check_table(table)
        _tables_cache[k] = table
        return table


def _build_row(label: Label, cls: tuple[ConjClass, ...], prev: CharTable) -> tuple[int, ...]:
    idx = prev.label_index
    if label[0] == _EXT:
        sub = prev.values[idx[label[1]]]
        sign = -1 if label[2] else 1
        return tuple(
            sub[c.parents[0]] * sub[c.parents[1]] if c.kind == "base" else sign * sub[c.parents[0]]
            for c in cls
        )
    r1 = prev.values[idx[label[1]]]
    r2 = prev.values[idx[label[2]]]
    return tuple(
        r1[c.parents[0]] * r2[c.parents[1]] + r1[c.parents[1]] * r2[c.parents[0]]
        if c.kind == "base"
        else 0
        for c in cls
    )


def _check_table(table: CharTable) -> None:
    order = sylow_order(1 << table.level) if table.level else 1
    sq = 0
    for label, row in zip(table.labels, table.values):
        if row[0] != degree(label):
            raise InternalConsistencyError(f"identity value mismatch for {label}")
        sq += row[0] * row[0]
    if sq != order:
        raise InternalConsistencyError(f"sum of squared degrees at level {table.level} is not the group order")
    table.verify_row_orthogonality()
    table.verify_column_orthogonality()


def label_row(k: int, label: Label) -> tuple[int, ...]:
    """Character values of one label over classes(k), without requiring
    the full level-k table (needs the dense table one level down)."""
    if k <= config.table_cap():
        table = char_table(k)
        return table.values[table.label_index[label]]
    cls = classes(k)
    prev = char_table(k - 1)
    return _build_row(label, cls, prev)


def char_value(label: Label, cls: ConjClass) -> int:
    """Value of the labelled character on one class (label and class must
    live at the same level)."""
    k = cls.level
    if label_level(label) != k:
        raise ValueError("label and class levels differ")
    if k <= config.table_cap():
        table = char_table(k)
        return table.values[table.label_index[label]][_class_index(k)[cls]]
    return label_row(k, label)[_class_index(k)[cls]]


@cache
def _class_index(k: int) -> dict[ConjClass, int]:
    return {c: i for i, c in enumerate(classes(k))}


def degree_histogram(k: int) -> dict[int, int]:
    """Exponent -> number of labels of P_{2^k} with that degree."""
    hist: dict[int, int] = {}
    for label in irr_labels(k):
        e = degree_exp(label)
        hist[e] = hist.get(e, 0) + 1
    return hist


def render_label(label: Label) -> str:
    """Unambiguous text form: X() trivial, X(b) level-1 leaves,
    E(sub;b) extensions, I(a,b) induced pairs."""
    if label == TRIVIAL:
        return "X()"
    if label[0] == _EXT:
        if label[1] == TRIVIAL:
            return f"X({label[2]})"
        return f"E({render_label(label[1])};{label[2]})"
    return f"I({render_label(label[1])},{render_label(label[2])})"


def parse_label(text: str) -> Label:
    label, rest = _parse_label(text.strip())
    if rest:
        raise ValueError(f"trailing characters in label: {rest!r}")
    return label


def _parse_label(text: str) -> tuple[Label, str]:
    if text.startswith("X()"):
        return TRIVIAL, text[3:]
    if text.startswith("X(") and len(text) >= 4 and text[3] == ")":
        return ext(TRIVIAL, int(text[2])), text[4:]
    if text.startswith("E("):
        sub, rest = _parse_label(text[2:])
        if not rest.startswith(";") or len(rest) < 3 or rest[2] != ")":
            raise ValueError(f"malformed extension label near {rest!r}")
        return ext(sub, int(rest[1])), rest[3:]
    if text.startswith("I("):
        a, rest = _parse_label(text[2:])
        if not rest.startswith(","):
            raise ValueError(f"malformed induced label near {rest!r}")
        b, rest = _parse_label(rest[1:])
        if not rest.startswith(")"):
            raise ValueError(f"malformed induced label near {rest!r}")
        return ind(a, b), rest[1:]
    raise ValueError(f"cannot parse label near {text!r}")
