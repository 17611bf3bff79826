"""Pure-Python counter for Littlewood-Richardson skew tableaux.

Reference backend; the compiled module ``_lr_cy`` implements the exact
same search and is preferred at import time when available.
"""

from __future__ import annotations


def count_lr(
    outer: tuple[int, ...],
    inner: tuple[int, ...],
    content: tuple[int, ...],
    limit: int = 0,
) -> int:
    """Count column-strict fillings of outer/inner with the given content
    whose reverse reading word (rows top to bottom, right to left) is a
    lattice word.

    Inputs must already be sanitized: outer a partition, inner padded or
    shorter with inner[i] <= outer[i], content a partition.  With
    limit > 0 the search stops as soon as ``limit`` fillings are found and
    the running total (>= limit) is returned.
    """
    rows = len(outer)
    m = len(content)
    pad = tuple(inner) + (0,) * (rows - len(inner))
    cells = [
        (r, c) for r in range(rows) for c in range(outer[r] - 1, pad[r] - 1, -1)
    ]
    ncells = len(cells)
    if ncells != sum(content):
        return 0
    if ncells == 0:
        return 1

    counts = [0] * m
    colval = [0] * outer[0]
    placed = [0] * ncells

    def rec(i: int) -> int:
        if i == ncells:
            return 1
        r, c = cells[i]
        right = placed[i - 1] if i > 0 and cells[i - 1][0] == r else m
        above = colval[c]
        total = 0
        for v in range(above + 1, right + 1):
            j = v - 1
            if counts[j] >= content[j]:
                continue
            if j > 0 and counts[j - 1] <= counts[j]:
                continue
            counts[j] += 1
            placed[i] = v
            colval[c] = v
            total += rec(i + 1)
            colval[c] = above
            counts[j] -= 1
            if limit and total >= limit:
                break
        return total

    # rec caps its own subtree at `limit`, which is enough for the
    # positivity use (limit=1); exact counts use limit=0.
    return rec(0)
