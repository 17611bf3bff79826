# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counter for Littlewood-Richardson skew tableaux.

Same search as ``_lr_py.count_lr``; see there for the contract.  Falls
back to the pure version (via the package __init__) for inputs larger
than the fixed buffers below.
"""

from libc.string cimport memset

DEF MAXCELLS = 512
DEF MAXCOLS = 512
DEF MAXVALS = 512


cdef long _rec(
    int i,
    int ncells,
    int m,
    long limit,
    int* cellrow,
    int* cellcol,
    int* placed,
    int* colval,
    int* counts,
    int* content,
):
    cdef int r, c, right, above, v, j
    cdef long total = 0
    if i == ncells:
        return 1
    r = cellrow[i]
    c = cellcol[i]
    if i > 0 and cellrow[i - 1] == r:
        right = placed[i - 1]
    else:
        right = m
    above = colval[c]
    for v in range(above + 1, right + 1):
        j = v - 1
        if counts[j] >= content[j]:
            continue
        if j > 0 and counts[j - 1] <= counts[j]:
            continue
        counts[j] += 1
        placed[i] = v
        colval[c] = v
        total += _rec(i + 1, ncells, m, limit, cellrow, cellcol, placed,
                      colval, counts, content)
        colval[c] = above
        counts[j] -= 1
        if limit and total >= limit:
            break
    return total


def count_lr(outer, inner, content, long limit=0):
    cdef int cellrow[MAXCELLS]
    cdef int cellcol[MAXCELLS]
    cdef int placed[MAXCELLS]
    cdef int colval[MAXCOLS]
    cdef int counts[MAXVALS]
    cdef int ccontent[MAXVALS]
    cdef int rows = len(outer)
    cdef int m = len(content)
    cdef int ncells = 0
    cdef int total_content = 0
    cdef int r, c, lo

    cdef int width = outer[0] if rows else 0
    if width > MAXCOLS or m > MAXVALS:
        raise OverflowError("input exceeds compiled kernel buffers")

    for r in range(rows):
        lo = inner[r] if r < len(inner) else 0
        for c in range(outer[r] - 1, lo - 1, -1):
            if ncells >= MAXCELLS:
                raise OverflowError("input exceeds compiled kernel buffers")
            cellrow[ncells] = r
            cellcol[ncells] = c
            ncells += 1
    for r in range(m):
        ccontent[r] = content[r]
        total_content += content[r]
    if ncells != total_content:
        return 0
    if ncells == 0:
        return 1
    memset(counts, 0, m * sizeof(int))
    if width:
        memset(colval, 0, width * sizeof(int))
    return _rec(0, ncells, m, limit, cellrow, cellcol, placed, colval,
                counts, ccontent)
