"""The Robinson-Schensted correspondence via Viennot's light-and-shadow
construction, dihedral symmetries on permutations, and the brute-force
enumeration oracle for the count matrices.

Permutations are tuples in one-line notation over 1..n.
"""

import itertools
import os
from bisect import bisect_right

from .young import StandardTableau, as_partition

ORACLE_LIMIT = 10  # 10! permutations is the largest brute-force budget


def check_permutation(sigma) -> tuple:
    sigma = tuple(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {sigma}")
    return sigma


def shadow_lines(points):
    """Shadow lines of a point set with distinct rows and distinct columns.

    Returns (lines, skeleton).  Line k is the unshadowed frontier of the
    set after removing lines 1..k-1; each line is a list of (row, col) with
    rows increasing and columns decreasing.  The skeleton holds the
    southeast corner (row_{t+1}, col_t) of each consecutive pair on a line.

    Points are assigned by a patience pass over rows in increasing order:
    a point joins the leftmost line whose current last column exceeds its
    own, displacing that column into the skeleton.
    """
    pts = sorted(points)
    lines = []
    tops = []  # current last column per line; increasing across lines
    skeleton = []
    for r, c in pts:
        k = bisect_right(tops, c)
        if k == len(tops):
            tops.append(c)
            lines.append([(r, c)])
        else:
            skeleton.append((r, tops[k]))
            tops[k] = c
            lines[k].append((r, c))
    return lines, skeleton


def viennot_rs(sigma):
    """Run the full light-and-shadow construction.

    Returns (P, Q): row r of P takes the minimum row index on each shadow
    line of the rth skeleton, row r of Q the minimum column index.  With
    this convention sigma(i) = j puts entry i in P and entry j in Q.
    """
    sigma = check_permutation(sigma)
    pts = list(enumerate(sigma, 1))
    p_rows, q_rows = [], []
    while pts:
        lines, skeleton = shadow_lines(pts)
        p_rows.append([line[0][0] for line in lines])
        q_rows.append([min(c for _, c in line) for line in lines])
        pts = skeleton
    return StandardTableau(p_rows), StandardTableau(q_rows)


def shape_of(sigma) -> tuple:
    """RS shape of a permutation (row lengths of either tableau)."""
    pts = list(enumerate(sigma, 1))
    shape = []
    while pts:
        # inlined shadow-line pass keeping only line count and skeleton;
        # this runs millions of times inside the oracle
        tops = []
        skeleton = []
        for r, c in pts:
            k = bisect_right(tops, c)
            if k == len(tops):
                tops.append(c)
            else:
                skeleton.append((r, tops[k]))
                tops[k] = c
        shape.append(len(tops))
        pts = skeleton
    return tuple(shape)


def lis_length(sigma) -> int:
    """Longest increasing subsequence length, by patience sorting tails."""
    tails = []
    for v in sigma:
        k = bisect_right(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def apply_symmetry(g: str, sigma):
    """Apply one of the dihedral involutions T (inverse), H (pointwise
    complement), V (reverse), R (both)."""
    sigma = tuple(sigma)
    n = len(sigma)
    if g == "T":
        inv = [0] * n
        for i, v in enumerate(sigma, 1):
            inv[v - 1] = i
        return tuple(inv)
    if g == "H":
        return tuple(n + 1 - v for v in sigma)
    if g == "V":
        return sigma[::-1]
    if g == "R":
        return tuple(n + 1 - v for v in reversed(sigma))
    raise ValueError(f"unknown symmetry {g!r}")


def worker_count() -> int:
    """Worker count for oracle runs; RSM_THREADS overrides (0 = auto)."""
    raw = os.environ.get("RSM_THREADS", "0")
    try:
        count = int(raw)
    except ValueError:
        count = 0
    if count <= 0:
        count = os.cpu_count() or 1
    return count


def oracle_count_matrices(n: int) -> dict:
    """One pass over all of S_n: shape-class count matrices for every shape.

    Returns {shape: n x n list-of-lists of ints}.  Row and column sums of
    each matrix equal f_syt(shape)^2.
    """
    if n > ORACLE_LIMIT:
        raise ValueError(f"oracle limited to n <= {ORACLE_LIMIT}, got {n}")
    matrices = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        shape = shape_of(sigma)
        mat = matrices.get(shape)
        if mat is None:
            mat = matrices[shape] = [[0] * n for _ in range(n)]
        for i, j in enumerate(sigma):
            mat[i][j - 1] += 1
    return matrices


def oracle_count_matrix(parts):
    """Brute-force count matrix for one shape: entry (i,j) counts the
    permutations of this shape with sigma(i) = j."""
    parts = as_partition(parts)
    n = sum(parts)
    if n > ORACLE_LIMIT:
        raise ValueError(f"oracle limited to n <= {ORACLE_LIMIT}, got {n}")
    mat = [[0] * n for _ in range(n)]
    for sigma in itertools.permutations(range(1, n + 1)):
        if shape_of(sigma) == parts:
            for i, j in enumerate(sigma):
                mat[i][j - 1] += 1
    return mat
