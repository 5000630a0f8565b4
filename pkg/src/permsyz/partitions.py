"""Partition combinatorics for symmetric group representation theory.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ``()``.  Cycle types are partitions of n reinterpreted as the
cycle lengths of a conjugacy class of S_n.
"""

from functools import cache
from math import factorial


Partition = tuple  # weakly decreasing positive ints


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> tuple:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def sort_key(parts):
    """Canonical (reverse-lexicographic) sort key: [k] first, [1^k] last."""
    return tuple(-p for p in parts)


@cache
def partitions_of(k: int) -> tuple:
    """All partitions of k, reverse-lexicographically: (3,), (2,1), (1,1,1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(k, k))


def conjugate(parts) -> tuple:
    if not parts:
        return ()
    cols = [0] * parts[0]
    for p in parts:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


@cache
def hook_dim(parts) -> int:
    """Number of standard Young tableaux of this shape (hook-length formula)."""
    parts = check_partition(parts) if parts else ()
    if not parts:
        return 1
    conj = conjugate(parts)
    num = factorial(sum(parts))
    for i, row in enumerate(parts):
        for j in range(row):
            num //= row - j + conj[j] - i - 1
    return num


def multinomial(n: int, parts) -> int:
    """n! / (p_1! ... p_l! r!) with r = n - sum(parts) the remainder block.

    Returns 0 when the parts do not fit inside n; negative parts are an error.
    """
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts!r}")
    s = sum(parts)
    if s > n:
        return 0
    out = factorial(n) // factorial(n - s)
    for p in parts:
        out //= factorial(p)
    return out


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the vanishing convention outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return factorial(a) // (factorial(b) * factorial(a - b))


def class_size(mu) -> int:
    """Size of the S_n conjugacy class with cycle type mu (n = |mu|)."""
    mu = check_partition(mu) if mu else ()
    n = sum(mu)
    z = 1
    for k in set(mu):
        m = mu.count(k)
        z *= factorial(m) * k**m
    return factorial(n) // z


def _beta_set(parts):
    ell = len(parts)
    return tuple(parts[i] + ell - 1 - i for i in range(ell))


def _partition_from_beta(beta):
    ell = len(beta)
    beta = sorted(beta, reverse=True)
    parts = tuple(b - (ell - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in parts if p > 0)


@cache
def mn_character(lam, mu) -> int:
    """Irreducible S_n character value chi_lambda(mu), via the
    Murnaghan-Nakayama border-strip recursion on beta-numbers.

    Removing a border strip of length k from lambda is replacing a
    beta-number b by b - k (when absent from the set); the strip height is
    the number of beta-numbers strictly between them.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not lam:
        return 1
    k = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    bset = set(beta)
    total = 0
    for b in beta:
        if b - k < 0 or b - k in bset:
            continue
        height = sum(1 for x in beta if b - k < x < b)
        newbeta = [x for x in beta if x != b] + [b - k]
        total += (-1) ** height * mn_character(_partition_from_beta(newbeta), rest)
    return total


def _skew_cells(outer, inner):
    """Cells of outer/inner in reading order: rows top to bottom, each row
    right to left (the order in which the lattice-word condition is checked)."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = []
    for i, row in enumerate(outer):
        for j in range(row - 1, inner[i] - 1, -1):
            cells.append((i, j))
    return cells


def _count_lr_fillings(outer, inner, content):
    """Number of Littlewood-Richardson skew tableaux of shape outer/inner and
    content ``content``: semistandard fillings whose reverse reading word is a
    lattice word."""
    cells = _skew_cells(outer, inner)
    inner_padded = tuple(inner) + (0,) * (len(outer) - len(inner))
    ncell = len(cells)
    nval = len(content)
    counts = [0] * (nval + 1)
    grid = {}

    def place(idx):
        if idx == ncell:
            return 1
        i, j = cells[idx]
        # row-weakly-increasing bound from the cell to the right
        hi = grid.get((i, j + 1), nval)
        # column-strict bound from the cell above (absent when above is in inner)
        lo = grid.get((i - 1, j), 0) + 1 if (i > 0 and j >= inner_padded[i - 1]) else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice-word prefix would fail
            counts[v] += 1
            grid[(i, j)] = v
            total += place(idx + 1)
            del grid[(i, j)]
            counts[v] -= 1
        return total

    return place(0)


@cache
def lr_coeffs(lam, mu) -> dict:
    """Littlewood-Richardson expansion of [lam]*[mu] as {nu: multiplicity}.

    Computed by enumerating LR tableaux of shape nu/lam and content mu
    (lattice-word check); small shapes only.
    """
    lam = check_partition(lam) if lam else ()
    mu = check_partition(mu) if mu else ()
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    total = sum(lam) + sum(mu)
    out = {}
    for nu in partitions_of(total):
        if len(nu) < len(lam) or any(nu[i] < lam[i] for i in range(len(lam))):
            continue
        if len(nu) > len(lam) + len(mu):
            continue
        c = _count_lr_fillings(nu, lam, mu)
        if c:
            out[nu] = c
    return out
