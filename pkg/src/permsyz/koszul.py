"""Brute-force multigraded Tor via the Koszul complex on the 2n variables.

For I in {P, D} inside S = C[x_1..x_n, y_1..y_n], the complex
Lambda^*(C^2n) (x) S/I computes Tor(S/I, C); Tor_p(I) = Tor_(p+1)(S/I).
Everything is refined by the Z^n x Z^2 multigrading (column degrees and
x/y row degrees), which both ideals preserve.

The S_n x S_2 action permutes columns and swaps the two rows; traces of
canonical class representatives on homology subquotients give characters,
decomposed into irreducibles through exact character orthogonality.  This
is the oracle against which the closed-form descriptors are verified.
"""

import threading
from fractions import Fraction
from itertools import combinations, permutations, product

from .linalg import (
    ExactMatrix,
    SubspaceBasis,
    image_basis,
    kernel_basis,
    trace_on_subquotient,
)
from .partitions import partitions_of
from .reps import VirtualRep, decompose_character

# wedge generator ids: 2i is e_(i+1) (dual to x_(i+1)), 2i+1 is f_(i+1)


def perm_apply(sigma, vec):
    out = [0] * len(vec)
    for i, v in enumerate(vec):
        out[sigma[i]] = v
    return tuple(out)


def class_representative(mu, n):
    """Permutation of 0..n-1 with cycle type mu, cycles on consecutive indices."""
    sigma = list(range(n))
    pos = 0
    for k in mu:
        for t in range(k):
            sigma[pos + t] = pos + (t + 1) % k
        pos += k
    return tuple(sigma)


class ResourceBoundError(RuntimeError):
    """Brute-force computation beyond the configured size bound."""


class KoszulResolver:
    """Cached homology engine for one ideal in a fixed number of columns."""

    DEFAULT_N_BOUND = 4

    def __init__(self, ideal: str, n: int, unsafe_large: bool = False):
        if ideal not in ("P", "D"):
            raise ValueError(f"unknown ideal {ideal!r}")
        if n > self.DEFAULT_N_BOUND and not unsafe_large:
            raise ResourceBoundError(
                f"brute force for n = {n} exceeds the default bound {self.DEFAULT_N_BOUND}"
            )
        self.ideal = ideal
        self.n = n
        self.generators = self._make_generators()
        self._cache = {}
        self._lock = threading.Lock()

    # -- generators and monomials ---------------------------------------------

    def _monomial(self, xs=(), ys=()):
        m = [0] * (2 * self.n)
        for i in xs:
            m[i] += 1
        for j in ys:
            m[self.n + j] += 1
        return tuple(m)

    def _make_generators(self):
        n = self.n
        gens = []
        if self.ideal == "P":
            for i, j in combinations(range(n), 2):
                gens.append(
                    (
                        (Fraction(1), self._monomial((i,), (j,))),
                        (Fraction(1), self._monomial((j,), (i,))),
                    )
                )
        else:
            for i in range(n):
                for j in range(n):
                    if i != j:
                        gens.append(((Fraction(1), self._monomial((i,), (j,))),))
        return tuple(gens)

    def _memo(self, key, builder):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = builder()
        with self._lock:
            return self._cache.setdefault(key, value)

    def monomials(self, a, bid):
        """Monomials of Z^n-degree a and row bidegree bid, as sorted exponent
        tuples (x-part then y-part)."""
        key = ("mon", a, bid)

        def build():
            out = []
            for alpha in product(*(range(v + 1) for v in a)):
                if sum(alpha) != bid[0]:
                    continue
                beta = tuple(v - x for v, x in zip(a, alpha))
                out.append(alpha + beta)
            out.sort()
            return tuple(out)

        return self._memo(key, build)

    # -- quotient pieces --------------------------------------------------------

    def quotient(self, a, bid):
        """(mons, qbasis, nf): qbasis lists indices of coset-representative
        monomials; nf maps each monomial index to its class as a sparse vector
        over qbasis positions."""
        key = ("quo", a, bid)

        def build():
            from .linalg import _eliminate

            mons = self.monomials(a, bid)
            if bid[0] < 0 or bid[1] < 0:
                return ((), (), {})
            index = {m: i for i, m in enumerate(mons)}
            rows = []
            for gen in self.generators:
                gm0 = gen[0][1]
                ca = tuple(
                    a[i] - (gm0[i] + gm0[self.n + i]) for i in range(self.n)
                )
                if any(v < 0 for v in ca):
                    continue
                cbid = (bid[0] - 1, bid[1] - 1)
                if cbid[0] < 0 or cbid[1] < 0:
                    continue
                for mc in self.monomials(ca, cbid):
                    row = {}
                    for coeff, gm in gen:
                        mi = index[tuple(g + c for g, c in zip(gm, mc))]
                        row[mi] = row.get(mi, Fraction(0)) + coeff
                    rows.append(row)
            ech, pivots = _eliminate(rows)
            pivot_set = set(pivots)
            qbasis = tuple(i for i in range(len(mons)) if i not in pivot_set)
            qpos = {i: k for k, i in enumerate(qbasis)}
            nf = {}
            for i in range(len(mons)):
                if i in qpos:
                    nf[i] = {qpos[i]: Fraction(1)}
            for pivot, row in zip(pivots, ech):
                nf[pivot] = {
                    qpos[j]: -v for j, v in row.items() if j != pivot and v
                }
            return (mons, qbasis, nf)

        return self._memo(key, build)

    def quotient_dim(self, a, bid) -> int:
        return len(self.quotient(a, bid)[1])

    def graded_quotient_dims(self, a):
        """(dim of the ideal piece, dim of the quotient piece) at Z^n-degree a,
        all bidegrees combined; their sum is the full monomial count."""
        a = tuple(a)
        total = sum(a)
        ideal_dim = quot_dim = 0
        for b1 in range(total + 1):
            bid = (b1, total - b1)
            mons, qbasis, _ = self.quotient(a, bid)
            quot_dim += len(qbasis)
            ideal_dim += len(mons) - len(qbasis)
        return ideal_dim, quot_dim

    # -- Koszul pieces ----------------------------------------------------------

    def _wedge_degree(self, T):
        a = [0] * self.n
        b1 = b2 = 0
        for t in T:
            a[t // 2] += 1
            if t % 2:
                b2 += 1
            else:
                b1 += 1
        return tuple(a), (b1, b2)

    def koszul_basis(self, p, a, bid):
        """Ordered basis of Lambda^p (x) (S/I) at refined degree (a, bid):
        blocks of quotient classes indexed by admissible wedges T."""
        key = ("kb", p, a, bid)

        def build():
            wedges = []
            offsets = {}
            dim = 0
            if 0 <= p <= sum(a):
                cand = []
                for i in range(self.n):
                    if a[i] >= 1:
                        cand.append(2 * i)
                        cand.append(2 * i + 1)
                for T in combinations(cand, p):
                    ta, tb = self._wedge_degree(T)
                    if any(ta[i] > a[i] for i in range(self.n)):
                        continue
                    if tb[0] > bid[0] or tb[1] > bid[1]:
                        continue
                    ra = tuple(x - y for x, y in zip(a, ta))
                    rb = (bid[0] - tb[0], bid[1] - tb[1])
                    qd = self.quotient_dim(ra, rb)
                    if qd:
                        wedges.append(T)
                        offsets[T] = dim
                        dim += qd
            return (tuple(wedges), offsets, dim)

        return self._memo(key, build)

    def differential(self, p, a, bid) -> ExactMatrix:
        """Matrix of d_p: K_p -> K_(p-1) at refined degree (a, bid); signs are
        the alternating positions in the sorted wedge tuple."""
        key = ("diff", p, a, bid)

        def build():
            wedges, offsets, dim = self.koszul_basis(p, a, bid)
            _, _, dim_lower = self.koszul_basis(p - 1, a, bid)
            m = ExactMatrix(dim_lower, dim)
            _, offsets_lower, _ = self.koszul_basis(p - 1, a, bid)
            for T in wedges:
                ta, tb = self._wedge_degree(T)
                ra = tuple(x - y for x, y in zip(a, ta))
                rb = (bid[0] - tb[0], bid[1] - tb[1])
                mons, qbasis, _ = self.quotient(ra, rb)
                base = offsets[T]
                for k, mi in enumerate(qbasis):
                    mon = mons[mi]
                    col = base + k
                    for pos, t in enumerate(T):
                        T2 = T[:pos] + T[pos + 1 :]
                        if T2 not in offsets_lower:
                            continue
                        sign = -1 if pos % 2 else 1
                        var = (t // 2) if t % 2 == 0 else self.n + t // 2
                        mon2 = list(mon)
                        mon2[var] += 1
                        mon2 = tuple(mon2)
                        ta2, tb2 = self._wedge_degree(T2)
                        ra2 = tuple(x - y for x, y in zip(a, ta2))
                        rb2 = (bid[0] - tb2[0], bid[1] - tb2[1])
                        mons2, _, nf2 = self.quotient(ra2, rb2)
                        idx2 = mons2.index(mon2)
                        for qj, coeff in nf2[idx2].items():
                            row = offsets_lower[T2] + qj
                            m[row, col] = m[row, col] + sign * coeff
            return m

        return self._memo(key, build)

    def homology(self, p, a, bid):
        """(kernel basis of d_p, image basis of d_(p+1)) at (a, bid)."""
        key = ("hom", p, a, bid)

        def build():
            ker = kernel_basis(self.differential(p, a, bid))
            im = image_basis(self.differential(p + 1, a, bid))
            return (ker, im)

        return self._memo(key, build)

    def homology_dim(self, p, a, bid) -> int:
        ker, im = self.homology(p, a, bid)
        return ker.dim - im.dim

    # -- Tor of the ideal --------------------------------------------------------

    def tor_dim(self, p, a) -> int:
        """dim Tor_p(ideal, C) at Z^n-degree a (= H_(p+1) of S/ideal, all
        bidegrees summed)."""
        a = tuple(a)
        total = sum(a)
        return sum(
            self.homology_dim(p + 1, a, (b1, total - b1)) for b1 in range(total + 1)
        )

    # -- group action --------------------------------------------------------------

    def _act_monomial(self, sigma, swap, mon):
        alpha, beta = mon[: self.n], mon[self.n :]
        if swap:
            alpha, beta = beta, alpha
        return perm_apply(sigma, alpha) + perm_apply(sigma, beta)

    def _act_wedge(self, sigma, swap, T):
        imgs = []
        for t in T:
            i, is_f = t // 2, t % 2
            if swap:
                is_f = 1 - is_f
            imgs.append(2 * sigma[i] + is_f)
        sign = 1
        # parity of the permutation sorting imgs
        imgs = list(imgs)
        for i in range(len(imgs)):
            for j in range(i + 1, len(imgs)):
                if imgs[i] > imgs[j]:
                    imgs[i], imgs[j] = imgs[j], imgs[i]
                    sign = -sign
        return tuple(imgs), sign

    def action_matrix(self, sigma, swap, p, a, bid) -> ExactMatrix:
        """Matrix of (sigma, swap) on the K_p piece at (a, bid); requires the
        piece to be fixed (sigma a = a, and bid symmetric when swapping)."""
        if perm_apply(sigma, a) != tuple(a):
            raise ValueError("piece not fixed by sigma")
        if swap and bid[0] != bid[1]:
            raise ValueError("piece not fixed by the row swap")
        wedges, offsets, dim = self.koszul_basis(p, a, bid)
        m = ExactMatrix(dim, dim)
        for T in wedges:
            ta, tb = self._wedge_degree(T)
            ra = tuple(x - y for x, y in zip(a, ta))
            rb = (bid[0] - tb[0], bid[1] - tb[1])
            mons, qbasis, _ = self.quotient(ra, rb)
            T2, sign = self._act_wedge(sigma, swap, T)
            ta2, tb2 = self._wedge_degree(T2)
            ra2 = tuple(x - y for x, y in zip(a, ta2))
            rb2 = (bid[0] - tb2[0], bid[1] - tb2[1])
            mons2, _, nf2 = self.quotient(ra2, rb2)
            for k, mi in enumerate(qbasis):
                col = offsets[T] + k
                mon2 = self._act_monomial(sigma, swap, mons[mi])
                for qj, coeff in nf2[mons2.index(mon2)].items():
                    row = offsets[T2] + qj
                    m[row, col] = m[row, col] + sign * coeff
        return m

    # -- characters -----------------------------------------------------------------

    def tor_character(self, p, pattern_vec, bidpair) -> dict:
        """Character of S_n x S_2 on Tor_p(ideal) summed over the orbit of
        (pattern_vec, bidpair): {(cycle_type, swapped): integer trace}."""
        pattern_vec = tuple(sorted(pattern_vec, reverse=True))
        orbit = sorted(set(permutations(pattern_vec)))
        bids = sorted({tuple(bidpair), (bidpair[1], bidpair[0])})
        char = {}
        for mu in partitions_of(self.n):
            sigma = class_representative(mu, self.n)
            for swap in (False, True):
                tr = Fraction(0)
                for aa in orbit:
                    if perm_apply(sigma, aa) != aa:
                        continue
                    for bd in bids:
                        if swap and bd[0] != bd[1]:
                            continue
                        ker, im = self.homology(p + 1, aa, bd)
                        if ker.dim == im.dim:
                            continue
                        g = self.action_matrix(sigma, swap, p + 1, aa, bd)
                        tr += trace_on_subquotient(g, ker, im)
                if tr.denominator != 1:
                    raise ArithmeticError(f"non-integral trace {tr} at {mu}, swap={swap}")
                char[(mu, swap)] = int(tr)
        return char

    def tor_rep(self, p, pattern_vec, bidpair) -> VirtualRep:
        return decompose_character(
            self.n, self.tor_character(p, pattern_vec, bidpair), s2=True
        )


# -- plain exterior algebra (no quotient): used to validate Prop A labels -------


def exterior_character(n, pattern_vec, bidpair) -> dict:
    """Character of S_n x S_2 on Lambda(V (x) W)* summed over the orbit of
    (pattern_vec, bidpair), by counting signed fixed wedges."""
    res = KoszulResolver("P", n, unsafe_large=True)  # only for wedge helpers
    pattern_vec = tuple(sorted(pattern_vec, reverse=True))
    orbit = sorted(set(permutations(pattern_vec)))
    bids = sorted({tuple(bidpair), (bidpair[1], bidpair[0])})
    p = sum(pattern_vec)
    char = {}
    for mu in partitions_of(n):
        sigma = class_representative(mu, n)
        for swap in (False, True):
            tr = 0
            for aa in orbit:
                if perm_apply(sigma, aa) != aa:
                    continue
                for bd in bids:
                    if swap and bd[0] != bd[1]:
                        continue
                    cand = []
                    for i in range(n):
                        if aa[i] >= 1:
                            cand.extend((2 * i, 2 * i + 1))
                    for T in combinations(cand, p):
                        ta, tb = res._wedge_degree(T)
                        if ta != tuple(aa) or tb != bd:
                            continue
                        T2, sign = res._act_wedge(sigma, swap, T)
                        if T2 == T:
                            tr += sign
            char[(mu, swap)] = tr
    return char
