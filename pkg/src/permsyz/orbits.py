"""Orbit-module descriptors for the syzygies of the 2x2 permanental ideal.

An orbit module (rho_1,...,rho_l)_<d_1^p_1,...,d_l^p_l> is the G_n-module
induced from a Young-subgroup representation attached to the S_n-orbit of a
multidegree pattern; an optional Z^2 bidegree refines it to a G_n x G_2
module.  This module generates the complete descriptor lists for Ext(P, C)
(three linear strands) and Ext(D, C) (two strands), together with the
intermediate source modules used to derive them, so each difference identity
can be cross-checked term by term.
"""

from dataclasses import dataclass, field

from .partitions import multinomial
from .reps import IND, SIGN, TRIV, VirtualRep, induce


def _col(k):
    """The column partition [1^k]."""
    return (1,) * k


def _two_col(c, j):
    """The two-column partition [2^(c-j), 1^(2j)]."""
    return (2,) * (c - j) + (1,) * (2 * j)


def _parity_label(exponent):
    """S_2 label of the sign representation raised to ``exponent``."""
    return SIGN if exponent % 2 else TRIV


@dataclass(frozen=True)
class MultidegreePattern:
    """A sorted multidegree (d_1^p_1,...,d_l^p_l, 0^rest) in Z^n, with an
    optional Z^2 bidegree.  Only blocks with d >= 1 are stored; the zero
    block is implicit."""

    n: int
    blocks: tuple  # ((value, multiplicity), ...), values strictly decreasing
    bidegree: tuple | None = None

    def __post_init__(self):
        used = 0
        prev = None
        for d, p in self.blocks:
            if d <= 0 or p <= 0:
                raise ValueError(f"bad block ({d},{p}) in pattern")
            if prev is not None and d >= prev:
                raise ValueError("block values must strictly decrease")
            prev = d
            used += p
        if used > self.n:
            raise ValueError(f"pattern does not fit in n={self.n}")
        if self.bidegree is not None:
            b1, b2 = self.bidegree
            if b1 < 0 or b2 < 0 or b1 + b2 != self.size():
                raise ValueError(
                    f"bidegree {self.bidegree} incompatible with pattern of size {self.size()}"
                )

    @classmethod
    def from_multidegree(cls, vec, bidegree=None):
        vec = tuple(vec)
        blocks = []
        for d in sorted(set(vec), reverse=True):
            if d > 0:
                blocks.append((d, vec.count(d)))
        return cls(len(vec), tuple(blocks), bidegree)

    @classmethod
    def two_one(cls, n, a, b, bidegree=None):
        """The pattern (2^a, 1^b, 0^(n-a-b))."""
        blocks = []
        if a:
            blocks.append((2, a))
        if b:
            blocks.append((1, b))
        return cls(n, tuple(blocks), bidegree)

    def size(self) -> int:
        return sum(d * p for d, p in self.blocks)

    def zero_mult(self) -> int:
        return self.n - sum(p for _, p in self.blocks)

    def multidegree(self) -> tuple:
        out = []
        for d, p in self.blocks:
            out.extend([d] * p)
        out.extend([0] * self.zero_mult())
        return tuple(out)

    def orbit_size(self) -> int:
        return multinomial(self.n, [p for _, p in self.blocks])

    def without_bidegree(self):
        return MultidegreePattern(self.n, self.blocks)

    def two_one_counts(self):
        """(a, b) for a pattern with values in {2, 1}; error otherwise."""
        a = b = 0
        for d, p in self.blocks:
            if d == 2:
                a = p
            elif d == 1:
                b = p
            else:
                raise ValueError(f"pattern value {d} outside {{2,1}}")
        return a, b

    def __repr__(self):
        body = ",".join(f"{d}^{p}" if p > 1 else f"{d}" for d, p in self.blocks)
        if self.zero_mult():
            body += ("," if body else "") + f"0^{self.zero_mult()}"
        tag = f"<{body}>"
        if self.bidegree is not None:
            tag += f"x{self.bidegree}"
        return tag


@dataclass(frozen=True)
class OrbitModule:
    """Per-block representations attached to a multidegree pattern.

    block_reps[i] lives over S_(p_i) for the i-th (nonzero) block; the zero
    block always carries the trivial representation.  g2 records the S_2
    content: TRIV/SIGN for a symmetric bidegree, IND (a single 2-dimensional
    induced object) when the bidegree is asymmetric, and None when the
    pattern carries no bidegree at all.
    """

    pattern: MultidegreePattern
    block_reps: tuple
    g2: str | None = None

    def __post_init__(self):
        if len(self.block_reps) != len(self.pattern.blocks):
            raise ValueError("one representation per nonzero pattern block")
        for rep, (_, p) in zip(self.block_reps, self.pattern.blocks):
            if rep.n != p:
                raise ValueError(f"block rep over S_{rep.n} attached to block of size {p}")
        bid = self.pattern.bidegree
        if bid is None:
            if self.g2 is not None:
                raise ValueError("g2 label without a bidegree")
        else:
            asym = bid[0] != bid[1]
            if asym and self.g2 != IND:
                raise ValueError("asymmetric bidegree must carry the induced S_2 part")
            if not asym and self.g2 not in (TRIV, SIGN):
                raise ValueError("symmetric bidegree needs a TRIV or SIGN label")

    def dim(self) -> int:
        d = self.pattern.orbit_size()
        for rep in self.block_reps:
            d *= rep.dim()
        if self.g2 == IND:
            d *= 2
        return d

    def decompose(self, with_s2=None) -> VirtualRep:
        """Restriction to irreducible S_n (or S_n x S_2) representations, by
        inducing the block representations up from the Young subgroup."""
        if any(not rep.is_effective() for rep in self.block_reps):
            raise ValueError(f"block reps not effective in {self}")
        if with_s2 is None:
            with_s2 = self.pattern.bidegree is not None
        blocks = list(self.block_reps)
        r0 = self.pattern.zero_mult()
        if r0:
            blocks.append(VirtualRep.trivial(r0))
        base = induce(blocks)
        if with_s2:
            if self.g2 is None:
                raise ValueError("no S_2 structure on this orbit module")
            return base.times_s2(self.g2)
        if self.g2 == IND:
            return 2 * base
        return base

    def __repr__(self):
        reps = ",".join(repr(r) for r in self.block_reps)
        tag = f"({reps})_{self.pattern!r}"
        if self.g2 is not None:
            tag += f" [{self.g2}]"
        return tag


def orbit_module_dim(m: OrbitModule) -> int:
    return m.dim()


def orbit_module_decompose(m: OrbitModule, with_s2=None) -> VirtualRep:
    return m.decompose(with_s2=with_s2)


@dataclass(frozen=True)
class StrandDescriptor:
    """All orbit modules of Ext^p in internal degree q; strand = q - p - 1."""

    p: int
    q: int
    strand: int
    modules: tuple

    def __post_init__(self):
        if self.q - self.p not in (2, 3, 4):
            raise ValueError(f"(p,q)=({self.p},{self.q}) lies on no linear strand")
        if self.strand != self.q - self.p - 1:
            raise ValueError("strand id must equal q - p - 1")

    def dim(self) -> int:
        return sum(m.dim() for m in self.modules)


def _group_by_label(pattern, fixed_front, jterms):
    """Combine j-indexed (front..., middle, exponent) terms sharing a pattern
    into at most one OrbitModule per S_2 label; asserts effectivity."""
    by_label = {}
    for middle, exponent in jterms:
        label = _parity_label(exponent)
        if label in by_label:
            by_label[label] = by_label[label] + middle
        else:
            by_label[label] = middle
    out = []
    for label in (TRIV, SIGN):
        if label not in by_label:
            continue
        mid = by_label[label]
        if not mid.is_effective():
            raise ValueError(
                f"virtual difference not effective at {pattern!r} [{label}]: {mid}"
            )
        if not mid:
            continue
        blocks = tuple(fixed_front) + ((mid,) if mid.n > 0 else ())
        out.append(OrbitModule(pattern, blocks, label))
    return out


def _bidegrees(a, b):
    """Canonical bidegrees (a+b-c, a+c) for c = 0..floor(b/2)."""
    return [(a + b - c, a + c) for c in range(b // 2 + 1)]


def exterior_orbit_rep(pattern: MultidegreePattern):
    """G_n x G_2 representation of the exterior algebra on the 2n dual
    variables in the orbit of ``pattern`` (which must carry a bidegree).

    For (2^a,1^b,0^r) x (a+b-c, a+c): the doubled block contributes the
    trivial S_a-representation; the b singles split into e's and f's, giving
    Ind([1^(b-c)],[1^c]) for an asymmetric bidegree and the two-column
    pieces [2^(c-j),1^(2j)] with sign exponent a+c-j when c = b/2.
    """
    if pattern.bidegree is None:
        raise ValueError("exterior_orbit_rep needs a bidegree")
    a, b = pattern.two_one_counts()
    c = min(pattern.bidegree) - a
    if c < 0 or 2 * c > b:
        raise ValueError(f"bidegree {pattern.bidegree} unreachable in the exterior algebra")
    front = (VirtualRep.trivial(a),) if a else ()
    if 2 * c != b:
        mid = induce([_col(b - c), _col(c)])
        blocks = front + ((mid,) if b else ())
        return [OrbitModule(pattern, blocks, IND)]
    return _group_by_label(
        pattern, front, [(VirtualRep.irreducible(_two_col(c, j)), a + c - j) for j in range(c + 1)]
    )


SOURCE_KINDS = ("S_i", "m_ef", "det_deg1", "det_deg2")


def source_module_descriptors(kind: str, pattern: MultidegreePattern):
    """Descriptors for the intermediate modules feeding the main theorem.

    kind:
      S_i      -- the Ext of the diagonal cokernel sum (needs a >= 1)
      m_ef     -- the sign-twisted ideal (e_1..e_n)(f_1..f_n) inside the
                  exterior algebra (needs degree >= 2, and c >= 1 when a = 0)
      det_deg1 -- sources generated by x_i y_j - x_j y_i (needs b >= 2, c >= 1)
      det_deg2 -- sources generated by x_i^2 y_j^2 - x_j^2 y_i^2 (needs a >= 2)
    """
    if pattern.bidegree is None:
        raise ValueError("source modules need a bidegree")
    a, b = pattern.two_one_counts()
    b1, b2 = pattern.bidegree
    c = min(b1, b2) - a
    if c < 0 or 2 * c > b:
        raise ValueError(f"bidegree {pattern.bidegree} out of range")
    symmetric = 2 * c == b

    if kind == "S_i":
        if a < 1:
            raise ValueError("S_i sources need a >= 1")
        front = (induce([_col(1), (a - 1,) if a > 1 else ()]),)
        if not symmetric:
            mid = induce([_col(b - c), _col(c)])
            return [OrbitModule(pattern, front + ((mid,) if b else ()), IND)]
        return _group_by_label(
            pattern,
            front,
            [(VirtualRep.irreducible(_two_col(c, j)), a - 1 + c - j) for j in range(c + 1)],
        )

    if kind == "m_ef":
        if 2 * a + b < 2 or (a == 0 and c == 0):
            raise ValueError("m_ef vanishes at this pattern")
        front = (VirtualRep.trivial(a),) if a else ()
        if not symmetric:
            mid = induce([_col(b - c), _col(c)])
            return [OrbitModule(pattern, front + ((mid,) if b else ()), IND)]
        return _group_by_label(
            pattern,
            front,
            [(VirtualRep.irreducible(_two_col(c, j)), a + 1 + c - j) for j in range(c + 1)],
        )

    if kind == "det_deg1":
        if b < 2 or c < 1:
            raise ValueError("det_deg1 sources need b >= 2 and c >= 1")
        front = (VirtualRep.trivial(a),) if a else ()
        if not symmetric:
            mid = induce([_col(2), _col(b - 1 - c), _col(c - 1)])
            return [OrbitModule(pattern, front + (mid,), IND)]
        return _group_by_label(
            pattern,
            front,
            [
                (induce([_col(2), _two_col(c - 1, j)]), a + c - j)
                for j in range(c)
            ],
        )

    if kind == "det_deg2":
        if a < 2:
            raise ValueError("det_deg2 sources need a >= 2")
        front = (induce([_col(2), (a - 2,) if a > 2 else ()]),)
        if not symmetric:
            mid = induce([_col(b - c), _col(c)])
            return [OrbitModule(pattern, front + ((mid,) if b else ()), IND)]
        return _group_by_label(
            pattern,
            front,
            [(VirtualRep.irreducible(_two_col(c, j)), a - 1 + c - j) for j in range(c + 1)],
        )

    raise ValueError(f"unknown source kind {kind!r}; expected one of {SOURCE_KINDS}")


# -- descriptor generators for Ext(P, C) and Ext(D, C) -------------------------


def _strand2_modules_refined(n, a, b):
    """Second-strand orbit modules at (2^a,1^b,0^*) with bidegree refinement."""
    out = []
    for c in range(1, b // 2 + 1):
        bid = (a + b - c, a + c)
        pattern = MultidegreePattern.two_one(n, a, b, bid)
        if a >= 1:
            out.extend(source_module_descriptors("det_deg1", pattern))
            continue
        # a = 0: kernel of the map onto the exterior ideal; virtual difference
        if 2 * c != b:
            rep = induce([_col(2), _col(b - 1 - c), _col(c - 1)]) - induce(
                [_col(b - c), _col(c)]
            )
            if not rep.is_effective():
                raise ValueError(f"negative multiplicity at {pattern!r}: {rep}")
            if rep:
                out.append(OrbitModule(pattern, (rep,), IND))
        else:
            jterms = [(induce([_col(2), _two_col(c - 1, j)]), c - j) for j in range(c)]
            jterms += [
                ((-1) * VirtualRep.irreducible(_two_col(c, j)), 1 + c - j)
                for j in range(c + 1)
            ]
            out.extend(_group_by_label(pattern, (), jterms))
    return out


def _strand2_module_coarse(n, a, b):
    """Second-strand orbit module at (2^a,1^b,0^*), G_n version (bidegree sums
    performed)."""
    pattern = MultidegreePattern.two_one(n, a, b)
    if a >= 1:
        mid = VirtualRep.zero(b)
        for c in range(b - 1):
            mid = mid + induce([_col(2), _col(b - 2 - c), _col(c)])
        return OrbitModule(pattern, (VirtualRep.trivial(a), mid))
    mid = VirtualRep.zero(b)
    for c in range(b - 1):
        mid = mid + induce([_col(2), _col(b - 2 - c), _col(c)]) - induce(
            [_col(b - 1 - c), _col(c + 1)]
        )
    if not mid.is_effective():
        raise ValueError(f"negative multiplicity at {pattern!r}: {mid}")
    if not mid:
        return None
    return OrbitModule(pattern, (mid,))


def _strand3_modules_refined(n, a, b):
    out = []
    first = VirtualRep.irreducible((a - 2, 1, 1))
    for c in range(b // 2 + 1):
        bid = (a + b - c, a + c)
        pattern = MultidegreePattern.two_one(n, a, b, bid)
        if 2 * c != b:
            out.append(OrbitModule(pattern, (first, induce([_col(b - c), _col(c)])), IND))
        else:
            out.extend(
                _group_by_label(
                    pattern,
                    (first,),
                    [
                        (VirtualRep.irreducible(_two_col(c, j)), a - 1 + c - j)
                        for j in range(c + 1)
                    ],
                )
            )
    return out


def _strand3_module_coarse(n, a, b):
    first = VirtualRep.irreducible((a - 2, 1, 1))
    mid = VirtualRep.zero(b)
    for c in range(b + 1):
        mid = mid + induce([_col(b - c), _col(c)])
    blocks = (first, mid) if b else (first,)
    return OrbitModule(MultidegreePattern.two_one(n, a, b), blocks)


def ext_P_descriptors(n: int, g2: bool = False):
    """The complete list of nonzero Ext^p(P, C) orbit-module descriptors.

    With g2 set, every module carries its Z^2 bidegree and S_2 label; without
    it, the per-bidegree sum is performed and plain G_n modules are returned.
    Three strands: q = 2 (generators), q = p + 3, q = p + 4.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    entries = {}

    def add(p, q, modules):
        if modules:
            entries.setdefault((p, q), []).extend(modules)

    bid = (1, 1) if g2 else None
    gen_pattern = MultidegreePattern.two_one(n, 0, 2, bid)
    add(0, 2, [OrbitModule(gen_pattern, (VirtualRep.trivial(2),), TRIV if g2 else None)])

    # second strand: 2a + b = p + 3 with a >= 1, b >= 2, plus the a = 0 case
    for a in range(1, n):
        for b in range(2, n - a + 1):
            p = 2 * a + b - 3
            if g2:
                add(p, p + 3, _strand2_modules_refined(n, a, b))
            else:
                add(p, p + 3, [_strand2_module_coarse(n, a, b)])
    for b in range(3, n + 1):
        p = b - 3
        if g2:
            add(p, p + 3, _strand2_modules_refined(n, 0, b))
        else:
            mod = _strand2_module_coarse(n, 0, b)
            if mod is not None:
                add(p, p + 3, [mod])

    # third strand: 2a + b = p + 4 with a >= 3
    for a in range(3, n + 1):
        for b in range(0, n - a + 1):
            p = 2 * a + b - 4
            if g2:
                add(p, p + 4, _strand3_modules_refined(n, a, b))
            else:
                add(p, p + 4, [_strand3_module_coarse(n, a, b)])

    return _as_strands(entries)


def ext_D_descriptors(n: int, g2: bool = True):
    """Descriptors for Ext^p(D, C), D the ideal of off-diagonal products:
    case (i) at patterns (1^b) with q = p + 2, case (ii) at (2^a,1^b) with
    a >= 2 and q = p + 3 (first block [a-1,1])."""
    if n < 2:
        raise ValueError("n >= 2 required")
    entries = {}

    def add(p, q, modules):
        if modules:
            entries.setdefault((p, q), []).extend(modules)

    for b in range(2, n + 1):
        p = b - 2
        if g2:
            mods = []
            for c in range(1, b // 2 + 1):
                bidd = (b - c, c)
                pattern = MultidegreePattern.two_one(n, 0, b, bidd)
                if 2 * c != b:
                    mods.append(OrbitModule(pattern, (induce([_col(b - c), _col(c)]),), IND))
                else:
                    mods.extend(
                        _group_by_label(
                            pattern,
                            (),
                            [
                                (VirtualRep.irreducible(_two_col(c, j)), c + 1 - j)
                                for j in range(c + 1)
                            ],
                        )
                    )
            add(p, p + 2, mods)
        else:
            mid = VirtualRep.zero(b)
            for c in range(1, b):
                mid = mid + induce([_col(b - c), _col(c)])
            add(p, p + 2, [OrbitModule(MultidegreePattern.two_one(n, 0, b), (mid,))])

    for a in range(2, n + 1):
        for b in range(0, n - a + 1):
            p = 2 * a + b - 3
            first = VirtualRep.irreducible((a - 1, 1))
            if g2:
                mods = []
                for c in range(b // 2 + 1):
                    bidd = (a + b - c, a + c)
                    pattern = MultidegreePattern.two_one(n, a, b, bidd)
                    if 2 * c != b:
                        mods.append(
                            OrbitModule(
                                pattern, (first, induce([_col(b - c), _col(c)])), IND
                            )
                        )
                    else:
                        mods.extend(
                            _group_by_label(
                                pattern,
                                (first,),
                                [
                                    (VirtualRep.irreducible(_two_col(c, j)), a - 1 + c - j)
                                    for j in range(c + 1)
                                ],
                            )
                        )
                add(p, p + 3, mods)
            else:
                mid = VirtualRep.zero(b)
                for c in range(b + 1):
                    mid = mid + induce([_col(b - c), _col(c)])
                blocks = (first, mid) if b else (first,)
                add(p, p + 3, [OrbitModule(MultidegreePattern.two_one(n, a, b), blocks)])

    return _as_strands(entries)


def _module_sort_key(m: OrbitModule):
    bid = m.pattern.bidegree if m.pattern.bidegree is not None else ()
    return (m.pattern.blocks, bid, m.g2 or "")


def _as_strands(entries):
    out = []
    for (p, q) in sorted(entries):
        modules = tuple(sorted(entries[(p, q)], key=_module_sort_key))
        out.append(StrandDescriptor(p, q, q - p - 1, modules))
    return tuple(out)


def descriptors_for(ideal: str, n: int, g2: bool = False):
    if ideal == "P":
        return ext_P_descriptors(n, g2=g2)
    if ideal == "D":
        return ext_D_descriptors(n, g2=g2)
    raise ValueError(f"unknown ideal {ideal!r}; expected 'P' or 'D'")
