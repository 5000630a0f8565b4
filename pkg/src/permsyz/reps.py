"""Virtual representations of S_n and S_n x S_2.

A VirtualRep is a formal integer combination of Specht modules [lambda]
(keys are partition tuples), or of pairs ([lambda], S2 label) for the
product group.  Negative multiplicities are allowed internally; operations
promising an actual module assert effectivity.
"""

from fractions import Fraction

from .partitions import (
    check_partition,
    class_size,
    hook_dim,
    lr_coeffs,
    mn_character,
    partitions_of,
    sort_key,
)

# S_2 labels.  TRIV and SIGN are the two irreducibles; IND denotes the
# 2-dimensional induced representation TRIV + SIGN and is only used as an
# orbit-module tag, never inside VirtualRep terms.
TRIV = "triv"
SIGN = "sign"
IND = "ind"

S2_LABELS = (TRIV, SIGN, IND)


class NotACharacterError(ValueError):
    """A class function failed to decompose with integer multiplicities."""


class AmbientMismatchError(ValueError):
    """Arithmetic between representations of different symmetric groups."""


class VirtualRep:
    """Formal Z-combination of irreducibles of S_n (or S_n x S_2)."""

    __slots__ = ("n", "s2", "terms")

    def __init__(self, n, terms=None, s2=False):
        self.n = n
        self.s2 = bool(s2)
        clean = {}
        for key, mult in (terms or {}).items():
            if mult == 0:
                continue
            if self.s2:
                lam, label = key
                if label not in (TRIV, SIGN):
                    raise ValueError(f"bad S2 label in term: {label!r}")
                key = (check_partition(lam) if lam else (), label)
                lam = key[0]
            else:
                key = check_partition(key) if key else ()
                lam = key
            if sum(lam) != n:
                raise AmbientMismatchError(f"term {lam} is not a partition of {n}")
            clean[key] = clean.get(key, 0) + int(mult)
        self.terms = {k: v for k, v in clean.items() if v != 0}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, n, s2=False):
        return cls(n, {}, s2=s2)

    @classmethod
    def irreducible(cls, lam, label=None):
        lam = tuple(lam)
        if label is None:
            return cls(sum(lam), {lam: 1})
        return cls(sum(lam), {(lam, label): 1}, s2=True)

    @classmethod
    def trivial(cls, n):
        return cls(n, {(n,) if n else (): 1})

    @classmethod
    def sign(cls, n):
        return cls(n, {(1,) * n: 1})

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other):
        if self.n != other.n or self.s2 != other.s2:
            raise AmbientMismatchError(
                f"ambient mismatch: S_{self.n}(s2={self.s2}) vs S_{other.n}(s2={other.s2})"
            )

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return VirtualRep(self.n, terms, s2=self.s2)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return VirtualRep(
            self.n, {k: scalar * v for k, v in self.terms.items()}, s2=self.s2
        )

    __mul__ = __rmul__

    def __eq__(self, other):
        return (
            isinstance(other, VirtualRep)
            and self.n == other.n
            and self.s2 == other.s2
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.s2, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_effective(self) -> bool:
        return all(v >= 0 for v in self.terms.values())

    def sorted_terms(self):
        if self.s2:
            return sorted(self.terms.items(), key=lambda kv: (sort_key(kv[0][0]), kv[0][1]))
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"

        def one(key, mult):
            if self.s2:
                lam, label = key
                body = f"{list(lam)}x{label}"
            else:
                body = f"{list(key)}"
            return body if mult == 1 else f"{mult}*{body}"

        return " + ".join(one(k, v) for k, v in self.sorted_terms())

    # -- structure -----------------------------------------------------------

    def dim(self) -> int:
        total = 0
        for key, mult in self.terms.items():
            lam = key[0] if self.s2 else key
            total += mult * hook_dim(lam)
        return total

    def restrict_to_sn(self):
        """Forget the S_2 part (each label contributes once)."""
        if not self.s2:
            return self
        terms = {}
        for (lam, _label), mult in self.terms.items():
            terms[lam] = terms.get(lam, 0) + mult
        return VirtualRep(self.n, terms)

    def times_s2(self, label):
        """Tensor a plain S_n rep into S_n x S_2 with the given label; IND
        expands to TRIV + SIGN."""
        if self.s2:
            raise ValueError("already an S_n x S_2 representation")
        labels = (TRIV, SIGN) if label == IND else (label,)
        terms = {}
        for lam, mult in self.terms.items():
            for lab in labels:
                terms[(lam, lab)] = terms.get((lam, lab), 0) + mult
        return VirtualRep(self.n, terms, s2=True)


def lr_product(lam, mu) -> VirtualRep:
    """Littlewood-Richardson product of two partitions as a VirtualRep."""
    lam, mu = tuple(lam), tuple(mu)
    return VirtualRep(sum(lam) + sum(mu), dict(lr_coeffs(lam, mu)))


def induce(blocks) -> VirtualRep:
    """Induced representation of a product of VirtualReps (or partitions)
    from the Young subgroup of the block sizes, by iterated LR products."""
    out = VirtualRep(0, {(): 1})
    for b in blocks:
        if not isinstance(b, VirtualRep):
            b = VirtualRep.irreducible(b)
        if b.s2:
            raise ValueError("induce works on plain S_n blocks")
        terms = {}
        for lam, m1 in out.terms.items():
            for mu, m2 in b.terms.items():
                for nu, c in lr_coeffs(lam, mu).items():
                    terms[nu] = terms.get(nu, 0) + m1 * m2 * c
        out = VirtualRep(out.n + b.n, terms)
    return out


def vrep_dim(r: VirtualRep) -> int:
    return r.dim()


# -- characters ---------------------------------------------------------------


def s2_classes():
    """Conjugacy classes of S_2 as swap flags: False = identity, True = swap."""
    return (False, True)


def character_vector(r: VirtualRep) -> dict:
    """Character of r: {cycle_type: value}, or {(cycle_type, swapped): value}
    for S_n x S_2 representations."""
    out = {}
    if r.s2:
        for mu in partitions_of(r.n):
            for swapped in s2_classes():
                val = 0
                for (lam, label), mult in r.terms.items():
                    eps = -1 if (label == SIGN and swapped) else 1
                    val += mult * eps * mn_character(lam, mu)
                out[(mu, swapped)] = val
    else:
        for mu in partitions_of(r.n):
            out[mu] = sum(
                mult * mn_character(lam, mu) for lam, mult in r.terms.items()
            )
    return out


def decompose_character(n, chi, s2=False) -> VirtualRep:
    """Inverse of character_vector via orthogonality of irreducible characters.

    chi maps every cycle type of S_n (or every (cycle type, swapped) pair) to
    an integer.  Raises NotACharacterError if any inner product is not an
    integer, which signals the input is not a virtual character.
    """
    order = 1
    for k in range(2, n + 1):
        order *= k
    terms = {}
    if s2:
        for lam in partitions_of(n):
            for label in (TRIV, SIGN):
                acc = Fraction(0)
                for mu in partitions_of(n):
                    for swapped in s2_classes():
                        eps = -1 if (label == SIGN and swapped) else 1
                        acc += (
                            class_size(mu)
                            * eps
                            * mn_character(lam, mu)
                            * chi[(mu, swapped)]
                        )
                acc = Fraction(acc, 2 * order)
                if acc.denominator != 1:
                    raise NotACharacterError(
                        f"multiplicity of ({lam}, {label}) is {acc}, not an integer"
                    )
                if acc:
                    terms[(lam, label)] = int(acc)
        return VirtualRep(n, terms, s2=True)
    for lam in partitions_of(n):
        acc = Fraction(0)
        for mu in partitions_of(n):
            acc += class_size(mu) * mn_character(lam, mu) * chi[mu]
        acc = Fraction(acc, order)
        if acc.denominator != 1:
            raise NotACharacterError(f"multiplicity of {lam} is {acc}, not an integer")
        if acc:
            terms[lam] = int(acc)
    return VirtualRep(n, terms)
