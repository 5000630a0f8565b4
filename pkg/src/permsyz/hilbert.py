"""Multigraded Hilbert functions of the modules in the two short exact
sequences

    0 -> D -> m_xy -> C1 -> 0        0 -> P -> D -> C2 -> 0

with S = C[x_1..x_n, y_1..y_n], m_xy = (x)(y), D = (x_i y_j : i != j),
P the 2x2 permanental ideal, and C1, C2 the cyclic-module cokernels.

Each module has a closed-form Hilbert function (piecewise in the support of
the multidegree) and an independent monomial-counting oracle: membership in
the initial ideal of P for P itself, direct divisibility for D and m_xy, and
the explicit cyclic bases for C1 and C2.
"""

from dataclasses import dataclass
from itertools import product

NAMED_MODULES = ("S", "m_xy", "D", "P", "C1", "C2")


def support(a) -> tuple:
    return tuple(i for i, v in enumerate(a) if v)


def hf_closed(mod: str, a) -> int:
    """Closed-form multigraded Hilbert function at multidegree a >= 0."""
    a = tuple(a)
    if any(v < 0 for v in a):
        raise ValueError(f"negative multidegree {a}")
    supp = support(a)
    prod = 1
    for v in a:
        prod *= v + 1
    if mod == "S":
        return prod
    if mod == "m_xy":
        return prod - 2 if len(supp) >= 1 else 0
    if mod == "D":
        return prod - 2 if len(supp) >= 2 else 0
    if mod == "P":
        if len(supp) >= 3:
            return prod - 2
        if len(supp) == 2:
            i, j = supp
            return a[i] * a[j]
        return 0
    if mod == "C1":
        return a[supp[0]] - 1 if len(supp) == 1 else 0
    if mod == "C2":
        if len(supp) == 2:
            i, j = supp
            return a[i] + a[j] - 1
        return 0
    raise ValueError(f"unknown module {mod!r}; expected one of {NAMED_MODULES}")


class DegreeLimitError(ValueError):
    """Oracle asked to enumerate beyond the configured total degree."""


def monomials_of_multidegree(a):
    """All exponent pairs (alpha, beta) with alpha_i + beta_i = a_i; a
    monomial x^alpha y^beta of Z^n-multidegree a."""
    ranges = [range(v + 1) for v in a]
    for alpha in product(*ranges):
        beta = tuple(v - x for v, x in zip(a, alpha))
        yield alpha, beta


def _in_init_P(alpha, beta) -> bool:
    """Membership in the initial ideal of P under the antidiagonal order:
    generators x_i y_j (i > j), x_i x_j y_k and x_i y_j y_k (i < j < k).
    (The generator set is pinned by a direct Groebner computation; it leaves
    exactly the all-x and all-y monomials out in support >= 3.)"""
    n = len(alpha)
    xs = [i for i in range(n) if alpha[i]]
    ys = [i for i in range(n) if beta[i]]
    if not xs or not ys:
        return False
    # x_i y_j with i > j
    if xs[-1] > ys[0]:
        return True
    # x_i x_j y_k with i < j < k
    for k in ys:
        if sum(1 for i in xs if i < k) >= 2:
            return True
    # x_i y_j y_k with i < j < k
    for i in xs:
        if sum(1 for j in ys if j > i) >= 2:
            return True
    return False


def _count_C2(a, supp) -> int:
    """Explicit basis of the C2 summand at support {i, j}: classes of the
    generator times monomials in x_i, y_i, x_j, y_j of multidegree
    (a_i - 1, a_j - 1) whose normal form avoids x_i y_j."""
    i, j = supp
    di, dj = a[i] - 1, a[j] - 1
    count = 0
    for u in range(di + 1):  # exponent of x_i
        for v in range(dj + 1):  # exponent of x_j
            if u >= 1 and dj - v >= 1:
                continue  # contains x_i y_j: not a normal form
            count += 1
    return count


def hf_oracle(mod: str, a, max_total_degree: int = 24) -> int:
    """Count monomials of multidegree a in the module by enumeration."""
    a = tuple(a)
    if sum(a) > max_total_degree:
        raise DegreeLimitError(f"|a| = {sum(a)} exceeds limit {max_total_degree}")
    supp = support(a)
    if mod == "C1":
        # generator of multidegree 2e_i times monomials in x_i, y_i
        if len(supp) != 1 or a[supp[0]] < 2:
            return 0
        d = a[supp[0]]
        return sum(1 for u in range(d - 1) for v in [d - 2 - u] if v >= 0)
    if mod == "C2":
        if len(supp) != 2 or any(a[i] < 1 for i in supp):
            return 0
        return _count_C2(a, supp)
    count = 0
    for alpha, beta in monomials_of_multidegree(a):
        if mod == "S":
            count += 1
        elif mod == "m_xy":
            count += any(alpha) and any(beta)
        elif mod == "D":
            count += any(
                alpha[i] and beta[j] for i in range(len(a)) for j in range(len(a)) if i != j
            )
        elif mod == "P":
            count += _in_init_P(alpha, beta)
        else:
            raise ValueError(f"unknown module {mod!r}")
    return count


def multidegrees_upto(n: int, max_total: int):
    """All a in Z^n_(>=0) with |a| <= max_total, lexicographically."""

    def gen(rest, budget):
        if rest == 0:
            yield ()
            return
        for v in range(budget + 1):
            for tail in gen(rest - 1, budget - v):
                yield (v,) + tail

    return gen(n, max_total)


@dataclass
class AdditivityReport:
    n: int
    max_total_degree: int
    checked: int
    violations: list  # (multidegree, description)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_additivity(n: int, max_total_degree: int, with_oracle: bool = True) -> AdditivityReport:
    """Exactness of both sequences as Hilbert-function additivity, over every
    multidegree with |a| <= max_total_degree, for the closed forms and (when
    with_oracle) the enumeration oracle, also checking closed == oracle."""
    violations = []
    checked = 0
    for a in multidegrees_upto(n, max_total_degree):
        checked += 1
        vals = {mod: hf_closed(mod, a) for mod in NAMED_MODULES}
        if vals["D"] + vals["C1"] != vals["m_xy"]:
            violations.append((a, "closed: HF(D) + HF(C1) != HF(m_xy)"))
        if vals["P"] + vals["C2"] != vals["D"]:
            violations.append((a, "closed: HF(P) + HF(C2) != HF(D)"))
        if with_oracle:
            ovals = {mod: hf_oracle(mod, a, max_total_degree) for mod in NAMED_MODULES}
            for mod in NAMED_MODULES:
                if ovals[mod] != vals[mod]:
                    violations.append((a, f"{mod}: oracle {ovals[mod]} != closed {vals[mod]}"))
            if ovals["D"] + ovals["C1"] != ovals["m_xy"]:
                violations.append((a, "oracle: HF(D) + HF(C1) != HF(m_xy)"))
            if ovals["P"] + ovals["C2"] != ovals["D"]:
                violations.append((a, "oracle: HF(P) + HF(C2) != HF(D)"))
    return AdditivityReport(n, max_total_degree, checked, violations)


def total_hilbert_function(mod: str, n: int, degree: int) -> int:
    """Z-graded Hilbert function: sum of hf_closed over |a| = degree."""
    total = 0
    for a in multidegrees_upto(n, degree):
        if sum(a) == degree:
            total += hf_closed(mod, a)
    return total
