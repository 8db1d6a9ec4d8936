"""Genus-0 r-spin numbers, potential coefficients, and the ELSV/Hurwitz check.

W-numbers are computed through the Chern engine: for a positive multiindex k
with sum (n-2)(r+1), the degree of the top Chern class of -R*pi_*S for the
root problem (r, s=1, m=k) equals the degree of the spin virtual class in the
concave regime (the universal root has no sections on any fibre because its
relative degree is -(n-2) < 0 and every component contributes negatively).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from .grr import RootProblem, chern_classes_from_ch, chern_series
from .taut import integrate_weighted, psi_kappa_integral

__all__ = [
    "descent_factor",
    "reduce_index",
    "w_number_genus0",
    "potential_coefficients",
    "elsv_genus0",
    "hurwitz_oracle",
]


def descent_factor(m: Sequence[int], a: Sequence[int], r: int) -> Fraction:
    """prod_i r^{a_i} / (m_i (m_i + r) ... (m_i + (a_i - 1) r)).

    Relates the psi-decorated W-number W(m, a) to the undecorated W(0, k) with
    k = r a + m.
    """
    if len(m) != len(a):
        raise ValueError("index length mismatch")
    out = Fraction(1)
    for mi, ai in zip(m, a):
        if not 0 < mi <= r:
            raise ValueError("need 0 < m_i <= r")
        if ai < 0:
            raise ValueError("need a_i >= 0")
        den = 1
        for j in range(ai):
            den *= mi + j * r
        out *= Fraction(r**ai, den)
    return out


def reduce_index(k: int, r: int) -> Tuple[int, int]:
    """Canonical split k = r a + m with m in {1..r}."""
    if k <= 0:
        raise ValueError("k must be positive")
    m = (k - 1) % r + 1
    return m, (k - m) // r


def w_number_genus0(r: int, k: Sequence[int]) -> Fraction:
    """W_{0,n}(0, k): degree of the top Chern class of -R*pi_*S for the
    r-spin problem with multiindex k."""
    k = tuple(k)
    n = len(k)
    if any(ki <= 0 for ki in k):
        raise ValueError("k entries must be positive")
    if n < 4:
        raise ValueError("need n >= 4 at genus 0")
    if sum(k) != (n - 2) * (r + 1):
        raise ValueError("dimension condition sum(k) = (n-2)(r+1) violated")
    problem = RootProblem(r, 1, k)
    top = chern_classes_from_ch(chern_series(problem, n - 3), n - 3)
    return integrate_weighted(top, r)


def _partitions(total: int, parts: int, minimum: int = 1):
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - (parts - 1) * minimum + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def potential_coefficients(r: int, n_max: int, strict_paper: bool = False) -> List[dict]:
    """Genus-0 monomial data of the spin potential for 4 <= n <= n_max.

    Each row carries the multiindex k (up to permutation), the canonical
    split k = r a + m, W(0, k) from the Chern engine, W(m, a) via the descent
    factor, and the monomial coefficient attached to prod t_{k_i}:
    W(0,k)/n! * prod k_i r^{a_i}.  With strict_paper the exponent is read
    literally as floor(k_i / r), which differs only at multiples of r.
    """
    if r < 2 or n_max < 4:
        raise ValueError("need r >= 2 and n_max >= 4")
    rows = []
    for n in range(4, n_max + 1):
        total = (n - 2) * (r + 1)
        for k in _partitions(total, n):
            m, a = zip(*(reduce_index(ki, r) for ki in k))
            w0 = w_number_genus0(r, k)
            dfac = descent_factor(m, a, r)
            weight = Fraction(1)
            for ki in k:
                exp = ki // r if strict_paper else (ki - 1) // r
                weight *= ki * r**exp
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "m": m,
                    "a": a,
                    "w0": w0,
                    "w_ma": dfac * w0,
                    "coefficient": w0 * weight / factorial(n),
                    "concavity_proxy": True,
                }
            )
    return rows


def elsv_genus0(b: Sequence[int]) -> Fraction:
    """Genus-0 single-branch-point Hurwitz number from the Hodge-integral
    formula (trivial Hodge part): (d+n-2)! prod b_i^{b_i}/b_i! times the
    integral of prod 1/(1 - b_i psi_i), expanded over exponent tuples."""
    b = tuple(b)
    n = len(b)
    if n < 3:
        raise ValueError("need n >= 3 markings")
    if any(bi <= 0 for bi in b):
        raise ValueError("profile entries must be positive")
    d = sum(b)
    integral = Fraction(0)
    for exps in _compositions(n - 3, n):
        weight = Fraction(1)
        for bi, ai in zip(b, exps):
            weight *= bi**ai
        integral += weight * psi_kappa_integral(tuple(sorted(exps)), ())
    pref = Fraction(factorial(d + n - 2))
    for bi in b:
        pref *= Fraction(bi**bi, factorial(bi))
    return pref * integral


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hurwitz_oracle(b: Sequence[int]) -> Fraction:
    """Hurwitz number by exhaustive enumeration over the symmetric group.

    Counts tuples of d+n-2 transpositions whose product is a fixed permutation
    of cycle type b and which generate, together with it, a transitive group.
    The raw count is divided by prod b_i: covers with labelled points over the
    fully ramified value correspond to permutations with labelled cycles, of
    which there are d!/prod b_i in the class, while fixing one permutation and
    dividing the tuple count by d! leaves the extra factor prod b_i.
    """
    b = tuple(b)
    if any(bi <= 0 for bi in b):
        raise ValueError("profile entries must be positive")
    d = sum(b)
    n = len(b)
    if d > 7:
        raise ValueError("search bound exceeded (d <= 7)")
    t = d + n - 2
    # fixed target permutation with cycles laid out consecutively
    cycles = []
    start = 0
    for bi in b:
        cycles.append(tuple(range(start, start + bi)))
        start += bi
    # inclusion-exclusion over set partitions of the cycle set
    total = 0
    for partition in _set_partitions(list(range(n))):
        blocks = []
        ok = True
        for block in partition:
            elems = tuple(sorted(x for ci in block for x in cycles[ci]))
            target = _restricted_perm(cycles, block, elems)
            blocks.append(_transposition_walks(elems, target, t))
        k = len(partition)
        sign = (-1) ** (k - 1) * factorial(k - 1)
        total += sign * _distribute_steps(blocks, t)
    denom = 1
    for bi in b:
        denom *= bi
    return Fraction(total, denom)


def _restricted_perm(cycles, block, elems) -> Tuple[int, ...]:
    pos = {x: i for i, x in enumerate(elems)}
    img = list(range(len(elems)))
    for ci in block:
        cyc = cycles[ci]
        for j, x in enumerate(cyc):
            img[pos[x]] = pos[cyc[(j + 1) % len(cyc)]]
    return tuple(img)


def _transposition_walks(elems, target: Tuple[int, ...], t_max: int) -> List[int]:
    """walks[k] = number of k-tuples of transpositions of the block with
    product equal to target (composed left to right)."""
    size = len(elems)
    transpositions = []
    for i in range(size):
        for j in range(i + 1, size):
            perm = list(range(size))
            perm[i], perm[j] = j, i
            transpositions.append(tuple(perm))
    identity = tuple(range(size))
    state: Dict[Tuple[int, ...], int] = {identity: 1}
    walks = [state.get(target, 0)]
    for _ in range(t_max):
        nxt: Dict[Tuple[int, ...], int] = {}
        for perm, cnt in state.items():
            for tau in transpositions:
                composed = tuple(tau[p] for p in perm)
                nxt[composed] = nxt.get(composed, 0) + cnt
        state = nxt
        walks.append(state.get(target, 0))
    return walks


def _distribute_steps(blocks: List[List[int]], t: int) -> int:
    """Interleave per-block transposition sequences: exponential generating
    function product, coefficient of x^t times t!."""
    egf = [Fraction(1)] + [Fraction(0)] * t
    for walks in blocks:
        nxt = [Fraction(0)] * (t + 1)
        for i in range(t + 1):
            if egf[i] == 0:
                continue
            for j in range(t + 1 - i):
                if walks[j]:
                    nxt[i + j] += egf[i] * Fraction(walks[j], factorial(j))
        egf = nxt
    val = egf[t] * factorial(t)
    assert val.denominator == 1
    return val.numerator


def _set_partitions(items: List[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part
