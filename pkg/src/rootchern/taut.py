"""Tautological-class calculus on moduli of n-pointed genus-0 stable curves.

A class is a rational combination of decorated stable trees.  A tree on the
marking set {1..n} is stored as a laminar family of "splits": for every edge,
the set of markings on the side NOT containing marking 1.  This encoding is
canonical, so isomorphic decorated trees compare equal structurally.

Decorations:
  * leg_psi   -- psi exponent at each marking,
  * edge psi  -- a pair of exponents per edge (split side, complement side),
  * kappa     -- a multiset of kappa indices per vertex (log convention,
                 kappa_0 = n - 2 on the n-pointed space).

Vertices are addressed by the split whose edge points toward them (the side
away from marking 1), with () standing for the vertex containing marking 1.

Everything is immutable and all operations are pure functions, so independent
evaluations can safely run in parallel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, Iterable, List, Sequence, Tuple

__all__ = [
    "TautClass",
    "psi_class",
    "kappa_class",
    "boundary_pushforward",
    "mul",
    "integrate",
    "integrate_weighted",
    "psi_kappa_integral",
    "psi_integral_string_oracle",
    "all_splits",
]

Split = Tuple[int, ...]          # sorted markings on the far side from marking 1
Edge = Tuple[Split, int, int]    # (split, psi on split side, psi on other side)
TermKey = Tuple[Tuple[Edge, ...], Tuple[int, ...], Tuple[Tuple[Split, Tuple[int, ...]], ...]]


def _canonical_split(n: int, markings: Iterable[int]) -> Split:
    s = frozenset(markings)
    if not s <= set(range(1, n + 1)):
        raise ValueError(f"markings {sorted(s)} not within 1..{n}")
    if 1 in s:
        s = frozenset(range(1, n + 1)) - s
    return tuple(sorted(s))


def _compatible(a: Split, b: Split) -> bool:
    """Two splits (both excluding marking 1) are tree-compatible iff nested or disjoint."""
    sa, sb = set(a), set(b)
    return sa <= sb or sb <= sa or not (sa & sb)


def _vertices(n: int, splits: Sequence[Split]) -> Dict[Split, dict]:
    """Tree structure of a laminar family.

    Returns vertex_id -> {"legs": sorted tuple, "half_edges": list of
    (edge_split, on_split_side)}.  vertex_id is () for the root (the vertex
    whose component contains marking 1) or the split of the edge above it.
    """
    order = sorted(splits, key=len)
    parent: Dict[Split, Split] = {}
    for i, a in enumerate(order):
        best = None
        for b in order[i + 1:]:
            if set(a) < set(b) and (best is None or len(b) < len(best)):
                best = b
        parent[a] = best if best is not None else ()
    verts: Dict[Split, dict] = {(): {"legs": None, "half_edges": []}}
    for a in splits:
        verts[a] = {"legs": None, "half_edges": [(a, True)]}
    for a in splits:
        verts[parent[a]]["half_edges"].append((a, False))
    for vid, data in verts.items():
        if vid == ():
            pool = set(range(1, n + 1))
        else:
            pool = set(vid)
        for a in splits:
            if parent[a] == vid:
                pool -= set(a)
        data["legs"] = tuple(sorted(pool))
    return verts


class TautClass:
    """Formal rational combination of decorated genus-0 stable trees."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[TermKey, Fraction] | None = None):
        self.n = n
        self.terms: Dict[TermKey, Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @staticmethod
    def zero(n: int) -> "TautClass":
        return TautClass(n)

    @staticmethod
    def unit(n: int) -> "TautClass":
        return TautClass(n, {((), (0,) * n, ()): Fraction(1)})

    def __add__(self, other: "TautClass") -> "TautClass":
        if self.n != other.n:
            raise ValueError("mismatched number of markings")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return TautClass(self.n, out)

    def __sub__(self, other: "TautClass") -> "TautClass":
        return self + other.scale(-1)

    def scale(self, c) -> "TautClass":
        c = Fraction(c)
        return TautClass(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "TautClass") -> "TautClass":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, TautClass) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"TautClass(n={self.n}, 0)"
        bits = []
        for (edges, legs, kappa), c in sorted(self.terms.items()):
            desc = []
            for i, e in enumerate(legs):
                if e:
                    desc.append(f"psi{i + 1}^{e}")
            for vid, ks in kappa:
                desc.append(f"kappa{list(ks)}@{vid or 'root'}")
            for sp, a, b in edges:
                desc.append(f"D{list(sp)}(psi^{a},psihat^{b})")
            bits.append(f"{c}*{'·'.join(desc) or '1'}")
        return f"TautClass(n={self.n}, " + " + ".join(bits) + ")"

    def term_degree_ok(self, d: int) -> bool:
        return all(_term_degree(k) == d for k in self.terms)

    def to_jsonable(self) -> list:
        """JSON encoding: list of term objects with a nested tree partition."""
        out = []
        for (edges, legs, kappa), c in sorted(self.terms.items()):
            splits = [e[0] for e in edges]
            out.append(
                {
                    "partition": _nested_partition(self.n, splits),
                    "leg_psi": {str(i + 1): e for i, e in enumerate(legs) if e},
                    "edge_psi": [
                        {"side": list(sp), "psi_side": a, "psi_other": b}
                        for sp, a, b in edges
                    ],
                    "kappa": {
                        ("root" if vid == () else ",".join(map(str, vid))): list(ks)
                        for vid, ks in kappa
                    },
                    "coeff": format_fraction(c),
                }
            )
        return out


def format_fraction(x: Fraction) -> str:
    """Serialize as "p/q" in lowest terms with q > 0, integers as "p"."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _nested_partition(n: int, splits: Sequence[Split]) -> dict:
    verts = _vertices(n, splits)

    def build(vid: Split) -> dict:
        children = [
            build(sp) for sp, on_side in verts[vid]["half_edges"] if not on_side
        ]
        return {"markings": list(verts[vid]["legs"]), "children": children}

    return build(())


def _term_degree(key: TermKey) -> int:
    edges, legs, kappa = key
    return (
        len(edges)
        + sum(legs)
        + sum(a + b for _, a, b in edges)
        + sum(sum(ks) for _, ks in kappa)
    )


def _check_stable(n: int, splits: Sequence[Split]) -> bool:
    for data in _vertices(n, splits).values():
        if len(data["legs"]) + len(data["half_edges"]) < 3:
            return False
    return True


def psi_class(n: int, i: int) -> TautClass:
    """psi_i on the n-pointed space, as a single trivial-tree term."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 1 <= i <= n:
        raise ValueError(f"marking {i} out of range 1..{n}")
    legs = [0] * n
    legs[i - 1] = 1
    return TautClass(n, {((), tuple(legs), ()): Fraction(1)})


def kappa_class(n: int, d: int) -> TautClass:
    """kappa_d (log convention) on the n-pointed space."""
    if n < 3:
        raise ValueError("need n >= 3")
    if d < 0:
        raise ValueError("kappa index must be nonnegative")
    return TautClass(n, {((), (0,) * n, (((), (d,)),)): Fraction(1)})


def all_splits(n: int) -> List[Split]:
    """All canonical boundary splits with both sides of size >= 2."""
    out = []
    rest = list(range(2, n + 1))
    for size in range(2, n - 1):
        for comb_ in combinations(rest, size):
            out.append(tuple(comb_))
    return out


def boundary_pushforward(n: int, I, gamma) -> TautClass:
    """Pushforward of gamma from the boundary divisor with marking split {I, I^c}.

    gamma is a constant or an iterable of (coeff, a, b) triples standing for
    coeff * psi^a psihat^b, where psi sits on the half-edge on the I side and
    psihat on the complementary half-edge.
    """
    I = frozenset(I)
    if not 2 <= len(I) <= n - 2:
        raise ValueError(f"unstable split {sorted(I)} of {n} markings")
    if isinstance(gamma, (int, Fraction)):
        gamma = [(Fraction(gamma), 0, 0)]
    split = _canonical_split(n, I)
    i_on_split_side = 1 not in I
    legs = (0,) * n
    terms: Dict[TermKey, Fraction] = {}
    for coeff, a, b in gamma:
        coeff = Fraction(coeff)
        if not coeff:
            continue
        pin, pout = (a, b) if i_on_split_side else (b, a)
        key = (((split, pin, pout),), legs, ())
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return TautClass(n, terms)


def _distribute_kappa(n: int, base_key: TermKey, kappas: Sequence[int]) -> Dict[TermKey, Fraction]:
    """Multiply a term by prod kappa_{k}: each kappa restricts to the sum of
    per-vertex kappas on the term's tree."""
    edges, legs, kap = base_key
    vids = list(_vertices(n, [e[0] for e in edges]).keys())
    acc = {base_key: Fraction(1)}
    for k in kappas:
        nxt: Dict[TermKey, Fraction] = {}
        for key, c in acc.items():
            e0, l0, k0 = key
            kd = {vid: list(ks) for vid, ks in k0}
            for vid in vids:
                kd2 = {v: list(ks) for v, ks in kd.items()}
                kd2.setdefault(vid, []).append(k)
                newk = tuple(sorted((v, tuple(sorted(ks))) for v, ks in kd2.items() if ks))
                nk = (e0, l0, newk)
                nxt[nk] = nxt.get(nk, Fraction(0)) + c
        acc = nxt
    return acc


def _refine_with_split(n: int, key: TermKey, split: Split, pin: int, pout: int) -> Dict[TermKey, Fraction]:
    """Multiply a tree term by a single-edge term whose split is compatible and new."""
    edges, legs, kap = key
    splits = [e[0] for e in edges]
    # parent vertex of the new edge: smallest existing split containing it, else root
    host: Split = ()
    for s in splits:
        if set(split) < set(s) and (host == () or len(s) < len(host)):
            host = s
    new_edges = tuple(sorted(edges + ((split, pin, pout),)))
    if not _check_stable(n, [e[0] for e in new_edges]):
        return {}
    # kappa decorations at the refined vertex distribute over the two new vertices
    host_kappas: Tuple[int, ...] = ()
    other = []
    for vid, ks in kap:
        if vid == host:
            host_kappas = ks
        else:
            other.append((vid, ks))
    out: Dict[TermKey, Fraction] = {}
    m = len(host_kappas)
    for mask in range(1 << m):
        at_host = tuple(sorted(host_kappas[j] for j in range(m) if not mask >> j & 1))
        at_new = tuple(sorted(host_kappas[j] for j in range(m) if mask >> j & 1))
        kd = list(other)
        if at_host:
            kd.append((host, at_host))
        if at_new:
            kd.append((split, at_new))
        nk = (new_edges, legs, tuple(sorted(kd)))
        out[nk] = out.get(nk, Fraction(0)) + 1
    return out


def _mul_terms(
    n: int, ka: TermKey, kb: TermKey, node_psi_scale: Fraction
) -> Dict[TermKey, Fraction]:
    eb, lb, kapb = kb
    if len(eb) > 1:
        raise ValueError("right factor must be a trivial-tree or single-edge term")
    ea, la, kapa = ka
    if eb:
        if any(lb) or kapb:
            raise ValueError("single-edge right factors may only carry edge decorations")
        split, pin, pout = eb[0]
        splits_a = [e[0] for e in ea]
        if split in splits_a:
            # excess intersection: add decorations, multiply by the first Chern
            # class of the normal bundle, -node_psi_scale*(psi_h + psi_h')
            out: Dict[TermKey, Fraction] = {}
            for bump_in in (True, False):
                new_edges = []
                for s, a, b in ea:
                    if s == split:
                        a += pin + (1 if bump_in else 0)
                        b += pout + (0 if bump_in else 1)
                    new_edges.append((s, a, b))
                nk = (tuple(sorted(new_edges)), la, kapa)
                out[nk] = out.get(nk, Fraction(0)) - node_psi_scale
            return out
        if all(_compatible(split, s) for s in splits_a):
            return _refine_with_split(n, ka, split, pin, pout)
        return {}
    # trivial right factor: legs add, kappas distribute over vertices
    legs = tuple(x + y for x, y in zip(la, lb))
    base = (ea, legs, kapa)
    kappas = [k for _, ks in kapb for k in ks]
    if not kappas:
        return {base: Fraction(1)}
    return _distribute_kappa(n, base, kappas)


def mul(a: TautClass, b: TautClass, node_psi_scale: Fraction = Fraction(1)) -> TautClass:
    """Product of classes; b must be a sum of trivial-tree and single-edge terms.

    node_psi_scale rescales the node psi-classes appearing in the excess
    self-intersection rule.  On the plain moduli of pointed genus-0 curves it
    is 1; on the space of r-th roots every node is twisted, the normal bundle
    of a boundary divisor is the tensor product of the two twisted tangent
    lines, and its first Chern class is -(psi_h + psi_h')/r, so products of
    classes there must be taken with node_psi_scale = 1/r.
    """
    if a.n != b.n:
        raise ValueError("mismatched number of markings")
    out: Dict[TermKey, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for nk, w in _mul_terms(a.n, ka, kb, node_psi_scale).items():
                c = out.get(nk, Fraction(0)) + ca * cb * w
                if c:
                    out[nk] = c
                else:
                    out.pop(nk, None)
    return TautClass(a.n, out)


@lru_cache(maxsize=None)
def psi_kappa_integral(exps: Tuple[int, ...], kappas: Tuple[int, ...]) -> Fraction:
    """Integral of prod psi_i^{a_i} prod kappa_{b_j} over the moduli of
    len(exps)-pointed genus-0 stable curves.

    kappas are eliminated one at a time through an auxiliary marking:
    kappa_b = pi_*(psi_aux^{b+1}), with the comparison kappa_c -> kappa_c -
    psi_aux^c for the remaining kappa factors; the psi_i corrections drop out
    against the positive psi_aux power.
    """
    m = len(exps)
    if any(e < 0 for e in exps) or any(k < 0 for k in kappas):
        return Fraction(0)
    if not kappas:
        if m < 3:
            return Fraction(0)
        if sum(exps) != m - 3:
            return Fraction(0)
        num = factorial(m - 3)
        den = 1
        for e in exps:
            den *= factorial(e)
        return Fraction(num, den)
    rest, last = kappas[:-1], kappas[-1]
    total = Fraction(0)
    k = len(rest)
    for mask in range(1 << k):
        kept = tuple(rest[j] for j in range(k) if not mask >> j & 1)
        extra = sum(rest[j] for j in range(k) if mask >> j & 1)
        sign = -1 if bin(mask).count("1") % 2 else 1
        total += sign * psi_kappa_integral(
            tuple(sorted(exps + (last + 1 + extra,))), tuple(sorted(kept))
        )
    return total


def _integrate_term(n: int, key: TermKey) -> Fraction:
    edges, legs, kap = key
    if _term_degree(key) != n - 3:
        return Fraction(0)
    verts = _vertices(n, [e[0] for e in edges])
    edge_psi = {e[0]: (e[1], e[2]) for e in edges}
    kappa_at = dict(kap)
    total = Fraction(1)
    for vid, data in verts.items():
        exps = [legs[i - 1] for i in data["legs"]]
        for sp, on_side in data["half_edges"]:
            exps.append(edge_psi[sp][0] if on_side else edge_psi[sp][1])
        val = psi_kappa_integral(tuple(sorted(exps)), tuple(sorted(kappa_at.get(vid, ()))))
        if not val:
            return Fraction(0)
        total *= val
    return total


def integrate(c: TautClass) -> Fraction:
    """Exact integral over the coarse n-pointed genus-0 moduli space."""
    total = Fraction(0)
    for key, coeff in c.terms.items():
        total += coeff * _integrate_term(c.n, key)
    return total


def integrate_weighted(c: TautClass, r: int) -> Fraction:
    """Stack-weighted integral: each term on a tree with E edges is weighted by
    (1/r)^{1+E} (generic mu_r gerbe plus one mu_r stabilizer per node)."""
    if r < 1:
        raise ValueError("r must be positive")
    total = Fraction(0)
    for key, coeff in c.terms.items():
        val = _integrate_term(c.n, key)
        if val:
            total += coeff * val * Fraction(1, r) ** (1 + len(key[0]))
    return total


def psi_integral_string_oracle(exps: Sequence[int]) -> Fraction:
    """Independent oracle for pure psi integrals via the string equation.

    Recursion: remove a psi-free marking, lowering one exponent at a time;
    never touches the multinomial closed form used by the main path.
    """
    exps = tuple(exps)
    return _string_rec(tuple(sorted(exps)))


@lru_cache(maxsize=None)
def _string_rec(exps: Tuple[int, ...]) -> Fraction:
    n = len(exps)
    if n < 3:
        return Fraction(0)
    if sum(exps) != n - 3:
        return Fraction(0)
    if n == 3:
        return Fraction(1) if not any(exps) else Fraction(0)
    if 0 not in exps:
        return Fraction(0)
    rest = list(exps)
    rest.remove(0)
    total = Fraction(0)
    for i in range(len(rest)):
        if rest[i] > 0:
            reduced = rest[:i] + [rest[i] - 1] + rest[i + 1:]
            total += _string_rec(tuple(sorted(reduced)))
    return total
