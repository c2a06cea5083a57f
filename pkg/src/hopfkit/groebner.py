"""Small commutative Groebner-basis engine over Q.

Used for designated commutative generator sectors whose relations are not
pair-reordering rules (e.g. the orthogonality ideal of a rotation-matrix
coordinate ring).  Monomials are exponent tuples over a fixed variable list;
the order is graded reverse lexicographic.  Buchberger completion is bounded
by a pair budget and asserts closure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

Mono = Tuple[int, ...]
Poly = Dict[Mono, Fraction]


def _grevlex_key(m: Mono):
    return (sum(m), tuple(-e for e in reversed(m)))


def _leading(p: Poly) -> Mono:
    return max(p, key=_grevlex_key)


def _mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for m, c in q.items():
        c2 = out.get(m, Fraction(0)) + c
        if c2:
            out[m] = c2
        else:
            out.pop(m, None)
    return out


def poly_scale(p: Poly, c: Fraction) -> Poly:
    return {m: v * c for m, v in p.items()} if c else {}


def poly_mul_mono(p: Poly, m: Mono, c: Fraction) -> Poly:
    return {_mono_mul(k, m): v * c for k, v in p.items()}


def reduce_poly(p: Poly, basis: Sequence[Poly]) -> Poly:
    """Full multivariate division of p by the basis."""
    rem: Poly = {}
    work = dict(p)
    lts = [(_leading(g), g) for g in basis if g]
    while work:
        m = _leading(work)
        c = work[m]
        for lt, g in lts:
            if _mono_divides(lt, m):
                factor = _mono_div(m, lt)
                coeff = c / g[lt]
                work = poly_add(work, poly_mul_mono(g, factor, -coeff))
                break
        else:
            rem[m] = c
            del work[m]
    return rem


def _s_poly(f: Poly, g: Poly) -> Poly:
    lf, lg = _leading(f), _leading(g)
    lcm = _mono_lcm(lf, lg)
    a = poly_mul_mono(f, _mono_div(lcm, lf), Fraction(1) / f[lf])
    b = poly_mul_mono(g, _mono_div(lcm, lg), Fraction(1) / g[lg])
    return poly_add(a, poly_scale(b, Fraction(-1)))


def buchberger(gens: Sequence[Poly], pair_budget: int = 20000) -> List[Poly]:
    """Complete to a Groebner basis; raises if the pair budget is exhausted."""
    basis = [dict(g) for g in gens if g]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    spent = 0
    while pairs:
        spent += 1
        if spent > pair_budget:
            raise RuntimeError("Buchberger pair budget exhausted")
        i, j = pairs.pop()
        li, lj = _leading(basis[i]), _leading(basis[j])
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading terms: S-poly reduces to zero
        rem = reduce_poly(_s_poly(basis[i], basis[j]), basis)
        if rem:
            basis.append(rem)
            pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    # interreduce for a smaller, canonical-ish basis
    out: List[Poly] = []
    for k, g in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        r = reduce_poly(g, [h for h in others if h])
        if r:
            lt = _leading(r)
            out.append(poly_scale(r, Fraction(1) / r[lt]))
    # drop duplicates
    uniq: List[Poly] = []
    seen = set()
    for g in out:
        key = tuple(sorted(g.items()))
        if key not in seen:
            seen.add(key)
            uniq.append(g)
    return uniq


class SectorIdeal:
    """A commutative relation ideal on a subset of generators.

    Words of the host presentation are reduced by rewriting their sector
    letters (which must commute with everything) modulo the Groebner basis.
    """

    def __init__(self, variables: Sequence[str], relations: Sequence[Poly]):
        self.variables = list(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.basis = buchberger(relations)

    def reduce_monomial(self, mono: Mono) -> Poly:
        return reduce_poly({mono: Fraction(1)}, self.basis)

    def mono_of_letters(self, letters: Sequence[str]) -> Mono:
        exps = [0] * len(self.variables)
        for name in letters:
            exps[self.index[name]] += 1
        return tuple(exps)

    def letters_of_mono(self, mono: Mono) -> Tuple[str, ...]:
        out: List[str] = []
        for v, e in zip(self.variables, mono):
            out.extend([v] * e)
        return tuple(out)
