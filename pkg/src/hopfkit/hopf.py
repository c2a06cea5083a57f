"""Hopf structure maps on generators, their extensions, and the axiom suite.

The coproduct and counit extend multiplicatively, the antipode
anti-multiplicatively.  Group-like generators always carry
Delta(E) = E (x) E, S(E) = E^-1, eps(E) = 1.  Axiom checks are
generator-complete and rule-complete, with seeded word sampling on top.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .errors import DivergenceError, HopfkitError
from .ncalg import (
    GROUPLIKE,
    GROUPLIKE_INVERSE,
    PLAIN,
    Element,
    Presentation,
    PresentationBuilder,
    TensorElement,
    Word,
    render_element,
    render_tensor,
    sample_words,
    series_expand,
    series_expand_tensor,
)
from .report import FAIL, PASS, VerificationReport
from .scalars import ONE, ZERO, Param, Scalar, Truncation, rat


@dataclass
class HopfMaps:
    pres: Presentation
    delta: Dict[str, TensorElement]
    antipode: Dict[str, Element]
    counit: Dict[str, Scalar]

    def __post_init__(self):
        for name, gen in self.pres.gens.items():
            if gen.kind in (GROUPLIKE, GROUPLIKE_INVERSE):
                self.delta.setdefault(name, TensorElement(2, {((name,), (name,)): ONE}))
                self.antipode.setdefault(name, Element.gen(gen.partner))
                self.counit.setdefault(name, ONE)
        missing = [n for n in self.pres.gens if n not in self.delta
                   or n not in self.antipode or n not in self.counit]
        if missing:
            raise HopfkitError(f"{self.pres.name}: incomplete Hopf tables for {missing}")
        self._delta_cache: Dict[Word, TensorElement] = {}
        self._antipode_cache: Dict[Word, Element] = {}

    def delta_word(self, w: Word) -> TensorElement:
        """Normal-formed coproduct of a basis word, cached incrementally."""
        cached = self._delta_cache.get(w)
        if cached is not None:
            return cached
        if not w:
            out = TensorElement.unit(2)
        else:
            out = self.pres.tensor_nf(self.delta_word(w[:-1]).concat(self.delta[w[-1]]))
        self._delta_cache[w] = out
        return out

    def antipode_word(self, w: Word) -> Element:
        cached = self._antipode_cache.get(w)
        if cached is not None:
            return cached
        if not w:
            out = Element.unit()
        else:
            out = self.pres.normal_form(self.antipode[w[-1]].concat(self.antipode_word(w[:-1])))
        self._antipode_cache[w] = out
        return out

    def counit_word(self, w: Word) -> Scalar:
        total = ONE
        for g in w:
            total = total * self.counit[g]
        return total


def primitive_delta(name: str) -> TensorElement:
    return TensorElement(2, {((name,), ()): ONE, ((), (name,)): ONE})


class HopfBuilder:
    """Table collector; unlisted generators can be declared primitive in bulk."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.delta: Dict[str, TensorElement] = {}
        self.antipode: Dict[str, Element] = {}
        self.counit: Dict[str, Scalar] = {}

    def primitive(self, *names: str) -> "HopfBuilder":
        for n in names:
            self.delta[n] = primitive_delta(n)
            self.antipode[n] = -Element.gen(n)
            self.counit[n] = ZERO
        return self

    def set(self, name: str, delta: TensorElement, antipode: Element,
            counit: Scalar = ZERO) -> "HopfBuilder":
        self.delta[name] = delta
        self.antipode[name] = antipode
        self.counit[name] = counit
        return self

    def build(self) -> HopfMaps:
        return HopfMaps(self.pres, self.delta, self.antipode, self.counit)


# ---------------------------------------------------------------------------
# Extensions of the maps to elements
# ---------------------------------------------------------------------------


def coproduct(e: Element, h: HopfMaps) -> TensorElement:
    h.pres.check_element(e)
    out = TensorElement(2)
    for w, c in e.terms.items():
        out = out + h.delta_word(w).scale(c)
    return out


def antipode(e: Element, h: HopfMaps) -> Element:
    h.pres.check_element(e)
    out = Element.zero()
    for w, c in e.terms.items():
        out = out + h.antipode_word(w).scale(c)
    return out


def counit(e: Element, h: HopfMaps) -> Scalar:
    h.pres.check_element(e)
    total = ZERO
    for w, c in e.terms.items():
        total = total + c * h.counit_word(w)
    return total


def coproduct_tensor_leg(t: TensorElement, h: HopfMaps, leg: int) -> TensorElement:
    """Apply Delta to one leg of a rank-2 tensor, producing rank 3."""
    assert t.rank == 2
    terms: dict = {}
    for (w1, w2), c in t.terms.items():
        target = w1 if leg == 0 else w2
        other = w2 if leg == 0 else w1
        for (u1, u2), cc in h.delta_word(target).terms.items():
            key = (u1, u2, other) if leg == 0 else (other, u1, u2)
            val = c * cc
            if key in terms:
                terms[key] = terms[key] + val
            else:
                terms[key] = val
    return TensorElement(3, terms)


def counit_contract(t: TensorElement, h: HopfMaps, leg: int) -> Element:
    assert t.rank == 2
    out = Element.zero()
    for (w1, w2), c in t.terms.items():
        target, keep = (w1, w2) if leg == 0 else (w2, w1)
        factor = ONE
        for g in target:
            factor = factor * h.counit[g]
        out = out + Element({keep: c * factor})
    return h.pres.normal_form(out)


def antipode_multiply(t: TensorElement, h: HopfMaps, leg: int) -> Element:
    """m(S (x) id) for leg=0, m(id (x) S) for leg=1."""
    assert t.rank == 2
    out = Element.zero()
    for (w1, w2), c in t.terms.items():
        if leg == 0:
            piece = antipode(Element({w1: ONE}), h).concat(Element({w2: ONE}))
        else:
            piece = Element({w1: ONE}).concat(antipode(Element({w2: ONE}), h))
        out = out + piece.scale(c)
    return h.pres.normal_form(out)


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------


def _sample(h: HopfMaps, degree: int, seed: int, count: int) -> List[Word]:
    return sample_words(h.pres, degree, count, seed)


def check_delta_homomorphism(
    h: HopfMaps, degree: int = 4, seed: int = 0, samples: int = 25
) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport(h.pres.name, "delta-homomorphism", PASS,
                             degree=degree, seed=seed)
    for pair, rhs in h.pres.rules:
        lhs = Element.word(pair)
        residual = coproduct(lhs, h) - coproduct(rhs, h)
        if not residual.is_zero():
            rep.status = FAIL
            rep.add_witness(f"rule {pair[0]}*{pair[1]}", render_tensor(residual, h.pres))
    for w in _sample(h, degree, seed, samples):
        nf = h.pres.normal_form(Element.word(w))
        direct = TensorElement.unit(2)
        for g in w:
            direct = direct.concat(h.delta[g])
        residual = coproduct(nf, h) - h.pres.tensor_nf(direct)
        if not residual.is_zero():
            rep.status = FAIL
            rep.add_witness(f"word {'*'.join(w)}", render_tensor(residual, h.pres))
    rep.timing_ms = 1000 * (time.perf_counter() - t0)
    return rep


def check_coassociativity(
    h: HopfMaps, degree: int = 4, seed: int = 0, samples: int = 20
) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport(h.pres.name, "coassociativity", PASS,
                             degree=degree, seed=seed)

    def residual_of(e: Element):
        d = coproduct(e, h)
        return coproduct_tensor_leg(d, h, 0) - coproduct_tensor_leg(d, h, 1)

    for g in h.pres.order:
        r = residual_of(Element.gen(g))
        if not r.is_zero():
            rep.status = FAIL
            rep.add_witness(f"generator {g}", render_tensor(r, h.pres))
    for w in _sample(h, degree, seed + 1, samples):
        r = residual_of(h.pres.normal_form(Element.word(w)))
        if not r.is_zero():
            rep.status = FAIL
            rep.add_witness(f"word {'*'.join(w)}", render_tensor(r, h.pres))
    rep.timing_ms = 1000 * (time.perf_counter() - t0)
    return rep


def check_counit(
    h: HopfMaps, degree: int = 4, seed: int = 0, samples: int = 25
) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport(h.pres.name, "counit", PASS, degree=degree, seed=seed)

    def bad(e: Element) -> Optional[Element]:
        d = coproduct(e, h)
        nf = h.pres.normal_form(e)
        left = counit_contract(d, h, 0) - nf
        right = counit_contract(d, h, 1) - nf
        if not left.is_zero():
            return left
        if not right.is_zero():
            return right
        return None

    for g in h.pres.order:
        r = bad(Element.gen(g))
        if r is not None:
            rep.status = FAIL
            rep.add_witness(f"generator {g}", render_element(r, h.pres))
    for w in _sample(h, degree, seed + 2, samples):
        r = bad(Element.word(w))
        if r is not None:
            rep.status = FAIL
            rep.add_witness(f"word {'*'.join(w)}", render_element(r, h.pres))
    rep.timing_ms = 1000 * (time.perf_counter() - t0)
    return rep


def check_antipode(
    h: HopfMaps, degree: int = 4, seed: int = 0, samples: int = 15
) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport(h.pres.name, "antipode", PASS, degree=degree, seed=seed)

    def bad(e: Element) -> Optional[Element]:
        d = coproduct(e, h)
        target = Element.unit(counit(e, h))
        left = antipode_multiply(d, h, 0) - target
        right = antipode_multiply(d, h, 1) - target
        if not left.is_zero():
            return left
        if not right.is_zero():
            return right
        return None

    for g in h.pres.order:
        r = bad(Element.gen(g))
        if r is not None:
            rep.status = FAIL
            rep.add_witness(f"generator {g}", render_element(r, h.pres))
    for w in _sample(h, degree, seed + 3, samples):
        r = bad(Element.word(w))
        if r is not None:
            rep.status = FAIL
            rep.add_witness(f"word {'*'.join(w)}", render_element(r, h.pres))
    rep.timing_ms = 1000 * (time.perf_counter() - t0)
    return rep


def verify_suite(h: HopfMaps, degree: int = 4, seed: int = 0) -> List[VerificationReport]:
    return [
        check_delta_homomorphism(h, degree, seed),
        check_coassociativity(h, degree, seed),
        check_counit(h, degree, seed),
        check_antipode(h, degree, seed),
    ]


# ---------------------------------------------------------------------------
# Series mode and classical limits
# ---------------------------------------------------------------------------


def series_maps(h: HopfMaps, param: Union[str, Param], order: int,
                inverse: bool = True) -> HopfMaps:
    """Expand group-likes as truncated exponential series; same axioms, series scalars."""
    if isinstance(param, Param):
        param = param.name
    pres = h.pres
    plain = pres.plain_generators()
    b = PresentationBuilder(pres.name + "#series")
    for p in pres.params.values():
        b.add_param(p)
    b.add_generators(*plain)
    b.sector_ideal = pres.sector_ideal
    for i, a in enumerate(plain):
        for bb in plain[i + 1:]:
            comm = pres.normal_form(
                Element.gen(bb).concat(Element.gen(a))
                - Element.gen(a).concat(Element.gen(bb))
            )
            b.set_commutator(bb, a, series_expand(comm, pres, param, order, inverse))
    spres = b.build()
    delta, anti, cou = {}, {}, {}
    trunc_one = ONE.truncate(Truncation(param, order, inverse))
    for g in plain:
        delta[g] = spres.tensor_nf(
            series_expand_tensor(h.delta[g], pres, param, order, inverse))
        anti[g] = spres.normal_form(series_expand(h.antipode[g], pres, param, order, inverse))
        cou[g] = h.counit[g] * trunc_one
    return HopfMaps(spres, delta, anti, cou)


def compare_exact_series(h: HopfMaps, hs: HopfMaps, param: str, order: int,
                         inverse: bool = True) -> VerificationReport:
    """Termwise agreement of the exact tables with the series-mode tables."""
    rep = VerificationReport(h.pres.name, "exact-vs-series", PASS,
                             series_order=order, mode="both")
    for g in h.pres.plain_generators():
        d_exact = hs.pres.tensor_nf(
            series_expand_tensor(h.delta[g], h.pres, param, order, inverse))
        if d_exact != hs.delta[g]:
            rep.status = FAIL
            rep.add_witness(f"Delta({g})", render_tensor(d_exact - hs.delta[g]))
        s_exact = hs.pres.normal_form(
            series_expand(h.antipode[g], h.pres, param, order, inverse))
        if s_exact != hs.antipode[g]:
            rep.status = FAIL
            rep.add_witness(f"S({g})", render_element(s_exact - hs.antipode[g]))
    return rep


def classical_limit(h: HopfMaps, deformation: Union[str, Param], order: int = 6,
                    inverse: bool = True, name: Optional[str] = None) -> HopfMaps:
    """Send the deformation to its classical value (param -> infinity when
    ``inverse`` is true, param -> 0 otherwise) and rebuild exact tables.

    Raises DivergenceError when a structure constant blows up in the limit.
    """
    if isinstance(deformation, Param):
        deformation = deformation.name
    pres = h.pres
    plain = pres.plain_generators()

    def limit_scalar(s: Scalar) -> Scalar:
        if inverse:
            # classical value at deformation -> infinity: positive powers diverge
            lo, hi = s.exponent_range(deformation)
            if hi > 0:
                raise DivergenceError(deformation, [s])
            return s.coefficient_of(deformation, 0).forget_truncation()
        return s.limit_at_zero(deformation).forget_truncation()

    def limit_element(e: Element) -> Element:
        return Element({w: limit_scalar(c) for w, c in e.terms.items()})

    def limit_tensor(t: TensorElement) -> TensorElement:
        return TensorElement(t.rank, {k: limit_scalar(c) for k, c in t.terms.items()})

    b = PresentationBuilder(name or pres.name + "#classical")
    for p in pres.params.values():
        b.add_param(p)
    b.add_generators(*plain)
    b.sector_ideal = pres.sector_ideal
    for i, a in enumerate(plain):
        for bb in plain[i + 1:]:
            comm = pres.normal_form(
                Element.gen(bb).concat(Element.gen(a))
                - Element.gen(a).concat(Element.gen(bb))
            )
            b.set_commutator(bb, a, limit_element(
                series_expand(comm, pres, deformation, order, inverse)))
    lpres = b.build()
    delta, anti, cou = {}, {}, {}
    for g in plain:
        delta[g] = lpres.tensor_nf(limit_tensor(
            series_expand_tensor(h.delta[g], pres, deformation, order, inverse)))
        anti[g] = lpres.normal_form(limit_element(
            series_expand(h.antipode[g], pres, deformation, order, inverse)))
        cou[g] = limit_scalar(h.counit[g])
    return HopfMaps(lpres, delta, anti, cou)
