"""Noncommutative polynomial arithmetic and rewriting to a canonical normal form.

Elements are finite maps word -> scalar over a presentation's generator
alphabet.  A presentation's rules rewrite misordered adjacent pairs (and
group-like/inverse adjacencies) until every word is sorted by generator
index; the result is the canonical representative modulo the relation ideal.
Group-like exponentials are first-class generators whose commutation rules
are derived in closed form from the exponent data.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    ForeignGenerator,
    HopfkitError,
    NoSeriesData,
    NonClosedExponential,
    RewriteBudgetExceeded,
)
from .groebner import SectorIdeal
from .scalars import ONE, Param, Scalar, Truncation, rat

sys.setrecursionlimit(200000)

Word = Tuple[str, ...]

PLAIN = "plain"
GROUPLIKE = "grouplike"
GROUPLIKE_INVERSE = "grouplike_inverse"

DEFAULT_STEP_BUDGET = 10 ** 6


@dataclass(frozen=True)
class Generator:
    name: str
    sort_index: int
    kind: str = PLAIN
    partner: Optional[str] = None
    exp_arg: Optional["Element"] = None  # group-likes: E = exp(exp_coeff * exp_arg)
    exp_coeff: Optional[Scalar] = None


class Element:
    """Finite linear combination of words with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        tidy = {}
        for w, c in (terms or {}).items():
            if not c.is_zero():
                tidy[tuple(w)] = c
        self.terms = tidy

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero() -> "Element":
        return Element()

    @staticmethod
    def unit(coeff: Scalar = ONE) -> "Element":
        return Element({(): coeff})

    @staticmethod
    def gen(name: str, coeff: Scalar = ONE) -> "Element":
        return Element({(name,): coeff})

    @staticmethod
    def word(letters: Sequence[str], coeff: Scalar = ONE) -> "Element":
        return Element({tuple(letters): coeff})

    # -- linear structure --------------------------------------------------
    def __add__(self, other: "Element") -> "Element":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            if w in terms:
                terms[w] = terms[w] + c
            else:
                terms[w] = c
        return Element(terms)

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, s: Scalar) -> "Element":
        return Element({w: c * s for w, c in self.terms.items()})

    def map_coeffs(self, f) -> "Element":
        return Element({w: f(c) for w, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((w, c) for w, c in self.terms.items()))

    def concat(self, other: "Element") -> "Element":
        """Free product (no rewriting)."""
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                if w in terms:
                    terms[w] = terms[w] + c
                else:
                    terms[w] = c
        return Element(terms)

    def letters(self):
        seen = set()
        for w in self.terms:
            seen.update(w)
        return seen

    def max_len(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __repr__(self):
        return f"Element({render_element(self)})"


class TensorElement:
    """Rank 2 or 3 tensor over the word basis; multiplication is legwise."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        assert rank in (2, 3)
        self.rank = rank
        tidy = {}
        for key, c in (terms or {}).items():
            if not c.is_zero():
                tidy[tuple(tuple(w) for w in key)] = c
        self.terms = tidy

    @staticmethod
    def unit(rank: int) -> "TensorElement":
        return TensorElement(rank, {tuple(() for _ in range(rank)): ONE})

    @staticmethod
    def of(*elements: Element) -> "TensorElement":
        rank = len(elements)
        keys = [((), ONE)]
        for el in elements:
            keys = [
                (k + (w,), c * cw)
                for k, c in keys
                for w, cw in el.terms.items()
            ]
        terms: dict = {}
        for k, c in keys:
            if k in terms:
                terms[k] = terms[k] + c
            else:
                terms[k] = c
        return TensorElement(rank, terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        assert self.rank == other.rank
        terms = dict(self.terms)
        for k, c in other.terms.items():
            if k in terms:
                terms[k] = terms[k] + c
            else:
                terms[k] = c
        return TensorElement(self.rank, terms)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, s: Scalar) -> "TensorElement":
        return TensorElement(self.rank, {k: c * s for k, c in self.terms.items()})

    def map_coeffs(self, f) -> "TensorElement":
        return TensorElement(self.rank, {k: f(c) for k, c in self.terms.items()})

    def concat(self, other: "TensorElement") -> "TensorElement":
        assert self.rank == other.rank
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                c = c1 * c2
                if k in terms:
                    terms[k] = terms[k] + c
                else:
                    terms[k] = c
        return TensorElement(self.rank, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"TensorElement({render_tensor(self)})"


class Presentation:
    """Frozen generator alphabet plus rewrite rules; owns normal forms."""

    def __init__(
        self,
        name: str,
        params: Dict[str, Param],
        gens: Dict[str, Generator],
        rules: List[Tuple[Tuple[str, str], Element]],
        step_budget: int = DEFAULT_STEP_BUDGET,
        sector_ideal: Optional[SectorIdeal] = None,
        metadata: Optional[dict] = None,
    ):
        self.name = name
        self.params = dict(params)
        self.gens = dict(gens)
        self.order = sorted(self.gens, key=lambda n: self.gens[n].sort_index)
        self.rules = list(rules)
        self.rule_first: Dict[Tuple[str, str], Element] = {}
        self.rule_all: Dict[Tuple[str, str], List[Element]] = {}
        for pair, rhs in self.rules:
            self.rule_all.setdefault(pair, []).append(rhs)
            self.rule_first.setdefault(pair, rhs)
        self.step_budget = step_budget
        self.sector_ideal = sector_ideal
        self.metadata = dict(metadata or {})
        self._nf_cache: Dict[Tuple[str, Word], Element] = {}

    # -- bookkeeping -----------------------------------------------------
    def index(self, name: str) -> int:
        return self.gens[name].sort_index

    def check_element(self, e: Element):
        for w in e.terms:
            for g in w:
                if g not in self.gens:
                    raise ForeignGenerator(f"{g!r} is not a generator of {self.name}")

    def plain_generators(self) -> List[str]:
        return [n for n in self.order if self.gens[n].kind == PLAIN]

    def grouplike_pairs(self) -> List[Tuple[str, str]]:
        return [
            (n, self.gens[n].partner)
            for n in self.order
            if self.gens[n].kind == GROUPLIKE
        ]

    # -- normal form -------------------------------------------------------
    def _find_redex(self, w: Word, strategy: str) -> Optional[int]:
        rng = range(len(w) - 1)
        if strategy == "right":
            rng = range(len(w) - 2, -1, -1)
        for i in rng:
            if (w[i], w[i + 1]) in self.rule_first:
                return i
        return None

    def _emit(self, w: Word) -> Element:
        if self.sector_ideal is None:
            return Element({w: ONE})
        sect = [g for g in w if g in self.sector_ideal.index]
        if not sect:
            return Element({w: ONE})
        rest = [g for g in w if g not in self.sector_ideal.index]
        reduced = self.sector_ideal.reduce_monomial(self.sector_ideal.mono_of_letters(sect))
        out = Element()
        for mono, q in reduced.items():
            letters = self.sector_ideal.letters_of_mono(mono)
            merged = self._merge_sorted(rest, letters)
            out = out + Element({merged: rat(q)})
        return out

    def _merge_sorted(self, a: Sequence[str], b: Sequence[str]) -> Word:
        out: List[str] = []
        i = j = 0
        while i < len(a) and j < len(b):
            if self.index(a[i]) <= self.index(b[j]):
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return tuple(out)

    def _nf_word(self, w: Word, strategy: str, budget: List[int]) -> Element:
        key = (strategy, w)
        cached = self._nf_cache.get(key)
        if cached is not None:
            return cached
        i = self._find_redex(w, strategy)
        if i is None:
            result = self._emit(w)
        else:
            budget[0] += 1
            if budget[0] > self.step_budget:
                raise RewriteBudgetExceeded(
                    f"{self.name}: exceeded {self.step_budget} rewrite steps"
                )
            rhs = self.rule_first[(w[i], w[i + 1])]
            result = Element()
            for rw, rc in rhs.terms.items():
                part = self._nf_word(w[:i] + rw + w[i + 2:], strategy, budget)
                result = result + part.scale(rc)
        self._nf_cache[key] = result
        return result

    def normal_form(self, e: Element, strategy: str = "left") -> Element:
        self.check_element(e)
        budget = [0]
        out = Element()
        for w, c in e.terms.items():
            out = out + _scale_left(self._nf_word(w, strategy, budget), c)
        return out

    def multiply(self, a: Element, b: Element, strategy: str = "left") -> Element:
        self.check_element(a)
        self.check_element(b)
        return self.normal_form(a.concat(b), strategy)

    def tensor_nf(self, t: TensorElement, strategy: str = "left") -> TensorElement:
        out = TensorElement(t.rank)
        for key, c in t.terms.items():
            legs = [self.normal_form(Element({w: ONE}), strategy) for w in key]
            piece = TensorElement.of(*legs).scale(c)
            out = out + piece
        return out

    def tensor_multiply(self, a: TensorElement, b: TensorElement) -> TensorElement:
        return self.tensor_nf(a.concat(b))

    # -- rendering -----------------------------------------------------------
    def sort_key(self, w: Word):
        return (len(w), tuple(self.index(g) for g in w))

    def render(self, e: Element) -> str:
        return render_element(e, self)

    def __repr__(self):
        return f"<Presentation {self.name}: {len(self.gens)} generators, {len(self.rules)} rules>"


def _scale_left(e: Element, c) -> Element:
    """c * e; c may be a plain Scalar or a linear-in-unknowns coefficient."""
    return Element({w: c * cw for w, cw in e.terms.items()})


def render_element(e: Element, pres: Optional[Presentation] = None) -> str:
    if e.is_zero():
        return "0"
    keyf = pres.sort_key if pres else (lambda w: (len(w), w))
    parts = []
    for w in sorted(e.terms, key=keyf):
        c = e.terms[w]
        cs = str(c)
        body = "*".join(w) if w else "1"
        if cs == "1" and w:
            parts.append("+" + body)
        elif cs == "-1" and w:
            parts.append("-" + body)
        elif ("+" in cs[1:]) or ("-" in cs[1:]):
            parts.append(f"+({cs})*{body}" if w else f"+({cs})")
        else:
            parts.append(("+" if not cs.startswith("-") else "") + cs + ("*" + body if w else ""))
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def render_tensor(t: TensorElement, pres: Optional[Presentation] = None) -> str:
    if t.is_zero():
        return "0"
    keyf = pres.sort_key if pres else (lambda w: (len(w), w))
    parts = []
    for key in sorted(t.terms, key=lambda k: tuple(keyf(w) for w in k)):
        c = t.terms[key]
        cs = str(c)
        legs = " (x) ".join("*".join(w) if w else "1" for w in key)
        if cs == "1":
            parts.append("+" + legs)
        elif cs == "-1":
            parts.append("-" + legs)
        else:
            parts.append(f"+({cs})*[{legs}]")
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


# ---------------------------------------------------------------------------
# Presentation builder: commutator tables in, derived rewrite rules out.
# ---------------------------------------------------------------------------


class PresentationBuilder:
    def __init__(self, name: str, default_commuting: bool = False):
        self.name = name
        self.params: Dict[str, Param] = {}
        self._gen_names: List[str] = []
        self._grouplikes: List[Tuple[str, str, Element, Scalar]] = []
        self._commutators: Dict[Tuple[str, str], Element] = {}
        self.default_commuting = default_commuting
        self.sector_ideal: Optional[SectorIdeal] = None
        self.metadata: dict = {}
        self.step_budget = DEFAULT_STEP_BUDGET

    def add_param(self, p: Union[Param, str], dimension_tag: str = "") -> "PresentationBuilder":
        if isinstance(p, str):
            p = Param(p, dimension_tag)
        if p.name in self.params and self.params[p.name] != p:
            raise HopfkitError(f"duplicate parameter {p.name}")
        self.params[p.name] = p
        return self

    def add_generators(self, *names: str) -> "PresentationBuilder":
        for n in names:
            if n in self._gen_names or any(n in (g, gi) for g, gi, _, _ in self._grouplikes):
                raise HopfkitError(f"duplicate generator {n}")
            self._gen_names.append(n)
        return self

    def add_grouplike(
        self, name: str, arg: Element, coeff: Scalar, inverse_name: Optional[str] = None
    ) -> "PresentationBuilder":
        inv = inverse_name or name + "_inv"
        self._grouplikes.append((name, inv, arg, coeff))
        return self

    def set_commutator(self, a: str, b: str, rhs: Element) -> "PresentationBuilder":
        """Declare [a, b] = rhs (rhs may mention group-like generators)."""
        if (a, b) in self._commutators or (b, a) in self._commutators:
            raise HopfkitError(f"commutator [{a},{b}] declared twice")
        self._commutators[(a, b)] = rhs
        return self

    def set_sector_ideal(self, ideal: SectorIdeal) -> "PresentationBuilder":
        self.sector_ideal = ideal
        return self

    def _gen_table(self) -> Dict[str, Generator]:
        gens: Dict[str, Generator] = {}
        idx = 0
        for n in self._gen_names:
            gens[n] = Generator(n, idx)
            idx += 1
        for g, gi, arg, coeff in self._grouplikes:
            gens[g] = Generator(g, idx, GROUPLIKE, gi, arg, coeff)
            gens[gi] = Generator(gi, idx + 1, GROUPLIKE_INVERSE, g, arg, coeff)
            idx += 2
        return gens

    def _commutator_of(self, a: str, b: str) -> Optional[Element]:
        if (a, b) in self._commutators:
            return self._commutators[(a, b)]
        if (b, a) in self._commutators:
            return -self._commutators[(b, a)]
        if self.default_commuting:
            return Element.zero()
        return None

    def build(self) -> Presentation:
        gens = self._gen_table()
        rules: List[Tuple[Tuple[str, str], Element]] = []

        plain = [n for n in self._gen_names]
        for i, a in enumerate(plain):
            for b in plain[i + 1:]:
                # sort order has a before b; the misordered word is (b, a)
                comm = self._commutator_of(b, a)  # [b, a]
                if comm is None:
                    raise HopfkitError(
                        f"{self.name}: no commutator declared for ({a}, {b})"
                    )
                rules.append(((b, a), Element.word((a, b)) + comm))

        # provisional presentation for computing [g, arg] (group-like rules may
        # be needed for nothing here: args are plain, rule rhs may mention E).
        prov = Presentation(self.name, self.params, gens, rules, self.step_budget,
                            self.sector_ideal, self.metadata)

        for g, gi, arg, coeff in self._grouplikes:
            rules.append(((g, gi), Element.unit()))
            rules.append(((gi, g), Element.unit()))
            for other in plain:
                k = prov.normal_form(
                    Element.gen(other).concat(arg) - arg.concat(Element.gen(other))
                )
                closure = prov.normal_form(k.concat(arg) - arg.concat(k))
                if not closure.is_zero():
                    raise NonClosedExponential(
                        f"{self.name}: [{other}, exp-argument] does not commute with the argument"
                    )
                if k.is_zero():
                    rules.append(((g, other), Element.word((other, g))))
                    rules.append(((gi, other), Element.word((other, gi))))
                    continue
                cross_g = _append_letter(-_scale(k, coeff), g, gi)
                cross_gi = _append_letter(_scale(k, coeff), gi, g)
                rules.append(((g, other), Element.word((other, g)) + cross_g))
                rules.append(((gi, other), Element.word((other, gi)) + cross_gi))
            # relations between distinct group-like pairs: require commuting args
            for g2, gi2, arg2, _ in self._grouplikes:
                if g2 == g:
                    break
                if not prov.normal_form(arg.concat(arg2) - arg2.concat(arg)).is_zero():
                    raise NonClosedExponential(
                        f"{self.name}: exponent arguments of {g} and {g2} do not commute"
                    )
                for hi in (g, gi):
                    for lo in (g2, gi2):
                        rules.append(((hi, lo), Element.word((lo, hi))))

        pres = Presentation(self.name, self.params, gens, rules, self.step_budget,
                            self.sector_ideal, self.metadata)
        # normalize rule right-hand sides with the complete system
        for _ in range(6):
            changed = False
            new_rules = []
            for pair, rhs in pres.rules:
                nf = pres.normal_form(rhs)
                if nf != rhs:
                    changed = True
                new_rules.append((pair, nf))
            pres = Presentation(self.name, self.params, gens, new_rules,
                                self.step_budget, self.sector_ideal, self.metadata)
            if not changed:
                break
        else:
            raise HopfkitError(f"{self.name}: rule normalization did not stabilize")
        return pres


def _scale(e: Element, s: Scalar) -> Element:
    return Element({w: c * s for w, c in e.terms.items()})


def _append_letter(e: Element, letter: str, partner: str) -> Element:
    """e * letter for a group-like letter, cancelling a trailing partner."""
    terms: dict = {}
    for w, c in e.terms.items():
        if w and w[-1] == partner:
            nw = w[:-1]
        else:
            nw = w + (letter,)
        terms[nw] = terms.get(nw, c - c) + c if nw in terms else c
    return Element(terms)


# ---------------------------------------------------------------------------
# Spec-level operations
# ---------------------------------------------------------------------------


def multiply(a: Element, b: Element, pres: Presentation) -> Element:
    return pres.multiply(a, b)


def normal_form(e: Element, pres: Presentation) -> Element:
    return pres.normal_form(e)


def exp_adjoin(pres: Presentation, arg: Element, coeff: Scalar, name: str) -> Presentation:
    """Adjoin a group-like pair exp(coeff*arg), exp(-coeff*arg) to a presentation."""
    b = PresentationBuilder(pres.name)
    b.params = dict(pres.params)
    b.step_budget = pres.step_budget
    b.sector_ideal = pres.sector_ideal
    b.metadata = dict(pres.metadata)
    b.add_generators(*pres.plain_generators())
    for g, _gi in pres.grouplike_pairs():
        gen = pres.gens[g]
        b.add_grouplike(g, gen.exp_arg, gen.exp_coeff, gen.partner)
    plain = pres.plain_generators()
    for i, a in enumerate(plain):
        for bb in plain[i + 1:]:
            comm = pres.normal_form(
                Element.gen(bb).concat(Element.gen(a))
                - Element.gen(a).concat(Element.gen(bb))
            )
            b.set_commutator(bb, a, comm)
    b.add_grouplike(name, arg, coeff)
    return b.build()


def grouplike_series(
    pres: Presentation, name: str, trunc: Truncation
) -> Element:
    """Truncated exponential series for a group-like generator of pres."""
    gen = pres.gens[name]
    if gen.kind not in (GROUPLIKE, GROUPLIKE_INVERSE) or gen.exp_arg is None:
        raise NoSeriesData(f"{name} has no exponential expansion data")
    coeff = gen.exp_coeff
    if gen.kind == GROUPLIKE_INVERSE:
        coeff = -coeff
    lo, hi = coeff.exponent_range(trunc.param)
    if trunc.inverse:
        step = -hi
    else:
        step = lo
    if step < 1:
        raise NoSeriesData(
            f"{name}: exponent coefficient carries no positive power of the series parameter"
        )
    kmax = trunc.order // step
    out = Element.unit(ONE.truncate(trunc))
    power = Element.unit()
    for k in range(1, kmax + 1):
        power = pres.normal_form(power.concat(gen.exp_arg))
        ck = (coeff if k == 1 else _pow_scalar(coeff, k)).scale(Fraction(1, factorial(k)))
        out = out + _scale(power, ck.truncate(trunc))
    return out


def _pow_scalar(s: Scalar, k: int) -> Scalar:
    out = s
    for _ in range(k - 1):
        out = out * s
    return out


def series_expand(
    e: Element, pres: Presentation, series_param: Union[str, Param], order: int,
    inverse: bool = True,
) -> Element:
    """Replace group-like letters by truncated exponential series.

    ``inverse=True`` expands in 1/series_param (deformation parameters such
    as the inverse-length scales); ``inverse=False`` expands in the parameter
    itself (the contraction parameter).
    """
    if isinstance(series_param, Param):
        series_param = series_param.name
    trunc = Truncation(series_param, order, inverse)
    cache: Dict[str, Element] = {}
    out = Element()
    for w, c in e.terms.items():
        piece = Element.unit(c.truncate(trunc))
        for g in w:
            if pres.gens[g].kind == PLAIN:
                factor = Element.gen(g)
            else:
                if g not in cache:
                    cache[g] = grouplike_series(pres, g, trunc)
                factor = cache[g]
            piece = piece.concat(factor)
        out = out + piece
    return out


def series_expand_tensor(
    t: TensorElement, pres: Presentation, series_param, order: int, inverse: bool = True
) -> TensorElement:
    if isinstance(series_param, Param):
        series_param = series_param.name
    trunc = Truncation(series_param, order, inverse)
    cache: Dict[str, Element] = {}

    def expand_word(w: Word) -> Element:
        piece = Element.unit(ONE.truncate(trunc))
        for g in w:
            if pres.gens[g].kind == PLAIN:
                factor = Element.gen(g)
            else:
                if g not in cache:
                    cache[g] = grouplike_series(pres, g, trunc)
                factor = cache[g]
            piece = piece.concat(factor)
        return piece

    out = TensorElement(t.rank)
    for key, c in t.terms.items():
        legs = [expand_word(w) for w in key]
        out = out + TensorElement.of(*legs).scale(c)
    return out


# ---------------------------------------------------------------------------
# Random word sampling and confluence checking
# ---------------------------------------------------------------------------


def sample_words(
    pres: Presentation, degree: int, count: int, seed: int, min_len: int = 2
) -> List[Word]:
    rng = random.Random(seed)
    alphabet = pres.order
    out = []
    for _ in range(count):
        n = rng.randint(min_len, max(min_len, degree))
        out.append(tuple(rng.choice(alphabet) for _ in range(n)))
    return out


def confluence_check(pres: Presentation, degree: int, seed: int = 0, samples: int = 200):
    """Overlap resolution on all length-3 words plus sampled strategy comparison.

    Returns (ok, witnesses); callers wrap this into a VerificationReport.
    """
    witnesses = []
    names = pres.order
    # ambiguous single pairs (several rules with one lhs)
    for pair, rhss in pres.rule_all.items():
        if len(rhss) > 1:
            base = pres.normal_form(rhss[0])
            for other in rhss[1:]:
                if pres.normal_form(other) != base:
                    witnesses.append(("rule-ambiguity", pair, base - pres.normal_form(other)))
    # overlaps a.b.c with rules on (a,b) and (b,c)
    for a in names:
        for b in names:
            if (a, b) not in pres.rule_all:
                continue
            for c in names:
                if (b, c) not in pres.rule_first:
                    continue
                for rhs_ab in pres.rule_all[(a, b)]:
                    left = pres.normal_form(rhs_ab.concat(Element.gen(c)))
                    right = pres.normal_form(
                        Element.gen(a).concat(pres.rule_first[(b, c)])
                    )
                    if left != right:
                        witnesses.append(("overlap", (a, b, c), left - right))
    # sampled words: strategy independence up to the degree bound
    for w in sample_words(pres, degree, samples, seed):
        l = pres.normal_form(Element({w: ONE}), "left")
        r = pres.normal_form(Element({w: ONE}), "right")
        if l != r:
            witnesses.append(("strategy", w, l - r))
    return (not witnesses), witnesses
