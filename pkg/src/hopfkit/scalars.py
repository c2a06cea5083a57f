"""Exact coefficient ring: rationals times Laurent monomials in named parameters.

A Scalar is a finite map {exponent vector -> Fraction}.  Exponent vectors are
stored as sorted tuples of (parameter name, nonzero integer exponent), so
``3/2 * u^-1 * m^2`` is one term.  A Scalar may carry a truncation marker
(series semantics in one designated parameter); arithmetic then drops terms
beyond the order.  All coefficients are exact; there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

from .errors import DivergenceError, IncompatibleTruncation, NonInvertibleSubstitution

Exponents = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class Param:
    """A named commuting formal parameter with a unit annotation.

    The dimension tag is documentation only; arithmetic never looks at it.
    """

    name: str
    dimension_tag: str = ""


@dataclass(frozen=True)
class Truncation:
    """Series truncation in one parameter.

    ``inverse=False`` means a series in ``param`` itself: terms with
    exponent > order are dropped.  ``inverse=True`` means a series in
    ``1/param``: terms with exponent < -order are dropped.  Terms on the
    other side of zero are always kept (they are tracked exactly; limits
    and divergence analysis rely on them).
    """

    param: str
    order: int
    inverse: bool = False

    def keeps(self, exponent: int) -> bool:
        if self.inverse:
            return exponent >= -self.order
        return exponent <= self.order


def _merge_trunc(a: Optional[Truncation], b: Optional[Truncation]) -> Optional[Truncation]:
    if a is None:
        return b
    if b is None:
        return a
    if a.param != b.param or a.inverse != b.inverse:
        raise IncompatibleTruncation(f"{a} vs {b}")
    return a if a.order <= b.order else b


def _norm_exponents(exps: Mapping[str, int] | Iterable[Tuple[str, int]]) -> Exponents:
    if isinstance(exps, Mapping):
        items = exps.items()
    else:
        items = exps
    acc: dict = {}
    for name, k in items:
        k = int(k)
        if k:
            acc[name] = acc.get(name, 0) + k
    return tuple(sorted((n, k) for n, k in acc.items() if k))


class Scalar:
    """Immutable exact scalar: Laurent polynomial in parameters over Q."""

    __slots__ = ("terms", "trunc")

    def __init__(self, terms=None, trunc: Optional[Truncation] = None):
        tidy = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if trunc is not None:
                e = dict(exps).get(trunc.param, 0)
                if not trunc.keeps(e):
                    continue
            tidy[exps] = coeff
        object.__setattr__(self, "terms", tidy)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, *a):  # pragma: no cover - guards immutability
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def rational(q) -> "Scalar":
        return Scalar({(): Fraction(q)})

    @staticmethod
    def monomial(exps, coeff=1, trunc: Optional[Truncation] = None) -> "Scalar":
        return Scalar({_norm_exponents(exps): Fraction(coeff)}, trunc)

    @staticmethod
    def of_param(name: Union[str, Param], power: int = 1, coeff=1) -> "Scalar":
        if isinstance(name, Param):
            name = name.name
        return Scalar.monomial({name: power}, coeff)

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): Fraction(1)}

    def is_rational(self) -> bool:
        return all(e == () for e in self.terms)

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"not a pure rational: {self}")
        return self.terms[()]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- ring operations -----------------------------------------------
    def __add__(self, other: "Scalar") -> "Scalar":
        trunc = _merge_trunc(self.trunc, other.trunc)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Scalar(terms, trunc)

    def __neg__(self) -> "Scalar":
        return Scalar({e: -c for e, c in self.terms.items()}, self.trunc)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        trunc = _merge_trunc(self.trunc, other.trunc)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _norm_exponents(list(e1) + list(e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Scalar(terms, trunc)

    def scale(self, q) -> "Scalar":
        q = Fraction(q)
        return Scalar({e: c * q for e, c in self.terms.items()}, self.trunc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- truncation management ------------------------------------------
    def truncate(self, trunc: Optional[Truncation]) -> "Scalar":
        return Scalar(self.terms, _merge_trunc(self.trunc, trunc))

    def forget_truncation(self) -> "Scalar":
        return Scalar(self.terms, None)

    # -- parameter operations ---------------------------------------------
    def params(self):
        seen = set()
        for e in self.terms:
            for name, _ in e:
                seen.add(name)
        return seen

    def exponent_range(self, param: str) -> Tuple[int, int]:
        """(min, max) exponent of ``param`` over all terms; (0, 0) if absent."""
        exps = [dict(e).get(param, 0) for e in self.terms] or [0]
        return min(exps), max(exps)

    def coefficient_of(self, param: str, power: int) -> "Scalar":
        """The exact coefficient of param**power (a Scalar free of param)."""
        terms = {}
        for e, c in self.terms.items():
            d = dict(e)
            if d.pop(param, 0) == power:
                terms[_norm_exponents(d)] = c
        return Scalar(terms, None)

    def substitute(self, param: Union[str, Param], replacement: "Scalar") -> "Scalar":
        """Replace every power of ``param`` by the matching power of ``replacement``.

        Negative powers require the replacement to be an invertible monomial.
        """
        if isinstance(param, Param):
            param = param.name
        inv = None
        result = Scalar({}, self.trunc)
        for e, c in self.terms.items():
            d = dict(e)
            k = d.pop(param, 0)
            base = Scalar.monomial(d, c)
            if k == 0:
                result = result + base
                continue
            if k > 0:
                piece = replacement
                for _ in range(k - 1):
                    piece = piece * replacement
            else:
                if inv is None:
                    if not replacement.is_monomial():
                        raise NonInvertibleSubstitution(
                            f"cannot substitute {param}^{k} with non-monomial {replacement}"
                        )
                    (exps, coeff), = replacement.terms.items()
                    inv = Scalar.monomial({n: -p for n, p in exps}, Fraction(1, 1) / coeff)
                piece = inv
                for _ in range(-k - 1):
                    piece = piece * inv
            result = result + base * piece.truncate(self.trunc)
        return result

    def limit_at_zero(self, param: Union[str, Param]) -> "Scalar":
        """The value at param = 0; raises DivergenceError on negative powers."""
        if isinstance(param, Param):
            param = param.name
        bad = [
            Scalar.monomial(dict(e), c)
            for e, c in self.terms.items()
            if dict(e).get(param, 0) < 0
        ]
        if bad:
            raise DivergenceError(param, bad)
        return self.coefficient_of(param, 0)

    # -- rendering ---------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            factors = []
            if abs(c) != 1 or not e:
                factors.append(str(abs(c)))
            for name, k in e:
                factors.append(name if k == 1 else f"{name}^{k}")
            body = "*".join(factors)
            parts.append(("-" if c < 0 else "+") + body)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar()
ONE = Scalar.rational(1)


def rat(p, q=1) -> Scalar:
    return Scalar.rational(Fraction(p, q))


def scalar_arith(a: Scalar, b: Optional[Scalar], op: str) -> Scalar:
    """Dispatch helper mirroring the primitive ring operations."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")
