"""
Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero Fractions. Products
and powers are checked against POLYREP_MAX_EXPANSION_DEGREE and
POLYREP_MAX_EXPANSION_MONOMIALS.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from polyrep.exact.rational import format_rat, to_rat
from polyrep.utils import config
from polyrep.utils.errors import ResourceGuardError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class SparsePoly:
    """Polynomial in ``nvars`` variables x1 ... x_nvars."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] = None):
        self.nvars = nvars
        cleaned: Dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            coef = Fraction(coef)
            if coef != 0:
                cleaned[tuple(exp)] = coef
        self.terms = cleaned

    @classmethod
    def constant(cls, nvars: int, value) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: to_rat(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def linear(cls, c0, coeffs: Sequence) -> "SparsePoly":
        """``c0 + sum coeffs[i] * x_{i+1}``."""
        n = len(coeffs)
        terms = {(0,) * n: to_rat(c0)}
        for i, c in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = to_rat(c)
        return cls(n, terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} != {other.nvars}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return SparsePoly(self.nvars, terms)

    __radd__ = __add__

    def __sub__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            scalar = to_rat(other)
            return SparsePoly(self.nvars, {e: c * scalar for e, c in self.terms.items()})
        self._check(other)
        max_degree = config.setting('MAX_EXPANSION_DEGREE')
        if self.degree + other.degree > max_degree:
            raise ResourceGuardError(
                f"expansion of degree {self.degree + other.degree} exceeds the limit of {max_degree}"
            )
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        max_monomials = config.setting('MAX_EXPANSION_MONOMIALS')
        if len(terms) > max_monomials:
            raise ResourceGuardError(f"expansion with {len(terms)} monomials exceeds the limit of {max_monomials}")
        return SparsePoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != self.nvars:
            raise ValueError(f"point of dimension {len(x)} for {self.nvars} variables")
        total = Fraction(0)
        for exp, coef in self.terms.items():
            value = coef
            for xi, e in zip(x, exp):
                if e:
                    value *= xi ** e
            total += value
        return total

    def embed(self, nvars: int) -> "SparsePoly":
        """The same polynomial in more variables (the new ones unused)."""
        if nvars < self.nvars:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (nvars - self.nvars)
        return SparsePoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def compose(self, substitutions: Sequence["SparsePoly"]) -> "SparsePoly":
        """Substitute ``x_i -> substitutions[i]``; all substitutions share one variable count."""
        if len(substitutions) != self.nvars:
            raise ValueError("one substitution per variable required")
        target = substitutions[0].nvars if substitutions else 0
        result = SparsePoly(target)
        powers: Dict[Tuple[int, int], SparsePoly] = {}
        for exp, coef in self.terms.items():
            term = SparsePoly.constant(target, coef)
            for i, e in enumerate(exp):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = substitutions[i] ** e
                    term = term * powers[(i, e)]
            result = result + term
        return result

    def homogeneous_parts(self) -> Dict[int, "SparsePoly"]:
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for exp, coef in self.terms.items():
            parts.setdefault(sum(exp), {})[exp] = coef
        return {t: SparsePoly(self.nvars, terms) for t, terms in parts.items()}

    def render(self) -> str:
        """Render like ``1-x1^2+3/2*x1*x2``; constant first, then by degree."""
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))
        pieces = []
        for exp, coef in ordered:
            monomial = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            sign = "-" if coef < 0 else "+"
            magnitude = abs(coef)
            if not monomial:
                body = format_rat(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rat(magnitude)}*{monomial}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(sign + body for sign, body in pieces[1:])

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {self.render()})"


def product_of(polys: Iterable[SparsePoly], nvars: int) -> SparsePoly:
    result = SparsePoly.constant(nvars, 1)
    for p in polys:
        result = result * p
    return result
