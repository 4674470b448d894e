"""Exact polynomials in a formal variable q with integer coefficients.

Cardinalities of filtration quotients over a residue field of size q
are polynomials in q with nonnegative integer coefficients; keeping
them symbolic keeps every bound exact for all prime powers at once.
Sparse dict representation, arbitrary-precision coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError

NEG_INFINITY = float("-inf")


class QPolynomial:
    """Immutable sparse polynomial in q over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[int, int] = {}
        if terms:
            for exponent, coefficient in dict(terms).items():
                if not isinstance(exponent, int) or isinstance(exponent, bool):
                    raise ValidationError(f"exponent {exponent!r} is not an integer")
                if exponent < 0:
                    raise ValidationError(f"negative exponent {exponent}")
                if not isinstance(coefficient, int) or isinstance(coefficient, bool):
                    raise ValidationError(
                        f"coefficient {coefficient!r} is not an integer"
                    )
                if coefficient:
                    clean[exponent] = clean.get(exponent, 0) + coefficient
                    if not clean[exponent]:
                        del clean[exponent]
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        return cls({exponent: coefficient})

    @property
    def degree(self):
        """Largest exponent with a nonzero coefficient; -inf for the zero
        polynomial."""
        return max(self._terms) if self._terms else NEG_INFINITY

    @property
    def leading_coefficient(self) -> int:
        return self._terms[max(self._terms)] if self._terms else 0

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "QPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return QPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "QPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return QPolynomial()
            return QPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return QPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValidationError("power must be a nonnegative integer")
        result = QPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, q):
        """Exact value at an integer or Fraction q."""
        if isinstance(q, bool) or not isinstance(q, (int, Fraction)):
            raise ValidationError("evaluation point must be an integer or Fraction")
        total = 0
        for exponent, coefficient in self._terms.items():
            total += coefficient * q**exponent
        return total

    def term_list(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def to_serializable(self) -> list[list]:
        """Ascending [exponent, coefficient-string] pairs; big integers
        travel as strings."""
        return [[e, str(c)] for e, c in self.term_list()]

    @classmethod
    def from_serializable(cls, data) -> "QPolynomial":
        try:
            return cls({int(e): int(c) for e, c in data})
        except (TypeError, ValueError) as err:
            raise ValidationError(f"malformed polynomial data: {err}") from err

    def render(self) -> str:
        """Human form, descending: '2q^3 + q + 3', '0' when zero."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exponent, coefficient in sorted(self._terms.items(), reverse=True):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                var = "q" if exponent == 1 else f"q^{exponent}"
                body = var if magnitude == 1 else f"{magnitude}{var}"
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"QPolynomial({self.render()})"
