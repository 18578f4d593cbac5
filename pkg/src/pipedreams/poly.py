"""Sparse integer polynomials in x1, x2, ... and Schubert polynomials.

Terms are stored as a dict mapping trimmed exponent tuples to nonzero integer
coefficients, so ``x1`` is ``{(1,): 1}`` and the zero polynomial is ``{}``.
Schubert polynomials come from iterated divided differences applied to the
staircase monomial of the longest element.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .perm import Permutation, one_reduced_word


def _trim(exp: tuple[int, ...]) -> tuple[int, ...]:
    while exp and exp[-1] == 0:
        exp = exp[:-1]
    return exp


class SparsePolynomial:
    """A polynomial with integer coefficients in countably many variables.

    >>> x1 = SparsePolynomial.variable(1)
    >>> x2 = SparsePolynomial.variable(2)
    >>> str(x1 * x1 * x2 + x1 * x2)
    'x1^2*x2 + x1*x2'
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] = ()):
        clean: dict[tuple[int, ...], int] = {}
        for exp, coef in dict(terms).items():
            if coef:
                clean[_trim(tuple(exp))] = coef
        self.terms = clean

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls({(): 1})

    @classmethod
    def constant(cls, c: int) -> "SparsePolynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, i: int) -> "SparsePolynomial":
        if i < 1:
            raise ValueError("variables are numbered from 1")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coef: int = 1) -> "SparsePolynomial":
        return cls({tuple(exponents): coef})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, 0) + coef
        return SparsePolynomial(out)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                n = max(len(e1), len(e2))
                e1p = e1 + (0,) * (n - len(e1))
                e2p = e2 + (0,) * (n - len(e2))
                e = _trim(tuple(a + b for a, b in zip(e1p, e2p)))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(out)

    def scale(self, c: int) -> "SparsePolynomial":
        return SparsePolynomial({e: c * v for e, v in self.terms.items()})

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self.terms.get(_trim(tuple(exponents)), 0)

    def num_vars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def total_degrees(self) -> frozenset[int]:
        return frozenset(sum(e) for e in self.terms)

    def swap_vars(self, i: int) -> "SparsePolynomial":
        """Exchange the variables x_i and x_{i+1} in every term."""
        if i < 1:
            raise ValueError("variables are numbered from 1")
        out: dict[tuple[int, ...], int] = {}
        for exp, coef in self.terms.items():
            e = list(exp) + [0] * max(0, i + 1 - len(exp))
            e[i - 1], e[i] = e[i], e[i - 1]
            key = _trim(tuple(e))
            out[key] = out.get(key, 0) + coef
        return SparsePolynomial(out)

    def substitute_zero(self, i: int) -> "SparsePolynomial":
        """Set x_i = 0, dropping every term divisible by x_i."""
        out: dict[tuple[int, ...], int] = {}
        for exp, coef in self.terms.items():
            if len(exp) >= i and exp[i - 1] > 0:
                continue
            out[exp] = out.get(exp, 0) + coef
        return SparsePolynomial(out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted by ascending lexicographic exponent vector."""
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in sorted(self.terms.items(), reverse=True):
            factors = []
            for i, e in enumerate(exp, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(mono)
            elif coef == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coef}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.terms!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"exponents": list(exp), "coefficient": coef}
                for exp, coef in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "SparsePolynomial":
        out: dict[tuple[int, ...], int] = {}
        for term in data["terms"]:
            exp = _trim(tuple(term["exponents"]))
            out[exp] = out.get(exp, 0) + int(term["coefficient"])
        return cls(out)


def divided_difference(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """The operator (f - swap_i f) / (x_i - x_{i+1}).

    The quotient is exact for every polynomial; each term of f is divided
    against its swapped partner via the telescoping identity
    x^a y^b - x^b y^a = (x - y) * sum over the staircase between a and b.
    """
    if i < 1:
        raise ValueError("variables are numbered from 1")
    out: dict[tuple[int, ...], int] = {}
    for exp, coef in f.terms.items():
        e = list(exp) + [0] * max(0, i + 1 - len(exp))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b = b, a
            sign = -1
        # x^a y^b - x^b y^a = (x-y) * x^b y^b * (x^{a-b-1} + ... + y^{a-b-1})
        for d in range(a - b):
            q = list(e)
            q[i - 1] = b + d
            q[i] = a - 1 - d
            key = _trim(tuple(q))
            out[key] = out.get(key, 0) + sign * coef
    result = SparsePolynomial(out)
    xi = SparsePolynomial.variable(i)
    xj = SparsePolynomial.variable(i + 1)
    assert result * (xi - xj) == f - f.swap_vars(i), "divided difference not exact"
    return result


def staircase_monomial(n: int) -> SparsePolynomial:
    """x1^{n-1} x2^{n-2} ... x_{n-1}, the top Schubert polynomial of S_n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return SparsePolynomial.monomial(tuple(range(n - 1, 0, -1)))


@lru_cache(maxsize=None)
def _schubert_cached(pi: Permutation, n: int) -> SparsePolynomial:
    top = staircase_monomial(n)
    word = one_reduced_word(pi.inverse() * Permutation.longest(n))
    f = top
    for i in reversed(word):
        f = divided_difference(f, i)
    return f


def schubert_polynomial(pi: Permutation, ambient: int | None = None) -> SparsePolynomial:
    """The Schubert polynomial of pi via divided differences.

    ``ambient`` picks the symmetric group S_n to compute inside; any n at
    least the support size gives the same polynomial (stability).

    >>> str(schubert_polynomial(Permutation([3, 1, 2])))
    'x1^2'
    >>> str(schubert_polynomial(Permutation([1, 3, 2])))
    'x1 + x2'
    """
    n = max(pi.size, 1) if ambient is None else ambient
    if n < pi.size:
        raise ValueError(f"ambient S_{n} too small for support {pi.size}")
    return _schubert_cached(pi, n)


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
