"""
Polynômes entiers exacts et séries génératrices rationnelles.
- IntPolynomial : coefficients entiers (précision arbitraire), indéterminée x.
- RationalSeries : numérateur / (1-x)^k, toujours normalisée.
- polynomial_to_numerator : transforme Σ_{m≥0} q(m) x^m en forme close.
Toutes les valeurs sont immuables ; toutes les opérations sont pures.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import NonIntegerCoefficient

log = logging.getLogger(__name__)

Number = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynôme à coefficients entiers.
    - coeffs : coeffs[i] = coefficient de x^i ; zéros de tête supprimés
    - le polynôme nul est le tuple vide
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = _trim(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", trimmed)

    # ---------- Constructeurs ----------
    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls.monomial(1)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in data))

    # ---------- Propriétés ----------
    @property
    def degree(self) -> int:
        """Degré ; -1 pour le polynôme nul."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self, degree: int) -> bool:
        padded = [self.coefficient(i) for i in range(degree + 1)]
        return padded == padded[::-1] and self.degree <= degree

    # ---------- Arithmétique ----------
    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial.constant(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("exposant négatif")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiplie par x^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def substitute_linear(self, a: int, b: int) -> "IntPolynomial":
        """Retourne p(a·x + b) (schéma de Horner)."""
        lin = IntPolynomial((b, a))
        result = IntPolynomial()
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def reversed_at(self, degree: int) -> "IntPolynomial":
        """x^degree · p(1/x) ; exige degree ≥ deg p."""
        if self.degree > degree:
            raise ValueError(f"degré {self.degree} > {degree}")
        padded = [self.coefficient(i) for i in range(degree + 1)]
        return IntPolynomial(tuple(reversed(padded)))

    def __call__(self, t: Number) -> Number:
        return poly_eval(self, t)

    # ---------- Sérialisation ----------
    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else str(mag)
                body = coef + ("x" if k == 1 else f"x^{k}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


X = IntPolynomial.x()
ONE_MINUS_X = IntPolynomial((1, -1))


def _divide_one_minus_x(p: IntPolynomial) -> IntPolynomial:
    # p = (1-x) q  <=>  q_i = p_0 + ... + p_i (sommes préfixes)
    out, acc = [], 0
    for c in p.coeffs[:-1]:
        acc += c
        out.append(acc)
    return IntPolynomial(tuple(out))


@dataclass(frozen=True)
class RationalSeries:
    """
    Série numerator / (1-x)^denom_power.
    Normalisation : tant que numerator(1) = 0 (numérateur non nul) et
    denom_power > 0, on simplifie par (1-x). Le zéro est 0/(1-x)^0.
    """
    numerator: IntPolynomial
    denom_power: int = 0

    def __post_init__(self):
        if self.denom_power < 0:
            raise ValueError("denom_power doit être ≥ 0")
        num, k = self.numerator, self.denom_power
        if num.is_zero():
            k = 0
        while k > 0 and num.coefficient_sum() == 0:
            num = _divide_one_minus_x(num)
            k -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom_power", k)

    def inflate(self, power: int) -> IntPolynomial:
        """Numérateur de la même série écrite sur (1-x)^power."""
        if power < self.denom_power:
            raise ValueError(f"impossible d'écrire la série sur (1-x)^{power}")
        return self.numerator * (ONE_MINUS_X ** (power - self.denom_power))

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        k = max(self.denom_power, other.denom_power)
        return RationalSeries(self.inflate(k) + other.inflate(k), k)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        k = max(self.denom_power, other.denom_power)
        return RationalSeries(self.inflate(k) - other.inflate(k), k)

    def to_json(self) -> dict:
        return {"num": self.numerator.to_json(), "denom_power": self.denom_power}

    @classmethod
    def from_json(cls, data: dict) -> "RationalSeries":
        return cls(IntPolynomial.from_json(data["num"]), int(data["denom_power"]))

    def __str__(self) -> str:
        if self.denom_power == 0:
            return f"{self.numerator}"
        return f"({self.numerator})/(1 - x)^{self.denom_power}"


# ---------- Opérations ----------
def poly_eval(p: IntPolynomial, t: Number) -> Number:
    """Évaluation exacte p(t) (Horner)."""
    acc: Number = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_interpolate(points: Sequence[Tuple[int, int]]) -> IntPolynomial:
    """
    Interpolation de Lagrange exacte.
    Lève NonIntegerCoefficient si le polynôme obtenu n'est pas entier.
    """
    if not points:
        raise ValueError("au moins un point est requis")
    xs = [Fraction(px) for px, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("abscisses non distinctes")
    size = len(points)
    total = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # basis *= (x - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
            denom *= Fraction(xi) - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            total[k] += c * scale
    for k, c in enumerate(total):
        if c.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient de x^{k} non entier: {c}")
    return IntPolynomial(tuple(int(c) for c in total))


def polynomial_to_numerator(q: IntPolynomial) -> RationalSeries:
    """
    Forme close de Σ_{m≥0} q(m) x^m :
    N_j = Σ_{i=0}^{j} (-1)^i C(D+1, i) q(j-i), j = 0..D+1, D = deg q.
    """
    if q.is_zero():
        return RationalSeries(IntPolynomial(), 0)
    top = q.degree + 1
    values = [q(m) for m in range(top + 1)]
    numer = [
        sum((-1) ** i * comb(top, i) * values[j - i] for i in range(j + 1))
        for j in range(top + 1)
    ]
    return RationalSeries(IntPolynomial(tuple(numer)), top)


def series_coefficients(r: RationalSeries, count: int) -> List[int]:
    """Les `count` premiers coefficients de Taylor de r en 0."""
    k = r.denom_power
    out = []
    for m in range(count):
        if k == 0:
            out.append(r.numerator.coefficient(m))
            continue
        out.append(sum(c * comb(m - i + k - 1, k - 1)
                       for i, c in enumerate(r.numerator.coeffs) if i <= m))
    return out


def series_equal(r1: RationalSeries, r2: RationalSeries) -> bool:
    """Égalité de fractions rationnelles par produit en croix."""
    lhs = r1.numerator * (ONE_MINUS_X ** r2.denom_power)
    rhs = r2.numerator * (ONE_MINUS_X ** r1.denom_power)
    return lhs == rhs


def eulerian_numerator_a(n: int) -> IntPolynomial:
    """A_n(x) : numérateur de Σ m^n x^m sur (1-x)^{n+1}."""
    if n < 0:
        raise ValueError("n doit être ≥ 0")
    return polynomial_to_numerator(IntPolynomial.monomial(n)).inflate(n + 1)


def eulerian_numerator_b(n: int) -> IntPolynomial:
    """B_n(x) : numérateur de Σ (2m+1)^n x^m sur (1-x)^{n+1}."""
    if n < 0:
        raise ValueError("n doit être ≥ 0")
    q = IntPolynomial((1, 2)) ** n
    return polynomial_to_numerator(q).inflate(n + 1)


def expected_facet_count(family: str, n: int) -> int:
    """Nombre de chambres du groupe de Weyl : n! (type A), 2^n n! (type B)."""
    return factorial(n) if family == "A" else 2 ** n * factorial(n)
