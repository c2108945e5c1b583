"""Sparse multivariate polynomials over exact rationals, with the signed
Weyl action and type-B/D divided differences.

A polynomial in ``m`` variables is a map from exponent tuples of length ``m``
to nonzero ``Fraction`` coefficients.  The Weyl group acts by permuting the
variables and negating the signed ones; the divided difference for the i-th
simple root ``a_i`` is

    div_i(f) = (f - s_i . f) / a_i,

where the division is always exact because the numerator is antisymmetric
under ``s_i``.  Simple roots follow the numbering used in :mod:`quadchow.weyl`:
``x_1 - x_2, ..., x_{m-1} - x_m`` and then ``x_m`` (type B) or
``x_{m-1} + x_m`` (type D).

These operators generate all Schubert-class representatives downstream, so
exactness failures here would mean a root-convention bug; they raise
``ArithmeticError`` rather than returning approximate data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from quadchow.weyl import SignedPermutation, WeylGroup

__all__ = [
    "Polynomial",
    "variable",
    "constant",
    "act",
    "divided_difference",
    "divided_difference_word",
]

Expo = tuple[int, ...]


class Polynomial:
    """Immutable sparse polynomial with ``Fraction`` coefficients."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Expo, Fraction] | None = None):
        self.nvars = nvars
        clean: dict[Expo, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[e] = c
        self.coeffs = clean

    # -- ring structure -----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[Expo, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, v in self.coeffs.items()})

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("rank mismatch")

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.coeffs}
        return len(degrees) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * self.nvars, Fraction(0))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join(
                f"x{i+1}" if p == 1 else f"x{i+1}^{p}" for i, p in enumerate(e) if p
            )
            parts.append(f"{c}" if not mono else f"{c}*{mono}")
        return " + ".join(parts)


def variable(nvars: int, i: int) -> Polynomial:
    """The variable ``x_i`` (1-based) in ``nvars`` variables."""
    e = [0] * nvars
    e[i - 1] = 1
    return Polynomial(nvars, {tuple(e): Fraction(1)})


def constant(nvars: int, c) -> Polynomial:
    return Polynomial(nvars, {(0,) * nvars: Fraction(c)})


def act(w: SignedPermutation, f: Polynomial) -> Polynomial:
    """Ring automorphism sending ``x_j`` to ``sign(w(j)) * x_{|w(j)|}``."""
    m = w.group.rank
    if f.nvars != m:
        raise ValueError("rank mismatch")
    window = w.window
    out: dict[Expo, Fraction] = {}
    for e, c in f.coeffs.items():
        new = [0] * m
        sign = 1
        for j, p in enumerate(e):
            if p:
                v = window[j]
                new[abs(v) - 1] = p
                if v < 0 and p % 2:
                    sign = -sign
        out[tuple(new)] = sign * c
    return Polynomial(m, out)


def _divide_linear(f: Polynomial, a: int, b: int | None, s: int) -> Polynomial:
    """Exact division of ``f`` by ``x_a - s*x_b`` (or by ``x_a`` when b is None).

    Horner division with main variable ``x_a``; raises ArithmeticError when the
    remainder is nonzero, which signals a root-convention bug upstream.
    """
    m = f.nvars
    if b is None:
        out = {}
        for e, c in f.coeffs.items():
            if e[a - 1] == 0:
                raise ArithmeticError("inexact division by simple root")
            new = list(e)
            new[a - 1] -= 1
            out[tuple(new)] = c
        return Polynomial(m, out)
    # Group by the exponent of x_a:  f = sum_k f_k * x_a^k.
    layers: dict[int, dict[Expo, Fraction]] = {}
    for e, c in f.coeffs.items():
        k = e[a - 1]
        rest = list(e)
        rest[a - 1] = 0
        layers.setdefault(k, {})[tuple(rest)] = c
    if not layers:
        return Polynomial(m)
    top = max(layers)
    # Synthetic division: q_{k-1} = f_k + s * x_b * q_k, remainder f_0 + s*x_b*q_0.
    q: dict[int, Polynomial] = {}
    carry = Polynomial(m)
    for k in range(top, 0, -1):
        layer = Polynomial(m, layers.get(k, {}))
        q[k - 1] = layer + carry
        carry = _shift_mul(q[k - 1], b, s)
    remainder = Polynomial(m, layers.get(0, {})) + carry
    if not remainder.is_zero():
        raise ArithmeticError("inexact division by simple root")
    out: dict[Expo, Fraction] = {}
    for k, poly in q.items():
        for e, c in poly.coeffs.items():
            new = list(e)
            new[a - 1] += k
            out[tuple(new)] = out.get(tuple(new), 0) + c
    return Polynomial(m, out)


def _shift_mul(f: Polynomial, b: int, s: int) -> Polynomial:
    """Multiply by ``s * x_b`` (used by the synthetic division)."""
    out = {}
    for e, c in f.coeffs.items():
        new = list(e)
        new[b - 1] += 1
        out[tuple(new)] = s * c
    return Polynomial(f.nvars, out)


def simple_root(group: WeylGroup, i: int) -> Polynomial:
    m = group.rank
    if not 1 <= i <= m:
        raise ValueError("simple index out of range")
    if i < m:
        return variable(m, i) - variable(m, i + 1)
    if group.family == "B":
        return variable(m, m)
    return variable(m, m - 1) + variable(m, m)


def divided_difference(group: WeylGroup, i: int, f: Polynomial) -> Polynomial:
    """The operator ``(f - s_i . f) / alpha_i``; drops degree by exactly one."""
    m = group.rank
    if f.nvars != m:
        raise ValueError("rank mismatch")
    if not 1 <= i <= m:
        raise ValueError("simple index out of range")
    num = f - act(group.simple_reflections[i - 1], f)
    if num.is_zero():
        return num
    if i < m:
        return _divide_linear(num, i, i + 1, 1)
    if group.family == "B":
        return _divide_linear(num, m, None, 1)
    return _divide_linear(num, m - 1, m, -1)


def divided_difference_word(
    group: WeylGroup, word: Iterable[int], f: Polynomial
) -> Polynomial:
    """Compose divided differences along a word, rightmost letter applied first.

    For a reduced word of ``w`` the result depends only on ``w`` (the braid
    relations hold for these operators); this is exercised by the test suite,
    not assumed here.
    """
    for i in reversed(tuple(word)):
        f = divided_difference(group, i, f)
        if f.is_zero():
            return f
    return f
