"""Exact arithmetic: rational polynomials and dense integer/rational matrices.

Scalars are :class:`fractions.Fraction` throughout (always reduced, positive
denominator).  Matrices are plain row-major nested lists; integer matrices
hold Python ints so nothing can overflow.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]
MatrixZ = list  # list[list[int]]
MatrixQ = list  # list[list[Fraction]]

__all__ = [
    "Rational",
    "Polynomial",
    "poly_divmod",
    "poly_eval",
    "identity",
    "mat_mul",
    "matrix_power_traces",
    "poly_apply",
    "fraction_free_rank",
    "matrix_minimal_polynomial",
    "charpoly_from_traces",
    "rational_str",
]


def rational_str(q: Scalar) -> str:
    """Serialize an exact scalar as ``"num/den"`` (den omitted when 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Polynomial:
    """Immutable univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self.coeffs[-1]
        return Polynomial(c / lc for c in self.coeffs)

    def has_parity(self, parity: int) -> bool:
        """True if every nonzero coefficient sits at a degree ``≡ parity (mod 2)``."""
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 != parity % 2)

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, _as_poly(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _as_poly(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _as_poly(other))[1]

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[rational_str(c) for c in self.coeffs]!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = rational_str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{rational_str(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(obj):
    if isinstance(obj, Polynomial):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Polynomial((obj,))
    return NotImplemented


def poly_divmod(dividend: Polynomial, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division: ``dividend == divisor*q + r`` with ``deg r < deg divisor``."""
    if divisor.is_zero():
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    rem = list(dividend.coeffs)
    dd = divisor.degree
    lc = divisor.leading
    if len(rem) - 1 < dd:
        return Polynomial(), Polynomial(rem)
    quot = [Fraction(0)] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd] / lc
        quot[shift] = c
        if c:
            for i, b in enumerate(divisor.coeffs):
                rem[shift + i] -= c * b
    return Polynomial(quot), Polynomial(rem[:dd])


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Dense matrices
# ---------------------------------------------------------------------------


def identity(n: int) -> MatrixZ:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def matrix_power_traces(m: Sequence[Sequence[int]], t: int) -> list[int]:
    """Return ``[tr M^0, tr M^1, ..., tr M^t]`` exactly."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    n = len(m)
    traces = [n]
    power = identity(n)
    for _ in range(t):
        power = mat_mul(power, m)
        traces.append(sum(power[i][i] for i in range(n)))
    return traces


def poly_apply(m: Sequence[Sequence[int]], p: Polynomial) -> MatrixQ:
    """Evaluate ``p(M)`` exactly.

    Denominators are cleared first so the Horner loop runs over integers.
    """
    n = len(m)
    if p.is_zero():
        return [[Fraction(0)] * n for _ in range(n)]
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    acc = [[0] * n for _ in range(n)]
    for c in reversed(ints):
        acc = mat_mul(acc, m)
        for i in range(n):
            acc[i][i] += c
    return [[Fraction(v, den) for v in row] for row in acc]


def _integer_rows(rows: Sequence[Sequence[Scalar]]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def fraction_free_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a (possibly rectangular) rational matrix by Bareiss elimination.

    Each row is scaled to integers first (row scaling preserves rank); every
    division in the elimination loop is exact.
    """
    m = _integer_rows(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pc = pr[c]
        for i in range(r + 1, n_rows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, n_cols):
                row[j] = (pc * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pc
        r += 1
    return r


def _content_reduce(vec: list[int], combo: list[int]) -> None:
    g = 0
    for v in vec:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    for v in combo:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        vec[:] = [v // g for v in vec]
        combo[:] = [v // g for v in combo]


def _krylov_dependency(powers, max_degree, symmetric):
    pivots: list[tuple[int, list[int], list[int]]] = []
    for j, pw in enumerate(powers):
        if symmetric:
            vec = [v for i, row in enumerate(pw) for v in row[i:]]
        else:
            vec = [v for row in pw for v in row]
        combo = [0] * j + [1]
        for col, pvec, pcombo in pivots:
            b = vec[col]
            if b == 0:
                continue
            a = pvec[col]
            vec = [a * x - b * y for x, y in zip(vec, pvec)]
            combo = [a * x - b * y for x, y in zip_longest(combo, pcombo, fillvalue=0)]
            _content_reduce(vec, combo)
        lead = next((i for i, v in enumerate(vec) if v), None)
        if lead is None:
            return combo
        if max_degree is not None and j >= max_degree:
            # M^0..M^j independent => degree >= j+1 > max_degree
            return None
        pivots.append((lead, vec, combo))
    raise RuntimeError("power stream ended before a dependency was found")


def matrix_minimal_polynomial(
    m: Sequence[Sequence[int]] | None,
    max_degree: int | None = None,
    powers: Iterable[Sequence[Sequence[int]]] | None = None,
    symmetric: bool = False,
) -> Polynomial | None:
    """Monic minimal polynomial of an integer matrix.

    Finds the first linear dependency among vec(I), vec(M), vec(M^2), ...
    by incremental integer elimination (cross-multiplication followed by
    content removal), tracking the combination that produced each row.

    ``powers`` may supply M^0, M^1, ... (e.g. from a cache), in which case
    ``m`` is ignored.  ``symmetric`` vectorizes only the upper triangle.
    With ``max_degree`` set, returns None as soon as the degree is known to
    exceed it.
    """
    if powers is None:
        powers = _power_stream(m)
    combo = _krylov_dependency(powers, max_degree, symmetric)
    if combo is None:
        return None
    lead = combo[-1]
    return Polynomial(Fraction(c, lead) for c in combo)


def _power_stream(m: Sequence[Sequence[int]]):
    n = len(m)
    power = identity(n)
    for _ in range(n + 2):
        yield power
        power = mat_mul(power, m)


def charpoly_from_traces(traces: Sequence[int], n: int) -> Polynomial:
    """Characteristic polynomial of an n×n matrix from ``tr M^0 .. tr M^n``.

    Newton's identities ``k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i``;
    each division by k is exact over the integers.
    """
    if len(traces) < n + 1:
        raise ValueError("need traces of powers 0..n")
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * traces[i]
            s += term if i % 2 == 1 else -term
        e.append(s / k)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = e[k] if k % 2 == 0 else -e[k]
    return Polynomial(coeffs)
