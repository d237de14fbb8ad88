"""Exact univariate polynomials over the integers and the f/h/gamma transforms.

Coefficients are stored in ascending degree. Rational arithmetic appears only
at evaluation points and inside gcd/division helpers used by the root counter
and by :class:`RationalFunction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


def _trim(coeffs: Sequence) -> list:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of ``t**i``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = (0,)):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", tuple(_trim(cs)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPolynomial":
        return cls(int(x) for x in data)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        if self.is_zero():
            return NEG_INF
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments, and works for
        any ring element supporting ``*`` and ``+`` (e.g. another polynomial)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, q: "IntPolynomial") -> "IntPolynomial":
        """Return ``self(q(t))``."""
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def derivative(self, k: int = 1) -> "IntPolynomial":
        p = self
        for _ in range(k):
            p = IntPolynomial([i * c for i, c in enumerate(p.coeffs)][1:] or [0])
        return p

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def reversed(self, n: int | None = None) -> "IntPolynomial":
        """``t**n * p(1/t)`` with ``n`` defaulting to the degree."""
        if n is None:
            n = len(self) - 1
        if n < len(self) - 1:
            raise ValueError("n below degree")
        return IntPolynomial(list(reversed(self.coeffs + (0,) * (n + 1 - len(self)))))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot coerce {x!r} to IntPolynomial")


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


T = IntPolynomial([0, 1])
ONE = IntPolynomial([1])
ONE_PLUS_T = IntPolynomial([1, 1])


# ---------------------------------------------------------------------------
# Rational-coefficient helpers (lists of Fractions, ascending degree)
# ---------------------------------------------------------------------------

def to_q(p) -> list[Fraction]:
    cs = p.coeffs if isinstance(p, IntPolynomial) else p
    return _trim([Fraction(c) for c in cs])


def q_is_zero(a: Sequence[Fraction]) -> bool:
    return len(a) == 1 and a[0] == 0


def q_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list, list]:
    a = _trim(a)
    b = _trim(b)
    if q_is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [Fraction(0)], r
    q = [Fraction(0)] * (len(r) - db)
    lb = b[-1]
    for k in range(len(r) - 1 - db, -1, -1):
        c = Fraction(r[k + db]) / lb
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return _trim(q), _trim(r[:db] or [0])


def q_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd over Q (zero if both inputs vanish)."""
    a, b = _trim(a), _trim(b)
    while not q_is_zero(b):
        _, r = q_divmod(a, b)
        a, b = b, r
    if q_is_zero(a):
        return a
    lead = a[-1]
    return [c / lead for c in a]


def q_to_primitive_int(a: Sequence[Fraction]) -> IntPolynomial:
    """Scale a rational polynomial to a primitive integer polynomial with
    positive leading coefficient."""
    a = _trim(a)
    den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in a), 1)
    return IntPolynomial(int(Fraction(c) * den) for c in a).primitive()


def exact_quotient(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Quotient ``p / q`` when the division is exact over the integers."""
    quo, rem = q_divmod(to_q(p), to_q(q))
    if not q_is_zero(rem) or any(c.denominator != 1 for c in quo):
        raise ValueError(f"{p} is not divisible by {q} over Z")
    return IntPolynomial(quo)


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient of integer polynomials.

    Normal form: gcd(num, den) is constant, the pair is jointly primitive and
    the lowest nonzero coefficient of ``den`` is positive (so power series
    denominators start with a positive constant).
    """

    num: IntPolynomial
    den: IntPolynomial

    def __init__(self, num, den=ONE):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", IntPolynomial())
            object.__setattr__(self, "den", ONE)
            return
        g = q_gcd(to_q(num), to_q(den))
        nq, _ = q_divmod(to_q(num), g)
        dq, _ = q_divmod(to_q(den), g)
        scale = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in nq + dq), 1)
        ni = [int(c * scale) for c in nq]
        di = [int(c * scale) for c in dq]
        cont = reduce(gcd, ni + di, 0)
        if next(c for c in di if c) < 0:
            cont = -cont
        object.__setattr__(self, "num", IntPolynomial(c // cont for c in ni))
        object.__setattr__(self, "den", IntPolynomial(c // cont for c in di))

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def reciprocal(self) -> "RationalFunction":
        return RationalFunction(self.den, self.num)

    def __str__(self):
        return f"({self.num}) / ({self.den})"


# ---------------------------------------------------------------------------
# f / h / gamma transforms
# ---------------------------------------------------------------------------

def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def eval_rational(p: IntPolynomial, x: Number) -> Fraction:
    return Fraction(p(Fraction(x)))


def derivative(p: IntPolynomial) -> IntPolynomial:
    return p.derivative()


def h_from_f(f: IntPolynomial, n: int) -> IntPolynomial:
    """h-polynomial from the f-polynomial of a complex with facets of size n.

    Uses ``h(t) = sum_i f_i t^i (1-t)^(n-i)``, which is the unique solution of
    ``(1+t)^n h(1/(1+t)) = t^n f(1/t)``.
    """
    if f.degree > n:
        raise ValueError(f"deg f = {f.degree} exceeds n = {n}")
    out = [0] * (n + 1)
    for i, fi in enumerate(f.coeffs):
        if not fi:
            continue
        m = n - i
        for j in range(m + 1):
            out[i + j] += fi * comb(m, j) * (-1) ** j
    return IntPolynomial(out)


def f_from_h(h: IntPolynomial, n: int) -> IntPolynomial:
    """Inverse of :func:`h_from_f`: ``f(t) = sum_i h_i t^i (1+t)^(n-i)``."""
    if h.degree > n:
        raise ValueError(f"deg h = {h.degree} exceeds n = {n}")
    out = [0] * (n + 1)
    for i, hi in enumerate(h.coeffs):
        m = n - i
        for j in range(m + 1):
            out[i + j] += hi * comb(m, j)
    return IntPolynomial(out)


def is_reciprocal(h: IntPolynomial) -> bool:
    return h.coeffs == h.coeffs[::-1]


def _gamma_basis(i: int, n: int) -> IntPolynomial:
    return IntPolynomial.monomial(i) * ONE_PLUS_T ** (n - 2 * i)


def gamma_from_h(h: IntPolynomial, n: int | None = None) -> IntPolynomial:
    """Coordinates of a reciprocal ``h`` in the basis ``t^i (1+t)^(n-2i)``.

    ``n`` defaults to ``deg h``. Reads off the ``t^i`` coefficient and peels
    the corresponding basis element, lowest degree first.
    """
    if h.is_zero():
        return IntPolynomial()
    if n is None:
        n = h.degree
    if n < h.degree:
        raise ValueError(f"deg h = {h.degree} exceeds n = {n}")
    cs = h.coeffs + (0,) * (n + 1 - len(h))
    if cs != cs[::-1]:
        raise ValueError(f"{h} is not reciprocal of degree {n}")
    rest = h
    gamma = []
    for i in range(n // 2 + 1):
        g = rest[i]
        gamma.append(g)
        if g:
            rest = rest - g * _gamma_basis(i, n)
    if not rest.is_zero():  # pragma: no cover - excluded by reciprocity
        raise ArithmeticError("gamma expansion left a remainder")
    return IntPolynomial(gamma)


def h_from_gamma(g: IntPolynomial, n: int) -> IntPolynomial:
    if g.degree > n // 2:
        raise ValueError(f"deg gamma = {g.degree} exceeds floor({n}/2)")
    out = IntPolynomial()
    for i, gi in enumerate(g.coeffs):
        if gi:
            out = out + gi * _gamma_basis(i, n)
    return out


def is_unimodal(h: IntPolynomial, n: int | None = None) -> bool:
    """Weakly increasing up to index floor(n/2), weakly decreasing from ceil(n/2).

    ``n`` defaults to deg h; pass it when trailing coefficients may vanish.
    """
    if n is None:
        n = max(h.degree, 0)
    if h.degree > n:
        raise ValueError(f"degree {h.degree} exceeds n = {n}")
    cs = [h[i] for i in range(n + 1)]
    up = all(cs[i] <= cs[i + 1] for i in range(n // 2))
    down = all(cs[i] >= cs[i + 1] for i in range((n + 1) // 2, n))
    return up and down


def charney_davis_quantity(h: IntPolynomial) -> int:
    """``(-1)^m h(-1)`` for a polynomial of even degree ``2m``."""
    d = h.degree
    if d == NEG_INF or d % 2:
        raise ValueError("Charney-Davis quantity needs even degree")
    return (-1) ** (d // 2) * h(-1)


def gamma_top_via_derivative(f: IntPolynomial, m: int) -> Fraction:
    """Top gamma coefficient of a 2m-dimensional Eulerian complex from ``f'(-1/2)``.

    Differentiating ``sum_i gamma_i t^i (1+t)^(2m-2i+1) = (t-1)^(2m+1) f(1/(t-1))``
    at ``t = -1`` and using ``f(-1/2) = 0`` gives
    ``gamma_m = (-1)^m 2^(2m-1) f'(-1/2)``.
    """
    val = Fraction(f.derivative()(Fraction(-1, 2)))
    return (-1) ** m * Fraction(2) ** (2 * m - 1) * val
