"""Exact arithmetic in one indeterminate ``q``.

``QPoly`` is a polynomial with integer coefficients, ``QRat`` a reduced
quotient of two of them and ``TSeries`` a truncated power series in a second
variable ``t`` whose coefficients are ``QRat``.  Everything is immutable and
uses Python integers, so there is no overflow and no floating point.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union


class NotPolynomial(ArithmeticError):
    """A rational function was expected to be a polynomial but is not."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    """Polynomial in q with integer coefficients, stored in ascending order."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, QRat):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QPoly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QRat):
            return NotImplemented
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return QRat(self, other)

    def __rtruediv__(self, other):
        return QRat(other, self)

    def __call__(self, q0):
        return eval_at(self, q0)

    def scale_int(self, c: int) -> "QPoly":
        return QPoly(c * x for x in self.coeffs)

    def exact_int_div(self, c: int) -> "QPoly":
        assert all(x % c == 0 for x in self.coeffs)
        return QPoly(x // c for x in self.coeffs)

    def primitive(self) -> "QPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return self.exact_int_div(c)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "QPoly":
        return cls(obj["coeffs"])


def _as_poly(x) -> QPoly | None:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    return None


Q = QPoly((0, 1))


def eval_at(p: QPoly, q0: int) -> int:
    """Exact integer value of ``p`` at ``q = q0`` (Horner)."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


def pseudo_divmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, int]:
    """Return ``(quot, rem, k)`` with ``lead(b)**k * a == quot*b + rem``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.lead
    if len(rem) - 1 < db:
        return QPoly(), a, 0
    quot = [0] * (len(rem) - db)
    k = 0
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        lr = rem[-1]
        if lr % lb == 0:
            f = lr // lb
        else:
            # scale everything by lead(b) to stay integral
            rem = [x * lb for x in rem]
            quot = [x * lb for x in quot]
            k += 1
            f = rem[-1] // lb
        quot[shift] += f
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= f * c
        while rem and rem[-1] == 0:
            rem.pop()
    return QPoly(quot), QPoly(rem), k


def divmod_exact(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Division with remainder; raises ``NotPolynomial`` if it needs fractions."""
    q, r, k = pseudo_divmod(a, b)
    if k:
        raise NotPolynomial("division leaves non-integer coefficients")
    return q, r


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Greatest common divisor over Z[q], primitive PRS.

    Normalized with positive leading coefficient; gcd(0, 0) = 0.
    """
    if a.is_zero():
        return _pos(b)
    if b.is_zero():
        return _pos(a)
    c = gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, r, _ = pseudo_divmod(a, b)
        a, b = b, r.primitive()
    return _pos(a.primitive().scale_int(c))


def _pos(p: QPoly) -> QPoly:
    return -p if p.lead < 0 else p


class QRat:
    """Reduced fraction num/den of integer polynomials in q.

    The denominator has positive leading coefficient and the two parts share
    no common factor in Z[q] (content included).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        num = _as_poly(num) if not isinstance(num, QRat) else num
        den = _as_poly(den) if not isinstance(den, QRat) else den
        if isinstance(num, QRat) or isinstance(den, QRat):
            r = _to_rat(num) / _to_rat(den)
            self.num, self.den, self._hash = r.num, r.den, None
            return
        if num is None or den is None:
            raise TypeError("QRat parts must be QPoly or int")
        if den.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = QPoly.const(1)
            else:
                g = poly_gcd(num, den)
                if g.coeffs != (1,):
                    num, _ = divmod_exact(num, g)
                    den, _ = divmod_exact(den, g)
                if den.lead < 0:
                    num, den = -num, -den
        self.num, self.den = num, den
        self._hash = None

    @classmethod
    def of(cls, x) -> "QRat":
        return _to_rat(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def __eq__(self, other):
        other = _to_rat(other) if not isinstance(other, QRat) else other
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QRat", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"QRat({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.is_polynomial():
            return format_poly(self.num)
        return f"{_wrap(self.num)}/{_wrap(self.den)}"

    def __neg__(self):
        return QRat(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = _to_rat(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_rat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _to_rat(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_polynomial() and other.is_polynomial():
            return QRat(self.num * other.num, _reduced=True)
        # cross-cancel first to keep the gcds small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, _ = divmod_exact(self.num, g1)
        d2, _ = divmod_exact(other.den, g1)
        n2, _ = divmod_exact(other.num, g2)
        d1, _ = divmod_exact(self.den, g2)
        num, den = n1 * n2, d1 * d2
        if den.lead < 0:
            num, den = -num, -den
        return QRat(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero QRat")
        num, den = self.den, self.num
        if den.lead < 0:
            num, den = -num, -den
        return QRat(num, den, _reduced=True)

    def __truediv__(self, other):
        other = _to_rat(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _to_rat(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self.num**k, self.den**k, _reduced=True)

    def eval_at(self, q0: int):
        """Value at an integer point as a ``fractions.Fraction``."""
        from fractions import Fraction

        return Fraction(eval_at(self.num, q0), eval_at(self.den, q0))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "QRat":
        return cls(QPoly.from_json(obj["num"]), QPoly.from_json(obj["den"]))


def _wrap(p: QPoly) -> str:
    text = format_poly(p)
    return text if sum(1 for c in p.coeffs if c) == 1 and not text.startswith("-") else f"({text})"


def _to_rat(x) -> QRat | None:
    if isinstance(x, QRat):
        return x
    if isinstance(x, QPoly):
        return QRat(x, _reduced=True)
    if isinstance(x, int):
        return QRat(QPoly.const(x), _reduced=True)
    return None


ZERO = QRat(0)
ONE = QRat(1)


def embed(p: Union[QPoly, int]) -> QRat:
    return _to_rat(p)


def as_polynomial(r: Union[QRat, QPoly]) -> QPoly:
    """The polynomial ``r`` is equal to, or ``NotPolynomial``."""
    if isinstance(r, QPoly):
        return r
    if r.is_polynomial():
        return r.num
    raise NotPolynomial(f"{r} is not a polynomial in q")


def format_poly(p: QPoly, var: str = "q") -> str:
    """Human form, highest degree first: ``q^2+q``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def prod(items: Iterable, start=None):
    acc = ONE if start is None else start
    for x in items:
        acc = acc * x
    return acc


class TSeries:
    """Power series in t with ``QRat`` coefficients, truncated after ``t**tmax``."""

    __slots__ = ("coeffs", "tmax")

    def __init__(self, coeffs: Sequence, tmax: int):
        if tmax < 0:
            raise ValueError("tmax must be non-negative")
        c = [_to_rat(x) for x in list(coeffs)[: tmax + 1]]
        if any(x is None for x in c):
            raise TypeError("TSeries coefficients must be QRat, QPoly or int")
        c += [ZERO] * (tmax + 1 - len(c))
        self.coeffs = tuple(c)
        self.tmax = tmax

    @classmethod
    def zero(cls, tmax: int) -> "TSeries":
        return cls((), tmax)

    @classmethod
    def const(cls, c, tmax: int) -> "TSeries":
        return cls((c,), tmax)

    @classmethod
    def monomial(cls, k: int, c, tmax: int) -> "TSeries":
        if k > tmax:
            return cls.zero(tmax)
        return cls([ZERO] * k + [c], tmax)

    @classmethod
    def geometric(cls, tmax: int, step: int = 1, c=1) -> "TSeries":
        """``c/(1 - t**step)`` truncated."""
        return cls([c if k % step == 0 else 0 for k in range(tmax + 1)], tmax)

    def _check(self, other: "TSeries"):
        if other.tmax != self.tmax:
            raise ValueError(f"tmax mismatch: {self.tmax} vs {other.tmax}")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __getitem__(self, k: int) -> QRat:
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.tmax == other.tmax and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.tmax))

    def __repr__(self):
        return f"TSeries({[str(c) for c in self.coeffs]}, tmax={self.tmax})"

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.tmax)

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check(other)
        return TSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.tmax)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TSeries):
            self._check(other)
            out = [ZERO] * (self.tmax + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j in range(self.tmax + 1 - i):
                    b = other.coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return TSeries(out, self.tmax)
        r = _to_rat(other)
        if r is None:
            return NotImplemented
        return TSeries([c * r for c in self.coeffs], self.tmax)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TSeries":
        """Multiply by ``t**k``."""
        return TSeries([ZERO] * k + list(self.coeffs), self.tmax)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]
