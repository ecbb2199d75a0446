"""Exact univariate polynomials and rational functions over the integers.

Coefficients are stored lowest degree first as Python ints, so nothing ever
overflows.  The zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    >>> p = IntPolynomial([1, 1]) * IntPolynomial([1, 1, 1])
    >>> p.coeffs
    (1, 2, 2, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, value):
        return cls([value])

    # -- basic accessors ---------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return IntPolynomial([c * x for x in self.coeffs])

    def shift(self, k):
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    # -- division ----------------------------------------------------------

    def divmod_exact(self, other):
        """Division over Q, requiring the quotient to be integral.

        Raises ValueError if the quotient has non-integer coefficients.
        """
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        lc = other.lc
        q = [0] * max(len(r) - d, 0)
        for k in range(len(r) - 1 - d, -1, -1):
            c = r[k + d]
            if c == 0:
                continue
            if c % lc:
                raise ValueError("quotient is not integral")
            qk = c // lc
            q[k] = qk
            for j, y in enumerate(other.coeffs):
                r[k + j] -= qk * y
        return IntPolynomial(q), IntPolynomial(r)

    def __floordiv__(self, other):
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        """True iff self divides other over Z[t] (with integral quotient)."""
        if self.is_zero():
            return other.is_zero()
        try:
            _, r = other.divmod_exact(self)
        except ValueError:
            return False
        return r.is_zero()

    def pseudo_rem(self, other):
        """Pseudo-remainder: lc(other)**(deg self - deg other + 1) * self mod other."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero")
        r = list(self.coeffs)
        d = other.degree
        lc = other.lc
        delta = len(r) - 1 - d
        if delta < 0:
            return IntPolynomial(r)
        for k in range(delta, -1, -1):
            c = r[k + d] if k + d < len(r) else 0
            r = [lc * x for x in r]
            if c:
                for j, y in enumerate(other.coeffs):
                    r[k + j] -= c * y
            r = r[: k + d]
        return IntPolynomial(r)

    # -- content and normalization ----------------------------------------

    def content(self):
        return reduce(gcd, self.coeffs, 0)

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPolynomial([x // c for x in self.coeffs])

    def monic_sign(self):
        """Make the leading coefficient positive without dividing content."""
        return -self if self.lc < 0 else self

    def trailing_zeros(self):
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k

    # -- calculus and transforms ------------------------------------------

    def derivative(self):
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def reverse(self, degree=None):
        """t**degree * p(1/t); degree defaults to deg p."""
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        c = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntPolynomial(c[::-1])

    def negate_variable(self):
        """p(-t)."""
        return IntPolynomial([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def compose(self, other):
        other = _coerce(other)
        result = IntPolynomial()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    # -- evaluation --------------------------------------------------------

    def __call__(self, x):
        if isinstance(x, Fraction):
            num, den = self.homogeneous(x.numerator, x.denominator)
            return Fraction(num, den)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def homogeneous(self, p, q):
        """Return (q**d * self(p/q), q**d) with d = deg self, all integers."""
        d = self.degree
        if d < 0:
            return 0, 1
        acc = 0
        qpow = 1
        # Horner in homogeneous form: sum c_k p^k q^(d-k)
        for c in reversed(self.coeffs):
            acc = acc * p + c * qpow
            qpow *= q
        return acc, qpow // q if d >= 0 else 1

    def sign_at(self, x):
        """Exact sign of self(x) for rational x."""
        x = Fraction(x)
        v, _ = self.homogeneous(x.numerator, x.denominator)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, direction=1):
        if not self.coeffs:
            return 0
        s = 1 if self.lc > 0 else -1
        if direction < 0 and self.degree % 2:
            s = -s
        return s

    def to_list(self):
        return list(self.coeffs)


def _coerce(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPolynomial")


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def bracket(*ks):
    """[k1, k2, ...] = prod (1 + t + ... + t^(k-1))."""
    out = ONE
    for k in ks:
        out = out * IntPolynomial([1] * k)
    return out


def poly_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.primitive()


def poly_lcm(a, b):
    g = poly_gcd(a, b)
    return (a * b // g).primitive()


def squarefree_part(p):
    """p / gcd(p, p') made primitive; zero stays zero."""
    if p.degree <= 0:
        return p.primitive() if not p.is_zero() else p
    g = poly_gcd(p, p.derivative())
    return (p.primitive() // g).primitive()


# -- cyclotomic polynomials --------------------------------------------------

_CYCLOTOMIC_CACHE = {}


def cyclotomic(n):
    """The n-th cyclotomic polynomial Phi_n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n not in _CYCLOTOMIC_CACHE:
        p = IntPolynomial([-1] + [0] * (n - 1) + [1])  # t^n - 1
        for d in range(1, n):
            if n % d == 0:
                p = p // cyclotomic(d)
        _CYCLOTOMIC_CACHE[n] = p
    return _CYCLOTOMIC_CACHE[n]


def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def bracket_cyclotomic_exponents(k):
    """[k] = prod_{d | k, d > 1} Phi_d; returns {d: 1}."""
    return {d: 1 for d in range(2, k + 1) if k % d == 0}


class RationalFunction:
    """Reduced quotient of integer polynomials.

    The pair is coprime over Q, their common integer content is removed, and
    the denominator has positive lowest nonzero coefficient.  Growth series
    (value 1 at t=0) therefore end up with primitive numerator and
    denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE, reduce=True):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(_coerce(other))
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({list(self.num)}, {list(self.den)})"

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * _as_rf(other).inverse()

    def __call__(self, x):
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole")
        return self.num(x) / d

    def substitute_inverse(self):
        """f(1/t) as a rational function (coefficient reversal with padding)."""
        d = max(self.num.degree, self.den.degree)
        return RationalFunction(self.num.reverse(d), self.den.reverse(d))


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_coerce(x))


def _normalize(num, den):
    if num.is_zero():
        return ZERO, ONE
    g = poly_gcd(num, den)
    num, den = num // g, den // g
    cn, cd = num.content(), den.content()
    k = gcd(cn, cd)
    num = IntPolynomial([x // k for x in num])
    den = IntPolynomial([x // k for x in den])
    low = den[den.trailing_zeros()]
    if low < 0:
        num, den = -num, -den
    return num, den
