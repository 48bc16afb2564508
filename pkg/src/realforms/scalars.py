"""Exact arithmetic in the field F = Q(sqrt3)(i).

Every number that appears in this package -- structure constants, bilinear
form entries, Killing traces, root eigenvalues -- lives in F.  A Scalar
stores four rationals (a, b, c, d) and represents

    a + b*sqrt(3) + (c + d*sqrt(3)) * i.

The cube root of unity omega = -1/2 + (sqrt3/2) i is a unit of F, which is
what makes the Okubo product expressible here.  Signs of real elements are
decided exactly (no floating point anywhere).
"""

from __future__ import annotations

from fractions import Fraction

try:  # gmpy2 rationals are a large constant factor faster; optional
    from gmpy2 import mpq as Rat  # type: ignore
except ImportError:  # pragma: no cover
    Rat = Fraction

_R0 = Rat(0)
_R1 = Rat(1)


def _rat(x) -> "Rat":
    if isinstance(x, (int, str)):
        return Rat(x)
    if isinstance(x, Fraction):
        return Rat(x.numerator, x.denominator)
    return Rat(x)


class Scalar:
    """An element a + b*r3 + (c + d*r3)*i of Q(sqrt3, i), exact."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _rat(a)
        self.b = _rat(b)
        self.c = _rat(c)
        self.d = _rat(d)

    # -- construction helpers -------------------------------------------

    @staticmethod
    def of(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return parse_scalar(x)
        return Scalar(x)

    # -- predicates ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_integer(self) -> bool:
        return self.is_rational() and self.a.denominator == 1

    # -- ring operations -------------------------------------------------

    def __add__(self, o: "Scalar") -> "Scalar":
        return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Scalar") -> "Scalar":
        return Scalar(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o: "Scalar") -> "Scalar":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        # fast path: right factor rational (very common: scaling)
        if not (b2 or c2 or d2):
            if not a2:
                return _ZERO
            return Scalar(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
        if not (b1 or c1 or d1):
            if not a1:
                return _ZERO
            return Scalar(a1 * a2, a1 * b2, a1 * c2, a1 * d2)
        return Scalar(
            a1 * a2 + 3 * b1 * b2 - c1 * c2 - 3 * d1 * d2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + 3 * b1 * d2 + c1 * a2 + 3 * d1 * b2,
            a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
        )

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of 0 in Q(sqrt3, i)")
        a, b, c, d = self.a, self.b, self.c, self.d
        # |z|^2 = x^2 + y^2 with x = a+b r3, y = c+d r3: a real element (e, f)
        e = a * a + 3 * b * b + c * c + 3 * d * d
        f = 2 * (a * b + c * d)
        # 1/(e + f r3) = (e - f r3)/(e^2 - 3 f^2)
        g = e * e - 3 * f * f
        ie, if_ = e / g, -f / g
        # conj(z) * (ie + if r3)
        return Scalar(
            a * ie + 3 * b * if_,
            a * if_ + b * ie,
            -(c * ie + 3 * d * if_),
            -(c * if_ + d * ie),
        )

    def __truediv__(self, o: "Scalar") -> "Scalar":
        if not (o.b or o.c or o.d):  # rational divisor
            if not o.a:
                raise ZeroDivisionError("division by 0")
            return Scalar(self.a / o.a, self.b / o.a, self.c / o.a, self.d / o.a)
        return self * o.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Scalar":
        """Complex conjugation (the involution fixing Q(sqrt3))."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    # -- order structure on the real subfield ----------------------------

    def sign(self) -> int:
        """Exact sign of a real element; raises on non-real input."""
        if self.c or self.d:
            raise ValueError("sign() of a non-real scalar")
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        s = a * a - 3 * b * b  # sign of (a + b r3)(a - b r3)
        if s == 0:
            raise ArithmeticError("sqrt3 is irrational; a^2 = 3 b^2 forces 0")
        # here a and b have opposite signs, so sign(a - b r3) = sign(a)
        return (1 if s > 0 else -1) * (1 if a > 0 else -1)

    def abs_real(self) -> "Scalar":
        return self if self.sign() >= 0 else -self

    # -- parts -----------------------------------------------------------

    def real(self) -> "Scalar":
        return Scalar(self.a, self.b)

    def imag(self) -> "Scalar":
        """The real element c + d*r3 (coefficient of i)."""
        return Scalar(self.c, self.d)

    # -- hashing / comparison / display ----------------------------------

    def __eq__(self, o) -> bool:
        if not isinstance(o, Scalar):
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def key(self):
        """Deterministic sort key (component order; not a field order)."""
        return (self.a, self.b, self.c, self.d)

    def __repr__(self) -> str:
        return f"Scalar({self.to_str()!r})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self) -> str:
        """Render as 'a + b*r3 + (c + d*r3)*i' with zero terms omitted."""
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            parts.append(f"{self.b}*r3")
        c, d = self.c, self.d
        if c and d:
            inner = f"{c} + {d}*r3".replace("+ -", "- ")
            parts.append(f"({inner})*i")
        elif c:
            parts.append(f"{c}*i")
        elif d:
            parts.append(f"{d}*r3*i")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def _is_scalar_like(tok: str) -> bool:
    return bool(tok) and (tok[0].isdigit() or tok[0] in "+-")


class _Parser:
    """Recursive-descent parser for the scalar text form.

    Accepts any +,-,* combination of rational literals, 'r3', 'i' and
    parenthesized subexpressions, which covers the canonical rendering.
    """

    def __init__(self, text: str):
        self.toks = self._lex(text)
        self.pos = 0

    @staticmethod
    def _lex(text: str):
        toks = []
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+-*()":
                toks.append(ch)
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and (text[j].isdigit() or text[j] == "/"):
                    j += 1
                toks.append(text[i:j])
                i = j
                continue
            if text.startswith("r3", i):
                toks.append("r3")
                i += 2
                continue
            if ch == "i":
                toks.append("i")
                i += 1
                continue
            raise ValueError(f"bad character {ch!r} in scalar literal")
        return toks

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Scalar:
        val = self.expr()
        if self.peek() is not None:
            raise ValueError("trailing tokens in scalar literal")
        return val

    def expr(self) -> Scalar:
        neg = False
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                neg = not neg
        val = self.term()
        if neg:
            val = -val
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> Scalar:
        val = self.factor()
        while self.peek() == "*":
            self.next()
            val = val * self.factor()
        return val

    def factor(self) -> Scalar:
        tok = self.peek()
        if tok == "(":
            self.next()
            val = self.expr()
            if self.next() != ")":
                raise ValueError("unbalanced parenthesis in scalar literal")
            return val
        if tok == "-":
            self.next()
            return -self.factor()
        if tok == "r3":
            self.next()
            return SQRT3
        if tok == "i":
            self.next()
            return IUNIT
        if tok is None:
            raise ValueError("unexpected end of scalar literal")
        self.next()
        return Scalar(Rat(tok))


def parse_scalar(text: str) -> Scalar:
    return _Parser(text).parse()


def sc(x) -> Scalar:
    """Coerce an int, Fraction, string or Scalar into a Scalar."""
    return Scalar.of(x)


def half(n: int = 1) -> Scalar:
    return Scalar(Rat(n, 2))


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
HALF = Scalar(Rat(1, 2))
SQRT3 = Scalar(0, 1)
IUNIT = Scalar(0, 0, 1)
OMEGA = Scalar(Rat(-1, 2), 0, 0, Rat(1, 2))  # primitive cube root of unity

_ZERO = ZERO
_ONE = ONE
