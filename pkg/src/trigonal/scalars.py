"""Exact field scalars.

Three variants are supported:

* rationals, represented by ``gmpy2.mpq`` (``fractions.Fraction`` fallback) —
  always in lowest terms with positive denominator;
* quadratic-extension elements ``a + b*sqrt(delta)`` with ``delta`` a fixed
  square-free integer that is not a perfect square;
* prime-field elements modulo an odd prime ``p``, stored in ``[0, p)``.

A small field-descriptor object per variant centralizes coercion so matrices
and the CLI can validate that entries share one variant.
"""

from fractions import Fraction
from math import isqrt

from .errors import InvalidInput
from .intutil import squarefree_split

try:
    from gmpy2 import mpq as rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    rat = Fraction

_RAT_TYPES = (int, type(rat(0)), Fraction)

ZERO = rat(0)
ONE = rat(1)


def is_rational(x):
    return isinstance(x, _RAT_TYPES)


def sinv(b):
    """Exact scalar inverse that never produces floats: bare ints are
    interpreted as rational integers."""
    if isinstance(b, int):
        if b == 1:
            return 1
        if b == -1:
            return -1
        return rat(1, b)
    if isinstance(b, (QuadExt, FpElt)):
        return b.inverse()
    return 1 / b


def sdiv(a, b):
    """Exact scalar division (see sinv)."""
    if isinstance(b, int):
        if b == 1:
            return a
        if b == -1:
            return -a
    return a * sinv(b)


def sqrt_rational(q):
    """Exact square root of a rational, or None if q is not a square."""
    q = rat(q)
    if q < 0:
        return None
    n, d = int(q.numerator), int(q.denominator)
    r = isqrt(n * d)
    if r * r != n * d:
        return None
    return rat(r, d)


def rational_square_split(q):
    """Write a nonzero rational q = s^2 * delta with delta a square-free
    integer; return (s, delta)."""
    q = rat(q)
    if not q:
        raise InvalidInput("cannot square-split 0")
    sign = 1 if q > 0 else -1
    n, d = int(abs(q).numerator), int(abs(q).denominator)
    r, delta0 = squarefree_split(n * d)
    return rat(r, d), sign * delta0


class QuadExt:
    """Element a + b*sqrt(delta) of a real or imaginary quadratic field."""

    __slots__ = ("a", "b", "delta")

    def __init__(self, a, b=0, delta=None):
        if delta is None:
            raise InvalidInput("QuadExt requires delta")
        self.a = rat(a)
        self.b = rat(b)
        self.delta = int(delta)

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.delta == self.delta or not other.b:
                return QuadExt(other.a, other.b, self.delta)
            if not self.b:
                return None  # handled by caller re-lifting self
            raise InvalidInput(
                f"mixed quadratic extensions sqrt({self.delta}) vs sqrt({other.delta})")
        if is_rational(other):
            return QuadExt(other, 0, self.delta)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.delta)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.delta)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.delta)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + self.delta * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.delta)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.delta)

    def norm(self):
        return self.a * self.a - self.delta * self.b * self.b

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self.a / n, -self.b / n, self.delta)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        if is_rational(other):
            return QuadExt(other, 0, self.delta) * self.inverse()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("QuadExt power requires a non-negative int")
        out = QuadExt(1, 0, self.delta)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.delta != self.delta and self.b and other.b:
                return False
            return self.a == other.a and self.b == other.b
        if is_rational(other):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.delta))

    def __str__(self):
        if not self.b:
            return str(self.a)
        root = f"sqrt({self.delta})"
        bpart = root if self.b == 1 else (f"-{root}" if self.b == -1
                                          else f"{self.b}*{root}")
        if not self.a:
            return bpart
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{bpart}"

    __repr__ = __str__


class FpElt:
    """Element of the prime field Z/pZ, normalized to [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, FpElt):
            if other.p != self.p:
                raise InvalidInput(f"mixed prime fields F{self.p} vs F{other.p}")
            return other
        if isinstance(other, int):
            return FpElt(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElt(self.v + o.v, self.p)

    __radd__ = __add__

    def __neg__(self):
        return FpElt(-self.v, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElt(self.v - o.v, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElt(self.v * o.v, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if not self.v:
            raise ZeroDivisionError("FpElt division by zero")
        return FpElt(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("FpElt power requires a non-negative int")
        return FpElt(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __str__(self):
        return str(self.v)

    __repr__ = __str__


# --- field descriptors -------------------------------------------------------

class RationalField:
    name = "Q"
    char = 0

    def zero(self):
        return rat(0)

    def one(self):
        return rat(1)

    def coerce(self, x):
        if is_rational(x):
            return rat(x)
        if isinstance(x, QuadExt) and not x.b:
            return rat(x.a)
        raise InvalidInput(f"cannot coerce {x!r} into Q")

    def is_element(self, x):
        return is_rational(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class QuadraticField:
    char = 0

    def __init__(self, delta):
        delta = int(delta)
        if delta in (0, 1):
            raise InvalidInput("delta must not be 0 or 1")
        _, sf = squarefree_split(delta)
        if abs(sf) != abs(delta):
            raise InvalidInput(f"delta={delta} is not square-free")
        self.delta = delta
        self.name = f"Q(sqrt({delta}))"

    def zero(self):
        return QuadExt(0, 0, self.delta)

    def one(self):
        return QuadExt(1, 0, self.delta)

    def coerce(self, x):
        if is_rational(x):
            return QuadExt(x, 0, self.delta)
        if isinstance(x, QuadExt):
            if x.delta == self.delta or not x.b:
                return QuadExt(x.a, x.b, self.delta)
        raise InvalidInput(f"cannot coerce {x!r} into {self.name}")

    def is_element(self, x):
        return isinstance(x, QuadExt) and (x.delta == self.delta or not x.b)

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.delta == self.delta

    def __hash__(self):
        return hash(("quad", self.delta))

    def __repr__(self):
        return self.name


class PrimeField:
    def __init__(self, p):
        from .intutil import is_prime
        if p == 2 or not is_prime(p):
            raise InvalidInput(f"{p} is not an odd prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"

    def zero(self):
        return FpElt(0, self.p)

    def one(self):
        return FpElt(1, self.p)

    def coerce(self, x):
        if isinstance(x, int):
            return FpElt(x, self.p)
        if isinstance(x, FpElt):
            if x.p != self.p:
                raise InvalidInput(f"cannot move F{x.p} element into F{self.p}")
            return x
        if is_rational(x):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise InvalidInput(f"denominator of {x} vanishes mod {self.p}")
            return FpElt(num, self.p) / FpElt(den, self.p)
        raise InvalidInput(f"cannot coerce {x!r} into F{self.p}")

    def is_element(self, x):
        return isinstance(x, FpElt) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def field_of(x):
    if is_rational(x):
        return QQ
    if isinstance(x, QuadExt):
        return QuadraticField(x.delta)
    if isinstance(x, FpElt):
        return PrimeField(x.p)
    raise InvalidInput(f"not a scalar: {x!r}")


def common_field(values):
    """Field descriptor shared by all values; raises InvalidInput on a mix.

    Rationals absorb into a quadratic extension when one is present.
    """
    field = None
    for v in values:
        f = field_of(v)
        if field is None or field == f:
            field = f
            continue
        if isinstance(field, RationalField) and isinstance(f, QuadraticField):
            field = f
        elif isinstance(field, QuadraticField) and isinstance(f, RationalField):
            continue
        else:
            raise InvalidInput(f"mixed field variants: {field} vs {f}")
    return field if field is not None else QQ
