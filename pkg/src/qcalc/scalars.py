"""Scalar carriers used as the field of dimensionless values.

Each carrier is a small immutable object that knows how to do arithmetic on
its own raw values; the values themselves are plain Python objects
(``Fraction``, ``int`` residues, :class:`GaussianRational`, ``float``).
Quantities pair one of these values with a dimension and keep a reference to
the carrier so that mixing carriers can be detected.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroInverseError
from .report import CheckReport, Violation

__all__ = [
    "ScalarKind",
    "ScalarField",
    "ExactRational",
    "PrimeField",
    "ComplexRational",
    "Float64",
    "GaussianRational",
    "scalar_nth_root",
    "scalar_field_selfcheck",
    "parse_rational",
    "is_prime",
]

_RATIONAL_RE = re.compile(r"^([+-]?)([0-9]+)(?:\.([0-9]+)|/([0-9]+))?$")
# a, bi, a+bi, a-bi, i, -i; components are unsigned rational literals
_COMPLEX_RE = re.compile(
    r"^(?:(?P<re>[+-]?[0-9]+(?:\.[0-9]+|/[0-9]+)?)"
    r"(?P<im>[+-](?:[0-9]+(?:\.[0-9]+|/[0-9]+)?)?i)?"
    r"|(?P<imonly>[+-]?(?:[0-9]+(?:\.[0-9]+|/[0-9]+)?)?i))$"
)


class ScalarKind(enum.Enum):
    EXACT_RATIONAL = "exact-rational"
    PRIME_FIELD = "prime-field"
    COMPLEX_RATIONAL = "complex-rational"
    FLOAT64 = "float64"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def parse_rational(text: str) -> Fraction:
    """Parse an integer, decimal fraction or ``a/b`` literal exactly."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, whole, frac, den = m.groups()
    if den is not None:
        if int(den) == 0:
            raise ZeroInverseError(f"zero denominator in {text!r}")
        value = Fraction(int(whole), int(den))
    elif frac is not None:
        value = Fraction(int(whole + frac), 10 ** len(frac))
    else:
        value = Fraction(int(whole))
    return -value if sign == "-" else value


def _format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _iroot(k: int, n: int) -> int:
    """Floor of the real n-th root of a non-negative integer."""
    if k < 2:
        return k
    x = 1 << -(-k.bit_length() // n)
    while True:
        y = ((n - 1) * x + k // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def _exact_iroot(k: int, n: int) -> int | None:
    r = _iroot(k, n)
    return r if r**n == k else None


def _fraction_root(x: Fraction, n: int) -> Fraction | None:
    if x < 0:
        if n % 2 == 0:
            return None
        r = _fraction_root(-x, n)
        return None if r is None else -r
    num = _exact_iroot(x.numerator, n)
    den = _exact_iroot(x.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _smallest_prime_factor(n: int) -> int:
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return d
    return n


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational components."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __str__(self):
        if self.im == 0:
            return _format_fraction(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = _format_fraction(self.im) + "i"
        if self.re == 0:
            return im
        if not im.startswith("-"):
            im = "+" + im
        return _format_fraction(self.re) + im


class ScalarField(ABC):
    """A field structure on some carrier of raw Python values.

    Subclasses provide ``zero``, ``one`` and the four primitive operations.
    ``inv`` raises :class:`ZeroInverseError` on zero; ``nth_root`` returns
    ``None`` when the carrier has no root.
    """

    kind: ScalarKind
    inexact = False

    @property
    @abstractmethod
    def zero(self): ...

    @property
    @abstractmethod
    def one(self): ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def inv(self, a): ...

    @abstractmethod
    def nth_root(self, x, n: int): ...

    @abstractmethod
    def coerce(self, x):
        """Convert an int, Fraction or carrier value into the carrier."""

    @abstractmethod
    def parse(self, text: str):
        """Parse a scalar literal."""

    @abstractmethod
    def random(self, rng: random.Random): ...

    def format(self, x) -> str:
        return str(x)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    def close(self, a, b, rel: float = 1e-12) -> bool:
        return self.eq(a, b)

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def pow(self, x, k: int):
        if k < 0:
            x, k = self.inv(x), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def from_fraction(self, x: Fraction):
        return self.div(self.coerce(x.numerator), self.coerce(x.denominator))

    def elements(self):
        raise TypeError(f"{self!r} is not a finite carrier")


@dataclass(frozen=True)
class ExactRational(ScalarField):
    """Arbitrary-precision rationals, always in lowest terms."""

    kind = ScalarKind.EXACT_RATIONAL

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroInverseError("inverse of zero")
        return 1 / a

    def nth_root(self, x, n):
        return _fraction_root(x, n)

    def coerce(self, x):
        if isinstance(x, (float, complex, GaussianRational)):
            raise TypeError(f"cannot use {x!r} as an exact rational")
        return Fraction(x)

    def parse(self, text):
        return parse_rational(text)

    def format(self, x):
        return _format_fraction(x)

    def random(self, rng):
        return Fraction(rng.randint(-20, 20), rng.randint(1, 12))


@dataclass(frozen=True)
class PrimeField(ScalarField):
    """Integers modulo a prime ``p``, represented as ``0..p-1``."""

    p: int
    kind = ScalarKind.PRIME_FIELD

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"PrimeField requires a prime modulus, got {self.p!r}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroInverseError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, x, k):
        if k < 0:
            x, k = self.inv(x), -k
        return pow(x, k, self.p)

    def nth_root(self, x, n):
        for r in range(self.p):
            if pow(r, n, self.p) == x:
                return r
        return None

    def coerce(self, x):
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot use {x!r} as an element of GF({self.p})")
        return x % self.p

    def from_fraction(self, x):
        return self.div(x.numerator % self.p, x.denominator % self.p)

    def parse(self, text):
        return self.from_fraction(parse_rational(text))

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)


def _gauss_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gauss_pow(a, n):
    result = (1, 0)
    while n:
        if n & 1:
            result = _gauss_mul(result, a)
        a = _gauss_mul(a, a)
        n >>= 1
    return result


@dataclass(frozen=True)
class ComplexRational(ScalarField):
    """Gaussian rationals Q(i).

    Roots are searched only inside Q(i); no algebraic extension is made.
    """

    kind = ScalarKind.COMPLEX_RATIONAL

    @property
    def zero(self):
        return GaussianRational(Fraction(0), Fraction(0))

    @property
    def one(self):
        return GaussianRational(Fraction(1), Fraction(0))

    def add(self, a, b):
        return GaussianRational(a.re + b.re, a.im + b.im)

    def mul(self, a, b):
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)

    def neg(self, a):
        return GaussianRational(-a.re, -a.im)

    def inv(self, a):
        norm = a.re * a.re + a.im * a.im
        if norm == 0:
            raise ZeroInverseError("inverse of zero")
        return GaussianRational(a.re / norm, -a.im / norm)

    def coerce(self, x):
        if isinstance(x, GaussianRational):
            return GaussianRational(Fraction(x.re), Fraction(x.im))
        if isinstance(x, tuple):
            return GaussianRational(Fraction(x[0]), Fraction(x[1]))
        if isinstance(x, (float, complex)):
            raise TypeError(f"cannot use {x!r} as an exact complex rational")
        return GaussianRational(Fraction(x), Fraction(0))

    def parse(self, text):
        m = _COMPLEX_RE.match(text.strip().replace(" ", ""))
        if not m:
            raise ValueError(f"not a complex rational literal: {text!r}")
        re_part = Fraction(0)
        im_text = m.group("imonly")
        if m.group("re") is not None:
            re_part = parse_rational(m.group("re"))
            im_text = m.group("im")
        im_part = Fraction(0)
        if im_text:
            coeff = im_text[:-1]
            if coeff in ("", "+"):
                im_part = Fraction(1)
            elif coeff == "-":
                im_part = Fraction(-1)
            else:
                im_part = parse_rational(coeff)
        return GaussianRational(re_part, im_part)

    def random(self, rng):
        return GaussianRational(
            Fraction(rng.randint(-12, 12), rng.randint(1, 8)),
            Fraction(rng.randint(-12, 12), rng.randint(1, 8)),
        )

    def all_nth_roots(self, x: GaussianRational, n: int) -> list[GaussianRational]:
        """Every n-th root of ``x`` lying in Q(i), sorted by (re, im) descending."""
        if x.re == 0 and x.im == 0:
            return [self.zero]
        roots = {x}
        remaining = n
        while remaining > 1:
            q = _smallest_prime_factor(remaining)
            remaining //= q
            step = set()
            for w in roots:
                step.update(self._prime_roots(w, q))
            roots = step
            if not roots:
                return []
        return sorted(roots, key=lambda r: (r.re, r.im), reverse=True)

    def nth_root(self, x, n):
        roots = self.all_nth_roots(x, n)
        # canonical choice: largest real part, then largest imaginary part
        return roots[0] if roots else None

    def _prime_roots(self, z: GaussianRational, q: int) -> list[GaussianRational]:
        if q == 2:
            return self._square_roots(z)
        # scale to a Gaussian integer: z = W / D**q with W integral
        d = math.lcm(z.re.denominator, z.im.denominator)
        w = (int(z.re * d**q), int(z.im * d**q))
        norm = w[0] ** 2 + w[1] ** 2
        m = _exact_iroot(norm, q)
        if m is None:
            return []
        found = []
        bound = math.isqrt(m)
        for a in range(-bound, bound + 1):
            b2 = m - a * a
            b = math.isqrt(b2)
            if b * b != b2:
                continue
            for bb in {b, -b}:
                if _gauss_pow((a, bb), q) == w:
                    found.append(GaussianRational(Fraction(a, d), Fraction(bb, d)))
        return found

    def _square_roots(self, z: GaussianRational) -> list[GaussianRational]:
        a, b = z.re, z.im
        if b == 0:
            if a >= 0:
                r = _fraction_root(a, 2)
                return [] if r is None else [GaussianRational(r, Fraction(0)), GaussianRational(-r, Fraction(0))]
            r = _fraction_root(-a, 2)
            return [] if r is None else [GaussianRational(Fraction(0), r), GaussianRational(Fraction(0), -r)]
        modulus = _fraction_root(a * a + b * b, 2)
        if modulus is None:
            return []
        x = _fraction_root((a + modulus) / 2, 2)
        if x is None or x == 0:
            return []
        y = b / (2 * x)
        return [GaussianRational(x, y), GaussianRational(-x, -y)]

    def format(self, x):
        return str(x)


@dataclass(frozen=True)
class Float64(ScalarField):
    """IEEE double precision.  Approximate: excluded from exact axiom suites."""

    kind = ScalarKind.FLOAT64
    inexact = True

    @property
    def zero(self):
        return 0.0

    @property
    def one(self):
        return 1.0

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroInverseError("inverse of zero")
        return 1.0 / a

    def pow(self, x, k):
        if k < 0 and x == 0:
            raise ZeroInverseError("inverse of zero")
        return x**k

    def close(self, a, b, rel=1e-12):
        return math.isclose(a, b, rel_tol=rel, abs_tol=rel)

    def nth_root(self, x, n):
        if x == 0:
            return 0.0
        if n == 1:
            return x
        if x < 0:
            if n % 2 == 0:
                return None
            return -self.nth_root(-x, n)
        if n == 2:
            return math.sqrt(x)
        return x ** (1.0 / n)

    def coerce(self, x):
        if isinstance(x, (complex, GaussianRational)):
            raise TypeError(f"cannot use {x!r} as a float")
        return float(x)

    def from_fraction(self, x):
        return x.numerator / x.denominator

    def parse(self, text):
        return self.from_fraction(parse_rational(text))

    def format(self, x):
        return repr(x)

    def random(self, rng):
        return rng.uniform(-100.0, 100.0)


def scalar_nth_root(field: ScalarField, x, n: int):
    """Canonical n-th root of ``x`` in ``field``, or ``None`` if there is none.

    Exact rationals give the real root (sign of ``x`` for odd ``n``,
    non-negative for even ``n``); prime fields give the smallest residue;
    Gaussian rationals give the root of largest real, then imaginary, part.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"root degree must be a positive integer, got {n!r}")
    return field.nth_root(x, n)


def _sample_triples(samples):
    n = len(samples)
    if n <= 24:
        yield from itertools.product(samples, repeat=3)
        return
    for i in range(n):
        yield samples[i], samples[(i + 1) % n], samples[(i + 2) % n]
        yield samples[i], samples[(3 * i + 1) % n], samples[(7 * i + 2) % n]


def scalar_field_selfcheck(field: ScalarField, samples) -> CheckReport:
    """Check the field axioms on ``samples``.

    Small sample sets (at most 24 elements, e.g. a whole prime field up to
    GF(23)) are checked over every triple; larger sets over a deterministic
    family of 2n triples.  Inexact carriers compare with relative tolerance
    1e-12.
    """
    samples = [field.coerce(s) for s in samples]
    if not samples:
        raise ValueError("selfcheck needs at least one sample")
    eq = field.close if field.inexact else field.eq
    fmt = field.format
    report = CheckReport()
    found: dict[str, list[Violation]] = {}

    def fail(axiom, *witness, why=""):
        found.setdefault(axiom, []).append(Violation(axiom, tuple(fmt(w) for w in witness), why))

    zero, one = field.zero, field.one
    if eq(zero, one):
        fail("zero-ne-one", zero, one)
    for a in samples:
        if not eq(field.add(a, zero), a):
            fail("add-identity", a)
        if not eq(field.mul(a, one), a):
            fail("mul-identity", a)
        if not eq(field.add(a, field.neg(a)), zero):
            fail("add-inverse", a)
        if not field.is_zero(a) and not eq(field.mul(a, field.inv(a)), one):
            fail("mul-inverse", a)
    for a, b, c in _sample_triples(samples):
        if not eq(field.add(field.add(a, b), c), field.add(a, field.add(b, c))):
            fail("add-associative", a, b, c)
        if not eq(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c))):
            fail("mul-associative", a, b, c)
        if not eq(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c))):
            fail("distributive", a, b, c)
        if not eq(field.add(a, b), field.add(b, a)):
            fail("add-commutative", a, b)
        if not eq(field.mul(a, b), field.mul(b, a)):
            fail("mul-commutative", a, b)
    order = [
        "zero-ne-one", "add-commutative", "mul-commutative", "add-associative",
        "mul-associative", "distributive", "add-identity", "mul-identity",
        "add-inverse", "mul-inverse",
    ]
    for axiom in order:
        report.violations.extend(found.get(axiom, []))
    return report
