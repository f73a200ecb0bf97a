"""Exact scalar arithmetic over Q, cyclotomic extensions Q(zeta_N), and prime fields F_p.

Scalars are immutable and canonical: equality is plain comparison, and every
value is safe to hash and sort.  Rationals ride on ``fractions.Fraction``;
an element of Q(zeta_N) is its coefficient vector on the power basis
1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial;
an element of F_p is a residue in range(p).  No floating point anywhere.

>>> F = make_field(("cyclotomic", 4))
>>> z = F.zeta
>>> z * z
c(-1)
>>> make_field(("cyclotomic", 2)) == make_field("rationals")
True
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NoSuchRoot, SchemaError

__all__ = [
    "ExactField",
    "ExactScalar",
    "RationalField",
    "CyclotomicField",
    "PrimeField",
    "make_field",
    "root_of_unity",
    "scalar_nth_root",
    "unit_order",
    "cyclotomic_polynomial",
    "euler_phi",
    "is_prime",
]


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def euler_phi(n):
    result = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def _int_nth_root(a, n):
    """Exact n-th root of a >= 0, or None."""
    if a < 0:
        return None
    if a in (0, 1) or n == 1:
        return a
    lo, hi = 0, 1
    while hi**n < a:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < a:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == a else None


def _rational_nth_root(q, n):
    """Exact n-th root of a positive Fraction, or None."""
    num = _int_nth_root(q.numerator, n)
    den = _int_nth_root(q.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# dense polynomials over Q (coefficient lists, constant term first); only the
# cyclotomic machinery needs these


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(num, den):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    inv_lead = Fraction(1) / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        if c:
            q[i] = c
            for j, b in enumerate(den):
                num[i + j] -= c * b
    return _poly_trim(q), _poly_trim(num)


def _poly_ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g over Q."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim([x - y for x, y in _zip_pad(s0, _poly_mul(q, s1))])
        t0, t1 = t1, _poly_trim([x - y for x, y in _zip_pad(t0, _poly_mul(q, t1))])
    return r0, s0, t0


def _zip_pad(p, q):
    n = max(len(p), len(q))
    return zip(p + [Fraction(0)] * (n - len(p)), q + [Fraction(0)] * (n - len(q)))


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(1)
    (-1, 1)
    """
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod(p, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not rem
    result = tuple(int(c) for c in p)
    _CYCLO_CACHE[n] = result
    return result


# ---------------------------------------------------------------------------
# fields


class ExactField:
    """Common interface: construction, coercion, and root-of-unity bookkeeping."""

    kind = "abstract"

    def scalar(self, value):
        raise NotImplementedError

    def coerce(self, value):
        if isinstance(value, ExactScalar):
            if value.field != self:
                raise ValueError("scalar from a different field")
            return value
        return self.scalar(value)

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def characteristic(self):
        return 0

    def max_root_order(self):
        """Order of the (finite, cyclic) group of roots of unity."""
        raise NotImplementedError

    def primitive_root_of_unity(self):
        """A generator of the group of roots of unity."""
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.descriptor()}>"


class RationalField(ExactField):
    kind = "rationals"

    def __init__(self, zeta_value=Fraction(1)):
        # zeta records the distinguished root when this field stands in for
        # cyclotomic(1) or cyclotomic(2); it does not affect equality
        self._zeta = Fraction(zeta_value)

    def scalar(self, value):
        if isinstance(value, ExactScalar):
            return self.coerce(value)
        return ExactScalar(self, Fraction(value))

    @property
    def zeta(self):
        return self.scalar(self._zeta)

    def max_root_order(self):
        return 2

    def primitive_root_of_unity(self):
        return self.scalar(-1)

    def descriptor(self):
        return {"kind": "rationals"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")


class CyclotomicField(ExactField):
    """Q(zeta_N) for N >= 3, on the power basis of zeta_N."""

    kind = "cyclotomic"

    def __init__(self, n):
        if n < 3:
            raise ValueError("use make_field; N < 3 collapses to the rationals")
        self.n = n
        self.degree = euler_phi(n)
        self.minpoly = [Fraction(c) for c in cyclotomic_polynomial(n)]

    def scalar(self, value):
        if isinstance(value, ExactScalar):
            return self.coerce(value)
        if isinstance(value, (list, tuple)):
            coeffs = [Fraction(c) for c in value]
        else:
            coeffs = [Fraction(value)]
        if len(coeffs) >= len(self.minpoly):
            _, coeffs = _poly_divmod(coeffs, self.minpoly)
        coeffs = coeffs + [Fraction(0)] * (self.degree - len(coeffs))
        return ExactScalar(self, tuple(coeffs[: self.degree]))

    @property
    def zeta(self):
        return self.scalar([0, 1])

    def max_root_order(self):
        return self.n if self.n % 2 == 0 else 2 * self.n

    def primitive_root_of_unity(self):
        # for odd N the roots of unity form a cyclic group of order 2N
        # generated by -zeta; for even N they are the powers of zeta
        return self.zeta if self.n % 2 == 0 else -self.zeta

    def descriptor(self):
        return {"kind": "cyclotomic", "N": self.n}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("cyclotomic", self.n))


class PrimeField(ExactField):
    kind = "prime"

    def __init__(self, p):
        if not is_prime(p):
            raise SchemaError(f"{p} is not prime")
        self.p = p
        self._generator = None

    def scalar(self, value):
        if isinstance(value, ExactScalar):
            return self.coerce(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return ExactScalar(
                self,
                value.numerator * pow(value.denominator, -1, self.p) % self.p,
            )
        return ExactScalar(self, int(value) % self.p)

    def characteristic(self):
        return self.p

    def max_root_order(self):
        return self.p - 1

    def primitive_root_of_unity(self):
        if self._generator is None:
            for g in range(2, self.p):
                seen, x = 0, 1
                for _ in range(self.p - 1):
                    x = x * g % self.p
                    if x == 1:
                        seen += 1
                if seen == 1:
                    self._generator = g
                    break
            else:
                self._generator = 1  # p == 2
        return self.scalar(self._generator)

    def descriptor(self):
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


def make_field(spec):
    """Build a field from a descriptor.

    Accepts "rationals", ("cyclotomic", N), ("prime", p), or the equivalent
    dicts {"kind": ..., ...}.  cyclotomic(1) and cyclotomic(2) are the
    rationals (with distinguished roots 1 and -1).

    >>> make_field(("cyclotomic", 1)).zeta
    c(1)
    >>> make_field(("cyclotomic", 2)).zeta
    c(-1)
    """
    if isinstance(spec, ExactField):
        return spec
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "rationals":
            spec = "rationals"
        elif kind == "cyclotomic":
            spec = ("cyclotomic", spec.get("N"))
        elif kind == "prime":
            spec = ("prime", spec.get("p"))
        else:
            raise SchemaError(f"unknown field kind {kind!r}")
    if spec == "rationals" or spec == ("rationals",):
        return RationalField()
    if isinstance(spec, tuple) and len(spec) == 2:
        kind, param = spec
        if kind == "cyclotomic":
            if not isinstance(param, int) or param < 1:
                raise SchemaError(f"bad cyclotomic order {param!r}")
            if param == 1:
                return RationalField(Fraction(1))
            if param == 2:
                return RationalField(Fraction(-1))
            return CyclotomicField(param)
        if kind == "prime":
            if not isinstance(param, int):
                raise SchemaError(f"bad prime {param!r}")
            return PrimeField(param)
    raise SchemaError(f"unknown field spec {spec!r}")


# ---------------------------------------------------------------------------
# scalars


class ExactScalar:
    """A field element; payload depends on the field kind (see module docstring)."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    # -- arithmetic ---------------------------------------------------------

    def _pair(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        other = self._pair(other)
        k = self.field.kind
        if k == "rationals":
            return ExactScalar(self.field, self.value + other.value)
        if k == "prime":
            return ExactScalar(self.field, (self.value + other.value) % self.field.p)
        return ExactScalar(
            self.field, tuple(a + b for a, b in zip(self.value, other.value))
        )

    __radd__ = __add__

    def __neg__(self):
        k = self.field.kind
        if k == "rationals":
            return ExactScalar(self.field, -self.value)
        if k == "prime":
            return ExactScalar(self.field, -self.value % self.field.p)
        return ExactScalar(self.field, tuple(-a for a in self.value))

    def __sub__(self, other):
        return self + (-self._pair(other))

    def __rsub__(self, other):
        return self._pair(other) - self

    def __mul__(self, other):
        other = self._pair(other)
        k = self.field.kind
        if k == "rationals":
            return ExactScalar(self.field, self.value * other.value)
        if k == "prime":
            return ExactScalar(self.field, self.value * other.value % self.field.p)
        prod = _poly_mul(list(self.value), list(other.value))
        return self.field.scalar(prod)

    __rmul__ = __mul__

    def inverse(self):
        k = self.field.kind
        if k == "rationals":
            if self.value == 0:
                raise ZeroDivisionError("inverse of zero")
            return ExactScalar(self.field, 1 / self.value)
        if k == "prime":
            if self.value == 0:
                raise ZeroDivisionError("inverse of zero")
            return ExactScalar(self.field, pow(self.value, -1, self.field.p))
        if not any(self.value):
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = _poly_ext_gcd(list(self.value), self.field.minpoly)
        # minpoly is irreducible, so the gcd is a nonzero constant
        assert len(g) == 1
        return self.field.scalar([c / g[0] for c in s])

    def __truediv__(self, other):
        return self * self._pair(other).inverse()

    def __rtruediv__(self, other):
        return self._pair(other) * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        if self.field.kind == "cyclotomic":
            return any(self.value)
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.coerce(other)
            except (ValueError, ZeroDivisionError):
                return NotImplemented
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def sort_key(self):
        """Total order used only to fix deterministic canonical layouts."""
        if self.field.kind == "cyclotomic":
            return tuple(self.value)
        return self.value

    def as_rational(self):
        """The value as a Fraction when it lies in the prime subfield, else None."""
        k = self.field.kind
        if k == "rationals":
            return self.value
        if k == "prime":
            return Fraction(self.value)
        if any(self.value[1:]):
            return None
        return self.value[0]

    def __repr__(self):
        k = self.field.kind
        if k == "rationals":
            return f"c({self.value})"
        if k == "prime":
            return f"c({self.value} mod {self.field.p})"
        terms = []
        for i, a in enumerate(self.value):
            if a:
                terms.append(str(a) if i == 0 else f"{a}*z^{i}" if i > 1 else f"{a}*z")
        return "c(" + (" + ".join(terms) or "0") + ")"


# ---------------------------------------------------------------------------
# roots of unity


def root_of_unity(field, n):
    """An element of exact multiplicative order n, chosen canonically.

    In Q(zeta_N) with n | N this is zeta_N^(N/n).  Raises NoSuchRoot when the
    field has no element of that order.

    >>> root_of_unity(make_field(("cyclotomic", 4)), 4)
    c(1*z)
    """
    if n < 1:
        raise NoSuchRoot(f"order {n} is not positive")
    if n == 1:
        return field.one()
    if field.kind == "cyclotomic" and field.n % n == 0:
        return field.zeta ** (field.n // n)
    m = field.max_root_order()
    if m % n != 0:
        raise NoSuchRoot(f"no root of unity of order {n}", order=n)
    return field.primitive_root_of_unity() ** (m // n)


def unit_order(s):
    """Multiplicative order of a root of unity, or None if s is not one."""
    if not s:
        return None
    m = s.field.max_root_order()
    x = s
    for k in range(1, m + 1):
        if x == s.field.one():
            return k
        x = x * s
    return None


def _unit_exponent(field, s):
    """k with primitive_root^k == s, or None."""
    eta = field.primitive_root_of_unity()
    x = field.one()
    for k in range(field.max_root_order()):
        if x == s:
            return k
        x = x * eta
    return None


def scalar_nth_root(field, value, n):
    """Some mu with mu^n == value, or None.

    Complete over prime fields (brute force); over Q and Q(zeta_N) the search
    covers values of the form rational * root-of-unity, which is the honest
    limit of this representation.
    """
    if n == 1 or not value:
        return value
    if field.kind == "prime":
        for r in range(field.p):
            mu = field.scalar(r)
            if mu**n == value:
                return mu
        return None
    m = field.max_root_order()
    eta = field.primitive_root_of_unity()
    power = field.one()
    for k in range(m):
        # try value == eta^k * q with q a positive rational
        q = (value / power).as_rational()
        if q is not None and q > 0:
            r = _rational_nth_root(q, n)
            if r is not None:
                for j in range(m):
                    if (j * n) % m == k % m:
                        mu = field.scalar(r) * eta**j
                        if mu**n == value:
                            return mu
        power = power * eta
    return None
