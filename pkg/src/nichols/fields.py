"""Exact field arithmetic over Q, F_p, and simple extensions K[t]/(f).

A :class:`Field` knows how to add, multiply and invert opaque payloads
(``Fraction`` for Q, canonical residues for F_p, coefficient tuples for
extensions); :class:`FieldElement` wraps a payload together with its field
and exposes the usual operators.  Field specs follow the grammar

    Q | Fp:<prime> | ext:Fp:<prime>:<c0,...,cd> | ext:Q:<c0,...,cd>

where the c_i are the coefficients of the modulus f = sum c_i t^i.  Element
literals are ``a/b`` (rationals), ``k`` (prime fields) and sums of terms
``c``, ``c*t``, ``t^e``, ``c*t^e`` (extensions).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator

from .errors import (
    DivisionByZero,
    FieldMismatch,
    MalformedSpec,
    NonPrimeCharacteristic,
    ReduciblePolynomial,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldElement:
    """An immutable element of a :class:`Field`.

    Arithmetic accepts plain ints on either side (coerced via ``from_int``),
    which keeps scalar formulas like ``1 - q**j * r`` readable.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value) -> None:
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):  # pragma: no cover - immutability guard
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"elements of {self.field.spec} and {other.field.spec}"
                )
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, self.field._add(self.value, self.field._neg(o.value))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, self.field._add(o.value, self.field._neg(self.value))
        )

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if self.field._is_zero(self.value):
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int) -> "FieldElement":
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = self.inv()
            e = -e
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field.spec, self.value))

    def __bool__(self):
        return not self.field._is_zero(self.value)

    def __str__(self):
        return self.field._render(self.value)

    def __repr__(self):
        return f"<{self} in {self.field.spec}>"


class Field:
    """Common interface of the three supported field kinds."""

    kind: str
    characteristic: int
    order: int | None  # None for infinite fields
    spec: str

    # payload-level primitives, provided by subclasses
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _from_int(self, n: int):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _render(self, a) -> str:
        raise NotImplementedError

    def _parse(self, text: str):
        raise NotImplementedError

    def _iter_payloads(self) -> Iterator:
        raise NotImplementedError

    # public API
    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self._from_int(0))

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self._from_int(1))

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, self._from_int(n))

    def parse(self, text: str) -> FieldElement:
        return FieldElement(self, self._parse(text.strip()))

    def render(self, x: FieldElement) -> str:
        return self._render(x.value)

    def elements(self) -> Iterator[FieldElement]:
        """All elements, for finite fields only."""
        if self.order is None:
            raise MalformedSpec(f"{self.spec} is infinite; cannot enumerate")
        for payload in self._iter_payloads():
            yield FieldElement(self, payload)

    def units(self) -> Iterator[FieldElement]:
        for x in self.elements():
            if x:
                yield x

    def random_element(self, rng) -> FieldElement:
        if self.order is not None:
            pool = list(self._iter_payloads())
            return FieldElement(self, pool[rng.randrange(len(pool))])
        num = rng.randint(-9, 9)
        den = rng.randint(1, 9)
        return FieldElement(self, Fraction(num, den))

    def random_nonzero(self, rng) -> FieldElement:
        while True:
            x = self.random_element(rng)
            if x:
                return x

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Field({self.spec!r})"


class RationalField(Field):
    kind = "rationals"
    characteristic = 0
    order = None
    spec = "Q"

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _from_int(self, n):
        return Fraction(n)

    def _is_zero(self, a):
        return a == 0

    def _render(self, a):
        return str(a)

    def _parse(self, text):
        if not re.fullmatch(r"[+-]?\d+(?:/\d+)?", text):
            raise MalformedSpec(f"bad rational literal: {text!r}")
        return Fraction(text)

    def random_element(self, rng):
        return FieldElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int) -> None:
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.spec = f"Fp:{p}"

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _from_int(self, n):
        return n % self.p

    def _is_zero(self, a):
        return a == 0

    def _render(self, a):
        return str(a)

    def _parse(self, text):
        if not re.fullmatch(r"[+-]?\d+", text):
            raise MalformedSpec(f"bad prime-field literal: {text!r}")
        return int(text) % self.p

    def _iter_payloads(self):
        return iter(range(self.p))


# -- polynomial helpers over a base field, on coefficient tuples of payloads --


def _poly_trim(base: Field, cs):
    cs = list(cs)
    while cs and base._is_zero(cs[-1]):
        cs.pop()
    return tuple(cs)


def _poly_add(base: Field, a, b):
    n = max(len(a), len(b))
    z = base._from_int(0)
    out = [
        base._add(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
        for i in range(n)
    ]
    return _poly_trim(base, out)


def _poly_neg(base: Field, a):
    return tuple(base._neg(c) for c in a)


def _poly_mul(base: Field, a, b):
    if not a or not b:
        return ()
    z = base._from_int(0)
    out = [z] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = base._add(out[i + j], base._mul(ca, cb))
    return _poly_trim(base, out)


def _poly_divmod(base: Field, a, b):
    """Quotient and remainder of a by b (b nonzero)."""
    a = list(a)
    q = [base._from_int(0)] * max(0, len(a) - len(b) + 1)
    lead_inv = base._inv(b[-1])
    while len(_poly_trim(base, a)) >= len(b):
        a = list(_poly_trim(base, a))
        shift = len(a) - len(b)
        factor = base._mul(a[-1], lead_inv)
        q[shift] = base._add(q[shift], factor)
        for i, cb in enumerate(b):
            a[shift + i] = base._add(a[shift + i], base._neg(base._mul(factor, cb)))
    return _poly_trim(base, q), _poly_trim(base, a)


def _poly_eval(base: Field, cs, x):
    acc = base._from_int(0)
    for c in reversed(cs):
        acc = base._add(base._mul(acc, x), c)
    return acc


def _poly_ext_gcd(base: Field, a, b):
    """(g, u, v) with u*a + v*b = g over the base field."""
    r0, r1 = a, b
    u0, u1 = (base._from_int(1),), ()
    while r1:
        q, r = _poly_divmod(base, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_add(base, u0, _poly_neg(base, _poly_mul(base, q, u1)))
    return r0, u0


def _rational_roots_exist(coeffs: list[Fraction]) -> bool:
    """True if sum coeffs[i] x^i has a rational root (coeffs[-1] != 0)."""
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    if ints[0] == 0:
        return True  # x = 0
    for p in _divisors(abs(ints[0])):
        for q in _divisors(abs(ints[-1])):
            for sign in (1, -1):
                x = Fraction(sign * p, q)
                if sum(c * x**i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


def _quartic_splits_into_quadratics(coeffs: list[Fraction]) -> bool:
    """Whether a degree-4 rational polynomial has a quadratic factor over Q.

    Monicize by y = a*x (a = leading coefficient of the integer-cleared
    polynomial); a monic integer quartic factors over Q into monic integer
    quadratics, so enumerate divisor pairs of the constant term.
    """
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    e0, e1, e2, e3, a = (int(c * denom_lcm) for c in coeffs)
    # h(y) = y^4 + e3*y^3 + a*e2*y^2 + a^2*e1*y + a^3*e0
    h3, h2, h1, h0 = e3, a * e2, a * a * e1, a * a * a * e0
    if h0 == 0:
        return True  # y = 0 is a root, i.e. x = 0
    for b in _divisors(abs(h0)):
        for b_signed in (b, -b):
            if h0 % b_signed != 0:
                continue
            d = h0 // b_signed
            # seek y^4+h3 y^3+h2 y^2+h1 y+h0 = (y^2+A y+b_signed)(y^2+C y+d)
            if d != b_signed:
                num = h1 - h3 * b_signed
                if num % (d - b_signed) != 0:
                    continue
                A = num // (d - b_signed)
                C = h3 - A
                if b_signed + d + A * C == h2:
                    return True
            else:
                if b_signed * h3 != h1:
                    continue
                # A + C = h3, A*C = h2 - 2b
                disc = h3 * h3 - 4 * (h2 - 2 * b_signed)
                if _is_square(disc):
                    return True
    return False


def _check_irreducible(base: Field, mod) -> None:
    """Raise ReduciblePolynomial unless the monic modulus is irreducible.

    Degree 2/3: no roots in the base field.  Degree 4: additionally no monic
    quadratic factor.  Exhaustive over F_p; rational-root test plus divisor
    search over Q.
    """
    d = len(mod) - 1
    if isinstance(base, PrimeField):
        for x in range(base.p):
            if base._is_zero(_poly_eval(base, mod, x)):
                raise ReduciblePolynomial(f"root t={x} in F_{base.p}")
        if d == 4:
            one = base._from_int(1)
            for b in range(base.p):
                for c in range(base.p):
                    _, rem = _poly_divmod(base, mod, (c, b, one))
                    if not rem:
                        raise ReduciblePolynomial(
                            f"quadratic factor t^2+{b}t+{c} over F_{base.p}"
                        )
    else:
        coeffs = list(mod)
        if _rational_roots_exist(coeffs):
            raise ReduciblePolynomial("rational root")
        if d == 4 and _quartic_splits_into_quadratics(coeffs):
            raise ReduciblePolynomial("quadratic factor over Q")


_TERM_RE = re.compile(r"(?:(?P<coeff>[^*\s]+)\*)?t(?:\^(?P<exp>\d+))?")


class ExtensionField(Field):
    """base[t]/(f) for a monic irreducible f of degree 2..4."""

    kind = "extension"

    def __init__(self, base: Field, coeffs) -> None:
        if isinstance(base, ExtensionField):
            raise MalformedSpec("towers of extensions are not supported")
        mod = _poly_trim(base, coeffs)
        deg = len(mod) - 1
        if deg < 2 or deg > 4:
            raise MalformedSpec(f"extension degree {deg} outside 2..4")
        lead_inv = base._inv(mod[-1])
        mod = tuple(base._mul(c, lead_inv) for c in mod)
        _check_irreducible(base, mod)
        self.base = base
        self.modulus = mod
        self.degree = deg
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order**deg
        base_tag = "Q" if isinstance(base, RationalField) else f"Fp:{base.p}"
        self.spec = f"ext:{base_tag}:" + ",".join(base._render(c) for c in mod)

    # payloads are coefficient tuples of length == degree
    def _pad(self, cs):
        z = self.base._from_int(0)
        return tuple(list(cs) + [z] * (self.degree - len(cs)))

    def _reduce(self, cs):
        _, rem = _poly_divmod(self.base, _poly_trim(self.base, cs), self.modulus)
        return self._pad(rem)

    def _add(self, a, b):
        return tuple(self.base._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.base._neg(x) for x in a)

    def _mul(self, a, b):
        return self._reduce(_poly_mul(self.base, a, b))

    def _inv(self, a):
        g, u = _poly_ext_gcd(self.base, _poly_trim(self.base, a), self.modulus)
        if len(g) != 1:
            raise DivisionByZero("element shares a factor with the modulus")
        scale = self.base._inv(g[0])
        return self._pad(tuple(self.base._mul(c, scale) for c in u))

    def _from_int(self, n):
        return self._pad((self.base._from_int(n),))

    def _is_zero(self, a):
        return all(self.base._is_zero(c) for c in a)

    def _render(self, a):
        parts = []
        for i, c in enumerate(a):
            if self.base._is_zero(c):
                continue
            cs = self.base._render(c)
            if i == 0:
                parts.append(cs)
            else:
                var = "t" if i == 1 else f"t^{i}"
                parts.append(var if cs == "1" else f"{cs}*{var}")
        return "+".join(parts) if parts else "0"

    def _parse(self, text):
        z = self.base._from_int(0)
        acc = [z] * self.degree
        for term in text.replace(" ", "").split("+"):
            if not term:
                raise MalformedSpec(f"bad extension literal: {text!r}")
            if "t" not in term:
                acc = list(
                    _poly_add(self.base, self._pad(acc), (self.base._parse(term),))
                )
                acc = list(self._pad(acc))
                continue
            neg = False
            if term.startswith("-t"):
                term, neg = term[1:], True
            m = _TERM_RE.fullmatch(term)
            if not m:
                raise MalformedSpec(f"bad extension term: {term!r}")
            exp = int(m.group("exp") or 1)
            coeff = (
                self.base._parse(m.group("coeff"))
                if m.group("coeff")
                else self.base._from_int(1)
            )
            if neg:
                coeff = self.base._neg(coeff)
            mono = [z] * exp + [coeff]
            summed = _poly_add(self.base, tuple(acc), tuple(mono))
            acc = list(self._pad(self._reduce(summed)))
        return tuple(acc)

    def _iter_payloads(self):
        if self.base.order is None:
            raise MalformedSpec(f"{self.spec} is infinite; cannot enumerate")

        def rec(i):
            if i == self.degree:
                yield ()
                return
            for c in range(self.base.p):
                for rest in rec(i + 1):
                    yield (c,) + rest

        return rec(0)

    def random_element(self, rng) -> FieldElement:
        cs = tuple(self.base.random_element(rng).value for _ in range(self.degree))
        return FieldElement(self, cs)

    def gen(self) -> FieldElement:
        """The class of t."""
        z = self.base._from_int(0)
        return FieldElement(self, self._pad((z, self.base._from_int(1))))


def parse_field_spec(spec: str) -> Field:
    """Build a field from its descriptor string (see module docstring)."""
    spec = spec.strip()
    if spec == "Q":
        return RationalField()
    if spec.startswith("Fp:"):
        body = spec[3:]
        if not re.fullmatch(r"\d+", body):
            raise MalformedSpec(f"bad prime-field spec: {spec!r}")
        return PrimeField(int(body))
    if spec.startswith("ext:"):
        rest = spec[4:]
        if rest.startswith("Fp:"):
            parts = rest[3:].split(":")
            if len(parts) != 2:
                raise MalformedSpec(f"bad extension spec: {spec!r}")
            if not re.fullmatch(r"\d+", parts[0]):
                raise MalformedSpec(f"bad extension spec: {spec!r}")
            base: Field = PrimeField(int(parts[0]))
            coeff_text = parts[1]
        elif rest.startswith("Q:"):
            base = RationalField()
            coeff_text = rest[2:]
        else:
            raise MalformedSpec(f"bad extension base in: {spec!r}")
        if not coeff_text:
            raise MalformedSpec(f"missing modulus coefficients: {spec!r}")
        coeffs = [base._parse(c) for c in coeff_text.split(",")]
        return ExtensionField(base, coeffs)
    raise MalformedSpec(f"unrecognized field spec: {spec!r}")
