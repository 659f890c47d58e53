"""Exact arithmetic over GF(2), GF(3), GF(4) and two partial fields.

Rings are singletons (``GF2``, ``GF3``, ``GF4``, ``REGULAR``, ``SIXTH_ROOT``)
operating on raw values:

* GF(2), GF(3): residues ``0 .. p-1``
* GF(4): ints ``a | b << 1`` meaning ``a + b*x`` with ``x**2 = x + 1``
* REGULAR: Python ints; painting values restricted to ``{1, -1}``
* SIXTH_ROOT: pairs ``(a, b)`` meaning ``a + b*z`` in the Eisenstein
  integers, ``z**2 = z - 1``; painting values restricted to powers of ``z``

Internals work with raw values for speed. :class:`FieldElement` wraps a raw
value together with its ring for callers that want operator syntax.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

from .errors import FormatError, MixedFields, NotAUnit


class Ring:
    tag: str = ""
    is_field: bool = False
    zero: Any = 0
    one: Any = 1

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def units(self) -> tuple:
        """The values a painting may take (k* for a field, S for (R, S))."""
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        return a in self.units

    def coerce(self, v):
        return v

    def render(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def __repr__(self):
        return self.tag.upper()

    def __reduce__(self):
        return (ring_by_tag, (self.tag,))

    def element(self, v) -> FieldElement:
        return FieldElement(self, self.coerce(v))


class PrimeField(Ring):
    is_field = True

    def __init__(self, p: int):
        self.p = p
        self.tag = f"gf{p}"
        self._units = tuple(range(1, p))
        self._inv = {a: pow(a, p - 2, p) for a in self._units}

    @property
    def elements(self) -> tuple:
        return tuple(range(self.p))

    @property
    def units(self):
        return self._units

    def coerce(self, v):
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        try:
            return self._inv[a]
        except KeyError:
            raise NotAUnit(f"{a} is not invertible in {self.tag}") from None

    def parse(self, text):
        try:
            return int(text.strip()) % self.p
        except ValueError:
            raise FormatError(f"bad {self.tag} value {text!r}") from None


class GF4Field(Ring):
    tag = "gf4"
    is_field = True
    X = 2  # the generator x
    _names = {0: "0", 1: "1", 2: "x", 3: "x+1"}

    def __init__(self):
        # x**2 = x + 1, so x generates the cyclic group {1, x, x+1}
        self._log = {1: 0, 2: 1, 3: 2}
        self._exp = (1, 2, 3)

    @property
    def elements(self):
        return (0, 1, 2, 3)

    @property
    def units(self):
        return (1, 2, 3)

    def coerce(self, v):
        if isinstance(v, tuple):
            a, b = v
            return (a & 1) | ((b & 1) << 1)
        v = int(v)
        if not 0 <= v < 4:
            raise ValueError(f"GF(4) value out of range: {v}")
        return v

    def add(self, a, b):
        return a ^ b

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % 3]

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible in gf4")
        return self._exp[(-self._log[a]) % 3]

    def frobenius(self, a):
        return self.mul(a, a)

    def render(self, a):
        return self._names[a]

    def parse(self, text):
        t = text.strip().replace(" ", "")
        for k, name in self._names.items():
            if t == name or (k == 3 and t == "1+x"):
                return k
        raise FormatError(f"bad gf4 value {text!r}")


class RegularPartialField(Ring):
    """(Z, {1, -1}); sums are evaluated over the integers."""

    tag = "regular"

    @property
    def units(self):
        return (1, -1)

    def coerce(self, v):
        return int(v)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a not in (1, -1):
            raise NotAUnit(f"{a} is not a unit of Z")
        return a

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise FormatError(f"bad regular value {text!r}") from None


_EISENSTEIN = re.compile(r"^\(?(-?\d+),(-?\d+)\)?$")


class SixthRootPartialField(Ring):
    """(Z[z], <z>) with z a primitive sixth root of unity, z**2 = z - 1."""

    tag = "sixth_root"
    zero = (0, 0)
    one = (1, 0)
    Z = (0, 1)

    def __init__(self):
        powers = [(1, 0)]
        for _ in range(5):
            powers.append(self.mul(powers[-1], self.Z))
        self._powers = tuple(powers)
        self._log = {p: i for i, p in enumerate(powers)}

    @property
    def units(self):
        return self._powers

    def power(self, i: int):
        return self._powers[i % 6]

    def coerce(self, v):
        if isinstance(v, int):
            return (v, 0)
        a, b = v
        return (int(a), int(b))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        p, q = a
        r, s = b
        return (p * r - q * s, p * s + q * r + q * s)

    def inv(self, a):
        # the units of Z[z] are exactly the six powers of z
        try:
            return self._powers[(-self._log[a]) % 6]
        except KeyError:
            raise NotAUnit(f"{a} is not a unit of Z[z]") from None

    def render(self, a):
        if a in self._log:
            return f"z^{self._log[a]}"
        if a == (0, 0):
            return "0"
        return f"({a[0]},{a[1]})"

    def parse(self, text):
        t = text.strip().replace(" ", "")
        if t == "0":
            return (0, 0)
        if t.startswith("z^"):
            try:
                return self.power(int(t[2:]))
            except ValueError:
                pass
        m = _EISENSTEIN.match(t)
        if m:
            return (int(m.group(1)), int(m.group(2)))
        raise FormatError(f"bad sixth_root value {text!r}")


GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF4 = GF4Field()
REGULAR = RegularPartialField()
SIXTH_ROOT = SixthRootPartialField()

RINGS = {r.tag: r for r in (GF2, GF3, GF4, REGULAR, SIXTH_ROOT)}
FIELDS = (GF2, GF3, GF4)


def ring_by_tag(tag: str) -> Ring:
    try:
        return RINGS[tag.lower()]
    except KeyError:
        raise FormatError(f"unknown field tag {tag!r}") from None


@dataclass(frozen=True)
class FieldElement:
    ring: Ring
    value: Any

    def _other(self, other) -> Any:
        if isinstance(other, FieldElement):
            if other.ring is not self.ring:
                raise MixedFields(f"{self.ring!r} vs {other.ring!r}")
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return FieldElement(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ring, self.ring.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.ring, self.ring.neg(self.value))

    def inverse(self):
        return FieldElement(self.ring, self.ring.inv(self.value))

    def __truediv__(self, other):
        return FieldElement(self.ring, self.ring.div(self.value, self._other(other)))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def __str__(self):
        return self.ring.render(self.value)


PartialFieldElement = FieldElement


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def is_unit_value(a: FieldElement) -> bool:
    return a.is_unit()


@dataclass(frozen=True)
class Automorphism:
    """A field automorphism; ``index`` 0 is the identity, 1 is Frobenius on GF(4)."""

    ring: Ring
    index: int = 0

    def __call__(self, v):
        if self.index == 0:
            return v
        return self.ring.frobenius(v)

    def compose(self, other: Automorphism) -> Automorphism:
        if other.ring is not self.ring:
            raise MixedFields("automorphisms of different fields")
        return Automorphism(self.ring, (self.index + other.index) % 2)

    def inverse(self) -> Automorphism:
        return self

    @property
    def name(self) -> str:
        return "identity" if self.index == 0 else "frobenius"


def automorphisms_of(ring: Ring) -> list[Automorphism]:
    if not ring.is_field:
        raise ValueError(f"{ring!r} is not a finite field")
    if ring is GF4:
        return [Automorphism(ring, 0), Automorphism(ring, 1)]
    return [Automorphism(ring, 0)]
