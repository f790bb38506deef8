"""Exact coefficient rings.

Everything is exact: integers are arbitrary-precision ``int``, rationals are
``fractions.Fraction``, finite fields and modular rings reduce representatives
into ``[0, m)``.  Laurent polynomials over a field form a Euclidean domain with
size function the width ``max exponent - min exponent``; over the integers the
Laurent ring is still a ring (needed for Novikov coefficients) but is not
Euclidean and the normal-form routines refuse it.

Ring elements are plain immutable Python values (``int``, ``Fraction``,
``LaurentPoly``); all arithmetic is dispatched through a ring descriptor
object so that the same matrix code runs over every coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class RingError(ValueError):
    """Unsupported ring, or an element outside the target ring."""


class Ring:
    """Base descriptor.  Subclasses fill in arithmetic on raw elements."""

    name = "?"
    is_field = False
    is_euclidean = False
    is_domain = True

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def eq(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        """Inverse of a unit."""
        raise NotImplementedError

    # Euclidean interface; only meaningful when is_euclidean is True.

    def size(self, a) -> int:
        """Euclidean size of a nonzero element."""
        raise RingError(f"{self.name} is not Euclidean")

    def quorem(self, a, b):
        """q, r with a = q*b + r and r = 0 or size(r) < size(b)."""
        raise RingError(f"{self.name} is not Euclidean")

    def divides(self, a, b) -> bool:
        """Whether a divides b (a nonzero)."""
        if self.is_zero(b):
            return True
        _, r = self.quorem(b, a)
        return self.is_zero(r)

    def exact_div(self, a, b):
        """a / b when b divides a exactly."""
        q, r = self.quorem(a, b)
        if not self.is_zero(r):
            raise RingError(f"{b!r} does not divide {a!r} in {self.name}")
        return q

    def unit_normalize(self, a):
        """(u, a') with a = u * a', u a unit and a' the canonical associate.

        Canonical associates: nonnegative over Z, 1 over a field, and over a
        field Laurent ring the representative with lowest exponent 0 and
        leading (highest-exponent) coefficient 1.
        """
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self), tuple(sorted(self.__dict__.items()))))


class IntegerRing(Ring):
    name = "Z"
    is_euclidean = True

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise RingError(f"{a} is not a unit in Z")

    def size(self, a):
        return abs(a)

    def quorem(self, a, b):
        q, r = divmod(a, b)
        # keep |r| minimal-ish: python divmod already gives 0 <= r < |b| for b>0
        return q, r

    def unit_normalize(self, a):
        if a < 0:
            return -1, -a
        return 1, a


class RationalField(Ring):
    name = "Q"
    is_field = True
    is_euclidean = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise RingError("0 is not a unit in Q")
        return 1 / Fraction(a)

    def size(self, a):
        return 0 if a == 0 else 1

    def quorem(self, a, b):
        return Fraction(a) / Fraction(b), Fraction(0)

    def unit_normalize(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return Fraction(a), Fraction(1)


class PrimeField(Ring):
    """F_p with representatives in [0, p)."""

    is_field = True
    is_euclidean = True

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise RingError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise RingError(f"0 is not a unit in {self.name}")
        return pow(a, -1, self.p)

    def size(self, a):
        return 0 if a % self.p == 0 else 1

    def quorem(self, a, b):
        return self.mul(a, self.inv(b)), 0

    def unit_normalize(self, a):
        a %= self.p
        if a == 0:
            return 1, 0
        return a, 1


class ModularRing(Ring):
    """Z/m for composite m.  Not a domain; homology over it lifts to Z."""

    is_domain = False

    def __init__(self, m: int):
        if m < 2:
            raise RingError(f"modulus {m} must be >= 2")
        self.m = m
        self.name = f"Z/{m}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_unit(self, a):
        return gcd(a, self.m) == 1

    def inv(self, a):
        if gcd(a, self.m) != 1:
            raise RingError(f"{a} is not a unit in {self.name}")
        return pow(a, -1, self.m)

    def unit_normalize(self, a):
        return 1, a % self.m


@dataclass(frozen=True)
class LaurentPoly:
    """Finite sum of c * t^e; ``terms`` sorted by exponent, no zero c."""

    terms: tuple  # tuple[(exponent, coefficient), ...]

    def __bool__(self):
        return bool(self.terms)

    def min_exp(self) -> int:
        return self.terms[0][0]

    def max_exp(self) -> int:
        return self.terms[-1][0]

    def coefficient(self, e: int):
        for exp, c in self.terms:
            if exp == e:
                return c
        return None

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms:
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*t")
            else:
                bits.append(f"{c}*t^{e}")
        return " + ".join(bits)


class LaurentRing(Ring):
    """base[t, t^-1].  Euclidean (width size function) iff base is a field."""

    def __init__(self, base: Ring, t_degree: int | None = None):
        if isinstance(base, (LaurentRing, ModularRing)):
            raise RingError(f"Laurent ring over {base.name} is not supported")
        self.base = base
        # homological degree of t (e.g. -N_L after Novikov specialization)
        self.t_degree = t_degree
        self.name = f"{base.name}[t,t^-1]"
        self.is_field = False
        self.is_euclidean = base.is_field

    def poly(self, term_map) -> LaurentPoly:
        """Canonical LaurentPoly from {exponent: coefficient}."""
        items = []
        for e, c in sorted(term_map.items()):
            if not self.base.is_zero(c):
                items.append((e, c))
        return LaurentPoly(tuple(items))

    def monomial(self, e: int, c=None) -> LaurentPoly:
        if c is None:
            c = self.base.one()
        return self.poly({e: c})

    def zero(self):
        return LaurentPoly(())

    def one(self):
        return self.monomial(0)

    def from_int(self, n):
        return self.poly({0: self.base.from_int(n)})

    def add(self, a: LaurentPoly, b: LaurentPoly):
        acc = dict(a.terms)
        for e, c in b.terms:
            cur = acc.get(e, self.base.zero())
            acc[e] = self.base.add(cur, c)
        return self.poly(acc)

    def neg(self, a: LaurentPoly):
        return LaurentPoly(tuple((e, self.base.neg(c)) for e, c in a.terms))

    def mul(self, a: LaurentPoly, b: LaurentPoly):
        acc: dict = {}
        for e1, c1 in a.terms:
            for e2, c2 in b.terms:
                e = e1 + e2
                cur = acc.get(e, self.base.zero())
                acc[e] = self.base.add(cur, self.base.mul(c1, c2))
        return self.poly(acc)

    def is_zero(self, a):
        return not a.terms

    def is_unit(self, a):
        return len(a.terms) == 1 and self.base.is_unit(a.terms[0][1])

    def inv(self, a):
        if not self.is_unit(a):
            raise RingError(f"{a!r} is not a unit in {self.name}")
        e, c = a.terms[0]
        return self.monomial(-e, self.base.inv(c))

    def size(self, a):
        if not self.is_euclidean:
            raise RingError(f"{self.name} is not Euclidean")
        return a.max_exp() - a.min_exp()

    def quorem(self, a, b):
        """Division with remainder of smaller width, via ordinary polynomial
        division after clearing the minimal exponents by unit multiplication."""
        if not self.is_euclidean:
            raise RingError(f"{self.name} is not Euclidean")
        if self.is_zero(b):
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero(a):
            return self.zero(), self.zero()
        base = self.base
        shift_a, shift_b = a.min_exp(), b.min_exp()
        # divide top-down on the shifted (ordinary) polynomials
        rem = {e - shift_a: c for e, c in a.terms}
        div = {e - shift_b: c for e, c in b.terms}
        deg_b = max(div)
        lead_inv = base.inv(div[deg_b])
        quo: dict = {}
        while rem:
            deg_r = max(rem)
            if deg_r < deg_b:
                break
            factor = base.mul(rem[deg_r], lead_inv)
            quo[deg_r - deg_b] = factor
            for e, c in div.items():
                tgt = e + deg_r - deg_b
                cur = rem.get(tgt, base.zero())
                val = base.sub(cur, base.mul(factor, c))
                if base.is_zero(val):
                    rem.pop(tgt, None)
                else:
                    rem[tgt] = val
        q = self.poly({e + shift_a - shift_b: c for e, c in quo.items()})
        r = self.poly({e + shift_a: c for e, c in rem.items()})
        return q, r

    def unit_normalize(self, a):
        if self.is_zero(a):
            return self.one(), a
        if self.base.is_field:
            # lowest exponent 0, leading coefficient 1  (so t-1 stays t-1)
            lead = a.terms[-1][1]
            u = self.monomial(a.min_exp(), lead)
            return u, self.mul(self.inv(u), a)
        # over Z: only clear the sign of the leading coefficient and keep
        # the exponent shift; used for display, not for normal forms
        lead = a.terms[-1][1]
        u_c, _ = self.base.unit_normalize(lead)
        u = self.monomial(a.min_exp(), self.base.from_int(u_c))
        return u, self.mul(self.inv(u), a)


ZZ = IntegerRing()
QQ = RationalField()


def ring_from_token(token: str) -> Ring:
    """Parse a coefficient-ring token: Z, Q, Fp:<p>, Zmod:<m>."""
    if token == "Z":
        return ZZ
    if token == "Q":
        return QQ
    if token.startswith("Fp:"):
        return PrimeField(int(token.split(":", 1)[1]))
    if token.startswith("Zmod:"):
        return ModularRing(int(token.split(":", 1)[1]))
    raise RingError(f"unknown coefficient ring {token!r}")
