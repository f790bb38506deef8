"""Group rings of disk-class groups.

Disk classes live in a finitely generated abelian group: Z^k for the canonical
complex (exponents of the k free generators of the class group), or a quotient
Z^k/G after collapsing a subsystem.  A quotient group is described by one
modulus per coordinate, 0 meaning a free coordinate; class vectors are reduced
coordinatewise.

Elements of the group ring are finite sums  sum_i c_i e^{A_i}  stored in
canonical form: terms sorted lexicographically by class vector, no zero
coefficients, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Ring, RingError, ZZ

ClassVector = tuple  # length-k tuple of ints


@dataclass(frozen=True)
class GroupRingElement:
    """Canonical finite sum of c * e^A, terms sorted by class vector."""

    rank: int
    terms: tuple  # tuple[(ClassVector, coefficient), ...]

    def __bool__(self):
        return bool(self.terms)

    def classes(self):
        return [cls for cls, _ in self.terms]

    def coefficient(self, cls: ClassVector):
        for c, v in self.terms:
            if c == tuple(cls):
                return v
        return None

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for cls, c in self.terms:
            if all(x == 0 for x in cls):
                bits.append(f"{c}")
            else:
                bits.append(f"{c}*e{list(cls)}")
        return " + ".join(bits)


class GroupRing(Ring):
    """R[Z^k] or R[Z^k/G]; commutative, a domain when the group is free."""

    def __init__(self, rank: int, base: Ring = ZZ, moduli: tuple | None = None):
        if moduli is None:
            moduli = (0,) * rank
        if len(moduli) != rank:
            raise RingError("moduli length must equal rank")
        self.rank = rank
        self.base = base
        self.moduli = tuple(moduli)
        self.is_free = all(m == 0 for m in self.moduli)
        self.is_domain = base.is_domain and self.is_free
        grp = "Z^%d" % rank if self.is_free else "x".join(
            "Z" if m == 0 else f"Z/{m}" for m in self.moduli) or "0"
        self.name = f"{base.name}[{grp}]"
        self.is_field = False
        self.is_euclidean = False

    def reduce_class(self, cls) -> ClassVector:
        cls = tuple(cls)
        if len(cls) != self.rank:
            raise RingError(
                f"class vector {list(cls)} has length {len(cls)}, expected {self.rank}")
        return tuple(x if m == 0 else x % m for x, m in zip(cls, self.moduli))

    def element(self, term_map) -> GroupRingElement:
        """Canonical element from {class vector: coefficient}."""
        acc: dict = {}
        for cls, c in term_map.items():
            cls = self.reduce_class(cls)
            cur = acc.get(cls, self.base.zero())
            acc[cls] = self.base.add(cur, c)
        items = tuple((cls, c) for cls, c in sorted(acc.items())
                      if not self.base.is_zero(c))
        return GroupRingElement(self.rank, items)

    def monomial(self, cls, c=None) -> GroupRingElement:
        if c is None:
            c = self.base.one()
        return self.element({tuple(cls): c})

    def zero(self):
        return GroupRingElement(self.rank, ())

    def one(self):
        return self.monomial((0,) * self.rank)

    def from_int(self, n):
        return self.monomial((0,) * self.rank, self.base.from_int(n))

    def add(self, a: GroupRingElement, b: GroupRingElement):
        self._check(a, b)
        acc = {cls: c for cls, c in a.terms}
        for cls, c in b.terms:
            cur = acc.get(cls, self.base.zero())
            acc[cls] = self.base.add(cur, c)
        return self.element(acc)

    def neg(self, a: GroupRingElement):
        return GroupRingElement(
            a.rank, tuple((cls, self.base.neg(c)) for cls, c in a.terms))

    def mul(self, a: GroupRingElement, b: GroupRingElement):
        self._check(a, b)
        acc: dict = {}
        for cls1, c1 in a.terms:
            for cls2, c2 in b.terms:
                cls = self.reduce_class(tuple(x + y for x, y in zip(cls1, cls2)))
                cur = acc.get(cls, self.base.zero())
                acc[cls] = self.base.add(cur, self.base.mul(c1, c2))
        return self.element(acc)

    def scale(self, c, a: GroupRingElement):
        return self.element({cls: self.base.mul(c, v) for cls, v in a.terms})

    def is_zero(self, a):
        return not a.terms

    def is_unit(self, a):
        # in R[Z^k] with R a domain, units are unit multiples of single e^A
        return len(a.terms) == 1 and self.base.is_unit(a.terms[0][1]) \
            and self.is_free

    def inv(self, a):
        if not self.is_unit(a):
            raise RingError(f"{a!r} is not a unit in {self.name}")
        cls, c = a.terms[0]
        return self.monomial(tuple(-x for x in cls), self.base.inv(c))

    def _check(self, a, b):
        if a.rank != b.rank:
            raise RingError(
                f"rank mismatch: {a.rank} vs {b.rank}")


def group_ring_mul(ring: GroupRing, a: GroupRingElement,
                   b: GroupRingElement) -> GroupRingElement:
    """Distributive product with e^A * e^B = e^{A+B}, in canonical form."""
    return ring.mul(a, b)
