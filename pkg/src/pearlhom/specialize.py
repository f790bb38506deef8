"""Coefficient reductions of the canonical complex.

Three specializations, all chain maps applied entrywise to the boundary:

* quotient by a subsystem G of disk classes, twisted by a sign character
  (the combinatorial residue of a relative Pin structure): classes collapse
  to cosets in Z^k/G and every coefficient e^A picks up the sign of the
  G-part of A.  Subsystems on which the Maslov index vanishes always work;
  a nonzero Maslov value on G is admissible only when it is even, because
  the sign identifications along odd-Maslov classes cannot be chosen
  coherently.  Spherical classes are canonically positively oriented, so a
  character is forced to be +1 on generators marked spherical.
* Novikov specialization e^A -> t^(mu(A)/N_L), the quotient along ker(mu)
  followed by the identification of the level group with powers of t; the
  variable t has degree -N_L.
* rank-1 local-system twisting: the coefficient on e^A is multiplied by the
  holonomy, a product of invertible base-ring values with exponents A.

Plain base change Z -> Q, F_p, Z/m is also here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .rings import (Ring, RingError, ZZ, QQ, PrimeField, ModularRing,
                    LaurentRing)
from .groupring import GroupRing, GroupRingElement
from .matrices import ExactMatrix, smith_normal_form, kernel_basis
from .model import (GradedComplex, Generator, MaslovForm, ModelError, Period,
                    SchemaError, _gcd)


class ObstructionError(ValueError):
    """Quotient along an odd-Maslov class: no coherent sign identifications."""


class CharacterError(ValueError):
    """Sign character inconsistent on the subsystem's relations."""


@dataclass(frozen=True)
class Subsystem:
    """Subgroup of Z^k generated by the given vectors (columns of the
    generator matrix); generators may be marked spherical by index."""

    generators: tuple          # tuple of length-k integer tuples
    spherical: tuple = ()      # indices into `generators`

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if gens:
            k = len(gens[0])
            if any(len(g) != k for g in gens):
                raise ModelError("subsystem generators of unequal length")
        for i in self.spherical:
            if not 0 <= i < len(gens):
                raise ModelError(f"spherical index {i} out of range")

    def rank_ambient(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    def matrix(self) -> ExactMatrix:
        k, m = self.rank_ambient(), len(self.generators)
        return ExactMatrix(ZZ, [[self.generators[j][i] for j in range(m)]
                                for i in range(k)], k, m)


@dataclass(frozen=True)
class SignCharacter:
    """Values in {+1, -1} on the subsystem generators."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(v not in (1, -1) for v in vals):
            raise ModelError(f"character values must be +-1, got {list(vals)}")

    @classmethod
    def trivial(cls, m: int) -> "SignCharacter":
        return cls((1,) * m)


@dataclass(frozen=True)
class LocalSystem:
    """Invertible holonomy value per free class generator."""

    values: tuple


class _QuotientGroup:
    """Z^k / G via a Smith decomposition of the generator matrix: in the
    transformed coordinates w = U v the subgroup is diag(s_1..s_r) Z^r x 0,
    so cosets are labelled by w reduced mod the moduli."""

    def __init__(self, rank: int, subsystem: Subsystem):
        self.rank = rank
        self.subsystem = subsystem
        if subsystem.generators and subsystem.rank_ambient() != rank:
            raise ModelError(
                f"subsystem lives in Z^{subsystem.rank_ambient()}, complex in Z^{rank}")
        if subsystem.generators:
            snf = smith_normal_form(subsystem.matrix())
            self.snf = snf
            diag = snf.diagonal
            self.moduli = tuple(abs(diag[i]) if i < len(diag) else 0
                                for i in range(rank))
        else:
            self.snf = None
            self.moduli = (0,) * rank

    def label(self, cls) -> tuple:
        if self.snf is None:
            return tuple(cls)
        U = self.snf.U
        w = [sum(U.at(i, j) * cls[j] for j in range(self.rank))
             for i in range(self.rank)]
        return tuple(w[i] % m if m else w[i] for i, m in enumerate(self.moduli))

    def representative(self, label) -> tuple:
        if self.snf is None:
            return tuple(label)
        Uinv = self.snf.Uinv
        return tuple(sum(Uinv.at(i, j) * label[j] for j in range(self.rank))
                     for i in range(self.rank))

    def subgroup_coordinates(self, g) -> list:
        """x with (generator matrix) * x = g, for g in G."""
        snf = self.snf
        m = len(self.subsystem.generators)
        U, V = snf.U, snf.V
        diag = snf.diagonal
        w = [sum(U.at(i, j) * g[j] for j in range(self.rank))
             for i in range(self.rank)]
        y = [0] * m
        for i in range(min(self.rank, m)):
            if diag[i]:
                if w[i] % diag[i]:
                    raise ModelError(f"{list(g)} is not in the subsystem")
                y[i] = w[i] // diag[i]
            elif w[i]:
                raise ModelError(f"{list(g)} is not in the subsystem")
        for i in range(min(self.rank, m), self.rank):
            if w[i]:
                raise ModelError(f"{list(g)} is not in the subsystem")
        return [sum(V.at(i, j) * y[j] for j in range(m)) for i in range(m)]


def _character_sign(character: SignCharacter, coords) -> int:
    s = 1
    for v, x in zip(character.values, coords):
        if v == -1 and x % 2:
            s = -s
    return s


def _check_character(subsystem: Subsystem, character: SignCharacter):
    if len(character.values) != len(subsystem.generators):
        raise CharacterError(
            f"character has {len(character.values)} values for "
            f"{len(subsystem.generators)} generators")
    for i in subsystem.spherical:
        if character.values[i] != 1:
            raise CharacterError(
                f"generator {i} is spherical and must carry character +1")
    if not subsystem.generators:
        return
    # consistency on relations: the character must vanish on ker of the
    # generator matrix (automatic when the generators are independent)
    for rel in kernel_basis(subsystem.matrix()):
        if _character_sign(character, rel) != 1:
            raise CharacterError(
                f"character is inconsistent on the relation {rel}")


def quotient_by_subsystem(c: GradedComplex, subsystem: Subsystem,
                          character: SignCharacter | None = None) -> GradedComplex:
    """Collapse disk classes along the subsystem, twisting coefficients by the
    sign character.

    When the Maslov index vanishes on the subsystem the grading is unchanged;
    when it takes nonzero (necessarily even) values the quotient is graded by
    the surviving degree classes modulo the gcd of those values, and a
    character must be supplied explicitly.
    """
    ring = c.ring
    if not isinstance(ring, GroupRing) or not ring.is_free:
        raise ModelError("quotient needs a complex over a free group ring")
    if c.maslov is None:
        raise ModelError("complex carries no Maslov form")
    mu_values = [c.maslov(g) for g in subsystem.generators]
    odd = [m for m in mu_values if m % 2]
    if odd:
        raise ObstructionError(
            f"subsystem generator has odd Maslov index {odd[0]}: coherent "
            "sign identifications exist only along even-Maslov classes, so "
            "the quotient complex is not, in general, a module over these "
            "classes; restrict to the even-Maslov subring")
    nonzero = [m for m in mu_values if m]
    if nonzero and character is None:
        raise ObstructionError(
            "quotient along classes of nonzero (even) Maslov index needs an "
            "explicit sign character")
    if character is None:
        character = SignCharacter.trivial(len(subsystem.generators))
    _check_character(subsystem, character)

    quot = _QuotientGroup(ring.rank, subsystem)
    new_ring = GroupRing(ring.rank, ring.base, quot.moduli)

    def push(elem: GroupRingElement) -> GroupRingElement:
        acc: dict = {}
        for cls, coeff in elem.terms:
            label = quot.label(cls)
            rep = quot.representative(label)
            g = tuple(a - b for a, b in zip(cls, rep))
            sign = _character_sign(character, quot.subgroup_coordinates(g))
            cur = acc.get(label, ring.base.zero())
            val = coeff if sign == 1 else ring.base.neg(coeff)
            acc[label] = ring.base.add(cur, val)
        return new_ring.element(acc)

    boundary = {src: {tgt: push(elem) for tgt, elem in row.items()}
                for src, row in c.boundary.items()}
    # Maslov form in the transformed coordinates; on torsion coordinates the
    # value is zero when mu(G) = 0 and a representative mod the new degree
    # modulus otherwise
    if quot.snf is not None:
        Uinv = quot.snf.Uinv
        mu_bar = tuple(sum(c.maslov.values[j] * Uinv.at(j, i)
                           for j in range(ring.rank))
                       for i in range(ring.rank))
    else:
        mu_bar = c.maslov.values
    modulus = c.degree_modulus
    if nonzero:
        d = 0
        for m in nonzero:
            d = _gcd(d, m)
        modulus = _gcd(modulus, d) if modulus else d
    out = GradedComplex(f"{c.name}/G", new_ring, c.generators, boundary,
                        maslov=MaslovForm(mu_bar), dimension=c.dimension,
                        period=c.period if not nonzero else
                        (c.period or Period(None, modulus)),
                        degree_modulus=modulus)
    out.validate_grading()
    return out


def novikov_specialize(c: GradedComplex) -> GradedComplex:
    """e^A -> t^(mu(A)/N_L); grading preserved with deg t = -N_L.

    Equals the quotient along ker(mu) followed by the identification of the
    quotient group with the powers of t.
    """
    ring = c.ring
    if not isinstance(ring, GroupRing) or not ring.is_free:
        raise ModelError("Novikov specialization needs a free group-ring complex")
    if c.maslov is None:
        raise ModelError("complex carries no Maslov form")
    n_min = c.maslov.minimal_maslov()
    if n_min is None:
        raise ModelError("minimal Maslov number is infinite (mu = 0); "
                         "nothing to specialize")
    new_ring = LaurentRing(ring.base, t_degree=-n_min)

    def push(elem: GroupRingElement):
        acc: dict = {}
        for cls, coeff in elem.terms:
            mu = c.maslov(cls)
            if mu % n_min:
                raise RingError(
                    f"Maslov value {mu} not divisible by N_L = {n_min}")
            e = mu // n_min
            cur = acc.get(e, ring.base.zero())
            acc[e] = ring.base.add(cur, coeff)
        return new_ring.poly(acc)

    boundary = {src: {tgt: push(elem) for tgt, elem in row.items()}
                for src, row in c.boundary.items()}
    out = GradedComplex(f"{c.name}@novikov", new_ring, c.generators, boundary,
                        maslov=None, dimension=c.dimension,
                        period=Period("t", n_min),
                        degree_modulus=c.degree_modulus)
    out.validate_grading()
    return out


def twist_local_system(c: GradedComplex, system: LocalSystem) -> GradedComplex:
    """Multiply the coefficient on e^A by the holonomy of A, the product of
    the generator values with exponents A."""
    ring = c.ring
    if not isinstance(ring, GroupRing) or not ring.is_free:
        raise ModelError("twisting needs a complex over a free group ring")
    base = ring.base
    values = tuple(_coerce_value(base, v) for v in system.values)
    if len(values) != ring.rank:
        raise ModelError(f"{len(values)} holonomy values for rank {ring.rank}")
    for v in values:
        if not base.is_unit(v):
            raise RingError(f"holonomy value {v!r} is not invertible in {base.name}")
    inverses = tuple(base.inv(v) for v in values)

    def holonomy(cls):
        h = base.one()
        for v, vinv, x in zip(values, inverses, cls):
            factor = v if x >= 0 else vinv
            for _ in range(abs(x)):
                h = base.mul(h, factor)
        return h

    def push(elem: GroupRingElement):
        return ring.element({cls: base.mul(coeff, holonomy(cls))
                             for cls, coeff in elem.terms})

    boundary = {src: {tgt: push(elem) for tgt, elem in row.items()}
                for src, row in c.boundary.items()}
    out = GradedComplex(f"{c.name}@twist", ring, c.generators, boundary,
                        maslov=c.maslov, dimension=c.dimension,
                        period=c.period, degree_modulus=c.degree_modulus)
    out.validate_grading()
    return out


def change_coefficients(c: GradedComplex, target: Ring) -> GradedComplex:
    """Entrywise image of all coefficients in Z, Q, F_p or Z/m."""
    if not isinstance(target, (type(ZZ), type(QQ), PrimeField, ModularRing)):
        raise RingError(f"unsupported coefficient ring {target!r}")
    ring = c.ring
    if isinstance(ring, GroupRing):
        new_ring = GroupRing(ring.rank, target, ring.moduli)
        coerce = _coercion(ring.base, target)

        def push(elem):
            return new_ring.element({cls: coerce(v) for cls, v in elem.terms})
    elif isinstance(ring, LaurentRing):
        new_ring = LaurentRing(target, t_degree=ring.t_degree)
        coerce = _coercion(ring.base, target)

        def push(elem):
            return new_ring.poly({e: coerce(v) for e, v in elem.terms})
    else:
        new_ring = target
        coerce = _coercion(ring, target)

        def push(elem):
            return coerce(elem)

    boundary = {src: {tgt: push(elem) for tgt, elem in row.items()}
                for src, row in c.boundary.items()}
    out = GradedComplex(f"{c.name}%{target.name}", new_ring, c.generators,
                        boundary, maslov=c.maslov, dimension=c.dimension,
                        period=c.period, degree_modulus=c.degree_modulus)
    out.validate_grading()
    return out


def _coerce_value(base: Ring, v):
    """Bring an int or Fraction holonomy value into the base ring."""
    if isinstance(v, Fraction):
        return _coercion(QQ, base)(v) if base != QQ else v
    if isinstance(v, int):
        return base.from_int(v)
    return v


def _coercion(base: Ring, target: Ring):
    if base == target:
        return lambda v: v
    if base == ZZ:
        return target.from_int
    if base == QQ:
        if target == ZZ:
            def to_int(v):
                v = Fraction(v)
                if v.denominator != 1:
                    raise RingError(f"{v} is not an integer")
                return v.numerator
            return to_int
        if isinstance(target, (PrimeField, ModularRing)):
            def to_mod(v):
                v = Fraction(v)
                return target.mul(target.from_int(v.numerator),
                                  target.inv(target.from_int(v.denominator)))
            return to_mod
    raise RingError(f"no coefficient map {base.name} -> {target.name}")


# ---------------------------------------------------------------------------
# JSON interface

def parse_specialization_json(text: str):
    """Parse {"generators": [[int]], "character": [+-1], "holonomy": [...]}
    into (Subsystem | None, SignCharacter | None, LocalSystem | None).

    Holonomy values are integers or {"num": int, "den": int} rationals.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from None
    if not isinstance(raw, dict):
        raise SchemaError("top level: expected an object")
    unknown = set(raw) - {"generators", "character", "holonomy"}
    if unknown:
        raise SchemaError(f"unknown field {sorted(unknown)[0]!r}")
    subsystem = None
    character = None
    holonomy = None
    if "generators" in raw:
        gens = raw["generators"]
        if not isinstance(gens, list) or any(
                not isinstance(g, list) or any(not isinstance(x, int) or
                                               isinstance(x, bool) for x in g)
                for g in gens):
            raise SchemaError("generators: expected a list of integer vectors")
        subsystem = Subsystem(tuple(tuple(g) for g in gens))
    if "character" in raw:
        vals = raw["character"]
        if not isinstance(vals, list) or any(v not in (1, -1) for v in vals):
            raise SchemaError("character: expected a list of +-1")
        character = SignCharacter(tuple(vals))
    if "holonomy" in raw:
        vals = raw["holonomy"]
        if not isinstance(vals, list):
            raise SchemaError("holonomy: expected a list")
        parsed = []
        for i, v in enumerate(vals):
            parsed.append(parse_holonomy_value(v, f"holonomy[{i}]"))
        holonomy = LocalSystem(tuple(parsed))
    return subsystem, character, holonomy


def parse_holonomy_value(v, path="holonomy"):
    if isinstance(v, bool):
        raise SchemaError(f"{path}: expected int or num/den object")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, dict):
        if set(v) != {"num", "den"}:
            raise SchemaError(f"{path}: expected fields num, den")
        num, den = v["num"], v["den"]
        if not isinstance(num, int) or not isinstance(den, int) or den == 0:
            raise SchemaError(f"{path}: num/den must be integers, den nonzero")
        return Fraction(num, den)
    raise SchemaError(f"{path}: expected int or num/den object")
