"""Canonical forms for direct sums of uniform abelian groups.

The representable universe is: direct sums of
  * cyclic groups of prime-power order,
  * quasicyclic (Prufer) groups,
  * rank-1 rational groups given by an eventually-constant characteristic,
with multiplicities in {1, 2, ...} or countably infinite (OMEGA), plus
prime-indexed families that place the same local shape at every prime
outside a finite exception set.

A ``CanonicalGroup`` stores three things:

``rationals``
    torsion-free summands, keyed by the type representative of their
    characteristic (rank-1 groups are isomorphic iff their types agree,
    so this key is exactly the isomorphism class),
``generic``
    the p-primary shape placed at every prime not listed in
    ``exceptions`` (empty when the group names only finitely many
    primes), and
``exceptions``
    full replacement shapes at finitely many primes.

Equality of canonical forms is isomorphism on this class, which makes
every decider a structural check.  All values are immutable; every
operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .arith import is_prime
from .characteristics import Characteristic


class _Omega:
    """Countably infinite multiplicity; absorbs addition and scaling."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "omega"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        return self

    __rmul__ = __mul__


OMEGA = _Omega()

Multiplicity = Union[int, _Omega]


def check_multiplicity(m: Multiplicity) -> Multiplicity:
    if m is OMEGA:
        return m
    if isinstance(m, int) and not isinstance(m, bool) and m >= 1:
        return m
    raise ValueError(f"multiplicity must be a positive integer or OMEGA, got {m!r}")


def add_mult(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a + b


def mul_mult(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a * b


def mult_to_json(m: Multiplicity):
    return "omega" if m is OMEGA else m


# ---------------------------------------------------------------------------
# Building blocks, as they appear in descriptors.


def _check_prime(p: int) -> int:
    if not (isinstance(p, int) and is_prime(p)):
        raise ValueError(f"{p!r} is not a prime")
    return p


@dataclass(frozen=True)
class CyclicAtom:
    """Cyclic group of order p**n."""

    p: int
    n: int

    def __post_init__(self):
        _check_prime(self.p)
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"cyclic exponent must be >= 1, got {self.n!r}")


@dataclass(frozen=True)
class PruferAtom:
    """Quasicyclic group: the divisible hull of the order-p cyclic group."""

    p: int

    def __post_init__(self):
        _check_prime(self.p)


@dataclass(frozen=True)
class RationalAtom:
    """Rank-1 torsion-free group with the given characteristic."""

    char: Characteristic


@dataclass(frozen=True)
class TowerAtom:
    """One copy of every cyclic p-power group at a single prime p."""

    p: int

    def __post_init__(self):
        _check_prime(self.p)


@dataclass(frozen=True)
class FixedExponent:
    """Family template: the cyclic group of order p**exponent at each prime."""

    exponent: int

    def __post_init__(self):
        if not (isinstance(self.exponent, int) and self.exponent >= 1):
            raise ValueError(f"family exponent must be >= 1, got {self.exponent!r}")


@dataclass(frozen=True)
class PruferAll:
    """Family template: the quasicyclic group at each prime."""


@dataclass(frozen=True)
class UnboundedTower:
    """Family template: all cyclic p-power groups at each prime."""


FamilyTemplate = Union[FixedExponent, PruferAll, UnboundedTower]


@dataclass(frozen=True)
class PrimeFamily:
    """A template applied at every prime outside ``excluded``."""

    template: FamilyTemplate
    multiplicity: Multiplicity = 1
    excluded: tuple[int, ...] = ()

    def __init__(self, template, multiplicity: Multiplicity = 1, excluded: Iterable[int] = ()):
        if not isinstance(template, (FixedExponent, PruferAll, UnboundedTower)):
            raise ValueError(f"unknown family template {template!r}")
        check_multiplicity(multiplicity)
        banned = tuple(sorted({_check_prime(p) for p in excluded}))
        object.__setattr__(self, "template", template)
        object.__setattr__(self, "multiplicity", multiplicity)
        object.__setattr__(self, "excluded", banned)


DescriptorPart = Union[CyclicAtom, PruferAtom, RationalAtom, TowerAtom, PrimeFamily]


@dataclass(frozen=True)
class GroupDescriptor:
    """Pre-canonical formal sum of parts with multiplicities."""

    parts: tuple[tuple[DescriptorPart, Multiplicity], ...]

    def __init__(self, parts: Iterable[tuple[DescriptorPart, Multiplicity]]):
        cleaned = []
        for part, mult in parts:
            if not isinstance(part, (CyclicAtom, PruferAtom, RationalAtom, TowerAtom, PrimeFamily)):
                raise ValueError(f"unknown descriptor part {part!r}")
            cleaned.append((part, check_multiplicity(mult)))
        object.__setattr__(self, "parts", tuple(cleaned))


# ---------------------------------------------------------------------------
# p-local shapes.


@dataclass(frozen=True)
class LocalShape:
    """p-primary content at one prime (or at every generic prime).

    ``cyclic`` maps exponents to multiplicities, ``prufer`` counts
    quasicyclic copies, ``tower`` counts copies of the full unbounded
    cyclic tower.  A tower with multiplicity OMEGA already contains
    every cyclic layer countably often, so finite cyclic entries are
    absorbed into it (this keeps equality of shapes equal to
    isomorphism of the local parts).
    """

    cyclic: tuple[tuple[int, Multiplicity], ...] = ()
    prufer: Multiplicity = 0
    tower: Multiplicity = 0

    @staticmethod
    def make(cyclic: Mapping[int, Multiplicity] | Iterable[tuple[int, Multiplicity]] = (),
             prufer: Multiplicity = 0, tower: Multiplicity = 0) -> "LocalShape":
        items = cyclic.items() if isinstance(cyclic, Mapping) else cyclic
        acc: dict[int, Multiplicity] = {}
        for n, m in items:
            if m == 0:
                continue
            if not (isinstance(n, int) and n >= 1):
                raise ValueError(f"cyclic exponent must be >= 1, got {n!r}")
            check_multiplicity(m)
            acc[n] = add_mult(acc.get(n, 0), m) if n in acc else m
        if prufer != 0:
            check_multiplicity(prufer)
        if tower != 0:
            check_multiplicity(tower)
        if tower is OMEGA:
            acc = {}
        return LocalShape(tuple(sorted(acc.items())), prufer, tower)

    @property
    def is_trivial(self) -> bool:
        return not self.cyclic and self.prufer == 0 and self.tower == 0

    @property
    def is_bounded(self) -> bool:
        """Some integer kills the whole shape (no tower, no prufer part)."""
        return self.tower == 0 and self.prufer == 0

    @property
    def reduced_is_bounded(self) -> bool:
        return self.tower == 0

    @property
    def is_unbounded(self) -> bool:
        """Elements of unbounded order exist (tower or quasicyclic part)."""
        return self.tower != 0 or self.prufer != 0

    @property
    def has_exponent_one_layer(self) -> bool:
        """An order-p cyclic direct summand is present."""
        if self.tower != 0:
            return True
        return any(n == 1 for n, _ in self.cyclic)

    @property
    def is_semisimple(self) -> bool:
        return self.prufer == 0 and self.tower == 0 and all(n == 1 for n, _ in self.cyclic)

    def add(self, other: "LocalShape") -> "LocalShape":
        acc = dict(self.cyclic)
        for n, m in other.cyclic:
            acc[n] = add_mult(acc[n], m) if n in acc else m
        return LocalShape.make(acc, add_mult(self.prufer, other.prufer),
                               add_mult(self.tower, other.tower))

    def reduced(self) -> "LocalShape":
        return LocalShape(self.cyclic, 0, self.tower)

    def divisible_only(self) -> "LocalShape":
        return LocalShape((), self.prufer, 0)


TRIVIAL_SHAPE = LocalShape()


# ---------------------------------------------------------------------------
# Canonical groups.


@dataclass(frozen=True)
class CanonicalGroup:
    rationals: tuple[tuple[Characteristic, Multiplicity], ...] = ()
    generic: LocalShape = TRIVIAL_SHAPE
    exceptions: tuple[tuple[int, LocalShape], ...] = ()

    @staticmethod
    def _build(rationals: Mapping[Characteristic, Multiplicity],
               generic: LocalShape,
               exceptions: Mapping[int, LocalShape]) -> "CanonicalGroup":
        rat = tuple(sorted(((c, m) for c, m in rationals.items() if m != 0),
                           key=lambda cm: cm[0].sort_key()))
        exc = tuple(sorted((p, shape) for p, shape in exceptions.items() if shape != generic))
        return CanonicalGroup(rat, generic, exc)

    # -- basic views --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.rationals and self.generic.is_trivial and not self.exceptions

    def local_at(self, p: int) -> LocalShape:
        """The p-primary shape effective at prime p."""
        _check_prime(p)
        for q, shape in self.exceptions:
            if q == p:
                return shape
        return self.generic

    def exception_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exceptions)

    def rational_atoms(self) -> tuple[tuple[Characteristic, Multiplicity], ...]:
        return self.rationals

    def has_torsion(self) -> bool:
        return not (self.generic.is_trivial and not self.exceptions)

    # -- part extractors -----------------------------------------------------

    def torsion_part(self) -> "CanonicalGroup":
        return CanonicalGroup._build({}, self.generic, dict(self.exceptions))

    def torsion_free_part(self) -> "CanonicalGroup":
        return CanonicalGroup._build(dict(self.rationals), TRIVIAL_SHAPE, {})

    def p_primary(self, p: int) -> "CanonicalGroup":
        shape = self.local_at(p)
        return CanonicalGroup._build({}, TRIVIAL_SHAPE, {p: shape})

    def divisible_part(self) -> "CanonicalGroup":
        rat = {c: m for c, m in self.rationals if c.is_all_infinite}
        exc = {p: shape.divisible_only() for p, shape in self.exceptions}
        return CanonicalGroup._build(rat, self.generic.divisible_only(), exc)

    def reduced_part(self) -> "CanonicalGroup":
        rat = {c: m for c, m in self.rationals if not c.is_all_infinite}
        exc = {p: shape.reduced() for p, shape in self.exceptions}
        return CanonicalGroup._build(rat, self.generic.reduced(), exc)

    def __str__(self) -> str:
        from .parser import render

        return render(self)


ZERO_GROUP = CanonicalGroup()


# ---------------------------------------------------------------------------
# Canonicalization and sums.


def canonicalize(d: GroupDescriptor | CanonicalGroup) -> CanonicalGroup:
    """Fold a descriptor into canonical form.

    Equal cyclic/quasicyclic layers merge; rational summands with
    equivalent characteristics merge under the type representative;
    family exclusions become per-prime replacement shapes.  Canonical
    groups pass through unchanged, so the map is idempotent.
    """
    if isinstance(d, CanonicalGroup):
        return d
    if not isinstance(d, GroupDescriptor):
        raise ValueError(f"cannot canonicalize {d!r}")

    rationals: dict[Characteristic, Multiplicity] = {}
    local_cyclic: dict[int, dict[int, Multiplicity]] = {}
    local_prufer: dict[int, Multiplicity] = {}
    local_tower: dict[int, Multiplicity] = {}
    families: list[tuple[FamilyTemplate, Multiplicity, tuple[int, ...]]] = []

    def bump(store: dict, key, m: Multiplicity) -> None:
        store[key] = add_mult(store[key], m) if key in store else m

    for part, mult in d.parts:
        if isinstance(part, CyclicAtom):
            bump(local_cyclic.setdefault(part.p, {}), part.n, mult)
        elif isinstance(part, PruferAtom):
            bump(local_prufer, part.p, mult)
        elif isinstance(part, TowerAtom):
            bump(local_tower, part.p, mult)
        elif isinstance(part, RationalAtom):
            bump(rationals, part.char.type_representative(), mult)
        else:
            families.append((part.template, mul_mult(part.multiplicity, mult), part.excluded))

    generic_cyclic: dict[int, Multiplicity] = {}
    generic_prufer: Multiplicity = 0
    generic_tower: Multiplicity = 0
    for template, mult, _ in families:
        if isinstance(template, FixedExponent):
            bump(generic_cyclic, template.exponent, mult)
        elif isinstance(template, PruferAll):
            generic_prufer = add_mult(generic_prufer, mult)
        else:
            generic_tower = add_mult(generic_tower, mult)
    generic = LocalShape.make(generic_cyclic, generic_prufer, generic_tower)

    special = set(local_cyclic) | set(local_prufer) | set(local_tower)
    for _, _, excluded in families:
        special.update(excluded)

    exceptions: dict[int, LocalShape] = {}
    for p in special:
        cyc: dict[int, Multiplicity] = dict(local_cyclic.get(p, {}))
        pruf: Multiplicity = local_prufer.get(p, 0)
        tow: Multiplicity = local_tower.get(p, 0)
        for template, mult, excluded in families:
            if p in excluded:
                continue
            if isinstance(template, FixedExponent):
                bump(cyc, template.exponent, mult)
            elif isinstance(template, PruferAll):
                pruf = add_mult(pruf, mult)
            else:
                tow = add_mult(tow, mult)
        exceptions[p] = LocalShape.make(cyc, pruf, tow)

    return CanonicalGroup._build(rationals, generic, exceptions)


def group_of(*parts) -> CanonicalGroup:
    """Convenience constructor: each part is a DescriptorPart or a
    (DescriptorPart, multiplicity) pair."""
    normalized = []
    for part in parts:
        if isinstance(part, tuple) and len(part) == 2 and not isinstance(part[0], int):
            normalized.append(part)
        else:
            normalized.append((part, 1))
    return canonicalize(GroupDescriptor(normalized))


def direct_sum(*groups: CanonicalGroup) -> CanonicalGroup:
    """Direct sum; commutative and associative up to canonical equality."""
    rationals: dict[Characteristic, Multiplicity] = {}
    generic = TRIVIAL_SHAPE
    special: set[int] = set()
    for g in groups:
        for c, m in g.rationals:
            rationals[c] = add_mult(rationals[c], m) if c in rationals else m
        generic = generic.add(g.generic)
        special.update(g.exception_primes())
    exceptions = {}
    for p in special:
        shape = TRIVIAL_SHAPE
        for g in groups:
            shape = shape.add(g.local_at(p))
        exceptions[p] = shape
    return CanonicalGroup._build(rationals, generic, exceptions)


def is_isomorphic(g: CanonicalGroup, h: CanonicalGroup) -> bool:
    """Isomorphism test; on canonical forms this is plain equality."""
    return g == h


# ---------------------------------------------------------------------------
# Structural queries.


def torsion_part(g: CanonicalGroup) -> CanonicalGroup:
    return g.torsion_part()


def torsion_free_part(g: CanonicalGroup) -> CanonicalGroup:
    return g.torsion_free_part()


def p_primary(g: CanonicalGroup, p: int) -> CanonicalGroup:
    return g.p_primary(p)


def divisible_part(g: CanonicalGroup) -> CanonicalGroup:
    return g.divisible_part()


def reduced_part(g: CanonicalGroup) -> CanonicalGroup:
    return g.reduced_part()


def is_bounded(g: CanonicalGroup) -> bool:
    """Some nonzero integer kills g.

    False for any group with a torsion-free summand, a quasicyclic or
    tower part, or torsion at infinitely many primes (nontrivial
    generic shape).
    """
    if g.rationals:
        return False
    if not g.generic.is_trivial:
        return False
    return all(shape.is_bounded for _, shape in g.exceptions)


def torsion_free_rank(g: CanonicalGroup) -> Multiplicity:
    rank: Multiplicity = 0
    for _, m in g.rationals:
        rank = add_mult(rank, m)
    return rank


@dataclass(frozen=True)
class StructuralSummary:
    is_torsion: bool
    is_torsion_free: bool
    is_divisible: bool
    is_reduced: bool
    is_semisimple: bool

    def to_dict(self) -> dict:
        return {
            "is_torsion": self.is_torsion,
            "is_torsion_free": self.is_torsion_free,
            "is_divisible": self.is_divisible,
            "is_reduced": self.is_reduced,
            "is_semisimple": self.is_semisimple,
        }


def structural_predicates(g: CanonicalGroup) -> StructuralSummary:
    shapes = [g.generic] + [shape for _, shape in g.exceptions]
    return StructuralSummary(
        is_torsion=not g.rationals,
        is_torsion_free=not g.has_torsion(),
        is_divisible=g.reduced_part().is_zero,
        is_reduced=g.divisible_part().is_zero,
        is_semisimple=not g.rationals and all(s.is_semisimple for s in shapes),
    )


__all__ = [
    "OMEGA", "Multiplicity", "check_multiplicity", "add_mult", "mul_mult", "mult_to_json",
    "CyclicAtom", "PruferAtom", "RationalAtom", "TowerAtom",
    "FixedExponent", "PruferAll", "UnboundedTower", "PrimeFamily",
    "GroupDescriptor", "LocalShape", "TRIVIAL_SHAPE",
    "CanonicalGroup", "ZERO_GROUP", "canonicalize", "group_of", "direct_sum",
    "is_isomorphic", "torsion_part", "torsion_free_part", "p_primary",
    "divisible_part", "reduced_part", "is_bounded", "torsion_free_rank",
    "StructuralSummary", "structural_predicates",
]
