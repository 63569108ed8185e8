"""Heights, characteristics and types for rank-1 torsion-free data.

A characteristic is a height sequence indexed by all primes.  We only
handle sequences that are eventually constant with the constant equal
to 0 or infinity: a ``default`` height plus a finite exception map.
That covers the integers (all heights 0), the rationals (all infinite),
every localization of the integers, and everything in between that the
deciders need.

Two characteristics are *equivalent* when they differ at finitely many
primes and both values are finite wherever they differ.  An equivalence
class is a type; rank-1 torsion-free groups are isomorphic exactly when
their types agree, which is why canonical group forms key rational
summands by a type representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Mapping, Union

from .arith import is_prime
from .errors import NonTorsionFreeInput, ParseError

if TYPE_CHECKING:  # pragma: no cover
    from .groups import CanonicalGroup


class _InfiniteHeight:
    """The height of an element divisible by every power of a prime.

    A singleton, strictly above every integer height.
    """

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


INF = _InfiniteHeight()

Height = Union[int, _InfiniteHeight]


def _check_height(h: Height) -> Height:
    if h is INF:
        return h
    if isinstance(h, int) and not isinstance(h, bool) and h >= 0:
        return h
    raise ValueError(f"height must be a non-negative integer or INF, got {h!r}")


def height_to_text(h: Height) -> str:
    return "inf" if h is INF else str(h)


@dataclass(frozen=True)
class Characteristic:
    """Eventually-constant height sequence over all primes.

    ``default`` (0 or INF) is the height at every prime not listed in
    ``exceptions``; exception entries never repeat a prime and never
    carry the default value.

    >>> Characteristic(0, {2: 3})
    Characteristic(default=0, exceptions=((2, 3),))
    >>> Characteristic(0, {2: 0})
    Characteristic(default=0, exceptions=())
    """

    default: Height
    exceptions: tuple[tuple[int, Height], ...] = ()

    def __init__(self, default: Height, exceptions: Mapping[int, Height] | Iterable[tuple[int, Height]] = ()) -> None:
        if default is not INF and default != 0:
            raise ValueError("characteristic default must be 0 or INF")
        items = exceptions.items() if isinstance(exceptions, Mapping) else exceptions
        cleaned: dict[int, Height] = {}
        for p, h in items:
            if not is_prime(p):
                raise ValueError(f"exception index {p} is not prime")
            _check_height(h)
            if p in cleaned and cleaned[p] != h:
                raise ValueError(f"conflicting heights for prime {p}")
            if h is default or h == default:
                continue
            cleaned[p] = h
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "exceptions", tuple(sorted(cleaned.items())))

    def height_at(self, p: int) -> Height:
        for q, h in self.exceptions:
            if q == p:
                return h
        return self.default

    @property
    def is_all_infinite(self) -> bool:
        """True exactly for the characteristic of the full rationals."""
        return self.default is INF and not self.exceptions

    @property
    def is_all_zero(self) -> bool:
        return self.default == 0 and not self.exceptions

    def type_representative(self) -> "Characteristic":
        """Canonical member of this characteristic's equivalence class.

        Finite deviations from the default are equivalence-irrelevant,
        so the representative keeps only the primes whose height sits on
        the opposite side of finite/infinite from the default.
        """
        if self.default is INF:
            flips = {p: 0 for p, h in self.exceptions if h is not INF}
        else:
            flips = {p: INF for p, h in self.exceptions if h is INF}
        return Characteristic(self.default, flips)

    def sort_key(self):
        exc = tuple((p, (1, 0) if h is INF else (0, h)) for p, h in self.exceptions)
        return (0 if self.default == 0 else 1, exc)

    def render(self) -> str:
        """Text form ``default; p1:h1, p2:h2, ...`` used in reports."""
        head = height_to_text(self.default)
        if not self.exceptions:
            return head
        tail = ", ".join(f"{p}:{height_to_text(h)}" for p, h in self.exceptions)
        return f"{head}; {tail}"

    def __str__(self) -> str:
        return self.render()


def parse_characteristic(text: str, base_position: int = 0) -> Characteristic:
    """Parse ``("0"|"inf") (";" p ":" (n|"inf"))*``; "," also separates.

    ``base_position`` offsets error positions when the text is embedded
    in a larger expression.
    """
    src = text.strip()
    parts = [piece.strip() for piece in src.replace(",", ";").split(";")]
    if not parts or parts[0] not in ("0", "inf"):
        raise ParseError("characteristic must start with '0' or 'inf'", base_position)
    default: Height = 0 if parts[0] == "0" else INF
    exceptions: dict[int, Height] = {}
    for piece in parts[1:]:
        if not piece:
            raise ParseError("empty characteristic entry", base_position)
        if ":" not in piece:
            raise ParseError(f"expected 'prime:height', got {piece!r}", base_position)
        p_text, h_text = (s.strip() for s in piece.split(":", 1))
        if not p_text.isdigit():
            raise ParseError(f"prime expected, got {p_text!r}", base_position)
        p = int(p_text)
        if not is_prime(p):
            raise ParseError(f"{p} is not prime", base_position)
        if h_text == "inf":
            h: Height = INF
        elif h_text.isdigit():
            h = int(h_text)
        else:
            raise ParseError(f"height expected, got {h_text!r}", base_position)
        if p in exceptions and exceptions[p] != h:
            raise ParseError(f"conflicting heights for prime {p}", base_position)
        exceptions[p] = h
    return Characteristic(default, exceptions)


def equivalent(a: Characteristic, b: Characteristic) -> bool:
    """Whether a and b define the same type.

    They must agree at all but finitely many primes with both heights
    finite at every disagreement.  With different defaults the
    sequences disagree at cofinitely many primes, so this reduces to a
    scan of the union of finite exception sets.

    >>> equivalent(CHAR_Z, Characteristic(0, {2: 3}))
    True
    >>> equivalent(CHAR_Z, CHAR_Q)
    False
    """
    if (a.default is INF) != (b.default is INF):
        return False
    support = {p for p, _ in a.exceptions} | {p for p, _ in b.exceptions}
    for p in support:
        ha, hb = a.height_at(p), b.height_at(p)
        if ha != hb and (ha is INF or hb is INF):
            return False
    return True


@dataclass(frozen=True, eq=False)
class GroupType:
    """An equivalence class of characteristics."""

    representative: Characteristic

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupType):
            return NotImplemented
        return equivalent(self.representative, other.representative)

    def __hash__(self) -> int:
        return hash(self.representative.type_representative())

    def __str__(self) -> str:
        return self.representative.type_representative().render()


# Named characteristics: the integers, the full rationals, and the
# localization of the integers at a single prime p (denominators coprime
# to p, hence infinite height at every other prime and height 0 at p).
CHAR_Z = Characteristic(0)
CHAR_Q = Characteristic(INF)


def localization_char(p: int) -> Characteristic:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Characteristic(INF, {p: 0})


def canonical_characteristics() -> dict[str, Characteristic]:
    """The named constants, keyed the way reports label them."""
    out = {"Z": CHAR_Z, "Q": CHAR_Q}
    for p in (2, 3, 5):
        out[f"Q_({p})"] = localization_char(p)
    return out


def is_homogeneous(group: "CanonicalGroup") -> bool:
    """Whether all rank-1 summands of a torsion-free group share a type.

    Groups in the representable class are completely decomposable, so
    the element-level condition reduces to pairwise equivalence of the
    summand characteristics.  Raises NonTorsionFreeInput when the group
    has torsion.
    """
    if group.has_torsion():
        raise NonTorsionFreeInput("homogeneity is defined for torsion-free groups only")
    chars = [c for c, _ in group.rational_atoms()]
    return all(equivalent(chars[0], c) for c in chars[1:])
