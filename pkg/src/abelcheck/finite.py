"""Exhaustive ground truth on finite abelian groups.

Everything here is brute force on purpose: subgroup enumeration walks
the full lattice, purity tests the defining equation for every divisor
of the exponent, extension problems are solved two independent ways
(integer congruence systems via Smith normal form, and plain
enumeration of all homomorphisms).  The point is to validate the
symbolic deciders against facts computed with no shared cleverness.

Groups are direct sums of cyclic groups of prime-power order; elements
are residue tuples matching the factor list.
"""

from __future__ import annotations

import re
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Mapping

from .arith import divisors, factorize, partitions
from .characteristics import INF, Height
from .errors import BoundExceeded, IllDefinedHom, NotASubgroup, NotCoprime
from .snf import integer_row_kernel, linear_system_solvable, smith_normal_form

DEFAULT_ORDER_BOUND = 512
DEFAULT_HOM_SPACE_CAP = 200_000

Element = tuple[int, ...]


class FiniteAbelianGroup:
    """Direct sum of cyclic groups of prime-power order.

    The constructor accepts arbitrary cyclic orders and refines them to
    the primary decomposition, sorted by (prime, exponent); two values
    with the same factor list are the same group.

    >>> str(FiniteAbelianGroup([6, 4]))
    'Z2 x Z4 x Z3'
    """

    __slots__ = ("factors", "_strides", "_cache")

    def __init__(self, orders: Iterable[int] = ()):
        refined: list[tuple[int, int]] = []
        for m in orders:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"cyclic order must be a positive integer, got {m!r}")
            for p, e in factorize(m).items():
                refined.append((p, e))
        refined.sort()
        self.factors = tuple(p**e for p, e in refined)
        strides = []
        acc = 1
        for m in self.factors:
            strides.append(acc)
            acc *= m
        self._strides = tuple(strides)
        self._cache: dict = {}

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteAbelianGroup):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup({list(self.factors)})"

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return " x ".join(f"Z{m}" for m in self.factors)

    @classmethod
    def from_string(cls, text: str) -> "FiniteAbelianGroup":
        """Parse "Z4 x Z2", "Z(2^2) x Z(2)", "Z1"; composites factor."""
        orders = []
        for raw in text.split("x"):
            token = raw.strip()
            if not token:
                raise ValueError(f"empty factor in {text!r}")
            m = re.fullmatch(r"[Zz](\d+)", token) or re.fullmatch(r"[Zz]\((\d+)\)", token)
            if m:
                orders.append(int(m.group(1)))
                continue
            m = re.fullmatch(r"[Zz]\((\d+)\^(\d+)\)", token)
            if m:
                orders.append(int(m.group(1)) ** int(m.group(2)))
                continue
            raise ValueError(f"cannot parse factor {token!r}")
        if any(m == 0 for m in orders):
            raise ValueError("Z0 is not a finite cyclic group")
        return cls(orders)

    # -- sizes --------------------------------------------------------------

    @property
    def order(self) -> int:
        return prod(self.factors) if self.factors else 1

    @property
    def exponent(self) -> int:
        return lcm(*self.factors) if self.factors else 1

    @property
    def rank(self) -> int:
        return len(self.factors)

    # -- element arithmetic --------------------------------------------------

    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def validate_element(self, a: Element) -> Element:
        if len(a) != len(self.factors) or any(
            not isinstance(c, int) or not 0 <= c < m for c, m in zip(a, self.factors)
        ):
            raise ValueError(f"{a!r} is not an element of {self}")
        return a

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.factors))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % m for x, m in zip(a, self.factors))

    def smul(self, k: int, a: Element) -> Element:
        return tuple((k * x) % m for x, m in zip(a, self.factors))

    def element_order(self, a: Element) -> int:
        out = 1
        for x, m in zip(a, self.factors):
            out = lcm(out, m // gcd(m, x))
        return out

    def elements(self) -> list[Element]:
        return [self.decode(i) for i in range(self.order)]

    # -- integer codes (mixed radix) ------------------------------------------

    def encode(self, a: Element) -> int:
        return sum(c * s for c, s in zip(a, self._strides))

    def decode(self, code: int) -> Element:
        out = []
        for m in self.factors:
            code, c = divmod(code, m)
            out.append(c)
        return tuple(out)

    def _add_codes(self, x: int, y: int) -> int:
        return self.encode(self.add(self.decode(x), self.decode(y)))

    def _scalar_code_map(self, n: int) -> list[int]:
        key = ("smul", n)
        if key not in self._cache:
            self._cache[key] = [self.encode(self.smul(n, self.decode(x))) for x in range(self.order)]
        return self._cache[key]

    def _multiples_set(self, n: int) -> frozenset[int]:
        key = ("nG", n)
        if key not in self._cache:
            self._cache[key] = frozenset(self._scalar_code_map(n))
        return self._cache[key]

    def primary_components(self) -> list[tuple[int, "FiniteAbelianGroup", list[int]]]:
        """(prime, component group, coordinate positions) per prime."""
        blocks: list[tuple[int, list[int]]] = []
        for i, m in enumerate(self.factors):
            p = min(factorize(m))
            if blocks and blocks[-1][0] == p:
                blocks[-1][1].append(i)
            else:
                blocks.append((p, [i]))
        return [(p, FiniteAbelianGroup([self.factors[i] for i in pos]), pos) for p, pos in blocks]


class Subgroup:
    """Subgroup of a FiniteAbelianGroup, stored as its full element set."""

    __slots__ = ("group", "codes", "_gens")

    def __init__(self, group: FiniteAbelianGroup, elements: Iterable[Element]):
        codes = frozenset(group.encode(group.validate_element(a)) for a in elements)
        if 0 not in codes:
            raise NotASubgroup("subgroup must contain the identity")
        for x in codes:
            for y in codes:
                if group._add_codes(x, y) not in codes:
                    raise NotASubgroup("element set is not closed under addition")
        self.group = group
        self.codes = codes
        self._gens: list[Element] | None = None

    @classmethod
    def _from_codes(cls, group: FiniteAbelianGroup, codes: frozenset[int]) -> "Subgroup":
        obj = object.__new__(cls)
        obj.group = group
        obj.codes = codes
        obj._gens = None
        return obj

    @classmethod
    def generated_by(cls, group: FiniteAbelianGroup, gens: Iterable[Element]) -> "Subgroup":
        codes = _closure_codes(group, [group.encode(group.validate_element(g)) for g in gens])
        return cls._from_codes(group, codes)

    @classmethod
    def trivial(cls, group: FiniteAbelianGroup) -> "Subgroup":
        return cls._from_codes(group, frozenset([0]))

    @classmethod
    def whole(cls, group: FiniteAbelianGroup) -> "Subgroup":
        return cls._from_codes(group, frozenset(range(group.order)))

    @property
    def order(self) -> int:
        return len(self.codes)

    def elements(self) -> list[Element]:
        return sorted(self.group.decode(c) for c in self.codes)

    def __contains__(self, a: Element) -> bool:
        return self.group.encode(self.group.validate_element(a)) in self.codes

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group == other.group and self.codes == other.codes

    def __hash__(self) -> int:
        return hash((self.group, self.codes))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generating_set()) or "0"
        return f"<subgroup of {self.group} generated by {gens}>"

    def generating_set(self) -> list[Element]:
        """Deterministic greedy generators (largest element order first)."""
        if self._gens is None:
            g = self.group
            span = frozenset([0])
            chosen: list[int] = []
            by_order = sorted(self.codes, key=lambda c: (-g.element_order(g.decode(c)), c))
            for code in by_order:
                if code in span:
                    continue
                chosen.append(code)
                span = _closure_codes(g, list(span) + [code])
                if len(span) == len(self.codes):
                    break
            self._gens = [g.decode(c) for c in chosen]
        return list(self._gens)


def _closure_codes(group: FiniteAbelianGroup, gen_codes: list[int]) -> frozenset[int]:
    span = {0}
    for g in gen_codes:
        if g in span:
            continue
        base = list(span)
        x = g
        while x not in span:
            span.update(group._add_codes(x, h) for h in base)
            x = group._add_codes(x, g)
    return frozenset(span)


def _require_subgroup(h: Subgroup, g: FiniteAbelianGroup) -> None:
    if not isinstance(h, Subgroup) or h.group != g:
        raise NotASubgroup(f"{h!r} is not a subgroup of {g}")


# ---------------------------------------------------------------------------
# Subgroup enumeration.


def _pgroup_subgroup_masks(part: FiniteAbelianGroup) -> list[int]:
    """All subgroups of a p-group as element bitmasks, deterministic order.

    Breadth-first closure over one generator per coset: adding g to a
    subgroup H closes up to the union of the cosets H, g+H, 2g+H, ...,
    and any subgroup arises along some such chain from 0.
    """
    n = part.order
    dec = [part.decode(x) for x in range(n)]
    factors = part.factors
    stride = part._strides
    add_table: list[list[int]] = []
    for x in range(n):
        dx = dec[x]
        row = []
        for y in range(n):
            dy = dec[y]
            row.append(sum(((a + b) % m) * s for a, b, m, s in zip(dx, dy, factors, stride)))
        add_table.append(row)

    seen = {1}  # mask of the trivial subgroup {0}
    frontier: list[tuple[int, list[int]]] = [(1, [0])]
    out = [1]
    while frontier:
        nxt: list[tuple[int, list[int]]] = []
        for sub_mask, members in frontier:
            covered = bytearray(n)
            for h in members:
                covered[h] = 1
            for g in range(1, n):
                if covered[g]:
                    continue
                row_g = add_table[g]
                for h in members:
                    covered[row_g[h]] = 1
                grown = sub_mask
                x = g
                while not (grown >> x) & 1:
                    row_x = add_table[x]
                    coset = 0
                    for h in members:
                        coset |= 1 << row_x[h]
                    grown |= coset
                    x = row_x[g]
                if grown not in seen:
                    seen.add(grown)
                    out.append(grown)
                    nxt.append((grown, [e for e in range(n) if (grown >> e) & 1]))
        frontier = nxt
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def enumerate_subgroups(g: FiniteAbelianGroup, bound: int | None = None) -> list[Subgroup]:
    """Complete, duplicate-free subgroup list (including 0 and g).

    Subgroups of a finite abelian group split over the primary
    components, so each Sylow part is enumerated on its own (closure
    search over generator candidates with canonical dedup) and the
    results are recombined.
    """
    limit = DEFAULT_ORDER_BOUND if bound is None else bound
    if g.order > limit:
        raise BoundExceeded(f"|G| = {g.order} exceeds the bound {limit}")
    comps = g.primary_components()
    if not comps:
        return [Subgroup.trivial(g)]

    per_comp: list[list[list[Element]]] = []
    for _, part, _ in comps:
        masks = _pgroup_subgroup_masks(part)
        local = []
        for mask in masks:
            local.append([part.decode(i) for i in range(part.order) if mask >> i & 1])
        per_comp.append(local)

    rank = g.rank
    out: list[Subgroup] = []
    for combo in product(*per_comp):
        full: list[list[int]] = [[0] * rank]
        for (_, _, positions), local_elements in zip(comps, combo):
            grown = []
            for base in full:
                for le in local_elements:
                    merged = base[:]
                    for pos, val in zip(positions, le):
                        merged[pos] = val
                    grown.append(merged)
            full = grown
        codes = frozenset(g.encode(tuple(e)) for e in full)
        out.append(Subgroup._from_codes(g, codes))
    return out


# ---------------------------------------------------------------------------
# Purity and summands.


def is_pure_subgroup(h: Subgroup, g: FiniteAbelianGroup) -> bool:
    """nH = H intersect nG for every integer n.

    nG depends only on n modulo the exponent and only through gcd, so
    checking the divisors of exponent(G) covers every integer.
    """
    _require_subgroup(h, g)
    for n in divisors(g.exponent):
        if n == 1:
            continue
        smap = g._scalar_code_map(n)
        n_h = {smap[c] for c in h.codes}
        if n_h != (h.codes & g._multiples_set(n)):
            return False
    return True


def _invariant_presentation(h: Subgroup) -> tuple[list[Element], list[int], list[list[int]]]:
    """Generators, invariant-factor orders, and the change-of-basis V.

    Writes h with generators g_u and diagonal relations: there are
    abstract generators g'_i of order s_i with g_u = sum_i V[u][i] g'_i.
    """
    gens = h.generating_set()
    if not gens:
        return [], [], []
    g = h.group
    t = len(gens)
    r = g.rank
    mat = [list(e) for e in gens]
    mat += [[g.factors[i] if j == i else 0 for j in range(r)] for i in range(r)]
    relations = [row[:t] for row in integer_row_kernel(mat)]
    _, s, v = smith_normal_form(relations)
    orders = [s[i][i] for i in range(t)]
    assert all(d > 0 for d in orders), "finite subgroup must have full relation rank"
    return gens, orders, v


def abstract_presentation(h: Subgroup) -> tuple[FiniteAbelianGroup, list[Element]]:
    """The subgroup as an abstract group, plus images of its generators.

    Returns (M, images) where M is isomorphic to h and images[u] is the
    element of M corresponding to h.generating_set()[u].
    """
    gens, orders, v = _invariant_presentation(h)
    split: list[tuple[int, int, int]] = []  # (prime, exponent, invariant index)
    for idx, s in enumerate(orders):
        if s == 1:
            continue
        for p, e in sorted(factorize(s).items()):
            split.append((p, e, idx))
    split.sort()
    abstract = FiniteAbelianGroup([p**e for p, e, _ in split])
    images = [tuple(v[u][idx] % (p**e) for p, e, idx in split) for u in range(len(gens))]
    return abstract, images


def _extension_exists(g: FiniteAbelianGroup, gen_coords: list[Element],
                      images: list[Element], m: FiniteAbelianGroup) -> bool:
    """Does some hom g -> m send each generator to its image?

    One congruence system per coordinate of m, solved exactly by Smith
    elimination over the integers.  The image of g's i-th standard
    generator in the coordinate with modulus k must be a multiple of
    k/gcd(factor_i, k); substituting that multiple as the unknown
    absorbs g's cyclic relations, leaving one row per prescribed
    generator plus one slack column per row for the modulus.
    """
    t = len(gen_coords)
    if t == 0:
        return True
    r = g.rank
    for j, k in enumerate(m.factors):
        scale = [k // gcd(mi, k) for mi in g.factors]
        rows = []
        for u in range(t):
            coeffs = [gen_coords[u][i] * scale[i] for i in range(r)]
            rows.append(coeffs + [k if l == u else 0 for l in range(t)])
        rhs = [images[u][j] for u in range(t)]
        if not linear_system_solvable(rows, rhs):
            return False
    return True


def is_direct_summand(h: Subgroup, g: FiniteAbelianGroup) -> bool:
    """Whether a retraction g -> h restricting to the identity exists."""
    _require_subgroup(h, g)
    if h.order in (1, g.order):
        return True
    abstract, images = abstract_presentation(h)
    return _extension_exists(g, h.generating_set(), images, abstract)


def quotient(g: FiniteAbelianGroup, h: Subgroup) -> FiniteAbelianGroup:
    """Invariant-factor decomposition of g/h via the relation matrix."""
    _require_subgroup(h, g)
    r = g.rank
    if r == 0:
        return FiniteAbelianGroup([])
    rows = [[g.factors[i] if j == i else 0 for j in range(r)] for i in range(r)]
    rows += [list(e) for e in h.generating_set()]
    _, s, _ = smith_normal_form(rows)
    diag = [s[i][i] for i in range(r)]
    assert all(d > 0 for d in diag)
    return FiniteAbelianGroup([d for d in diag if d > 1])


# ---------------------------------------------------------------------------
# Homomorphism extension, two ways.


def _combo(m: FiniteAbelianGroup, coeffs: list[int], elements: list[Element]) -> Element:
    acc = m.zero()
    for a, w in zip(coeffs, elements):
        if a:
            acc = m.add(acc, m.smul(a, w))
    return acc


def _validated_instance(f: Mapping[Element, Element], h: Subgroup,
                        g: FiniteAbelianGroup, m: FiniteAbelianGroup):
    _require_subgroup(h, g)
    items = sorted(f.items())
    gens = [ge for ge, _ in items]
    images = [im for _, im in items]
    for ge in gens:
        if ge not in h:
            raise NotASubgroup(f"{ge} is not in the given subgroup")
    for im in images:
        m.validate_element(im)
    if _closure_codes(g, [g.encode(ge) for ge in gens]) != h.codes:
        raise ValueError("the map's keys do not generate the subgroup")
    t = len(gens)
    mat = [list(e) for e in gens]
    mat += [[g.factors[i] if j == i else 0 for j in range(g.rank)] for i in range(g.rank)]
    relations = [row[:t] for row in integer_row_kernel(mat)] if t else []
    for row in relations:
        if _combo(m, row, images) != m.zero():
            raise IllDefinedHom(f"relation {row} is not annihilated by the images")
    return gens, images


def hom_extends(f: Mapping[Element, Element], h: Subgroup,
                g: FiniteAbelianGroup, m: FiniteAbelianGroup) -> bool:
    """Whether the hom h -> m given on generators extends to g -> m.

    f maps a generating set of h to m; well-definedness is validated by
    checking that the generators' relation lattice annihilates the
    images (IllDefinedHom otherwise).  Existence is decided by integer
    congruence solving; see hom_extends_bruteforce for the independent
    enumeration used to cross-check this path.
    """
    gens, images = _validated_instance(f, h, g, m)
    return _extension_exists(g, gens, images, m)


def hom_space_size(g: FiniteAbelianGroup, m: FiniteAbelianGroup) -> int:
    return prod(gcd(mi, kj) for mi in g.factors for kj in m.factors) if g.factors and m.factors else 1


def hom_extends_bruteforce(f: Mapping[Element, Element], h: Subgroup,
                           g: FiniteAbelianGroup, m: FiniteAbelianGroup,
                           cap: int = DEFAULT_HOM_SPACE_CAP) -> bool:
    """Same question, answered by enumerating every hom g -> m.

    Walks the full product of annihilator choices for the images of g's
    standard generators; raises BoundExceeded when that space is larger
    than ``cap``.
    """
    gens, images = _validated_instance(f, h, g, m)
    if hom_space_size(g, m) > cap:
        raise BoundExceeded(f"hom space larger than cap {cap}")
    candidates = [_annihilator_elements(m, mi) for mi in g.factors]
    gen_rows = [list(e) for e in gens]
    for assignment in product(*candidates):
        ok = True
        for row, target in zip(gen_rows, images):
            if _combo(m, row, list(assignment)) != target:
                ok = False
                break
        if ok:
            return True
    return False


def _annihilator_elements(m: FiniteAbelianGroup, s: int) -> list[Element]:
    """Elements y of m with s*y = 0, in coordinate order."""
    key = ("ann", s)
    if key not in m._cache:
        axes = []
        for k in m.factors:
            step = k // gcd(k, s)
            axes.append(range(0, k, step))
        m._cache[key] = [tuple(t) for t in product(*axes)]
    return m._cache[key]


# ---------------------------------------------------------------------------
# Relative injectivity.


def _all_homs_on_generators(k: Subgroup, m: FiniteAbelianGroup):
    """Yield (gens, images) for every homomorphism k -> m.

    Uses the diagonalized presentation of k: choosing an annihilator
    element for each invariant factor gives each hom exactly once.
    """
    gens, orders, v = _invariant_presentation(k)
    if not gens:
        yield [], []
        return
    keep = [i for i, s in enumerate(orders) if s > 1]
    choice_lists = [_annihilator_elements(m, orders[i]) for i in keep]
    t = len(gens)
    for picks in product(*choice_lists):
        images = []
        for u in range(t):
            coeffs = [v[u][i] for i in keep]
            images.append(_combo(m, coeffs, list(picks)))
        yield gens, images


def sample_homomorphism(h: Subgroup, m: FiniteAbelianGroup, rng) -> dict[Element, Element]:
    """Uniformly random homomorphism h -> m, as a generator-image map.

    Uses the diagonalized presentation, so every returned map is
    well-defined; the draw is deterministic for a seeded rng.
    """
    gens, orders, v = _invariant_presentation(h)
    if not gens:
        return {}
    keep = [i for i, s in enumerate(orders) if s > 1]
    picks = [rng.choice(_annihilator_elements(m, orders[i])) for i in keep]
    images = []
    for u in range(len(gens)):
        coeffs = [v[u][i] for i in keep]
        images.append(_combo(m, coeffs, picks))
    return dict(zip(gens, images))


def is_relatively_injective(m: FiniteAbelianGroup, n: FiniteAbelianGroup,
                            bound: int | None = None) -> bool:
    """Whether every hom from every subgroup of n into m extends to n."""
    for k in enumerate_subgroups(n, bound):
        for gens, images in _all_homs_on_generators(k, m):
            if not _extension_exists(n, gens, images, m):
                return False
    return True


def is_relatively_pure_injective(m: FiniteAbelianGroup, n: FiniteAbelianGroup,
                                 bound: int | None = None) -> bool:
    """Same quantification restricted to pure subgroups of n."""
    for k in enumerate_subgroups(n, bound):
        if not is_pure_subgroup(k, n):
            continue
        for gens, images in _all_homs_on_generators(k, m):
            if not _extension_exists(n, gens, images, m):
                return False
    return True


def is_pure_split_finite(n: FiniteAbelianGroup, bound: int | None = None) -> bool:
    """Every pure subgroup is a direct summand (true for all finite groups;
    kept as an executable sanity oracle rather than an assumption)."""
    for k in enumerate_subgroups(n, bound):
        if is_pure_subgroup(k, n) and not is_direct_summand(k, n):
            return False
    return True


# ---------------------------------------------------------------------------
# Heights and the localization homomorphism.


def element_height(g: FiniteAbelianGroup, a: Element, p: int) -> Height:
    """Largest k with a in p^k * G; INF when a survives every power."""
    g.validate_element(a)
    code = g.encode(a)
    current = frozenset(range(g.order))
    k = 0
    smap = g._scalar_code_map(p)
    while True:
        nxt = frozenset(smap[x] for x in current)
        if nxt == current:
            return INF
        if code not in nxt:
            return k
        current = nxt
        k += 1


def localization_hom_image(m: FiniteAbelianGroup, a: Element, b: int, c: int) -> Element:
    """Value at b/c of the unique hom from the p-local rationals into m
    sending 1 to a.

    m must be a nontrivial p-group; c must be coprime to p.  With
    order(a) = p^n and y the inverse of c modulo p^n, the value is
    b*y*a, which lies in the cyclic subgroup generated by a.
    """
    primes = {min(factorize(f)) for f in m.factors}
    if len(primes) != 1:
        raise ValueError("a nontrivial p-group is required")
    p = primes.pop()
    m.validate_element(a)
    if gcd(c, p) != 1:
        raise NotCoprime(f"{c} is not coprime to {p}")
    pn = m.element_order(a)
    y = pow(c, -1, pn)
    return m.smul(b * y, a)


# ---------------------------------------------------------------------------
# Isomorphism classes.


def isomorphism_classes_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All abelian groups of order n, one per isomorphism class."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return [FiniteAbelianGroup([])]
    per_prime = []
    for p, e in sorted(factorize(n).items()):
        per_prime.append([[p**part for part in parts] for parts in partitions(e)])
    out = []
    for combo in product(*per_prime):
        factors: list[int] = []
        for chunk in combo:
            factors.extend(chunk)
        out.append(FiniteAbelianGroup(factors))
    return out


def isomorphism_classes_upto(max_order: int) -> list[FiniteAbelianGroup]:
    out = []
    for n in range(1, max_order + 1):
        out.extend(isomorphism_classes_of_order(n))
    return out


__all__ = [
    "DEFAULT_ORDER_BOUND", "DEFAULT_HOM_SPACE_CAP", "Element",
    "FiniteAbelianGroup", "Subgroup", "enumerate_subgroups",
    "is_pure_subgroup", "is_direct_summand", "quotient",
    "abstract_presentation", "hom_extends", "hom_extends_bruteforce",
    "hom_space_size", "sample_homomorphism",
    "is_relatively_injective", "is_relatively_pure_injective",
    "is_pure_split_finite", "element_height", "localization_hom_image",
    "isomorphism_classes_of_order", "isomorphism_classes_upto",
]
