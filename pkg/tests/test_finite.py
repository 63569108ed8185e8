import random
from itertools import combinations

import pytest

from abelcheck.characteristics import INF
from abelcheck.errors import BoundExceeded, IllDefinedHom, NotASubgroup, NotCoprime
from abelcheck.finite import (
    FiniteAbelianGroup,
    Subgroup,
    abstract_presentation,
    element_height,
    enumerate_subgroups,
    hom_extends,
    hom_extends_bruteforce,
    hom_space_size,
    is_direct_summand,
    is_pure_split_finite,
    is_pure_subgroup,
    is_relatively_injective,
    is_relatively_pure_injective,
    isomorphism_classes_of_order,
    isomorphism_classes_upto,
    localization_hom_image,
    quotient,
    sample_homomorphism,
)

Z = FiniteAbelianGroup


# -- independent oracles used to freeze expected values ----------------------


def subgroups_by_powerset(group):
    """Every additively closed subset containing 0 (feasible for |G| <= 16)."""
    els = group.elements()
    found = []
    for r in range(len(els) + 1):
        for subset in combinations(els, r):
            s = set(subset)
            if group.zero() not in s:
                continue
            if all(group.add(a, b) in s for a in s for b in s):
                found.append(frozenset(s))
    return found


def pure_by_definition(h, g):
    """nH = H ∩ nG tested for every n up to the exponent, no reductions."""
    h_els = set(h.elements())
    g_els = g.elements()
    for n in range(1, g.exponent + 1):
        n_h = {g.smul(n, a) for a in h_els}
        n_g = {g.smul(n, a) for a in g_els}
        if n_h != (h_els & n_g):
            return False
    return True


def summand_by_complement_search(h, g, all_subgroups):
    """H is a summand iff some subgroup K has H∩K=0 and |H||K|=|G|."""
    for k in all_subgroups:
        if h.order * k.order == g.order and len(h.codes & k.codes) == 1:
            return True
    return h.order == g.order


def coset_order_multiset(g, h):
    """Element orders of G/H computed directly on cosets."""
    cosets = {}
    for code in range(g.order):
        key = frozenset(g._add_codes(code, c) for c in h.codes)
        cosets.setdefault(key, code)
    zero_coset = frozenset(h.codes)
    orders = []
    for key, rep in cosets.items():
        n = 1
        acc = rep
        while frozenset(g._add_codes(acc, c) for c in h.codes) != zero_coset:
            acc = g._add_codes(acc, rep)
            n += 1
        orders.append(n)
    return sorted(orders)


def order_multiset(group):
    return sorted(group.element_order(a) for a in group.elements())


# -- groups and parsing -------------------------------------------------------


class TestGroupBasics:
    def test_primary_refinement(self):
        assert Z([6, 4]).factors == (2, 4, 3)
        assert Z([12]).factors == (4, 3)
        assert Z([]).order == 1

    def test_from_string(self):
        assert Z.from_string("Z4 x Z2") == Z([4, 2])
        assert Z.from_string("Z(2^2) x Z(2)") == Z([4, 2])
        assert Z.from_string("Z6") == Z([2, 3])
        assert Z.from_string("Z1") == Z([])
        with pytest.raises(ValueError):
            Z.from_string("Z0")
        with pytest.raises(ValueError):
            Z.from_string("Z2 + Z3")

    def test_str_round_trip(self):
        for g in (Z([4, 2]), Z([]), Z([8, 9, 5])):
            assert Z.from_string(str(g)) == g

    def test_arithmetic(self):
        g = Z([2, 4])
        assert g.add((1, 3), (1, 2)) == (0, 1)
        assert g.neg((1, 3)) == (1, 1)
        assert g.smul(3, (1, 2)) == (1, 2)
        assert g.element_order((1, 2)) == 2
        assert g.element_order((0, 1)) == 4
        assert g.exponent == 4
        with pytest.raises(ValueError):
            g.validate_element((2, 0))

    def test_codes_round_trip(self):
        g = Z([2, 4, 3])
        for code in range(g.order):
            assert g.encode(g.decode(code)) == code


class TestEnumeration:
    @pytest.mark.parametrize("orders,count", [([4], 3), ([2, 2], 5), ([6], 4)])
    def test_counts_match_powerset_oracle(self, orders, count):
        g = Z(orders)
        subs = enumerate_subgroups(g)
        assert len(subs) == count
        oracle = {frozenset(s) for s in subgroups_by_powerset(g)}
        assert {frozenset(sub.elements()) for sub in subs} == oracle

    def test_powerset_agreement_order_8_and_12(self):
        for orders in ([8], [2, 4], [2, 2, 2], [12], [2, 2, 3]):
            g = Z(orders)
            subs = enumerate_subgroups(g)
            oracle = {frozenset(s) for s in subgroups_by_powerset(g)}
            assert {frozenset(sub.elements()) for sub in subs} == oracle

    def test_includes_trivial_and_whole(self):
        g = Z([2, 4])
        subs = enumerate_subgroups(g)
        orders = [s.order for s in subs]
        assert 1 in orders and g.order in orders

    def test_cyclic_counts_match_divisor_counts(self):
        from abelcheck.arith import divisors

        for n in (2, 3, 4, 8, 9, 12, 16, 30, 60, 128):
            assert len(enumerate_subgroups(Z([n]))) == len(divisors(n))

    def test_elementary_abelian_counts_match_gaussian_binomials(self):
        # subgroups of (Z_p)^k are subspaces; their number is the sum of
        # Gaussian binomial coefficients, computed here from the product
        # formula as an independent combinatorial oracle
        def gaussian_binomial(k, j, p):
            num = den = 1
            for i in range(j):
                num *= p ** (k - i) - 1
                den *= p ** (j - i) - 1
            return num // den

        cases = [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)]
        for p, k in cases:
            expected = sum(gaussian_binomial(k, j, p) for j in range(k + 1))
            assert len(enumerate_subgroups(Z([p] * k))) == expected, (p, k)

    def test_deterministic_order(self):
        g = Z([2, 4, 3])
        first = [s.codes for s in enumerate_subgroups(g)]
        second = [s.codes for s in enumerate_subgroups(g)]
        assert first == second

    def test_bound_enforced(self):
        with pytest.raises(BoundExceeded):
            enumerate_subgroups(Z([1024]))
        with pytest.raises(BoundExceeded):
            enumerate_subgroups(Z([16]), bound=8)


class TestSubgroupObject:
    def test_public_constructor_validates(self):
        g = Z([4])
        Subgroup(g, [(0,), (2,)])
        with pytest.raises(NotASubgroup):
            Subgroup(g, [(2,)])  # missing identity
        with pytest.raises(NotASubgroup):
            Subgroup(g, [(0,), (1,)])  # not closed

    def test_generated_by(self):
        g = Z([2, 4])
        h = Subgroup.generated_by(g, [(1, 1)])
        assert h.order == 4
        assert (1, 1) in h and (0, 2) in h

    def test_generating_set_regenerates(self):
        rng = random.Random(3)
        for _ in range(100):
            g = Z([rng.choice([2, 3, 4, 8, 9])] + [rng.choice([2, 4])])
            h = Subgroup.generated_by(g, [g.decode(rng.randrange(g.order)) for _ in range(2)])
            regen = Subgroup.generated_by(g, h.generating_set())
            assert regen == h


class TestPurity:
    def test_worked_examples(self):
        g = Z([2, 4])
        assert is_pure_subgroup(Subgroup.generated_by(g, [(1, 1)]), g)
        assert not is_pure_subgroup(Subgroup.generated_by(g, [(0, 2)]), g)
        assert is_pure_subgroup(Subgroup.trivial(g), g)
        assert is_pure_subgroup(Subgroup.whole(g), g)

    def test_matches_definition_oracle(self):
        for orders in ([2, 4], [8], [4, 4], [2, 2, 3], [2, 9]):
            g = Z(orders)
            for h in enumerate_subgroups(g):
                assert is_pure_subgroup(h, g) == pure_by_definition(h, g)

    def test_wrong_parent_rejected(self):
        g, other = Z([4]), Z([8])
        h = Subgroup.trivial(other)
        with pytest.raises(NotASubgroup):
            is_pure_subgroup(h, g)


class TestSummands:
    def test_worked_examples(self):
        g = Z([2, 4])
        assert is_direct_summand(Subgroup.generated_by(g, [(1, 1)]), g)
        z4 = Z([4])
        assert not is_direct_summand(Subgroup.generated_by(z4, [(2,)]), z4)
        assert is_direct_summand(Subgroup.trivial(g), g)
        assert is_direct_summand(Subgroup.whole(g), g)

    def test_matches_complement_search(self):
        for orders in ([2, 4], [8], [4, 4], [2, 2, 2], [2, 2, 3], [18]):
            g = Z(orders)
            subs = enumerate_subgroups(g)
            for h in subs:
                assert is_direct_summand(h, g) == summand_by_complement_search(h, g, subs)

    def test_pure_and_bounded_implies_summand(self):
        # finite shadow of the splitting of bounded pure subgroups
        for orders in ([2, 4], [4, 4], [8, 2], [2, 2, 9]):
            g = Z(orders)
            for h in enumerate_subgroups(g):
                if is_pure_subgroup(h, g):
                    assert is_direct_summand(h, g)


class TestQuotient:
    def test_worked_examples(self):
        z4 = Z([4])
        assert quotient(z4, Subgroup.generated_by(z4, [(2,)])) == Z([2])
        g = Z([2, 4])
        assert quotient(g, Subgroup.generated_by(g, [(1, 1)])) == Z([2])
        assert quotient(g, Subgroup.trivial(g)) == g

    def test_order_law_and_coset_oracle(self):
        rng = random.Random(17)
        for _ in range(60):
            g = Z([rng.choice([2, 3, 4, 8, 9, 5])] + [rng.choice([2, 4, 3])])
            h = Subgroup.generated_by(g, [g.decode(rng.randrange(g.order)) for _ in range(2)])
            q = quotient(g, h)
            assert q.order * h.order == g.order
            assert order_multiset(q) == coset_order_multiset(g, h)


class TestHomExtension:
    def test_worked_examples(self):
        z4, z2 = Z([4]), Z([2])
        h = Subgroup.generated_by(z4, [(2,)])
        assert not hom_extends({(2,): (1,)}, h, z4, z2)
        assert hom_extends({(2,): (0,)}, h, z4, z2)
        assert hom_extends({(2,): (2,)}, h, z4, z4)

    def test_zero_map_always_extends(self):
        rng = random.Random(19)
        for _ in range(50):
            g = Z([rng.choice([4, 8, 9, 2])] + [rng.choice([2, 3])])
            m = Z([rng.choice([2, 4, 3])])
            h = Subgroup.generated_by(g, [g.decode(rng.randrange(g.order))])
            zero_map = {ge: m.zero() for ge in h.generating_set()}
            if not zero_map:
                continue
            assert hom_extends(zero_map, h, g, m)

    def test_ill_defined_rejected(self):
        z4 = Z([4])
        h = Subgroup.generated_by(z4, [(2,)])
        # 2*(2,) = 0 in Z4 but 2*1 = 2 != 0 in Z4
        with pytest.raises(IllDefinedHom):
            hom_extends({(2,): (1,)}, h, z4, z4)

    def test_keys_must_generate(self):
        z4 = Z([4])
        h = Subgroup.whole(z4)
        with pytest.raises(ValueError):
            hom_extends({(2,): (0,)}, h, z4, z4)

    def test_bruteforce_agrees_on_random_instances(self):
        rng = random.Random(23)
        checked = 0
        while checked < 200:
            g = Z([rng.choice([2, 3, 4, 8, 9])] + ([rng.choice([2, 4])] if rng.random() < 0.7 else []))
            m = Z([rng.choice([2, 3, 4, 9])] + ([rng.choice([2, 3])] if rng.random() < 0.5 else []))
            if hom_space_size(g, m) > 4096:
                continue
            h = Subgroup.generated_by(g, [g.decode(rng.randrange(g.order)) for _ in range(rng.randint(0, 2))])
            f = sample_homomorphism(h, m, rng)
            if set(f) != set(h.generating_set()):
                continue
            checked += 1
            assert hom_extends(f, h, g, m) == hom_extends_bruteforce(f, h, g, m)

    def test_bruteforce_cap(self):
        g = Z([2] * 6)
        h = Subgroup.trivial(g)
        with pytest.raises(BoundExceeded):
            hom_extends_bruteforce({}, h, g, g, cap=10)

    def test_sample_homomorphism_is_well_defined(self):
        rng = random.Random(29)
        for _ in range(100):
            g = Z([rng.choice([4, 8, 9, 6])])
            m = Z([rng.choice([2, 4, 3])])
            h = Subgroup.generated_by(g, [g.decode(rng.randrange(g.order))])
            f = sample_homomorphism(h, m, rng)
            if set(f) == set(h.generating_set()):
                hom_extends(f, h, g, m)  # must not raise IllDefinedHom


class TestAbstractPresentation:
    def test_matches_subgroup_structure(self):
        rng = random.Random(31)
        for _ in range(80):
            g = Z([rng.choice([4, 8, 9]), rng.choice([2, 4, 3])])
            h = Subgroup.generated_by(g, [g.decode(rng.randrange(g.order)) for _ in range(2)])
            abstract, images = abstract_presentation(h)
            assert abstract.order == h.order
            gens = h.generating_set()
            assert len(images) == len(gens)
            for ge, im in zip(gens, images):
                assert g.element_order(ge) == abstract.element_order(im)
            span = Subgroup.generated_by(abstract, images)
            assert span.order == abstract.order


class TestRelativeInjectivity:
    def test_worked_examples(self):
        assert not is_relatively_injective(Z([2]), Z([4]))
        assert is_relatively_injective(Z([2]), Z([3]))
        assert is_relatively_injective(Z([4]), Z([4]))

    def test_cyclic_prime_power_table(self):
        for p in (2, 3, 5):
            for m in range(1, 4):
                for n in range(1, 4):
                    got = is_relatively_injective(Z([p**m]), Z([p**n]))
                    assert got == (m >= n), (p, m, n)

    def test_obstruction_at_higher_powers(self):
        for p in (2, 3, 5):
            n = 2
            while p**n <= 512:
                assert not is_relatively_injective(Z([p]), Z([p**n]))
                n += 1

    def test_pure_variant_examples(self):
        assert is_relatively_pure_injective(Z([2]), Z([4]))
        assert is_relatively_pure_injective(Z([2]), Z([2, 4]))

    def test_pure_variant_always_true_on_small_groups(self):
        rng = random.Random(37)
        for _ in range(25):
            m = Z([rng.choice([2, 3, 4, 9, 8])])
            n = Z([rng.choice([2, 3, 4, 8]), rng.choice([2, 3])])
            assert is_relatively_pure_injective(m, n)

    def test_inheritance_to_pure_subgroups_and_quotients(self):
        ms = [Z([2]), Z([4]), Z([2, 3])]
        ns = [Z([2, 4]), Z([8]), Z([2, 2, 3])]
        for m in ms:
            for n in ns:
                assert is_relatively_pure_injective(m, n)
                for k in enumerate_subgroups(n):
                    if not is_pure_subgroup(k, n):
                        continue
                    k_abs, _ = abstract_presentation(k)
                    assert is_relatively_pure_injective(m, k_abs)
                    assert is_relatively_pure_injective(m, quotient(n, k))


class TestPureSplitFinite:
    def test_worked_examples(self):
        assert is_pure_split_finite(Z([2, 4]))
        assert is_pure_split_finite(Z([8]))
        assert is_pure_split_finite(Z([2, 2]))

    def test_all_orders_up_to_36(self):
        for g in isomorphism_classes_upto(36):
            assert is_pure_split_finite(g), g


class TestHeights:
    def test_worked_examples(self):
        z8 = Z([8])
        assert element_height(z8, (4,), 2) == 2
        assert element_height(z8, (0,), 2) is INF
        assert element_height(Z([9]), (1,), 2) is INF

    def test_by_membership_scan(self):
        g = Z([8, 3])
        for code in range(g.order):
            a = g.decode(code)
            for p in (2, 3, 5):
                h = element_height(g, a, p)
                # recompute the power chain directly
                layer = set(g.elements())
                k = 0
                while True:
                    nxt = {g.smul(p, x) for x in layer}
                    if nxt == layer:
                        assert h is INF
                        break
                    if a not in nxt:
                        assert h == k
                        break
                    layer = nxt
                    k += 1


class TestLocalizationHom:
    def test_worked_examples(self):
        assert localization_hom_image(Z([4]), (1,), 1, 3) == (3,)
        assert localization_hom_image(Z([3]), (1,), 1, 2) == (2,)
        assert localization_hom_image(Z([9, 3]), (1, 4), 0, 1) == (0, 0)

    def test_consistency(self):
        # c * f(1/c) must equal f(1) = a
        m = Z([4])
        img = localization_hom_image(m, (1,), 1, 3)
        assert m.smul(3, img) == (1,)

    def test_errors(self):
        with pytest.raises(NotCoprime):
            localization_hom_image(Z([4]), (1,), 1, 2)
        with pytest.raises(NotCoprime):
            localization_hom_image(Z([4]), (1,), 1, 0)
        with pytest.raises(ValueError):
            localization_hom_image(Z([6]), (1, 1), 1, 5)
        with pytest.raises(ValueError):
            localization_hom_image(Z([]), (), 1, 5)

    def test_additive_and_well_defined(self):
        rng = random.Random(41)
        for _ in range(500):
            p = rng.choice([2, 3, 5])
            m = Z([p ** rng.randint(1, 3), p ** rng.randint(1, 2)])
            a = m.decode(rng.randrange(m.order))
            c = rng.choice([x for x in range(1, 30) if x % p != 0])
            b1, b2 = rng.randint(-20, 20), rng.randint(-20, 20)
            f = lambda b, cc: localization_hom_image(m, a, b, cc)
            assert f(b1 + b2, c) == m.add(f(b1, c), f(b2, c))
            d = rng.choice([x for x in range(1, 10) if x % p != 0])
            assert f(b1, c) == f(b1 * d, c * d)
            image = f(b1, c)
            assert image in {m.smul(k, a) for k in range(m.element_order(a))}


class TestIsomorphismClasses:
    def test_counts(self):
        assert len(isomorphism_classes_of_order(1)) == 1
        assert len(isomorphism_classes_of_order(8)) == 3
        assert len(isomorphism_classes_of_order(16)) == 5
        assert len(isomorphism_classes_of_order(36)) == 4
        assert len(isomorphism_classes_of_order(128)) == 15

    def test_distinct_and_right_order(self):
        classes = isomorphism_classes_upto(24)
        assert len(classes) == len(set(classes))
        for g in classes:
            assert g.order <= 24


class TestRankAdditivityShadow:
    def test_free_rank_splits_over_sublattice(self):
        # rows generate a sublattice H of Z^r: rank(H) + free rank of the
        # cokernel = r, with both sides computed independently
        from fractions import Fraction

        from abelcheck.snf import diagonal, smith_normal_form

        def rational_rank(rows, cols):
            m = [[Fraction(x) for x in row] for row in rows]
            rank = 0
            for col in range(cols):
                pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
                if pivot is None:
                    continue
                m[rank], m[pivot] = m[pivot], m[rank]
                inv = 1 / m[rank][col]
                m[rank] = [x * inv for x in m[rank]]
                for i in range(len(m)):
                    if i != rank and m[i][col]:
                        f = m[i][col]
                        m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
                rank += 1
            return rank

        rng = random.Random(43)
        for _ in range(100):
            r = rng.randint(1, 4)
            rows = [[rng.randint(-4, 4) for _ in range(r)] for _ in range(rng.randint(0, 4))]
            if not rows:
                continue
            _, s, _ = smith_normal_form(rows)
            snf_rank = sum(1 for d in diagonal(s) if d)
            cokernel_free_rank = r - snf_rank
            assert rational_rank(rows, r) + cokernel_free_rank == r
