import itertools

import pytest

from hollowlat.modules import (
    FiniteModule,
    Ideal,
    Ring,
    ZeroSubmodule,
    enumerate_submodules,
    find_second_submodules,
    is_hollow_module,
    span,
    whole_module,
    zero_submodule,
)
from hollowlat.pshollow import (
    HypothesisUnmet,
    check_aligned_equality,
    check_direct_sum_criteria,
    check_hull_disjoint_directness,
    check_hull_inheritance_directness,
    check_min_cover_ideals,
    check_nonsmall_inheritance,
    check_profile_of_sum,
    check_second_rep_equivalences,
    check_semisimple_equivalences,
    enumerate_minimal_representations,
    find_ps_hollow_submodules,
    is_hollow_ideal,
    is_minimal,
    is_ps_hollow,
    make_representation,
    minimize,
    profile,
    verify_first_uniqueness,
    verify_second_uniqueness,
)

PASS, FAIL, UNMET = "pass", "fail", "hypothesis-unmet"


def z(n):
    return FiniteModule(Ring(n), [n])


def klein():
    return FiniteModule(Ring(2), [2, 2])


def cyclic(module, d):
    gen = d % module.ring.n
    return span(module, (gen,) if gen else ())


def prime_power_complements(n):
    """Oracle for the canonical summands: n // p**multiplicity for each prime p."""
    out = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            q = 1
            while rest % p == 0:
                rest //= p
                q *= p
            out.append(n // q)
        p += 1
    if rest > 1:
        out.append(n // rest)
    return sorted(out)


class TestPsHollow:
    def test_four_in_z12(self):
        assert is_ps_hollow(cyclic(z(12), 4))

    def test_whole_z12_is_not(self):
        # witness: M <= (4)M + (3) with M in neither part
        assert not is_ps_hollow(whole_module(z(12)))

    def test_zero_rejected(self):
        with pytest.raises(ZeroSubmodule):
            is_ps_hollow(zero_submodule(z(12)))

    def test_all_nonzero_submodules_of_second_module(self):
        # the klein module is second, so everything nonzero is ps-hollow
        k = klein()
        assert whole_module(k) in find_second_submodules(k)
        for sub in enumerate_submodules(k):
            if not sub.is_zero:
                assert is_ps_hollow(sub)

    def test_klein_whole_ps_hollow_but_not_hollow(self):
        k = klein()
        whole = whole_module(k)
        assert is_ps_hollow(whole)
        assert not is_hollow_module(whole)

    def test_integer_oracle_for_cyclic_modules(self):
        # oracle in plain integer arithmetic: dZn <= eZn + fZn iff gcd(e,f) | d
        def oracle(n, d):
            divs = [x for x in range(1, n + 1) if n % x == 0]
            import math
            for e, f in itertools.product(divs, divs):
                if d % math.gcd(e, f) == 0 and d % e and d % f:
                    return False
            return True

        for n in (12, 30, 36, 60):
            module = z(n)
            got = {s.name for s, _ in find_ps_hollow_submodules(module)}
            expected = {f"({d})" for d in range(1, n) if n % d == 0 and oracle(n, d)}
            assert got == expected, n


class TestProfiles:
    def test_profile_of_four_in_z12(self):
        prof = profile(cyclic(z(12), 4))
        assert [i.name for i in prof.covers] == ["(1)", "(2)", "(4)"]
        assert [i.name for i in prof.min_covers] == ["(4)"]
        assert prof.hull.name == "(4)"
        assert prof.ps_hollow

    def test_profile_of_whole_module(self):
        prof = profile(whole_module(z(12)))
        assert [i.name for i in prof.min_covers] == ["(1)"]
        assert prof.hull.order == 12
        assert not prof.ps_hollow

    def test_canonical_families_are_singletons(self):
        for n in (12, 30, 60):
            module = z(n)
            for d in prime_power_complements(n):
                prof = profile(cyclic(module, d))
                assert prof.family == frozenset({d}), (n, d)

    def test_z30_ps_hollow_set(self):
        got = [s.name for s, _ in find_ps_hollow_submodules(z(30))]
        assert got == ["(15)", "(10)", "(6)"]

    def test_simple_module_single_ps_hollow(self):
        assert [s.name for s, _ in find_ps_hollow_submodules(z(7))] == ["(1)"]


class TestHollowIdeals:
    def test_four_hollow_in_z12(self):
        assert is_hollow_ideal(Ideal(Ring(12), 4))

    def test_two_not_hollow_in_z12(self):
        # (2) = (4) + (6) with both parts proper
        assert not is_hollow_ideal(Ideal(Ring(12), 2))

    def test_unit_ideal_hollow_in_prime_ring(self):
        assert is_hollow_ideal(Ideal(Ring(5), 1))

    def test_min_cover_scan(self):
        for n in (12, 30, 60):
            rep = check_min_cover_ideals(z(n))
            assert rep.ok and rep.findings, rep.render_text()


class TestProfileOfSum:
    def test_comparable_inputs_rejected(self):
        m = z(12)
        with pytest.raises(HypothesisUnmet):
            check_profile_of_sum(cyclic(m, 6), cyclic(m, 3), frozenset({3}))

    def test_klein_lines_share_family(self):
        k = klein()
        lines = [s for s in enumerate_submodules(k) if s.order == 2]
        rep = check_profile_of_sum(lines[0], lines[1], profile(lines[0]).family)
        assert rep.ok and rep.findings[0].verdict == PASS

    def test_z30_different_families(self):
        m = z(30)
        rep = check_profile_of_sum(cyclic(m, 6), cyclic(m, 10),
                                   profile(cyclic(m, 6)).family)
        assert rep.ok, rep.render_text()

    def test_family_outside_associated_ideals_rejected(self):
        m = z(30)
        with pytest.raises(HypothesisUnmet):
            check_profile_of_sum(cyclic(m, 6), cyclic(m, 10), frozenset({30}))


class TestRepresentations:
    def test_make_validates_sum(self):
        m = z(12)
        with pytest.raises(ValueError):
            make_representation(m, (cyclic(m, 4), cyclic(m, 6)))  # sums to (2)

    def test_make_validates_ps_hollow(self):
        m = z(12)
        with pytest.raises(ValueError):
            make_representation(m, (cyclic(m, 2), cyclic(m, 3)))  # (2) is not ps-hollow

    def test_minimality_witnesses_for_redundant_summand(self):
        m = z(12)
        rep = make_representation(m, (cyclic(m, 3), cyclic(m, 4), cyclic(m, 6)))
        ok, witnesses = is_minimal(rep)
        assert not ok
        assert any("(6)" in w for w in witnesses)

    def test_minimize_drops_redundant(self):
        m = z(12)
        rep = make_representation(m, (cyclic(m, 3), cyclic(m, 4), cyclic(m, 6)))
        out = minimize(rep)
        assert sorted(s.name for s in out.summands) == ["(3)", "(4)"]
        assert out.minimal

    def test_minimize_keeps_minimal_input(self):
        m = z(12)
        rep = make_representation(m, (cyclic(m, 4), cyclic(m, 3)))
        out = minimize(rep)
        assert sorted(s.name for s in out.summands) == ["(3)", "(4)"]

    def test_minimize_single_summand_untouched(self):
        # a second module is ps-hollow in itself, like a vector space
        k = klein()
        rep = make_representation(k, (whole_module(k),))
        assert minimize(rep).summands == rep.summands
        assert rep.minimal

    def test_minimize_merges_shared_family(self):
        # two klein lines both carry the unit-ideal family; they merge to the whole
        k = klein()
        lines = [s for s in enumerate_submodules(k) if s.order == 2]
        rep = make_representation(k, (lines[0], lines[1]))
        out = minimize(rep)
        assert [s.order for s in out.summands] == [4]
        assert out.minimal

    def test_enumerate_z12(self):
        reps = enumerate_minimal_representations(z(12))
        assert len(reps) == 1
        assert sorted(s.name for s in reps[0].summands) == ["(3)", "(4)"]

    def test_enumerate_prime_power(self):
        reps = enumerate_minimal_representations(z(8))
        assert len(reps) == 1 and reps[0].summands[0].order == 8

    def test_enumerate_respects_max_terms(self):
        reps = enumerate_minimal_representations(z(30), max_terms=2)
        assert reps == ()

    def test_canonical_representation_found(self):
        for n in (12, 30, 60, 72, 180):
            reps = enumerate_minimal_representations(z(n))
            expected = sorted(f"({d})" for d in prime_power_complements(n))
            assert any(sorted(s.name for s in rep.summands) == expected
                       for rep in reps), n


class TestUniqueness:
    def test_self_pairs_for_small_moduli(self):
        for n in range(2, 40):
            reps = enumerate_minimal_representations(z(n))
            for r1, r2 in itertools.combinations_with_replacement(reps, 2):
                assert verify_first_uniqueness(r1, r2).ok
                assert verify_second_uniqueness(r1, r2).ok
                assert check_aligned_equality(r1, r2).ok

    def test_klein_representations_agree(self):
        reps = enumerate_minimal_representations(klein())
        assert len(reps) == 1  # the two-line splittings share comparable hulls
        assert reps[0].summands[0].order == 4

    def test_non_minimal_input_rejected(self):
        m = z(12)
        bloated = make_representation(m, (cyclic(m, 3), cyclic(m, 4), cyclic(m, 6)))
        good = enumerate_minimal_representations(m)[0]
        with pytest.raises(HypothesisUnmet):
            verify_first_uniqueness(bloated, good)
        with pytest.raises(HypothesisUnmet):
            verify_second_uniqueness(good, bloated)

    def test_different_modules_rejected(self):
        r1 = enumerate_minimal_representations(z(12))[0]
        r2 = enumerate_minimal_representations(z(30))[0]
        with pytest.raises(HypothesisUnmet):
            verify_first_uniqueness(r1, r2)


class TestTheoremCheckers:
    def test_nonsmall_inheritance_on_z12_instances(self):
        m = z(12)
        for d in (3, 4):
            rep = check_nonsmall_inheritance(m, cyclic(m, d))
            assert rep.ok, rep.render_text()
            assert all(f.verdict == PASS for f in rep.findings)

    def test_nonsmall_inheritance_gates_on_klein(self):
        # klein lines are not small and not ideal multiples
        k = klein()
        line = next(s for s in enumerate_submodules(k) if s.order == 2)
        rep = check_nonsmall_inheritance(k, line)
        assert rep.findings[0].verdict == UNMET

    def test_semisimple_equivalences_z30(self):
        rep = check_semisimple_equivalences(z(30))
        assert rep.findings[0].verdict == PASS

    def test_semisimple_equivalences_gate_z12(self):
        rep = check_semisimple_equivalences(z(12))
        assert rep.findings[0].verdict == UNMET

    def test_semisimple_equivalences_klein(self):
        # one maximal second submodule (the whole), so separation holds
        # vacuously; all four conditions are false, which still agrees
        rep = check_semisimple_equivalences(klein())
        assert rep.findings[0].verdict == PASS
        assert all(w.endswith("False") for w in rep.findings[0].witnesses)

    def test_second_rep_equivalences_z30(self):
        rep = check_second_rep_equivalences(z(30))
        assert rep.ok
        assert rep.findings[-1].verdict == PASS

    def test_direct_sum_second_route_z30(self):
        m = z(30)
        summands = tuple(cyclic(m, d) for d in (10, 6, 15))
        rep = check_direct_sum_criteria(m, summands, 1)
        assert rep.findings[0].verdict == PASS, rep.render_text()

    def test_direct_sum_second_route_gates_on_z12(self):
        m = z(12)
        rep = check_direct_sum_criteria(m, (cyclic(m, 3), cyclic(m, 4)), 1)
        assert rep.findings[0].verdict == UNMET

    def test_direct_sum_distributive_route(self):
        for n in (12, 30, 60, 72, 180):
            m = z(n)
            summands = tuple(cyclic(m, d) for d in prime_power_complements(n))
            rep = check_direct_sum_criteria(m, summands, 2)
            assert rep.findings[-1].verdict == PASS, (n, rep.render_text())

    def test_distributive_route_gates_on_klein(self):
        k = klein()
        rep = check_direct_sum_criteria(k, (whole_module(k),), 2)
        assert rep.findings[-1].verdict == UNMET  # klein is not distributive

    def test_hull_disjoint_directness(self):
        for n in (12, 30, 60):
            rep = enumerate_minimal_representations(z(n))[0]
            out = check_hull_disjoint_directness(rep.module, rep)
            assert out.findings[0].verdict == PASS, (n, out.render_text())

    def test_hull_inheritance_directness(self):
        m30 = z(30)
        rep30 = enumerate_minimal_representations(m30)[0]
        assert check_hull_inheritance_directness(m30, rep30).findings[0].verdict == PASS
        m12 = z(12)
        rep12 = enumerate_minimal_representations(m12)[0]
        assert check_hull_inheritance_directness(m12, rep12).findings[0].verdict == UNMET

    def test_lemma_properties_on_fixture_modules(self):
        # minimal covers are hollow ideals and every submodule sits in its hull
        for module in (z(12), z(30), z(36), klein(), FiniteModule(Ring(4), [4, 2])):
            for sub, prof in find_ps_hollow_submodules(module):
                assert sub.le(prof.hull)
                for ideal in prof.min_covers:
                    assert is_hollow_ideal(ideal)


class TestCrossLayerConsistency:
    FIXTURES = ((12, (12,)), (30, (30,)), (36, (36,)), (2, (2, 2)), (4, (4, 2)))

    def modules(self):
        return [FiniteModule(Ring(n), factors) for n, factors in self.FIXTURES]

    def test_module_and_lattice_ps_hollow_agree(self):
        # two independent evaluation paths: integer arithmetic vs action table
        from hollowlat.modules import submodule_lattice
        from hollowlat.spectra import spectrum
        for module in self.modules():
            subs = enumerate_submodules(module)
            _, action = submodule_lattice(module)
            lattice_side = set(spectrum(action, "ps_hollow"))
            module_side = {i for i, s in enumerate(subs)
                           if not s.is_zero and is_ps_hollow(s)}
            assert lattice_side == module_side, module.describe()

    def test_pseudo_distributive_hollow_implies_ps_hollow(self):
        from hollowlat.modules import is_pseudo_distributive_module
        for module in self.modules():
            if not is_pseudo_distributive_module(module):
                continue
            for sub in enumerate_submodules(module):
                if not sub.is_zero and is_hollow_module(sub):
                    assert is_ps_hollow(sub), (module.describe(), sub.name)

    def test_s_lifting_maximal_hollows_are_ps_hollow(self):
        from hollowlat.modules import is_s_lifting_module, maximal_hollow_submodules
        hit = 0
        for module in self.modules():
            if not is_s_lifting_module(module):
                continue
            hit += 1
            for sub in maximal_hollow_submodules(module):
                assert is_ps_hollow(sub), (module.describe(), sub.name)
        assert hit  # Z_30 at least is s-lifting
