import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dmcbounds import (
    Condition,
    FamilySpec,
    InvalidParameter,
    SplitMix64,
    analyze_inverse,
    beta_family,
    bsc,
    build_family,
    capacity_upper_bound,
    entropy_bits,
    fixed_example,
    gamma_family,
    random_sdd_positive,
    relay_miso,
    relay_miso_explicit3,
    validate_channel,
)


class TestSplitMix64:
    def test_reference_vectors(self):
        # first outputs of the canonical C splitmix64 for these seeds
        g = SplitMix64(0)
        assert g.next_uint64() == 0xE220A8397B1DCDAF
        g = SplitMix64(1234567)
        assert [g.next_uint64() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]

    def test_floats_are_in_unit_interval(self):
        g = SplitMix64(99)
        xs = [g.next_float() for _ in range(1000)]
        assert all(0.0 <= x < 1.0 for x in xs)


class TestFixedExamples:
    def test_reliable_example_rows(self):
        m = fixed_example("example-1")
        assert list(m.entries[0]) == [0.95, 0.01, 0.04]

    def test_permutation_example_rows(self):
        m = fixed_example("example-3")
        assert list(m.entries[2]) == [0.04, 0.03, 0.93]

    def test_unreliable_example_rows(self):
        m = fixed_example("example-4")
        assert list(m.entries[2]) == [0.5, 0.05, 0.45]

    def test_unknown_name_rejected(self):
        with pytest.raises(InvalidParameter):
            fixed_example("example-9")


class TestRelayMiso:
    def test_error_free_uplinks_give_identity(self):
        m = relay_miso(3, 0.0)
        assert np.array_equal(m.entries, np.eye(4))

    def test_explicit_entries_at_alpha_03(self):
        m = relay_miso(3, 0.3)
        assert m.entries[0, 0] == pytest.approx(0.7**3, abs=1e-15)
        assert m.entries[1, 1] == pytest.approx(
            2 * 0.09 * 0.7 + 0.7**3, abs=1e-15
        )

    def test_general_formula_matches_explicit_form(self):
        for alpha in np.linspace(0.0, 1.0, 53):
            diff = np.abs(
                np.asarray(relay_miso(3, alpha).entries)
                - relay_miso_explicit3(alpha)
            ).max()
            assert diff <= 1e-12

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(1, 8),
        alpha=st.floats(0.0, 1.0, allow_nan=False),
    )
    def test_rows_are_stochastic_for_any_size(self, n, alpha):
        m = relay_miso(n, alpha)
        assert m.entries.shape == (n + 1, n + 1)
        assert np.abs(m.entries.sum(axis=1) - 1.0).max() <= 1e-12

    def test_flip_symmetry_reverses_columns(self):
        for alpha in (0.1, 0.3, 0.45):
            left = np.asarray(relay_miso(3, alpha).entries)
            right = np.asarray(relay_miso(3, 1.0 - alpha).entries)[:, ::-1]
            assert np.abs(left - right).max() <= 1e-12

    def test_parameter_validation(self):
        with pytest.raises(InvalidParameter):
            relay_miso(0, 0.5)
        with pytest.raises(InvalidParameter):
            relay_miso(3, 1.5)
        with pytest.raises(InvalidParameter):
            relay_miso(61, 0.5)


class TestGammaFamily:
    def test_half_gamma_entry_values(self):
        m = gamma_family(0.5)
        assert set(np.round(np.asarray(m.entries).ravel(), 12)) == {0.125, 0.375}
        assert sorted(m.entries[0]) == [0.125, 0.125, 0.375, 0.375]

    def test_rows_are_permutations_of_each_other(self):
        for g in (0.05, 0.2, 0.7, 0.95):
            m = gamma_family(g)
            first = np.sort(m.entries[0])
            for row in m.entries[1:]:
                assert np.allclose(np.sort(row), first, atol=0)

    def test_equal_row_entropies(self):
        m = gamma_family(0.23)
        ents = [entropy_bits(row) for row in m.entries]
        assert max(ents) - min(ents) <= 1e-15

    def test_reliable_gamma_bound_is_log_n_minus_row_entropy(self):
        m = gamma_family(0.01)
        report = capacity_upper_bound(m)
        assert report.gershgorin_condition is Condition.HOLDS
        expected = 2.0 - entropy_bits(m.entries[0])
        assert report.upper_bound == pytest.approx(expected, abs=1e-9)

    def test_domain_is_open(self):
        with pytest.raises(InvalidParameter):
            gamma_family(0.0)
        with pytest.raises(InvalidParameter):
            gamma_family(1.0)


class TestBetaFamily:
    def test_zero_beta_is_identity(self):
        assert np.array_equal(beta_family(0.0).entries, np.eye(4))

    def test_entry_four_three_at_half(self):
        assert beta_family(0.5).entries[3, 2] == pytest.approx(0.35, abs=1e-15)

    def test_dominance_boundary_at_half(self):
        assert analyze_inverse(beta_family(0.49)).is_sdd
        assert not analyze_inverse(beta_family(0.5)).is_sdd
        assert not analyze_inverse(beta_family(0.51)).is_sdd

    def test_rows_stochastic_everywhere(self):
        for b in np.linspace(0.0, 1.0, 21):
            m = beta_family(b)
            assert np.abs(m.entries.sum(axis=1) - 1.0).max() <= 1e-12


class TestBsc:
    def test_structure(self):
        m = bsc(0.1)
        assert np.array_equal(m.entries, [[0.9, 0.1], [0.1, 0.9]])

    def test_domain(self):
        with pytest.raises(InvalidParameter):
            bsc(1.2)


class TestRandomSddPositive:
    def test_ratio_floor_is_respected(self):
        m = random_sdd_positive(3, 20.0, 42)
        a = analyze_inverse(m)
        assert a.c_min >= 20.0
        assert a.is_positive and a.is_sdd

    def test_same_seed_reproduces_bits(self):
        a = random_sdd_positive(4, 3.0, 7)
        b = random_sdd_positive(4, 3.0, 7)
        assert np.array_equal(a.entries, b.entries)

    def test_different_seeds_differ(self):
        a = random_sdd_positive(4, 3.0, 7)
        b = random_sdd_positive(4, 3.0, 8)
        assert not np.array_equal(a.entries, b.entries)

    def test_dominance_at_small_ratio(self):
        m = random_sdd_positive(5, 2.0, 7)
        a = analyze_inverse(m)
        assert a.is_sdd
        diag = np.diag(m.entries)
        off = m.entries.sum(axis=1) - diag
        assert (diag > off).all()

    def test_every_fixture_validates(self, sdd_fixtures):
        for n, min_ratio, seed, m in sdd_fixtures[::9]:
            validate_channel(np.asarray(m.entries))
            assert analyze_inverse(m).c_min >= min_ratio

    def test_parameter_validation(self):
        with pytest.raises(InvalidParameter):
            random_sdd_positive(1, 2.0, 0)
        with pytest.raises(InvalidParameter):
            random_sdd_positive(3, 1.0, 0)


class TestBuildFamily:
    def test_aliases_resolve(self):
        a = build_family(FamilySpec("gamma-semi-weakly-symmetric", parameter=0.2))
        b = build_family(FamilySpec("gamma", parameter=0.2))
        assert np.array_equal(a.entries, b.entries)

    def test_fixed_examples_ignore_params(self):
        m = build_family(FamilySpec("example-3-fixed"))
        assert np.array_equal(m.entries, fixed_example("example-3").entries)

    def test_relay_requires_n(self):
        with pytest.raises(InvalidParameter):
            build_family(FamilySpec("relay-miso", parameter=0.3))

    def test_missing_parameter_rejected(self):
        with pytest.raises(InvalidParameter):
            build_family(FamilySpec("beta"))

    def test_unknown_family_rejected(self):
        with pytest.raises(InvalidParameter):
            build_family(FamilySpec("quaternary-erasure", parameter=0.1))

    def test_random_family_uses_seed(self):
        a = build_family(FamilySpec("random-sdd", n=3, parameter=2.0, seed=5))
        b = random_sdd_positive(3, 2.0, 5)
        assert np.array_equal(a.entries, b.entries)
