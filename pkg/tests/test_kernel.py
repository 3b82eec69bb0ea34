import math

import numpy as np
import pytest

from hardydisk import (
    DiskPoint,
    UnitGridFunction,
    analyze,
    eval_kernel,
    eval_kernel_at,
    eval_kernel_modulus_form,
    grid_angles,
    herglotz_eval,
    kernel_spectrum,
    verify_kernel_properties,
)

EPS = np.finfo(float).eps


class TestDiskPoint:
    def test_rejects_radius_one_and_beyond(self):
        with pytest.raises(ValueError):
            DiskPoint(1.0, 0.0)
        with pytest.raises(ValueError):
            DiskPoint(1.5, 0.0)
        with pytest.raises(ValueError):
            DiskPoint(-0.1, 0.0)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            DiskPoint(float("nan"), 0.0)
        with pytest.raises(ValueError):
            DiskPoint(0.5, float("inf"))

    def test_angle_normalized_into_half_open_interval(self):
        assert DiskPoint(0.5, 3 * math.pi).sigma == pytest.approx(math.pi)
        assert DiskPoint(0.5, -math.pi).sigma == pytest.approx(math.pi)
        assert DiskPoint(0.5, math.pi).sigma == pytest.approx(math.pi)
        p = DiskPoint(0.5, -3.5 * math.pi)
        assert -math.pi < p.sigma <= math.pi

    def test_complex_round_trip(self):
        z = 0.3 - 0.4j
        p = DiskPoint.from_complex(z)
        assert p.to_complex() == pytest.approx(z, abs=1e-15)


class TestEvalKernel:
    def test_identity_one_at_origin(self):
        assert eval_kernel(0.0, 1.234) == 1.0

    def test_half_at_zero_angle(self):
        # (1 - 1/4) / (1 - 1 + 1/4)
        assert eval_kernel(0.5, 0.0) == 3.0

    def test_half_at_pi(self):
        # 0.75 / 2.25
        assert eval_kernel(0.5, math.pi) == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            eval_kernel(1.0, 0.0)
        with pytest.raises(ValueError):
            eval_kernel(0.5, float("nan"))

    def test_vectorized_matches_scalar(self):
        th = np.linspace(-3, 3, 7)
        vec = eval_kernel(0.7, th)
        assert vec == pytest.approx([eval_kernel(0.7, x) for x in th])

    @pytest.mark.parametrize("r", [0.0, 0.3, 0.9, 0.9999, 0.999999])
    def test_two_closed_forms_agree_to_four_ulps(self, r):
        th = np.concatenate(
            [np.linspace(-np.pi, np.pi, 1001), 10.0 ** np.linspace(-12, 0, 60), -(10.0 ** np.linspace(-12, 0, 60))]
        )
        a = eval_kernel(r, th)
        b = eval_kernel_modulus_form(r, th)
        assert np.all(np.abs(a - b) <= 4.0 * EPS * np.maximum(np.abs(a), np.abs(b)))


class TestEvalKernelAt:
    def test_reduces_to_zero_angle(self):
        assert eval_kernel_at(DiskPoint(0.5, 0.7), 0.7) == 3.0

    def test_origin_is_constant(self):
        assert eval_kernel_at(DiskPoint(0.0, 0.0), 2.0) == 1.0

    def test_reduces_to_pi(self):
        assert eval_kernel_at(DiskPoint(0.5, 0.0), math.pi) == pytest.approx(1.0 / 3.0, rel=1e-15)


class TestKernelSpectrum:
    def test_origin_is_delta(self):
        c = kernel_spectrum(0.0, 3)
        assert c.coeff(0) == 1.0
        assert all(c.coeff(n) == 0.0 for n in (-3, -2, -1, 1, 2, 3))

    def test_geometric_coefficients(self):
        c = kernel_spectrum(0.5, 2)
        assert np.allclose(c.coeffs, [0.25, 0.5, 1.0, 0.5, 0.25])

    def test_zero_band_is_unit_mean(self):
        c = kernel_spectrum(0.9, 0)
        assert c.coeffs.tolist() == [1.0 + 0.0j]

    @pytest.mark.parametrize("r,n", [(0.5, 64), (0.9, 512)])
    def test_matches_analyzed_samples(self, r, n):
        # independent route: sample the kernel, take discrete coefficients
        grid = UnitGridFunction(eval_kernel(r, grid_angles(n)))
        measured = analyze(grid)
        expected = kernel_spectrum(r, 16)
        for k in range(-16, 17):
            assert abs(measured.coeff(k) - expected.coeff(k)) <= 1e-10

    def test_rejects_bad_band(self):
        with pytest.raises(ValueError):
            kernel_spectrum(0.5, -1)


class TestHerglotz:
    def test_center_is_one(self):
        assert herglotz_eval(DiskPoint(0.0, 0.0), 1.0) == 1.0 + 0.0j

    def test_real_axis_value(self):
        # (1 + 1/2) / (1 - 1/2)
        assert herglotz_eval(DiskPoint(0.5, 0.0), 0.0) == 3.0 + 0.0j

    def test_real_part_is_kernel_and_imag_part_explicit(self):
        z = DiskPoint(0.5, math.pi / 2)
        g = herglotz_eval(z, 0.0)
        assert g.real == pytest.approx(eval_kernel(0.5, math.pi / 2), abs=1e-14)
        assert g.imag == pytest.approx(2 * 0.5 * math.sin(math.pi / 2) / 1.25, abs=1e-14)

    def test_real_part_matches_kernel_on_grid(self):
        radii = np.linspace(0.0, 0.99, 32)
        sigmas = np.linspace(-3.0, 3.0, 32)
        ts = np.linspace(-np.pi, np.pi, 32)
        for r, s in zip(radii, sigmas):
            z = DiskPoint(r, s)
            gap = np.abs(herglotz_eval(z, ts).real - eval_kernel_at(z, ts))
            assert float(gap.max()) <= 1e-12


class TestVerifyProperties:
    def test_all_pass_at_moderate_radius(self):
        reports = verify_kernel_properties(0.5, 0.5, 4096)
        assert [rep.property_id for rep in reports] == ["i", "ii", "iii", "iv", "v"]
        assert all(rep.passed for rep in reports)
        assert reports[3].max_violation <= 1e-12

    def test_passed_flag_consistent_with_tolerance(self):
        for rep in verify_kernel_properties(0.9, 0.3, 1024):
            assert rep.passed == (rep.max_violation <= rep.metadata["tolerance"])

    def test_constant_kernel_tail_value(self):
        rep = verify_kernel_properties(0.0, 1.0, 64)[4]
        assert rep.metadata["sup_value"] == 1.0

    def test_tail_value_is_kernel_at_delta(self):
        rep = verify_kernel_properties(0.999, 0.1, 2**16)[4]
        assert rep.metadata["sup_value"] == eval_kernel(0.999, 0.1)

    def test_tail_values_decay_toward_boundary(self):
        values = [
            verify_kernel_properties(r, 0.5, 4096)[4].metadata["sup_value"]
            for r in (0.9, 0.99, 0.999, 0.9999)
        ]
        assert all(b < a for a, b in zip(values, values[1:]))
        assert values[-1] < 1e-2

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            verify_kernel_properties(0.5, 0.0, 64)
        with pytest.raises(ValueError):
            verify_kernel_properties(0.5, 4.0, 64)
        with pytest.raises(ValueError):
            verify_kernel_properties(0.5, 0.5, 8)
