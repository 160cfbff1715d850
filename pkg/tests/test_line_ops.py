import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertsym import (
    AffineElement,
    AliasingError,
    Grid1D,
    HalfLineSignal,
    LineSignal,
    dft,
    dilate,
    group_compose,
    group_inverse,
    hardy_project,
    hilbert_multiplier,
    hilbert_pv_quadrature,
    idft,
    intertwine_defect,
    make_probes,
    norm,
    rep_fourier_side,
    rep_natural,
    translate,
)

from conftest import rel_err


def single_bin(grid, k):
    xi = grid.dxi * k
    return LineSignal(grid, np.exp(1j * xi * grid.positions()))


def strip_mean_and_nyquist(f: LineSignal) -> LineSignal:
    s = dft(f)
    vals = np.array(s.values)
    vals[0] = 0.0
    if f.grid.n % 2 == 0:
        vals[f.grid.n // 2] = 0.0
    return idft(s.with_values(vals))


class TestMultiplier:
    def test_positive_frequency_eigenvector(self, grid):
        f = single_bin(grid, 1)
        h = hilbert_multiplier(f)
        assert rel_err(h.values, -1j * f.values) <= 1e-12

    def test_real_input_real_output(self, grid):
        f = make_probes("gaussian-packet", seed=2, count=1, grid=grid, real=True)[0]
        h = hilbert_multiplier(f)
        assert np.max(np.abs(h.values.imag)) <= 1e-12 * np.max(np.abs(h.values.real))

    def test_involution_on_mean_free_probes(self, bandlimited):
        for f in bandlimited:
            hh = hilbert_multiplier(hilbert_multiplier(f))
            assert rel_err(hh.values, -f.values) <= 1e-10

    def test_involution_residue_is_mean_and_nyquist_share(self, packets):
        # H^2 = -I plus the rank-two defect on the mean/Nyquist bins
        for f in packets:
            hh = hilbert_multiplier(hilbert_multiplier(f))
            clean = strip_mean_and_nyquist(f)
            residue = hh.values + f.values - (f.values - clean.values)
            assert np.linalg.norm(residue) <= 1e-10 * norm(f)


class TestHardyMembers:
    def test_decaying_hardy_function_is_eigenvector(self):
        # 1/(x+i)^2 decays fast enough for the window to represent it
        g = Grid1D.from_interval(-80.0, 80.0, 8192)
        x = g.positions()
        f = LineSignal(g, 1.0 / (x + 1j) ** 2)
        ks = g.signed_indices()
        spec = dft(f).values
        neg_mass = np.sum(np.abs(spec[ks < 0]) ** 2) / np.sum(np.abs(spec) ** 2)
        assert neg_mass <= 1e-6
        h = hilbert_multiplier(f)
        clean = strip_mean_and_nyquist(f)
        assert np.linalg.norm(h.values + 1j * clean.values) <= 1e-3 * np.linalg.norm(f.values)

    def test_slowly_decaying_hardy_function(self):
        # 1/(x+i) has 1/x tails: the window truncation dominates, so the
        # membership check is spectral and the eigenrelation bound is loose.
        g = Grid1D.from_interval(-80.0, 80.0, 8192)
        x = g.positions()
        f = LineSignal(g, 1.0 / (x + 1j))
        ks = g.signed_indices()
        spec = dft(f).values
        neg_mass = np.sum(np.abs(spec[ks < 0]) ** 2) / np.sum(np.abs(spec) ** 2)
        assert neg_mass <= 2e-3
        h = hilbert_multiplier(f)
        clean = strip_mean_and_nyquist(f)
        assert np.linalg.norm(h.values + 1j * clean.values) <= 0.1 * np.linalg.norm(f.values)


class TestQuadrature:
    def test_zero_input(self, grid):
        out = hilbert_pv_quadrature(LineSignal(grid, np.zeros(grid.n)))
        assert np.all(out.values == 0)

    def test_lorentzian_closed_form(self):
        g = Grid1D.from_interval(-200.0, 200.0, 16384)
        x = g.positions()
        f = LineSignal(g, 1.0 / (1.0 + x**2))
        out = hilbert_pv_quadrature(f)
        expected = x / (1.0 + x**2)
        central = slice(g.n // 4, 3 * g.n // 4)
        err = np.linalg.norm(out.values[central] - expected[central])
        err /= np.linalg.norm(expected[central])
        assert err <= 1e-3

    def test_matches_multiplier_on_windowed_sine(self, big_grid):
        x = big_grid.positions()
        f = LineSignal(big_grid, np.exp(-(x**2) / 18.0) * np.sin(4.0 * x))
        quad = hilbert_pv_quadrature(f)
        mult = hilbert_multiplier(f)
        central = slice(big_grid.n // 4, 3 * big_grid.n // 4)
        err = np.linalg.norm((quad.values - mult.values)[central]) / norm(f) * np.sqrt(
            big_grid.dx
        )
        assert err <= 1e-3

    def test_edge_decay_warning_flag(self, grid):
        x = grid.positions()
        wide = LineSignal(grid, np.exp(-(x**2) / (2 * 30.0**2)))
        out = hilbert_pv_quadrature(wide)
        assert "edge-decay" in out.flags
        ok = hilbert_pv_quadrature(LineSignal(grid, np.exp(-(x**2) / 2)))
        assert "edge-decay" not in ok.flags


class TestHardyProjections:
    def test_positive_bin_goes_to_plus(self, grid):
        f = single_bin(grid, 3)
        plus = hardy_project(f, "+")
        minus = hardy_project(f, "-")
        assert rel_err(plus.values, f.values) <= 1e-12
        assert np.linalg.norm(minus.values) <= 1e-12 * norm(f)

    def test_partition_and_hilbert_identity(self, packets):
        for f in packets:
            plus = hardy_project(f, "+")
            minus = hardy_project(f, "-")
            h = hilbert_multiplier(f)
            fn = np.linalg.norm(f.values)
            assert np.linalg.norm(plus.values + minus.values - f.values) <= 1e-12 * fn
            assert np.linalg.norm(plus.values - minus.values - 1j * h.values) <= 1e-12 * fn

    def test_plus_part_is_eigenvector_after_mean_removal(self, bandlimited):
        for f in bandlimited:
            plus = hardy_project(f, "+")
            h = hilbert_multiplier(plus)
            assert np.linalg.norm(h.values + 1j * plus.values) <= 1e-12 * norm(f)

    def test_bad_sign(self, packets):
        with pytest.raises(ValueError):
            hardy_project(packets[0], "up")


class TestDilate:
    def test_identity(self, packets):
        f = packets[0]
        np.testing.assert_array_equal(dilate(f, 1.0).values, f.values)

    def test_gaussian_closed_form(self, big_grid):
        x = big_grid.positions()
        f = LineSignal(big_grid, np.exp(-(x**2) / 2.0))
        out = dilate(f, 2.0)
        expected = (2.0**-0.5) * np.exp(-(x**2) / 8.0)
        assert np.max(np.abs(out.values - expected)) <= 1e-8

    @pytest.mark.parametrize("a", [0.5, 2.0, 3.0])
    def test_isometry(self, a, grid):
        probes = make_probes(
            "gaussian-packet", seed=8, count=3, grid=grid,
            width=(1.0, 1.3), center=(-1.0, 1.0), modulation=(3.0, 4.0),
        )
        for f in probes:
            assert abs(norm(dilate(f, a)) - norm(f)) <= 1e-8 * norm(f)

    def test_spectral_aliasing_guard(self, grid):
        f = make_probes("random-bandlimited", seed=9, count=1, grid=grid)[0]
        with pytest.raises(AliasingError, match="mass fraction"):
            dilate(f, 0.25)

    def test_spatial_overflow_guard(self, grid):
        x = grid.positions()
        f = LineSignal(grid, np.exp(-(x**2) / (2 * 5.0**2)))
        with pytest.raises(AliasingError, match="mass fraction"):
            dilate(f, 8.0)


class TestTranslate:
    def test_identity(self, packets):
        f = packets[0]
        assert rel_err(translate(f, 0.0).values, f.values) <= 1e-13

    def test_integer_shift_equals_roll(self, grid):
        f = make_probes("gaussian-packet", seed=10, count=1, grid=grid)[0]
        out = translate(f, 3 * grid.dx)
        rolled = np.roll(f.values, 3)
        assert np.max(np.abs(out.values - rolled)) <= 1e-10

    def test_isometry(self, packets):
        for f in packets:
            assert abs(norm(translate(f, 1.7)) - norm(f)) <= 1e-12 * norm(f)

    def test_edge_mass_flag(self, grid):
        x = grid.positions()
        f = LineSignal(grid, np.exp(-((x - 38.0) ** 2) / 2.0))
        assert "edge-mass" in translate(f, 5.0).flags
        assert "edge-mass" not in translate(f, -5.0).flags


class TestGroup:
    def test_compose_example(self):
        assert group_compose(AffineElement(2, 1), AffineElement(3, 4)) == AffineElement(6, 9)

    def test_identity_element(self):
        g = AffineElement(2.5, -1.0)
        assert group_compose(AffineElement(1, 0), g) == g

    def test_inverse(self):
        g = AffineElement(2.0, 1.0)
        gi = group_inverse(g)
        assert gi == AffineElement(0.5, -0.5)
        assert group_compose(g, gi) == AffineElement(1.0, 0.0)

    def test_invalid_scale(self):
        with pytest.raises(ValueError):
            AffineElement(0.0, 1.0)
        with pytest.raises(ValueError):
            AffineElement(-2.0, 1.0)

    @settings(max_examples=50, deadline=None)
    @given(
        a1=st.floats(0.1, 10), b1=st.floats(-5, 5),
        a2=st.floats(0.1, 10), b2=st.floats(-5, 5),
        a3=st.floats(0.1, 10), b3=st.floats(-5, 5),
    )
    def test_associativity_and_inverse_property(self, a1, b1, a2, b2, a3, b3):
        g1, g2, g3 = AffineElement(a1, b1), AffineElement(a2, b2), AffineElement(a3, b3)
        left = group_compose(group_compose(g1, g2), g3)
        right = group_compose(g1, group_compose(g2, g3))
        assert left.a == pytest.approx(right.a, rel=1e-12)
        assert left.b == pytest.approx(right.b, rel=1e-12, abs=1e-12)
        gi = group_compose(g1, group_inverse(g1))
        assert gi.a == pytest.approx(1.0, rel=1e-12)
        assert gi.b == pytest.approx(0.0, abs=1e-9 * (1 + abs(b1)))


class TestNaturalRepresentation:
    def test_identity_element(self, packets):
        f = packets[0]
        assert rel_err(rep_natural(f, AffineElement(1, 0)).values, f.values) <= 1e-13

    def test_reduces_to_dilation(self, packets):
        f = packets[0]
        np.testing.assert_allclose(
            rep_natural(f, AffineElement(2, 0)).values, dilate(f, 2).values, atol=1e-12
        )

    def test_homomorphism(self, big_grid):
        x = big_grid.positions()
        f = LineSignal(big_grid, np.exp(-(x**2) / (2 * 0.7**2)))
        lhs = rep_natural(rep_natural(f, AffineElement(3, 4)), AffineElement(2, 1))
        rhs = rep_natural(f, AffineElement(6, 9))
        assert np.linalg.norm(lhs.values - rhs.values) <= 1e-8 * np.linalg.norm(f.values)

    def test_commutes_with_hilbert(self, big_grid):
        probes = make_probes(
            "gaussian-packet", seed=11, count=5, grid=big_grid,
            width=(1.25, 1.4), center=(-1.0, 1.0), modulation=(4.5, 5.2),
        )
        dx = big_grid.dx
        for a in (0.5, 2.0, 4.0):
            for b in (0.0, 7 * dx, -7 * dx, 3.5 * dx):
                g = AffineElement(a, b)
                for f in probes:
                    lhs = hilbert_multiplier(rep_natural(f, g))
                    rhs = rep_natural(hilbert_multiplier(f), g)
                    d = np.linalg.norm(lhs.values - rhs.values) / np.linalg.norm(f.values)
                    assert d <= 1e-6


def decaying_halfline(n=2048, dx=0.02, sign="+"):
    sig = HalfLineSignal(sign, dx, np.zeros(n))
    x = sig.positions()
    vals = np.abs(x) * np.exp(-np.abs(x)) * np.exp(0.3j * x)
    return HalfLineSignal(sign, dx, vals)


class TestFourierSideRepresentation:
    def test_identity(self):
        g = decaying_halfline()
        out = rep_fourier_side(g, 1.0, 0.0)
        np.testing.assert_allclose(out.values, g.values, atol=1e-14)

    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_support_sign_preserved(self, sign):
        g = decaying_halfline(sign=sign)
        out = rep_fourier_side(g, 2.0, 1.0)
        assert out.sign == sign
        assert out.n == g.n

    @pytest.mark.parametrize("convention", ["angular", "cyclic"])
    def test_homomorphism_integer_scales(self, convention):
        g = decaying_halfline()
        lhs = rep_fourier_side(rep_fourier_side(g, 3.0, 4.0, convention), 2.0, 1.0, convention)
        rhs = rep_fourier_side(g, 6.0, 9.0, convention)
        scale = np.linalg.norm(g.values)
        assert np.linalg.norm(lhs.values - rhs.values) <= 1e-10 * scale

    def test_non_integer_scale_uses_interpolation(self):
        g = decaying_halfline()
        out = rep_fourier_side(g, 1.5, 0.0)
        x = g.positions()
        exact = np.sqrt(1.5) * (1.5 * np.abs(x)) * np.exp(-1.5 * np.abs(x)) * np.exp(
            0.45j * x
        )
        inside = 1.5 * np.abs(x) <= np.abs(x).max()
        err = np.linalg.norm((out.values - exact)[inside]) / np.linalg.norm(exact[inside])
        assert err <= 1e-5


class TestIntertwining:
    def test_identity_element(self, packets):
        assert intertwine_defect(packets[0], AffineElement(1, 0)) <= 1e-13

    def test_integer_dilation(self, big_grid):
        x = big_grid.positions()
        f = LineSignal(big_grid, np.exp(-(x**2) / 2.0))
        assert intertwine_defect(f, AffineElement(2, 0)) <= 1e-8

    def test_pure_translation_on_trig_probe(self, grid):
        f = single_bin(grid, 5)
        assert intertwine_defect(f, AffineElement(1, 5 * grid.dx)) <= 1e-10

    def test_frozen_phase_sign(self, grid):
        # translation by b multiplies bin k by exp(-i xi_k b); the opposite
        # sign must fail, pinning the convention
        f = single_bin(grid, 5)
        b = 2.3
        s = dft(f).values
        lhs = dft(translate(f, b)).values
        xi = grid.frequencies()
        good = np.linalg.norm(lhs - s * np.exp(-1j * xi * b))
        bad = np.linalg.norm(lhs - s * np.exp(+1j * xi * b))
        assert good <= 1e-9
        assert bad > 1.0
