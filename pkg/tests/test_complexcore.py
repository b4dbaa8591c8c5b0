import numpy as np
import pytest

from ampfsi.complexcore import (
    Contour,
    Polynomial,
    branch_sqrt,
    poly_roots,
    subdivide_roots,
    winding_number,
)
from ampfsi.errors import ContourTooClose, DegenerateInput


class TestBranchSqrt:
    def test_real_positive(self):
        assert branch_sqrt(4.0) == pytest.approx(2.0)

    def test_branch_on_cut(self):
        assert branch_sqrt(-1.0) == pytest.approx(1j)

    def test_complex_value(self):
        # (2+i)^2 = 4 + 4i - 1 = 3 + 4i
        assert (2 + 1j) * (2 + 1j) == pytest.approx(3 + 4j)
        assert branch_sqrt(3 + 4j) == pytest.approx(2 + 1j)

    def test_square_recovers_input(self):
        rng = np.random.default_rng(7)
        z = rng.standard_normal(10**4) + 1j * rng.standard_normal(10**4)
        w = branch_sqrt(z)
        assert np.all(np.abs(w * w - z) <= 1e-14 * np.abs(z))
        assert np.all((w.real > 0) | ((w.real == 0) & (w.imag >= 0)))


class TestPolyRoots:
    def test_symmetric_pair(self):
        roots = sorted(poly_roots(Polynomial([-1, 0, 1])), key=lambda z: z.real)
        assert roots[0] == pytest.approx(-1)
        assert roots[1] == pytest.approx(1)

    def test_double_root(self):
        roots = poly_roots(Polynomial([1, -2, 1]))
        assert len(roots) == 2
        for r in roots:
            assert r == pytest.approx(1.0, abs=1e-6)

    def test_quartic_roots_of_unity(self):
        # z^4 + 1: the four 8th roots of unity with odd index
        roots = poly_roots(Polynomial([1, 0, 0, 0, 1]))
        assert len(roots) == 4
        args = sorted(np.mod(np.angle(roots), 2 * np.pi))
        for r in roots:
            assert abs(r) == pytest.approx(1.0)
        expected = [np.pi / 4 * k for k in (1, 3, 5, 7)]
        assert np.allclose(args, expected, atol=1e-10)

    def test_degenerate_degree_zero(self):
        with pytest.raises(DegenerateInput):
            poly_roots(Polynomial([3.0]))
        with pytest.raises(DegenerateInput):
            poly_roots(Polynomial([1.0, 1e-16]))

    def test_random_known_roots_recovered(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            deg = rng.integers(2, 9)
            true = rng.standard_normal(deg) + 1j * rng.standard_normal(deg)
            coeffs = np.poly(true)[::-1]  # constant-first
            got = np.array(poly_roots(Polynomial(coeffs)))
            for r in true:
                assert np.min(np.abs(got - r)) < 1e-8 * (1 + abs(r))

    def test_residual_tolerance(self):
        rng = np.random.default_rng(3)
        c = rng.standard_normal(7) + 1j * rng.standard_normal(7)
        p = Polynomial(c)
        scale = np.max(np.abs(p.coeffs))
        for r in poly_roots(p):
            assert abs(p(r)) <= 1e-9 * scale * max(1.0, abs(r)) ** p.degree


class TestWindingNumber:
    def test_single_zero(self):
        res = winding_number(lambda z: z, Contour(radius=1.0))
        assert res.winding == 1

    def test_double_pole(self):
        res = winding_number(lambda z: 1.0 / z**2, Contour(radius=1.0))
        assert res.winding == -2

    def test_two_zeros_one_pole(self):
        f = lambda z: (z - 0.3) * (z - 0.5j) / z
        res = winding_number(f, Contour(radius=1.0))
        assert res.winding == 1

    def test_integer_stable_under_doubling(self):
        rng = np.random.default_rng(5)
        zeros = 2.0 * (rng.standard_normal(4) + 1j * rng.standard_normal(4))
        f = lambda z: np.prod([z - r for r in zeros], axis=0)
        w1 = winding_number(f, Contour(radius=1.7, n_samples=128)).winding
        w2 = winding_number(f, Contour(radius=1.7, n_samples=256)).winding
        assert w1 == w2

    def test_zero_on_contour_raises(self):
        with pytest.raises(ContourTooClose):
            winding_number(lambda z: z - 1.0, Contour(radius=1.0))


class TestSubdivideRoots:
    def test_single_root(self):
        roots = subdivide_roots(lambda a: a - 2.0)
        assert len(roots) == 1
        assert roots[0] == pytest.approx(2.0, abs=1e-8)

    def test_two_roots_with_residual(self):
        f = lambda a: (a - 1.5) * (a - 3j)
        roots = sorted(subdivide_roots(f), key=lambda z: z.imag)
        assert len(roots) == 2
        assert roots[0] == pytest.approx(1.5, abs=1e-8)
        assert roots[1] == pytest.approx(3j, abs=1e-8)
        for r in roots:
            assert abs(f(np.array([r]))[0]) < 1e-10

    def test_root_inside_unit_disk_excluded(self):
        assert subdivide_roots(lambda a: a - 0.5) == []

    def test_agrees_with_poly_roots_outside_unit_disk(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            deg = rng.integers(1, 7)
            # random roots kept away from the |A| = 1 search boundary
            radii = np.where(rng.random(deg) < 0.5, rng.uniform(0.1, 0.9, deg),
                             rng.uniform(1.1, 6.0, deg))
            args = rng.uniform(0, 2 * np.pi, deg)
            true = radii * np.exp(1j * args)
            p = Polynomial(np.poly(true)[::-1])
            expected = sorted([r for r in true if abs(r) > 1.0 + 1e-8],
                              key=lambda z: (z.real, z.imag))
            got = sorted(subdivide_roots(p), key=lambda z: (z.real, z.imag))
            assert len(got) == len(expected)
            for g, e in zip(got, expected):
                assert abs(g - e) < 1e-6 * (1 + abs(e))
