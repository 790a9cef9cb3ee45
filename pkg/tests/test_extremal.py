import math

import numpy as np
import pytest

from cvqmap.errors import DomainError
from cvqmap.extremal import (
    CURVE_KINDS,
    boundary_curve,
    glems,
    gmemms,
    gmemms_image_boundary,
    gmems,
    mems_boundary,
    nmax_vs_field_negativity,
    qlems_negativity,
    qmems_g,
    qmems_negativity,
    qubit_entropy_max,
    qubit_entropy_min,
    squeezed_thermal,
)
from cvqmap.gaussian import (
    EntropicParams,
    StandardFormCM,
    from_entropic_params,
    gaussian_entropies,
    gaussian_negativity,
    validate_cm,
)
from cvqmap.interface import mapped_global_entropy, mapped_negativity

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


class TestGaussianFamilies:
    def test_gmems_equals_lambda_plus_one(self):
        cm = gmems(s=2.0, d=0.5, g=2.0)
        ref = from_entropic_params(EntropicParams(2.0, 0.5, 2.0, 1.0))
        assert cm == ref
        assert validate_cm(cm).physical

    def test_glems_equals_lambda_minus_one(self):
        cm = glems(s=2.0, d=0.5, g=2.0)
        ref = from_entropic_params(EntropicParams(2.0, 0.5, 2.0, -1.0))
        assert cm == ref

    def test_gmems_at_least_as_entangled_as_glems(self):
        rng = np.random.default_rng(30)
        for _ in range(100):
            s = rng.uniform(1.0, 8.0)
            d = rng.uniform(-(s - 1.0), s - 1.0)
            g = rng.uniform(2.0 * abs(d) + 1.0, 2.0 * s - 1.0)
            assert (
                gaussian_negativity(gmems(s, d, g))
                >= gaussian_negativity(glems(s, d, g)) - 1e-10
            )

    def test_families_coincide_for_pure_states(self):
        cm_max = gmems(3.0, 0.0, 1.0)
        cm_min = glems(3.0, 0.0, 1.0)
        assert cm_max.a == pytest.approx(cm_min.a, abs=1e-9)
        assert cm_max.c_plus == pytest.approx(cm_min.c_plus, abs=1e-9)
        assert cm_max.c_minus == pytest.approx(cm_min.c_minus, abs=1e-9)


class TestSqueezedThermal:
    def test_known_point(self):
        r = 0.5 * math.acosh(2.0)
        cm = squeezed_thermal(g=1.0, r=r)
        assert cm.a == pytest.approx(2.0, abs=1e-12)
        assert cm.c_plus == pytest.approx(SQRT3, abs=1e-12)
        assert cm.c_minus == pytest.approx(-SQRT3, abs=1e-12)

    def test_zero_squeezing_is_thermal(self):
        cm = squeezed_thermal(g=4.0, r=0.0)
        assert cm.a == pytest.approx(2.0, abs=1e-12)
        assert cm.c_plus == 0.0 and cm.c_minus == 0.0

    def test_c_squared_identity(self):
        for g in (1.0, 2.0, 5.0):
            for r in (0.1, 0.7, 1.5):
                cm = squeezed_thermal(g, r)
                assert cm.c_plus**2 == pytest.approx(cm.a * cm.a - g, rel=1e-12)
                assert cm.det() == pytest.approx(g * g, rel=1e-10)

    def test_matches_symmetric_gmems(self):
        g, r = 2.0, 0.8
        cm = squeezed_thermal(g, r)
        ref = gmems(s=cm.a, d=0.0, g=g)
        assert cm.c_plus == pytest.approx(ref.c_plus, abs=1e-9)
        assert cm.c_minus == pytest.approx(ref.c_minus, abs=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            squeezed_thermal(g=0.5, r=0.1)


class TestGmemms:
    def test_symmetric_case_is_pure(self):
        cm = gmemms(2.0, 2.0)
        assert cm.c_plus == pytest.approx(SQRT3, abs=1e-12)
        assert cm.det() == pytest.approx(1.0, abs=1e-10)

    def test_asymmetric_example(self):
        cm = gmemms(3.0, 2.0)
        assert cm.c_plus == pytest.approx(2.0, abs=1e-12)
        assert cm.c_minus == pytest.approx(-2.0, abs=1e-12)
        # global field entropy 1 - 1/g at the boundary g = 2|d| + 1
        d = 0.5
        assert gaussian_entropies(cm)["global"] == pytest.approx(
            1.0 - 1.0 / (2.0 * abs(d) + 1.0), abs=1e-10
        )

    def test_unit_marginal_is_product(self):
        cm = gmemms(4.0, 1.0)
        assert cm.c_plus == 0.0 and cm.c_minus == 0.0

    def test_saturates_negativity_at_fixed_marginals(self):
        # any physical c-pair with the same (a, b) is at most as entangled
        rng = np.random.default_rng(31)
        a, b = 3.0, 2.0
        best = gaussian_negativity(gmemms(a, b))
        for _ in range(300):
            cp = rng.uniform(0.0, math.sqrt(a * b))
            cmn = -rng.uniform(0.0, cp)
            cand = StandardFormCM(a, b, cp, cmn)
            if not validate_cm(cand).physical:
                continue
            assert gaussian_negativity(cand) <= best + 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            gmemms(0.9, 2.0)


class TestScalarBoundaries:
    def test_entropy_envelope_known_points(self):
        assert qubit_entropy_max(0.0) == pytest.approx(0.0, abs=1e-12)
        # field entropy 1 - 1/g with g = sqrt(3): max = 1 - 4/16 = 3/4
        assert qubit_entropy_max(1.0 - 1.0 / SQRT3) == pytest.approx(0.75, abs=1e-12)
        assert qubit_entropy_min(0.0) == pytest.approx(0.0, abs=1e-12)
        # g = 2 (field entropy 1/2): min = 2 (g^2 - 1) / (3 g^2) = 1/2
        assert qubit_entropy_min(0.5) == pytest.approx(0.5, abs=1e-12)

    def test_entropy_envelope_ordering(self):
        for sf in np.linspace(0.0, 0.99, 50):
            assert qubit_entropy_max(sf) >= qubit_entropy_min(sf) - 1e-12

    def test_nmax_known_points(self):
        assert nmax_vs_field_negativity(0.0) == pytest.approx(0.0, abs=1e-12)
        assert nmax_vs_field_negativity(1.0 + SQRT3) == pytest.approx(
            SQRT3 / 2, abs=1e-12
        )

    def test_nmax_monotone_and_bounded(self):
        grid = np.linspace(0.0, 50.0, 200)
        vals = [nmax_vs_field_negativity(n) for n in grid]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
        assert all(0.0 <= v < 1.0 for v in vals)
        assert nmax_vs_field_negativity(1e6) == pytest.approx(1.0, abs=1e-5)

    def test_nmax_attained_by_pure_tms(self):
        for a in (1.5, 2.0, 5.0):
            c = math.sqrt(a * a - 1.0)
            cm = StandardFormCM(a, a, c, -c)
            assert mapped_negativity(cm) == pytest.approx(
                nmax_vs_field_negativity(gaussian_negativity(cm)), abs=1e-10
            )

    def test_mems_known_points(self):
        assert mems_boundary(0.0) == pytest.approx(1.0, abs=1e-12)
        assert mems_boundary(0.75) == pytest.approx(0.25, abs=1e-12)
        assert mems_boundary(8.0 / 9.0) == 0.0
        assert mems_boundary(0.95) == 0.0

    def test_mems_monotone_decreasing(self):
        grid = np.linspace(0.0, 1.0, 200)
        vals = [mems_boundary(s) for s in grid]
        assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))


class TestQmemsQlems:
    def test_qmems_g_known_point(self):
        assert qmems_g(s_loc=0.75, s_global=2.0 / 3.0) == pytest.approx(
            2.0, abs=1e-10
        )

    def test_qmems_negativity_known_point(self):
        assert qmems_negativity(0.75, 2.0 / 3.0) == pytest.approx(
            (SQRT2 - 1.0) / 4.0, abs=1e-10
        )

    def test_qmems_loop_closure(self):
        # the closed form must agree with mapping the squeezed-thermal state
        # recovered from (s_local, s_global)
        rng = np.random.default_rng(32)
        worst = 0.0
        for _ in range(200):
            s_loc = rng.uniform(0.05, 0.95)
            s = 1.0 / math.sqrt(1.0 - s_loc)
            g_hi = 2.0 * s - 1.0
            s_glob = rng.uniform(
                mapped_global_entropy(gmems(s, 0.0, 1.0)) + 1e-6,
                mapped_global_entropy(gmems(s, 0.0, g_hi)) - 1e-6,
            )
            g = qmems_g(s_loc, s_glob)
            cm = gmems(s, 0.0, g)
            assert mapped_global_entropy(cm) == pytest.approx(s_glob, abs=1e-8)
            worst = max(
                worst, abs(qmems_negativity(s_loc, s_glob) - mapped_negativity(cm))
            )
        assert worst < 1e-8

    def test_qmems_separability_threshold(self):
        s_loc = 0.75
        # entanglement survives iff 9 S_glob + 4 (S_loc - 2) S_loc is below
        # 4 S_loc sqrt(1 - S_loc + S_loc^2)
        s_star = (
            4.0 * s_loc * math.sqrt(1.0 - s_loc + s_loc * s_loc)
            - 4.0 * (s_loc - 2.0) * s_loc
        ) / 9.0
        assert qmems_negativity(s_loc, s_star - 1e-4) > 0.0
        assert qmems_negativity(s_loc, s_star + 1e-4) == 0.0

    def test_qlems_at_most_qmems(self):
        rng = np.random.default_rng(33)
        gaps = []
        for _ in range(150):
            s_loc = rng.uniform(0.05, 0.9)
            s = 1.0 / math.sqrt(1.0 - s_loc)
            lo = mapped_global_entropy(glems(s, 0.0, 1.0))
            hi = mapped_global_entropy(glems(s, 0.0, 2.0 * s - 1.0))
            s_glob = rng.uniform(lo + 1e-6, hi - 1e-6)
            nq = qmems_negativity(s_loc, s_glob)
            nl = qlems_negativity(s_loc, s_glob)
            assert nl <= nq + 1e-9
            gaps.append(nq - nl)
        assert max(gaps) < 0.04

    def test_qlems_known_separable_point(self):
        s_loc = 0.75
        s = 2.0
        cm = glems(s, 0.0, 2.2)
        assert qlems_negativity(s_loc, mapped_global_entropy(cm)) == pytest.approx(
            mapped_negativity(cm), abs=1e-8
        )


class TestGmemmsImage:
    def test_pure_marginals_give_product_state(self):
        assert gmemms_image_boundary(0.0, 0.0) == pytest.approx(0.0, abs=1e-12)

    def test_increases_toward_maximal_entanglement_on_diagonal(self):
        vals = [gmemms_image_boundary(s, s) for s in np.linspace(0.0, 0.999, 30)]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 0.95

    def test_matches_direct_mapping(self):
        rng = np.random.default_rng(34)
        for _ in range(100):
            sa = rng.uniform(0.0, 0.9)
            sb = rng.uniform(0.0, 0.9)
            a = 1.0 / math.sqrt(1.0 - sa)
            b = 1.0 / math.sqrt(1.0 - sb)
            assert gmemms_image_boundary(sa, sb) == pytest.approx(
                mapped_negativity(gmemms(a, b)), abs=1e-12
            )

    def test_dominates_whole_fiber_over_marginals(self):
        # grid-search all resources with the same marginals: none should map
        # to a more entangled qubit pair
        for a, b in ((2.0, 2.0), (3.0, 1.5), (1.3, 4.0)):
            bound = mapped_negativity(gmemms(a, b))
            s, d = (a + b) / 2.0, (a - b) / 2.0
            for g in np.linspace(2.0 * abs(d) + 1.0, 2.0 * s - 1.0, 40):
                for lam in np.linspace(-1.0, 1.0, 21):
                    cm = from_entropic_params(EntropicParams(s, d, g, lam))
                    assert mapped_negativity(cm) <= bound + 1e-9


class TestBoundaryCurve:
    @pytest.mark.parametrize("kind", CURVE_KINDS)
    def test_all_kinds_produce_samples(self, kind):
        curve = boundary_curve(kind, n_points=40, n_grid=12)
        assert curve.kind == kind
        data = np.asarray(curve.samples, dtype=float)
        assert data.shape[0] > 0
        assert data.shape[1] == len(curve.axis_names)
        assert np.all(np.isfinite(data))

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            boundary_curve("nonsense")
