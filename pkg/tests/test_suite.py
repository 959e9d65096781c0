"""Runner-layer tests: the case registry, report mechanics, Euler-sum
machinery, and robustness of the verification loop.
"""

from __future__ import annotations

import math

import pytest

from dilogkit.quadrature import QuadratureConfig
from dilogkit.series import constants_table
from dilogkit.suite import (
    DEDOELDER_SPEC,
    SUITE_VERSION,
    SUM47_SPEC,
    SUM48_SPEC,
    EulerSumSpec,
    IdentityCase,
    VerificationReport,
    euler_sum,
    register_all,
    run,
)

EXPECTED_IDS = [
    "thm1.eq8",
    "thm1.eq9",
    "thm1.eq10",
    "thm1.eq11",
    "thm1.eq12",
    "thm1.coeff13",
    "thm1.coeff14",
    "thm1.coeff15",
    "thm1.coeff16",
    "thm1.coeff17",
    "thm2.eq33",
    "thm2.eq34",
    "thm2.eq35",
    "thm2.eq36",
    "thm2.eq37",
    "cor1.18",
    "cor1.19",
    "cor1.20",
    "cor1.21",
    "cor1.22",
    "cor2.38",
    "cor2.39",
    "cor2.40",
    "cor2.41",
    "cor2.42",
    "obs1",
    "obs2",
    "lem4",
    "thm3.ineq43",
    "thm3.ineq44",
    "thm3.ineq45",
    "thm3.upper.li2",
    "thm3.upper.chi2",
    "thm4.sum47",
    "thm4.sum48",
    "remark.dedoelder",
    "remark.h2sum",
    "lem5.coeff3",
    "lem5.coeff4",
    "fig1.boo",
    "fig1.ewell",
    "fig1.wy",
    "golden.eq56",
    "golden.eq57",
    "golden.eq58",
    "golden.eq59",
    "golden.eq60",
    "golden.fact51",
    "concl.asin3",
    "concl.asin4",
    "concl.atan",
    "concl.atan.decomp",
]


class TestRegistry:
    def test_version(self):
        assert SUITE_VERSION == "1.0.0"

    def test_ids_and_order(self):
        reg = register_all()
        assert list(reg) == EXPECTED_IDS
        assert len(reg) == 52
        assert len(reg) >= 30

    def test_case_contents(self):
        reg = register_all()
        for cid, case in reg.items():
            assert case.id == cid
            assert case.kind in ("equality", "inequality", "sum")
            assert case.tolerance > 0
            assert len(case.grid) >= 1
            assert case.description
            assert case.paper_anchor

    def test_kind_census(self):
        reg = register_all()
        kinds = [c.kind for c in reg.values()]
        assert kinds.count("inequality") == 5
        assert kinds.count("sum") == 7
        assert kinds.count("equality") == 40

    def test_validation(self):
        ok = dict(
            description="d",
            paper_anchor="a",
            grid=(0.5,),
            tolerance=1e-9,
            lhs=lambda t, cfg: t,
            rhs=lambda t, cfg: t,
        )
        with pytest.raises(ValueError):
            IdentityCase(id="x", kind="nonsense", **ok)
        with pytest.raises(ValueError):
            IdentityCase(id="x", kind="equality", **{**ok, "tolerance": 0.0})
        with pytest.raises(ValueError):
            IdentityCase(id="x", kind="equality", **{**ok, "grid": ()})


class TestRun:
    def test_full_run_all_pass(self):
        reports = run()
        assert len(reports) == 52
        assert all(isinstance(r, VerificationReport) for r in reports)
        assert all(r.passed for r in reports)
        assert all(r.note is None for r in reports)
        assert [r.case_id for r in reports] == EXPECTED_IDS

    def test_report_field_types_are_builtin(self):
        # regression: numpy scalars must not leak into reports (JSON layer)
        for r in run(ids=["thm1.eq8", "thm3.ineq43", "thm4.sum47"]):
            assert type(r.passed) is bool
            assert type(r.worst_abs_error) is float
            assert r.worst_point is None or type(r.worst_point) is float
            assert type(r.evaluations) is int
            assert type(r.wall_time_s) is float

    def test_evaluation_count_and_worst_point(self):
        reg = register_all()
        (rep,) = run(ids=["thm1.eq8"])
        assert rep.evaluations == 2 * len(reg["thm1.eq8"].grid)
        assert rep.worst_point is not None
        assert 0.0 <= rep.worst_point <= 1.0
        assert rep.wall_time_s >= 0.0

    def test_explicit_order_preserved(self):
        reports = run(ids=["thm2.eq33", "thm1.eq8", "cor1.18"])
        assert [r.case_id for r in reports] == ["thm2.eq33", "thm1.eq8", "cor1.18"]

    def test_unknown_id_raises_keyerror(self):
        with pytest.raises(KeyError, match="nope"):
            run(ids=["nope"])
        with pytest.raises(KeyError, match="thm9"):
            run(ids=["thm1.eq8", "thm9.eq1"])

    def test_doubling_panels_flips_nothing(self):
        cfg = QuadratureConfig(nodes_per_panel=32, panels=16, target_tol=1e-12, max_refinements=1)
        reports = run(config=cfg)
        assert all(r.passed for r in reports)

    def test_inequality_worst_is_signed(self):
        reg = register_all()
        reports = run(ids=[cid for cid, c in reg.items() if c.kind == "inequality"])
        for rep in reports:
            assert rep.passed
            # margins can sit exactly on zero at the tight endpoint but
            # must never exceed the declared slack
            assert rep.worst_abs_error <= reg[rep.case_id].tolerance

    def test_non_finite_case_is_diagnosed_and_run_continues(self):
        bad = IdentityCase(
            id="bad",
            description="explodes at the second grid point",
            paper_anchor="synthetic",
            kind="equality",
            grid=(0.1, 0.2, 0.3),
            tolerance=1e-9,
            lhs=lambda t, cfg: math.nan if t > 0.15 else t,
            rhs=lambda t, cfg: t,
        )
        good = IdentityCase(
            id="good",
            description="trivial equality",
            paper_anchor="synthetic",
            kind="equality",
            grid=(0.5,),
            tolerance=1e-9,
            lhs=lambda t, cfg: t,
            rhs=lambda t, cfg: t,
        )
        reports = run(registry={"bad": bad, "good": good})
        assert [r.case_id for r in reports] == ["bad", "good"]
        bad_rep, good_rep = reports
        assert not bad_rep.passed
        assert bad_rep.worst_abs_error == math.inf
        assert bad_rep.note is not None and "non-finite" in bad_rep.note
        assert bad_rep.worst_point == pytest.approx(0.2)
        assert good_rep.passed


class TestEulerSums:
    @pytest.mark.parametrize("spec", [SUM47_SPEC, SUM48_SPEC, DEDOELDER_SPEC])
    def test_converges_to_target(self, spec):
        target = spec.target(constants_table())
        assert abs(euler_sum(spec) - target) < 1e-6

    @pytest.mark.parametrize("spec", [SUM47_SPEC, SUM48_SPEC, DEDOELDER_SPEC])
    def test_doubling_terms_shrinks_residual(self, spec):
        target = spec.target(constants_table())
        r1 = abs(euler_sum(spec) - target)
        r2 = abs(euler_sum(spec, n_terms=2 * spec.n_terms) - target)
        assert r2 < r1
        assert r2 < 1e-6

    def test_tail_corrections_are_load_bearing(self):
        # raw 10-term partial sums are nowhere near the targets
        tab = constants_table()
        for spec in (SUM47_SPEC, SUM48_SPEC):
            raw = math.fsum(spec.term(n) for n in range(1, 11))
            assert abs(raw - spec.target(tab)) > 1e-3

    def test_generic_path_matches_kernel_path(self):
        # evaluating through spec.term must agree with the compiled kernel
        trimmed = EulerSumSpec(
            term=SUM47_SPEC.term,
            tail_correction=SUM47_SPEC.tail_correction,
            n_terms=20_000,
            target=SUM47_SPEC.target,
            kernel=None,
        )
        with_kernel = euler_sum(SUM47_SPEC, n_terms=20_000)
        without = euler_sum(trimmed)
        assert abs(with_kernel - without) < 1e-12

    def test_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            euler_sum(SUM47_SPEC, n_terms=9)


class TestDualPaths:
    def test_quadrature_vs_coefficient_paths(self):
        # Eq and coeff cases check the same identities through quadrature
        # and through weighted Maclaurin coefficients; both passing pins the
        # two independent paths to the series referee within 1e-9 + 1e-11.
        ids = [f"thm1.eq{k}" for k in range(8, 13)] + [f"thm1.coeff{k}" for k in range(13, 18)]
        reports = run(ids=ids)
        assert all(r.passed for r in reports)
        worst_eq = max(r.worst_abs_error for r in reports[:5])
        worst_coeff = max(r.worst_abs_error for r in reports[5:])
        assert worst_eq < 1e-9
        assert worst_coeff < 1e-11
