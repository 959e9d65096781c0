"""Backend parity and selection tests.

The compiled extension and the pure-Python kernels implement the same
operations in the same order, so their results must agree to a few ulp
(bit-identical in practice).  Selection honors DILOGKIT_BACKEND at import
time, which is exercised through subprocesses.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from dilogkit import _backend
from dilogkit import _kernels_py as pk

try:
    from dilogkit import _kernels as ck

    HAVE_COMPILED = True
except ImportError:
    ck = None
    HAVE_COMPILED = False

ULP = 2.220446049250313e-16

needs_compiled = pytest.mark.skipif(not HAVE_COMPILED, reason="compiled extension not built")


def ulp_diff(a: float, b: float) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / (max(abs(a), abs(b)) * ULP)


class TestSelection:
    def test_backend_constant_is_sane(self):
        assert _backend.BACKEND in ("compiled", "python")
        assert _backend.backend_name() == _backend.BACKEND

    @needs_compiled
    def test_auto_prefers_compiled(self):
        assert _backend.BACKEND == "compiled"

    def _probe(self, env_value: str | None) -> subprocess.CompletedProcess:
        env = dict(os.environ)
        env.pop("DILOGKIT_BACKEND", None)
        if env_value is not None:
            env["DILOGKIT_BACKEND"] = env_value
        return subprocess.run(
            [sys.executable, "-c", "from dilogkit._backend import BACKEND; print(BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
        )

    def test_force_python(self):
        out = self._probe("python")
        assert out.returncode == 0
        assert out.stdout.strip() == "python"

    @needs_compiled
    def test_force_compiled(self):
        out = self._probe("compiled")
        assert out.returncode == 0
        assert out.stdout.strip() == "compiled"

    def test_invalid_value_fails_import(self):
        out = self._probe("fortran")
        assert out.returncode != 0
        assert "DILOGKIT_BACKEND" in out.stderr


@needs_compiled
class TestParity:
    @pytest.mark.parametrize("t", [0.0, 0.1, 0.5, 0.9, 0.999])
    @pytest.mark.parametrize("s", [2, 3])
    def test_power_series_sum(self, t, s):
        a = ck.power_series_sum(t, s, 1e-14, 10**6)
        b = pk.power_series_sum(t, s, 1e-14, 10**6)
        assert ulp_diff(a[0], b[0]) <= 4.0
        assert a[1] == b[1]
        assert ulp_diff(a[2], b[2]) <= 4.0

    @pytest.mark.parametrize("t", [0.0, 0.1, 0.5, 0.9, 0.999, 1.0])
    @pytest.mark.parametrize("s", [2, 3])
    @pytest.mark.parametrize("alternating", [False, True])
    def test_odd_series_sum(self, t, s, alternating):
        a = ck.odd_series_sum(t, s, alternating, 1e-14, 10**5)
        b = pk.odd_series_sum(t, s, alternating, 1e-14, 10**5)
        assert ulp_diff(a[0], b[0]) <= 4.0
        assert a[1] == b[1]

    @pytest.mark.parametrize("s", [1, 2, 3, 5])
    @pytest.mark.parametrize("n", [10, 1000, 100000])
    def test_zeta_partial_sum(self, s, n):
        assert ulp_diff(ck.zeta_partial_sum(s, n), pk.zeta_partial_sum(s, n)) <= 4.0

    @pytest.mark.parametrize("s", [2, 3])
    @pytest.mark.parametrize("n", [1, 50, 5000])
    def test_odd_zeta_partial_sum(self, s, n):
        assert ulp_diff(ck.odd_zeta_partial_sum(s, n), pk.odd_zeta_partial_sum(s, n)) <= 4.0

    @pytest.mark.parametrize(
        "name", ["euler_sum_odd2_weighted", "euler_sum_h2_over_n2", "euler_sum_odd1sq_over_n2"]
    )
    @pytest.mark.parametrize("n", [100, 10**5])
    def test_euler_kernels(self, name, n):
        assert ulp_diff(getattr(ck, name)(n), getattr(pk, name)(n)) <= 4.0

    def test_horner_eval(self):
        rng = np.random.default_rng(7)
        coeffs = np.ascontiguousarray(rng.standard_normal(64))
        for t in (-0.9, -0.3, 0.0, 0.4, 1.0):
            assert ulp_diff(ck.horner_eval(coeffs, t), pk.horner_eval(coeffs, t)) <= 2.0

    def test_horner_accepts_read_only_arrays(self):
        # SeriesExpansion hands out immutable buffers; the extension must
        # accept a read-only memoryview.
        coeffs = np.ascontiguousarray(np.array([0.0, 1.0, 0.0, 1 / 6]))
        coeffs.setflags(write=False)
        assert ck.horner_eval(coeffs, 0.5) == pk.horner_eval(coeffs, 0.5)


@needs_compiled
class TestWholeStackParity:
    def test_series_functions_identical_under_both_backends(self):
        # Evaluate the public functions in a subprocess pinned to the pure
        # backend and compare against the in-process (compiled) values.
        code = (
            "from dilogkit.series import li2, li3, chi2, chi3, ti2, ti3\n"
            "for t in (0.0, 0.3, 0.7, 0.95, 1.0):\n"
            "    for f in (li2, li3, chi2, chi3, ti2, ti3):\n"
            "        print(repr(f(t)))\n"
        )
        env = dict(os.environ)
        env["DILOGKIT_BACKEND"] = "python"
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        assert out.returncode == 0, out.stderr
        got = [float(line) for line in out.stdout.split()]

        from dilogkit.series import chi2, chi3, li2, li3, ti2, ti3

        expected = []
        for t in (0.0, 0.3, 0.7, 0.95, 1.0):
            for f in (li2, li3, chi2, chi3, ti2, ti3):
                expected.append(f(t))
        assert len(got) == len(expected)
        for g, e in zip(got, expected):
            assert ulp_diff(g, e) <= 4.0

    def test_quadrature_identical_under_both_backends(self):
        code = (
            "from dilogkit.quadrature import MENU, wallis_transform, arccos_kernel_transform\n"
            "v1, _ = wallis_transform(MENU['arcsin'], 0.8)\n"
            "v2, _ = arccos_kernel_transform(MENU['half-arsinh2'], 0.6)\n"
            "print(repr(v1)); print(repr(v2))\n"
        )
        env = dict(os.environ)
        env["DILOGKIT_BACKEND"] = "python"
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        assert out.returncode == 0, out.stderr
        g1, g2 = (float(x) for x in out.stdout.split())

        from dilogkit.quadrature import MENU, arccos_kernel_transform, wallis_transform

        e1, _ = wallis_transform(MENU["arcsin"], 0.8)
        e2, _ = arccos_kernel_transform(MENU["half-arsinh2"], 0.6)
        # quadrature is numpy-vectorized on both paths; the only backend
        # dependence is the series comparison values, so demand equality
        assert math.isclose(g1, e1, rel_tol=0, abs_tol=4 * ULP)
        assert math.isclose(g2, e2, rel_tol=0, abs_tol=4 * ULP)
