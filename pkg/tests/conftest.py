import importlib
import math

import pytest
from hypothesis import settings

import jetquad._kernels as kernels
from jetquad import _pykernels

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

try:
    _ckernels = importlib.import_module("jetquad._ckernels")
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels, "cython": _ckernels}


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per kernel backend."""
    mod = BACKENDS[request.param]
    if mod is None:
        pytest.skip("compiled kernels not built")
    for name in ("mul", "recip", "compose"):
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


def assert_close(got, want, rtol, what=""):
    """Norm-wise relative comparison of two coefficient vectors.

    Per-entry errors are measured against the largest magnitude in either
    vector, so a coefficient that cancels to near zero is not held to a
    tighter standard than the vector it belongs to.
    """
    got, want = list(got), list(want)
    assert len(got) == len(want), f"{what}: length {len(got)} != {len(want)}"
    scale = max([abs(x) for x in got + want] + [0.0])
    for i, (g, w) in enumerate(zip(got, want)):
        assert math.isfinite(g), f"{what}[{i}] not finite: {g}"
        assert abs(g - w) <= rtol * scale, (
            f"{what}[{i}]: {g!r} vs {w!r} (|diff|={abs(g - w):.3e}, scale={scale:.3e})"
        )


# PASS/FAIL lines from the acceptance suite, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
