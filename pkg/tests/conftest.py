import numpy as np
import pytest

from qske import _backend, _pykernels
from qske.qsim import RandomSource

KERNEL_MODULES = [pytest.param(_pykernels, id="python")]
try:
    from qske import _ckernels
except ImportError:  # extension not built
    pass
else:
    KERNEL_MODULES.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNEL_MODULES)
def kernels(request):
    return request.param


@pytest.fixture(params=["python", "cython"])
def backend(request, monkeypatch):
    """Run a test once per kernel implementation by patching the selected backend."""
    if request.param == "cython":
        mod = pytest.importorskip("qske._ckernels")
    else:
        mod = _pykernels
    monkeypatch.setattr(_backend, "hermitian_eigvalsh", mod.hermitian_eigvalsh)
    monkeypatch.setattr(_backend, "apply_gate", mod.apply_gate)
    return request.param


@pytest.fixture
def rng():
    return RandomSource(20240611)


def ket(*amps):
    return np.array(amps, dtype=complex)
