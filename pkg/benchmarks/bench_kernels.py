"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Reports the best-of-``repeat`` time per call for each kernel and size.
"""

import argparse
import timeit

import numpy as np

from qske import _pykernels

try:
    from qske import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_hermitian(dim, rng):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def random_columns(dim, m, rng):
    psi = rng.normal(size=(dim, m)) + 1j * rng.normal(size=(dim, m))
    return psi / np.linalg.norm(psi, axis=0)


def best_time(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def cases(rng):
    for n in (1, 2, 3, 4, 5):
        a = random_hermitian(2 ** n, rng)
        yield f"eigvalsh  {n:>2}q", lambda k, a=a: k.hermitian_eigvalsh(a)
    cnot = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
    for n in (3, 6, 10):
        psi = random_columns(2 ** n, 1, rng)
        yield f"gate 1col {n:>2}q", lambda k, psi=psi, n=n: k.apply_gate(psi, cnot, [0, n - 1], n)
    for n in (2, 4, 5):
        rho = random_columns(2 ** n, 2 ** n, rng)
        yield f"gate {2 ** n:>2}col {n}q", lambda k, rho=rho, n=n: k.apply_gate(rho, cnot, [n - 1, 0], n)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    print(f"{'case':<16} {'python (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for name, call in cases(rng):
        py = best_time(lambda: call(_pykernels), args.repeat) * 1e6
        if _ckernels is None:
            print(f"{name:<16} {py:>12.1f} {'n/a':>12} {'':>8}")
            continue
        cy = best_time(lambda: call(_ckernels), args.repeat) * 1e6
        print(f"{name:<16} {py:>12.1f} {cy:>12.1f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
