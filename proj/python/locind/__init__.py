"""Locally defined independence systems under approximate local oracles."""

from fractions import Fraction

from . import _locind
from ._locind import (
    CapExceeded,
    IndependenceViolation,
    Instance,
    InvalidInput,
    OracleViolation,
    Trace,
    UnsupportedInstance,
    algorithms,
    degeneracy_order,
    max_independent,
)

__all__ = [
    "CapExceeded",
    "IndependenceViolation",
    "Instance",
    "InvalidInput",
    "OracleViolation",
    "Trace",
    "UnsupportedInstance",
    "algorithms",
    "bench",
    "degeneracy_order",
    "fixture",
    "generate",
    "global_ksystem_param",
    "max_independent",
    "maxsat",
    "rho",
    "rho_branch",
    "solve",
    "verify",
]


def _frac(text):
    return None if text is None else Fraction(text)


def generate(family="gnp", seed=1, **params):
    """Random instance of a family; params are n, m, right, p, k, d, kinds, oracles."""
    return _locind.generate(_locind.family_spec(family, **params), seed)


def solve(instance, algorithm, order=None, debug=False):
    return _locind.solve(instance, algorithm, order, debug)


def verify(trace, instance, cap=None):
    report = _locind.verify(trace, instance) if cap is None else _locind.verify(trace, instance, cap)
    for key in ("bound", "ratio", "lemma_bound"):
        report[key] = _frac(report[key])
    return report


def rho(alpha, n):
    return Fraction(_locind.rho(str(Fraction(alpha)), n))


def rho_branch(alpha, n):
    return _locind.rho_branch(str(Fraction(alpha)), n)


def global_ksystem_param(instance, cap=12):
    return Fraction(_locind.global_ksystem_param(instance, cap))


def fixture(name, alpha=1, n=6):
    out = _locind.fixture(name, str(Fraction(alpha)), n)
    out["expected_ratio"] = Fraction(out["expected_ratio"])
    return out


def maxsat(dimacs):
    """Instance for a DIMACS CNF and a decoder from edge ids to (assignment, satisfied)."""
    instance = _locind.maxsat_instance(dimacs)
    return instance, lambda edges: _locind.maxsat_assignment(dimacs, list(edges))


def bench(family="gnp", algorithms=("greedy",), seed=1, seeds=10, cap=22, threads=1, **params):
    spec = _locind.family_spec(family, **params)
    return _locind.bench(spec, list(algorithms), seed, seeds, cap, threads)
