"""Born probabilities and the family of odd-function rules ``P_f``.

``P_f(r -> n_i) = (1 + (N - 1) f(r . n_i)) / N``. With ``f`` the identity this
is the Born rule; for ``N = 2`` every odd ``f`` with ``f(1) = 1`` gives a valid
probability measure.
"""
import csv
from dataclasses import dataclass, field

import numpy as np

from .basis import build_basis
from .geometry import (bloch_to_density, is_valid_state, random_ball_vector,
                       random_measurement)

DOMAIN_SLACK = 1e-12
ODD_TOL = 1e-12


@dataclass(frozen=True)
class OutcomeFunction:
    """An odd function on ``[-1, 1]`` with ``f(1) = 1``.

    ``variant`` is one of ``"identity"``, ``"odd_power"``, ``"sign"``,
    ``"tabulated"``. Use the module-level constructors rather than building
    instances directly.
    """
    variant: str
    exponent: int = 1
    nodes: tuple = field(default=(), repr=False)
    values: tuple = field(default=(), repr=False)

    def __call__(self, x):
        return eval_f(self, x)

    @property
    def name(self):
        if self.variant == "odd_power":
            return f"pow:{self.exponent}"
        if self.variant == "tabulated":
            return "table"
        return self.variant


IDENTITY = OutcomeFunction("identity")
SIGN = OutcomeFunction("sign")


def odd_power(exponent):
    if int(exponent) != exponent or exponent < 1 or exponent % 2 == 0:
        raise ValueError(f"exponent must be an odd positive integer, got {exponent}")
    if exponent == 1:
        return IDENTITY
    return OutcomeFunction("odd_power", exponent=int(exponent))


def tabulated(nodes, values):
    """Piecewise-linear ``f`` through ``(nodes, values)``.

    Nodes must be strictly increasing and span exactly ``[-1, 1]``. The
    interpolant must be odd at every node and satisfy ``f(1) = 1``.
    """
    x = np.asarray(nodes, dtype=float)
    y = np.asarray(values, dtype=float)
    if x.ndim != 1 or x.shape != y.shape or len(x) < 2:
        raise ValueError("need matching 1-d node and value arrays with at least 2 entries")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("table has non-finite entries")
    if np.any(np.diff(x) <= 0):
        raise ValueError("nodes must be strictly increasing")
    if x[0] != -1.0 or x[-1] != 1.0:
        raise ValueError("nodes must start at -1 and end at 1")
    if abs(y[-1] - 1.0) > ODD_TOL:
        raise ValueError(f"f(1) must be 1, got {y[-1]!r}")
    mirrored = np.interp(-x, x, y)
    if np.max(np.abs(mirrored + y)) > ODD_TOL:
        raise ValueError("tabulated function is not odd at its nodes")
    return OutcomeFunction("tabulated", nodes=tuple(x), values=tuple(y))


def load_table(path):
    """Read a two-column ``x,f(x)`` CSV; lines starting with ``#`` and a non-numeric header are skipped."""
    xs, ys = [], []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                x, y = float(row[0]), float(row[1])
            except (ValueError, IndexError):
                if xs:
                    raise ValueError(f"malformed table row: {row!r}")
                continue
            xs.append(x)
            ys.append(y)
    return tabulated(xs, ys)


def parse_outcome_function(text):
    """``identity``, ``pow:<odd k>``, ``sign`` or ``table:<path>``."""
    text = text.strip()
    if text == "identity":
        return IDENTITY
    if text == "sign":
        return SIGN
    if text.startswith("pow:"):
        try:
            k = int(text[4:])
        except ValueError:
            raise ValueError(f"bad exponent in {text!r}") from None
        return odd_power(k)
    if text.startswith("table:"):
        return load_table(text[6:])
    raise ValueError(f"unknown outcome function {text!r}")


BUILTIN_NONLINEAR = (odd_power(3), odd_power(5), SIGN)
BUILTINS = (IDENTITY,) + BUILTIN_NONLINEAR


def eval_f(f, x):
    """Evaluate ``f`` at scalar or array ``x`` in ``[-1, 1]``.

    Points outside by at most ``1e-12`` are clamped; anything further raises.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0 + DOMAIN_SLACK) or not np.all(np.isfinite(arr)):
        raise ValueError(f"argument outside [-1, 1]: {x!r}")
    arr = np.clip(arr, -1.0, 1.0)
    if f.variant == "identity":
        out = arr
    elif f.variant == "odd_power":
        out = arr ** f.exponent
    elif f.variant == "sign":
        out = np.sign(arr)
    elif f.variant == "tabulated":
        out = np.interp(arr, f.nodes, f.values)
    else:
        raise ValueError(f"unknown variant {f.variant!r}")
    return float(out) if out.ndim == 0 else out


def _check_index(i, n):
    if int(i) != i or not 1 <= i <= n:
        raise IndexError(f"outcome index must be in 1..{n}, got {i}")
    return int(i) - 1


def born_probability(r, m, i, basis=None):
    """``(1 + (N-1) r . n_i) / N`` for a valid state ``r``; ``i`` is 1-based."""
    idx = _check_index(i, m.dim)
    basis = basis if basis is not None else build_basis(m.dim)
    if not is_valid_state(r, basis):
        raise ValueError("Bloch vector is not a valid state")
    r = np.asarray(r, dtype=float)
    return (1.0 + (m.dim - 1) * float(r @ m.vertices[idx])) / m.dim


def born_probability_trace(r, m, i, basis=None):
    """``Tr(D(r) P_i)``, computed from matrices."""
    idx = _check_index(i, m.dim)
    basis = basis if basis is not None else build_basis(m.dim)
    d = bloch_to_density(r, basis)
    return float(np.real(np.trace(d @ m.projectors[idx])))


def rule_probability(f, r, m, i):
    """``(1 + (N-1) f(r . n_i)) / N``. No range check: values outside ``[0, 1]`` are returned as-is."""
    idx = _check_index(i, m.dim)
    r = np.asarray(r, dtype=float)
    return (1.0 + (m.dim - 1) * eval_f(f, float(r @ m.vertices[idx]))) / m.dim


def rule_probabilities(f, r, m):
    r = np.asarray(r, dtype=float)
    return (1.0 + (m.dim - 1) * eval_f(f, m.vertices @ r)) / m.dim


@dataclass(frozen=True)
class RuleReport:
    reflexivity_defect: float
    orthogonality_defect: float
    additivity_defect: float
    range_defect: float
    tol: float

    @property
    def passed(self):
        return max(self.reflexivity_defect, self.orthogonality_defect,
                   self.additivity_defect, self.range_defect) <= self.tol


def validate_qubit_rule(f, trials=200, seed=0, tol=1e-10):
    """Check that ``P_f`` is a probability measure on random qubit states and measurements.

    Each trial draws a uniform point of the Bloch ball and a Haar-random
    measurement basis, then records the worst violation of reflexivity,
    orthogonality, additivity (with normalization) and the ``[0, 1]`` range.
    """
    basis = build_basis(2)
    rng = np.random.default_rng(seed)
    refl = orth = add = rng_def = 0.0
    for _ in range(trials):
        m = random_measurement(basis, int(rng.integers(2 ** 63)))
        r = random_ball_vector(3, rng)
        n1, n2 = m.vertices
        refl = max(refl, abs(rule_probability(f, n1, m, 1) - 1.0),
                   abs(rule_probability(f, n2, m, 2) - 1.0))
        orth = max(orth, abs(rule_probability(f, n1, m, 2)),
                   abs(rule_probability(f, n2, m, 1)))
        p = rule_probabilities(f, r, m)
        add = max(add, abs(p.sum() - 1.0))
        rng_def = max(rng_def, float(np.max(-p)), float(np.max(p - 1.0)), 0.0)
    return RuleReport(refl, orth, add, rng_def, tol)
