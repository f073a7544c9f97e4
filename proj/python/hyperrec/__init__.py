# Copyright 2026 The hyperrec Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Containment profile of hyperrecursive trees.

Exact quantities come back as ``fractions.Fraction``; simulations take an
explicit seed and are reproducible at any thread count.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    CapacityError,
    DomainError,
    InjectionError,
    ParameterError,
    RangeError,
    RegimeError,
    asymptotic_cov,
    dp_joint_distribution,
    exact_cov,
    exact_mean,
    exact_pmf,
    exact_variance,
    grow_tree,
    history_count,
    martingale_factors,
    mean_vector,
    pmf_oracle_convolution,
    second_moments,
    simulate_global,
    simulate_local,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "InjectionError",
    "ParameterError",
    "RangeError",
    "RegimeError",
    "asymptotic_cov",
    "clt_params",
    "dp_joint_distribution",
    "exact_cov",
    "exact_mean",
    "exact_pmf",
    "exact_variance",
    "grow_tree",
    "history_count",
    "limit_law",
    "martingale_factors",
    "mean_vector",
    "pmf_oracle_convolution",
    "run_cli",
    "run_criterion",
    "second_moments",
    "simulate_global",
    "simulate_local",
]


def _decode(obj):
    # {"num", "den"[, "float"]} objects become Fractions.
    if set(obj) in ({"num", "den"}, {"num", "den", "float"}):
        return Fraction(int(obj["num"]), int(obj["den"]))
    return obj


def _loads(text):
    return json.loads(text, object_hook=_decode)


def limit_law(regime, theta, k=0, alpha=None):
    """Local limit law for regime "fixed", "early", "intermediate" or "late".

    ``alpha`` is k/n for the intermediate regime, as a Fraction or "p/q".
    """
    if alpha is not None:
        alpha = str(Fraction(alpha))
    return _loads(_core.limit_law(regime, theta, k, alpha))


def clt_params(theta):
    return _loads(_core.clt_params(theta))


def run_criterion(criterion, seed=42, threads=1):
    """One acceptance criterion as a dict; see ``hyperrec verify``."""
    return _loads(_core.run_criterion(criterion, seed, threads))


def run_cli(*args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
