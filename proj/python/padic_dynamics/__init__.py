# Copyright 2026 The padic-dynamics Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact p-adic power series, Lubin-Tate formal groups and dynamics."""

import json as _json

from ._core import (
    CondensationSetup,
    FormalGroup,
    PadicError,
    Ring,
    Series,
    Zq,
    build_formal_group,
    check_phi_iterate_seed,
    commutant,
    comp_inverse,
    compose,
    iterate,
    norm_series,
    normalize_fixed_point,
    root_valuation_profile,
    solve_semiconj,
    verify_semiconj,
    weierstrass_degree,
)
from ._core import lubin_log as _lubin_log
from ._core import newton_polygon as _newton_polygon
from ._core import run_cli as _run_cli

__all__ = [
    "CondensationSetup",
    "FormalGroup",
    "PadicError",
    "Ring",
    "Series",
    "Zq",
    "build_formal_group",
    "check_phi_iterate_seed",
    "commutant",
    "comp_inverse",
    "compose",
    "iterate",
    "lubin_log",
    "newton_polygon",
    "norm_series",
    "normalize_fixed_point",
    "root_valuation_profile",
    "run_cli",
    "solve_semiconj",
    "verify_semiconj",
    "weierstrass_degree",
]


def lubin_log(P, eff_prec):
    """Lubin logarithm of P as a dict with denominator exponents and units."""
    return _json.loads(_lubin_log(P, eff_prec))


def newton_polygon(series):
    return _json.loads(_newton_polygon(series))


def run_cli(*args):
    """Runs the command-line tool in process; returns (code, parsed JSON or None, stderr)."""
    code, out, err = _run_cli([str(a) for a in args])
    return code, (_json.loads(out) if out else None), err
