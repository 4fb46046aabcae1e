"""Finite rings with enough idempotents and category graded rings."""

import json

from . import _core
from ._core import (
    Category,
    PeirceError,
    Ring,
    arrow_category,
    build_mx,
    ideal_lattice_size,
    is_groupoid,
    is_homset_strong,
    load_category,
    load_ring,
    load_vectors,
    manifest,
    monoid_names,
    pair_groupoid,
    peirce_components,
    prop_names,
    suite_names,
)

__version__ = _core.__version__


def strong_report(ring, idempotents):
    return json.loads(_core.strong_report(ring, idempotents))


def homset_report(category):
    return json.loads(_core.homset_report(category))


def category_algebra(ring, category):
    return json.loads(_core.category_algebra(ring, category))


def skew_algebra(system_path):
    return json.loads(_core.skew_algebra(str(system_path)))


def verify_prop(name, cap=100000):
    return json.loads(_core.verify_prop(name, cap))


def run_cli(*args):
    """Run the command line tool in process; returns (exit code, report, stderr).

    The report is decoded JSON, or the raw text for --quiet and --manifest.
    """
    code, out, err = _core.run_cli([str(a) for a in args])
    try:
        report = json.loads(out) if out else None
    except json.JSONDecodeError:
        report = out
    return code, report, err
