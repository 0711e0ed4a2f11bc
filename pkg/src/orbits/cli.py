"""Command-line surface: enumerate, poset, compare, components, verify, matrix.

Exit codes: 0 success, 1 verification diff, 2 config error, 3 label
parse/canonicality error.  Output is deterministic for a fixed invocation.

The group is chosen by --type (named Cartan type, products via "x":
A1, A2, B2, G2, A3, A1xA1, ...) or --group pointing at a JSON file
{"type": "A2"} or {"cartan": [[2,-1],[-1,2]], "nonreduced": [1-based simple
indices], "weights": {"1-based nondivisible root index": weight}}.  The
ORBITS_CAP environment variable replaces the default enumeration cap; an
explicit --cap wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .coxeter import CapExceeded, DEFAULT_CAP, cartan_matrix, system_from_spec, word_str
from .orbit_model import (
    ClosurePoset,
    LabelParseError,
    closure_leq_witness,
    closure_poset,
    enumerate_orbits,
    intersection_components,
    label_str,
    parse_label,
)
from .oracle import compare_posets, oracle_poset
from . import matrix_model

__all__ = ["RunConfig", "main"]


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    """One resolved invocation: the group, caps, format, and command parameters."""

    group_type: str | None = None
    group_file: str | None = None
    cap: int = DEFAULT_CAP
    fmt: str = "json"
    out: str | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.group_type is None) == (self.group_file is None):
            raise ConfigError("exactly one of --type and --group is required")
        if self.cap <= 0:
            raise ConfigError("cap must be positive")
        self._resolved = None

    @property
    def spec(self):
        if self.group_type is not None:
            return {"type": self.group_type}
        with open(self.group_file) as fh:
            return json.load(fh)

    def system(self):
        """The (RootSystem, WeightFunction) pair for this configuration."""
        if self._resolved is None:
            self._resolved = system_from_spec(self.spec)
        return self._resolved


def _default_cap():
    env = os.environ.get("ORBITS_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError("ORBITS_CAP must be an integer, got %r" % env)
    return DEFAULT_CAP


def _config_from(args, **params):
    cap = args.cap if args.cap is not None else _default_cap()
    return RunConfig(
        group_type=getattr(args, "type", None),
        group_file=getattr(args, "group", None),
        cap=cap,
        fmt=getattr(args, "format", "json"),
        out=getattr(args, "out", None),
        params=params,
    )


def _parse_stratum(text, rank):
    """Parse a stratum filter: 'all', '[]', '[1,3]', or '1,3' (1-based)."""
    s = text.strip()
    if s.lower() == "all":
        return None
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s.strip():
        return ()
    try:
        idx = sorted(int(p) - 1 for p in s.split(","))
    except ValueError:
        raise ConfigError("bad stratum %r: expected e.g. [] or [1,2]" % text)
    if len(set(idx)) != len(idx) or idx[0] < 0 or idx[-1] >= rank:
        raise ConfigError(
            "bad stratum %r: indices must be distinct and in 1..%d" % (text, rank)
        )
    return tuple(idx)


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args):
    config = _config_from(args)
    rs, _ = config.system()
    J = _parse_stratum(args.stratum, rs.rank)
    labels = enumerate_orbits(rs, J, cap=config.cap)
    _emit("".join(label_str(O) + "\n" for O in labels), config.out)
    return 0


def cmd_poset(args):
    config = _config_from(args)
    rs, _ = config.system()
    build = oracle_poset if args.engine == "oracle" else closure_poset
    poset = build(rs, cap=config.cap)
    if config.fmt == "json":
        text = poset.to_json() + "\n"
    elif config.fmt == "dot":
        text = poset.to_dot()
    else:
        text = poset.to_csv()
    _emit(text, config.out)
    return 0


def cmd_compare(args):
    config = _config_from(args)
    rs, _ = config.system()
    O1 = parse_label(rs, args.label1)
    O2 = parse_label(rs, args.label2)
    if O1 == O2:
        print("EQUAL")
        return 0
    wit = closure_leq_witness(O1, O2, cap=config.cap)
    if wit is not None:
        u, v = wit
        print("LEQ (witness u=%s, v=%s)" % (word_str(u), word_str(v)))
        return 0
    wit = closure_leq_witness(O2, O1, cap=config.cap)
    if wit is not None:
        u, v = wit
        print("GEQ (witness u=%s, v=%s)" % (word_str(u), word_str(v)))
        return 0
    print("INCOMPARABLE")
    return 0


def cmd_components(args):
    config = _config_from(args)
    rs, _ = config.system()
    O = parse_label(rs, args.label)
    I = _parse_stratum(args.stratum, rs.rank)
    if I is None:
        raise ConfigError("components needs an explicit stratum, not 'all'")
    try:
        comps = intersection_components(O, I, cap=config.cap)
    except ValueError as e:
        raise ConfigError(str(e))
    _emit("".join(label_str(L) + "\n" for L in comps), config.out)
    return 0


def _matrix_n(rs):
    """The n with W = W(A_{n-1}), when the configured group is A1 or A2."""
    for n in (2, 3):
        if rs.cartan == cartan_matrix("A%d" % (n - 1)) and not rs.doubled:
            return n
    return None


def _verify_poset(rs, cap, inject_fault):
    formula = closure_poset(rs, cap=cap)
    oracle = oracle_poset(rs, cap=cap)
    if inject_fault:
        idx = np.argwhere(oracle.leq & ~np.eye(len(oracle.labels), dtype=bool))
        i, j = idx[0]
        oracle.leq[i, j] = False
    diff = compare_posets(formula, oracle)
    return {
        "status": "PASS" if not diff else "FAIL",
        "labels": len(formula.labels),
        "diff": diff,
    }


def _verify_matrix(n, q):
    partition = matrix_model.orbit_partition(n, q)
    report = matrix_model.matching_report(n, q, partition)
    cells = matrix_model.verify_group_cells(n, q, partition)
    ok = report.ok and cells.ok
    return {
        "status": "PASS" if ok else "FAIL",
        "n": n,
        "q": q,
        "labels": report.label_count,
        "orbits": report.orbit_count,
        "total_points": report.total_points,
        "collisions": [
            {"orbit": oid, "labels": names} for oid, names in report.collisions
        ],
        "unmatched_orbits": report.unmatched_orbits,
        "size_mismatches": [
            {"label": name, "actual": actual, "expected": expected}
            for name, actual, expected in report.size_mismatches
        ],
        "group_cells": {
            "status": "PASS" if cells.ok else "FAIL",
            "order": cells.group_order,
            "cells": [
                {"rho": rho, "size": size, "expected": expected}
                for rho, size, expected in cells.cells
            ],
            "mismatches": cells.mismatches,
        },
    }


def cmd_verify(args):
    config = _config_from(args)
    rs, _ = config.system()
    n = _matrix_n(rs)
    suites = {}
    if args.suite in ("poset", "all"):
        suites["poset"] = _verify_poset(rs, config.cap, args.inject_fault)
    if args.suite == "matrix" or (args.suite == "all" and n is not None):
        if n is None:
            raise ConfigError("matrix suite needs the group to be A1 or A2")
        if args.q is not None:
            qs = [args.q]
        else:
            qs = [2, 3] if n == 2 else [2]
        for q in qs:
            suites["matrix(%d,%d)" % (n, q)] = _verify_matrix(n, q)
    ok = all(s["status"] == "PASS" for s in suites.values())
    print("PASS" if ok else "FAIL")
    report = {"group": config.spec.get("type", "custom"), "suites": suites}
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if ok else 1


def cmd_matrix(args):
    n, q = args.n, args.q
    partition = matrix_model.orbit_partition(n, q)
    orbits, _ = partition
    report = matrix_model.matching_report(n, q, partition)
    cells = matrix_model.verify_group_cells(n, q, partition)
    print("points: %d" % report.total_points)
    print("orbits: %d  labels: %d" % (report.orbit_count, report.label_count))
    print("label matching bijective: %s" % ("yes" if report.bijective else "no"))
    for oid, names in report.collisions:
        print("  collision: orbit %d (size %d) <- %s"
              % (oid, len(orbits[oid]), ", ".join(names)))
    for name, actual, expected in report.size_mismatches:
        print("  size mismatch: %s has %d points, polynomial says %d"
              % (name, actual, expected))
    print("group cells: %s (order %d)" % ("ok" if cells.ok else "MISMATCH", cells.group_order))
    for msg in cells.mismatches:
        print("  " + msg)
    if args.dump:
        with open(args.dump, "w") as fh:
            json.dump(matrix_model.orbit_dump(n, q), fh, indent=2)
            fh.write("\n")
    return 0 if report.ok and cells.ok else 1


def _add_group_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--type", help='named type, e.g. A2, B2, G2, A1xA1')
    g.add_argument("--group", help="path to a group-spec JSON file")
    p.add_argument("--cap", type=int, default=None,
                   help="orbit/element enumeration cap (default %d, or $ORBITS_CAP)"
                   % DEFAULT_CAP)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="orbits",
        description="Orbit combinatorics of wonderful group compactifications.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all orbit labels")
    _add_group_args(p)
    p.add_argument("--stratum", default="all", help="filter: all, [], [1], [1,2] (1-based)")
    p.add_argument("--out", default=None, help="write to file instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poset", help="emit the closure poset")
    _add_group_args(p)
    p.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    p.add_argument("--engine", choices=("formula", "oracle"), default="formula",
                   help="closed-form criterion or move-generated oracle")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("compare", help="compare two orbit labels in the closure order")
    _add_group_args(p)
    p.add_argument("label1")
    p.add_argument("label2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("components", help="intersection components of a closure with a stratum")
    _add_group_args(p)
    p.add_argument("label")
    p.add_argument("--stratum", required=True, help="target stratum, e.g. [] or [1]")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("verify", help="cross-check the formula poset against oracles")
    _add_group_args(p)
    p.add_argument("--suite", choices=("poset", "matrix", "all"), default="all")
    p.add_argument("--q", type=int, default=None, help="field size for the matrix suite")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matrix", help="finite-field orbit partition of P(M_n(F_q))")
    p.add_argument("--n", type=int, required=True, choices=(2, 3))
    p.add_argument("--q", type=int, required=True, choices=(2, 3, 5))
    p.add_argument("--dump", default=None, help="write per-orbit JSON to this file")
    p.set_defaults(func=cmd_matrix)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except LabelParseError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except CapExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except (ConfigError, ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
