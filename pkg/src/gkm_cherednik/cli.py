"""Command-line driver: every verification as a subcommand with a JSON report."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import asdict, dataclass
from typing import Callable

from . import cherednik, combinat, gkmmodel, sl2
from .rootsys import ConfigurationError, RootSystem, build_root_system

COMMANDS = ("relations", "sl2-basis", "upsilon", "alcoves", "classes", "character", "dunkl", "all")
DEFAULT_SEED = 0

CONVENTIONS = {
    "composition": "x = w t^mu; (w1,mu1)(w2,mu2) = (w1 w2, w2^-1 mu1 + mu2)",
    "character_action": "w t^mu . (lam + k h) = w lam + (k + <mu, lam>) h",
    "translations": "coroot directions: s_{a,k} = t^{k a_vee} s_a",
    "affine_node": "s_0 = t^{-theta_vee} s_theta reflects h - theta; its coroot is -theta_vee",
    "variables": "simple roots y_1..y_r and h",
    "cells": "tangent weights in the character model; alcoves via (w, mu) -> (w, -mu)",
    "sl2_support": "b^r_k lives on [k, k+2r-1] with C(r-1, m); labels: r=d any k, 0<r<d k in {0,1}, r=0 k=0",
    "trig_dunkl": "t^chi acts by e^-chi; D_y = h d_y - sum h c <a_vee,y> (1-e^-a_vee)^-1 (1-s_a) + 1/2 <sum h c a_vee, y>",
}


@dataclass
class RunConfig:
    command: str
    cartan_type: str
    rank: int
    lattice: str
    d_values: list[int]
    seed: int
    sample_count: int
    ball_radius: int | None
    out: str | None

    def system(self) -> RootSystem:
        return build_root_system(self.cartan_type, self.rank, self.lattice)


class UsageError(ValueError):
    pass


def parse_d(text: str) -> list[int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gkm-cherednik",
                                description="Exact checks for GKM models and Cherednik algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--type", dest="cartan_type", default="A", choices=list("ABCDG"))
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--lattice", choices=("coroot", "coweight"), default="coroot")
    p.add_argument("-d", dest="d", type=parse_d, default=None, metavar="N[..M]")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--ball", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json",), default="json")
    return p


def parse_config(argv: list[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.rank < 1:
        raise UsageError("--rank must be positive")
    if ns.samples < 1:
        raise UsageError("--samples must be positive")
    if ns.ball is not None and ns.ball < 0:
        raise UsageError("--ball must be non-negative")
    d_values = ns.d if ns.d is not None else ([0, 1, 2] if ns.command == "all" else [1])
    cfg = RunConfig(ns.command, ns.cartan_type, ns.rank, ns.lattice, d_values, ns.seed,
                    ns.samples, ns.ball, ns.out)
    cfg.system()  # validates the type/rank pair
    if cfg.command == "sl2-basis" and (cfg.cartan_type, cfg.rank) != ("A", 1):
        raise UsageError("sl2-basis needs --type A --rank 1")
    return cfg


# -- check collection ------------------------------------------------------------

def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _collect(out: list, prefix: str, checks: list[dict], extra: dict | None = None) -> None:
    for c in checks:
        entry = {
            "name": f"{prefix}:{c['name']}",
            "status": c["status"],
            "details": {"samples": c.get("samples", 0), **(extra or {})},
        }
        if "witness" in c:
            entry["witness"] = _strip_timing(c["witness"])
        out.append(entry)


def _simple(out: list, name: str, ok: bool, details: dict, witness=None) -> None:
    entry = {"name": name, "status": "pass" if ok else "fail", "details": details}
    if witness is not None and not ok:
        entry["witness"] = witness
    out.append(entry)


def run_relations(cfg: RunConfig, out: list) -> None:
    rs = cfg.system()
    radius = cfg.ball_radius if cfg.ball_radius is not None else 3
    for d in cfg.d_values:
        rep = gkmmodel.verify_relations(rs, d, sample_count=cfg.sample_count,
                                        ball_radius=radius, seed=cfg.seed)
        _collect(out, f"{rs.label()}:d={d}:gkm", rep["checks"])
        if rs.rank <= 2:
            trig = cherednik.check_algebra_relations(
                rs, "trigonometric", cherednik.CherednikParams.uniform(d), bound=3 if rs.rank == 1 else 1)
            _collect(out, f"{rs.label()}:c={d}", trig["checks"])


def run_sl2(cfg: RunConfig, out: list) -> dict:
    dumps = {}
    for d in cfg.d_values:
        rep = sl2.verify_sl2(d, sample_count=cfg.sample_count, seed=cfg.seed)
        _collect(out, f"A1:d={d}", rep["checks"])
        dumps[str(d)] = sl2.basis_dump(d, sl2.admissible_labels(d, -2, 2 * d + 1))
    return {"basis": dumps}


def run_upsilon(cfg: RunConfig, out: list) -> None:
    rs = cfg.system()
    n = min(cfg.sample_count, 20)
    for d in cfg.d_values:
        rep = gkmmodel.verify_upsilon(rs, d, sample_count=n, seed=cfg.seed)
        _collect(out, f"{rs.label()}:d={d}", rep["checks"])


def run_alcoves(cfg: RunConfig, out: list) -> dict:
    rs = cfg.system()
    data = {}
    for d in cfg.d_values:
        ideal = combinat.alcove_ideal(rs, d, check=False)
        prefix = f"{ideal.rs.label()}:d={d}"
        _simple(out, f"{prefix}:alcoves.count", ideal.count == ideal.expected,
                {"count": ideal.count, "expected": ideal.expected})
        weak = combinat.weak_order_violations(ideal, "right")
        _simple(out, f"{prefix}:alcoves.right_descents", not weak, {"violations": len(weak)},
                weak[:3])
        data[str(d)] = {"count": ideal.count, "expected": ideal.expected,
                        "bruhat_cover_violations": len(combinat.bruhat_cover_violations(ideal))}
    return {"alcoves": data}


def run_classes(cfg: RunConfig, out: list) -> dict:
    rs = cfg.system()
    radius = cfg.ball_radius if cfg.ball_radius is not None else (10 if rs.rank == 1 else 8)
    data = {}
    for d in cfg.d_values:
        summ = combinat.equivalence_classes(rs, d, radius)
        js = summ.to_json()
        prefix = f"{js['system']}:d={d}"
        _simple(out, f"{prefix}:classes.meet_ideal", not summ.failures,
                {"visible": js["visible_classes"], "meeting_ideal": js["visible_meeting_ideal"]},
                summ.failures[:3])
        _simple(out, f"{prefix}:classes.bound", js["visible_classes"] <= js["bound"],
                {"visible": js["visible_classes"], "bound": js["bound"]})
        data[str(d)] = js
    return {"classes": data}


def run_character(cfg: RunConfig, out: list) -> dict:
    rs = cfg.system()
    data = {}
    for d in cfg.d_values:
        table = combinat.perm_module_character(rs, d)
        orb = combinat.orbit_statistics(rs, d)
        prefix = f"{table.rs.label()}:d={d}"
        _simple(out, f"{prefix}:character.dim", table.dim == table.modulus ** table.rs.rank,
                {"dim": table.dim})
        _simple(out, f"{prefix}:character.invariants", table.invariants == orb["orbits"],
                {"burnside": str(table.invariants), "orbits": orb["orbits"]})
        _simple(out, f"{prefix}:character.sign", table.sign_multiplicity == orb["sign_orbits"],
                {"burnside": str(table.sign_multiplicity), "orbits": orb["sign_orbits"]})
        js = table.to_json()
        data[str(d)] = js
    return {"character": data}


def run_dunkl(cfg: RunConfig, out: list) -> None:
    rs = cfg.system()
    if rs.rank > 2:
        raise UsageError("dunkl needs rank at most 2")
    label = rs.label()
    rat = cherednik.check_algebra_relations(rs, "rational", bound=5 if rs.rank == 1 else 4)
    _collect(out, label, rat["checks"])
    trig = cherednik.check_algebra_relations(rs, "trigonometric", bound=4 if rs.rank == 1 else 2)
    _collect(out, label, trig["checks"])
    cmp_ = cherednik.compare_dunkl_truncated(rs, None, 6)
    _collect(out, label, cmp_["checks"])


def run_all(cfg: RunConfig, out: list) -> dict:
    extra: dict = {}
    run_relations(cfg, out)
    if (cfg.cartan_type, cfg.rank) == ("A", 1):
        extra.update(run_sl2(RunConfig(**{**asdict(cfg), "d_values": [d for d in cfg.d_values if d >= 1] or [1]}), out))
    run_upsilon(cfg, out)
    bim = gkmmodel.verify_regular_bimodule(cfg.system(), 4)
    _collect(out, f"{cfg.system().label()}:d=0", bim["checks"])
    extra.update(run_alcoves(cfg, out))
    extra.update(run_classes(cfg, out))
    extra.update(run_character(cfg, out))
    if cfg.rank <= 2:
        run_dunkl(cfg, out)
    return extra


RUNNERS: dict[str, Callable] = {
    "relations": run_relations,
    "sl2-basis": run_sl2,
    "upsilon": run_upsilon,
    "alcoves": run_alcoves,
    "classes": run_classes,
    "character": run_character,
    "dunkl": run_dunkl,
    "all": run_all,
}


def build_report(cfg: RunConfig) -> dict:
    t0 = time.perf_counter()
    checks: list = []
    extra = RUNNERS[cfg.command](cfg, checks) or {}
    if len(cfg.d_values) == 1:
        # single level: lift the headline numbers to the top level
        key = str(cfg.d_values[0])
        if cfg.command == "alcoves":
            extra.update({k: extra["alcoves"][key][k] for k in ("count", "expected")})
        elif cfg.command == "character":
            extra.update({k: extra["character"][key][k] for k in ("dim", "invariants")})
    report = {
        "command": cfg.command,
        "config": {
            "type": cfg.cartan_type,
            "rank": cfg.rank,
            "lattice": cfg.lattice,
            "d": cfg.d_values,
            "seed": cfg.seed,
            "samples": cfg.sample_count,
            "ball": cfg.ball_radius,
        },
        "conventions": CONVENTIONS,
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
        **extra,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000),
    }
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse already printed usage
        return 2 if exc.code else 0
    except (UsageError, ConfigurationError) as exc:
        build_parser().print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = build_report(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dumps(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [c["name"] for c in report["checks"] if c["status"] != "pass"]
    for name in failed:
        print(f"FAIL {name}", file=sys.stderr)
    return 0 if not failed else 1


def main() -> None:
    sys.exit(run())
