# main.py
"""
ceheis - centrally extended Heisenberg algebra toolkit.

Commands: verify, mgf, rep, group, classify.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage or validation error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra.real_form import RealFormParams, eta4_isomorphism
from core import config
from core.errors import CEHeisError, DomainError
from core.log import configure_logging
from core.utils import as_complex, complex_pair, format_sig, matrix_pairs, random_complex
from fock.space import FockSpace, TwoModeSpace
from group.law import GroupElement, compose, identity_element, inverse
from probability.splitting import mgf_params, mgf_table
from representations.boson import (
    Branch,
    RepresentationParams,
    build_representation,
    duality_defects,
    verify_ceccr,
)
from representations.two_mode import (
    build_ccr_representation,
    build_quadratures,
    ccr_case,
    quadrature_defects,
)
from verification.report import print_report
from verification.suite import SuiteConfig, run_suite

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MGF_COLUMNS = ("s", "closed_form", "oracle", "abs_error", "rel_error")


@dataclass(frozen=True)
class RunConfig:
    command: str
    z: complex = 1 + 1j
    rho: float = config.ORACLE_RHO
    r: float = config.ORACLE_R
    branch: str = "auto"
    dim: Optional[int] = None
    margin: int = config.DEFAULT_MARGIN
    seed: int = config.DEFAULT_SEED
    output_path: Optional[str] = None
    format: Optional[str] = None
    # mgf
    s_min: float = -0.3
    s_max: float = 0.3
    s_step: float = 0.05
    # verify
    perturb: Optional[Tuple[int, int, int, float]] = None
    # rep
    dump: bool = False
    two_mode: bool = False
    c: complex = 0j
    dim_per_mode: int = config.TWO_MODE_DIM
    # group
    action: str = "compose"
    g1: Optional[GroupElement] = None
    g2: Optional[GroupElement] = None
    count: int = config.GROUP_FUZZ_COUNT

    def __post_init__(self):
        if self.dim is not None and self.dim < config.MIN_DIM:
            raise DomainError(f"--dim must be >= {config.MIN_DIM}, got {self.dim}")
        if self.command == "mgf" and self.s_step <= 0:
            raise DomainError(f"--s-step must be > 0, got {self.s_step}")
        if self.command == "mgf" and self.s_min > self.s_max:
            raise DomainError(f"--s-min {self.s_min} exceeds --s-max {self.s_max}")

    def dim_or(self, default: int) -> int:
        return self.dim if self.dim is not None else default

    def rep_params(self) -> RepresentationParams:
        """Branch 'auto' picks from the exact real part of z; explicit branches are validated."""
        if self.branch == "auto":
            return RepresentationParams.auto(self.z, self.rho, self.r)
        return RepresentationParams(z=self.z, rho=self.rho, r=self.r, branch=Branch(self.branch))


# =============================================================================
# Output
# =============================================================================

def write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    log.info("wrote %s", path)


def to_json(payload: object) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def element_pairs(g: GroupElement) -> List[List[float]]:
    return [complex_pair(c) for c in g.coords()]


# =============================================================================
# Commands
# =============================================================================

def run_verify(cfg: RunConfig) -> int:
    suite_cfg = SuiteConfig(
        rep_params=cfg.rep_params(),
        dim=cfg.dim_or(config.DEFAULT_DIM),
        margin=cfg.margin,
        seed=cfg.seed,
        perturb=cfg.perturb,
    )
    results = run_suite(suite_cfg)
    if cfg.format == "json":
        text = to_json({
            "seed": cfg.seed,
            "passed": all(r.passed for r in results),
            "checks": [r.as_dict() for r in results],
        })
    else:
        buffer = io.StringIO()
        print_report(results, stream=buffer)
        text = buffer.getvalue()
    write_output(text, cfg.output_path)
    failed = [r for r in results if not r.passed]
    if failed:
        log.warning("%d of %d checks failed (seed %d)", len(failed), len(results), cfg.seed)
        return EXIT_FAILED
    return EXIT_OK


def s_grid(cfg: RunConfig) -> List[float]:
    count = int(np.floor((cfg.s_max - cfg.s_min) / cfg.s_step + 1e-9)) + 1
    return [float(v) for v in np.round(cfg.s_min + cfg.s_step * np.arange(count), 12)]


def run_mgf(cfg: RunConfig) -> int:
    rep_params = cfg.rep_params()
    space = FockSpace(cfg.dim_or(config.SPLITTING_DIM))
    params = mgf_params(rep_params)
    for s in (cfg.s_min, cfg.s_max):
        params.require_domain(s)
    rows = mgf_table(rep_params, s_grid(cfg), space)
    if cfg.format == "json":
        text = to_json([{col: getattr(row, col) for col in MGF_COLUMNS} for row in rows])
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\r\n")
        writer.writerow(MGF_COLUMNS)
        for row in rows:
            writer.writerow([format_sig(getattr(row, col), config.CSV_SIGNIFICANT_DIGITS)
                             for col in MGF_COLUMNS])
        text = buffer.getvalue()
    write_output(text, cfg.output_path)
    worst = max(row.rel_error for row in rows)
    return EXIT_OK if worst <= config.MGF_REL_TOL else EXIT_FAILED


def run_rep(cfg: RunConfig) -> int:
    if cfg.two_mode:
        space = TwoModeSpace(cfg.dim_per_mode)
        rep = build_ccr_representation(cfg.z, cfg.r, cfg.c, space)
        header = {"z": complex_pair(cfg.z), "r": cfg.r, "c": complex_pair(cfg.c),
                  "case": ccr_case(cfg.z).value, "dim_per_mode": cfg.dim_per_mode}
    else:
        params = cfg.rep_params()
        space = FockSpace(cfg.dim_or(config.DEFAULT_DIM))
        rep = build_representation(params, space)
        header = {"z": complex_pair(cfg.z), "rho": params.rho, "r": params.r,
                  "branch": params.branch.value, "dim": space.dim}

    if cfg.dump:
        payload = dict(header, operators={name: matrix_pairs(op.matrix)
                                          for name, op in rep.by_name().items()})
        write_output(to_json(payload), cfg.output_path)
        return EXIT_OK

    report = verify_ceccr(rep, cfg.z, cfg.margin)
    a_dual, h_dual = duality_defects(rep)
    payload = dict(header, margin=cfg.margin, ceccr=report.as_dict(),
                   duality={"a_dag-a*": a_dual, "h-h*": h_dual})
    tol = config.TWO_MODE_TOL if cfg.two_mode else config.CECCR_TOL
    passed = report.passes(tol) and a_dual == 0 and h_dual == 0
    if cfg.two_mode:
        quad = quadrature_defects(build_quadratures(space), cfg.margin)
        payload["quadratures"] = quad
        passed = passed and max(quad.values()) <= config.QUADRATURE_TOL
    payload["passed"] = passed
    write_output(to_json(payload), cfg.output_path)
    return EXIT_OK if passed else EXIT_FAILED


def run_group(cfg: RunConfig) -> int:
    z = cfg.z
    if cfg.action == "fuzz":
        rng = np.random.default_rng(cfg.seed)
        e = identity_element()
        assoc, inv = 0.0, 0.0
        for _ in range(cfg.count):
            g1, g2, g3 = (GroupElement(*random_complex(rng, 4)) for _ in range(3))
            assoc = max(assoc, compose(compose(g1, g2, z), g3, z).distance(
                compose(g1, compose(g2, g3, z), z)))
            g_inv = inverse(g1, z)
            inv = max(inv, compose(g1, g_inv, z).distance(e), compose(g_inv, g1, z).distance(e))
        passed = assoc <= config.GROUP_TOL and inv <= config.INVERSE_TOL
        write_output(to_json({"z": complex_pair(z), "seed": cfg.seed, "count": cfg.count,
                              "associativity": assoc, "inverse": inv, "passed": passed}),
                     cfg.output_path)
        return EXIT_OK if passed else EXIT_FAILED

    if cfg.g1 is None:
        raise DomainError(f"group {cfg.action} needs --g1")
    payload: Dict[str, object] = {"z": complex_pair(z), "g1": element_pairs(cfg.g1)}
    if cfg.action == "compose":
        if cfg.g2 is None:
            raise DomainError("group compose needs --g2")
        payload["g2"] = element_pairs(cfg.g2)
        payload["result"] = element_pairs(compose(cfg.g1, cfg.g2, z))
    else:
        payload["result"] = element_pairs(inverse(cfg.g1, z))
    write_output(to_json(payload), cfg.output_path)
    return EXIT_OK


def run_classify(cfg: RunConfig) -> int:
    params = RealFormParams.from_z(cfg.z)
    change = eta4_isomorphism(params.c_real, params.b_real)
    lines = change.describe()
    if cfg.format == "json":
        text = to_json({"z": complex_pair(cfg.z), "c": params.c_real, "b": params.b_real,
                        "case": params.case, "mapping": lines,
                        "matrix": matrix_pairs(change.matrix)})
    else:
        text = f"(c, b) = ({params.c_real:g}, {params.b_real:g}), case {params.case}\n"
        text += "\n".join(lines) + "\n"
    write_output(text, cfg.output_path)
    return EXIT_OK


def run(cfg: RunConfig) -> int:
    """Dispatch a validated config. Library errors become exit code 2."""
    command_map: Dict[str, Callable[[RunConfig], int]] = {
        "verify": run_verify,
        "mgf": run_mgf,
        "rep": run_rep,
        "group": run_group,
        "classify": run_classify,
    }
    handler = command_map.get(cfg.command)
    if not handler:
        print(f"error: unknown command: {cfg.command}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return handler(cfg)
    except (CEHeisError, TypeError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


# =============================================================================
# Argument parsing
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--z", nargs=2, type=float, default=[1.0, 1.0], metavar=("RE", "IM"),
                        help="central parameter z (default: 1 1)")
    common.add_argument("--rho", type=float, default=config.ORACLE_RHO)
    common.add_argument("--r", type=float, default=config.ORACLE_R)
    common.add_argument("--branch", choices=[b.value for b in Branch] + ["auto"], default="auto")
    common.add_argument("--dim", type=int, default=None, help="Fock space dimension")
    common.add_argument("--margin", type=int, default=config.DEFAULT_MARGIN)
    common.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    common.add_argument("--output", default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=["json", "csv"], default=None)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="ceheis",
        description="Centrally extended Heisenberg algebra: verification and tabulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    verify.add_argument("--perturb", nargs=4, metavar=("I", "J", "K", "DELTA"), default=None,
                        help="add DELTA to coefficient K of table entry (I, J)")

    mgf = sub.add_parser("mgf", parents=[common], help="tabulate the vacuum MGF of a + a_dag + h")
    mgf.add_argument("--s-min", type=float, default=-0.3)
    mgf.add_argument("--s-max", type=float, default=0.3)
    mgf.add_argument("--s-step", type=float, default=0.05)

    rep = sub.add_parser("rep", parents=[common], help="representation defect report or dump")
    rep.add_argument("--dump", action="store_true")
    rep.add_argument("--two-mode", action="store_true")
    rep.add_argument("--c", nargs=2, type=float, default=[0.0, 0.0], metavar=("RE", "IM"))
    rep.add_argument("--dim-per-mode", type=int, default=config.TWO_MODE_DIM)

    group = sub.add_parser("group", parents=[common], help="group law in coordinates")
    group.add_argument("action", choices=["compose", "inverse", "fuzz"])
    group.add_argument("--g1", nargs=8, type=float, default=None,
                       metavar="X", help="u v w y as four re im pairs")
    group.add_argument("--g2", nargs=8, type=float, default=None, metavar="X")
    group.add_argument("--count", type=int, default=config.GROUP_FUZZ_COUNT)

    sub.add_parser("classify", parents=[common], help="eta_4 basis change for z")
    return parser


def parse_element(values: Optional[Sequence[float]]) -> Optional[GroupElement]:
    if values is None:
        return None
    pairs = [as_complex(values[i:i + 2]) for i in range(0, 8, 2)]
    return GroupElement(*pairs)


def parse_perturb(values: Optional[Sequence[str]]) -> Optional[Tuple[int, int, int, float]]:
    if values is None:
        return None
    i, j, k, delta = values
    return int(i), int(j), int(k), float(delta)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        z=as_complex(args.z),
        rho=args.rho,
        r=args.r,
        branch=args.branch,
        dim=args.dim,
        margin=args.margin,
        seed=args.seed,
        output_path=args.output,
        format=args.format,
        s_min=getattr(args, "s_min", -0.3),
        s_max=getattr(args, "s_max", 0.3),
        s_step=getattr(args, "s_step", 0.05),
        perturb=parse_perturb(getattr(args, "perturb", None)),
        dump=getattr(args, "dump", False),
        two_mode=getattr(args, "two_mode", False),
        c=as_complex(getattr(args, "c", [0.0, 0.0])),
        dim_per_mode=getattr(args, "dim_per_mode", config.TWO_MODE_DIM),
        action=getattr(args, "action", "compose"),
        g1=parse_element(getattr(args, "g1", None)),
        g2=parse_element(getattr(args, "g2", None)),
        count=getattr(args, "count", config.GROUP_FUZZ_COUNT),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        cfg = config_from_args(args)
    except (CEHeisError, TypeError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
