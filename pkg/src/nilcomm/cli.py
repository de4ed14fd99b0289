"""Command-line front end.

Every subcommand is deterministic given its flags: seeds are explicit,
sampling is seeded, and JSON output always carries the seed it was
produced with so any reported shape can be re-derived.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from nilcomm import exactla, verify
from nilcomm._rng import Stream, derive
from nilcomm.commutant import MCInconsistencyError, dmap, sample_nilpotent_commuting
from nilcomm.constraints import compatible_filter
from nilcomm.dinverse import explore_q1, explore_q2, fiber_json
from nilcomm.exactla import NotNilpotentError
from nilcomm.partitions import Partition, parse
from nilcomm.twoblock import (
    antidiagonal,
    construct_lemma_eq2,
    construct_lemma_odd,
    construct_squarezero_partner,
    tb_to_matrix,
)


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 64
    coeff_bound: int = 10
    output: str = "text"
    max_n: int = 16
    force: bool = False
    dump_matrix: bool = False

    @property
    def json(self) -> bool:
        return self.output == "json"


def _config(args) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        trials=args.trials,
        coeff_bound=args.coeff_bound,
        output="json" if args.json else "text",
        max_n=args.max_n,
        force=args.force,
        dump_matrix=args.dump_matrix,
    )


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _matrix_rows(m: exactla.ExactMatrix) -> list:
    return [[str(Fraction(x)) for x in row] for row in m.row_data()]


def _guard(cfg: RunConfig, n: int) -> bool:
    """True when n exceeds the size guard and --force was not given."""
    if n > cfg.max_n and not cfg.force:
        print(
            f"refusing to enumerate partitions of {n} > --max-n {cfg.max_n}; "
            "pass --force to override",
            file=sys.stderr,
        )
        return True
    return False


def _cmd_dmap(cfg: RunConfig, args) -> int:
    lam = parse(args.partition)
    res = dmap(lam, cfg.trials, seed=cfg.seed, coeff_bound=cfg.coeff_bound)
    if cfg.json:
        out = res.to_json_dict()
        out["seed"] = cfg.seed
        _emit_json(out)
    else:
        print(f"D{lam} = {res.d}")
        print(f"method {res.method}, trials used {res.trials_used}, "
              f"checks index={res.index_check} parts={res.parts_check}")
    return 0


def _cmd_dinv(cfg: RunConfig, args) -> int:
    mu = parse(args.partition)
    if _guard(cfg, mu.n):
        return 2
    out = fiber_json(mu, cfg.trials, seed=cfg.seed)
    if cfg.json:
        out["seed"] = cfg.seed
        _emit_json(out)
    else:
        print(f"D^-1{mu}: {out['size']} partitions")
        for parts in out["fiber"]:
            print(f"  {Partition(parts)}")
        m = out["methods"]
        print(f"methods: formula {m['formula']}, monte-carlo {m['monte-carlo']}")
    return 0


def _cmd_sample(cfg: RunConfig, args) -> int:
    lam = parse(args.partition)
    records = []
    for i in range(args.count):
        s = sample_nilpotent_commuting(
            lam, derive(cfg.seed, 6, i), coeff_bound=cfg.coeff_bound)
        records.append(s)
    if cfg.json:
        out = []
        for s in records:
            d = s.to_json_dict()
            if cfg.dump_matrix:
                d["matrix"] = _matrix_rows(s.matrix)
            out.append(d)
        _emit_json({"lambda": list(lam), "seed": cfg.seed, "samples": out})
    else:
        for i, s in enumerate(records):
            print(f"sample {i}: jordan type {s.jordan}")
            if cfg.dump_matrix:
                print(s.matrix.dump())
    return 0


def _transcript(cfg: RunConfig, host: Partition, m: exactla.ExactMatrix,
                label: str, json_extra: dict) -> int:
    """Re-verify a constructed witness and print the transcript."""
    b = exactla.build_jordan(host)
    commutes = m @ b == b @ m
    jt = exactla.jordan_type(m)
    ok = commutes
    if cfg.json:
        out = {
            "construction": label,
            "host": list(host),
            "jordan": list(jt),
            "commutes": commutes,
            **{k: list(v) if isinstance(v, Partition) else v
               for k, v in json_extra.items()},
            "seed": cfg.seed,
        }
        if cfg.dump_matrix:
            out["matrix"] = _matrix_rows(m)
        _emit_json(out)
    else:
        print(f"{label} for host {host}")
        print(f"commutes with host Jordan matrix: {commutes}")
        print(f"jordan type: {jt}")
        for k, v in json_extra.items():
            print(f"{k}: {v}")
        if cfg.dump_matrix:
            print(m.dump())
    return 0 if ok else 1


def _cmd_construct_squarezero(cfg: RunConfig, args) -> int:
    mu = parse(args.partition)
    m = construct_squarezero_partner(mu, args.rank)
    sq = (m @ m).is_zero()
    rk = exactla.rank(m)
    code = _transcript(cfg, mu, m, "square-zero partner",
                       {"rank": rk, "square_zero": sq})
    return code if sq and rk == args.rank else 1


def _cmd_construct_antidiagonal(cfg: RunConfig, args) -> int:
    rng = Stream(derive(cfg.seed, 6, args.l1, args.l2, args.j, args.l))
    bc = rng.nonzero(cfg.coeff_bound)
    cc = rng.nonzero(cfg.coeff_bound)
    x, pred, case = antidiagonal(args.l1, args.l2, args.j, args.l, bc, cc)
    m = tb_to_matrix(x)
    jt = exactla.jordan_type(m)
    code = _transcript(cfg, Partition((args.l1, args.l2)), m, "antidiagonal element",
                       {"element": x.render(), "case": case,
                        "predicted": pred})
    return code if jt == pred else 1


def _cmd_construct_lemma_eq2(cfg: RunConfig, args) -> int:
    m = construct_lemma_eq2(args.lam, cfg.seed)
    host = Partition((args.lam, args.lam))
    jt = exactla.jordan_type(m)
    code = _transcript(cfg, host, m, "off-by-one partner", {})
    return code if jt == (args.lam + 1, args.lam - 1) else 1


def _cmd_construct_lemma_odd(cfg: RunConfig, args) -> int:
    m = construct_lemma_odd(args.l1, args.l2, args.a)
    sq = (m @ m).is_zero()
    rk = exactla.rank(m)
    code = _transcript(cfg, Partition((args.l1, args.l2)), m,
                       "two-block square-zero element",
                       {"rank": rk, "square_zero": sq})
    return code if sq and rk == args.a else 1


def _cmd_check(cfg: RunConfig, args) -> int:
    lam, mu = parse(args.lam), parse(args.mu)
    v = compatible_filter(lam, mu)
    if cfg.json:
        _emit_json(v.to_json_dict())
    else:
        print(f"{lam} vs {mu}: {v.verdict}")
        for r in v.reasons:
            print(f"  {r.rule}: {r.detail}")
    return 0


def _run_single_suite(cfg: RunConfig, k: int) -> verify.SuiteResult:
    def c(default: int) -> int:
        return min(default, cfg.max_n)

    if k == 1:
        return verify.suite1(c(10))
    if k == 2:
        return verify.suite2(c(16), c(10), cfg.trials, cfg.seed)
    if k == 3:
        return verify.suite3(c(14), 3, cfg.seed)
    if k == 4:
        return verify.suite4(c(14), cfg.seed)
    if k == 5:
        return verify.suite5(c(16), c(10), 10000, cfg.seed, cfg.coeff_bound)
    if k == 6:
        return verify.suite6(c(16), cfg.trials, cfg.seed)
    if k == 7:
        return verify.suite7(c(16), cfg.trials, cfg.seed)
    if k == 8:
        return verify.suite8(cfg.trials, cfg.seed)
    if k == 9:
        return verify.suite9(cfg.trials, cfg.seed)
    if k == 10:
        return verify.suite10(c(12), cfg.trials, cfg.seed)
    if k == 11:
        return verify.suite11(c(10), 1000, c(12), cfg.seed, cfg.coeff_bound)
    return verify.suite12(c(14))


def _cmd_verify(cfg: RunConfig, args) -> int:
    if args.suite == "all":
        if cfg.json:
            results = verify.run_all(cfg.max_n, cfg.trials, cfg.seed)
            _emit_json({"seed": cfg.seed, "max_n": cfg.max_n,
                        "results": [r.to_json_dict() for r in results]})
        else:
            results = verify.run_all(
                cfg.max_n, cfg.trials, cfg.seed,
                progress=lambda r: print(r.line(), flush=True))
    else:
        results = [_run_single_suite(cfg, int(args.suite))]
        if cfg.json:
            _emit_json({"seed": cfg.seed, "max_n": cfg.max_n,
                        "results": [r.to_json_dict() for r in results]})
        else:
            print(results[0].line())
    return 0 if all(r.passed for r in results) else 1


def _cmd_explore_q1(cfg: RunConfig, args) -> int:
    if _guard(cfg, 2 * args.mu - args.r):
        return 2
    rep = explore_q1(args.mu, args.r, cfg.trials, seed=cfg.seed)
    if cfg.json:
        out = rep.to_json_dict()
        out["seed"] = cfg.seed
        _emit_json(out)
    else:
        target = Partition((rep.mu, rep.mu - rep.r))
        print(f"fiber of {target} (n={rep.n}): size {rep.size}, "
              f"conjectured {rep.conjectured}, matches {rep.matches}")
        for lam in rep.fiber:
            print(f"  {lam}")
    return 0 if rep.matches else 1


def _cmd_explore_q2(cfg: RunConfig, args) -> int:
    mu = parse(args.partition)
    if _guard(cfg, mu.n):
        return 2
    rep = explore_q2(mu, cfg.trials, seed=cfg.seed)
    if cfg.json:
        out = rep.to_json_dict()
        out["seed"] = cfg.seed
        _emit_json(out)
    else:
        print(f"rank-minimal elements of the fiber of {rep.mu}:")
        for lam in rep.minimal:
            print(f"  {lam}")
        print(f"conjectured {rep.conjectured}: in fiber {rep.in_fiber}, "
              f"unique minimum {rep.holds}")
    return 0 if rep.holds else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=64)
    common.add_argument("--coeff-bound", type=int, default=10)
    common.add_argument("--json", action="store_true")
    common.add_argument("--max-n", type=int, default=16)
    common.add_argument("--force", action="store_true")
    common.add_argument("--dump-matrix", action="store_true")

    parser = argparse.ArgumentParser(
        prog="nilcomm",
        description="Jordan types of commuting nilpotent matrices, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dmap", parents=[common],
                       help="generic commuting Jordan type of a partition")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_dmap)

    p = sub.add_parser("dinv", parents=[common],
                       help="inverse image of a partition under the map")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_dinv)

    p = sub.add_parser("sample", parents=[common],
                       help="random nilpotent elements commuting with a Jordan matrix")
    p.add_argument("partition")
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=_cmd_sample)

    pc = sub.add_parser("construct", help="verified witness constructions")
    subc = pc.add_subparsers(dest="construction", required=True)

    p = subc.add_parser("squarezero", parents=[common],
                        help="square-zero partner of prescribed rank")
    p.add_argument("partition")
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=_cmd_construct_squarezero)

    p = subc.add_parser("antidiagonal", parents=[common],
                        help="two-block antidiagonal element with predicted type")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    p.add_argument("j", type=int)
    p.add_argument("l", type=int)
    p.set_defaults(func=_cmd_construct_antidiagonal)

    p = subc.add_parser("lemma-eq2", parents=[common],
                        help="partner of type (m+1, m-1) for equal blocks (m, m)")
    p.add_argument("lam", type=int)
    p.set_defaults(func=_cmd_construct_lemma_eq2)

    p = subc.add_parser("lemma-odd", parents=[common],
                        help="two-block square-zero element of prescribed rank")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_construct_lemma_odd)

    pk = sub.add_parser("check", help="necessary-condition filters")
    subk = pk.add_subparsers(dest="what", required=True)
    p = subk.add_parser("pair", parents=[common],
                        help="can two types commute? forbidden or unknown")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", parents=[common],
                       help="run the acceptance suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + [str(i) for i in range(1, 13)])
    p.set_defaults(func=_cmd_verify)

    pe = sub.add_parser("explore", help="evidence for the open questions")
    sube = pe.add_subparsers(dest="question", required=True)
    p = sube.add_parser("q1", parents=[common],
                        help="two-part fiber counts beyond gap 5")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_explore_q1)
    p = sube.add_parser("q2", parents=[common],
                        help="rank-minimal fiber elements of a stable partition")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_explore_q2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args)
    try:
        return args.func(cfg, args)
    except MCInconsistencyError as exc:
        print(f"inconsistent sampling result: {exc}", file=sys.stderr)
        return 1
    except (ValueError, NotNilpotentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
