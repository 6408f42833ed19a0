"""Cross-check total acyclicity against the Ext/biduality oracle on random tuples.

Usage: python3 scripts/survey.py [--count 10] [--depth 4] [--fields Q,GF(2),GF(5)]

Writes one JSON line per (field, i, n) cell: how many tuples passed each check
and whether the two routes ever disagreed.  Runs over F_p are experiments
outside the characteristic-zero setting; they are labeled as such.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from totrefl.algebra import Ring
from totrefl.field import FieldSpec
from totrefl.trcheck import check_tuple
from totrefl.tuples import random_tuple


@dataclass
class SurveyConfig:
    fields: tuple = ("Q", "GF(2)", "GF(3)", "GF(5)")
    i_values: tuple = (2, 3)
    n_values: tuple = (1, 2, 3)
    count: int = 10
    depth: int = 4
    seed: int = 0


def run_cell(cfg, field, i, n):
    R = Ring(i, field)
    acyclic = oracle = agree = 0
    start = time.perf_counter()
    for k in range(cfg.count):
        out = check_tuple(random_tuple(R, n, cfg.seed, 3, "survey", k), depth=cfg.depth, oracle=True)
        acyclic += out["total_acyclicity"]["passed"]
        oracle += out["oracle_passed"]
        agree += out["oracle_agrees"]
    return {"field": field.name, "char_zero_hypothesis": field.is_rational, "i": i, "n": n,
            "count": cfg.count, "acyclic": acyclic, "oracle": oracle, "agree": agree,
            "seconds": round(time.perf_counter() - start, 2)}


def main():
    cfg = SurveyConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=cfg.count)
    p.add_argument("--depth", type=int, default=cfg.depth)
    p.add_argument("--seed", type=int, default=cfg.seed)
    p.add_argument("--fields", default=",".join(cfg.fields))
    args = p.parse_args()
    cfg = SurveyConfig(fields=tuple(args.fields.split(",")), count=args.count, depth=args.depth, seed=args.seed)
    print(json.dumps({"config": asdict(cfg)}))
    for name in cfg.fields:
        field = FieldSpec.from_name(name)
        for i in cfg.i_values:
            for n in cfg.n_values:
                print(json.dumps(run_cell(cfg, field, i, n)), flush=True)


if __name__ == "__main__":
    main()
