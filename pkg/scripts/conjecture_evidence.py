"""Push the conjecture scan past the CLI defaults and save the verdicts.

    python scripts/conjecture_evidence.py --n-max 45 --workers 4 --out evidence.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from partsums.cli import render_json
from partsums.identities import CONJECTURE_IDS, scan


@dataclass
class EvidenceConfig:
    n_min: int = 2
    n_max: int = 35
    workers: int = 1
    out: str = "conjecture_evidence.json"


def main():
    cfg = EvidenceConfig()
    parser = argparse.ArgumentParser()
    for name, value in asdict(cfg).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = EvidenceConfig(**vars(parser.parse_args()))

    t0 = time.perf_counter()
    report = scan(CONJECTURE_IDS, cfg.n_min, cfg.n_max, workers=cfg.workers)
    elapsed = time.perf_counter() - t0

    with open(cfg.out, "w", encoding="utf-8") as fh:
        fh.write(render_json(report))
    for identity, counts in report.per_id_summary().items():
        bad = [r.n for r in report.results if r.id == identity and r.verdict.value != "PASS"]
        print(f"{identity:5s} pass={counts['pass']:3d} fail={counts['fail']} boundary={counts['boundary']}  non-pass n: {bad}")
    print(f"{len(report.results)} records in {elapsed:.1f}s -> {cfg.out}")
    print(json.dumps({"config": asdict(cfg)}))


if __name__ == "__main__":
    main()
