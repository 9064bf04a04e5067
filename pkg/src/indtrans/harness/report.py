"""Run configurations and JSON/CSV report output."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from ..gadgets import ACCEPTANCE_SPECS, build, verify as verify_gadget
from ..graph import MAX_CANONICAL_N, canonical_form, read_graph6_file, to_graph6
from . import catalog
from .enumeration import MAX_ENUM_N
from .verify import CONSTRUCTIVE_BY_ID, certify, verify_statement


@dataclass
class RunConfig:
    max_n: int = 7
    statements: list[str] = field(default_factory=list)
    params: dict | None = None
    corpus: str | None = None
    out_dir: str | None = None
    jobs: int = 1
    gadgets: bool = False  # match corpus graphs against the gadget suite

    def validate(self) -> None:
        if self.corpus is None and not 0 <= self.max_n <= MAX_ENUM_N:
            raise ValueError(f"internal enumeration supports max_n <= {MAX_ENUM_N}, got {self.max_n}")
        if not 0 <= self.max_n <= 64:
            raise ValueError(f"max_n must be at most 64, got {self.max_n}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        for sid in self.statements:
            if sid not in catalog.BY_ID and sid not in CONSTRUCTIVE_BY_ID:
                raise ValueError(f"unknown statement {sid!r}")

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("out_dir")
        d.pop("jobs")  # does not change results
        return d


def expand(selection: list[str]) -> list[str]:
    """Resolve 'all', 'VC', 'FVS', 'OCT', 'ID', 'constructive' shorthands."""
    out: list[str] = []
    for sel in selection:
        if sel == "all":
            out += [s.id for s in catalog.STATEMENTS]
        elif sel == "constructive":
            out += list(CONSTRUCTIVE_BY_ID)
        elif sel in ("VC", "FVS", "OCT", "ID"):
            out += [s.id for s in catalog.STATEMENTS if s.id.startswith(sel + "-")]
        else:
            out.append(sel)
    seen: dict[str, None] = {}
    for sid in out:
        seen.setdefault(sid)
    return list(seen)


def _gadget_suite(corpus: str | None) -> list[dict]:
    specs = list(ACCEPTANCE_SPECS)
    if corpus is None:
        wanted = specs
    else:
        graphs = read_graph6_file(corpus)
        by_g6 = {to_graph6(build(s)): s for s in specs}
        by_canon = {canonical_form(build(s)): s for s in specs if build(s).n <= MAX_CANONICAL_N}
        wanted = []
        for g in graphs:
            spec = by_g6.get(to_graph6(g))
            if spec is None and g.n <= MAX_CANONICAL_N:
                spec = by_canon.get(canonical_form(g))
            if spec is not None and spec not in wanted:
                wanted.append(spec)
    rows = []
    for spec in wanted:
        checks = verify_gadget(spec)
        rows.append(
            {
                "gadget": spec.label(),
                "checks": len(checks),
                "pass": sum(c["pass"] for c in checks),
                "fail": [c for c in checks if not c["pass"]],
            }
        )
    return rows


def run(config: RunConfig) -> tuple[dict, int]:
    """Build the report, write it if ``out_dir`` is set, return (report, exit status)."""
    config.validate()
    blocks: list[dict] = []
    for sid in config.statements:
        if sid in CONSTRUCTIVE_BY_ID:
            blocks += certify(sid, config.max_n, config.params, config.jobs)
        else:
            blocks += verify_statement(sid, config.max_n, config.params, config.corpus, config.jobs)
    report = {"config": config.to_json(), "statements": blocks}
    failed = sum(b["fail"] for b in blocks)
    if config.gadgets:
        report["gadgets"] = _gadget_suite(config.corpus)
        failed += sum(len(r["fail"]) for r in report["gadgets"])
    if config.out_dir is not None:
        write(report, config.out_dir)
    return report, 0 if failed == 0 else 1


CSV_FIELDS = ("statement", "params", "n", "applicable", "pass", "fail", "inapplicable")


def write(report: dict, out_dir: str | Path) -> tuple[Path, Path]:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        jpath, cpath = out / "report.json", out / "report.csv"
        jpath.write_text(json.dumps(report, indent=2) + "\n")
        with cpath.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_FIELDS)
            for block in report["statements"]:
                params = ";".join(f"{k}={v}" for k, v in block["params"].items())
                for row in block["by_n"]:
                    w.writerow([block["id"], params] + [row[k] for k in CSV_FIELDS[2:]])
    except OSError as exc:
        raise OSError(f"cannot write report to {out}: {exc.strerror or exc}") from exc
    return jpath, cpath
