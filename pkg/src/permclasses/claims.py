"""Claim manifests, catalog sweeps and their reports.

Manifest lines look like ``kind | name | input | expected | note``; blank
lines and ``#`` comments are ignored and the note is optional. Kinds:

``ClassCount``      input is a group spec, expected k(G)
``PartitionValue``  input is n, expected p(n)
``WreathValue``     input is ``k,n``, expected k(T wr S_n) for k(T) = k
``BoundHolds``      input is ``check:args``, expected ``true``, ``false`` or
                    ``tight`` (holds with both sides equal)

Bound checks: ``main:k,n``, ``main-group:spec``, ``quarter-power:spec`` and
``index-lower:G;H`` (k(H) <= |G:H| k(G) for H <= G).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib.resources import files
from typing import Union

from . import __version__
from .bounds import (
    BoundVerdict,
    Outcome,
    Skipped,
    filtration_check,
    quarter_power_check,
    subgroup_inequalities,
    quarter_power_sweep,
    main_bound_check,
    spec_class_count,
    verify_chain_bound,
    _spec_count,
)
from .classes import DEFAULT_LIMIT, LimitExceeded, class_count_wreath_sym
from .constructions import build, catalog, parse_group_spec, parse_spec
from .core import is_primitive, minimal_block_systems
from .partitions import partition_number

KINDS = ("ClassCount", "PartitionValue", "WreathValue", "BoundHolds")
PASS, FAIL, SKIPPED = "Pass", "Fail", "Skipped"


class ManifestError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class ClaimRecord:
    name: str
    kind: str
    input: str
    expected: str
    note: str = ""
    computed: str = ""
    status: str = ""
    detail: str = ""
    seconds: float = 0.0

    def fields(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "input": self.input,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "detail": self.detail,
        }


Record = Union[ClaimRecord, BoundVerdict, Skipped]


def record_fields(rec: Record) -> dict:
    if isinstance(rec, ClaimRecord):
        return rec.fields()
    if isinstance(rec, Skipped):
        return {"claim_id": rec.claim_id, "context": rec.context, "status": SKIPPED, "reason": rec.reason}
    return {
        "claim_id": rec.claim_id,
        "context": rec.context,
        "lhs": str(rec.lhs),
        "relation": rec.relation,
        "rhs": str(rec.rhs),
        "holds": rec.holds,
        "tight": rec.tight,
        "status": PASS if rec.holds else FAIL,
    }


def _status(rec: Record) -> str:
    return record_fields(rec)["status"]


def _sort_key(rec: Record) -> tuple[str, str]:
    if isinstance(rec, ClaimRecord):
        return (rec.name, "")
    return (rec.claim_id, rec.context)


@dataclass
class RunReport:
    command: str
    seed: int
    limit: int
    records: list[Record] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def canonical(self) -> list[Record]:
        return sorted(self.records, key=_sort_key)

    def count(self, status: str) -> int:
        return sum(_status(r) == status for r in self.records)

    @property
    def overall(self) -> str:
        return FAIL if self.count(FAIL) else PASS

    def header(self) -> dict:
        return {"tool": "permclasses", "version": __version__, "command": self.command,
                "seed": self.seed, "limit": self.limit}

    def summary(self) -> dict:
        return {"overall": self.overall, "records": len(self.records), "pass": self.count(PASS),
                "fail": self.count(FAIL), "skipped": self.count(SKIPPED)}

    def to_json(self, with_timings: bool = False) -> str:
        doc = dict(self.header())
        doc["records"] = [record_fields(r) for r in self.canonical()]
        doc["summary"] = self.summary()
        if with_timings:
            doc["timings"] = self.timings
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_lines(self, with_timings: bool = False) -> str:
        lines = [_kv(self.header())]
        lines += [_kv(record_fields(r)) for r in self.canonical()]
        lines.append(_kv(self.summary()))
        if with_timings:
            lines += [_kv({"timing": k, "seconds": f"{v:.3f}"}) for k, v in sorted(self.timings.items())]
        return "\n".join(lines) + "\n"

    def table(self) -> str:
        """Human summary: one line per record."""
        rows = []
        for r in self.canonical():
            f = record_fields(r)
            if isinstance(r, ClaimRecord):
                rows.append(f"{f['status']:<8} {f['name']:<28} expected={f['expected']} computed={f['computed']}")
            elif isinstance(r, Skipped):
                rows.append(f"{SKIPPED:<8} {r.claim_id:<28} {r.context}: {r.reason}")
            else:
                mark = " (tight)" if r.tight else ""
                rows.append(f"{f['status']:<8} {r.claim_id:<28} {r.context}: {r.lhs} {r.relation} {r.rhs}{mark}")
        s = self.summary()
        rows.append(f"overall={s['overall']} records={s['records']} pass={s['pass']} "
                    f"fail={s['fail']} skipped={s['skipped']}")
        return "\n".join(rows) + "\n"


def _kv(d: dict) -> str:
    parts = []
    for k, v in d.items():
        if isinstance(v, bool):
            v = "true" if v else "false"
        v = str(v)
        if not v or any(c.isspace() or c in '"=' for c in v):
            v = json.dumps(v)
        parts.append(f"{k}={v}")
    return " ".join(parts)


# -- manifests --------------------------------------------------------------


def builtin_manifest_text() -> str:
    return files("permclasses").joinpath("data/claims.manifest").read_text()


def parse_manifest(text: str) -> list[ClaimRecord]:
    records = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) not in (4, 5):
            raise ManifestError(f"expected 4 or 5 '|'-separated fields, got {len(parts)}", lineno)
        kind, name, inp, expected = parts[:4]
        if kind not in KINDS:
            raise ManifestError(f"unknown kind {kind!r}", lineno)
        if not name or name in seen:
            raise ManifestError(f"missing or duplicate claim name {name!r}", lineno)
        seen.add(name)
        if kind == "BoundHolds":
            if expected not in ("true", "false", "tight"):
                raise ManifestError("BoundHolds expects true, false or tight", lineno)
        elif not expected.isdigit():
            raise ManifestError(f"expected value {expected!r} is not a natural number", lineno)
        records.append(ClaimRecord(name, kind, inp, expected, parts[4] if len(parts) == 5 else ""))
    return records


def _split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside of brackets."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return [s.strip() for s in out]


def _evaluate_bound(arg: str, limit: int) -> tuple[BoundVerdict, str]:
    check, _, rest = arg.partition(":")
    if check == "main":
        k, n = (int(x) for x in rest.split(","))
        return main_bound_check(k, n), ""
    if check == "main-group":
        group = parse_group_spec(rest)
        k = spec_class_count(str(parse_spec(rest)), limit)
        return main_bound_check(k, group.degree, rest), f"k={k}"
    if check == "quarter-power":
        group = parse_group_spec(rest)
        k = spec_class_count(str(parse_spec(rest)), limit)
        return quarter_power_check(k, group.degree, rest), f"k={k}"
    if check == "index-lower":
        g_spec, h_spec = _split_top(rest, ";")
        group, sub = parse_group_spec(g_spec), parse_group_spec(h_spec)
        v = subgroup_inequalities(group, sub, limit=limit)[0]
        index = group.order() // sub.order()
        return v, f"k(G)={v.rhs // index} index={index}"
    raise ValueError(f"unknown bound check {check!r}")


def evaluate_claim(rec: ClaimRecord, limit: int = DEFAULT_LIMIT) -> ClaimRecord:
    start = time.perf_counter()
    try:
        if rec.kind == "ClassCount":
            computed = str(spec_class_count(str(parse_spec(rec.input)), limit))
            rec.status = PASS if computed == rec.expected else FAIL
        elif rec.kind == "PartitionValue":
            computed = str(partition_number(int(rec.input)))
            rec.status = PASS if computed == rec.expected else FAIL
        elif rec.kind == "WreathValue":
            k, n = (int(x) for x in rec.input.split(","))
            computed = str(class_count_wreath_sym(k, n))
            rec.status = PASS if computed == rec.expected else FAIL
        else:
            v, extra = _evaluate_bound(rec.input, limit)
            computed = "tight" if v.holds and v.tight else ("true" if v.holds else "false")
            ok = computed == rec.expected or (rec.expected == "true" and computed == "tight")
            rec.status = PASS if ok else FAIL
            rec.detail = " ".join(x for x in (f"{v.lhs} {v.relation} {v.rhs}", extra) if x)
        rec.computed = computed
    except LimitExceeded as exc:
        rec.status = SKIPPED
        rec.detail = str(exc)
    rec.seconds = time.perf_counter() - start
    return rec


def run_claims(manifest_text: str | None = None, seed: int = 0, limit: int = DEFAULT_LIMIT) -> RunReport:
    """Evaluate a manifest (the built-in one by default)."""
    text = builtin_manifest_text() if manifest_text is None else manifest_text
    report = RunReport("verify claims", seed, limit)
    for rec in parse_manifest(text):
        evaluate_claim(rec, limit)
        report.records.append(rec)
        report.timings[rec.name] = rec.seconds
    return report


# -- catalog sweep ----------------------------------------------------------


def catalog_sweep(max_degree: int, seed: int = 0, limit: int = DEFAULT_LIMIT,
                  product_samples: int = 64, filtration_max_degree: int | None = None) -> RunReport:
    """Main bound, chain bound and kernel filtration over the transitive
    catalog, then the 5^(n/4) sweep (see :func:`quarter_power_sweep`)."""
    if not 4 <= max_degree <= 24:
        raise ValueError("max_degree must lie in 4..24")
    report = RunReport(f"verify sweep --max-degree {max_degree}", seed, limit)
    add = report.records.append
    for spec in catalog(max_degree, min_degree=4, products=False):
        start = time.perf_counter()
        group = build(parse_spec(spec))
        if not group.is_transitive():
            continue
        value = _spec_count(spec, limit)
        if isinstance(value, str):
            add(Skipped("main-bound", spec, value))
        else:
            add(main_bound_check(value, group.degree, spec))
            if not is_primitive(group):
                add(verify_chain_bound(group, limit))
                if filtration_max_degree is None or group.degree <= filtration_max_degree:
                    report.records.extend(_filtration(group, spec, limit))
        report.timings[spec] = time.perf_counter() - start
    start = time.perf_counter()
    report.records.extend(quarter_power_sweep(min(max_degree, 23), seed, limit, product_samples))
    report.timings["quarter-power-sweep"] = time.perf_counter() - start
    return report


def _filtration(group, spec: str, limit: int) -> list[Outcome]:
    system = minimal_block_systems(group)[0]
    try:
        return list(filtration_check(group, system, limit))
    except LimitExceeded as exc:
        ctx = f"{spec} blocks={system.block_count}x{system.block_size}"
        return [Skipped("filtration-product", ctx, str(exc))]
