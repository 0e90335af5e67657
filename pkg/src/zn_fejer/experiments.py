"""
Seeded random-subset experiments and report rendering.

The default configuration reproduces the small illustration of the smoothed
discrepancy bound: N = 101, |A| = 50, r in {5, 10, 20}.
"""
import csv
import io
import json
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .discrepancy import BoundReport, SubsetIndicator, effective_constant
from .exceptions import InvariantViolation, ParameterError
from .fejer_kernel import KernelSpec, build_kernel, symbol
from .group_signal import check_group_size, dft
from .rng import MASK64, RNG_NAME, RNG_VERSION, SplitMix64, derive_seed, subset_hash

FORMATS = ("csv", "json")
REPORT_FIELDS = (
    "trial",
    "r",
    "subset_hash",
    "observed_sup",
    "theorem_bound",
    "corollary_bound",
    "effective_constant",
)


@dataclass(frozen=True)
class ExperimentConfig:
    N: int = 101
    subset_size: int = 50
    radii: tuple = (5, 10, 20)
    trials: int = 100
    seed: int = 42
    output_format: str = "csv"

    def __post_init__(self):
        check_group_size(self.N)
        object.__setattr__(self, "radii", tuple(int(r) for r in self.radii))
        if not 0 <= self.subset_size <= self.N:
            raise ParameterError(f"subset size must lie in [0, {self.N}], got {self.subset_size}")
        if not self.radii:
            raise ParameterError("at least one radius is required")
        for r in self.radii:
            KernelSpec(self.N, r)
        if self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed <= MASK64:
            raise ParameterError("seed must be an unsigned 64-bit integer")
        if self.output_format not in FORMATS:
            raise ParameterError(f"output format must be one of {FORMATS}")


@dataclass(frozen=True)
class TrialReport:
    trial_index: int
    r: int
    subset_hash: int
    bound_report: BoundReport

    def row(self):
        b = self.bound_report
        return {
            "trial": self.trial_index,
            "r": self.r,
            "subset_hash": f"{self.subset_hash:016x}",
            "observed_sup": b.observed_sup,
            "theorem_bound": b.theorem_bound,
            "corollary_bound": b.corollary_bound,
            "effective_constant": b.effective_constant,
        }


def random_subset(N, size, trial_seed):
    """Uniform ``size``-element subset of Z/NZ by a partial Fisher-Yates shuffle."""
    N = check_group_size(N)
    if isinstance(size, bool) or int(size) != size or not 0 <= size <= N:
        raise ParameterError(f"subset size must lie in [0, {N}], got {size!r}")
    rng = SplitMix64(trial_seed)
    pool = list(range(N))
    for i in range(size):
        j = i + rng.below(N - i)
        pool[i], pool[j] = pool[j], pool[i]
    return SubsetIndicator(N, tuple(sorted(pool[:size])))


def _run_trial(config, t):
    A = random_subset(config.N, config.subset_size, derive_seed(config.seed, t))
    h = subset_hash(A.N, A.members)
    return [TrialReport(t, r, h, effective_constant(A, r)) for r in config.radii]


def run_experiment(config, workers=1):
    """Evaluate every (trial, r) pair; output order is (trial, r) regardless of ``workers``.

    Raises InvariantViolation if any report breaks observed <= theorem <= corollary.
    """
    trials = range(config.trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda t: _run_trial(config, t), trials))
    else:
        batches = [_run_trial(config, t) for t in trials]
    reports = sorted((rep for batch in batches for rep in batch), key=lambda x: (x.trial_index, x.r))
    for rep in reports:
        if not rep.bound_report.is_ordered():
            raise InvariantViolation(
                f"bound ordering violated at trial {rep.trial_index}, r={rep.r}: {rep.bound_report}"
            )
    return reports


def _fmt(x):
    return format(x, ".12g")


def _round12(x):
    return float(_fmt(x))


def summarize(reports):
    """Mean and max effective constant per radius, keyed by r."""
    by_r = {}
    for rep in reports:
        by_r.setdefault(rep.r, []).append(rep.bound_report.effective_constant)
    return {
        r: {"mean_effective_constant": statistics.fmean(v), "max_effective_constant": max(v)}
        for r, v in sorted(by_r.items())
    }


def _meta(config):
    meta = {
        "tool": f"zn_fejer {__version__}",
        "rng": f"{RNG_NAME} v{RNG_VERSION}",
        "trial_seed": "mix64(mix64(seed) ^ ((trial+1) * 0x9e3779b97f4a7c15))",
        "subset_hash": "fnv1a64 over little-endian u64 words (N, sorted members...)",
    }
    if config is not None:
        meta["config"] = {
            "N": config.N,
            "subset_size": config.subset_size,
            "radii": list(config.radii),
            "trials": config.trials,
            "seed": config.seed,
        }
    return meta


def emit_report(reports, fmt="csv", config=None):
    """Render reports as CSV (``#`` header lines) or JSON ({"meta", "reports"})."""
    if not reports:
        raise ParameterError("no reports to emit")
    if fmt not in FORMATS:
        raise ParameterError(f"output format must be one of {FORMATS}")
    reports = sorted(reports, key=lambda x: (x.trial_index, x.r))
    meta = _meta(config)
    summary = summarize(reports)

    if fmt == "json":
        rows = []
        for rep in reports:
            row = rep.row()
            rows.append({k: _round12(v) if isinstance(v, float) else v for k, v in row.items()})
        meta["summary"] = {
            str(r): {k: _round12(v) for k, v in s.items()} for r, s in summary.items()
        }
        return json.dumps({"meta": meta, "reports": rows}, indent=1) + "\n"

    buf = io.StringIO()
    buf.write(f"# tool: {meta['tool']}\n")
    buf.write(f"# rng: {meta['rng']}; trial_seed = {meta['trial_seed']}\n")
    buf.write(f"# subset_hash: {meta['subset_hash']}\n")
    if config is not None:
        c = meta["config"]
        radii = ",".join(str(r) for r in c["radii"])
        buf.write(
            f"# config: N={c['N']} subset_size={c['subset_size']} radii={radii} "
            f"trials={c['trials']} seed={c['seed']}\n"
        )
    for r, s in summary.items():
        buf.write(
            f"# summary: r={r} mean_effective_constant={_fmt(s['mean_effective_constant'])} "
            f"max_effective_constant={_fmt(s['max_effective_constant'])}\n"
        )
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for rep in reports:
        row = rep.row()
        writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row.values()])
    return buf.getvalue()


def parse_csv_report(text):
    """Inverse of the CSV rendering: list of row dicts, comment lines skipped."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    rows = []
    for rec in csv.DictReader(lines):
        rows.append(
            {
                "trial": int(rec["trial"]),
                "r": int(rec["r"]),
                "subset_hash": rec["subset_hash"],
                **{k: float(rec[k]) for k in REPORT_FIELDS[3:]},
            }
        )
    return rows


def kernel_tables(spec):
    """Spatial kernel values and the closed-form vs DFT-computed symbol."""
    kernel = build_kernel(spec)
    closed = symbol(spec)
    computed = dft(kernel)
    diff = np.abs(computed - closed)
    return kernel, closed, computed.real, diff


def dump_kernel(spec, fmt="csv", tables=("kernel", "symbol")):
    """Render the kernel table (n, F_r(n)) and the symbol table (k, closed, dft, |diff|)."""
    if fmt not in FORMATS:
        raise ParameterError(f"output format must be one of {FORMATS}")
    kernel, closed, computed, diff = kernel_tables(spec)
    meta = {"tool": f"zn_fejer {__version__}", "N": spec.N, "r": spec.r}

    if fmt == "json":
        doc = {"meta": meta}
        if "kernel" in tables:
            doc["kernel"] = [{"n": n, "kernel": _round12(v)} for n, v in enumerate(kernel)]
        if "symbol" in tables:
            doc["symbol"] = [
                {
                    "k": k,
                    "symbol_closed_form": _round12(closed[k]),
                    "symbol_dft": _round12(computed[k]),
                    "abs_diff": _round12(diff[k]),
                }
                for k in range(spec.N)
            ]
        return json.dumps(doc, indent=1) + "\n"

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    buf.write(f"# tool: {meta['tool']}\n# kernel: N={spec.N} r={spec.r}\n")
    sections = []
    if "kernel" in tables:
        sections.append((("n", "kernel"), [(n, _fmt(v)) for n, v in enumerate(kernel)]))
    if "symbol" in tables:
        sections.append(
            (
                ("k", "symbol_closed_form", "symbol_dft", "abs_diff"),
                [
                    (k, _fmt(closed[k]), _fmt(computed[k]), _fmt(diff[k]))
                    for k in range(spec.N)
                ],
            )
        )
    for i, (header, rows) in enumerate(sections):
        if i:
            buf.write("\n")
        writer.writerow(header)
        writer.writerows(rows)
    return buf.getvalue()
