"""Census of kernel dimensions across grid sizes.

Sweeping n and recording the kernel dimension d(n) locates the rare sides
whose grids have exactly a four-element kernel (d = 2), the ones where the
worst-case click analysis applies. Every such side found so far is odd and
congruent to 5 mod 6, in fact 5 mod 12, so the census offers a fast mode
that only inspects n = 5 (mod 12); a full sweep of every n is the ground
truth the fast mode is checked against.

Blocks of sides are scanned via the shared Fibonacci-polynomial sweep in
:mod:`lightsout.gf2poly`, optionally across worker processes. Results are
plain (n, nullity) records with CSV and JSONL round-trips, plus small
report objects for the congruence checks, the d(2*3^k - 1) = 2 conjecture,
and the density of d = 2 sides.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .gf2poly import nullity, nullity_range

__all__ = [
    "ScanRecord",
    "CongruenceViolation",
    "CongruenceReport",
    "ConjectureEntry",
    "ConjectureReport",
    "DensityReport",
    "scan_range",
    "census",
    "verify_congruences",
    "check_conjecture_2_3k",
    "density_report",
    "write_records_csv",
    "read_records_csv",
    "write_records_jsonl",
    "read_records_jsonl",
]

DEFAULT_BLOCK_SIZE = 512
FAST_RESIDUE = (12, 5)
DENSITY_CEILING = 1 / 12

CONGRUENCES = (
    ("n % 2 == 1", lambda n: n % 2 == 1),
    ("n % 6 == 5", lambda n: n % 6 == 5),
    ("n % 12 == 5", lambda n: n % 12 == 5),
)


@dataclass(frozen=True, order=True)
class ScanRecord:
    """One scanned side: ``n`` and the kernel dimension of its grid."""

    n: int
    nullity: int


def _scan_block(task: tuple[int, int, tuple[int, int] | None]) -> list[tuple[int, int]]:
    lo, hi, residue = task
    if residue is None:
        return nullity_range(lo, hi)
    modulus, value = residue
    return nullity_range(lo, hi, include=lambda n: n % modulus == value)


def scan_range(
    n_min: int,
    n_max: int,
    residue: tuple[int, int] | None = None,
    workers: int | None = None,
    block_size: int = DEFAULT_BLOCK_SIZE,
    on_block: Callable[[int, int, list[ScanRecord]], None] | None = None,
) -> list[ScanRecord]:
    """Scan sides n_min..n_max, optionally restricted to one residue class.

    ``residue`` is a (modulus, value) pair; only sides with
    n % modulus == value are computed. ``on_block`` fires once per finished
    block with (lo, hi, records), in completion order when parallel. The
    returned list is always sorted by n regardless of worker count.
    """
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if block_size < 1:
        raise ValueError("block_size must be >= 1")
    if residue is not None:
        modulus, value = residue
        if modulus < 1 or not 0 <= value < modulus:
            raise ValueError(f"bad residue class {value} mod {modulus}")
    if workers is None:
        workers = os.cpu_count() or 1

    tasks = []
    lo = n_min
    while lo <= n_max:
        hi = min(lo + block_size - 1, n_max)
        tasks.append((lo, hi, residue))
        lo = hi + 1

    results: list[list[ScanRecord]] = [None] * len(tasks)  # type: ignore[list-item]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_scan_block, t): i for i, t in enumerate(tasks)}
            for fut in as_completed(futures):
                i = futures[fut]
                records = [ScanRecord(n, d) for n, d in fut.result()]
                results[i] = records
                if on_block is not None:
                    on_block(tasks[i][0], tasks[i][1], records)
    else:
        for i, t in enumerate(tasks):
            records = [ScanRecord(n, d) for n, d in _scan_block(t)]
            results[i] = records
            if on_block is not None:
                on_block(t[0], t[1], records)
    return [rec for block in results for rec in block]


def census(
    n_max: int,
    fast: bool = False,
    workers: int | None = None,
    out: str | None = None,
    jsonl: bool = False,
    block_size: int = DEFAULT_BLOCK_SIZE,
    progress: Callable[[int, int], None] | None = None,
) -> tuple[list[ScanRecord], "CongruenceReport"]:
    """Scan all sides up to ``n_max`` and check the congruences on the way out.

    Fast mode only inspects n = 5 (mod 12), which the congruence checks
    justify for locating four-element kernels; the full mode scans every
    side. With ``out`` the records are appended to the file as each block
    completes (so long runs are inspectable mid-flight) and the file is
    rewritten sorted at the end. ``progress`` is called with
    (sides done, sides total) after every block.
    """
    residue = FAST_RESIDUE if fast else None
    total = n_max
    done = 0
    sink = open(out, "w", encoding="utf-8") if out is not None else None
    if sink is not None and not jsonl:
        sink.write("n,nullity\n")

    def handle(lo: int, hi: int, records: list[ScanRecord]) -> None:
        nonlocal done
        if sink is not None:
            for rec in records:
                if jsonl:
                    sink.write(json.dumps({"n": rec.n, "nullity": rec.nullity}) + "\n")
                else:
                    sink.write(f"{rec.n},{rec.nullity}\n")
            sink.flush()
        done += hi - lo + 1
        if progress is not None:
            progress(done, total)

    try:
        records = scan_range(
            1, n_max, residue=residue, workers=workers,
            block_size=block_size, on_block=handle,
        )
    finally:
        if sink is not None:
            sink.close()
    if out is not None:
        if jsonl:
            write_records_jsonl(records, out)
        else:
            write_records_csv(records, out)
    return records, verify_congruences(records)


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceViolation:
    n: int
    nullity: int
    failed: tuple[str, ...]


@dataclass(frozen=True)
class CongruenceReport:
    """Congruence audit of the d = 2 sides in a scan."""

    checked: int
    violations: tuple[CongruenceViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary_lines(self) -> list[str]:
        lines = [f"nullity-2 sides checked: {self.checked}"]
        if self.ok:
            lines.append("congruences: all hold (n odd, n = 5 mod 6, n = 5 mod 12)")
        else:
            for v in self.violations:
                lines.append(
                    f"VIOLATION: n={v.n} (nullity {v.nullity}) fails " + ", ".join(v.failed)
                )
        return lines


def verify_congruences(records: Iterable[ScanRecord]) -> CongruenceReport:
    """Check every nullity-2 record against the observed congruence pattern."""
    checked = 0
    violations = []
    for rec in records:
        if rec.nullity != 2:
            continue
        checked += 1
        failed = tuple(name for name, pred in CONGRUENCES if not pred(rec.n))
        if failed:
            violations.append(CongruenceViolation(rec.n, rec.nullity, failed))
    return CongruenceReport(checked=checked, violations=tuple(violations))


@dataclass(frozen=True)
class ConjectureEntry:
    k: int
    n: int
    nullity: int

    @property
    def holds(self) -> bool:
        return self.nullity == 2


@dataclass(frozen=True)
class ConjectureReport:
    """Evidence for d(2*3^k - 1) = 2 across a range of k."""

    entries: tuple[ConjectureEntry, ...]

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries)

    def summary_lines(self) -> list[str]:
        lines = []
        for e in self.entries:
            verdict = "holds" if e.holds else f"FAILS (nullity {e.nullity})"
            lines.append(f"k={e.k}: n={e.n} nullity={e.nullity} -> {verdict}")
        lines.append(
            "conjecture d(2*3^k - 1) = 2: "
            + ("holds for all checked k" if self.all_hold else "FAILS, see above")
        )
        return lines


def check_conjecture_2_3k(k_max: int) -> ConjectureReport:
    """Evaluate d(2*3^k - 1) for k = 1..k_max and report where it equals 2."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    entries = []
    for k in range(1, k_max + 1):
        n = 2 * 3**k - 1
        entries.append(ConjectureEntry(k=k, n=n, nullity=nullity(n)))
    return ConjectureReport(entries=tuple(entries))


@dataclass(frozen=True)
class DensityReport:
    """How common nullity-2 sides are among all sides up to a limit."""

    n_max: int
    nullity2: int
    density: float
    ceiling: float

    @property
    def within_ceiling(self) -> bool:
        return self.density <= self.ceiling

    def summary_lines(self) -> list[str]:
        return [
            f"nullity-2 sides up to {self.n_max}: {self.nullity2}",
            f"density: {self.density:.6f} (residue-class ceiling {self.ceiling:.6f})",
            "within ceiling" if self.within_ceiling else "EXCEEDS ceiling",
        ]


def density_report(records: Iterable[ScanRecord], n_max: int) -> DensityReport:
    """Density of nullity-2 sides among 1..n_max in a scan's records.

    The ceiling is 1/12: all known nullity-2 sides fall in a single
    residue class mod 12, so their density can never pass it.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    count = sum(1 for rec in records if rec.nullity == 2 and rec.n <= n_max)
    return DensityReport(
        n_max=n_max,
        nullity2=count,
        density=count / n_max,
        ceiling=DENSITY_CEILING,
    )


# -- persistence ---------------------------------------------------------------

def write_records_csv(records: Sequence[ScanRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "nullity"])
        for rec in records:
            writer.writerow([rec.n, rec.nullity])


def read_records_csv(path: str) -> list[ScanRecord]:
    records = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0] == "n":
                continue
            records.append(ScanRecord(n=int(row[0]), nullity=int(row[1])))
    return records


def write_records_jsonl(records: Sequence[ScanRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps({"n": rec.n, "nullity": rec.nullity}) + "\n")


def read_records_jsonl(path: str) -> list[ScanRecord]:
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            doc = json.loads(line)
            records.append(ScanRecord(n=int(doc["n"]), nullity=int(doc["nullity"])))
    return records
