"""Most Clicks Problem solvers and certificates.

The MCP asks how many clicks a worst-case solvable configuration needs.
For kernel dimension 0 every configuration has a unique solution and the
answer is the full board. For grids of side 6k-1 whose kernel dimension
is 2, the four cover-membership regions bound any minimal solution's
overlap with each region; maximizing the total click count under those
constraints is a three-variable integer program whose optimum gives
26k^2 - 12k + 1 clicks, and a click set realizing the optimum with the
whole fourth region produces a configuration whose four solutions all
have exactly that weight. That configuration plus its checks form a
certificate that the bound is attained.

An exhaustive oracle is included for small boards: the solvable
configurations correspond one-to-one to canonical coset representatives
of the kernel in click space, so the oracle walks representatives in
Gray-code order and takes the max over cosets of the min member weight.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .covers import region_partition
from .gridmap import (
    CellSet,
    apply_clicks,
    format_pattern,
    kernel_basis,
    min_clicks,
    parse_pattern,
    _reverse_bits,
)

__all__ = [
    "CertificateChecks",
    "McpCertificate",
    "mcp_formula",
    "ilp_optimum",
    "mcp_upper_bound",
    "mcp_bruteforce",
    "worst_case_construct",
    "verify_certificate",
]

DEFAULT_BUDGET_BITS = 24


def mcp_formula(k: int) -> int:
    """Worst-case click count bound 26k^2 - 12k + 1 for a (6k-1)x(6k-1) grid."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return 26 * k * k - 12 * k + 1


def ilp_optimum(k: int) -> tuple[int, int, int]:
    """Optimal region click counts (R1, R2, R3) = (2, 4, 4) * k^2.

    Maximizes R1+R2+R3 subject to R2+R3 <= 8k^2, R1+R2 <= 6k^2,
    R1+R3 <= 6k^2 and the region capacities. Optimality needs no solver:
    summing the three constraints gives 2(R1+R2+R3) <= 20k^2, and the
    returned point is feasible with objective exactly 10k^2.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    kk = k * k
    r1, r2, r3 = 2 * kk, 4 * kk, 4 * kk
    assert r2 + r3 <= 8 * kk and r1 + r2 <= 6 * kk and r1 + r3 <= 6 * kk
    assert 0 <= r1 <= 4 * kk and 0 <= r2 <= 8 * kk and 0 <= r3 <= 8 * kk
    assert 2 * (r1 + r2 + r3) == 20 * kk
    return r1, r2, r3


def mcp_upper_bound(n: int) -> int:
    """Upper bound on the MCP for side n = 6k-1, valid for any nullity."""
    if n % 6 != 5:
        raise ValueError(f"side {n} is not of the form 6k-1")
    return mcp_formula((n + 1) // 6)


# -- exhaustive oracle -------------------------------------------------------

def _scan_shard(task: tuple[int, int, tuple[int, ...], tuple[int, ...]]) -> tuple[int, int, int]:
    """Scan one shard of coset representatives.

    Walks base XOR (Gray-code subsets of free_masks); for each
    representative takes the min weight over its coset members, and keeps
    the max of those minima. Returns (weight, lex key, representative),
    the representative with the lexicographically smallest bitset among
    the argmax.
    """
    size, base, free_masks, members = task
    total = 1 << len(free_masks)
    rep = base
    best_w = -1
    best_rep = 0
    best_key = None
    i = 0
    if len(members) == 1:
        m0 = members[0]
        while True:
            w = (rep ^ m0).bit_count()
            if w >= best_w:
                if w > best_w:
                    best_w, best_rep, best_key = w, rep, None
                else:
                    if best_key is None:
                        best_key = _reverse_bits(best_rep, size)
                    key = _reverse_bits(rep, size)
                    if key < best_key:
                        best_rep, best_key = rep, key
            i += 1
            if i == total:
                break
            rep ^= free_masks[(i & -i).bit_length() - 1]
    elif len(members) == 4:
        m0, m1, m2, m3 = members
        while True:
            w = (rep ^ m0).bit_count()
            v = (rep ^ m1).bit_count()
            if v < w:
                w = v
            v = (rep ^ m2).bit_count()
            if v < w:
                w = v
            v = (rep ^ m3).bit_count()
            if v < w:
                w = v
            if w >= best_w:
                if w > best_w:
                    best_w, best_rep, best_key = w, rep, None
                else:
                    if best_key is None:
                        best_key = _reverse_bits(best_rep, size)
                    key = _reverse_bits(rep, size)
                    if key < best_key:
                        best_rep, best_key = rep, key
            i += 1
            if i == total:
                break
            rep ^= free_masks[(i & -i).bit_length() - 1]
    else:
        while True:
            w = min((rep ^ m).bit_count() for m in members)
            if w >= best_w:
                if w > best_w:
                    best_w, best_rep, best_key = w, rep, None
                else:
                    if best_key is None:
                        best_key = _reverse_bits(best_rep, size)
                    key = _reverse_bits(rep, size)
                    if key < best_key:
                        best_rep, best_key = rep, key
            i += 1
            if i == total:
                break
            rep ^= free_masks[(i & -i).bit_length() - 1]
    if best_key is None:
        best_key = _reverse_bits(best_rep, size)
    return best_w, best_key, best_rep


def mcp_bruteforce(
    n: int,
    budget_bits: int = DEFAULT_BUDGET_BITS,
    workers: int | None = None,
) -> tuple[int, CellSet]:
    """Exact MCP for an n-by-n grid by exhausting coset representatives.

    The coset space has n^2 - d bits for kernel dimension d; the scan is
    refused above ``budget_bits``. Shards are reduced with a pure max, so
    the result is identical for any worker count.
    """
    if n < 1:
        raise ValueError("grid side length must be >= 1")
    kb = kernel_basis(n)
    size = n * n
    d = len(kb)
    free_count = size - d
    if free_count > budget_bits:
        raise ValueError(
            f"{free_count} coset bits for n={n} exceed the budget of "
            f"{budget_bits} bits"
        )
    vals = [0]
    for e in kb.basis:
        vals += [v ^ e.bits for v in vals]
    members = tuple(vals)
    pivot_bits = {(e.bits & -e.bits).bit_length() - 1 for e in kb.basis}
    free_masks = tuple(1 << i for i in range(size) if i not in pivot_bits)

    if workers is None:
        workers = os.cpu_count() or 1
    shard_bits = 4 if workers > 1 and free_count >= 18 else 0
    low, high = free_masks[: len(free_masks) - shard_bits], free_masks[len(free_masks) - shard_bits:]
    tasks = []
    for v in range(1 << shard_bits):
        base = 0
        for b in range(shard_bits):
            if (v >> b) & 1:
                base ^= high[b]
        tasks.append((size, base, low, members))

    if len(tasks) == 1:
        results = [_scan_shard(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_shard, tasks))

    best_w, best_key, best_rep = -1, 0, 0
    for w, key, rep in results:
        if w > best_w or (w == best_w and key < best_key):
            best_w, best_key, best_rep = w, key, rep
    return best_w, apply_clicks(CellSet(n, best_rep))


# -- constructive certificates ------------------------------------------------

@dataclass(frozen=True)
class CertificateChecks:
    """Flags certifying that a worst-case construction is exact."""

    nullity_is_2: bool
    coset_sizes_equal: bool
    image_matches: bool

    def all_pass(self) -> bool:
        return self.nullity_is_2 and self.coset_sizes_equal and self.image_matches


@dataclass(frozen=True)
class McpCertificate:
    """A worst-case configuration with the evidence that certifies it.

    When the grid's nullity is 2 the witness click set hits every kernel
    cover in exactly half its cells, so all four solutions of
    ``worst_config`` share the same weight and the claimed minimum is the
    exact MCP. Otherwise only the upper bound is claimed and the
    certificate is non-certifying (``worst_config``/``witness`` are None).
    """

    k: int
    n: int
    nullity: int
    claimed_min: int
    worst_config: CellSet | None
    witness: CellSet | None
    checks: CertificateChecks

    @property
    def certified(self) -> bool:
        return self.checks.all_pass()

    def to_json(self) -> str:
        doc = {
            "k": self.k,
            "n": self.n,
            "nullity": self.nullity,
            "claimed_min": self.claimed_min,
            "certified": self.certified,
            "worst_config": format_pattern(self.worst_config) if self.worst_config else None,
            "witness": format_pattern(self.witness) if self.witness else None,
            "checks": {
                "nullity_is_2": self.checks.nullity_is_2,
                "coset_sizes_equal": self.checks.coset_sizes_equal,
                "image_matches": self.checks.image_matches,
            },
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> McpCertificate:
        doc = json.loads(text)
        checks = CertificateChecks(
            nullity_is_2=bool(doc["checks"]["nullity_is_2"]),
            coset_sizes_equal=bool(doc["checks"]["coset_sizes_equal"]),
            image_matches=bool(doc["checks"]["image_matches"]),
        )
        return cls(
            k=int(doc["k"]),
            n=int(doc["n"]),
            nullity=int(doc["nullity"]),
            claimed_min=int(doc["claimed_min"]),
            worst_config=parse_pattern(doc["worst_config"]) if doc["worst_config"] else None,
            witness=parse_pattern(doc["witness"]) if doc["witness"] else None,
            checks=checks,
        )


def _lowest_bits(bits: int, count: int) -> int:
    """The ``count`` lowest set bits of ``bits``."""
    out = 0
    for _ in range(count):
        low = bits & -bits
        if not low:
            raise ValueError("set has fewer cells than requested")
        out |= low
        bits ^= low
    return out


def worst_case_construct(k: int) -> McpCertificate:
    """Build a worst-case configuration certificate for the (6k-1)x(6k-1) grid.

    Picks a click set with 2k^2 cells in region 1, 4k^2 in regions 2 and 3
    (the first cells of each region in row-major order) and all of region 4.
    Its image is a configuration whose every solution uses exactly
    26k^2 - 12k + 1 clicks. If the grid's nullity is not 2 the bound is
    still valid but unattained evidence is returned (non-certifying).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 6 * k - 1
    bound = mcp_formula(k)
    kb = kernel_basis(n)
    if len(kb) != 2:
        return McpCertificate(
            k=k,
            n=n,
            nullity=len(kb),
            claimed_min=bound,
            worst_config=None,
            witness=None,
            checks=CertificateChecks(False, False, False),
        )
    rp = region_partition(k)
    kk = k * k
    r1, r2, r3, r4 = (reg.bits for reg in rp.regions)
    x = (
        _lowest_bits(r1, 2 * kk)
        | _lowest_bits(r2, 4 * kk)
        | _lowest_bits(r3, 4 * kk)
        | r4
    )
    witness = CellSet(n, x)
    if len(witness) != bound:
        raise RuntimeError("constructed witness weight disagrees with the formula")
    worst = apply_clicks(witness)
    wx = x.bit_count()
    checks = CertificateChecks(
        nullity_is_2=True,
        coset_sizes_equal=all(
            (x ^ e.bits).bit_count() == wx for e in rp.covers
        ),
        image_matches=apply_clicks(witness) == worst,
    )
    return McpCertificate(
        k=k,
        n=n,
        nullity=2,
        claimed_min=bound,
        worst_config=worst,
        witness=witness,
        checks=checks,
    )


def verify_certificate(cert: McpCertificate, check_min_clicks: bool = False) -> bool:
    """Re-check a (possibly deserialized) certificate from scratch.

    Recomputes every flag against the grid itself rather than trusting the
    stored ones. With ``check_min_clicks`` the claimed minimum is also
    confirmed by an independent coset scan of the worst configuration.
    """
    if cert.claimed_min != mcp_formula(cert.k) or cert.n != 6 * cert.k - 1:
        return False
    kb = kernel_basis(cert.n)
    if cert.nullity != len(kb):
        return False
    if len(kb) != 2 or cert.witness is None or cert.worst_config is None:
        return not cert.certified and cert.witness is None and cert.worst_config is None
    if len(cert.witness) != cert.claimed_min:
        return False
    if apply_clicks(cert.witness) != cert.worst_config:
        return False
    x = cert.witness.bits
    wx = x.bit_count()
    if not all((x ^ e.bits).bit_count() == wx for e in kb.span_nonzero()):
        return False
    if check_min_clicks:
        count, _ = min_clicks(cert.worst_config)
        if count != cert.claimed_min:
            return False
    return True
