"""Click map, kernel bases, and GF(2) solvers for n-by-n Lights Out grids.

Cell sets (light configurations and click sets alike) are integer bitsets
in row-major order: cell (r, c) is bit r*n + c. Symmetric difference is
XOR, so the click map and all solvers below are straight bit fiddling on
word-packed rows; the n^4-bit click matrix is never materialized beyond
its n^2 neighborhood rows.

Elimination is done once per grid size and cached: a single forward pass
over the neighborhood rows yields both the kernel basis (the even parity
covers) and a solver for particular solutions. The click matrix is
symmetric, so a vanishing combination of rows read off during elimination
is itself a kernel vector, and membership in the image can be decided by
orthogonality against the kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "CellSet",
    "KernelBasis",
    "UnsolvableError",
    "neighborhood",
    "neighborhood_masks",
    "apply_clicks",
    "kernel_basis",
    "is_solvable",
    "solve_particular",
    "all_solutions",
    "min_clicks",
    "parse_pattern",
    "format_pattern",
    "format_pbm",
]

DEFAULT_NULLITY_CAP = 20


class UnsolvableError(ValueError):
    """Raised when a light configuration is not in the image of the click map."""


class CellSet:
    """Immutable set of cells on an n-by-n grid, stored as a row-major bitset."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0) -> None:
        if n < 1:
            raise ValueError("grid side length must be >= 1")
        if bits < 0 or bits >> (n * n):
            raise ValueError(f"bits outside the {n}x{n} grid")
        self.n = n
        self.bits = bits

    @classmethod
    def empty(cls, n: int) -> CellSet:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> CellSet:
        return cls(n, (1 << (n * n)) - 1)

    @classmethod
    def from_cells(cls, n: int, cells) -> CellSet:
        bits = 0
        for r, c in cells:
            if not (0 <= r < n and 0 <= c < n):
                raise ValueError(f"cell ({r}, {c}) outside the {n}x{n} grid")
            bits |= 1 << (r * n + c)
        return cls(n, bits)

    def cells(self) -> list[tuple[int, int]]:
        """Set cells as (row, col) pairs in row-major order."""
        n, bits = self.n, self.bits
        out = []
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            out.append((i // n, i % n))
            bits ^= low
        return out

    def _check_same_grid(self, other: CellSet) -> None:
        if self.n != other.n:
            raise ValueError(f"grid size mismatch: {self.n} vs {other.n}")

    def __xor__(self, other: CellSet) -> CellSet:
        self._check_same_grid(other)
        return CellSet(self.n, self.bits ^ other.bits)

    def __and__(self, other: CellSet) -> CellSet:
        self._check_same_grid(other)
        return CellSet(self.n, self.bits & other.bits)

    def __or__(self, other: CellSet) -> CellSet:
        self._check_same_grid(other)
        return CellSet(self.n, self.bits | other.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        if not (0 <= r < self.n and 0 <= c < self.n):
            return False
        return (self.bits >> (r * self.n + c)) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CellSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"CellSet(n={self.n}, weight={len(self)})"

    def __str__(self) -> str:
        return format_pattern(self)


@dataclass(frozen=True)
class KernelBasis:
    """Canonical basis of the click map's kernel for an n-by-n grid.

    Basis vectors are in reduced row-echelon form over the row-major cell
    order (each has a leading cell no other basis vector touches), sorted
    by leading cell, so output is reproducible run to run.
    """

    n: int
    basis: tuple[CellSet, ...]

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self) -> Iterator[CellSet]:
        return iter(self.basis)

    @property
    def nullity(self) -> int:
        return len(self.basis)

    def span_nonzero(self) -> list[CellSet]:
        """All 2^d - 1 nonzero kernel elements (d must be small)."""
        out: list[CellSet] = []
        vals = [0]
        for b in self.basis:
            vals += [v ^ b.bits for v in vals]
        return [CellSet(self.n, v) for v in vals[1:]]


# -- click map ---------------------------------------------------------------

@lru_cache(maxsize=None)
def neighborhood_masks(n: int) -> tuple[int, ...]:
    """Bitmask of the closed neighborhood of each cell, indexed by cell."""
    masks = []
    for r in range(n):
        for c in range(n):
            m = 1 << (r * n + c)
            if r > 0:
                m |= 1 << ((r - 1) * n + c)
            if r < n - 1:
                m |= 1 << ((r + 1) * n + c)
            if c > 0:
                m |= 1 << (r * n + c - 1)
            if c < n - 1:
                m |= 1 << (r * n + c + 1)
            masks.append(m)
    return tuple(masks)


def neighborhood(n: int, v: int) -> CellSet:
    """Closed neighborhood of cell index v (v plus its grid neighbors)."""
    if not 0 <= v < n * n:
        raise ValueError(f"cell index {v} outside the {n}x{n} grid")
    return CellSet(n, neighborhood_masks(n)[v])


def apply_clicks(clicks: CellSet) -> CellSet:
    """Lights toggled by clicking every cell in ``clicks`` once."""
    masks = neighborhood_masks(clicks.n)
    acc = 0
    bits = clicks.bits
    while bits:
        low = bits & -bits
        acc ^= masks[low.bit_length() - 1]
        bits ^= low
    return CellSet(clicks.n, acc)


# -- elimination -------------------------------------------------------------
#
# Rows are processed with column j of the click matrix held at bit N-1-j
# ("reversed" layout) so the leading column of a row is found with
# int.bit_length(), which is O(1), instead of scanning low bits of big
# integers. Tracks (which original rows were combined) stay in natural
# cell order.

def _reverse_bits(bits: int, width: int) -> int:
    return int(format(bits, f"0{width}b")[::-1], 2) if width else 0


class _Echelon:
    __slots__ = ("n", "size", "pivots", "kernel")

    def __init__(self, n: int, size: int, pivots: dict, kernel: tuple):
        self.n = n
        self.size = size
        self.pivots = pivots  # leading column -> (row value rev-layout, track)
        self.kernel = kernel  # raw kernel tracks, natural layout


@lru_cache(maxsize=None)
def _echelon(n: int) -> _Echelon:
    size = n * n
    masks = neighborhood_masks(n)
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for v in range(size):
        cur = _reverse_bits(masks[v], size)
        track = 1 << v
        while cur:
            col = size - cur.bit_length()
            hit = pivots.get(col)
            if hit is None:
                pivots[col] = (cur, track)
                break
            cur ^= hit[0]
            track ^= hit[1]
        else:
            kernel.append(track)
    return _Echelon(n, size, pivots, tuple(kernel))


def _lowest_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def _rref_low(vectors) -> list[tuple[int, int]]:
    """Reduce vectors to (pivot, value) rows, pivot = lowest set bit, sorted."""
    rows: list[tuple[int, int]] = []
    for v in vectors:
        for p, b in rows:
            if (v >> p) & 1:
                v ^= b
        if not v:
            continue
        p = _lowest_bit(v)
        rows = [(q, (w ^ v) if (w >> p) & 1 else w) for q, w in rows]
        rows.append((p, v))
    rows.sort()
    return rows


@lru_cache(maxsize=None)
def kernel_basis(n: int) -> KernelBasis:
    """Canonical basis of the even parity covers of the n-by-n grid."""
    ech = _echelon(n)
    rows = _rref_low(ech.kernel)
    return KernelBasis(n, tuple(CellSet(n, v) for _, v in rows))


# -- solvers -----------------------------------------------------------------

def is_solvable(config: CellSet) -> bool:
    """Whether the configuration is in the image of the click map.

    The click matrix is symmetric, so the image is exactly the orthogonal
    complement of the kernel; this tests orthogonality against every
    kernel basis vector.
    """
    return all(
        (config.bits & e.bits).bit_count() & 1 == 0
        for e in kernel_basis(config.n).basis
    )


def solve_particular(config: CellSet) -> CellSet:
    """One click set solving ``config``, canonical and deterministic.

    The result is the unique solution whose coordinates vanish on the
    kernel's leading cells (the d free degrees of freedom are pinned to
    zero), so repeated calls agree bit for bit.
    """
    ech = _echelon(config.n)
    cur = _reverse_bits(config.bits, ech.size)
    track = 0
    while cur:
        hit = ech.pivots.get(ech.size - cur.bit_length())
        if hit is None:
            raise UnsolvableError("configuration is not solvable")
        cur ^= hit[0]
        track ^= hit[1]
    for p, b in _kernel_rows(config.n):
        if (track >> p) & 1:
            track ^= b
    return CellSet(config.n, track)


@lru_cache(maxsize=None)
def _kernel_rows(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((_lowest_bit(e.bits), e.bits) for e in kernel_basis(n).basis)


def _check_nullity_cap(n: int, max_nullity: int) -> list[int]:
    basis_bits = [e.bits for e in kernel_basis(n).basis]
    if len(basis_bits) > max_nullity:
        raise ValueError(
            f"nullity {len(basis_bits)} exceeds the enumeration cap "
            f"{max_nullity}; raise max_nullity or use min_clicks variants"
        )
    return basis_bits

def all_solutions(config: CellSet, max_nullity: int = DEFAULT_NULLITY_CAP) -> list[CellSet]:
    """Every solution of ``config``: the coset of one solution by the kernel.

    Exactly 2^d solutions for kernel dimension d; refuses to enumerate
    when d exceeds ``max_nullity``.
    """
    basis_bits = _check_nullity_cap(config.n, max_nullity)
    x0 = solve_particular(config)
    sols = [x0]
    cur = x0.bits
    for i in range(1, 1 << len(basis_bits)):
        cur ^= basis_bits[(i & -i).bit_length() - 1]
        sols.append(CellSet(config.n, cur))
    return sols


def lex_key(cs: CellSet) -> int:
    """Row-major lexicographic rank of a cell set ('.' sorts before '#')."""
    return _reverse_bits(cs.bits, cs.n * cs.n)


def min_clicks(
    config: CellSet, max_nullity: int = DEFAULT_NULLITY_CAP
) -> tuple[int, CellSet]:
    """Fewest clicks solving ``config``, with a witness click set.

    Scans the whole solution coset; among equal-weight minima the witness
    is the lexicographically smallest bitset in row-major order.
    """
    basis_bits = _check_nullity_cap(config.n, max_nullity)
    size = config.n * config.n
    cur = solve_particular(config).bits
    best = cur
    best_w = cur.bit_count()
    best_key = None
    for i in range(1, 1 << len(basis_bits)):
        cur ^= basis_bits[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w > best_w:
            continue
        if w < best_w:
            best, best_w, best_key = cur, w, None
        else:
            if best_key is None:
                best_key = _reverse_bits(best, size)
            key = _reverse_bits(cur, size)
            if key < best_key:
                best, best_key = cur, key
    return best_w, CellSet(config.n, best)


# -- pattern text format -----------------------------------------------------

def parse_pattern(text: str) -> CellSet:
    """Parse the shared pattern format: n lines of n '#'/'.' characters."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty pattern")
    n = len(lines)
    bits = 0
    for r, line in enumerate(lines):
        if len(line) != n:
            raise ValueError(
                f"pattern is not square: line {r + 1} has {len(line)} of {n} columns"
            )
        for c, ch in enumerate(line):
            if ch == "#":
                bits |= 1 << (r * n + c)
            elif ch != ".":
                raise ValueError(f"bad pattern character {ch!r} at line {r + 1}")
    return CellSet(n, bits)


def format_pattern(cs: CellSet) -> str:
    """Render a cell set in the shared pattern format, newline-terminated."""
    n, bits = cs.n, cs.bits
    rows = []
    for r in range(n):
        row = bits >> (r * n)
        rows.append("".join("#" if (row >> c) & 1 else "." for c in range(n)))
    return "\n".join(rows) + "\n"


def format_pbm(cs: CellSet) -> str:
    """Render a cell set as an ASCII PBM (P1) image, set cells black."""
    n, bits = cs.n, cs.bits
    lines = [f"P1\n{n} {n}"]
    for r in range(n):
        row = bits >> (r * n)
        lines.append(" ".join("1" if (row >> c) & 1 else "0" for c in range(n)))
    return "\n".join(lines) + "\n"
