"""Eigenvalues of threshold hypergraph adjacency matrices.

Two routes are implemented.  The closed route reads eigenvalues off the
creation sequence: every block of b >= 2 equal consecutive bits contributes
the negated pair count of its leading twin vertices with multiplicity
b - 1, and the remaining r eigenvalues come from the r x r quotient matrix
of block row sums, made symmetric by a similarity scaling.  The numeric
route diagonalizes the full n x n matrix directly.  Both share one dense
symmetric eigensolver, a deterministic cyclic Jacobi iteration, and must
agree to tight tolerance; the test-suite sweeps that agreement
exhaustively on small instances.
"""

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

from .combinatorics import as_float, binomial
from .errors import (
    ConvergenceError,
    DisconnectedError,
    ResourceLimitError,
    SequenceError,
)
from .hypergraph import ThresholdHypergraph
from .sequences import (
    BinarySequence,
    ShortSequence,
    count_valid_sequences,
    format_binary,
    iter_valid_sequences,
    to_binary,
    to_short,
)

__all__ = [
    "DEFAULT_SEQUENCE_BUDGET",
    "BlockEigenvalue",
    "EigenPair",
    "Spectrum",
    "QuotientMatrix",
    "ScanRow",
    "pair_edges_ending_in_block",
    "pair_edges_within_ones_block",
    "block_eigenvalues",
    "quotient_matrix",
    "symmetrize_quotient",
    "jacobi_eigenvalues",
    "full_spectrum_closed",
    "full_spectrum_numeric",
    "family_sequence",
    "family_spectrum_symbolic",
    "scan_quotient_simplicity",
]

#: Default cap on the number of sequences a sweep may visit.
DEFAULT_SEQUENCE_BUDGET = 100_000


def pair_edges_ending_in_block(ss: ShortSequence, block: int) -> int:
    """Edges through two fixed earlier vertices that peak inside `block`.

    For a vertex pair living before the block, an edge ending at position
    p inside it needs k-3 more vertices below p, so each position
    contributes binomial(p-3, k-3).  Positions too early to host an edge
    contribute zero through the binomial conventions, which also covers
    the merged first run.  Meaningful when `block` is a ones block; the
    sum is evaluated as is for any block index.
    """
    lo = ss.prefix_sum(block - 1)
    hi = ss.prefix_sum(block)
    return sum(binomial(p - 3, ss.k - 3) for p in range(lo + 1, hi + 1))


def pair_edges_within_ones_block(ss: ShortSequence, block: int) -> int:
    """Edges through the leading twins of ones block `block` that also peak
    inside it.

    Equal to binomial(P - 2, k - 2) with P the last position of the block:
    interchangeability of the block's vertices lets every such edge be
    counted as one peaking at P and containing the block's first vertex.
    """
    return binomial(ss.prefix_sum(block) - 2, ss.k - 2)


@dataclass(frozen=True)
class BlockEigenvalue:
    """One closed-form eigenvalue with its guaranteed multiplicity."""

    value: int
    multiplicity_lower_bound: int
    block_index: int
    source: str


def block_eigenvalues(ss: ShortSequence) -> list[BlockEigenvalue]:
    """Closed-form eigenvalues contributed by blocks of size >= 2.

    Each qualifying block j yields -(pair count of its first two vertices)
    with multiplicity a_j - 1.  The pair count is assembled from the block
    formulas (later ones blocks, plus the within-block term for ones
    blocks) and cross-checked against the direct closed-form pair count;
    the two routes are independent and a mismatch is a bug, not bad input.
    """
    if not ss.connected:
        raise DisconnectedError(
            "disconnected sequence: closed-form eigenvalues need the last "
            "creation bit to be 1"
        )
    h = ThresholdHypergraph(to_binary(ss))
    ones_blocks = [j for j in range(1, ss.r + 1) if ss.block_is_ones(j)]
    out = []
    first = 1
    for j, size in enumerate(ss.runs, start=1):
        s = first
        first += size
        if size < 2:
            continue
        later = sum(
            pair_edges_ending_in_block(ss, j2) for j2 in ones_blocks if j2 > j
        )
        own = pair_edges_within_ones_block(ss, j) if ss.block_is_ones(j) else 0
        value = -(later + own)
        direct = -h.pair_count(s, s + 1)
        if value != direct:
            raise RuntimeError(
                f"internal: block {j} formula gives {value} but the direct "
                f"pair count gives {direct} on {format_binary(h.sequence)}"
            )
        if ss.first_run_has_ones and j == 1:
            tag = "merged-block"
        elif ss.block_is_ones(j):
            tag = "ones-block"
        else:
            tag = "zeros-block"
        out.append(BlockEigenvalue(value, size - 1, j, tag))
    return out


@dataclass(frozen=True)
class QuotientMatrix:
    """Block row sums of the adjacency matrix, one row per block.

    Generally asymmetric, but balanced: entries[i][j] * a_i counts the
    edge incidences between blocks i and j and equals entries[j][i] * a_j.
    """

    entries: tuple[tuple[int, ...], ...]
    block_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries)
        )
        object.__setattr__(self, "block_sizes", tuple(int(a) for a in self.block_sizes))
        r = len(self.block_sizes)
        if len(self.entries) != r or any(len(row) != r for row in self.entries):
            raise ValueError("quotient matrix shape must match the block count")
        if any(a < 1 for a in self.block_sizes):
            raise ValueError("block sizes must be positive")
        for i in range(r):
            for j in range(r):
                lhs = self.entries[i][j] * self.block_sizes[i]
                rhs = self.entries[j][i] * self.block_sizes[j]
                if lhs != rhs:
                    raise ValueError(
                        f"unbalanced quotient: entry ({i},{j}) weighted {lhs} "
                        f"vs ({j},{i}) weighted {rhs}"
                    )

    @property
    def r(self) -> int:
        return len(self.block_sizes)


def quotient_matrix(h: ThresholdHypergraph) -> QuotientMatrix:
    """Collapse the adjacency matrix along the block partition.

    Within a block every column is constant off the diagonal, so block row
    sums do not depend on which row of the block is read; that constancy
    is verified here rather than assumed.
    """
    ss = to_short(h.sequence)
    rows = h.adjacency().entries
    cuts = [0] + list(accumulate(ss.runs))
    entries = []
    for bi in range(ss.r):
        i0, i1 = cuts[bi], cuts[bi + 1]
        sums = [
            [sum(rows[p][cuts[bj] : cuts[bj + 1]]) for bj in range(ss.r)]
            for p in range(i0, i1)
        ]
        if any(s != sums[0] for s in sums[1:]):
            raise RuntimeError(
                f"internal: block {bi + 1} rows collapse unevenly on "
                f"{format_binary(h.sequence)}"
            )
        entries.append(tuple(sums[0]))
    return QuotientMatrix(tuple(entries), tuple(ss.runs))


def symmetrize_quotient(q: QuotientMatrix) -> list[list[float]]:
    """Similar symmetric matrix sqrt(a_i/a_j) * q_ij; same eigenvalues.

    The balance identity makes the two mirror expressions equal in exact
    arithmetic; entries are computed once and mirrored so the result is
    symmetric to the bit.
    """
    r = q.r
    out = [[0.0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            scale = math.sqrt(q.block_sizes[i] / q.block_sizes[j])
            out[i][j] = out[j][i] = scale * as_float(q.entries[i][j])
    return out


def jacobi_eigenvalues(
    matrix: Sequence[Sequence[float]],
    tol: float = 1e-12,
    max_sweeps: int = 100,
) -> list[float]:
    """All eigenvalues of a symmetric matrix, sorted descending.

    Cyclic-by-row Jacobi rotations; a sweep visits every upper off-diagonal
    entry in a fixed order, so identical inputs give identical output.
    Converged when the off-diagonal Frobenius norm drops below tol times
    the Frobenius norm of the input.
    """
    n = len(matrix)
    a = [[float(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return []
    norm = math.sqrt(sum(x * x for row in a for x in row))
    scale = max(1.0, norm)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > 1e-12 * scale:
                raise ValueError(f"matrix is not symmetric at ({i},{j})")
            a[i][j] = a[j][i] = 0.5 * (a[i][j] + a[j][i])
    for _ in range(max_sweeps):
        off = math.sqrt(
            2.0 * sum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n))
        )
        if off <= tol * norm:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                tau = (a[q][q] - a[p][p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    # rotation angle is tiny; avoid overflow in tau*tau
                    t = 1.0 / (2.0 * tau)
                elif tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = a[q][p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip, aiq = a[i][p], a[i][q]
                    a[i][p] = a[p][i] = c * aip - s * aiq
                    a[i][q] = a[q][i] = s * aip + c * aiq
    raise ConvergenceError(
        f"jacobi iteration did not converge in {max_sweeps} sweeps"
    )


@dataclass(frozen=True)
class EigenPair:
    value: float
    multiplicity: int
    source: str


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted descending."""

    pairs: tuple[EigenPair, ...]
    merge_tol: float

    @property
    def distinct_count(self) -> int:
        return len(self.pairs)

    def total_multiplicity(self) -> int:
        return sum(p.multiplicity for p in self.pairs)

    def expanded(self) -> list[float]:
        """Every eigenvalue repeated by multiplicity, descending."""
        out = []
        for p in self.pairs:
            out.extend([p.value] * p.multiplicity)
        return out


def _merge_entries(
    entries: Iterable[tuple[float, int, str]], tol: float
) -> tuple[EigenPair, ...]:
    """Cluster (value, multiplicity, source) triples within tol of the
    cluster anchor.  Exact block values win as representatives; otherwise
    the multiplicity-weighted mean is used."""
    ordered = sorted(entries, key=lambda t: -t[0])
    clusters: list[list[tuple[float, int, str]]] = []
    for item in ordered:
        if clusters and clusters[-1][0][0] - item[0] <= tol:
            clusters[-1].append(item)
        else:
            clusters.append([item])
    pairs = []
    for members in clusters:
        total = sum(m for _, m, _ in members)
        exact = [v for v, _, src in members if src.startswith("block")]
        if exact:
            rep = exact[0]
        else:
            rep = sum(v * m for v, m, _ in members) / total
        sources: list[str] = []
        for _, _, src in members:
            if src not in sources:
                sources.append(src)
        pairs.append(EigenPair(rep, total, "+".join(sources)))
    return tuple(pairs)


def full_spectrum_closed(
    h: ThresholdHypergraph, merge_tol: float = 1e-9
) -> Spectrum:
    """Complete spectrum from block eigenvalues plus the quotient.

    Blocks of size a_j contribute a_j - 1 eigenvalues each and the
    quotient contributes r, which accounts for all n.  Values closer than
    merge_tol are reported once with summed multiplicity.
    """
    if not h.sequence.connected:
        raise DisconnectedError(
            "disconnected sequence: the closed-form spectrum needs the last "
            "creation bit to be 1"
        )
    ss = to_short(h.sequence)
    entries = [
        (as_float(b.value), b.multiplicity_lower_bound, f"block{b.block_index}")
        for b in block_eigenvalues(ss)
    ]
    entries.extend(
        (v, 1, "quotient")
        for v in jacobi_eigenvalues(symmetrize_quotient(quotient_matrix(h)))
    )
    pairs = _merge_entries(entries, merge_tol)
    total = sum(p.multiplicity for p in pairs)
    if total != h.n:
        raise RuntimeError(
            f"internal: multiplicities sum to {total}, expected {h.n}"
        )
    return Spectrum(pairs, merge_tol)


def full_spectrum_numeric(
    h: ThresholdHypergraph,
    cluster_tol: float | None = None,
    adjacency=None,
) -> Spectrum:
    """Spectrum of the full adjacency matrix by direct diagonalization.

    Oracle for the closed route.  `adjacency` may inject a matrix obtained
    elsewhere (tests pass the brute-force recount so the routes share no
    combinatorics).  The clustering tolerance defaults to 1e-6 times the
    Frobenius norm.
    """
    mat = adjacency if adjacency is not None else h.adjacency()
    rows = mat.to_float_rows()
    values = jacobi_eigenvalues(rows)
    if cluster_tol is None:
        norm = math.sqrt(sum(x * x for row in rows for x in row))
        cluster_tol = max(1e-6 * norm, 1e-12)
    pairs = _merge_entries([(v, 1, "numeric") for v in values], cluster_tol)
    return Spectrum(pairs, cluster_tol)


def family_sequence(
    family: int, n: int, k: int, j: int | None = None
) -> ShortSequence:
    """Short sequence of one of the three catalogued families.

    Family 1: a lone pseudodominant after n-1 silent vertices.
    Family 2: pseudodominants from position j through n (needs j).
    Family 3: a k-clique head, a silent middle, one late pseudodominant.
    Boundary cases that set bit k (family 1 with n = k, family 2 with
    j = k) collapse to the complete hypergraph, a single merged run.
    """
    if k < 2:
        raise SequenceError(f"uniformity must be at least 2, got {k}")
    if family == 1:
        if n < k:
            raise SequenceError(f"family 1 needs n >= k, got n={n}, k={k}")
        if n == k:
            return ShortSequence(k, (n,), first_run_has_ones=True)
        return ShortSequence(k, (n - 1, 1))
    if family == 2:
        if j is None:
            raise SequenceError("family 2 needs the first pseudodominant position j")
        if not k <= j <= n - 1:
            raise SequenceError(
                f"family 2 needs k <= j <= n-1, got j={j}, n={n}, k={k}"
            )
        if j == k:
            return ShortSequence(k, (n,), first_run_has_ones=True)
        return ShortSequence(k, (j - 1, n - j + 1))
    if family == 3:
        if n < k + 2:
            raise SequenceError(f"family 3 needs n >= k+2, got n={n}, k={k}")
        return ShortSequence(k, (k, n - k - 1, 1), first_run_has_ones=True)
    raise SequenceError(f"unknown family {family}; expected 1, 2 or 3")


def _monic_quadratic_roots(b: int, c: int) -> list[float]:
    """Real roots of x^2 + b x + c, descending; exact integer discriminant."""
    disc = b * b - 4 * c
    if disc < 0:
        raise RuntimeError("internal: quotient quadratic has complex roots")
    root = math.sqrt(as_float(disc))
    head = -0.5 * (as_float(b) + math.copysign(root, as_float(b)))
    if head == 0.0:
        return [0.0, 0.0]
    return sorted([head, as_float(c) / head], reverse=True)


def family_spectrum_symbolic(
    family: int,
    n: int,
    k: int,
    j: int | None = None,
    merge_tol: float = 1e-9,
) -> Spectrum:
    """Spectrum of a family member from its catalogued closed forms.

    The two-run families get their quotient eigenvalues from an explicit
    quadratic; family 3 symmetrizes its 3 x 3 quotient and reuses the
    Jacobi path.  Complete-hypergraph boundaries fall back to the general
    closed route.  Always agrees with `full_spectrum_closed`.
    """
    ss = family_sequence(family, n, k, j)
    if ss.r == 1:
        return full_spectrum_closed(ThresholdHypergraph(to_binary(ss)), merge_tol)
    a_cnt = binomial(n - 3, k - 3)
    b_cnt = binomial(n - 2, k - 2)
    entries: list[tuple[float, int, str]] = []
    if family == 1:
        entries.append((as_float(-a_cnt), n - 2, "block1"))
        roots = _monic_quadratic_roots(-a_cnt * (n - 2), -b_cnt * b_cnt * (n - 1))
    elif family == 2:
        q = n - j + 1
        a_cnt = sum(binomial(n - (i + 2), k - 3) for i in range(1, q + 1))
        entries.append((as_float(-a_cnt), j - 2, "block1"))
        entries.append((as_float(-b_cnt), q - 1, "block2"))
        lin = -(a_cnt * (n - q - 1) + b_cnt * (q - 1))
        const = a_cnt * (n - q - 1) * b_cnt * (q - 1) - b_cnt * b_cnt * q * (n - q)
        roots = _monic_quadratic_roots(lin, const)
    else:
        entries.append((as_float(-(a_cnt + 1)), k - 1, "block1"))
        if n - k - 2 >= 1:
            entries.append((as_float(-a_cnt), n - k - 2, "block2"))
        quotient = QuotientMatrix(
            (
                ((a_cnt + 1) * (k - 1), a_cnt * (n - k - 1), b_cnt),
                (a_cnt * k, a_cnt * (n - k - 2), b_cnt),
                (b_cnt * k, b_cnt * (n - k - 1), 0),
            ),
            (k, n - k - 1, 1),
        )
        roots = jacobi_eigenvalues(symmetrize_quotient(quotient))
    entries.extend((v, 1, "quotient") for v in roots)
    pairs = _merge_entries(entries, merge_tol)
    total = sum(p.multiplicity for p in pairs)
    if total != n:
        raise RuntimeError(
            f"internal: family multiplicities sum to {total}, expected {n}"
        )
    return Spectrum(pairs, merge_tol)


@dataclass(frozen=True)
class ScanRow:
    sequence: str
    n: int
    k: int
    r: int
    min_quotient_gap: float
    flagged: bool


def scan_quotient_simplicity(
    n_max: int,
    k_values: Iterable[int],
    tol: float = 1e-9,
    budget: int = DEFAULT_SEQUENCE_BUDGET,
) -> list[ScanRow]:
    """Minimum quotient eigenvalue gap for every connected sequence.

    A row is flagged when two quotient eigenvalues sit closer than tol,
    i.e. the quotient fails to separate them numerically.  Single-block
    sequences report an infinite gap.
    """
    k_set = sorted({k for k in k_values})
    total = count_valid_sequences(n_max, k_set, connected_only=True)
    if total > budget:
        raise ResourceLimitError(
            f"scan would visit {total} sequences, over the budget of {budget}"
        )
    out = []
    for k in k_set:
        for n in range(k, n_max + 1):
            for s in iter_valid_sequences(n, k, connected_only=True):
                h = ThresholdHypergraph(s)
                values = jacobi_eigenvalues(symmetrize_quotient(quotient_matrix(h)))
                if len(values) > 1:
                    gap = min(
                        values[i] - values[i + 1] for i in range(len(values) - 1)
                    )
                else:
                    gap = math.inf
                out.append(
                    ScanRow(
                        sequence=format_binary(s),
                        n=n,
                        k=k,
                        r=len(values),
                        min_quotient_gap=gap,
                        flagged=gap < tol,
                    )
                )
    return out
