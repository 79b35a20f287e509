"""NSY algebras: endomorphism algebras of multiplicity-weighted projective sums
over a cyclic bound quiver algebra.

The underlying quiver is an n-cycle with arrows i -> i+1 (mod n) and all paths
of length >= ell killed.  For multiplicities (m_0, ..., m_{n-1}) the algebra
B_{n,ell}(m_0, ..., m_{n-1}) has basis X[i,j]^(r,s) indexed by a start vertex
i, a path length 0 <= j <= ell-1, and copy indices r < m_i, s < m_{(i+j) % n};
X[i,j]^(r,s) is pre-composition by the length-j path starting at i, mapping
copy s of the projective at vertex i+j into copy r of the projective at i.

Two independent constructions are provided: structure constants from the
closed product formula (nsy_build) and explicit endomorphism matrices on the
path basis composed and re-expanded in the X basis (nsy_build_oracle).  They
must agree constant-by-constant.

The comultiplication makes every such algebra non-counital Frobenius; a counit
exists exactly when m_i = m_{(i + ell - 1) % n} for all i, in which case it is
eps(X[i,j]^(r,s)) = [j == ell-1][r == s].
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InputError, InternalConsistencyError
from .exactlin import Mat, ONE, Vec
from .finalg import AlgebraData, ComultData

__all__ = [
    "NSYParams",
    "NSYBasisIndex",
    "PathBasisIndex",
    "basis_indices",
    "basis_label",
    "nsy_dimension",
    "nakayama_permutation",
    "is_frobenius",
    "nsy_build",
    "nsy_build_oracle",
    "nsy_delta",
    "counit_candidate",
    "nsy_epsilon",
    "multiplication_table",
    "markdown_mult_table",
    "csv_mult_table",
    "delta_terms",
    "markdown_delta_table",
    "csv_delta_table",
    "sweep_params",
]


@dataclass(frozen=True)
class NSYParams:
    """Vertex count n >= 1, nilpotency bound ell >= 1, multiplicities m_i >= 1."""

    n: int
    ell: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"need n >= 1, got {self.n}")
        if self.ell < 1:
            raise InputError(f"need ell >= 1, got {self.ell}")
        if len(self.mults) != self.n:
            raise InputError(
                f"need {self.n} multiplicities, got {len(self.mults)}"
            )
        if any(m < 1 for m in self.mults):
            raise InputError("multiplicities must be >= 1")

    def mult_at(self, vertex: int) -> int:
        return self.mults[vertex % self.n]


class NSYBasisIndex(NamedTuple):
    i: int  # start vertex
    j: int  # path length
    r: int  # copy index at vertex i
    s: int  # copy index at vertex (i + j) % n


class PathBasisIndex(NamedTuple):
    i: int  # start vertex
    k: int  # path length
    r: int  # copy index at vertex i


def basis_indices(p: NSYParams) -> list[NSYBasisIndex]:
    """All basis labels in the canonical lexicographic (i, j, r, s) order."""
    out = []
    for i in range(p.n):
        for j in range(p.ell):
            for r in range(p.mults[i]):
                for s in range(p.mult_at(i + j)):
                    out.append(NSYBasisIndex(i, j, r, s))
    return out


def basis_label(idx: NSYBasisIndex) -> str:
    return f"X[{idx.i},{idx.j}]^({idx.r},{idx.s})"


def nsy_dimension(p: NSYParams) -> int:
    """sum_i sum_{j < ell} m_i * m_{(i+j) % n}."""
    return sum(
        p.mults[i] * p.mult_at(i + j) for i in range(p.n) for j in range(p.ell)
    )


def nakayama_permutation(p: NSYParams) -> list[int]:
    """The permutation i -> (i + ell - 1) mod n matching socles to tops."""
    return [(i + p.ell - 1) % p.n for i in range(p.n)]


def is_frobenius(p: NSYParams) -> bool:
    """True iff m_i = m_{nu(i)} for every vertex i."""
    return all(p.mults[i] == p.mult_at(i + p.ell - 1) for i in range(p.n))


def _position_map(p: NSYParams) -> tuple[list[NSYBasisIndex], dict[NSYBasisIndex, int]]:
    basis = basis_indices(p)
    return basis, {idx: pos for pos, idx in enumerate(basis)}


def nsy_build(p: NSYParams) -> AlgebraData:
    """Structure constants from the closed product formula.

    X[i,j]^(r,s) * X[a,b]^(r',s') = X[i,j+b]^(r,s') when a = i+j (mod n),
    r' = s and j+b < ell, and 0 otherwise.  The unit is the sum of all
    X[i,0]^(r,r).
    """
    basis, pos = _position_map(p)
    dim = len(basis)
    mult = {}
    for p1, x in enumerate(basis):
        end = (x.i + x.j) % p.n
        for p2, y in enumerate(basis):
            if y.i != end or y.r != x.s or x.j + y.j >= p.ell:
                continue
            target = NSYBasisIndex(x.i, x.j + y.j, x.r, y.s)
            mult[(p1, p2)] = Vec.basis(dim, pos[target])
    unit = Vec(
        dim,
        [
            (pos[NSYBasisIndex(i, 0, r, r)], ONE)
            for i in range(p.n)
            for r in range(p.mults[i])
        ],
    )
    return AlgebraData(dim, [basis_label(b) for b in basis], mult, unit)


def path_basis(p: NSYParams) -> list[PathBasisIndex]:
    return [
        PathBasisIndex(i, k, r)
        for i in range(p.n)
        for k in range(p.ell)
        for r in range(p.mults[i])
    ]


def endomorphism_matrix(p: NSYParams, idx: NSYBasisIndex, pos: dict) -> Mat:
    """X[i,j]^(r,s) as a linear endomorphism of the total path space.

    It sends the path of length k starting at vertex i+j in copy s to the
    path of length j+k starting at i in copy r (zero once j+k exceeds
    ell-1), and kills every other path basis vector.
    """
    n_paths = len(pos)
    src_vertex = (idx.i + idx.j) % p.n
    entries = []
    for k in range(p.ell - idx.j):
        row = pos[PathBasisIndex(idx.i, idx.j + k, idx.r)]
        col = pos[PathBasisIndex(src_vertex, k, idx.s)]
        entries.append((row, col, ONE))
    return Mat(n_paths, n_paths, entries)


def nsy_build_oracle(p: NSYParams) -> AlgebraData:
    """Independent construction through explicit path-space endomorphisms.

    Products are computed by composing matrices and re-expanding in the X
    basis.  Each X[i,j]^(r,s) is the unique basis endomorphism with a nonzero
    entry at (path(i,j,r), path(i+j,0,s)), which makes the expansion a direct
    coefficient read-off; the re-expansion is then verified entry by entry.
    """
    basis, xpos = _position_map(p)
    dim = len(basis)
    ppos = {idx: k for k, idx in enumerate(path_basis(p))}
    mats = [endomorphism_matrix(p, idx, ppos) for idx in basis]

    witness_cells = [
        (
            ppos[PathBasisIndex(idx.i, idx.j, idx.r)],
            ppos[PathBasisIndex((idx.i + idx.j) % p.n, 0, idx.s)],
        )
        for idx in basis
    ]

    def expand(mat: Mat) -> Vec:
        coeffs = {}
        for k, (row, col) in enumerate(witness_cells):
            v = mat.entry(row, col)
            if v:
                coeffs[k] = v
        recon = Mat(mat.nrows, mat.ncols)
        for k, v in coeffs.items():
            recon = recon + mats[k].scale(v)
        if recon != mat:
            raise InternalConsistencyError(
                "endomorphism not in the span of the X basis"
            )
        return Vec(dim, coeffs)

    mult = {}
    for a in range(dim):
        for b in range(dim):
            prod = expand(mats[a] @ mats[b])
            if not prod.is_zero():
                mult[(a, b)] = prod
    unit = expand(Mat.identity(len(ppos)))
    return AlgebraData(dim, [basis_label(x) for x in basis], mult, unit)


def delta_terms(
    p: NSYParams, idx: NSYBasisIndex
) -> list[tuple[NSYBasisIndex, NSYBasisIndex]]:
    """Tensor terms of Delta(X[i,j]^(r,s)), each with coefficient 1.

    Delta(X[i,j]^(r,s)) sums X[i,j+k]^(r,t) (x) X[i+j+k-ell+1, ell-1-k]^(t',s)
    over 0 <= k <= ell-1-j, where t runs over the copies at vertex i+j+k and
    t' over the copies at vertex i+j+k-ell+1; when those two multiplicities
    are equal only the diagonal t = t' survives, otherwise all pairs appear.
    """
    terms = []
    for k in range(p.ell - idx.j):
        u = (idx.i + idx.j + k) % p.n
        v = (idx.i + idx.j + k - p.ell + 1) % p.n
        left_len = idx.j + k
        right_len = p.ell - 1 - k
        if p.mults[u] == p.mults[v]:
            pairs = [(t, t) for t in range(p.mults[u])]
        else:
            pairs = [
                (t, t2) for t in range(p.mults[u]) for t2 in range(p.mults[v])
            ]
        for t, t2 in pairs:
            terms.append(
                (
                    NSYBasisIndex(idx.i, left_len, idx.r, t),
                    NSYBasisIndex(v, right_len, t2, idx.s),
                )
            )
    return terms


def nsy_delta(p: NSYParams, algebra: AlgebraData | None = None) -> ComultData:
    """The non-counital Frobenius comultiplication; counit left empty."""
    if algebra is None:
        algebra = nsy_build(p)
    basis, pos = _position_map(p)
    dim = len(basis)
    entries = []
    for col, idx in enumerate(basis):
        for left, right in delta_terms(p, idx):
            entries.append((pos[left] * dim + pos[right], col, ONE))
    return ComultData(algebra, Mat(dim * dim, dim, entries))


def counit_candidate(p: NSYParams) -> Vec:
    """The closed-form functional eps(X[i,j]^(r,s)) = [j == ell-1][r == s].

    This is a genuine counit exactly in the Frobenius case; applying it
    anyway to a non-Frobenius instance exhibits the counitality failure.
    """
    basis, _ = _position_map(p)
    return Vec(
        len(basis),
        [
            (k, ONE)
            for k, idx in enumerate(basis)
            if idx.j == p.ell - 1 and idx.r == idx.s
        ],
    )


def nsy_epsilon(p: NSYParams) -> Vec | None:
    """The counit when the algebra is Frobenius, else None."""
    return counit_candidate(p) if is_frobenius(p) else None


def multiplication_table(p: NSYParams) -> list[list[str]]:
    """Product table cells in canonical order; each cell a label or "0"."""
    alg = nsy_build(p)
    table = []
    for i in range(alg.dim):
        row = []
        for j in range(alg.dim):
            prod = alg.basis_product(i, j)
            items = prod.items()
            if not items:
                row.append("0")
            else:
                (k, v), = items
                row.append(alg.labels[k] if v == ONE else f"{v}*{alg.labels[k]}")
        table.append(row)
    return table


def markdown_mult_table(p: NSYParams) -> str:
    alg_labels = [basis_label(b) for b in basis_indices(p)]
    cells = multiplication_table(p)
    lines = ["| * | " + " | ".join(alg_labels) + " |"]
    lines.append("| --- |" + " --- |" * len(alg_labels))
    for label, row in zip(alg_labels, cells):
        lines.append("| " + label + " | " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def csv_mult_table(p: NSYParams) -> str:
    labels = [basis_label(b) for b in basis_indices(p)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["*"] + labels)
    for label, row in zip(labels, multiplication_table(p)):
        writer.writerow([label] + row)
    return buf.getvalue()


def format_delta(p: NSYParams, idx: NSYBasisIndex) -> str:
    terms = delta_terms(p, idx)
    if not terms:
        return "0"
    return " + ".join(
        f"{basis_label(left)} (x) {basis_label(right)}" for left, right in terms
    )


def markdown_delta_table(p: NSYParams) -> str:
    lines = ["| element | Delta(element) |", "| --- | --- |"]
    for idx in basis_indices(p):
        lines.append(f"| {basis_label(idx)} | {format_delta(p, idx)} |")
    return "\n".join(lines) + "\n"


def csv_delta_table(p: NSYParams) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["element", "left", "right", "coeff"])
    for idx in basis_indices(p):
        for left, right in delta_terms(p, idx):
            writer.writerow(
                [basis_label(idx), basis_label(left), basis_label(right), "1"]
            )
    return buf.getvalue()


def _mult_vectors(k: int, mmax: int):
    if k == 0:
        yield ()
        return
    for rest in _mult_vectors(k - 1, mmax):
        for m in range(1, mmax + 1):
            yield rest + (m,)


def sweep_params(nmax: int, lmax: int, mmax: int) -> list[NSYParams]:
    """All parameter tuples with n <= nmax, ell <= lmax, 1 <= m_i <= mmax,
    in lexicographic order."""
    if nmax < 1 or lmax < 1 or mmax < 1:
        raise InputError("sweep bounds must be >= 1")
    return [
        NSYParams(n, ell, mults)
        for n in range(1, nmax + 1)
        for ell in range(1, lmax + 1)
        for mults in _mult_vectors(n, mmax)
    ]
