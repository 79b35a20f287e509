"""Finite-dimensional algebras with comultiplications, and their axiom checkers.

An algebra is given by structure constants on a chosen basis.  A candidate
comultiplication is a linear map into the tensor square (stored as a matrix
with row-major pair flattening) plus an optional counit functional.  Nothing
is assumed about supplied data: the check_* operations verify associativity,
unitality, coassociativity, the bimodule compatibility

    (id (x) m)(Delta (x) id) = Delta m = (m (x) id)(id (x) Delta),

and the Casimir property of a candidate Delta(1).  A comultiplication can be
built from any Casimir element, and counits are found by exact linear
solving, so the layer works for arbitrary user-supplied data.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError
from .exactlin import (
    Mat,
    ONE,
    Vec,
    ZERO,
    LinearSystem,
    scalar_from_str,
    scalar_to_str,
)

__all__ = [
    "AlgebraData",
    "ComultData",
    "CasimirElement",
    "Witness",
    "CheckResult",
    "VerificationReport",
    "Classification",
    "ClassifyOutcome",
    "check_algebra",
    "check_coassoc",
    "check_bimodule",
    "check_casimir",
    "casimir_comult",
    "solve_counit",
    "solve_counit_full",
    "eps_tensor_id",
    "id_tensor_eps",
    "classify",
    "classify_report",
    "permute_basis",
    "tensor_power_mul",
    "comult_to_json",
    "comult_from_json",
    "comult_to_json_str",
]


class AlgebraData:
    """A unital algebra by structure constants.

    ``mult`` maps a basis pair (i, j) to the product vector e_i * e_j; absent
    keys mean the product is zero.  Associativity and unitality are not
    assumed; run :func:`check_algebra`.
    """

    def __init__(self, dim: int, labels: list[str], mult: dict, unit: Vec):
        if dim < 1:
            raise InputError("algebra dimension must be >= 1")
        if len(labels) != dim:
            raise InputError(f"expected {dim} labels, got {len(labels)}")
        if unit.dim != dim:
            raise InputError("unit vector dimension mismatch")
        clean: dict[tuple[int, int], Vec] = {}
        for (i, j), vec in mult.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InputError(f"structure constant index ({i}, {j}) out of range")
            if vec.dim != dim:
                raise InputError(f"product vector for ({i}, {j}) has wrong dimension")
            if not vec.is_zero():
                clean[(i, j)] = vec
        self.dim = dim
        self.labels = list(labels)
        self.mult = clean
        self.unit = unit
        self._zero = Vec(dim)
        self._monomial_table: list[list[int]] | None | bool = False  # False = unknown

    def basis_product(self, i: int, j: int) -> Vec:
        return self.mult.get((i, j), self._zero)

    def mul(self, x: Vec, y: Vec) -> Vec:
        """Bilinear extension of the structure constants."""
        acc: dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.mult.get((i, j))
                if prod is None:
                    continue
                c = a * b
                for k, v in prod.items():
                    w = acc.get(k, ZERO) + c * v
                    if w:
                        acc[k] = w
                    else:
                        del acc[k]
        out = Vec(self.dim)
        out._e = acc
        return out

    def left_mult_matrix(self, x: Vec) -> Mat:
        cols = [self.mul(x, Vec.basis(self.dim, j)) for j in range(self.dim)]
        return Mat.from_columns(self.dim, cols)

    def right_mult_matrix(self, x: Vec) -> Mat:
        cols = [self.mul(Vec.basis(self.dim, j), x) for j in range(self.dim)]
        return Mat.from_columns(self.dim, cols)

    def monomial_table(self) -> list[list[int]] | None:
        """Product table as indices when every basis product is 0 or a single
        basis element with coefficient 1; None otherwise."""
        if self._monomial_table is not False:
            return self._monomial_table
        table: list[list[int]] = [[-1] * self.dim for _ in range(self.dim)]
        ok = True
        for (i, j), vec in self.mult.items():
            items = vec.items()
            if len(items) != 1 or items[0][1] != ONE:
                ok = False
                break
            table[i][j] = items[0][0]
        self._monomial_table = table if ok else None
        return self._monomial_table


class ComultData:
    """A candidate comultiplication (and optional counit) on an algebra.

    ``delta`` is a (dim^2 x dim) matrix whose column j is Delta(e_j) under
    row-major flattening of pairs: flat = p * dim + q for e_p (x) e_q.
    """

    def __init__(self, algebra: AlgebraData, delta: Mat, counit: Vec | None = None):
        d = algebra.dim
        if (delta.nrows, delta.ncols) != (d * d, d):
            raise InputError(
                f"delta must be {d * d}x{d}, got {delta.nrows}x{delta.ncols}"
            )
        if counit is not None and counit.dim != d:
            raise InputError("counit dimension mismatch")
        self.algebra = algebra
        self.delta = delta
        self.counit = counit
        self._cols: list[list[tuple[int, int, Fraction]]] | None = None

    def delta_of(self, x: Vec) -> Vec:
        return self.delta.matvec(x)

    def delta_pairs(self, j: int) -> list[tuple[int, int, Fraction]]:
        """Column j of delta as (p, q, coeff) tensor terms, ascending."""
        if self._cols is None:
            d = self.algebra.dim
            cols = [[] for _ in range(d)]
            for flat, c, v in ((r, c, v) for r, c, v in self.delta.items()):
                cols[c].append((flat // d, flat % d, v))
            self._cols = cols
        return self._cols[j]


@dataclass(frozen=True)
class CasimirElement:
    """Candidate Casimir tensor sum_i a_i (x) b_i, stored over dim^2."""

    algebra: AlgebraData
    element: Vec

    def __post_init__(self):
        d = self.algebra.dim
        if self.element.dim != d * d:
            raise InputError("Casimir element must live in the tensor square")


@dataclass(frozen=True)
class Witness:
    """Both sides of a failed identity at a specific basis multi-index."""

    indices: tuple[int, ...]
    lhs: Vec
    rhs: Vec
    note: str = ""

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "lhs": [[k, scalar_to_str(v)] for k, v in self.lhs.items()],
            "rhs": [[k, scalar_to_str(v)] for k, v in self.rhs.items()],
            "note": self.note,
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Witness | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            state = "PASS" if c.passed else "FAIL"
            line = f"[{state}] {c.name}"
            if c.witness is not None:
                line += f"  at {c.witness.indices}"
                if c.witness.note:
                    line += f" ({c.witness.note})"
            out.append(line)
        return out

    def to_json(self) -> list[dict]:
        return [
            {
                "check": c.name,
                "passed": c.passed,
                "witness": c.witness.to_json() if c.witness else None,
            }
            for c in self.checks
        ]


class Classification(enum.Enum):
    FROBENIUS = "Frobenius"
    NON_COUNITAL_ONLY = "NonCounitalOnly"
    NOT_FROBENIUS_STRUCTURE = "NotFrobeniusStructure"


def _scalar_witness(indices, lhs: Fraction, rhs: Fraction, note="") -> Witness:
    return Witness(tuple(indices), Vec(1, {0: lhs}), Vec(1, {0: rhs}), note)


def check_algebra(a: AlgebraData) -> VerificationReport:
    """Associativity over all basis triples and two-sided unitality."""
    d = a.dim
    checks = []

    assoc_witness = None
    table = a.monomial_table()
    if table is not None:
        for i in range(d):
            ti = table[i]
            for j in range(d):
                ij = ti[j]
                tj = table[j]
                row_ij = table[ij] if ij >= 0 else None
                for k in range(d):
                    lhs = row_ij[k] if row_ij is not None else -1
                    jk = tj[k]
                    rhs = ti[jk] if jk >= 0 else -1
                    if lhs != rhs:
                        assoc_witness = Witness(
                            (i, j, k),
                            a.mul(a.basis_product(i, j), Vec.basis(d, k)),
                            a.mul(Vec.basis(d, i), a.basis_product(j, k)),
                            "(e_i e_j) e_k != e_i (e_j e_k)",
                        )
                        break
                if assoc_witness:
                    break
            if assoc_witness:
                break
    else:
        basis = [Vec.basis(d, k) for k in range(d)]
        for i in range(d):
            for j in range(d):
                pij = a.basis_product(i, j)
                for k in range(d):
                    lhs = a.mul(pij, basis[k])
                    rhs = a.mul(basis[i], a.basis_product(j, k))
                    if lhs != rhs:
                        assoc_witness = Witness(
                            (i, j, k), lhs, rhs, "(e_i e_j) e_k != e_i (e_j e_k)"
                        )
                        break
                if assoc_witness:
                    break
            if assoc_witness:
                break
    checks.append(CheckResult("associativity", assoc_witness is None, assoc_witness))

    left_witness = None
    right_witness = None
    for k in range(d):
        ek = Vec.basis(d, k)
        lhs = a.mul(a.unit, ek)
        if left_witness is None and lhs != ek:
            left_witness = Witness((k,), lhs, ek, "1 * e_k != e_k")
        rhs = a.mul(ek, a.unit)
        if right_witness is None and rhs != ek:
            right_witness = Witness((k,), rhs, ek, "e_k * 1 != e_k")
    checks.append(CheckResult("unit_left", left_witness is None, left_witness))
    checks.append(CheckResult("unit_right", right_witness is None, right_witness))
    return VerificationReport(tuple(checks))


def check_coassoc(c: ComultData) -> VerificationReport:
    """Compare (Delta (x) id) Delta with (id (x) Delta) Delta exactly."""
    d = c.algebra.dim
    witness = None
    for j in range(d):
        lhs_acc: dict[int, Fraction] = {}
        rhs_acc: dict[int, Fraction] = {}
        for p, q, v in c.delta_pairs(j):
            for x, y, w in c.delta_pairs(p):
                flat = (x * d + y) * d + q
                s = lhs_acc.get(flat, ZERO) + v * w
                if s:
                    lhs_acc[flat] = s
                else:
                    del lhs_acc[flat]
            for x, y, w in c.delta_pairs(q):
                flat = (p * d + x) * d + y
                s = rhs_acc.get(flat, ZERO) + v * w
                if s:
                    rhs_acc[flat] = s
                else:
                    del rhs_acc[flat]
        if lhs_acc != rhs_acc:
            lhs = Vec(d * d * d)
            lhs._e = lhs_acc
            rhs = Vec(d * d * d)
            rhs._e = rhs_acc
            witness = Witness((j,), lhs, rhs, "(Delta(x)id)Delta != (id(x)Delta)Delta")
            break
    return VerificationReport(
        (CheckResult("coassociativity", witness is None, witness),)
    )


def check_bimodule(c: ComultData) -> VerificationReport:
    """Both bimodule equalities:

    right: (id (x) m)(Delta (x) id)(x (x) y) = Delta(xy)
    left:  (m (x) id)(id (x) Delta)(x (x) y) = Delta(xy)
    """
    a = c.algebra
    d = a.dim
    right_witness = None
    left_witness = None
    basis = [Vec.basis(d, k) for k in range(d)]
    for i in range(d):
        pairs_i = c.delta_pairs(i)
        for j in range(d):
            target = c.delta_of(a.basis_product(i, j))
            if right_witness is None:
                acc: dict[int, Fraction] = {}
                for p, q, v in pairs_i:
                    prod = a.mul(basis[q], basis[j])
                    for k, w in prod.items():
                        flat = p * d + k
                        s = acc.get(flat, ZERO) + v * w
                        if s:
                            acc[flat] = s
                        else:
                            del acc[flat]
                lhs = Vec(d * d)
                lhs._e = acc
                if lhs != target:
                    right_witness = Witness(
                        (i, j), lhs, target, "(id(x)m)(Delta(x)id) != Delta m"
                    )
            if left_witness is None:
                acc = {}
                for p, q, v in c.delta_pairs(j):
                    prod = a.mul(basis[i], basis[p])
                    for k, w in prod.items():
                        flat = k * d + q
                        s = acc.get(flat, ZERO) + v * w
                        if s:
                            acc[flat] = s
                        else:
                            del acc[flat]
                lhs = Vec(d * d)
                lhs._e = acc
                if lhs != target:
                    left_witness = Witness(
                        (i, j), lhs, target, "(m(x)id)(id(x)Delta) != Delta m"
                    )
            if right_witness is not None and left_witness is not None:
                break
        if right_witness is not None and left_witness is not None:
            break
    return VerificationReport(
        (
            CheckResult("bimodule_right", right_witness is None, right_witness),
            CheckResult("bimodule_left", left_witness is None, left_witness),
        )
    )


def check_casimir(cas: CasimirElement) -> VerificationReport:
    """Verify sum_i a_i (x) b_i x = sum_i x a_i (x) b_i for every basis x."""
    a = cas.algebra
    d = a.dim
    terms = [(flat // d, flat % d, v) for flat, v in cas.element.items()]
    witness = None
    basis = [Vec.basis(d, k) for k in range(d)]
    for x in range(d):
        lhs_acc: dict[int, Fraction] = {}
        rhs_acc: dict[int, Fraction] = {}
        for p, q, v in terms:
            for k, w in a.mul(basis[q], basis[x]).items():
                flat = p * d + k
                s = lhs_acc.get(flat, ZERO) + v * w
                if s:
                    lhs_acc[flat] = s
                else:
                    del lhs_acc[flat]
            for k, w in a.mul(basis[x], basis[p]).items():
                flat = k * d + q
                s = rhs_acc.get(flat, ZERO) + v * w
                if s:
                    rhs_acc[flat] = s
                else:
                    del rhs_acc[flat]
        if lhs_acc != rhs_acc:
            lhs = Vec(d * d)
            lhs._e = lhs_acc
            rhs = Vec(d * d)
            rhs._e = rhs_acc
            witness = Witness((x,), lhs, rhs, "a_i (x) b_i x != x a_i (x) b_i")
            break
    return VerificationReport((CheckResult("casimir", witness is None, witness),))


def casimir_comult(cas: CasimirElement) -> ComultData:
    """Comultiplication Delta(x) = sum_i a_i (x) b_i x from a Casimir element.

    Raises PreconditionError (carrying the witness) when the Casimir identity
    fails, since the construction is only coassociative and bimodule-linear
    for genuine Casimir elements.
    """
    report = check_casimir(cas)
    if not report.passed:
        raise PreconditionError(
            "element fails the Casimir identity", report.failures()[0].witness
        )
    a = cas.algebra
    d = a.dim
    terms = [(flat // d, flat % d, v) for flat, v in cas.element.items()]
    entries = []
    basis = [Vec.basis(d, k) for k in range(d)]
    for j in range(d):
        for p, q, v in terms:
            for k, w in a.mul(basis[q], basis[j]).items():
                entries.append((p * d + k, j, v * w))
    return ComultData(a, Mat(d * d, d, entries))


def _counit_system(c: ComultData) -> LinearSystem:
    d = c.algebra.dim
    sys_ = LinearSystem(d)
    # (eps (x) id) Delta(e_j) = e_j: for each output coordinate q,
    # sum_p delta[(p,q), j] eps_p = [q == j]
    for j in range(d):
        by_q: dict[int, dict[int, Fraction]] = {}
        by_p: dict[int, dict[int, Fraction]] = {}
        for p, q, v in c.delta_pairs(j):
            row_q = by_q.setdefault(q, {})
            row_q[p] = row_q.get(p, ZERO) + v
            row_p = by_p.setdefault(p, {})
            row_p[q] = row_p.get(q, ZERO) + v
        for q in range(d):
            coeffs = by_q.get(q, {})
            rhs = ONE if q == j else ZERO
            if coeffs or rhs:
                sys_.add(coeffs, rhs, tag=("left", j, q))
        for p in range(d):
            coeffs = by_p.get(p, {})
            rhs = ONE if p == j else ZERO
            if coeffs or rhs:
                sys_.add(coeffs, rhs, tag=("right", j, p))
    return sys_


@dataclass(frozen=True)
class CounitSolution:
    epsilon: Vec | None
    unique: bool
    witness: Witness | None


def eps_tensor_id(c: ComultData, eps: Vec) -> Mat:
    """Matrix of x -> (eps (x) id) Delta(x); equals the identity iff eps is a
    left counit."""
    d = c.algebra.dim
    entries = []
    for j in range(d):
        for p, q, v in c.delta_pairs(j):
            w = eps.get(p)
            if w:
                entries.append((q, j, v * w))
    return Mat(d, d, entries)


def id_tensor_eps(c: ComultData, eps: Vec) -> Mat:
    d = c.algebra.dim
    entries = []
    for j in range(d):
        for p, q, v in c.delta_pairs(j):
            w = eps.get(q)
            if w:
                entries.append((p, j, v * w))
    return Mat(d, d, entries)


def solve_counit_full(c: ComultData) -> CounitSolution:
    """Solve both counit identities as one exact linear system.

    Returns the unique solution when it exists; for a consistent but
    underdetermined system returns the free-variables-zero solution with
    ``unique=False``.  When no counit exists, the witness reports the first
    basis element where the best-effort candidate fails either identity.
    """
    sys_ = _counit_system(c)
    if sys_.consistent:
        eps = sys_.partial_solution()
        unique = sys_.rank == c.algebra.dim
        return CounitSolution(eps, unique, None)
    cand = sys_.partial_solution()
    d = c.algebra.dim
    left = eps_tensor_id(c, cand)
    right = id_tensor_eps(c, cand)
    witness = None
    for j in range(d):
        ej = Vec.basis(d, j)
        lcol = left.col(j)
        if lcol != ej:
            witness = Witness((j,), lcol, ej, "(eps(x)id)Delta(e_j) != e_j for best candidate")
            break
        rcol = right.col(j)
        if rcol != ej:
            witness = Witness((j,), rcol, ej, "(id(x)eps)Delta(e_j) != e_j for best candidate")
            break
    return CounitSolution(None, False, witness)


def solve_counit(c: ComultData) -> Vec | None:
    """Counit functional for Delta, or None when none exists."""
    return solve_counit_full(c).epsilon


@dataclass(frozen=True)
class ClassifyOutcome:
    classification: Classification
    report: VerificationReport
    counit: Vec | None
    counit_unique: bool
    counit_witness: Witness | None


def classify_report(c: ComultData) -> ClassifyOutcome:
    """Full classification with the axiom report and counit information.

    The report carries only structural axiom checks; absence of a counit is
    conveyed through the classification, not as a failed check.
    """
    report = (
        check_algebra(c.algebra)
        .merged(check_coassoc(c))
        .merged(check_bimodule(c))
    )
    structural = all(
        r.passed
        for r in report.checks
        if r.name in ("coassociativity", "bimodule_right", "bimodule_left")
    )
    if not structural:
        return ClassifyOutcome(
            Classification.NOT_FROBENIUS_STRUCTURE, report, None, False, None
        )
    sol = solve_counit_full(c)
    cls = (
        Classification.FROBENIUS
        if sol.epsilon is not None
        else Classification.NON_COUNITAL_ONLY
    )
    return ClassifyOutcome(cls, report, sol.epsilon, sol.unique, sol.witness)


def classify(c: ComultData) -> Classification:
    return classify_report(c).classification


def tensor_power_mul(a: AlgebraData, u: Vec, v: Vec, factors: int) -> Vec:
    """Componentwise product in the tensor power algebra A^{(x) factors}."""
    d = a.dim
    size = d**factors
    if u.dim != size or v.dim != size:
        raise InputError("tensor power dimension mismatch")

    def split(flat):
        out = []
        for _ in range(factors):
            flat, r = divmod(flat, d)
            out.append(r)
        return tuple(reversed(out))

    acc: dict[int, Fraction] = {}
    for fu, cu in u.items():
        iu = split(fu)
        for fv, cv in v.items():
            iv = split(fv)
            comps = [a.basis_product(iu[t], iv[t]) for t in range(factors)]
            if any(comp.is_zero() for comp in comps):
                continue
            coeff = cu * cv

            def expand(t, flat, running):
                if t == factors:
                    w = acc.get(flat, ZERO) + running
                    if w:
                        acc[flat] = w
                    else:
                        del acc[flat]
                    return
                for k, ck in comps[t].items():
                    expand(t + 1, flat * d + k, running * ck)

            expand(0, 0, coeff)
    out = Vec(size)
    out._e = acc
    return out


def permute_basis(c: ComultData, perm: list[int]) -> ComultData:
    """Relabel the basis: new position k holds old basis element perm[k].

    All structure data (products, unit, delta, counit) is conjugated by the
    permutation, so the result is the same algebra with a reordered basis.
    """
    a = c.algebra
    d = a.dim
    if sorted(perm) != list(range(d)):
        raise InputError("perm must be a permutation of the basis indices")
    ipos = [0] * d
    for new, old in enumerate(perm):
        ipos[old] = new

    def relabel(vec: Vec) -> Vec:
        return Vec(d, {ipos[k]: v for k, v in vec.items()})

    new_mult = {}
    for (i, j), vec in a.mult.items():
        new_mult[(ipos[i], ipos[j])] = relabel(vec)
    new_alg = AlgebraData(
        d, [a.labels[old] for old in perm], new_mult, relabel(a.unit)
    )
    entries = []
    for k in range(d):
        for p, q, v in c.delta_pairs(perm[k]):
            entries.append((ipos[p] * d + ipos[q], k, v))
    new_delta = Mat(d * d, d, entries)
    new_counit = None
    if c.counit is not None:
        new_counit = Vec(d, {ipos[k]: v for k, v in c.counit.items()})
    return ComultData(new_alg, new_delta, new_counit)


# JSON exchange format:
# {"dim": n, "labels": [...], "mult": [[i, j, k, "p/q"], ...],
#  "unit": [[k, "p/q"], ...], "delta": [[i, t, "p/q"], ...],
#  "counit": [[k, "p/q"], ...]}
# where t is a row-major flattened pair index and counit is optional.


def _vec_to_json(v: Vec) -> list:
    return [[k, scalar_to_str(x)] for k, x in v.items()]


def _vec_from_json(data, dim: int) -> Vec:
    try:
        return Vec(dim, [(int(k), scalar_from_str(x)) for k, x in data])
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad vector entries: {exc}") from None


def comult_to_json(c: ComultData) -> dict:
    a = c.algebra
    mult_entries = []
    for (i, j) in sorted(a.mult):
        for k, v in a.mult[(i, j)].items():
            mult_entries.append([i, j, k, scalar_to_str(v)])
    delta_entries = []
    for t, col, v in c.delta.items():
        delta_entries.append([col, t, scalar_to_str(v)])
    delta_entries.sort(key=lambda e: (e[0], e[1]))
    payload = {
        "dim": a.dim,
        "labels": list(a.labels),
        "mult": mult_entries,
        "unit": _vec_to_json(a.unit),
        "delta": delta_entries,
    }
    if c.counit is not None:
        payload["counit"] = _vec_to_json(c.counit)
    return payload


def comult_to_json_str(c: ComultData) -> str:
    return json.dumps(comult_to_json(c), indent=2, sort_keys=True) + "\n"


def comult_from_json(payload: dict) -> ComultData:
    try:
        dim = int(payload["dim"])
        labels = [str(x) for x in payload["labels"]]
        mult_raw = payload["mult"]
        unit_raw = payload["unit"]
        delta_raw = payload["delta"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"missing or malformed field: {exc}") from None
    mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in mult_raw:
        try:
            i, j, k, v = entry
        except ValueError:
            raise InputError(f"bad mult entry {entry!r}") from None
        mult.setdefault((int(i), int(j)), {})[int(k)] = scalar_from_str(v)
    mult_vecs = {key: Vec(dim, e) for key, e in mult.items()}
    unit = _vec_from_json(unit_raw, dim)
    algebra = AlgebraData(dim, labels, mult_vecs, unit)
    delta_entries = []
    for entry in delta_raw:
        try:
            i, t, v = entry
        except ValueError:
            raise InputError(f"bad delta entry {entry!r}") from None
        delta_entries.append((int(t), int(i), scalar_from_str(v)))
    delta = Mat(dim * dim, dim, delta_entries)
    counit = None
    if "counit" in payload and payload["counit"] is not None:
        counit = _vec_from_json(payload["counit"], dim)
    return ComultData(algebra, delta, counit)
