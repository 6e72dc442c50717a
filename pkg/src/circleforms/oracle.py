"""Brute-force conjugator search, independent of the decision procedure.

Between two twist matrices M and M' the conjugation condition
N * M = M' * gamma(N) is linear over Q in the coefficients of N once real
and imaginary parts are separated, because gamma conjugates coefficients
(it is conjugate-linear, not linear).  Both twists here have real entries,
so the split is block-diagonal: writing N = U + i*V with real polynomial
matrices U and V,

    U * M = M' * swap(U)      and      V * M = -M' * swap(V),

where swap is the galois rearrangement without conjugation.  Each block is
an exact rational nullspace computation.

The search is a semi-decision: degree of N is capped and the base rescaling
r ranges over a finite grid, so emptiness never certifies inequivalence by
itself.  Membership filtering (det a nonzero constant) is a quadratic
condition, so the affine solution set is scanned rather than solved: single
basis vectors and +-1 combinations of up to two of them.  That scan is a
heuristic, but every candidate that survives it is verified exactly before
being returned, so false positives are impossible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .forms import FormSpec, make_twist, splitting_entries
from .gaussian import GaussianRational, Rational
from .laurent import LaurentPoly
from .matrices import Membership, StructuredMatrix

VarLabel = tuple[str, int, str]  # (entry P/Q/S/R, exponent, "re" or "im")

ENTRIES = ("P", "Q", "S", "R")


@dataclass
class LinearSystem:
    """Rows of exact rational coefficients, a right-hand side, and a label
    for each column saying which matrix coefficient it stands for."""

    rows: list[list[Fraction]]
    rhs: list[Fraction]
    labels: list[VarLabel]

    def __post_init__(self):
        if len(self.rows) != len(self.rhs):
            raise ValueError("row/rhs length mismatch")
        width = len(self.labels)
        if any(len(r) != width for r in self.rows):
            raise ValueError("row width does not match labels")


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [row[:] for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        if inv != 1:
            work[r] = [v * inv for v in work[r]]
        lead = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                row = work[i]
                work[i] = [a - f * b if b else a for a, b in zip(row, lead)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def nullspace(system: LinearSystem) -> list[list[Fraction]]:
    """Basis of the solution space of the homogeneous system; every returned
    vector multiplies back to an exactly-zero residual."""
    if any(system.rhs):
        raise ValueError("nullspace is defined for a homogeneous system")
    ncols = len(system.labels)
    rref_rows, pivots = _rref(system.rows, ncols)
    pivot_set = set(pivots)
    basis = []
    zero = Fraction(0)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = Fraction(1)
        for row, p in zip(rref_rows, pivots):
            if row[free]:
                vec[p] = -row[free]
        basis.append(vec)
    return basis


def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction],
                 ncols: int) -> Optional[list[Fraction]]:
    """One exact solution of rows * x = rhs (free variables set to 0),
    or None when the system is inconsistent."""
    augmented = [row + [b] for row, b in zip(rows, rhs)]
    rref_rows, pivots = _rref(augmented, ncols + 1)
    zero = Fraction(0)
    solution = [zero] * ncols
    for row, p in zip(rref_rows, pivots):
        if p == ncols:  # pivot in the rhs column: the system is inconsistent
            return None
        solution[p] = row[ncols]
    return solution


def _real_entry_coeffs(p: LaurentPoly, name: str) -> dict[int, Fraction]:
    coeffs = {}
    for e, c in p.items():
        if not c.is_real:
            raise ValueError(f"{name} must be real for the split search")
        coeffs[e] = Fraction(c.re)
    return coeffs


def _conjugation_block(m_src: StructuredMatrix, m_dst: StructuredMatrix,
                       deg_bound: int, sign: int,
                       component: str) -> LinearSystem:
    """Equations for X * M_src = sign * M_dst * swap(X) with X a real
    polynomial structured matrix of entry degree <= deg_bound."""
    e = m_src.e
    width = deg_bound + 1
    labels: list[VarLabel] = [(entry, j, component) for entry in ENTRIES for j in range(width)]
    var = {(entry, j): ENTRIES.index(entry) * width + j for entry in ENTRIES for j in range(width)}

    src = {name: _real_entry_coeffs(p, f"source {name}")
           for name, p in zip(ENTRIES, m_src.entries())}
    dst = {name: _real_entry_coeffs(p, f"target {name}")
           for name, p in zip(ENTRIES, m_dst.entries())}

    # X * M_src entries, with X = (p, q, s, r) unknown:
    #   P: p*P + T^e q*S      Q: p*Q + q*R
    #   S: s*P + r*S          R: T^e s*Q + r*R
    # sign * M_dst * swap(X), swap(X) = (r, s, q, p):
    #   P: P'*r + T^e Q'*q    Q: P'*s + Q'*p
    #   S: S'*r + R'*q        R: T^e S'*s + R'*p
    terms = {
        "P": [("P", src["P"], 1, 0), ("Q", src["S"], 1, e),
              ("R", dst["P"], -sign, 0), ("Q", dst["Q"], -sign, e)],
        "Q": [("P", src["Q"], 1, 0), ("Q", src["R"], 1, 0),
              ("S", dst["P"], -sign, 0), ("P", dst["Q"], -sign, 0)],
        "S": [("S", src["P"], 1, 0), ("R", src["S"], 1, 0),
              ("R", dst["S"], -sign, 0), ("Q", dst["R"], -sign, 0)],
        "R": [("S", src["Q"], 1, e), ("R", src["R"], 1, 0),
              ("S", dst["S"], -sign, e), ("P", dst["R"], -sign, 0)],
    }

    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for entry, products in terms.items():
        by_exponent: dict[int, dict[int, Fraction]] = {}
        for unknown, known, factor, shift in products:
            for j in range(width):
                col = var[(unknown, j)]
                for k, coeff in known.items():
                    t = j + k + shift
                    row = by_exponent.setdefault(t, {})
                    row[col] = row.get(col, zero) + factor * coeff
        for t in sorted(by_exponent):
            dense = [zero] * len(labels)
            nonzero = False
            for col, coeff in by_exponent[t].items():
                if coeff:
                    dense[col] = coeff
                    nonzero = True
            if nonzero:
                rows.append(dense)
    return LinearSystem(rows=rows, rhs=[zero] * len(rows), labels=labels)


def _vector_to_entries(vec: Sequence[Fraction], deg_bound: int) -> list[dict[int, Fraction]]:
    width = deg_bound + 1
    out = []
    for idx in range(4):
        out.append({j: vec[idx * width + j] for j in range(width) if vec[idx * width + j]})
    return out


def _build_matrix(e: int, re_vec: Optional[Sequence[Fraction]],
                  im_vec: Optional[Sequence[Fraction]], deg_bound: int) -> StructuredMatrix:
    res = [{} for _ in range(4)]
    if re_vec is not None:
        for idx, coeffs in enumerate(_vector_to_entries(re_vec, deg_bound)):
            for j, c in coeffs.items():
                res[idx][j] = GaussianRational(c)
    if im_vec is not None:
        for idx, coeffs in enumerate(_vector_to_entries(im_vec, deg_bound)):
            for j, c in coeffs.items():
                cur = res[idx].get(j, GaussianRational(0))
                res[idx][j] = GaussianRational(cur.re, c)
    polys = [LaurentPoly(terms) for terms in res]
    return StructuredMatrix(e, *polys)


def verify_conjugation(candidate: StructuredMatrix, m_src: StructuredMatrix,
                       m_dst: StructuredMatrix) -> bool:
    """Exact check that candidate lies in the polynomial group and
    N * M_src * (gamma N)^-1 = M_dst."""
    if candidate.membership() is not Membership.LAMBDA:
        return False
    try:
        galois_inverse = candidate.galois().inverse()
    except ValueError:
        return False
    return candidate * m_src * galois_inverse == m_dst


def conjugators_between(m_src: StructuredMatrix, m_dst: StructuredMatrix,
                        deg_bound: int) -> list[StructuredMatrix]:
    """All verified conjugators found by the bounded-degree nullspace scan."""
    if m_src.e != m_dst.e:
        raise ValueError("cross-exponent mismatch")
    re_basis = nullspace(_conjugation_block(m_src, m_dst, deg_bound, +1, "re"))
    im_basis = nullspace(_conjugation_block(m_src, m_dst, deg_bound, -1, "im"))

    candidates: list[tuple[Optional[list[Fraction]], Optional[list[Fraction]]]] = []
    for u in re_basis:
        candidates.append((u, None))
    for v in im_basis:
        candidates.append((None, v))

    def add_vec(a, b, flip):
        return [x + (-y if flip else y) for x, y in zip(a, b)]

    for i in range(len(re_basis)):
        for j in range(i + 1, len(re_basis)):
            for flip in (False, True):
                candidates.append((add_vec(re_basis[i], re_basis[j], flip), None))
    for i in range(len(im_basis)):
        for j in range(i + 1, len(im_basis)):
            for flip in (False, True):
                candidates.append((None, add_vec(im_basis[i], im_basis[j], flip)))
    for u in re_basis:
        for v in im_basis:
            for flip in (False, True):
                candidates.append((u, [-x for x in v] if flip else v))

    found = []
    seen = set()
    for re_vec, im_vec in candidates:
        matrix = _build_matrix(m_src.e, re_vec, im_vec, deg_bound)
        det = matrix.det()
        if det.is_zero or not det.is_constant:
            continue
        if matrix in seen:
            continue
        if verify_conjugation(matrix, m_src, m_dst):
            seen.add(matrix)
            found.append(matrix)
    return found


def worker_count() -> int:
    """Parallelism cap from the REALFORMS_THREADS environment variable."""
    try:
        value = int(os.environ.get("REALFORMS_THREADS", "1"))
    except ValueError:
        return 1
    return max(value, 1)


def _search_one(args):
    h, h2, m, deg_bound, r = args
    h_target = h2.apply_scaling(r)
    m_src = make_twist(FormSpec(m, h))
    m_dst = make_twist(FormSpec(m, h_target))
    return [(r, matrix) for matrix in conjugators_between(m_src, m_dst, deg_bound)]


def search_conjugator(h: LaurentPoly, h2: LaurentPoly, m: int, deg_bound: int,
                      r_grid: Sequence[Rational]) -> list[tuple[Rational, StructuredMatrix]]:
    """For each r in the grid, search for N with N*M_h = M_h''*gamma(N) where
    h'' = r*h2(r^2 T), degree of N capped at deg_bound.  Every result is
    exactly verified; an empty list is a valid (non-)finding."""
    if deg_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    grid = [Fraction(r) for r in r_grid]
    if not grid or any(not r for r in grid):
        raise ValueError("r_grid must be nonempty with nonzero entries")
    jobs = [(h, h2, m, deg_bound, r) for r in grid]
    threads = worker_count()
    if threads > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            per_r = list(pool.map(_search_one, jobs))
    else:
        per_r = [_search_one(job) for job in jobs]
    results = []
    for chunk in per_r:
        results.extend(chunk)
    return results


def proof_conditions(h: LaurentPoly, h_target: LaurentPoly, m: int,
                     alpha: GaussianRational) -> bool:
    """The two polynomiality conditions that characterize when a bounded
    diagonal gauge alpha produces a polynomial conjugator between the twists
    of h and h_target (h_target already includes any base rescaling):

        alpha * q_{h''} - conj(alpha) * q_h       is a polynomial, and
        alpha * s_h * r_{h''} - conj(alpha) * r_h * s_{h''}  is a polynomial.

    A third, independent route to the equivalence verdict, scanned over a
    grid of alpha by the tests.
    """
    if alpha.is_zero:
        raise ValueError("alpha must be nonzero")
    q_h, s_h, r_h = splitting_entries(FormSpec(m, h))
    q_t, s_t, r_t = splitting_entries(FormSpec(m, h_target))
    bar_alpha = alpha.conjugate()
    cond_q = q_t * alpha - q_h * bar_alpha
    cond_s = (s_h * r_t) * alpha - (r_h * s_t) * bar_alpha
    return cond_q.is_polynomial and cond_s.is_polynomial
