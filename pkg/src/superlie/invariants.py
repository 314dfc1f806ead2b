"""Isomorphism/degeneration invariants of a Lie superalgebra.

Everything here is a necessary condition for g degenerating to h and is
computed exactly: graded center and derived subalgebra, Gamma-vanishing,
(alpha,beta,gamma)-derivation dimensions, the orbit dimension, and the
maximal trivial graded subalgebra t(g).
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import SuperAlgebra, _is_zero
from .field import FieldElem, I, ONE, SQRT2, ZERO, format_elem
from .groebner import Poly, poly_from_terms, system_verdict
from .linalg import kernel, rank, rref


def center(g: SuperAlgebra):
    """Graded dimension of the center, with graded bases."""
    m, n = g.m, g.n
    even_rows = []  # columns: v_1..v_m, rows: all output coordinates
    for v in range(m):
        col = []
        for j in range(m):
            col.extend(g.c[v][j])
        for j in range(n):
            col.extend(g.rho[v][j])
        even_rows.append(col)
    even_basis = kernel(list(zip(*even_rows))) if m else []
    odd_rows = []
    for v in range(n):
        col = []
        for j in range(m):  # [f_v, e_j] = -rho[j][v]
            col.extend(g.rho[j][v])
        for j in range(n):
            col.extend(g.gamma[v][j])
        odd_rows.append(col)
    odd_basis = kernel(list(zip(*odd_rows))) if n else []
    return (len(even_basis), len(odd_basis)), (even_basis, odd_basis)


def derived(g: SuperAlgebra) -> Tuple[int, int]:
    """Graded dimension of [g, g]."""
    m, n = g.m, g.n
    even_rows = []
    for i in range(m):
        for j in range(i + 1, m):
            even_rows.append(list(g.c[i][j]))
    for i in range(n):
        for j in range(i, n):
            even_rows.append(list(g.gamma[i][j]))
    odd_rows = [list(g.rho[i][j]) for i in range(m) for j in range(n)]
    return (rank(even_rows) if even_rows else 0,
            rank(odd_rows) if odd_rows else 0)


def gamma_is_zero(g: SuperAlgebra) -> bool:
    return all(_is_zero(x) for row in g.gamma for v in row for x in v)


# -- (alpha,beta,gamma)-derivations -----------------------------------------


def _as_field(x) -> FieldElem:
    return x if isinstance(x, FieldElem) else FieldElem(x)


def abc_derivations(g: SuperAlgebra, alpha, beta, gamma, degree: int):
    """Dimension (with basis) of degree-`degree` (alpha,beta,gamma)-derivations.

    The defining equation, for homogeneous x, y:
        alpha * D[x,y] = beta * [Dx, y] + (-1)^(degree*|x|) * gamma * [x, Dy]
    evaluated on ALL ordered basis pairs (beta != gamma makes both orders
    informative).
    """
    alpha, beta, gamma = _as_field(alpha), _as_field(beta), _as_field(gamma)
    m, n = g.m, g.n
    d = m + n
    if degree == 0:
        # unknowns: A (m x m), D (n x n); elementary maps within parity
        unknowns = [("e", q, p) for q in range(m) for p in range(m)] + \
                   [("f", q, p) for q in range(n) for p in range(n)]
    else:
        # even -> odd (n x m) and odd -> even (m x n)
        unknowns = [("eo", q, p) for q in range(n) for p in range(m)] + \
                   [("oe", q, p) for q in range(m) for p in range(n)]
    if not unknowns:
        return 0, []

    vecs = [g.basis_vector(k) for k in range(d)]
    brackets = [[g.bracket(vecs[a], vecs[b]) for b in range(d)] for a in range(d)]

    def apply_elem(u, w):
        """Apply the elementary map u to graded vector w."""
        kind, q, p = u
        ev = [ZERO] * m
        od = [ZERO] * n
        if kind == "e":
            ev[q] = w[0][p]
        elif kind == "f":
            od[q] = w[1][p]
        elif kind == "eo":
            od[q] = w[0][p]
        else:
            ev[q] = w[1][p]
        return ev, od

    def elem_basis_index(u):
        kind, q, p = u
        if kind in ("e", "oe"):
            src = p if kind == "e" else m + p
            dst = q
        else:
            src = p if kind == "eo" else m + p
            dst = m + q
        return src, dst

    rows = []
    for a in range(d):
        pa = g.parity(a)
        sign = FieldElem((-1) ** (degree * pa))
        for b in range(d):
            # residual = alpha*D[a,b] - beta*[Da,b] - sign*gamma*[a,Db]
            # row block: one row per output coordinate
            block = [[ZERO] * len(unknowns) for _ in range(d)]
            for ui, u in enumerate(unknowns):
                src, dst = elem_basis_index(u)
                ev1, od1 = apply_elem(u, brackets[a][b])
                res_e = [alpha * x for x in ev1]
                res_o = [alpha * x for x in od1]
                if src == a:
                    br = brackets[dst][b]
                    res_e = [x - beta * y for x, y in zip(res_e, br[0])]
                    res_o = [x - beta * y for x, y in zip(res_o, br[1])]
                if src == b:
                    br = brackets[a][dst]
                    res_e = [x - sign * gamma * y for x, y in zip(res_e, br[0])]
                    res_o = [x - sign * gamma * y for x, y in zip(res_o, br[1])]
                for k in range(m):
                    block[k][ui] = res_e[k]
                for l in range(n):
                    block[m + l][ui] = res_o[l]
            rows.extend(r for r in block if any(not x.is_zero() for x in r))
    basis = kernel(rows) if rows else \
        [[ONE if i == j else ZERO for j in range(len(unknowns))]
         for i in range(len(unknowns))]
    return len(basis), basis


def der0_dim(g: SuperAlgebra) -> int:
    return abc_derivations(g, 1, 1, 1, 0)[0]


def orbit_dim(g: SuperAlgebra) -> int:
    return g.m ** 2 + g.n ** 2 - der0_dim(g)


# -- maximal trivial graded subalgebra ---------------------------------------


_WITNESS_GRID = [ZERO, ONE, -ONE, I, -I, FieldElem(2), ONE / 2, I / 2,
                 SQRT2, ONE + I]


def _echelon_patterns(total: int, k: int):
    """Column patterns: choose pivot rows for a k-dim subspace of C^total."""
    return itertools.combinations(range(total), k)


def _subspace_vars(pivots: Sequence[int], total: int, offset: int):
    """Basis columns in column-echelon form: pivot rows carry 1, rows below
    a pivot (not pivots themselves) carry variables.  Returns (columns,
    var_count): each column entry is either a FieldElem or ('var', idx)."""
    cols = []
    var_idx = offset
    for ci, p in enumerate(pivots):
        col = []
        for r in range(total):
            if r == p:
                col.append(ONE)
            elif r in pivots or r < p:
                col.append(ZERO)
            else:
                col.append(("var", var_idx))
                var_idx += 1
        cols.append(col)
    return cols, var_idx - offset


def _bracket_polys(g: SuperAlgebra, ecols, ocols, nvars) -> List[Poly]:
    """Quadratic equations: all brackets among subspace generators vanish."""
    m, n = g.m, g.n

    def entry_poly(e) -> Poly:
        if isinstance(e, tuple):
            mono = [0] * nvars
            mono[e[1]] = 1
            return {tuple(mono): ONE}
        if e.is_zero():
            return {}
        return {tuple([0] * nvars): e}

    from .groebner import poly_add, poly_mul, poly_scale

    gens = [("e", [entry_poly(x) for x in col]) for col in ecols] + \
           [("f", [entry_poly(x) for x in col]) for col in ocols]
    eqs: List[Poly] = []

    def tensor_rows(kind1, kind2):
        if kind1 == "e" and kind2 == "e":
            return g.c, m
        if kind1 == "f" and kind2 == "f":
            return g.gamma, m
        return None, n

    for i1, (k1, v1) in enumerate(gens):
        for i2, (k2, v2) in enumerate(gens):
            if i2 < i1:
                continue
            if k1 == "e" and k2 == "e" and i1 == i2:
                continue
            out_dim = m if k1 == k2 else n
            acc = [dict() for _ in range(out_dim)]
            dim1 = m if k1 == "e" else n
            dim2 = m if k2 == "e" else n
            for a in range(dim1):
                pa = v1[a]
                if not pa:
                    continue
                for b in range(dim2):
                    pb = v2[b]
                    if not pb:
                        continue
                    if k1 == "e" and k2 == "e":
                        coefs = g.c[a][b]
                    elif k1 == "f" and k2 == "f":
                        coefs = g.gamma[a][b]
                    elif k1 == "e":
                        coefs = g.rho[a][b]
                    else:  # f, e
                        coefs = [-x for x in g.rho[b][a]]
                    prod = poly_mul(pa, pb)
                    for k, cf in enumerate(coefs):
                        if not _is_zero(cf):
                            acc[k] = poly_add(acc[k], poly_scale(prod, cf))
            eqs.extend(p for p in acc if p)
    return eqs


def _poly_eval(p: Poly, point: Sequence[FieldElem]) -> FieldElem:
    total = ZERO
    for mono, cf in p.items():
        term = cf
        for v, expt in enumerate(mono):
            for _ in range(expt):
                term = term * point[v]
        total = total + term
    return total


def _search_witness(eqs: List[Poly], nvars: int) -> Optional[List[FieldElem]]:
    """Small grid search for a common zero (only used to upgrade Unknown)."""
    if nvars > 4:
        return None
    for point in itertools.product(_WITNESS_GRID, repeat=nvars):
        if all(_poly_eval(p, point).is_zero() for p in eqs):
            return list(point)
    return None


def trivial_shape_exists(g: SuperAlgebra, a: int, b: int) -> Optional[bool]:
    """Does a trivial graded subalgebra of shape (a|b) exist?  None=unknown."""
    m, n = g.m, g.n
    any_unknown = False
    for epiv in _echelon_patterns(m, a):
        ecols, ev = _subspace_vars(epiv, m, 0)
        for opiv in _echelon_patterns(n, b):
            ocols, ov = _subspace_vars(opiv, n, ev)
            nvars = ev + ov
            eqs = _bracket_polys(g, ecols, ocols, max(nvars, 1))
            if not eqs:
                return True
            verdict = system_verdict(eqs)
            if verdict == "nonempty":
                return True
            if verdict == "unknown":
                if _search_witness(eqs, nvars) is not None:
                    return True
                any_unknown = True
    return None if any_unknown else False


def trivial_sub_max(g: SuperAlgebra) -> Dict:
    """t(g): maximal total dimension of a trivial graded subalgebra."""
    m, n = g.m, g.n
    profile = []
    best = 0
    unknown_above = False
    for a in range(m + 1):
        for b in range(n + 1):
            if a + b == 0:
                continue
            res = trivial_shape_exists(g, a, b)
            if res is True:
                profile.append((a, b))
                best = max(best, a + b)
            elif res is None:
                unknown_above = True
    exact: Optional[int] = best
    if unknown_above:
        # only honest if no undecided shape could beat the max
        undecided_max = max((a + b for a in range(m + 1) for b in range(n + 1)
                             if a + b > 0 and (a, b) not in profile
                             and trivial_shape_exists(g, a, b) is None),
                            default=0)
        if undecided_max > best:
            exact = None
    return {"lower": best, "exact": exact, "graded_profile": sorted(profile)}


# -- the full report -----------------------------------------------------------


ABC_TUPLES = [(1, 1, 1), (0, 1, 0), (0, 1, -1)]


def invariant_report(g: SuperAlgebra, with_trivial: bool = True) -> Dict:
    zdim, _ = center(g)
    ddim = derived(g)
    d0 = der0_dim(g)
    abc = {}
    for tup in ABC_TUPLES:
        for deg in (0, 1):
            abc[f"({tup[0]},{tup[1]},{tup[2]})@{deg}"] = \
                abc_derivations(g, *tup, deg)[0]
    report = {
        "name": g.name,
        "shape": [g.m, g.n],
        "center": list(zdim),
        "derived": list(ddim),
        "gamma_zero": gamma_is_zero(g),
        "der0_dim": d0,
        "orbit_dim": g.m ** 2 + g.n ** 2 - d0,
        "abc_entries": abc,
    }
    if with_trivial:
        t = trivial_sub_max(g)
        report["trivial_max"] = {"lower": t["lower"], "exact": t["exact"]}
        report["trivial_graded_profile"] = [list(p) for p in t["graded_profile"]]
    return report
