"""Even adjoint 2-cohomology (H^2(g,g))_0.

An even 2-cochain phi is stored as three tensors mirroring the bracket:
phi_ee (m x m -> m, antisymmetric), phi_ef (m x n -> n), phi_ff
(n x n -> m, symmetric).  The differential convention (validated against
every cocycle the catalog's source lists) is, for homogeneous x,y,z:

    d2 phi(x,y,z) = [x, phi(y,z)] - (-1)^(|x||y|) [y, phi(x,z)]
                  + (-1)^(|z|(|x|+|y|)) [z, phi(x,y)]
                  - phi([x,y], z) + (-1)^(|y||z|) phi([x,z], y)
                  + phi(x, [y,z]).

Cocycles print/parse in the compact notation "e1*^e2*@e1" for
e_1^* wedge e_2^* tensor e_1; a term "f1*^f1*@e1" means
phi(f1,f1) = e1 (coefficient 1, diagonal included).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import SuperAlgebra, _is_zero
from .field import FieldElem, ONE, ZERO, format_elem, parse_elem
from .linalg import kernel, rank, rref


class Cochain2Even:
    __slots__ = ("m", "n", "ee", "ef", "ff")

    def __init__(self, m, n, ee, ef, ff):
        self.m, self.n = m, n
        self.ee = tuple(tuple(tuple(v) for v in row) for row in ee)
        self.ef = tuple(tuple(tuple(v) for v in row) for row in ef)
        self.ff = tuple(tuple(tuple(v) for v in row) for row in ff)
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    if not _is_zero(self.ee[i][j][k] + self.ee[j][i][k]):
                        raise ValueError("phi_ee must be antisymmetric")
        for i in range(n):
            for j in range(n):
                for k in range(m):
                    if not _is_zero(self.ff[i][j][k] - self.ff[j][i][k]):
                        raise ValueError("phi_ff must be symmetric")

    @staticmethod
    def zero(m: int, n: int) -> "Cochain2Even":
        return Cochain2Even(
            m, n,
            [[[ZERO] * m for _ in range(m)] for _ in range(m)],
            [[[ZERO] * n for _ in range(n)] for _ in range(m)],
            [[[ZERO] * m for _ in range(n)] for _ in range(n)])

    def value(self, a: int, b: int):
        """phi on basis indices (0-based, odd indices offset by m), as a
        graded vector."""
        m, n = self.m, self.n
        even = [ZERO] * m
        odd = [ZERO] * n
        if a < m and b < m:
            even = list(self.ee[a][b])
        elif a < m <= b:
            odd = list(self.ef[a][b - m])
        elif b < m <= a:
            odd = [-x for x in self.ef[b][a - m]]
        else:
            even = list(self.ff[a - m][b - m])
        return even, odd


# -- the fixed flat basis of even 2-cochains ---------------------------------


def cochain_basis_index(m: int, n: int):
    """Slots in the fixed lexicographic order; returns the slot list."""
    slots = []
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(m):
                slots.append(("ee", i, j, k))
    for i in range(m):
        for j in range(n):
            for l in range(n):
                slots.append(("ef", i, j, l))
    for i in range(n):
        for j in range(i, n):
            for k in range(m):
                slots.append(("ff", i, j, k))
    return slots


def cochain_dim(m: int, n: int) -> int:
    return m * (m * (m - 1) // 2) + n * m * n + m * (n * (n + 1) // 2)


def cochain_to_vector(phi: Cochain2Even) -> List[FieldElem]:
    out = []
    for slot in cochain_basis_index(phi.m, phi.n):
        kind, i, j, k = slot
        if kind == "ee":
            out.append(phi.ee[i][j][k])
        elif kind == "ef":
            out.append(phi.ef[i][j][k])
        else:
            out.append(phi.ff[i][j][k])
    return out


def vector_to_cochain(m: int, n: int, vec) -> Cochain2Even:
    ee = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    ef = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
    ff = [[[ZERO] * m for _ in range(n)] for _ in range(n)]
    for slot, x in zip(cochain_basis_index(m, n), vec):
        kind, i, j, k = slot
        if kind == "ee":
            ee[i][j][k] = x
            ee[j][i][k] = -x
        elif kind == "ef":
            ef[i][j][k] = x
        else:
            ff[i][j][k] = x
            ff[j][i][k] = x
    return Cochain2Even(m, n, ee, ef, ff)


# -- differentials -------------------------------------------------------------


def d1(g: SuperAlgebra, A, D) -> Cochain2Even:
    """(d1 psi)(x,y) = [psi x, y] + [x, psi y] - psi([x,y]) for the even map
    psi = (A on the e's, D on the f's), columns = images."""
    m, n = g.m, g.n
    vecs = [g.basis_vector(k) for k in range(m + n)]

    def psi(w):
        ev = [ZERO] * m
        od = [ZERO] * n
        for k in range(m):
            x = w[0][k]
            if _is_zero(x):
                continue
            for r in range(m):
                ev[r] = ev[r] + A[r][k] * x
        for l in range(n):
            x = w[1][l]
            if _is_zero(x):
                continue
            for r in range(n):
                od[r] = od[r] + D[r][l] * x
        return ev, od

    def entry(a, b):
        t1 = g.bracket(psi(vecs[a]), vecs[b])
        t2 = g.bracket(vecs[a], psi(vecs[b]))
        t3 = psi(g.bracket(vecs[a], vecs[b]))
        return ([x + y - z for x, y, z in zip(t1[0], t2[0], t3[0])],
                [x + y - z for x, y, z in zip(t1[1], t2[1], t3[1])])

    ee = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    ef = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
    ff = [[[ZERO] * m for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(m):
            ee[i][j] = entry(i, j)[0]
    for i in range(m):
        for j in range(n):
            ef[i][j] = entry(i, m + j)[1]
    for i in range(n):
        for j in range(n):
            ff[i][j] = entry(m + i, m + j)[0]
    return Cochain2Even(m, n, ee, ef, ff)


def d2(g: SuperAlgebra, phi: Cochain2Even):
    """Evaluate d2 phi on all ordered homogeneous basis triples.

    Returns a dict (a,b,c) -> graded vector; zero entries omitted.
    """
    m, n = g.m, g.n
    d = m + n
    vecs = [g.basis_vector(k) for k in range(d)]
    br = [[g.bracket(vecs[a], vecs[b]) for b in range(d)] for a in range(d)]

    def phi_on(vec_pair_left, idx_right):
        """phi(w, basis[idx]) for graded vector w, by bilinearity."""
        ev = [ZERO] * m
        od = [ZERO] * n
        for k in range(m):
            x = vec_pair_left[0][k]
            if _is_zero(x):
                continue
            pe, po = phi.value(k, idx_right)
            for r in range(m):
                ev[r] = ev[r] + x * pe[r]
            for r in range(n):
                od[r] = od[r] + x * po[r]
        for l in range(n):
            x = vec_pair_left[1][l]
            if _is_zero(x):
                continue
            pe, po = phi.value(m + l, idx_right)
            for r in range(m):
                ev[r] = ev[r] + x * pe[r]
            for r in range(n):
                od[r] = od[r] + x * po[r]
        return ev, od

    out = {}
    for a in range(d):
        pa = g.parity(a)
        for b in range(d):
            pb = g.parity(b)
            for c in range(d):
                pc = g.parity(c)
                s_ab = FieldElem((-1) ** (pa * pb))
                s_c = FieldElem((-1) ** (pc * (pa + pb)))
                s_bc = FieldElem((-1) ** (pb * pc))
                t1 = g.bracket(vecs[a], phi.value(b, c))
                t2 = g.bracket(vecs[b], phi.value(a, c))
                t3 = g.bracket(vecs[c], phi.value(a, b))
                t4 = phi_on(br[a][b], c)
                t5 = phi_on(br[a][c], b)
                t6e, t6o = _phi_second(g, phi, a, br[b][c])
                ev = [ZERO] * m
                od = [ZERO] * n
                for r in range(m):
                    ev[r] = (t1[0][r] - s_ab * t2[0][r] + s_c * t3[0][r]
                             - t4[0][r] + s_bc * t5[0][r] + t6e[r])
                for r in range(n):
                    od[r] = (t1[1][r] - s_ab * t2[1][r] + s_c * t3[1][r]
                             - t4[1][r] + s_bc * t5[1][r] + t6o[r])
                if any(not _is_zero(x) for x in ev + od):
                    out[(a, b, c)] = (ev, od)
    return out


def _phi_second(g: SuperAlgebra, phi: Cochain2Even, a: int, w):
    """phi(basis[a], w) by bilinearity in the second slot."""
    m, n = phi.m, phi.n
    ev = [ZERO] * m
    od = [ZERO] * n
    for k in range(m):
        x = w[0][k]
        if _is_zero(x):
            continue
        pe, po = phi.value(a, k)
        for r in range(m):
            ev[r] = ev[r] + x * pe[r]
        for r in range(n):
            od[r] = od[r] + x * po[r]
    for l in range(n):
        x = w[1][l]
        if _is_zero(x):
            continue
        pe, po = phi.value(a, m + l)
        for r in range(m):
            ev[r] = ev[r] + x * pe[r]
        for r in range(n):
            od[r] = od[r] + x * po[r]
    return ev, od


def is_cocycle(g: SuperAlgebra, phi: Cochain2Even) -> bool:
    return not d2(g, phi)


# -- cohomology ------------------------------------------------------------------


def _d2_matrix(g: SuperAlgebra) -> List[List[FieldElem]]:
    """Rows = output coordinates over all triples, columns = cochain slots."""
    m, n = g.m, g.n
    slots = cochain_basis_index(m, n)
    cols = []
    for si in range(len(slots)):
        vec = [ZERO] * len(slots)
        vec[si] = ONE
        phi = vector_to_cochain(m, n, vec)
        image = d2(g, phi)
        cols.append(image)
    # collect the union of output coordinates that appear
    keys = sorted({(t, p, r) for image in cols for t, vv in image.items()
                   for p in (0, 1) for r, x in enumerate(vv[p])
                   if not _is_zero(x)})
    matrix = []
    for key in keys:
        t, p, r = key
        row = []
        for image in cols:
            vv = image.get(t)
            row.append(vv[p][r] if vv is not None else ZERO)
        matrix.append(row)
    return matrix


def _d1_matrix(g: SuperAlgebra) -> List[List[FieldElem]]:
    """Columns = images of the elementary even maps, as cochain vectors."""
    m, n = g.m, g.n
    cols = []
    for q in range(m):
        for p in range(m):
            A = [[ONE if (r, c) == (q, p) else ZERO for c in range(m)]
                 for r in range(m)]
            D = [[ZERO] * n for _ in range(n)]
            cols.append(cochain_to_vector(d1(g, A, D)))
    for q in range(n):
        for p in range(n):
            A = [[ZERO] * m for _ in range(m)]
            D = [[ONE if (r, c) == (q, p) else ZERO for c in range(n)]
                 for r in range(n)]
            cols.append(cochain_to_vector(d1(g, A, D)))
    return [list(row) for row in zip(*cols)] if cols else []


def h2_even(g: SuperAlgebra) -> Dict:
    """{dim, basis}: dim ker d2 - dim im d1, with a lifted basis of H^2."""
    m, n = g.m, g.n
    total = cochain_dim(m, n)
    d2m = _d2_matrix(g)
    cocycles = kernel(d2m) if d2m else \
        [[ONE if i == j else ZERO for j in range(total)] for i in range(total)]
    d1m = _d1_matrix(g)
    cob_rows = [list(col) for col in zip(*d1m)] if d1m else []
    cob_rows = [r for r in cob_rows if any(not x.is_zero() for x in r)]
    b_rank = rank(cob_rows) if cob_rows else 0
    dim = len(cocycles) - b_rank
    # lift a complement: add cocycle vectors that increase rank over B
    basis = []
    stack = list(cob_rows)
    current = b_rank
    for z in cocycles:
        if rank(stack + [z]) > current:
            stack.append(z)
            current += 1
            basis.append(vector_to_cochain(m, n, z))
        if current == b_rank + dim:
            break
    return {"dim": dim, "basis": basis}


def coboundary_rank(g: SuperAlgebra) -> int:
    d1m = _d1_matrix(g)
    rows = [list(col) for col in zip(*d1m)] if d1m else []
    return rank(rows) if rows else 0


def in_coboundaries(g: SuperAlgebra, phi: Cochain2Even) -> bool:
    d1m = _d1_matrix(g)
    rows = [list(col) for col in zip(*d1m)] if d1m else []
    v = cochain_to_vector(phi)
    base = rank(rows) if rows else 0
    return rank(rows + [v]) == base


def independent_mod_coboundaries(g: SuperAlgebra,
                                 phis: List[Cochain2Even]) -> bool:
    d1m = _d1_matrix(g)
    rows = [list(col) for col in zip(*d1m)] if d1m else []
    base = rank(rows) if rows else 0
    vs = [cochain_to_vector(p) for p in phis]
    return rank(rows + vs) == base + len(vs)


# -- the paper-style cocycle notation ---------------------------------------------


_COCYCLE_TERM = re.compile(
    r"\s*([+-])?\s*(?:([0-9/]+|i|sqrt2|[0-9/]*\*?(?:i|sqrt2)?)\s*\*)?\s*"
    r"([ef])(\d+)\*\^([ef])(\d+)\*@([ef])(\d+)")


def parse_cocycle(text: str, m: int, n: int) -> Cochain2Even:
    """Parse e.g. "-2*e1*^e2*@e1 + e2*^f1*@f1" into a cochain."""
    pos = 0
    vec = [ZERO] * cochain_dim(m, n)
    slots = cochain_basis_index(m, n)
    index = {s: i for i, s in enumerate(slots)}
    found = False
    while pos < len(text):
        mt = _COCYCLE_TERM.match(text, pos)
        if not mt:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad cocycle syntax at {text[pos:]!r}")
        sign, coeff_txt, k1, i1, k2, i2, k3, i3 = mt.groups()
        coeff = parse_elem(coeff_txt) if coeff_txt else ONE
        if sign == "-":
            coeff = -coeff
        a = int(i1) - 1
        b = int(i2) - 1
        c = int(i3) - 1
        if k1 == "e" and k2 == "e":
            if k3 != "e":
                raise ValueError("even-even slot must map to an e")
            slot = ("ee", min(a, b), max(a, b), c)
            if a > b:
                coeff = -coeff
            if a == b:
                raise ValueError("e_i*^e_i* vanishes")
        elif k1 == "e" and k2 == "f":
            slot = ("ef", a, b, c)
        elif k1 == "f" and k2 == "e":
            slot = ("ef", b, a, c)
            coeff = -coeff
        else:
            slot = ("ff", min(a, b), max(a, b), c)
        vec[index[slot]] = vec[index[slot]] + coeff
        found = True
        pos = mt.end()
    if not found:
        raise ValueError("empty cocycle expression")
    return vector_to_cochain(m, n, vec)


def format_cocycle(phi: Cochain2Even) -> str:
    parts = []
    vec = cochain_to_vector(phi)
    for slot, x in zip(cochain_basis_index(phi.m, phi.n), vec):
        if _is_zero(x):
            continue
        kind, i, j, k = slot
        if kind == "ee":
            term = f"e{i+1}*^e{j+1}*@e{k+1}"
        elif kind == "ef":
            term = f"e{i+1}*^f{j+1}*@f{k+1}"
        else:
            term = f"f{i+1}*^f{j+1}*@e{k+1}"
        txt = format_elem(x)
        if txt == "1":
            parts.append(term)
        elif txt == "-1":
            parts.append(f"-{term}")
        else:
            if "+" in txt.strip("+-") or " - " in txt:
                txt = f"({txt})"
            parts.append(f"{txt}*{term}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# -- deformation probes --------------------------------------------------------------


def deformation_nilpotency_probe(base_doc: Dict, extra_brackets: List[Dict],
                                 param_value: str) -> Dict:
    """Replay a deformation: base algebra plus explicit deformed brackets with
    the parameter substituted, then test nilpotency (Jacobi checked first)."""
    from .exprlang import evaluate, parse as eparse
    from .series import PuiseuxSeries
    doc = dict(base_doc)
    brackets = [dict(b) for b in doc.get("brackets", [])]
    tval = evaluate(eparse(param_value))
    if any(e != 0 for e in tval.terms):
        raise ValueError("parameter value must be a constant")
    for extra in extra_brackets:
        value = []
        for v in extra["value"]:
            coeff_expr = eparse(v["coeff"])
            series = evaluate(coeff_expr)
            # substitute t = param_value by exact polynomial composition
            subbed = PuiseuxSeries.from_scalar(ZERO)
            for expo, cf in series.terms.items():
                if expo.denominator != 1 or expo < 0:
                    raise ValueError("probe brackets must be polynomial in t")
                subbed = subbed + cf * tval.pow(expo)
            value.append({"coeff": format_elem(subbed.limit_at_zero()),
                          "basis": v["basis"]})
        brackets.append({"lhs": extra["lhs"], "rhs": extra["rhs"],
                         "value": value})
    doc["brackets"] = _merge_brackets(brackets)
    g = SuperAlgebra.from_doc(doc)
    violations = g.check_jacobi()
    if violations:
        raise ValueError(f"deformed product violates Jacobi at {violations[:3]}")
    series = g.lower_central_series()
    return {"nilpotent": series[-1] == (0, 0), "series": series}


def _merge_brackets(brackets: List[Dict]) -> List[Dict]:
    merged: Dict[Tuple[str, str], Dict[str, FieldElem]] = {}
    order = []
    for b in brackets:
        key = (b["lhs"], b["rhs"])
        if key not in merged:
            merged[key] = {}
            order.append(key)
        for v in b["value"]:
            basis = v["basis"]
            merged[key][basis] = merged[key].get(basis, ZERO) + \
                parse_elem(v["coeff"])
    out = []
    for key in order:
        value = [{"coeff": format_elem(x), "basis": basis}
                 for basis, x in merged[key].items() if not x.is_zero()]
        if value:
            out.append({"lhs": key[0], "rhs": key[1], "value": value})
    return out
