"""Bounded complexes of direct sums of indecomposable projectives.

Grading is cohomological: differentials raise degree by one, the entry at
(row r, col c) of the matrix attached to degree d is a morphism from the
c-th summand in degree d to the r-th summand in degree d+1.  The cone of a
chain map f: X -> Y carries X^{d+1} (+) Y^d in degree d with differential
[[-D_X, 0], [F, D_Y]]; a shift by n multiplies the differential by (-1)^n.

minimize() strips contractible summand pairs by Gaussian elimination: any
entry P_i -> P_i whose identity coefficient is a unit can be split off, the
parallel block picking up the correction delta - gamma phi^{-1} beta.  Pivot
order is deterministic (lowest degree, then lowest row, then lowest column)
so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple

from . import linalg
from .braid import DynkinDiagram
from .fields import Field, Scalar
from .zigzag import MorphBasisElement, MorphElement, ZigzagAlgebra

Matrix = Tuple[Tuple[MorphElement, ...], ...]


@dataclass(eq=False)
class ProjComplex:
    """A bounded complex; treat instances as immutable.

    summands maps degree -> the ordered vertex labels of the summands in that
    degree; diffs maps degree d -> the matrix of the differential d -> d+1.
    Degrees without summands and all-zero matrices are dropped on
    normalization (see make_complex).
    """

    algebra: ZigzagAlgebra
    summands: Dict[int, Tuple[int, ...]]
    diffs: Dict[int, Matrix]

    @property
    def diagram(self) -> DynkinDiagram:
        return self.algebra.diagram

    def degrees(self) -> list[int]:
        return sorted(self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def total_summands(self) -> int:
        return sum(len(t) for t in self.summands.values())

    def diff(self, d: int) -> Matrix:
        mat = self.diffs.get(d)
        if mat is not None:
            return mat
        rows = self.summands.get(d + 1, ())
        cols = self.summands.get(d, ())
        return tuple(tuple(self.algebra.zero(c, r) for c in cols) for r in rows)

    def key(self) -> tuple:
        """Canonical hashable encoding (used for caching and comparisons)."""
        fmt = self.algebra.field.format
        deg_part = tuple((d, self.summands[d]) for d in self.degrees())
        diff_part = []
        for d in sorted(self.diffs):
            entries = []
            for r, row in enumerate(self.diffs[d]):
                for c, m in enumerate(row):
                    if not m.is_zero():
                        entries.append((r, c, tuple((b.kind, fmt(s)) for b, s in m.terms)))
            if entries:
                diff_part.append((d, tuple(entries)))
        return (deg_part, tuple(diff_part))

    def check(self) -> None:
        """Validate shapes, entry typing and d^2 = 0.  Test helper."""
        for d, mat in self.diffs.items():
            rows = self.summands.get(d + 1, ())
            cols = self.summands.get(d, ())
            assert len(mat) == len(rows), f"bad row count at degree {d}"
            for r, row in enumerate(mat):
                assert len(row) == len(cols), f"bad col count at degree {d}"
                for c, m in enumerate(row):
                    assert m.src == cols[c] and m.tgt == rows[r], f"entry typing at {d}[{r}][{c}]"
        for d in self.degrees():
            if d + 1 not in self.summands or d + 2 not in self.summands:
                continue
            prod = _mat_mul(self.algebra, self.diff(d + 1), self.diff(d))
            for row in prod:
                for m in row:
                    assert m.is_zero(), f"d^2 != 0 between degrees {d} and {d+2}"


def make_complex(
    algebra: ZigzagAlgebra,
    summands: Mapping[int, Iterable[int]],
    diffs: Mapping[int, Iterable[Iterable[MorphElement]]],
) -> ProjComplex:
    sm = {d: tuple(labels) for d, labels in summands.items() if tuple(labels)}
    dd: Dict[int, Matrix] = {}
    for d, mat in diffs.items():
        mat = tuple(tuple(row) for row in mat)
        if d in sm and d + 1 in sm and any(not m.is_zero() for row in mat for m in row):
            dd[d] = mat
    return ProjComplex(algebra, sm, dd)


def _mat_mul(algebra: ZigzagAlgebra, a: Matrix, b: Matrix) -> Matrix:
    # a: (n x m), b: (m x p) -> (n x p)
    out = []
    for r in range(len(a)):
        row = []
        for c in range(len(b[0]) if b else 0):
            acc = None
            for k in range(len(b)):
                term = algebra.compose(a[r][k], b[k][c])
                acc = term if acc is None else algebra.add(acc, term)
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


@dataclass(eq=False)
class ChainMap:
    """A degreewise matrix of morphisms commuting with the differentials."""

    src: ProjComplex
    tgt: ProjComplex
    blocks: Dict[int, Matrix]  # degree d -> matrix from src^d to tgt^d

    def block(self, d: int) -> Matrix:
        mat = self.blocks.get(d)
        if mat is not None:
            return mat
        alg = self.src.algebra
        rows = self.tgt.summands.get(d, ())
        cols = self.src.summands.get(d, ())
        return tuple(tuple(alg.zero(c, r) for c in cols) for r in rows)

    def is_valid(self) -> bool:
        alg = self.src.algebra
        if alg != self.tgt.algebra:
            return False
        for d, mat in self.blocks.items():
            rows = self.tgt.summands.get(d, ())
            cols = self.src.summands.get(d, ())
            if len(mat) != len(rows):
                return False
            for r, row in enumerate(mat):
                if len(row) != len(cols):
                    return False
                for c, m in enumerate(row):
                    if m.src != cols[c] or m.tgt != rows[r]:
                        return False
        degs = set(self.src.summands) | set(self.tgt.summands)
        for d in degs:
            src_cols = self.src.summands.get(d, ())
            tgt_rows = self.tgt.summands.get(d + 1, ())
            if not src_cols or not tgt_rows:
                continue
            blk_next = self.block(d + 1)
            blk_here = self.block(d)
            dsrc = self.src.diff(d)
            dtgt = self.tgt.diff(d)
            mid_src = len(self.src.summands.get(d + 1, ()))
            mid_tgt = len(self.tgt.summands.get(d, ()))
            for r, rlab in enumerate(tgt_rows):
                for c, clab in enumerate(src_cols):
                    acc = alg.zero(clab, rlab)
                    for k in range(mid_src):
                        acc = alg.add(acc, alg.compose(blk_next[r][k], dsrc[k][c]))
                    for k in range(mid_tgt):
                        acc = alg.add(acc, alg.compose(dtgt[r][k], blk_here[k][c]).scaled(alg.field.neg(alg.field.one)))
                    if not acc.is_zero():
                        return False
        return True


# -- basic constructors -----------------------------------------------------


def projective(algebra: ZigzagAlgebra, i: int) -> ProjComplex:
    """The stalk complex with P_i in degree 0."""
    if not 1 <= i <= algebra.diagram.rank:
        raise ValueError(f"unknown vertex {i}")
    return make_complex(algebra, {0: (i,)}, {})


def sum_of_projectives(algebra: ZigzagAlgebra) -> ProjComplex:
    """The direct sum of all P_i in degree 0."""
    return make_complex(algebra, {0: tuple(algebra.diagram.vertices)}, {})


def shift(x: ProjComplex, n: int) -> ProjComplex:
    """X[n]: degree d of the result is degree d+n of X; differential times (-1)^n."""
    if n == 0:
        return x
    alg = x.algebra
    sm = {d - n: labels for d, labels in x.summands.items()}
    sign = alg.field.one if n % 2 == 0 else alg.field.neg(alg.field.one)
    dd = {}
    for d, mat in x.diffs.items():
        dd[d - n] = tuple(tuple(m.scaled(sign) for m in row) for row in mat)
    return make_complex(alg, sm, dd)


def direct_sum(x: ProjComplex, y: ProjComplex) -> ProjComplex:
    if x.algebra != y.algebra:
        raise ValueError("direct sum of complexes over different algebras")
    alg = x.algebra
    sm: Dict[int, Tuple[int, ...]] = {}
    for d in set(x.summands) | set(y.summands):
        sm[d] = x.summands.get(d, ()) + y.summands.get(d, ())
    dd: Dict[int, Matrix] = {}
    for d in set(list(x.diffs) + list(y.diffs)):
        xr = x.summands.get(d + 1, ())
        xc = x.summands.get(d, ())
        yr = y.summands.get(d + 1, ())
        yc = y.summands.get(d, ())
        dx = x.diff(d)
        dy = y.diff(d)
        mat = []
        for r, lab in enumerate(xr):
            mat.append(tuple(dx[r]) + tuple(alg.zero(c, lab) for c in yc))
        for r, lab in enumerate(yr):
            mat.append(tuple(alg.zero(c, lab) for c in xc) + tuple(dy[r]))
        dd[d] = tuple(mat)
    return make_complex(alg, sm, dd)


def cone_triangle(f: ChainMap) -> tuple[ProjComplex, ChainMap, ChainMap]:
    """The cone C of f: X -> Y plus the canonical maps Y -> C and C -> X[1]."""
    if not f.is_valid():
        raise ValueError("cone of an invalid chain map")
    x, y = f.src, f.tgt
    alg = x.algebra
    k = alg.field
    neg_one = k.neg(k.one)
    sm: Dict[int, Tuple[int, ...]] = {}
    degs = set()
    for d in x.summands:
        degs.add(d - 1)
    degs |= set(y.summands)
    for d in degs:
        sm[d] = x.summands.get(d + 1, ()) + y.summands.get(d, ())
    dd: Dict[int, Matrix] = {}
    for d in sm:
        if d + 1 not in sm:
            continue
        xc = x.summands.get(d + 1, ())
        yc = y.summands.get(d, ())
        xr = x.summands.get(d + 2, ())
        yr = y.summands.get(d + 1, ())
        dx = x.diff(d + 1)
        dy = y.diff(d)
        fb = f.block(d + 1)
        mat = []
        for r, lab in enumerate(xr):
            mat.append(tuple(m.scaled(neg_one) for m in dx[r]) + tuple(alg.zero(c, lab) for c in yc))
        for r, lab in enumerate(yr):
            mat.append(tuple(fb[r]) + tuple(dy[r]))
        dd[d] = tuple(mat)
    cone_complex = make_complex(alg, sm, dd)
    inc_blocks: Dict[int, Matrix] = {}
    proj_blocks: Dict[int, Matrix] = {}
    x1 = shift(x, 1)
    for d in sm:
        xc = x.summands.get(d + 1, ())
        yc = y.summands.get(d, ())
        inc_rows = []
        for lab in xc:
            inc_rows.append(tuple(alg.zero(c, lab) for c in yc))
        for r, lab in enumerate(yc):
            inc_rows.append(tuple(alg.identity(lab) if r == c else alg.zero(yc[c], lab) for c in range(len(yc))))
        inc_blocks[d] = tuple(inc_rows)
        proj_blocks[d] = tuple(
            tuple(alg.identity(lab) if r == c else alg.zero(xc[c], lab) for c in range(len(xc)))
            + tuple(alg.zero(c, lab) for c in yc)
            for r, lab in enumerate(xc)
        )
    inclusion = ChainMap(y, cone_complex, inc_blocks)
    projection = ChainMap(cone_complex, x1, proj_blocks)
    return cone_complex, inclusion, projection


def cone(f: ChainMap) -> ProjComplex:
    return cone_triangle(f)[0]


# -- minimal models -----------------------------------------------------------


def minimize(x: ProjComplex) -> ProjComplex:
    """Strip contractible pairs until no unit identity entry remains."""
    alg = x.algebra
    sm = {d: list(t) for d, t in x.summands.items()}
    dd: Dict[int, Dict[Tuple[int, int], MorphElement]] = {}
    for d in x.diffs:
        entries = {}
        for r, row in enumerate(x.diffs[d]):
            for c, m in enumerate(row):
                if not m.is_zero():
                    entries[(r, c)] = m
        if entries:
            dd[d] = entries

    def find_pivot():
        for d in sorted(dd):
            best = None
            for (r, c), m in dd[d].items():
                if alg.is_unit(m):
                    if best is None or (r, c) < best:
                        best = (r, c)
            if best is not None:
                return d, best
        return None

    while True:
        found = find_pivot()
        if found is None:
            break
        d, (pr, pc) = found
        phi_inv = alg.invert_endo(dd[d][(pr, pc)])
        row_entries = {c: m for (r, c), m in dd[d].items() if r == pr and c != pc}
        col_entries = {r: m for (r, c), m in dd[d].items() if c == pc and r != pr}
        block = dd[d]
        for r2, g in col_entries.items():
            g_phi = alg.compose(g, phi_inv)
            for c2, b in row_entries.items():
                corr = alg.compose(g_phi, b)
                cur = block.get((r2, c2))
                new = (cur - corr) if cur is not None else -corr
                if new.is_zero():
                    block.pop((r2, c2), None)
                else:
                    block[(r2, c2)] = new
        # drop the pivot row/column in degree d, the incoming column in d-1
        # and the outgoing row in d+1, then reindex.
        def drop_and_shift(entries, drop_row, drop_col):
            out = {}
            for (r, c), m in entries.items():
                if (drop_row is not None and r == drop_row) or (drop_col is not None and c == drop_col):
                    continue
                nr = r - 1 if (drop_row is not None and r > drop_row) else r
                nc = c - 1 if (drop_col is not None and c > drop_col) else c
                out[(nr, nc)] = m
            return out

        dd[d] = drop_and_shift(block, pr, pc)
        if d - 1 in dd:
            dd[d - 1] = drop_and_shift(dd[d - 1], pc, None)
        if d + 1 in dd:
            dd[d + 1] = drop_and_shift(dd[d + 1], None, pr)
        del sm[d][pc]
        del sm[d + 1][pr]
        for deg in (d - 1, d, d + 1):
            if deg in dd and not dd[deg]:
                del dd[deg]

    summands = {d: tuple(labels) for d, labels in sm.items() if labels}
    diffs: Dict[int, Matrix] = {}
    for d, entries in dd.items():
        rows = summands.get(d + 1, ())
        cols = summands.get(d, ())
        mat = [[alg.zero(cols[c], rows[r]) for c in range(len(cols))] for r in range(len(rows))]
        for (r, c), m in entries.items():
            mat[r][c] = m
        diffs[d] = tuple(tuple(row) for row in mat)
    return make_complex(alg, summands, diffs)


# -- Hom complexes and profiles -----------------------------------------------


@dataclass(eq=False)
class HomComplex:
    """The cochain-level Hom(P_j, X): scalar matrices over the base field.

    basis[d] lists (summand index, basis morphism) pairs; mats[d] is the
    matrix of postcomposition with the differential from degree d to d+1
    (rows indexed by basis[d+1]).
    """

    field: Field
    vertex: int
    basis: Dict[int, Tuple[Tuple[int, MorphBasisElement], ...]]
    mats: Dict[int, List[List[Scalar]]]

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def rank_at(self, d: int) -> int:
        mat = self.mats.get(d)
        if mat is None or not mat or not mat[0]:
            return 0
        return linalg.rank(self.field, mat, len(mat[0]))

    def homology_dims(self) -> Dict[int, int]:
        out = {}
        for d in self.degrees():
            h = self.dim(d) - self.rank_at(d) - self.rank_at(d - 1)
            if h:
                out[d] = h
        return out


def hom_complex(j: int, x: ProjComplex) -> HomComplex:
    alg = x.algebra
    k = alg.field
    basis: Dict[int, Tuple[Tuple[int, MorphBasisElement], ...]] = {}
    index: Dict[int, Dict[Tuple[int, MorphBasisElement], int]] = {}
    for d, labels in x.summands.items():
        items = []
        for s, lab in enumerate(labels):
            for b in alg.hom_basis(j, lab):
                items.append((s, b))
        if items:
            basis[d] = tuple(items)
            index[d] = {it: n for n, it in enumerate(items)}
    mats: Dict[int, List[List[Scalar]]] = {}
    for d in basis:
        if d + 1 not in basis or d not in x.diffs:
            continue
        rows = basis[d + 1]
        cols = basis[d]
        mat = [[k.zero] * len(cols) for _ in rows]
        diff = x.diffs[d]
        for cidx, (s, b) in enumerate(cols):
            bm = alg.basis_morph(b)
            for r in range(len(x.summands[d + 1])):
                entry = diff[r][s]
                if entry.is_zero():
                    continue
                image = alg.compose(entry, bm)
                for bb, coef in image.terms:
                    ridx = index[d + 1][(r, bb)]
                    mat[ridx][cidx] = k.add(mat[ridx][cidx], coef)
        if any(not k.is_zero(a) for row in mat for a in row):
            mats[d] = mat
    return HomComplex(k, j, basis, mats)


def hom_dims(j: int, x: ProjComplex) -> Dict[int, int]:
    """Degreewise dimensions of Hom*(P_j, X) (derived Hom, exact ranks)."""
    return hom_complex(j, x).homology_dims()


HomProfile = Dict[Tuple[int, int], int]


def profile(x: ProjComplex) -> HomProfile:
    """(vertex, degree) -> dim Hom^degree(P_vertex, X); the comparison invariant."""
    out: HomProfile = {}
    for j in x.diagram.vertices:
        for d, h in hom_dims(j, x).items():
            out[(j, d)] = h
    return out


def profile_key(x: ProjComplex) -> tuple:
    """Key combining the minimized summand lists and the hom profile."""
    m = minimize(x)
    summand_part = tuple((d, tuple(sorted(m.summands[d]))) for d in m.degrees())
    prof = profile(m)
    prof_part = tuple(sorted(prof.items()))
    return (summand_part, prof_part)


def profiles_equal(x: ProjComplex, y: ProjComplex) -> bool:
    if x.algebra != y.algebra:
        raise ValueError("comparing complexes over different algebras")
    return profile_key(x) == profile_key(y)


def euler_characteristic(j: int, x: ProjComplex) -> int:
    hc = hom_complex(j, x)
    return sum(hc.dim(d) if d % 2 == 0 else -hc.dim(d) for d in hc.degrees())


# -- serialization -------------------------------------------------------------


def complex_to_json_obj(x: ProjComplex) -> dict:
    return {
        "degrees": {str(d): list(x.summands[d]) for d in x.degrees()},
        "diffs": {
            str(d): [[m.to_json_obj() for m in row] for row in x.diffs[d]]
            for d in sorted(x.diffs)
        },
    }


def complex_from_json_obj(algebra: ZigzagAlgebra, obj: Mapping) -> ProjComplex:
    sm = {int(d): tuple(int(v) for v in labels) for d, labels in obj.get("degrees", {}).items()}
    dd: Dict[int, Matrix] = {}
    for d, mat in obj.get("diffs", {}).items():
        d = int(d)
        rows = []
        for r, row in enumerate(mat):
            entries = []
            for c, cell in enumerate(row):
                if cell is None:
                    entries.append(algebra.zero(sm[d][c], sm[d + 1][r]))
                else:
                    m = algebra.morph_from_json_obj(cell)
                    if (m.src, m.tgt) != (sm[d][c], sm[d + 1][r]):
                        raise ValueError(f"entry typing mismatch at {d}[{r}][{c}]")
                    entries.append(m)
            rows.append(tuple(entries))
        dd[d] = tuple(rows)
    out = make_complex(algebra, sm, dd)
    out.check()
    return out
