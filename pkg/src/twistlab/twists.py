"""Spherical twist functors on complexes of projectives, and two-term calculus.

The twist along P_i is computed at the cochain level: tensor the two-term
bimodule complex with X, i.e. build one copy of P_i per basis element of the
Hom complex Hom(P_i, X), map it to X by evaluation, take the cone, minimize.
The inverse twist dualizes: copies of P_i indexed by the same basis land one
degree higher, and X maps into them by the trace-pairing dual basis
(coevaluation).  Both functors minimize their output, so repeated twisting
stays small.

The concrete model is the omega = 0 one (all Hom spaces concentrated in
degree 0); the SphericalParameters record exists so callers can see which
shifts would apply in general.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from .braid import BraidWord
from .complexes import (
    ChainMap,
    Matrix,
    ProjComplex,
    cone,
    hom_complex,
    hom_dims,
    make_complex,
    minimize,
    shift,
)
from .zigzag import ZigzagAlgebra


@dataclass(frozen=True)
class SphericalParameters:
    """The degree data (omega, omega_0, omega_1); the shipped model is (0, 0, 0)."""

    omega: int = 0
    omega0: int = 0
    omega1: int = 0

    def __post_init__(self) -> None:
        if self.omega0 + self.omega1 != self.omega:
            raise ValueError("omega0 + omega1 must equal omega")
        if self.omega == 1:
            raise ValueError("omega = 1 is excluded (the action need not be faithful)")

    def omega_u(self, u: int) -> int:
        return self.omega0 if u % 2 == 0 else self.omega1


MODEL_PARAMETERS = SphericalParameters(0, 0, 0)


def twist(i: int, x: ProjComplex) -> ProjComplex:
    """t_i(X) = minimize(cone(P_i (x) Hom(P_i, X) -> X))."""
    alg = x.algebra
    hc = hom_complex(i, x)
    src_summands = {d: (i,) * hc.dim(d) for d in hc.degrees()}
    src_diffs: Dict[int, Matrix] = {}
    for d, mat in hc.mats.items():
        src_diffs[d] = tuple(
            tuple(alg.identity(i).scaled(a) for a in row) for row in mat
        )
    source = make_complex(alg, src_summands, src_diffs)
    ev_blocks: Dict[int, Matrix] = {}
    for d in hc.degrees():
        cols = hc.basis[d]
        rows = x.summands.get(d, ())
        block = []
        for r, lab in enumerate(rows):
            block.append(
                tuple(
                    alg.basis_morph(b) if s == r else alg.zero(i, lab)
                    for (s, b) in cols
                )
            )
        ev_blocks[d] = tuple(block)
    ev = ChainMap(source, x, ev_blocks)
    return minimize(cone(ev))


def twist_inv(i: int, x: ProjComplex) -> ProjComplex:
    """Quasi-inverse twist, built from the trace-pairing dual basis."""
    alg = x.algebra
    k = alg.field
    neg = k.neg
    hc = hom_complex(i, x)
    summands: Dict[int, Tuple[int, ...]] = {}
    degs = set(x.summands) | {d + 1 for d in hc.degrees()}
    for d in degs:
        summands[d] = x.summands.get(d, ()) + (i,) * hc.dim(d - 1)
    diffs: Dict[int, Matrix] = {}
    for d in degs:
        if d + 1 not in degs:
            continue
        x_cols = x.summands.get(d, ())
        w_cols = hc.basis.get(d - 1, ())
        x_rows = x.summands.get(d + 1, ())
        w_rows = hc.basis.get(d, ())
        dx = x.diff(d)
        wmat = hc.mats.get(d - 1)
        rows = []
        for r, lab in enumerate(x_rows):
            rows.append(tuple(dx[r]) + tuple(alg.zero(i, lab) for _ in w_cols))
        for ridx, (s, b) in enumerate(w_rows):
            coev = tuple(
                alg.basis_morph(alg.dual_basis_element(b)) if c == s else alg.zero(x_cols[c], i)
                for c in range(len(x_cols))
            )
            if wmat is None:
                wpart = tuple(alg.zero(i, i) for _ in w_cols)
            else:
                wpart = tuple(alg.identity(i).scaled(neg(wmat[ridx][cidx])) for cidx in range(len(w_cols)))
            rows.append(coev + wpart)
        diffs[d] = tuple(rows)
    return minimize(make_complex(alg, summands, diffs))


def twist_word(w: BraidWord, x: ProjComplex) -> ProjComplex:
    """Apply t_{i_1} o ... o t_{i_k} for w = s_{i_1} ... s_{i_k} (rightmost first)."""
    if w.diagram != x.diagram:
        raise ValueError("word and complex live over different diagrams")
    out = x
    for letter in reversed(w.letters):
        out = twist(letter, out)
    return out


def twist_inv_word(w: BraidWord, x: ProjComplex) -> ProjComplex:
    """Inverse of twist_word(w, -): apply the inverse twists leftmost first."""
    if w.diagram != x.diagram:
        raise ValueError("word and complex live over different diagrams")
    out = x
    for letter in w.letters:
        out = twist_inv(letter, out)
    return out


class TwistMemo:
    """Optional cache of minimized twists keyed by (letter, complex key).

    Hits return exactly what recomputation would; safe for concurrent use.
    """

    def __init__(self) -> None:
        self._store: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def twist(self, i: int, x: ProjComplex) -> ProjComplex:
        key = (i, x.key())
        with self._lock:
            cached = self._store.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        out = twist(i, x)
        with self._lock:
            self._store[key] = out
        self.misses += 1
        return out

    def twist_word(self, w: BraidWord, x: ProjComplex) -> ProjComplex:
        out = x
        for letter in reversed(w.letters):
            out = self.twist(letter, out)
        return out


# -- two-term objects --------------------------------------------------------


@dataclass(eq=False)
class TwoTermObject:
    """Cone data of a map from color-u projectives to color-(u+1) projectives.

    left_order / right_order list the summands (sorted by vertex); phi is the
    connecting matrix (rows indexed by right summands), with arrow-only
    entries since the two sides have opposite colors.
    """

    algebra: ZigzagAlgebra
    side: int
    left_order: Tuple[int, ...]
    right_order: Tuple[int, ...]
    phi: Matrix

    @property
    def left(self) -> Dict[int, int]:
        return dict(Counter(self.left_order))

    @property
    def right(self) -> Dict[int, int]:
        return dict(Counter(self.right_order))

    def lsupp(self) -> frozenset[int]:
        return frozenset(self.left_order)

    def rsupp(self) -> frozenset[int]:
        return frozenset(self.right_order)

    def multiplicity(self, j: int) -> int:
        d = self.algebra.diagram
        if d.color(j) == self.side % 2:
            return self.left.get(j, 0)
        return self.right.get(j, 0)

    def assemble(self) -> ProjComplex:
        """The underlying complex: left summands in degree -1, right in degree 0."""
        return make_complex(
            self.algebra,
            {-1: self.left_order, 0: self.right_order},
            {-1: self.phi} if self.left_order and self.right_order else {},
        )

    def to_json_obj(self) -> dict:
        return {
            "side": self.side,
            "left": {str(j): m for j, m in sorted(self.left.items())},
            "right": {str(j): m for j, m in sorted(self.right.items())},
            "phi": [[m.to_json_obj() for m in row] for row in self.phi],
        }


@dataclass(frozen=True)
class TwoTermPrediction:
    """Predicted multiplicities for a reflected two-term object."""

    side: int
    left: Tuple[Tuple[int, int], ...]
    right: Tuple[Tuple[int, int], ...]

    def left_dict(self) -> Dict[int, int]:
        return {j: m for j, m in self.left if m}

    def right_dict(self) -> Dict[int, int]:
        return {j: m for j, m in self.right if m}


def two_term_of(x: ProjComplex) -> Optional[TwoTermObject]:
    """Read a minimized complex as a two-term object, if it is one.

    Requires concentration in degrees {-1, 0} with uniform colors: degree -1
    of color u, degree 0 of color u+1.  Single-color stalks qualify with the
    missing side empty.
    """
    alg = x.algebra
    d = alg.diagram
    degs = set(x.degrees())
    if not degs <= {-1, 0}:
        return None
    lefts = x.summands.get(-1, ())
    rights = x.summands.get(0, ())
    left_colors = {d.color(j) for j in lefts}
    right_colors = {d.color(j) for j in rights}
    if len(left_colors) > 1 or len(right_colors) > 1:
        return None
    if lefts and rights:
        u = left_colors.pop()
        if right_colors.pop() != (u + 1) % 2:
            return None
    elif rights:
        u = (right_colors.pop() + 1) % 2
    elif lefts:
        u = left_colors.pop()
    else:
        u = 0
    left_perm = sorted(range(len(lefts)), key=lambda c: (lefts[c], c))
    right_perm = sorted(range(len(rights)), key=lambda r: (rights[r], r))
    mat = x.diff(-1)
    phi = tuple(
        tuple(mat[r][c] for c in left_perm) for r in right_perm
    ) if lefts and rights else tuple(() for _ in right_perm)
    return TwoTermObject(
        alg,
        u,
        tuple(lefts[c] for c in left_perm),
        tuple(rights[r] for r in right_perm),
        phi,
    )


def _total_hom_dim(l: int, x: ProjComplex) -> int:
    return sum(hom_dims(l, x).values())


def is_right_proper(tt: TwoTermObject) -> bool:
    """No right summand splits off: dim Hom*(X, P_l) = sum of neighbour left mults."""
    d = tt.algebra.diagram
    assembled = tt.assemble()
    left = tt.left
    for l in d.vertices:
        if d.color(l) == (tt.side + 1) % 2:
            expected = sum(left.get(k, 0) for k in d.neighbors(l))
            if _total_hom_dim(l, assembled) != expected:
                return False
    return True


def is_left_proper(tt: TwoTermObject) -> bool:
    """No left summand splits off: dim Hom*(X, P_l) = sum of neighbour right mults."""
    d = tt.algebra.diagram
    assembled = tt.assemble()
    right = tt.right
    for l in d.vertices:
        if d.color(l) == tt.side % 2:
            expected = sum(right.get(k, 0) for k in d.neighbors(l))
            if _total_hom_dim(l, assembled) != expected:
                return False
    return True


def two_term_reflect(tt: TwoTermObject, delta: Iterable[int]) -> TwoTermPrediction:
    """Predicted multiplicities of the reflected object t_Delta^{+/-} X.

    Delta of color side+1 reflects a right-proper object forward (t^+);
    Delta of color side reflects a left-proper object backward (t^-).  In
    both directions the new multiplicity at k in Delta is the sum of the
    old multiplicities at the neighbours of k minus the old one at k.
    """
    d = tt.algebra.diagram
    delta = frozenset(delta)
    if not delta:
        raise ValueError("empty reflection set")
    colors = {d.color(j) for j in delta}
    if len(colors) != 1:
        raise ValueError("reflection set must be single-colored")
    color = colors.pop()
    u = tt.side
    if color == (u + 1) % 2:
        if not is_right_proper(tt):
            raise ValueError("object is not right-proper")
        if not tt.rsupp() <= delta:
            raise ValueError("rsupp must be contained in the reflection set")
        left = tt.left
        right = tt.right
        new = {}
        for k in delta:
            new[k] = sum(left.get(j, 0) for j in d.neighbors(k)) - right.get(k, 0)
            if new[k] < 0:
                raise ValueError("negative predicted multiplicity (properness violated)")
        return TwoTermPrediction(
            (u + 1) % 2,
            tuple(sorted(new.items())),
            tuple(sorted(left.items())),
        )
    if color == u % 2:
        if not is_left_proper(tt):
            raise ValueError("object is not left-proper")
        if not tt.lsupp() <= delta:
            raise ValueError("lsupp must be contained in the reflection set")
        left = tt.left
        right = tt.right
        new = {}
        for j in delta:
            new[j] = sum(right.get(k, 0) for k in d.neighbors(j)) - left.get(j, 0)
            if new[j] < 0:
                raise ValueError("negative predicted multiplicity (properness violated)")
        return TwoTermPrediction(
            (u + 1) % 2,
            tuple(sorted(right.items())),
            tuple(sorted(new.items())),
        )
    raise ValueError("unreachable")


def reflect_plus(tt: TwoTermObject, delta: Iterable[int]) -> ProjComplex:
    """The actual object t_Delta^+ X = (prod of twists over Delta)(X)[-1], minimized."""
    out = tt.assemble()
    for k in sorted(set(delta)):
        out = twist(k, out)
    return minimize(shift(out, -1))


def reflect_minus(tt: TwoTermObject, delta: Iterable[int]) -> ProjComplex:
    """The actual object t_Delta^- X = (prod of inverse twists over Delta)(X)[1], minimized."""
    out = tt.assemble()
    for k in sorted(set(delta)):
        out = twist_inv(k, out)
    return minimize(shift(out, 1))
