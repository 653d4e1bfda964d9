"""Recovering a positive braid word from its twist image.

Peeling one letter works like this: at the minimal nonzero degree m of T,
look for a vertex j admitting a long morphism P_j -> T[m], i.e. a homology
class killed by precomposition with every neighbour arrow.  Such a j is a
left divisor of the hidden word; applying the inverse twist strips it.
Iterating until the profile matches the sum of all projectives recovers a
word equal to the original in the braid monoid, of the same length.

Inputs that are not twist images fail with NotTwistImage instead of
returning garbage, so this module doubles as a validator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import linalg
from .braid import BraidWord
from .complexes import (
    ProjComplex,
    hom_complex,
    minimize,
    profile,
    profile_key,
    sum_of_projectives,
)
from .twists import MODEL_PARAMETERS, SphericalParameters, twist_inv, twist_word
from .zigzag import MorphElement


class NotTwistImage(Exception):
    """The complex is not (recognizably) the twist image of a positive word."""


def min_degree(t: ProjComplex) -> int:
    """Smallest k with Hom^k(Lambda, T) nonzero."""
    prof = profile(t)
    if not prof:
        raise NotTwistImage("zero object has no extremal degree")
    return min(d for (_, d) in prof)


def max_degree(t: ProjComplex) -> int:
    """Largest k with Hom^k(Lambda, T) nonzero."""
    prof = profile(t)
    if not prof:
        raise NotTwistImage("zero object has no extremal degree")
    return max(d for (_, d) in prof)


def peel_interval(t: ProjComplex, u: int, params: SphericalParameters = MODEL_PARAMETERS) -> Tuple[int, int]:
    """The degree window that can hold peelable summands of color u.

    For omega <= 0 this is [min, min - omega_{u+1}]; the omega >= 2 branch
    ([max - omega_{u+1} + 1, max]) is present for reference but the shipped
    model always takes the first one with a zero-width window.
    """
    w_next = params.omega_u(u + 1)
    if params.omega <= 0:
        m = min_degree(t)
        return (m, m - w_next)
    h = max_degree(t)
    return (h - w_next + 1, h)


@dataclass(frozen=True)
class SummandWitness:
    """A cocycle representative of a long morphism P_j -> T[degree]."""

    vertex: int
    degree: int
    column: Tuple[MorphElement, ...]  # one entry per summand of T in that degree


def _long_space(j: int, t: ProjComplex, r: int):
    """Constraint data for {[f] in Hom^r(P_j, T) : [f g_{k,j}] = 0 for all k}."""
    alg = t.algebra
    k_field = alg.field
    vj = hom_complex(j, t)
    dim_r = vj.dim(r)
    if dim_r == 0:
        return vj, [], 0
    rows: List[List] = []
    cocycle = vj.mats.get(r)
    if cocycle is not None:
        rows.extend(cocycle)
    for nb in alg.diagram.neighbors(j):
        vk = hom_complex(nb, t)
        if vk.dim(r) == 0:
            continue
        gamma = alg.arrow(nb, j)
        index = {item: n for n, item in enumerate(vk.basis[r])}
        pre = [[k_field.zero] * dim_r for _ in range(vk.dim(r))]
        for cidx, (s, b) in enumerate(vj.basis[r]):
            image = alg.compose(alg.basis_morph(b), gamma)
            for bb, coef in image.terms:
                pre[index[(s, bb)]][cidx] = k_field.add(pre[index[(s, bb)]][cidx], coef)
        bmat = vk.mats.get(r - 1)
        if bmat is None or vk.dim(r - 1) == 0:
            rows.extend(pre)
        else:
            # quotient by coboundaries: keep only the left-annihilator rows
            for y in linalg.left_kernel_basis(k_field, bmat, vk.dim(r - 1)):
                row = [k_field.zero] * dim_r
                for c in range(dim_r):
                    acc = k_field.zero
                    for rr in range(vk.dim(r)):
                        acc = k_field.add(acc, k_field.mul(y[rr], pre[rr][c]))
                    row[c] = acc
                rows.append(row)
    boundary_rank = vj.rank_at(r - 1)
    return vj, rows, boundary_rank


def long_morphism_dim(j: int, t: ProjComplex, r: int) -> int:
    """Dimension of the space of long-morphism classes P_j -> T[r]."""
    vj, rows, boundary_rank = _long_space(j, t, r)
    dim_r = vj.dim(r)
    if dim_r == 0:
        return 0
    solutions = linalg.kernel_basis(t.algebra.field, rows, dim_r)
    return len(solutions) - boundary_rank


def long_morphism_witness(j: int, t: ProjComplex, r: int) -> Optional[SummandWitness]:
    """A representing cocycle for some nonzero long class, if any."""
    alg = t.algebra
    k_field = alg.field
    vj, rows, boundary_rank = _long_space(j, t, r)
    dim_r = vj.dim(r)
    if dim_r == 0:
        return None
    solutions = linalg.kernel_basis(k_field, rows, dim_r)
    if len(solutions) <= boundary_rank:
        return None
    bmat = vj.mats.get(r - 1)
    boundary_rows = []
    if bmat is not None and vj.dim(r - 1) > 0:
        boundary_rows = [[bmat[rr][cc] for rr in range(dim_r)] for cc in range(vj.dim(r - 1))]
    witness_vec = None
    for v in solutions:
        if not linalg.in_row_span(k_field, boundary_rows, v, dim_r):
            witness_vec = v
            break
    if witness_vec is None:
        return None
    labels = t.summands.get(r, ())
    column = [alg.zero(j, lab) for lab in labels]
    for cidx, (s, b) in enumerate(vj.basis[r]):
        if not k_field.is_zero(witness_vec[cidx]):
            column[s] = alg.add(column[s], alg.basis_morph(b, witness_vec[cidx]))
    return SummandWitness(j, r, tuple(column))


def peel(t: ProjComplex) -> Tuple[int, ProjComplex]:
    """One reconstruction step: find a peelable letter at the minimal degree.

    Ties break to the smallest vertex; the stripped complex is minimized.
    The image of a nonempty word has strictly negative minimal degree, so
    anything else is rejected outright (the empty word is the caller's base
    case).
    """
    m = min_degree(t)
    if m >= 0:
        raise NotTwistImage("minimal degree is non-negative: nothing to peel")
    for j in t.diagram.vertices:
        if long_morphism_dim(j, t, m) > 0:
            return j, minimize(twist_inv(j, t))
    raise NotTwistImage(f"no long morphism at the minimal degree {m}")


@dataclass(frozen=True)
class PeelStep:
    vertex: int
    min_degree: int


def _peel_potential(t: ProjComplex) -> Tuple[int, int]:
    m = min_degree(t)
    dim_at_min = sum(h for (_, k), h in profile(t).items() if k == m)
    return (-m, dim_at_min)


def recover_trace(t: ProjComplex) -> Tuple[BraidWord, Tuple[PeelStep, ...]]:
    """recover_word plus the per-step peel log.

    Termination guard: a genuine image of a nonempty word has strictly
    negative minimal degree, and each peel strictly decreases the pair
    (-min degree, dimension at the minimal degree) lexicographically, the
    first component staying positive.  Any violation marks the input as not
    a twist image, so the loop is finite on arbitrary complexes.
    """
    lam_key = profile_key(sum_of_projectives(t.algebra))
    letters: List[int] = []
    steps: List[PeelStep] = []
    current = minimize(t)
    while profile_key(current) != lam_key:
        m = min_degree(current)
        if m >= 0:
            raise NotTwistImage("minimal degree is non-negative but the object is not the projective sum")
        potential = _peel_potential(current)
        j, current = peel(current)
        letters.append(j)
        steps.append(PeelStep(j, m))
        if not current.summands or _peel_potential(current) >= potential:
            raise NotTwistImage("peeling failed to make progress")
    return BraidWord(t.diagram, tuple(letters)), tuple(steps)


def recover_word(t: ProjComplex) -> BraidWord:
    """The positive word whose twist image is T (up to monoid equality)."""
    return recover_trace(t)[0]


def words_equal_via_category(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide monoid equality by comparing twist-image profiles (faithfulness)."""
    if w1.diagram != w2.diagram:
        raise ValueError("words over different diagrams")
    from .zigzag import ZigzagAlgebra

    alg = ZigzagAlgebra(w1.diagram)
    lam = sum_of_projectives(alg)
    return profile_key(twist_word(w1, lam)) == profile_key(twist_word(w2, lam))
