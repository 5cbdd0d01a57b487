"""Semiring chart kernels for second-order projective dependency parsing.

Implements the four-table dynamic program over incomplete (I), sibling (S),
complete (C) and finished (F) spans, in log space, with optional legality
constraints.  The same recursion runs in two semirings:

* log-sum-exp -> ``inside`` (partition function) and ``marginals`` (its
  exact adjoint, computed by reverse traversal of the recorded recursion);
* max -> ``viterbi`` with deterministic tie-breaking and backpointers.

``brute_force`` enumerates every projective tree by recursive span
splitting and serves as the independent oracle for all of the above.

Conventions
-----------
Positions run 0..n with 0 the artificial root.  All tables are (n+1, n+1)
float64 arrays indexed by span endpoints (a, b), a <= b, direction split
into _r/_l variants rather than encoded by index order so that the
diagonal (a == b) stays unambiguous:

==========  =====================================================
``I_r``     incomplete span, arc a -> b
``I_l``     incomplete span, arc b -> a
``S``       sibling span between adjacent modifiers a and b
``C_r``     complete span headed at a
``C_l``     complete span headed at b
``F_r``     finished span: C_r plus the right-boundary score of a
``F_l``     finished span: C_l plus the left-boundary score of b
==========  =====================================================

Within each width the tables are filled in the order I, S, C, F; a
finished cell of width w consumes the complete cell of the same width.
Negative infinity is the explicit "forbidden" sentinel; finite scores
never produce NaN.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Optional

import numpy as np

from .errors import ContractError, EmptySupportError, NoLegalTreeError
from .structures import DepTree

if TYPE_CHECKING:  # pragma: no cover
    from .constraints import ConstraintMask

NEG_INF = float("-inf")

#: Hard cap for the enumeration oracle.
BRUTE_FORCE_MAX_N = 8


@dataclass
class ScoreSet:
    """Dense log-score tables for arcs, adjacent siblings and span boundaries.

    Parameters
    ----------
    arc : (n+1, n+1) array
        ``arc[h, m]`` scores the arc h -> m, h in 0..n, m in 1..n, h != m.
        Column 0 and the diagonal are never read.
    sib : (n+1, n+1, n+1) array
        ``sib[h, s, m]`` scores adjacent modifiers s (inner) and m (outer)
        of head h; s lies strictly between h and m.
    span_left : (n+1, n+1) array
        ``span_left[k, i]`` scores the yield of head k starting at i.
        Row 0 is ignored (the root carries no span scores).
    span_right : (n+1, n+1) array
        ``span_right[k, j]`` scores the yield of head k ending at j.
    """

    arc: np.ndarray
    sib: np.ndarray
    span_left: np.ndarray
    span_right: np.ndarray

    def __post_init__(self):
        self.arc = np.asarray(self.arc, dtype=np.float64)
        self.sib = np.asarray(self.sib, dtype=np.float64)
        self.span_left = np.asarray(self.span_left, dtype=np.float64)
        self.span_right = np.asarray(self.span_right, dtype=np.float64)
        N = self.arc.shape[0]
        if N < 2 or self.arc.shape != (N, N):
            raise ContractError(f"arc table must be square with n >= 1, got {self.arc.shape}")
        if self.sib.shape != (N, N, N):
            raise ContractError("sib table shape mismatch")
        if self.span_left.shape != (N, N) or self.span_right.shape != (N, N):
            raise ContractError("span table shape mismatch")
        for a in (self.arc, self.sib, self.span_left, self.span_right):
            if np.isnan(a).any() or np.isposinf(a).any():
                raise ContractError("scores must be finite or -inf")

    @property
    def n(self) -> int:
        return self.arc.shape[0] - 1

    @classmethod
    def zeros(cls, n: int) -> "ScoreSet":
        N = n + 1
        return cls(np.zeros((N, N)), np.zeros((N, N, N)), np.zeros((N, N)), np.zeros((N, N)))


@dataclass
class ChartSet:
    """The filled DP tables of one inside/viterbi run (see module docstring)."""

    n: int
    I_r: np.ndarray
    I_l: np.ndarray
    S: np.ndarray
    C_r: np.ndarray
    C_l: np.ndarray
    F_r: np.ndarray
    F_l: np.ndarray


@dataclass
class Marginals:
    """Part-inclusion probabilities, shaped like the ScoreSet they derive from."""

    arc: np.ndarray
    sib: np.ndarray
    span_left: np.ndarray
    span_right: np.ndarray


def _lse(vec: np.ndarray) -> float:
    if vec.size == 0:
        return NEG_INF
    return float(np.logaddexp.reduce(vec))


def _gates(scores: ScoreSet, mask, root_window):
    """Effective (gated) arc scores plus finish/sibling gate tables."""
    N = scores.n + 1
    if mask is not None and getattr(mask, "n", scores.n) != scores.n:
        raise ContractError(f"mask is for n={mask.n}, scores for n={scores.n}")
    arcg = scores.arc.copy()
    np.fill_diagonal(arcg, NEG_INF)
    arcg[:, 0] = NEG_INF
    if mask is not None:
        arcg[~mask.arc_allowed] = NEG_INF
    if root_window is not None:
        keep = np.zeros(N, dtype=bool)
        for m in root_window:
            if not (1 <= m <= scores.n):
                raise ContractError(f"root window position {m} out of range")
            keep[m] = True
        row = arcg[0].copy()
        row[~keep] = NEG_INF
        arcg[0] = row
    if mask is not None:
        fin = mask.finish_allowed
        span_of = mask.span_of
    else:
        fin = np.ones((N, N), dtype=bool)
        span_of = np.full(N, -1, dtype=np.int64)
    return arcg, fin, span_of


def _sib_slice(scores, span_of, h, m, lo, hi):
    """Gated sibling scores sib[h, lo:hi, m]; pairs that would give an
    observed span two external heads are forbidden."""
    vec = scores.sib[h, lo:hi, m].copy()
    gm = span_of[m]
    if gm >= 0 and span_of[h] != gm:
        blocked = span_of[lo:hi] == gm
        vec[blocked] = NEG_INF
    return vec


def _new_tables(N):
    def t():
        a = np.full((N, N), NEG_INF)
        return a

    return t(), t(), t(), t(), t(), t(), t()


def _forward_log(scores: ScoreSet, mask, root_window) -> tuple[float, ChartSet]:
    n = scores.n
    N = n + 1
    arcg, fin, span_of = _gates(scores, mask, root_window)
    I_r, I_l, S, C_r, C_l, F_r, F_l = _new_tables(N)
    sl, sr = scores.span_left, scores.span_right

    for k in range(N):
        C_r[k, k] = C_l[k, k] = 0.0
        F_r[k, k] = sr[k, k] if fin[k, k] else NEG_INF
        F_l[k, k] = sl[k, k] if fin[k, k] else NEG_INF

    for w in range(1, N):
        for i in range(N - w):
            j = i + w
            rs = slice(i + 1, j)
            # incomplete spans
            if arcg[i, j] > NEG_INF:
                sib_terms = I_r[i, rs] + S[i + 1 : j, j] + _sib_slice(scores, span_of, i, j, i + 1, j)
                I_r[i, j] = np.logaddexp(F_l[i + 1, j], _lse(sib_terms)) + arcg[i, j]
            if i >= 1 and arcg[j, i] > NEG_INF:
                sib_terms = I_l[rs, j] + S[i, rs] + _sib_slice(scores, span_of, j, i, i + 1, j)
                I_l[i, j] = np.logaddexp(F_r[i, j - 1], _lse(sib_terms)) + arcg[j, i]
            # sibling spans (both endpoints are modifiers, so i >= 1)
            if i >= 1:
                S[i, j] = _lse(F_r[i, i:j] + F_l[i + 1 : j + 1, j])
            # complete spans
            C_r[i, j] = _lse(I_r[i, i + 1 : j + 1] + F_r[i + 1 : j + 1, j])
            C_l[i, j] = _lse(I_l[i:j, j] + F_l[i, i:j])
            # finished spans
            F_r[i, j] = C_r[i, j] + sr[i, j] if fin[i, j] else NEG_INF
            F_l[i, j] = C_l[i, j] + sl[j, i] if fin[j, i] else NEG_INF

    return float(C_r[0, n]), ChartSet(n, I_r, I_l, S, C_r, C_l, F_r, F_l)


def run_inside(scores: ScoreSet, mask=None, root_window=None) -> tuple[float, ChartSet]:
    """Inside pass returning both the log-partition value and the charts."""
    with np.errstate(invalid="ignore"):
        return _forward_log(scores, mask, root_window)


def inside(scores: ScoreSet, mask: Optional["ConstraintMask"] = None, root_window=None) -> float:
    """Log-partition over all projective trees permitted by ``mask``.

    Returns -inf when no legal tree exists.  Never returns NaN for
    finite-or--inf inputs.
    """
    value, _ = run_inside(scores, mask, root_window)
    return value


def marginals(scores: ScoreSet, mask: Optional["ConstraintMask"] = None, root_window=None) -> Marginals:
    """Exact part marginals: the gradient of ``inside`` w.r.t. every score.

    Computed by reverse-traversing the inside recursion in the log
    semiring; each cell redistributes its adjoint over the terms that
    produced it with softmax weights.
    """
    with np.errstate(invalid="ignore"):
        value, ch = _forward_log(scores, mask, root_window)
        if value == NEG_INF:
            raise EmptySupportError("no legal tree has positive weight")
        return _backward_log(scores, mask, root_window, ch)


def _backward_log(scores: ScoreSet, mask, root_window, ch: ChartSet) -> Marginals:
    n = ch.n
    N = n + 1
    arcg, fin, span_of = _gates(scores, mask, root_window)
    aI_r, aI_l, aS, aC_r, aC_l, aF_r, aF_l = (np.zeros((N, N)) for _ in range(7))
    g_arc = np.zeros((N, N))
    g_sib = np.zeros((N, N, N))
    g_sl = np.zeros((N, N))
    g_sr = np.zeros((N, N))

    aC_r[0, n] = 1.0

    for w in range(n, 0, -1):
        for i in range(N - w):
            j = i + w
            rs = slice(i + 1, j)
            # finished -> complete (+ boundary score gradients)
            a = aF_r[i, j]
            if a != 0.0 and ch.F_r[i, j] > NEG_INF:
                aC_r[i, j] += a
                g_sr[i, j] += a
            a = aF_l[i, j]
            if a != 0.0 and ch.F_l[i, j] > NEG_INF:
                aC_l[i, j] += a
                g_sl[j, i] += a
            # complete spans
            a = aC_r[i, j]
            if a != 0.0 and ch.C_r[i, j] > NEG_INF:
                wv = np.exp(ch.I_r[i, i + 1 : j + 1] + ch.F_r[i + 1 : j + 1, j] - ch.C_r[i, j]) * a
                aI_r[i, i + 1 : j + 1] += wv
                aF_r[i + 1 : j + 1, j] += wv
            a = aC_l[i, j]
            if a != 0.0 and ch.C_l[i, j] > NEG_INF:
                wv = np.exp(ch.I_l[i:j, j] + ch.F_l[i, i:j] - ch.C_l[i, j]) * a
                aI_l[i:j, j] += wv
                aF_l[i, i:j] += wv
            # sibling spans
            a = aS[i, j]
            if a != 0.0 and ch.S[i, j] > NEG_INF:
                wv = np.exp(ch.F_r[i, i:j] + ch.F_l[i + 1 : j + 1, j] - ch.S[i, j]) * a
                aF_r[i, i:j] += wv
                aF_l[i + 1 : j + 1, j] += wv
            # incomplete spans
            a = aI_r[i, j]
            if a != 0.0 and ch.I_r[i, j] > NEG_INF:
                g_arc[i, j] += a
                lse_val = ch.I_r[i, j] - arcg[i, j]
                aF_l[i + 1, j] += np.exp(ch.F_l[i + 1, j] - lse_val) * a
                sg = _sib_slice(scores, span_of, i, j, i + 1, j)
                wv = np.exp(ch.I_r[i, rs] + ch.S[i + 1 : j, j] + sg - lse_val) * a
                aI_r[i, rs] += wv
                aS[i + 1 : j, j] += wv
                g_sib[i, rs, j] += wv
            a = aI_l[i, j]
            if a != 0.0 and ch.I_l[i, j] > NEG_INF:
                g_arc[j, i] += a
                lse_val = ch.I_l[i, j] - arcg[j, i]
                aF_r[i, j - 1] += np.exp(ch.F_r[i, j - 1] - lse_val) * a
                sg = _sib_slice(scores, span_of, j, i, i + 1, j)
                wv = np.exp(ch.I_l[rs, j] + ch.S[i, rs] + sg - lse_val) * a
                aI_l[rs, j] += wv
                aS[i, rs] += wv
                g_sib[j, rs, i] += wv

    for k in range(N):
        if aF_r[k, k] != 0.0 and ch.F_r[k, k] > NEG_INF:
            g_sr[k, k] += aF_r[k, k]
        if aF_l[k, k] != 0.0 and ch.F_l[k, k] > NEG_INF:
            g_sl[k, k] += aF_l[k, k]

    g_sl[0, :] = 0.0
    g_sr[0, :] = 0.0
    return Marginals(g_arc, g_sib, g_sl, g_sr)


def _forward_max(scores: ScoreSet, mask, root_window):
    """Max-semiring pass with backpointers.

    Tie-breaking is deterministic: the first-modifier case is considered
    before sibling extensions, and split points are scanned in ascending
    order with strict improvement required.
    """
    n = scores.n
    N = n + 1
    arcg, fin, span_of = _gates(scores, mask, root_window)
    I_r, I_l, S, C_r, C_l, F_r, F_l = _new_tables(N)
    sl, sr = scores.span_left, scores.span_right
    bI_r = np.full((N, N), -1, dtype=np.int64)
    bI_l = np.full((N, N), -1, dtype=np.int64)
    bS = np.full((N, N), -1, dtype=np.int64)
    bC_r = np.full((N, N), -1, dtype=np.int64)
    bC_l = np.full((N, N), -1, dtype=np.int64)

    for k in range(N):
        C_r[k, k] = C_l[k, k] = 0.0
        F_r[k, k] = sr[k, k] if fin[k, k] else NEG_INF
        F_l[k, k] = sl[k, k] if fin[k, k] else NEG_INF

    def best(cands: np.ndarray, offset: int):
        if cands.size == 0:
            return NEG_INF, -1
        k = int(np.argmax(cands))
        v = float(cands[k])
        return v, (offset + k if v > NEG_INF else -1)

    for w in range(1, N):
        for i in range(N - w):
            j = i + w
            rs = slice(i + 1, j)
            if arcg[i, j] > NEG_INF:
                sib_terms = I_r[i, rs] + S[i + 1 : j, j] + _sib_slice(scores, span_of, i, j, i + 1, j)
                cands = np.concatenate(([F_l[i + 1, j]], sib_terms))
                v, k = best(cands, i)  # index 0 -> link case, recorded as r == i
                I_r[i, j] = v + arcg[i, j]
                bI_r[i, j] = k
            if i >= 1 and arcg[j, i] > NEG_INF:
                sib_terms = I_l[rs, j] + S[i, rs] + _sib_slice(scores, span_of, j, i, i + 1, j)
                cands = np.concatenate(([F_r[i, j - 1]], sib_terms))
                v, k = best(cands, i)  # r == i means the link case here too
                I_l[i, j] = v + arcg[j, i]
                bI_l[i, j] = j if k == i else k
            if i >= 1:
                v, k = best(F_r[i, i:j] + F_l[i + 1 : j + 1, j], i)
                S[i, j] = v
                bS[i, j] = k
            v, k = best(I_r[i, i + 1 : j + 1] + F_r[i + 1 : j + 1, j], i + 1)
            C_r[i, j] = v
            bC_r[i, j] = k
            v, k = best(I_l[i:j, j] + F_l[i, i:j], i)
            C_l[i, j] = v
            bC_l[i, j] = k
            F_r[i, j] = C_r[i, j] + sr[i, j] if fin[i, j] else NEG_INF
            F_l[i, j] = C_l[i, j] + sl[j, i] if fin[j, i] else NEG_INF

    charts = ChartSet(n, I_r, I_l, S, C_r, C_l, F_r, F_l)
    bps = (bI_r, bI_l, bS, bC_r, bC_l)
    return float(C_r[0, n]), charts, bps


def viterbi(
    scores: ScoreSet,
    mask: Optional["ConstraintMask"] = None,
    root_window: Optional[Iterable[int]] = None,
) -> tuple[DepTree, float]:
    """Highest-scoring projective tree over the masked search space.

    ``root_window`` restricts the modifier of the root arc 0 -> r to the
    given positions; it is realized purely as an arc gate.

    Raises NoLegalTreeError when the mask leaves no tree.
    """
    with np.errstate(invalid="ignore"):
        value, ch, bps = _forward_max(scores, mask, root_window)
    if value == NEG_INF:
        raise NoLegalTreeError("constraints admit no projective tree")
    bI_r, bI_l, bS, bC_r, bC_l = bps
    heads = [0] * scores.n
    stack = [("C_r", 0, scores.n)]
    while stack:
        kind, a, b = stack.pop()
        if a == b and kind in ("C_r", "C_l", "F_r", "F_l"):
            continue
        if kind == "F_r":
            stack.append(("C_r", a, b))
        elif kind == "F_l":
            stack.append(("C_l", a, b))
        elif kind == "C_r":
            r = int(bC_r[a, b])
            stack.append(("I_r", a, r))
            stack.append(("F_r", r, b))
        elif kind == "C_l":
            r = int(bC_l[a, b])
            stack.append(("I_l", r, b))
            stack.append(("F_l", a, r))
        elif kind == "I_r":
            heads[b - 1] = a
            r = int(bI_r[a, b])
            if r == a:
                stack.append(("F_l", a + 1, b))
            else:
                stack.append(("I_r", a, r))
                stack.append(("S", r, b))
        elif kind == "I_l":
            heads[a - 1] = b
            r = int(bI_l[a, b])
            if r == b:
                stack.append(("F_r", a, b - 1))
            else:
                stack.append(("I_l", r, b))
                stack.append(("S", a, r))
        else:  # sibling span
            r = int(bS[a, b])
            stack.append(("F_r", a, r))
            stack.append(("F_l", r + 1, b))
    return DepTree(tuple(heads)), value


def tree_score(scores: ScoreSet, tree: DepTree) -> float:
    """Score of one tree: arcs + adjacent siblings + yield-boundary scores.

    Raises ContractError for cyclic or non-projective input.
    """
    if tree.n != scores.n:
        raise ContractError(f"tree has n={tree.n}, scores n={scores.n}")
    yields = tree.yields()
    total = 0.0
    for m, h in enumerate(tree.heads, start=1):
        total += scores.arc[h, m]
    for h, s, m in tree.sibling_triples():
        total += scores.sib[h, s, m]
    for k in range(1, tree.n + 1):
        lo, hi = yields[k]
        total += scores.span_left[k, lo] + scores.span_right[k, hi]
    return float(total)


# ---------------------------------------------------------------------------
# Enumeration oracle
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _forests(lo: int, hi: int):
    """All ways to fill [lo, hi] with a sequence of complete subtrees.

    Returns tuples (arcs, roots); arcs are (modifier, head) pairs for the
    internal structure, roots the left-to-right block roots (unattached).
    """
    if lo > hi:
        return (((), ()),)
    out = []
    for b in range(lo, hi + 1):
        for r in range(lo, b + 1):
            for arcs1 in _subtrees(r, lo, b):
                for arcs2, roots in _forests(b + 1, hi):
                    out.append((arcs1 + arcs2, (r,) + roots))
    return tuple(out)


@lru_cache(maxsize=None)
def _subtrees(h: int, lo: int, hi: int):
    """All arc sets for a subtree headed at h whose yield is exactly [lo, hi]."""
    out = []
    for arcs_l, roots_l in _forests(lo, h - 1):
        attach_l = tuple((r, h) for r in roots_l)
        for arcs_r, roots_r in _forests(h + 1, hi):
            attach_r = tuple((r, h) for r in roots_r)
            out.append(arcs_l + attach_l + arcs_r + attach_r)
    return tuple(out)


class _TreePack:
    """All projective trees over 0..n, with part indices ready for numpy."""

    def __init__(self, n: int):
        N = n + 1
        trees = []
        for arcs in _subtrees(0, 0, n):
            heads = [0] * n
            for m, h in arcs:
                heads[m - 1] = h
            trees.append(DepTree(tuple(heads)))
        self.n = n
        self.trees = trees
        T = len(trees)
        self.heads = np.array([t.heads for t in trees], dtype=np.int64)  # (T, n)
        mods = np.arange(1, n + 1)
        self.arc_flat = (self.heads * N + mods).astype(np.int64)
        lb = np.empty((T, n), dtype=np.int64)
        rb = np.empty((T, n), dtype=np.int64)
        sib_h, sib_s, sib_m, sib_tree = [], [], [], []
        for ti, t in enumerate(trees):
            ys = t.yields()
            for k in range(1, n + 1):
                lb[ti, k - 1], rb[ti, k - 1] = ys[k]
            for h, s, m in t.sibling_triples():
                sib_h.append(h)
                sib_s.append(s)
                sib_m.append(m)
                sib_tree.append(ti)
        ks = mods
        self.sl_flat = (ks * N + lb).astype(np.int64)
        self.sr_flat = (ks * N + rb).astype(np.int64)
        self.sib_h = np.array(sib_h, dtype=np.int64)
        self.sib_s = np.array(sib_s, dtype=np.int64)
        self.sib_m = np.array(sib_m, dtype=np.int64)
        self.sib_tree = np.array(sib_tree, dtype=np.int64)

    def scores(self, ss: ScoreSet) -> np.ndarray:
        vals = ss.arc.ravel()[self.arc_flat].sum(axis=1)
        vals += ss.span_left.ravel()[self.sl_flat].sum(axis=1)
        vals += ss.span_right.ravel()[self.sr_flat].sum(axis=1)
        if self.sib_tree.size:
            sib_vals = ss.sib[self.sib_h, self.sib_s, self.sib_m]
            acc = np.zeros(len(self.trees))
            np.add.at(acc, self.sib_tree, sib_vals)
            vals += acc
        return vals

    def legal(self, mask, root_window) -> np.ndarray:
        T = len(self.trees)
        ok = np.ones(T, dtype=bool)
        if mask is not None:
            ok &= mask.arc_allowed.ravel()[self.arc_flat].all(axis=1)
            fin = mask.finish_allowed.ravel()
            ok &= fin[self.sl_flat].all(axis=1)
            ok &= fin[self.sr_flat].all(axis=1)
            if self.sib_tree.size:
                so = mask.span_of
                bad = (so[self.sib_s] == so[self.sib_m]) & (so[self.sib_s] >= 0)
                bad &= so[self.sib_h] != so[self.sib_m]
                if bad.any():
                    acc = np.ones(T, dtype=bool)
                    acc[self.sib_tree[bad]] = False
                    ok &= acc
        if root_window is not None:
            keep = np.zeros(self.n + 1, dtype=bool)
            for m in root_window:
                keep[m] = True
            root_arcs = self.heads == 0
            ok &= (~root_arcs | keep[np.arange(1, self.n + 1)]).all(axis=1)
        return ok


@lru_cache(maxsize=None)
def tree_pack(n: int) -> _TreePack:
    return _TreePack(n)


def brute_force(
    scores: ScoreSet,
    mask: Optional["ConstraintMask"] = None,
    mode: str = "sum",
    root_window: Optional[Iterable[int]] = None,
):
    """Enumeration oracle over all projective trees.

    ``mode="sum"`` returns the log-sum-exp of tree scores (a float);
    ``mode="max"`` returns (best score, best tree or None).  Enumeration is
    factorial-flavoured, so n is capped at BRUTE_FORCE_MAX_N.
    """
    if scores.n > BRUTE_FORCE_MAX_N:
        raise ContractError(f"brute_force refuses n={scores.n} > {BRUTE_FORCE_MAX_N}")
    if mask is not None and mask.n != scores.n:
        raise ContractError("mask/scores dimension mismatch")
    if mode not in ("sum", "max"):
        raise ContractError(f"unknown mode {mode!r}")
    pack = tree_pack(scores.n)
    vals = pack.scores(scores)
    legal = pack.legal(mask, root_window)
    vals = np.where(legal, vals, NEG_INF)
    if mode == "sum":
        hi = vals.max()
        if hi == NEG_INF:
            return NEG_INF
        return float(hi + np.log(np.exp(vals - hi).sum()))
    k = int(np.argmax(vals))
    if vals[k] == NEG_INF:
        return NEG_INF, None
    return float(vals[k]), pack.trees[k]


def dump_charts(charts: ChartSet) -> str:
    """Line-oriented debug dump: one "name a b value" line per finite cell."""
    lines = [f"n {charts.n}"]
    tables = [
        ("I_r", charts.I_r),
        ("I_l", charts.I_l),
        ("S", charts.S),
        ("C_r", charts.C_r),
        ("C_l", charts.C_l),
        ("F_r", charts.F_r),
        ("F_l", charts.F_l),
    ]
    for name, table in tables:
        for a in range(charts.n + 1):
            for b in range(a, charts.n + 1):
                v = table[a, b]
                if v > NEG_INF:
                    lines.append(f"{name} {a} {b} {v:.9f}")
    return "\n".join(lines) + "\n"
