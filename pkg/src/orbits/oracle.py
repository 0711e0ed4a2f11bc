"""Move-generated reconstruction of the closure poset, independent of the formula.

Within one stratum J the closed orbit is the canonicalization of
(w0, w0*w0J).b_J, i.e. the label (J, w0^J, w0^J, w0J) where w0^J = w0*w0J.
Every other orbit closure in the stratum is swept out from it by rank-1
parabolic multiplications: fix the reduced words

    left word  = word(sigma2 * rho2 * w0),
    right word = word(tau2 * w0J * w0),

and apply the corresponding LEFT/RIGHT moves last letter first.  Applying all
of them drives the minimal orbit's coordinates monotonically onto
(sigma2*rho2, tau2); applying arbitrary subsequences reaches exactly the
labels whose closures lie inside closure(O2).  That subword saturation is the
same-stratum order.  Crossing strata, the closure of an orbit meets each
codimension-one smaller stratum in its intersection components; those
degeneration edges plus the within-stratum relations generate (by
transitivity) the whole closure order.

Nothing here calls the closed-form comparison criterion; agreement of
`oracle_poset` with `closure_poset` is checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coxeter import DEFAULT_CAP, longest_element
from .orbit_model import (
    LEFT,
    RIGHT,
    ClosurePoset,
    OrbitLabel,
    canonicalize,
    enumerate_orbits,
    intersection_components,
    label_str,
    rank1_act,
    strata,
)

__all__ = [
    "MoveTrace",
    "minimal_orbit",
    "move_trace",
    "replay_moves",
    "subword_closure_same_stratum",
    "oracle_poset",
    "compare_posets",
]


def minimal_orbit(rs, J):
    """The closed P x P^- orbit of stratum J: canonicalize(J, w0, w0*w0J)."""
    w0 = longest_element(rs)
    w0J = longest_element(rs, J)
    return canonicalize(rs, J, w0, w0 * w0J)


def _greedy_max_word(w):
    """The reduced word picking the largest left descent at each step (lex-last)."""
    letters = []
    cur = w
    rs = w.system
    while cur.length:
        inv = cur.inverse()
        for i in reversed(range(rs.rank)):
            if inv.perm[rs._simple_index[i]] < 0:
                letters.append(i)
                cur = rs.simple_reflection(i) * cur
                break
    return tuple(letters)


def _moves_for(O2, alternate=False):
    """The (side, alpha) move sequence carrying minimal_orbit(J) onto O2."""
    rs = O2.system
    w0 = longest_element(rs)
    w0J = longest_element(rs, O2.I)
    left = O2.sigma * O2.rho * w0
    right = O2.tau * w0J * w0
    lw = _greedy_max_word(left) if alternate else left.word
    rw = _greedy_max_word(right) if alternate else right.word
    return tuple(
        [(LEFT, a) for a in reversed(lw)] + [(RIGHT, a) for a in reversed(rw)]
    )


@dataclass(frozen=True)
class MoveTrace:
    """A replayable move certificate: rank1_act along `moves` from `start`
    lands on `end`."""

    start: OrbitLabel
    moves: tuple  # of (side, simple index)
    end: OrbitLabel


def replay_moves(start, moves):
    O = start
    for side, alpha in moves:
        O = rank1_act(O, side, alpha)
    return O


def move_trace(O2, alternate=False):
    """Certificate that O2 is reachable from its stratum's minimal orbit."""
    start = minimal_orbit(O2.system, O2.I)
    moves = _moves_for(O2, alternate)
    return MoveTrace(start, moves, O2)


def subword_closure_same_stratum(O2, alternate=False):
    """All labels reachable from minimal_orbit(O2.I) by subsequences of O2's moves.

    This is the within-stratum lower set of O2 in the closure order (checked
    against the closed-form criterion, not assumed).  `alternate` switches to
    a second pair of reduced words for the expression-independence tests.
    """
    reach = {minimal_orbit(O2.system, O2.I)}
    for side, alpha in _moves_for(O2, alternate):
        reach |= {rank1_act(O, side, alpha) for O in reach}
    return reach


def oracle_poset(rs, cap=DEFAULT_CAP, alternate=False):
    """Closure poset rebuilt from moves + degenerations + transitivity only.

    Generators of the relation: (a) within each stratum, O1 <= O2 whenever O1
    is in subword_closure_same_stratum(O2); (b) L <= O for every intersection
    component L of O at a codimension-one smaller stratum.  The matrix is then
    closed transitively.
    """
    labels = enumerate_orbits(rs, cap=cap)
    n = len(labels)
    index = {L: i for i, L in enumerate(labels)}
    leq = np.eye(n, dtype=bool)

    # (a) within-stratum subword saturation, one DP per target label
    by_stratum = {}
    for L in labels:
        by_stratum.setdefault(L.I, []).append(L)
    for J, stratum_labels in by_stratum.items():
        local = {L: k for k, L in enumerate(stratum_labels)}
        m = len(stratum_labels)
        trans = {}
        for side in (LEFT, RIGHT):
            for alpha in range(rs.rank):
                arr = np.empty(m, dtype=np.int32)
                for L, k in local.items():
                    arr[k] = local[rank1_act(L, side, alpha)]
                trans[side, alpha] = arr
        start = local[minimal_orbit(rs, J)]
        for L in stratum_labels:
            reach = np.zeros(m, dtype=bool)
            reach[start] = True
            for move in _moves_for(L, alternate):
                reach[trans[move][reach]] = True
            src = [index[stratum_labels[k]] for k in np.nonzero(reach)[0]]
            leq[src, index[L]] = True

    # (b) degeneration edges into each codimension-one smaller stratum
    for L in labels:
        for j in L.I:
            I = tuple(i for i in L.I if i != j)
            for C in intersection_components(L, I, cap):
                leq[index[C], index[L]] = True

    # transitive closure by repeated boolean squaring
    while True:
        more = (leq.astype(np.float32) @ leq.astype(np.float32)) > 0.5
        more |= leq
        if (more == leq).all():
            break
        leq = more

    return ClosurePoset(labels, leq)


def compare_posets(p1, p2):
    """Ordered pairs present in exactly one of the two posets (empty iff equal).

    Returns a list of {"below", "above", "only_in"} records; raises if the
    label universes differ.
    """
    if p1.labels != p2.labels:
        raise ValueError("posets are over different label universes")
    diff = []
    r1, r2 = p1.relation_pairs(), p2.relation_pairs()
    for i, j in sorted(r1 ^ r2):
        where = "first" if (i, j) in r1 else "second"
        diff.append(
            {
                "below": label_str(p1.labels[i]),
                "above": label_str(p1.labels[j]),
                "only_in": where,
            }
        )
    return diff
