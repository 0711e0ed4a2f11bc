"""Orbit calculus of the compactified group: labels, dimensions, moves, closure order.

Every P x P^- orbit in the compactification of the adjoint group is named by a
quadruple (I, sigma, tau, rho): I a subset of the simple roots picking the
G x G stratum (I = Delta is the dense stratum, i.e. the group; I = empty the
closed one), sigma and tau minimal coset representatives in W^I, and rho in
W_I.  The orbit is (sigma*rho, tau) . b_I, and the diagonal W_I-action on the
pair is what `canonicalize` quotients away: (x, y) ~ (x*v, y*v) for v in W_I.

Unit-weight dimension bookkeeping (the split model):

    codim inside the stratum closure  = d(sigma) + d(tau) + d(rho),
    dimension                        = 2N - l(sigma*rho) - l(tau) + |I|,
    #points over F_q                 = q^(2N - l(sigma*rho) - l(tau)) (q-1)^|I|,

with N the number of positive roots.  The rank-1 parabolic P_alpha acts on an
orbit closure from the left by either shortening sigma (if l(s_a sigma) goes
down) or, in the exchange case s_a sigma = sigma s_b with b in I, shortening
rho; otherwise the closure is stable.  The mirrored action on the right works
on tau and rho s_b.  Orbit closures are ordered by

    O1 <= O2  iff  I1 c I2 and there are v in W_{I2} n W^{I1}, u in W_{I1}
              with  sigma1 rho1 u >= sigma2 rho2 v,   tau1 >= tau2 v u^{-1},
              and   l(rho2) = l(rho2 v) + l(v),

which for I1 = I2 forces v = e.  Closures of strata meet smaller strata in a
union of irreducible components, one for each v in W_J n W^I with
l(sigma rho) = l(sigma rho v) + l(v): the component labeled by canonicalizing
(sigma rho v, tau v) in stratum I.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import re

import numpy as np

from .coxeter import (
    ASCENT_IN_WJ,
    DEFAULT_CAP,
    DESCENT_IN_WJ,
    EXCHANGE,
    WeightFunction,
    bruhat_leq,
    coset_decompose,
    enumerate_group,
    in_parabolic,
    min_coset_reps,
    parabolic_trichotomy,
    parse_word,
    weighted_length,
    word_str,
)

__all__ = [
    "LEFT",
    "RIGHT",
    "OrbitLabel",
    "ClosurePoset",
    "LabelParseError",
    "strata",
    "enumerate_orbits",
    "canonicalize",
    "stratum_leq",
    "codim",
    "split_dimension",
    "point_count_poly",
    "poly_str",
    "poly_eval",
    "rank1_act",
    "is_stable",
    "unique_predecessor",
    "closure_leq",
    "closure_leq_witness",
    "closure_leq_same_stratum",
    "intersection_components",
    "closure_poset",
    "label_str",
    "parse_label",
]

LEFT = "left"
RIGHT = "right"


class OrbitLabel:
    """The canonical name (I, sigma, tau, rho) of one P x P^- orbit."""

    __slots__ = ("system", "I", "sigma", "tau", "rho", "_hash")

    def __init__(self, I, sigma, tau, rho):
        system = sigma.system
        if tau.system is not system or rho.system is not system:
            raise ValueError("label components belong to different root systems")
        I = tuple(sorted(set(int(i) for i in I)))
        for i in I:
            if not 0 <= i < system.rank:
                raise ValueError("stratum index %r out of range" % (i,))
        if not all(sigma.sends_positive(i) for i in I):
            raise ValueError("sigma is not a minimal coset representative mod W_I")
        if not all(tau.sends_positive(i) for i in I):
            raise ValueError("tau is not a minimal coset representative mod W_I")
        if not in_parabolic(rho, I):
            raise ValueError("rho is not in the parabolic subgroup W_I")
        self.system = system
        self.I = I
        self.sigma = sigma
        self.tau = tau
        self.rho = rho
        self._hash = None

    def key(self):
        """Deterministic sort key: stratum by (size, indices), then ShortLex."""
        return (
            (len(self.I), self.I),
            self.sigma.shortlex_key(),
            self.tau.shortlex_key(),
            self.rho.shortlex_key(),
        )

    def __eq__(self, other):
        return (
            isinstance(other, OrbitLabel)
            and other.system is self.system
            and other.I == self.I
            and other.sigma.perm == self.sigma.perm
            and other.tau.perm == self.tau.perm
            and other.rho.perm == self.rho.perm
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.I, self.sigma.perm, self.tau.perm, self.rho.perm)
            )
        return self._hash

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return "<orbit %s>" % label_str(self)


def label_str(O):
    """Serialize a label: I=[2];sigma=1.2;tau=e;rho=2 (1-based indices)."""
    return "I=[%s];sigma=%s;tau=%s;rho=%s" % (
        ",".join(str(i + 1) for i in O.I),
        word_str(O.sigma),
        word_str(O.tau),
        word_str(O.rho),
    )


class LabelParseError(ValueError):
    """Bad or non-canonical label string; .suggestion holds the canonical form
    when one can be inferred."""

    def __init__(self, message, suggestion=None):
        super().__init__(message)
        self.suggestion = suggestion


_LABEL_RE = re.compile(r"^I=\[([0-9,]*)\];sigma=([^;]+);tau=([^;]+);rho=([^;]+)$")


def parse_label(rs, s):
    """Parse label_str output; reject non-canonical input with a suggestion."""
    m = _LABEL_RE.match(s.strip())
    if not m:
        raise LabelParseError("cannot parse label %r" % (s,))
    istr, sstr, tstr, rstr = m.groups()
    try:
        I = tuple(int(p) - 1 for p in istr.split(",")) if istr else ()
        sigma = parse_word(rs, sstr)
        tau = parse_word(rs, tstr)
        rho = parse_word(rs, rstr)
    except ValueError as e:
        raise LabelParseError("cannot parse label %r: %s" % (s, e)) from None
    suggestion = label_str(canonicalize(rs, I, sigma * rho, tau))
    for given, w, name in ((sstr, sigma, "sigma"), (tstr, tau, "tau"), (rstr, rho, "rho")):
        if given != word_str(w):
            raise LabelParseError(
                "%s=%r is not a canonical reduced word (canonical label: %s)"
                % (name, given, suggestion),
                suggestion,
            )
    try:
        return OrbitLabel(I, sigma, tau, rho)
    except ValueError as e:
        raise LabelParseError(
            "%s (canonical label: %s)" % (e, suggestion), suggestion
        ) from None


def strata(rs):
    """All subsets of the simple roots, ordered by (size, indices)."""
    out = []
    for k in range(rs.rank + 1):
        out.extend(itertools.combinations(range(rs.rank), k))
    return out


def enumerate_orbits(rs, J=None, cap=DEFAULT_CAP):
    """All orbit labels (restricted to stratum J when given), in canonical order.

    Canonical order: stratum by (size, indices), then ShortLex on sigma, tau,
    rho.  The count in stratum J is |W^J|^2 * |W_J| = |W|^2 / |W_J|.
    """
    if J is not None:
        J = tuple(sorted(set(J)))
        reps = min_coset_reps(rs, J, cap)
        par = [w for w in enumerate_group(rs, cap) if in_parabolic(w, J)]
        return [
            OrbitLabel(J, s, t, r)
            for s in reps
            for t in reps
            for r in par
        ]
    out = []
    for J2 in strata(rs):
        out.extend(enumerate_orbits(rs, J2, cap))
    return out


def canonicalize(rs, I, x, y):
    """The unique label with (sigma*rho, tau) in the diagonal W_I-class of (x, y).

    Decompose y = y_min * y_par; the stabilizer lets us slide v = y_par^{-1}
    onto both coordinates, leaving tau = y_min in W^I; then split x*v into
    sigma * rho.
    """
    I = tuple(sorted(set(I)))
    y_min, y_par = coset_decompose(y, I)
    sigma, rho = coset_decompose(x * y_par.inverse(), I)
    return OrbitLabel(I, sigma, y_min, rho)


def stratum_leq(I, J):
    """Stratum closure order: X_I lies in the closure of X_J iff I is a subset."""
    return set(I) <= set(J)


def _weights(O, c):
    if c is None:
        return WeightFunction.unit(O.system)
    if c.system is not O.system:
        raise ValueError("weight function belongs to a different root system")
    return c


def codim(O, c=None):
    """Codimension of the orbit inside its stratum closure: d(sigma)+d(tau)+d(rho)."""
    c = _weights(O, c)
    return (
        weighted_length(O.sigma, c)
        + weighted_length(O.tau, c)
        + weighted_length(O.rho, c)
    )


def _require_unit(c, O, what):
    if c is not None and not c.is_unit:
        raise ValueError("%s is defined for the split (unit-weight) model only" % what)


def split_dimension(O, c=None):
    """Orbit dimension in the split model: 2N - l(sigma*rho) - l(tau) + |I|."""
    _require_unit(c, O, "split_dimension")
    n = O.system.num_positive()
    return 2 * n - (O.sigma.length + O.rho.length) - O.tau.length + len(O.I)


def point_count_poly(O, c=None):
    """#O(F_q) in the split adjoint model, as q^(2N-l(sigma rho)-l(tau)) (q-1)^|I|.

    Returned as a tuple of integer coefficients, ascending powers of q.
    """
    _require_unit(c, O, "point_count_poly")
    n = O.system.num_positive()
    power = 2 * n - (O.sigma.length + O.rho.length) - O.tau.length
    coeffs = [0] * power + [1]
    for _ in O.I:
        # multiply by (q - 1):  q*p  minus  p
        coeffs = [a - b for a, b in zip([0] + coeffs, coeffs + [0])]
    return tuple(coeffs)


def poly_eval(coeffs, q):
    return sum(c * q ** k for k, c in enumerate(coeffs))


def poly_str(coeffs):
    """Human form, highest power first: e.g. q^3+q^2+q+1 or q^2-q."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            head = "" if abs(c) == 1 else str(abs(c)) + "*"
            body = head + ("q" if k == 1 else "q^%d" % k)
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += sign + body
    return out


def rank1_act(O, side, alpha):
    """Label of the dense orbit of P_alpha . closure(O) (LEFT) or closure(O) . P_alpha (RIGHT).

    LEFT: if l(s_a sigma) < l(sigma), sigma shortens; in the exchange case
    s_a sigma = sigma s_b with b in I and l(s_b rho) < l(rho), rho shortens;
    otherwise O is returned unchanged.  RIGHT mirrors on tau and rho * s_b.
    """
    rs = O.system
    s = rs.simple_reflection(alpha)
    if side == LEFT:
        case, beta = parabolic_trichotomy(O.sigma, O.I, alpha)
        if case == DESCENT_IN_WJ:
            return OrbitLabel(O.I, s * O.sigma, O.tau, O.rho)
        if case == EXCHANGE:
            rho2 = rs.simple_reflection(beta) * O.rho
            if rho2.length < O.rho.length:
                return OrbitLabel(O.I, O.sigma, O.tau, rho2)
        return O
    if side == RIGHT:
        case, beta = parabolic_trichotomy(O.tau, O.I, alpha)
        if case == DESCENT_IN_WJ:
            return OrbitLabel(O.I, O.sigma, s * O.tau, O.rho)
        if case == EXCHANGE:
            rho2 = O.rho * rs.simple_reflection(beta)
            if rho2.length < O.rho.length:
                return OrbitLabel(O.I, O.sigma, O.tau, rho2)
        return O
    raise ValueError("side must be LEFT or RIGHT")


def is_stable(O, side, alpha):
    """True iff the rank-1 parabolic does not enlarge the orbit closure.

    Characterized by a single length test: l(s_a sigma rho) > l(sigma rho) on
    the LEFT, l(s_a tau rho^{-1}) > l(tau rho^{-1}) on the RIGHT.
    """
    s = O.system.simple_reflection(alpha)
    if side == LEFT:
        x = O.sigma * O.rho
    elif side == RIGHT:
        x = O.tau * O.rho.inverse()
    else:
        raise ValueError("side must be LEFT or RIGHT")
    return (s * x).length > x.length


def unique_predecessor(O, side, alpha):
    """The unique label O0 != O with rank1_act(O0, side, alpha) = O.

    Defined exactly on stable labels: the ascent case lifts sigma (resp. tau)
    to s_a sigma; the exchange case lifts rho to s_b rho (resp. rho s_b).
    Raises on unstable labels, naming the trichotomy case that rules it out.
    """
    rs = O.system
    s = rs.simple_reflection(alpha)
    if side == LEFT:
        case, beta = parabolic_trichotomy(O.sigma, O.I, alpha)
        if case == ASCENT_IN_WJ:
            return OrbitLabel(O.I, s * O.sigma, O.tau, O.rho)
        if case == EXCHANGE:
            rho2 = rs.simple_reflection(beta) * O.rho
            if rho2.length > O.rho.length:
                return OrbitLabel(O.I, O.sigma, O.tau, rho2)
            raise ValueError(
                "unstable label: exchange case with l(s_b rho) < l(rho)"
            )
        raise ValueError("unstable label: descent case l(s_a sigma) < l(sigma)")
    if side == RIGHT:
        case, beta = parabolic_trichotomy(O.tau, O.I, alpha)
        if case == ASCENT_IN_WJ:
            return OrbitLabel(O.I, O.sigma, s * O.tau, O.rho)
        if case == EXCHANGE:
            rho2 = O.rho * rs.simple_reflection(beta)
            if rho2.length > O.rho.length:
                return OrbitLabel(O.I, O.sigma, O.tau, rho2)
            raise ValueError(
                "unstable label: exchange case with l(rho s_b) < l(rho)"
            )
        raise ValueError("unstable label: descent case l(s_a tau) < l(tau)")
    raise ValueError("side must be LEFT or RIGHT")


def closure_leq_witness(O1, O2, cap=DEFAULT_CAP):
    """(u, v) witnessing closure containment O1 <= O2, or None.

    Searches v in W_{I2} n W^{I1} subject to l(rho2) = l(rho2 v) + l(v), then
    u in W_{I1}, for sigma1 rho1 u >= sigma2 rho2 v and tau1 >= tau2 v u^{-1};
    both loops in ShortLex order, first hit returned.
    """
    if O1.system is not O2.system:
        raise ValueError("labels belong to different root systems")
    if not stratum_leq(O1.I, O2.I):
        return None
    rs = O1.system
    W = enumerate_group(rs, cap)
    vs = [
        v
        for v in W
        if in_parabolic(v, O2.I)
        and all(v.sends_positive(i) for i in O1.I)
        and (O2.rho * v).length == O2.rho.length - v.length
    ]
    us = [u for u in W if in_parabolic(u, O1.I)]
    a1, t1 = O1.sigma * O1.rho, O1.tau
    a2, t2 = O2.sigma * O2.rho, O2.tau
    for v in vs:
        a2v = a2 * v
        t2v = t2 * v
        for u in us:
            if bruhat_leq(a2v, a1 * u) and bruhat_leq(t2v * u.inverse(), t1):
                return u, v
    return None


def closure_leq(O1, O2, cap=DEFAULT_CAP):
    """Closure order on orbit labels: O1 lies in the closure of O2."""
    return closure_leq_witness(O1, O2, cap) is not None


def closure_leq_same_stratum(O1, O2, cap=DEFAULT_CAP):
    """Within one stratum: exists u in W_J with sigma1 rho1 u >= sigma2 rho2
    and tau1 >= tau2 u^{-1}."""
    if O1.I != O2.I:
        raise ValueError("labels lie in different strata")
    return closure_leq(O1, O2, cap)


def intersection_components(O, I, cap=DEFAULT_CAP):
    """Labels of the irreducible components of closure(O) n closure(stratum I).

    One component for each v in W_J n W^I with l(sigma rho) = l(sigma rho v)
    + l(v) (J = O.I): the canonicalization of (sigma rho v, tau v) in stratum
    I.  Empty when I is not contained in O.I.
    """
    I = tuple(sorted(set(I)))
    if not stratum_leq(I, O.I):
        return []
    rs = O.system
    a = O.sigma * O.rho
    out = []
    for v in enumerate_group(rs, cap):
        if not in_parabolic(v, O.I):
            continue
        if not all(v.sends_positive(i) for i in I):
            continue
        if (a * v).length != a.length - v.length:
            continue
        out.append(canonicalize(rs, I, a * v, O.tau * v))
    return out


class ClosurePoset:
    """All labels of one group plus the closure partial order.

    labels are in canonical order; leq is a boolean matrix (leq[i, j] says
    labels[i] <= labels[j]); hasse holds the covering pairs (i, j), i covered
    by j, i.e. the transitive reduction.
    """

    def __init__(self, labels, leq):
        self.labels = tuple(labels)
        self.leq = leq
        self._index = {L: i for i, L in enumerate(self.labels)}
        strict = leq & ~np.eye(len(self.labels), dtype=bool)
        two_step = (strict.astype(np.float32) @ strict.astype(np.float32)) > 0.5
        cover = strict & ~two_step
        self.hasse = tuple(
            (int(i), int(j)) for i, j in np.argwhere(cover)
        )

    def index(self, label):
        return self._index[label]

    def leq_labels(self, O1, O2):
        return bool(self.leq[self._index[O1], self._index[O2]])

    def relation_pairs(self):
        """The full strict relation as a set of index pairs (i < j in the order)."""
        strict = self.leq & ~np.eye(len(self.labels), dtype=bool)
        return {(int(i), int(j)) for i, j in np.argwhere(strict)}

    def to_json_obj(self):
        return {
            "labels": [label_str(L) for L in self.labels],
            "hasse": [list(e) for e in sorted(self.hasse)],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)

    def to_dot(self):
        lines = ["digraph closure {", "  rankdir=BT;", '  node [shape=box];']
        for i, L in enumerate(self.labels):
            lines.append('  n%d [label="%s"];' % (i, label_str(L)))
        dims = {}
        for i, L in enumerate(self.labels):
            dims.setdefault(split_dimension(L), []).append(i)
        for d in sorted(dims):
            lines.append(
                "  { rank=same; %s }" % " ".join("n%d;" % i for i in dims[d])
            )
        for i, j in sorted(self.hasse):
            lines.append("  n%d -> n%d;" % (i, j))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_csv(self):
        """Per-stratum summary: stratum, count, min_dim, max_dim."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["stratum", "count", "min_dim", "max_dim"])
        groups = {}
        for L in self.labels:
            groups.setdefault(L.I, []).append(split_dimension(L))
        for I in sorted(groups, key=lambda I: (len(I), I)):
            dims = groups[I]
            writer.writerow(
                [
                    "[%s]" % ",".join(str(i + 1) for i in I),
                    len(dims),
                    min(dims),
                    max(dims),
                ]
            )
        return buf.getvalue()


def closure_poset(rs, cap=DEFAULT_CAP):
    """The full closure poset, built from the pairwise criterion (vectorized)."""
    tab = rs.tables(cap)
    labels = enumerate_orbits(rs, cap=cap)
    n = len(labels)
    leq = np.zeros((n, n), dtype=bool)

    by_stratum = {}
    for i, L in enumerate(labels):
        by_stratum.setdefault(L.I, []).append(i)

    elems = tab.elements
    length = tab.length
    mult = tab.mult
    inv = tab.inverse
    le = tab.le

    pos = {}
    for I, idxs in by_stratum.items():
        a = np.array([tab.idx(labels[i].sigma * labels[i].rho) for i in idxs])
        t = np.array([tab.idx(labels[i].tau) for i in idxs])
        r = np.array([tab.idx(labels[i].rho) for i in idxs])
        pos[I] = (np.array(idxs), a, t, r)

    for I1, (idx1, a1, t1, _r1) in pos.items():
        for I2, (idx2, a2, t2, r2) in pos.items():
            if not set(I1) <= set(I2):
                continue
            vmask = tab.parabolic_mask(I2) & tab.minrep_mask(I1)
            umask = tab.parabolic_mask(I1)
            block = np.zeros((len(idx1), len(idx2)), dtype=bool)
            for v in np.nonzero(vmask)[0]:
                ok2 = length[mult[r2, v]] == length[r2] - length[v]
                if not ok2.any():
                    continue
                a2v = mult[a2, v]
                t2v = mult[t2, v]
                for u in np.nonzero(umask)[0]:
                    a1u = mult[a1, u]
                    t2vu = mult[t2v, inv[u]]
                    hit = le[a2v[None, :], a1u[:, None]] & le[t2vu[None, :], t1[:, None]]
                    block |= hit & ok2[None, :]
            leq[np.ix_(idx1, idx2)] = block

    return ClosurePoset(labels, leq)
