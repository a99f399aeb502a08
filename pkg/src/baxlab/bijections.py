"""The maps between Baxter permutations, path triples, and histories.

Three statistic-encoding correspondences are provided, together with their
inverse algorithms:

* ``gamma``        bottom/middle/top encode IDB / DES / (IDT - 1)
* ``gamma_prime``  bottom/middle/top encode DB / IDES / (DT - 1)
* ``psi``          bottom/middle/top encode DB / IDES / (DT u {p_n}) - {n},
                   obtained by composing ``psi_fv`` with the path builder
                   ``phi``.

``gamma_prime`` and ``psi`` always agree on the bottom and middle paths; the
inverse of ``gamma_prime`` works by rewriting the top path into ``psi`` form
and delegating to ``psi_inverse``.
"""
from __future__ import annotations

from .laguerre import LaguerreHistory, MalformedHistoryError, psi_fv, psi_fv_inverse, validate
from .paths import (
    BOTTOM_START,
    MIDDLE_START,
    TOP_START,
    LatticePath,
    PathTriple,
    decode_path,
    encode_set,
    is_nonintersecting,
    tlp_parameters,
)
from .perm import Perm, inverse, is_baxter, stat_profile


class NotBaxterError(ValueError):
    """The permutation contains 2-41-3 or 3-14-2."""


class NotInImageError(ValueError):
    """The triple does not come from any Baxter permutation."""


class MalformedMiddleError(ValueError):
    """The weights do not chain into a unit-step middle path."""


def gamma(p: Perm, *, checked: bool = True) -> PathTriple:
    """Triple encoding (IDB, DES, IDT - 1); defined on Baxter permutations.

    With ``checked`` disabled the paths are built for any permutation, but
    they may then intersect or carry unequal step counts.
    """
    if checked and not is_baxter(p):
        raise NotBaxterError(f"{p!r} contains 2-41-3 or 3-14-2")
    prof = stat_profile(p)
    m = len(p) - 1
    return PathTriple(
        encode_set(prof.idb_set, m, BOTTOM_START),
        encode_set(prof.des_set, m, MIDDLE_START),
        encode_set(prof.idt_mod_set, m, TOP_START),
    )


def gamma_prime(p: Perm, *, checked: bool = True) -> PathTriple:
    """Triple encoding (DB, IDES, DT - 1); equals ``gamma`` of the inverse."""
    return gamma(inverse(p), checked=checked)


def phi(h: LaguerreHistory) -> PathTriple:
    """Build the path triple determined by a history.

    Bottom step i is horizontal iff step i is U or B, top step i iff it is
    D or B.  The middle path is pinned pointwise: its i-th step starts at the
    bottom's i-th step start shifted by (-mu_i, +mu_i), and its last vertex
    is the bottom endpoint shifted by (-1, +1).  If consecutive pinned points
    do not differ by a unit step the weights violate the increment rules and
    a :class:`MalformedMiddleError` is raised.
    """
    val = validate(h)
    if not val.laguerre_ok:
        raise MalformedHistoryError("weights leave their bounds or word does not close")
    m = len(h)
    bottom = LatticePath(BOTTOM_START, "".join("H" if c in "UB" else "V" for c in h.word))
    top = LatticePath(TOP_START, "".join("H" if c in "DB" else "V" for c in h.word))
    bverts = bottom.vertices()
    points = [
        (bverts[i][0] - h.weights[i], bverts[i][1] + h.weights[i]) for i in range(m)
    ]
    points.append((bverts[m][0] - 1, bverts[m][1] + 1))
    steps = []
    for i in range(m):
        dx = points[i + 1][0] - points[i][0]
        dy = points[i + 1][1] - points[i][1]
        if (dx, dy) == (1, 0):
            steps.append("H")
        elif (dx, dy) == (0, 1):
            steps.append("V")
        else:
            raise MalformedMiddleError(
                f"middle step {i + 1} would jump by ({dx}, {dy}); "
                "weights do not satisfy the increment rules"
            )
    triple = PathTriple(bottom, LatticePath(MIDDLE_START, "".join(steps)), top)
    assert is_nonintersecting(triple)
    return triple


def phi_inverse(t: PathTriple) -> LaguerreHistory:
    """Recover the history from a triple.

    The word is read off the (top, bottom) step pairs; the weight of step i
    is the horizontal offset between the bottom and middle step starts,
    cross-checked against the vertical offset.
    """
    tlp_parameters(t)
    m = t.n - 1
    pair_to_letter = {
        ("V", "H"): "U",
        ("H", "V"): "D",
        ("V", "V"): "R",
        ("H", "H"): "B",
    }
    word = "".join(pair_to_letter[(wt, wb)] for wt, wb in zip(t.top.steps, t.bottom.steps))
    bverts = t.bottom.vertices()
    mverts = t.middle.vertices()
    weights = []
    for i in range(m):
        dx = bverts[i][0] - mverts[i][0]
        dy = mverts[i][1] - bverts[i][1]
        if dx != dy:
            raise NotInImageError(
                f"step {i + 1}: middle offset ({dx}, {dy}) from the bottom is not diagonal"
            )
        weights.append(dx)
    h = LaguerreHistory(word, tuple(weights))
    val = validate(h)
    if not val.baxter_ok:
        raise NotInImageError("recovered weights violate the history rules")
    return h


def psi(p: Perm) -> PathTriple:
    """Triple encoding (DB, IDES, (DT u {p_n}) - {n}); Baxter input only."""
    if not is_baxter(p):
        raise NotBaxterError(f"{p!r} contains 2-41-3 or 3-14-2")
    return phi(psi_fv(p))


def psi_inverse(t: PathTriple) -> Perm:
    """Inverse of :func:`psi`: history recovery followed by placeholder rebuild."""
    return psi_fv_inverse(phi_inverse(t))


def gamma_prime_inverse(t: PathTriple) -> Perm:
    """Invert ``gamma_prime`` by rewriting the top path into ``psi`` form.

    The top path of ``gamma_prime`` encodes the descent tops lowered by one;
    the top path of ``psi`` encodes (DT u {p_n}) - {n}.  Shifting the encoded
    set up by one recovers DT.  Two cases:

    * last top step vertical: n is not a descent top, so p_n = n and the
      shifted set is already the ``psi`` top.
    * last top step horizontal: p_n != n is the unknown member to re-insert.
      It is the unique j outside the shifted set for which the rebuilt top
      avoids the middle path and starts its j-th step one diagonal unit from
      the middle's j-th step start (squared distance 2).
    """
    n, _ = tlp_parameters(t)
    m = n - 1
    shifted = {i + 1 for i in decode_path(t.top)}
    if m == 0 or t.top.steps[-1] == "V":
        new_top = encode_set(shifted, m, TOP_START)
        return psi_inverse(PathTriple(t.bottom, t.middle, new_top))

    s = shifted - {n}
    mverts = t.middle.vertices()
    mset = frozenset(mverts)
    candidates = []
    for j in sorted(set(range(1, n)) - s):
        cand = encode_set(s | {j}, m, TOP_START)
        cverts = cand.vertices()
        if mset & frozenset(cverts):
            continue
        dx = mverts[j - 1][0] - cverts[j - 1][0]
        dy = mverts[j - 1][1] - cverts[j - 1][1]
        if dx * dx + dy * dy == 2:
            candidates.append(cand)
    if len(candidates) != 1:
        raise NotInImageError(
            f"{len(candidates)} candidate top paths qualify; expected exactly one"
        )
    return psi_inverse(PathTriple(t.bottom, t.middle, candidates[0]))


def gamma_inverse(t: PathTriple) -> Perm:
    """Invert ``gamma`` via ``gamma_prime`` and the closure under inversion."""
    return inverse(gamma_prime_inverse(t))
