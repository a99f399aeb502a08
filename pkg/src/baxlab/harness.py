"""Verification suites over every implemented claim, plus ASCII rendering.

Each suite replays a family of exhaustive checks up to a size bound ``n`` and
returns a :class:`Report`.  Reports are deterministic: the same suite at the
same bound produces the same checks in the same order with the same outcome,
regardless of the worker count.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .bijections import gamma, gamma_prime, gamma_prime_inverse, psi, psi_inverse
from .jsonio import perm_to_obj, triple_to_obj
from .laguerre import enumerate_histories, psi_fv, psi_fv_inverse, validate
from .paths import PathTriple, decode_path, enumerate_tlp
from .perm import (
    Perm,
    all_permutations,
    generate_baxter,
    insertion_slots,
    inverse,
    is_baxter,
    shape_flags,
    stat_profile,
)
from .qseries import (
    InexactDivisionError,
    baxter_number,
    baxter_polynomial_lhs,
    baxter_polynomial_rhs,
    catalan,
    q_binomial,
    tlp_count_formula,
)

SUITE_NAMES = (
    "bijection",
    "roundtrip",
    "lemma-encodings",
    "polynomial",
    "counts",
    "corollaries",
    "all",
)

# Bounds above which the full-S_n or brute-polynomial checks are skipped even
# if the caller asks for a larger n; everything else honours n directly.
FULL_SCAN_LIMIT = 8
TLP_ENUM_LIMIT = 9
BRUTE_POLY_LIMIT = 9
HISTORY_ENUM_LIMIT = 7
INSERTION_CASE_LIMIT = 7


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str

    def to_obj(self) -> dict:
        return {"label": self.label, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class Report:
    suite: str
    n: int
    checks: tuple[Check, ...]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
            "checks": [c.to_obj() for c in self.checks],
        }


def _triple_key(t: PathTriple) -> tuple[str, str, str]:
    return (t.bottom.steps, t.middle.steps, t.top.steps)


def _key_to_triple_obj(key: tuple[str, str, str]) -> dict:
    return {
        "bottom": {"start": [2, 0], "steps": key[0]},
        "middle": {"start": [1, 1], "steps": key[1]},
        "top": {"start": [0, 2], "steps": key[2]},
    }


def _perm_json(p: Perm) -> str:
    return json.dumps(perm_to_obj(p))


def _triple_json(t: PathTriple) -> str:
    return json.dumps(triple_to_obj(t))


# ---------------------------------------------------------------------------
# per-item checkers (must stay top-level so worker processes can import them)

def _check_fv(p: Perm) -> str | None:
    h = psi_fv(p)
    val = validate(h)
    if not val.laguerre_ok:
        return f"history of {_perm_json(p)} breaks the weight bounds"
    if psi_fv_inverse(h) != p:
        return f"round trip failed for {_perm_json(p)}"
    if val.baxter_ok != is_baxter(p):
        return f"history/pattern disagreement for {_perm_json(p)}"
    return None


def _check_gamma_prime_roundtrip(p: Perm) -> str | None:
    if gamma_prime_inverse(gamma_prime(p)) != p:
        return f"round trip failed for {_perm_json(p)}"
    return None


def _check_psi_roundtrip(p: Perm) -> str | None:
    if psi_inverse(psi(p)) != p:
        return f"round trip failed for {_perm_json(p)}"
    return None


def _check_psi_encoding(p: Perm) -> str | None:
    prof = stat_profile(p)
    t = psi(p)
    got = (decode_path(t.bottom), decode_path(t.middle), decode_path(t.top))
    want = (prof.db_set, prof.ides_set, prof.dt_hat_set)
    if got != want:
        return f"psi of {_perm_json(p)} decodes to {got}, statistics say {want}"
    g = gamma_prime(p)
    if t.bottom != g.bottom or t.middle != g.middle:
        return f"psi and gamma_prime disagree below the top path for {_perm_json(p)}"
    return None


_PER_ITEM_CHECKERS: dict[str, Callable[[Perm], str | None]] = {
    "fv": _check_fv,
    "gamma-prime-roundtrip": _check_gamma_prime_roundtrip,
    "psi-roundtrip": _check_psi_roundtrip,
    "psi-encoding": _check_psi_encoding,
}

_CHUNK = 4096


def _scan_chunk(args: tuple[str, list[Perm]]) -> str | None:
    name, chunk = args
    checker = _PER_ITEM_CHECKERS[name]
    for item in chunk:
        msg = checker(item)
        if msg is not None:
            return msg
    return None


def _scan(name: str, items: Sequence[Perm], jobs: int) -> str | None:
    """First failure message in deterministic order, or None."""
    if jobs <= 1 or len(items) < 2 * _CHUNK:
        return _scan_chunk((name, list(items)))
    chunks = [list(items[i : i + _CHUNK]) for i in range(0, len(items), _CHUNK)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for result in ex.map(_scan_chunk, [(name, c) for c in chunks]):
            if result is not None:
                return result
    return None


def _scan_check(label: str, name: str, items: Sequence[Perm], jobs: int, ok_detail: str) -> Check:
    msg = _scan(name, items, jobs)
    return Check(label, msg is None, ok_detail if msg is None else msg)


# ---------------------------------------------------------------------------
# suites

def _suite_bijection(n: int, jobs: int) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        images: dict[int, dict[tuple, Perm]] = {}
        failure = None
        for p in generate_baxter(m):
            t = gamma(p)
            k = t.bottom.steps.count("H")
            key = _triple_key(t)
            bucket = images.setdefault(k, {})
            if key in bucket:
                failure = (
                    f"{_perm_json(p)} and {_perm_json(bucket[key])} share the image "
                    f"{_triple_json(t)}"
                )
                break
            bucket[key] = p
        total = 0
        if failure is None:
            for k in range(m):
                enumerated = {_triple_key(t) for t in enumerate_tlp(m, k)}
                image = set(images.get(k, ()))
                if image != enumerated:
                    missing = enumerated - image
                    extra = image - enumerated
                    witness = min(missing) if missing else min(extra)
                    failure = (
                        f"k={k}: image misses {len(missing)} triples, adds {len(extra)}; "
                        f"first: {json.dumps(_key_to_triple_obj(witness))}"
                    )
                    break
                total += len(enumerated)
        checks.append(
            Check(
                f"gamma-image-n{m}",
                failure is None,
                failure or f"image is duplicate-free and exhausts all {total} triples",
            )
        )
    return checks


def _suite_roundtrip(n: int, jobs: int) -> list[Check]:
    checks = []
    for m in range(1, min(n, FULL_SCAN_LIMIT) + 1):
        perms = list(all_permutations(m))
        checks.append(
            _scan_check(
                f"fv-roundtrip-n{m}",
                "fv",
                perms,
                jobs,
                f"round trip and history/pattern agreement on all {len(perms)} permutations",
            )
        )
    for length in range(0, min(n - 1, HISTORY_ENUM_LIMIT) + 1):
        failure = None
        count = 0
        for h in enumerate_histories(length):
            count += 1
            if psi_fv(psi_fv_inverse(h)) != h:
                failure = f"history {h.word}/{list(h.weights)} does not round trip"
                break
        checks.append(
            Check(
                f"history-roundtrip-len{length}",
                failure is None,
                failure or f"all {count} histories round trip",
            )
        )
    for m in range(1, n + 1):
        bax = generate_baxter(m)
        checks.append(
            _scan_check(
                f"gamma-prime-roundtrip-n{m}",
                "gamma-prime-roundtrip",
                bax,
                jobs,
                f"inverse algorithm returns all {len(bax)} Baxter permutations",
            )
        )
        checks.append(
            _scan_check(
                f"psi-roundtrip-n{m}",
                "psi-roundtrip",
                bax,
                jobs,
                f"round trip on all {len(bax)} Baxter permutations",
            )
        )
        if m <= TLP_ENUM_LIMIT:
            failure = None
            count = 0
            for k in range(m):
                for t in enumerate_tlp(m, k):
                    count += 1
                    if _triple_key(gamma_prime(gamma_prime_inverse(t))) != _triple_key(t):
                        failure = f"triple {_triple_json(t)} does not round trip"
                        break
                if failure:
                    break
            checks.append(
                Check(
                    f"tlp-roundtrip-n{m}",
                    failure is None,
                    failure or f"all {count} triples round trip through the inverse algorithm",
                )
            )
    return checks


def _insertion_case_failure(m: int) -> str | None:
    """Compare each child triple of the growth step against the predicted surgery."""
    for parent in generate_baxter(m - 1):
        gp = gamma_prime(parent)
        bw, mw, tw = gp.bottom.steps, gp.middle.steps, gp.top.steps
        for pos in insertion_slots(parent):
            child = parent[: pos - 1] + (m,) + parent[pos - 1 :]
            gc = gamma_prime(child)
            got = (gc.bottom.steps, gc.middle.steps, gc.top.steps)
            if pos == m:  # new maximum at the end: all paths gain a vertical step
                want = (bw + "V", mw + "V", tw + "V")
            elif pos > 1 and parent[pos - 2] == max(parent[pos - 2 :]):
                # after a right-to-left maximum s: top loses the horizontal at
                # s-1 and gains one at the end
                s = parent[pos - 2]
                flipped = tw[: s - 2] + "V" + tw[s - 1 :]
                want = (bw + "V", mw + "V", flipped + "H")
            else:
                # before a left-to-right maximum s: bottom turns step s
                # horizontal (or appends one when s = m-1), middle and top
                # gain a horizontal at the end
                s = parent[pos - 1]
                if s <= m - 2:
                    nb = bw[: s - 1] + "H" + bw[s:] + "V"
                else:
                    nb = bw + "H"
                want = (nb, mw + "H", tw + "H")
            if got != want:
                return (
                    f"insert {m} at slot {pos} of {_perm_json(parent)}: "
                    f"triple {got} but surgery predicts {want}"
                )
    return None


def _suite_lemma_encodings(n: int, jobs: int) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        bax = generate_baxter(m)
        checks.append(
            _scan_check(
                f"psi-encodings-n{m}",
                "psi-encoding",
                bax,
                jobs,
                f"paths decode to (DB, IDES, DT-hat) on all {len(bax)} permutations",
            )
        )
        seen: dict[tuple, Perm] = {}
        failure = None
        for p in bax:
            prof = stat_profile(p)
            key = (prof.dt_mod_set, prof.ides_set, prof.db_set)
            if key in seen:
                failure = f"{_perm_json(seen[key])} and {_perm_json(p)} share (DT-1, IDES, DB)"
                break
            seen[key] = p
        checks.append(
            Check(
                f"statistic-injectivity-n{m}",
                failure is None,
                failure or f"all {len(bax)} statistic triples are distinct",
            )
        )
    for m in range(2, min(n, INSERTION_CASE_LIMIT) + 1):
        failure = _insertion_case_failure(m)
        checks.append(
            Check(
                f"insertion-cases-n{m}",
                failure is None,
                failure or "all growth steps match the predicted path surgery",
            )
        )
    return checks


def _suite_polynomial(n: int, jobs: int) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        try:
            rhs = baxter_polynomial_rhs(m)
        except InexactDivisionError as exc:
            checks.append(Check(f"tq-rhs-n{m}", False, f"division failed: {exc}"))
            continue
        value = rhs(1, 1)
        want = baxter_number(m)
        checks.append(
            Check(
                f"tq-rhs-n{m}",
                value == want,
                f"division exact; value at t=q=1 is {value}, Baxter number is {want}",
            )
        )
        if m <= BRUTE_POLY_LIMIT:
            lhs = baxter_polynomial_lhs(m)
            if lhs == rhs:
                detail = f"all {len(lhs.terms())} coefficients agree"
                passed = True
            else:
                diff = sorted(set(lhs.terms()) ^ set(rhs.terms()))[:4]
                detail = f"coefficient mismatch, first differing terms {diff}"
                passed = False
            checks.append(Check(f"tq-identity-n{m}", passed, detail))
    if n >= 2:
        rhs2 = baxter_polynomial_rhs(2)
        ok = rhs2.terms() == [(0, 0, 1), (1, 3, 1)]
        checks.append(Check("tq-golden-n2", ok, f"terms {rhs2.terms()}"))
    failure = None
    for m in range(0, n + 1):
        for k in range(0, m + 1):
            poly = q_binomial(m, k)
            top = k * (m - k)
            if poly(1) != comb(m, k):
                failure = f"[{m},{k}]_q sums to {poly(1)}, binomial is {comb(m, k)}"
                break
            if any(poly.coefficient(d) != poly.coefficient(top - d) for d in range(top + 1)):
                failure = f"[{m},{k}]_q is not symmetric"
                break
        if failure:
            break
    checks.append(
        Check(
            f"qbinomial-n{n}",
            failure is None,
            failure or f"symmetry and q->1 specialisation hold up to n={n}",
        )
    )
    return checks


def _suite_counts(n: int, jobs: int) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        generated = len(generate_baxter(m))
        formula = baxter_number(m)
        parts = [f"generator {generated}", f"formula {formula}"]
        passed = generated == formula
        if m <= FULL_SCAN_LIMIT:
            filtered = sum(1 for p in all_permutations(m) if is_baxter(p))
            parts.append(f"filter {filtered}")
            passed = passed and filtered == generated
        checks.append(Check(f"baxter-count-n{m}", passed, ", ".join(parts)))
    for m in range(1, min(n, TLP_ENUM_LIMIT) + 1):
        failure = None
        total = 0
        for k in range(m):
            count = sum(1 for _ in enumerate_tlp(m, k))
            want = tlp_count_formula(m, k)
            if count != want:
                failure = f"k={k}: enumerated {count}, formula {want}"
                break
            total += count
        if failure is None and total != baxter_number(m):
            failure = f"total {total} differs from Baxter number {baxter_number(m)}"
        checks.append(
            Check(
                f"tlp-count-n{m}",
                failure is None,
                failure or f"all {total} triples accounted for",
            )
        )
    for m in range(1, n + 1):
        total = sum(tlp_count_formula(m, k) for k in range(m))
        want = baxter_number(m)
        checks.append(
            Check(f"summand-sum-n{m}", total == want, f"sum {total}, Baxter number {want}")
        )
    for m in range(1, n + 1):
        alt = ralt = 0
        for p in generate_baxter(m):
            flags = shape_flags(p)
            alt += flags.alternating
            ralt += flags.reverse_alternating
        want = catalan(m // 2) * catalan((m + 1) // 2)
        checks.append(
            Check(
                f"alternating-count-n{m}",
                alt == want and ralt == want,
                f"alternating {alt}, reverse {ralt}, Catalan product {want}",
            )
        )
    return checks


_BAX6_GOLDEN = [
    (2, 1, 4, 3, 6, 5),
    (2, 1, 5, 4, 6, 3),
    (3, 2, 4, 1, 6, 5),
    (3, 2, 5, 4, 6, 1),
    (4, 3, 5, 2, 6, 1),
]


def _suite_corollaries(n: int, jobs: int) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        alt = ralt = 0
        special: list[Perm] = []
        for p in generate_baxter(m):
            flags = shape_flags(p)
            alt += flags.alternating
            ralt += flags.reverse_alternating
            if flags.reverse_alternating and shape_flags(inverse(p)).genocchi:
                special.append(p)
        want_alt = catalan(m // 2) * catalan((m + 1) // 2)
        checks.append(
            Check(
                f"alt-catalan-product-n{m}",
                alt == want_alt and ralt == want_alt,
                f"alternating {alt}, reverse {ralt}, Catalan product {want_alt}",
            )
        )
        want_cg = catalan(m // 2)
        checks.append(
            Check(
                f"catalan-genocchi-n{m}",
                len(special) == want_cg,
                f"reverse-alternating with Genocchi inverse: {len(special)}, Catalan {want_cg}",
            )
        )
        if m == 6:
            ok = sorted(special) == _BAX6_GOLDEN
            checks.append(
                Check(
                    "bax6-golden-set",
                    ok,
                    "the five length-6 witnesses are "
                    + ", ".join("".join(map(str, p)) for p in sorted(special)),
                )
            )
    return checks


_SUITES: dict[str, Callable[[int, int], list[Check]]] = {
    "bijection": _suite_bijection,
    "roundtrip": _suite_roundtrip,
    "lemma-encodings": _suite_lemma_encodings,
    "polynomial": _suite_polynomial,
    "counts": _suite_counts,
    "corollaries": _suite_corollaries,
}


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BAXLAB_JOBS", "1")))
    except ValueError:
        return 1


def run_suite(name: str, n: int, jobs: int | None = None) -> Report:
    """Run one named suite (or ``all``) up to size n and report per-check results."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if n < 1:
        raise ValueError("n must be >= 1")
    jobs = default_jobs() if jobs is None else max(1, jobs)
    started = time.perf_counter()
    if name == "all":
        checks: list[Check] = []
        for sub in SUITE_NAMES[:-1]:
            checks.extend(_SUITES[sub](n, jobs))
    else:
        checks = _SUITES[name](n, jobs)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return Report(name, n, tuple(checks), elapsed_ms)


def render_ascii(t: PathTriple) -> str:
    """Draw the triple on a dotted grid.

    B/M/T mark the vertices of the bottom/middle/top path and -/| their
    connecting steps; unused lattice points show as dots.  Paths are drawn
    bottom first, so an (invalid) intersecting triple overdraws rather than
    fails.
    """
    vertex_sets = [p.vertices() for p in t.paths()]
    max_x = max(x for vs in vertex_sets for x, _ in vs)
    max_y = max(y for vs in vertex_sets for _, y in vs)
    width, height = 2 * max_x + 1, 2 * max_y + 1
    canvas = [
        ["." if row % 2 == 0 and col % 2 == 0 else " " for col in range(width)]
        for row in range(height)
    ]

    def rc(x: int, y: int) -> tuple[int, int]:
        return 2 * (max_y - y), 2 * x

    for vs, mark in zip(vertex_sets, "BMT"):
        for (x0, y0), (x1, y1) in zip(vs, vs[1:]):
            if x1 == x0 + 1:
                row, col = rc(x0, y0)
                canvas[row][col + 1] = "-"
            else:
                row, col = rc(x0, y0 + 1)
                canvas[row + 1][col] = "|"
        for x, y in vs:
            row, col = rc(x, y)
            canvas[row][col] = mark
    return "\n".join("".join(row).rstrip() for row in canvas)
