"""Brute-force ground truth over small prime fields.

Full GL(2,p) enumeration, orbit/stabilizer computation and censuses of the
whole coefficient space, used to validate every classification result by
exhaustion.  Hot loops work on plain integer 6-tuples mod p; the public
surface speaks :class:`~quadlaw.sbl.SBL`.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Callable, Iterator, Optional

from . import classify
from .clifford import QuadAlgebra, norm_one_group
from .errors import NotRegular, TooLarge
from .field import FieldElement, prime_field
from .sbl import SBL, Mat2, act

CENSUS_MAX_P = 7
ORBIT_MAX_P = 13


def gl_order(p: int) -> int:
    return (p * p - 1) * (p * p - p)


def _check_ceiling(p: int, ceiling: int) -> None:
    if p > ceiling:
        raise TooLarge(f"p = {p} exceeds the ceiling {ceiling}")
    prime_field(p)  # validates primality and characteristic


def enumerate_gl(p: int, ceiling: int = ORBIT_MAX_P) -> Iterator[Mat2]:
    """Every invertible 2x2 matrix over GF(p), exactly once."""
    _check_ceiling(p, ceiling)
    spec = prime_field(p)
    for m11, m12, m21, m22 in product(range(p), repeat=4):
        if (m11 * m22 - m12 * m21) % p:
            yield Mat2(
                spec.element(m11), spec.element(m12), spec.element(m21), spec.element(m22)
            )


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise ValueError("no primitive root")


def _generators(p: int) -> list[tuple[tuple[int, int, int, int], tuple[int, int, int, int]]]:
    """(matrix, inverse) pairs generating GL(2,p)."""
    g = _primitive_root(p)
    ginv = pow(g, -1, p)
    return [
        ((1, 1, 0, 1), (1, p - 1, 0, 1)),
        ((1, 0, 1, 1), (1, 0, p - 1, 1)),
        ((g, 0, 0, 1), (ginv, 0, 0, 1)),
    ]


def _act_raw(t: tuple, u: tuple, uinv: tuple, p: int) -> tuple:
    a1, b1, c1, a2, b2, c2 = t
    i11, i12, i21, i22 = uinv
    u11, u12, u21, u22 = u
    # columns of u^-1 are the preimages of the basis vectors
    f1 = (a1 * i11 * i11 + 2 * b1 * i11 * i21 + c1 * i21 * i21) % p
    f2 = (a2 * i11 * i11 + 2 * b2 * i11 * i21 + c2 * i21 * i21) % p
    na1, na2 = (u11 * f1 + u12 * f2) % p, (u21 * f1 + u22 * f2) % p
    f1 = (a1 * i11 * i12 + b1 * (i11 * i22 + i21 * i12) + c1 * i21 * i22) % p
    f2 = (a2 * i11 * i12 + b2 * (i11 * i22 + i21 * i12) + c2 * i21 * i22) % p
    nb1, nb2 = (u11 * f1 + u12 * f2) % p, (u21 * f1 + u22 * f2) % p
    f1 = (a1 * i12 * i12 + 2 * b1 * i12 * i22 + c1 * i22 * i22) % p
    f2 = (a2 * i12 * i12 + 2 * b2 * i12 * i22 + c2 * i22 * i22) % p
    nc1, nc2 = (u11 * f1 + u12 * f2) % p, (u21 * f1 + u22 * f2) % p
    return (na1, nb1, nc1, na2, nb2, nc2)


def _orbit_raw(t0: tuple, p: int, gens) -> set:
    orbit = {t0}
    frontier = [t0]
    while frontier:
        nxt = []
        for t in frontier:
            for u, uinv in gens:
                s = _act_raw(t, u, uinv, p)
                if s not in orbit:
                    orbit.add(s)
                    nxt.append(s)
        frontier = nxt
    return orbit


def _raw(F: SBL) -> tuple:
    return tuple(c.value for c in F.coeffs())


def _law(p: int, t: tuple) -> SBL:
    return SBL(prime_field(p), *t)


def orbit(F: SBL, ceiling: int = ORBIT_MAX_P) -> set[SBL]:
    """The full GL(2,p)-orbit of F."""
    p = F.spec.p
    _check_ceiling(p, ceiling)
    return {_law(p, t) for t in _orbit_raw(_raw(F), p, _generators(p))}


def stabilizer(F: SBL, ceiling: int = ORBIT_MAX_P) -> set[Mat2]:
    """All u in GL(2,p) with act(u, F) = F."""
    p = F.spec.p
    _check_ceiling(p, ceiling)
    return {u for u in enumerate_gl(p, ceiling) if act(u, F) == F}


# ---------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------


def _qform_raw(t: tuple, p: int) -> tuple:
    a1, b1, c1, a2, b2, c2 = t
    inv2 = pow(2, -1, p)
    return (
        (a1 * b2 - a2 * b1) % p,
        (a1 * c2 - a2 * c1) * inv2 % p,
        (b1 * c2 - b2 * c1) % p,
    )


def _det_qbar_raw(t: tuple, p: int) -> int:
    a1, b1, c1, a2, b2, c2 = t
    inv3 = pow(3, -1, p)
    t1, t2 = (a1 + b2) % p, (b1 + c2) % p
    a1 = (a1 - 2 * t1 * inv3) % p
    b1 = (b1 - t2 * inv3) % p
    b2 = (b2 - t1 * inv3) % p
    c2 = (c2 - 2 * t2 * inv3) % p
    g11, g12, g22 = _qform_raw((a1, b1, c1, a2, b2, c2), p)
    return (g11 * g22 - g12 * g12) % p


@dataclass(frozen=True)
class OrbitRecord:
    representative: SBL
    orbit_size: int
    stabilizer_size: int
    regular: bool
    invariants: Optional[tuple[FieldElement, FieldElement]]
    members_in_filter: int


def _filter_predicate(p: int, which: str, beta: Optional[int]) -> Callable[[tuple], bool]:
    if which == "all":
        return lambda t: True
    if which == "regular":
        return lambda t: _det_qbar_raw(t, p) != 0
    if which in ("qform_equals_N", "qN"):
        if beta is None:
            raise ValueError("the qform_equals_N filter needs beta")
        target = ((-1) % p, 0, (-beta) % p)
        return lambda t: _qform_raw(t, p) == target
    raise ValueError(f"unknown filter {which!r}")


def census(
    p: int,
    which: str = "all",
    beta: Optional[int] = None,
    ceiling: int = CENSUS_MAX_P,
) -> list[OrbitRecord]:
    """Orbit decomposition of the filtered coefficient space.

    `orbit_size`/`stabilizer_size` describe the full GL(2,p)-orbit (their
    product is |GL(2,p)|); `members_in_filter` counts the orbit's laws that
    satisfy the filter, so those sum to the filtered-set cardinality.
    """
    _check_ceiling(p, ceiling)
    keep = _filter_predicate(p, which, beta)
    gens = _generators(p)
    order = gl_order(p)
    seen: set = set()
    records = []
    for t in product(range(p), repeat=6):
        if t in seen or not keep(t):
            continue
        orb = _orbit_raw(t, p, gens)
        seen |= orb
        members = sum(1 for s in orb if keep(s))
        rep = _law(p, t)
        regular = _det_qbar_raw(t, p) != 0
        inv = rep.invariants() if regular else None
        records.append(OrbitRecord(rep, len(orb), order // len(orb), regular, inv, members))
    return records


def orbit_ids(p: int, ceiling: int = CENSUS_MAX_P) -> dict:
    """Map from every raw coefficient tuple to an orbit index."""
    _check_ceiling(p, ceiling)
    gens = _generators(p)
    ids: dict = {}
    n = 0
    for t in product(range(p), repeat=6):
        if t in ids:
            continue
        for s in _orbit_raw(t, p, gens):
            ids[s] = n
        n += 1
    return ids


# ---------------------------------------------------------------------
# cross validation
# ---------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    counterexamples: list = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


@dataclass
class Report:
    p: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "checks": [
                {"name": c.name, "counterexamples": c.counterexamples, "info": c.info}
                for c in self.checks
            ],
        }


def _write_fixtures(fixture_dir: str, report: Report) -> None:
    os.makedirs(fixture_dir, exist_ok=True)
    for c in report.checks:
        if c.counterexamples:
            path = os.path.join(fixture_dir, f"p{report.p}_{c.name}.jsonl")
            with open(path, "w") as fh:
                for ce in c.counterexamples:
                    fh.write(json.dumps(ce) + "\n")


def _normal_form_pairs(p: int, beta: int):
    """All (a, c) with N(c) - N(a) = 1 over GF(p)[tau]/(tau^2 + beta)."""
    alg = QuadAlgebra(prime_field(p).element(beta))
    pairs = []
    by_norm: dict = {}
    for x in alg.elements():
        by_norm.setdefault(x.norm().value, []).append(x)
    for na, alist in by_norm.items():
        for c in by_norm.get((na + 1) % p, []):
            for a in alist:
                pairs.append((a, c))
    return alg, pairs


def _g_orbit_of_params(alg, a, c, group):
    orbstates = set()
    for lam in group:
        li = lam.inv()
        l3 = lam**3
        for pa, pc in (
            (li * a, l3 * c),
            (li * a.conj(), l3 * c.conj()),
        ):
            orbstates.add(((pa.x0.value, pa.x12.value), (pc.x0.value, pc.x12.value)))
    return frozenset(orbstates)


def _check_prop25(p: int, result: CheckResult) -> None:
    """(N(a), K) classes vs G-orbits on normal-form parameter pairs."""
    spec = prime_field(p)
    hyper = next(b for b in range(1, p) if (-spec.element(b)).is_square())
    ellip = next(b for b in range(1, p) if not (-spec.element(b)).is_square())
    for beta in (hyper, ellip):
        alg, pairs = _normal_form_pairs(p, beta)
        group = norm_one_group(alg)
        orbit_of: dict = {}
        for a, c in pairs:
            key = ((a.x0.value, a.x12.value), (c.x0.value, c.x12.value))
            if key in orbit_of:
                continue
            orb = _g_orbit_of_params(alg, a, c, group)
            for state in orb:
                orbit_of[state] = orb
        # J constant on G-orbits wherever defined
        for a, c in pairs:
            nf = classify.NormalForm(alg, a, c, None)
            try:
                j = classify.invariants_J(nf)
            except NotRegular:
                j = None
            for t in (
                [classify.GTransform("phi", lam) for lam in group]
                + [classify.GTransform("psi", lam) for lam in group]
            ):
                moved = classify.apply_g(t, nf)
                try:
                    jm = classify.invariants_J(moved)
                except NotRegular:
                    jm = None
                if jm != j:
                    result.counterexamples.append(
                        {
                            "beta": beta,
                            "a": [a.x0.value, a.x12.value],
                            "c": [c.x0.value, c.x12.value],
                            "kind": t.kind,
                            "lambda": [t.lam.x0.value, t.lam.x12.value],
                        }
                    )
        # biconditional on (Na, K) for a != 0, c != 0
        classes: dict = {}
        for a, c in pairs:
            if a.is_zero() or c.is_zero():
                continue
            nf = classify.NormalForm(alg, a, c, None)
            key = (classify.Na(nf).value, classify.K(nf).value)
            state = ((a.x0.value, a.x12.value), (c.x0.value, c.x12.value))
            classes.setdefault(key, set()).add(orbit_of[state])
        for key, orbs in classes.items():
            if len(orbs) != 1:
                result.counterexamples.append(
                    {"beta": beta, "na_k": list(key), "distinct_g_orbits": len(orbs)}
                )
        result.info[f"beta_{beta}_pairs"] = len(pairs)


def cross_validate(
    p: int,
    seed: int = 0,
    sample_pairs: int = 1000,
    equiv_fn=None,
    fixture_dir: Optional[str] = None,
    ceiling: int = CENSUS_MAX_P,
) -> Report:
    """Exhaustively confront the classification with brute-force orbits."""
    _check_ceiling(p, ceiling)
    if equiv_fn is None:
        equiv_fn = classify.equivalent
    spec = prime_field(p)
    rng = random.Random(seed)
    gens = _generators(p)
    order = gl_order(p)

    ids = orbit_ids(p, ceiling)
    orbit_size: dict = {}
    for t, i in ids.items():
        orbit_size[i] = orbit_size.get(i, 0) + 1

    nondeg = [t for t in ids if _nondeg(t, p)]
    reps: dict = {}
    for t in sorted(nondeg):
        reps.setdefault(ids[t], t)
    rep_list = [reps[i] for i in sorted(reps)]

    equiv_check = CheckResult("equiv_vs_orbits")
    for i, t1 in enumerate(rep_list):
        for t2 in rep_list[i:]:
            same = ids[t1] == ids[t2]
            res = equiv_fn(_law(p, t1), _law(p, t2))
            if (res.verdict == "equivalent") != same or res.verdict == "unknown":
                equiv_check.counterexamples.append(
                    {"law1": list(t1), "law2": list(t2), "orbit_truth": same, "verdict": res.verdict}
                )
    for _ in range(sample_pairs):
        t1 = rng.choice(nondeg)
        if rng.random() < 0.5:
            t2 = rng.choice(nondeg)
        else:
            u, uinv = rng.choice(gens)
            t2 = _act_raw(t1, u, uinv, p)
            for _ in range(rng.randrange(4)):
                u, uinv = rng.choice(gens)
                t2 = _act_raw(t2, u, uinv, p)
        same = ids[t1] == ids[t2]
        res = equiv_fn(_law(p, t1), _law(p, t2))
        if (res.verdict == "equivalent") != same or res.verdict == "unknown":
            equiv_check.counterexamples.append(
                {"law1": list(t1), "law2": list(t2), "orbit_truth": same, "verdict": res.verdict}
            )
    equiv_check.info["representatives"] = len(rep_list)
    equiv_check.info["sampled_pairs"] = sample_pairs

    iso_check = CheckResult("isotropy_vs_stabilizer")
    inv_check = CheckResult("j_matches_i")
    d_vs_regular = 0
    basis_cache: dict = {}

    def fast_normal_form(F: SBL):
        q = F.qform()
        key = (q.q11.value, q.q12.value, q.q22.value)
        basis = basis_cache.get(key)
        if basis is None:
            basis = classify.diagonalize(q, spec)
            basis_cache[key] = basis
        return classify._normal_form_with_basis(F, basis)

    for t in nondeg:
        F = _law(p, t)
        nf = fast_normal_form(F)
        iso = classify.isotropy(nf)
        expected = order // orbit_size[ids[t]]
        if iso.order() != expected:
            iso_check.counterexamples.append(
                {"law": list(t), "isotropy": iso.order(), "stabilizer": expected}
            )
        regular = _det_qbar_raw(t, p) != 0
        try:
            j = classify.invariants_J(nf)
        except NotRegular:
            j = None
        if (j is None) != (not regular):
            d_vs_regular += 1
        if regular and j is not None and F.invariants() != j:
            inv_check.counterexamples.append({"law": list(t)})
    iso_check.info["laws"] = len(nondeg)
    inv_check.info["denominator_vs_regularity_mismatches"] = d_vs_regular

    prop_check = CheckResult("prop25_conditions")
    _check_prop25(p, prop_check)

    report = Report(p, [equiv_check, iso_check, inv_check, prop_check])
    if fixture_dir:
        _write_fixtures(fixture_dir, report)
    return report


def _nondeg(t: tuple, p: int) -> bool:
    g11, g12, g22 = _qform_raw(t, p)
    return (g11 * g22 - g12 * g12) % p != 0
