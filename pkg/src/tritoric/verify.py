"""Verification checks over a built or imported complex.

Each check returns a pass/fail flag plus witness data; a report is the
conjunction of its checks, renderable as text or JSON.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from math import comb

from .complexes import ComplexError, GroupAction, SimplicialComplex, is_equivariant
from .homology import homology

CHECK_NAMES = ("complex", "pure", "pseudomanifold", "equivariance", "links", "counts")


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            extra = ""
            if c.witness:
                extra = "  " + ", ".join(f"{k}={v}" for k, v in sorted(c.witness.items()))
            lines.append(f"{c.name:<14} {status}{extra}")
        lines.append(f"overall        {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            "passed": self.passed,
        }, default=str) + "\n"


def _thread_cap() -> int:
    raw = os.environ.get("TORIC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return max(1, min(4, os.cpu_count() or 1))


def _vertex_kind(K: SimplicialComplex) -> str:
    v = next(iter(K.vertices))
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], tuple) \
            and isinstance(v[1], tuple):
        return "assembled"
    if not (isinstance(v, tuple) and all(isinstance(x, int) for x in v)):
        return "other"
    values = {x for w in K.vertices for x in w}
    if values <= {0, 1, 2}:
        return "torus"
    if values <= {0, 1, 2, 9}:
        return "block"  # circle residues plus cone apex marks
    if values <= {0, 1, 2, 3}:
        return "grid"  # cube coordinates in thirds
    return "other"


def _assembled_action(K: SimplicialComplex) -> GroupAction:
    """Reconstruct the diagonal action from assembled labels.

    Assumes the standard simplex characteristic (facet i -> e_i), which is
    how every projective-space file is built; general toric files need the
    polytope and characteristic supplied to the caller instead.
    """
    n = max(len(v[0]) for v in K.vertices)
    tops = [v for v in K.vertices if len(v[1]) == n]
    if not tops:
        raise ComplexError("no full-torus vertices; cannot infer the action")

    hosts = {}
    for v in K.vertices:
        key = v[0]
        if key in hosts:
            continue
        own = sorted(s for s in key if 1 <= s <= n)
        has_zero = 0 in key
        free = [p for p in range(1, n + 1) if p not in own]
        hosts[key] = (own, free[0] if has_zero else None,
                      tuple(p for p in range(1, n + 1)
                            if p not in own and (not has_zero or p != free[0])))

    def act(v, i):
        key, digits = v
        own, host, positions = hosts[key]
        w = [0] * n
        for p, d in zip(positions, digits):
            w[p - 1] = d
        w[i - 1] += 1
        if host is not None:
            s = w[host - 1]
            w = [(x - s) for x in w]
        return (key, tuple(w[p - 1] % 3 for p in positions))

    gens = []
    for i in range(1, n + 1):
        gens.append({v: act(v, i) for v in K.vertices})
    return GroupAction(n, gens)


def run_checks(K: SimplicialComplex, names=CHECK_NAMES) -> VerificationReport:
    checks = []
    for name in names:
        if name == "complex":
            # construction invariants hold by type; witness basic shape
            checks.append(CheckResult("complex", True, {
                "dim": K.dim, "vertices": len(K.vertices),
                "facets": len(K.facets)}))
        elif name == "pure":
            checks.append(CheckResult("pure", K.is_pure(),
                                      {"dims": sorted({len(f) - 1 for f in K.facets})}))
        elif name == "pseudomanifold":
            ok = K.is_pseudomanifold()
            witness = {}
            if not ok:
                bad = [r for r, c in K.ridges().items() if c != 2][:1]
                if bad:
                    witness["ridge"] = bad[0]
                witness["boundary_ridges"] = len(K.boundary_ridges())
            checks.append(CheckResult("pseudomanifold", ok, witness))
        elif name == "equivariance":
            checks.append(_check_equivariance(K))
        elif name == "links":
            checks.append(_check_links(K))
        elif name == "counts":
            checks.append(_check_counts(K))
        else:
            raise ComplexError(f"unknown check {name!r}")
    return VerificationReport(checks)


def _check_equivariance(K: SimplicialComplex) -> CheckResult:
    kind = _vertex_kind(K)
    if kind == "torus":
        n = len(next(iter(K.vertices)))
        from .torus import z3n_action

        action = z3n_action(n)
    elif kind == "block":
        n = len(next(iter(K.vertices)))
        gens = []
        for i in range(n):
            g = {}
            for v in K.vertices:
                w = list(v)
                if w[i] != 9:
                    w[i] = (w[i] + 1) % 3
                g[v] = tuple(w)
            gens.append(g)
        action = GroupAction(n, gens)
    elif kind == "assembled":
        action = _assembled_action(K)
        n = action.n
    else:
        return CheckResult("equivariance", False,
                           {"error": "labels carry no torus structure"})
    ok = is_equivariant(K, action)
    tested = 0
    if ok:
        for _exps, perm in action.elements():
            tested += 1
            for f in K.facets:
                if tuple(sorted(perm[v] for v in f)) not in K.facets:
                    ok = False
                    break
            if not ok:
                break
    return CheckResult("equivariance", ok, {"group_elements": tested})


def _link_profile(args):
    facets, want = args
    link = SimplicialComplex(facets)
    if not link.is_pseudomanifold():
        return "link not a closed pseudomanifold"
    h = homology(link)
    if h.betti != want or any(h.torsion[i] for i in range(len(h.torsion))):
        return f"betti {h.betti}, expected {want}"
    return None


def _check_links(K: SimplicialComplex) -> CheckResult:
    """Homology-manifold evidence: every vertex link is a closed
    pseudomanifold with the homology of a (dim-1)-sphere.

    Independent links run in a process pool capped by TORIC_THREADS when
    the complex is large enough to be worth it.
    """
    d = K.dim
    if d == 1:
        want = (2,)  # links are 0-spheres: two points
    else:
        want = tuple(1 if i in (0, d - 1) else 0 for i in range(d))
    verts = sorted(K.vertices, key=str)
    jobs = []
    for v in verts:
        jobs.append(([tuple(x for x in f if x != v) for f in K.facets if v in f],
                     want))
    cap = _thread_cap()
    if cap > 1 and len(verts) > 20:
        from multiprocessing import Pool

        with Pool(processes=cap) as pool:
            results = pool.map(_link_profile, jobs)
    else:
        results = [_link_profile(j) for j in jobs]
    for v, res in zip(verts, results):
        if res is not None:
            return CheckResult("links", False, {"vertex": v, "reason": res})
    return CheckResult("links", True, {"vertices": len(K.vertices),
                                       "sphere_dim": d - 1})


def _check_counts(K: SimplicialComplex) -> CheckResult:
    kind = _vertex_kind(K)
    if kind == "torus":
        n = len(next(iter(K.vertices)))
        ok = len(K.vertices) == 3 ** n
        return CheckResult("counts", ok, {"vertices": len(K.vertices),
                                          "expected": 3 ** n})
    if kind == "block":
        n = len(next(iter(K.vertices)))
        coned = {i for v in K.vertices for i in range(n) if v[i] == 9}
        want = 1
        for i in range(n):
            want *= 4 if i in coned else 3
        ok = len(K.vertices) == want
        return CheckResult("counts", ok, {"vertices": len(K.vertices),
                                          "expected": want})
    if kind == "grid":
        n = len(next(iter(K.vertices)))
        ok = len(K.vertices) == 4 ** n
        return CheckResult("counts", ok, {"vertices": len(K.vertices),
                                          "expected": 4 ** n})
    if kind == "assembled":
        n = max(len(v[0]) for v in K.vertices)
        per_face: dict[tuple, int] = {}
        for key, _ in K.vertices:
            per_face[key] = per_face.get(key, 0) + 1
        bad = {}
        for key, count in per_face.items():
            dim_tau = n - len(key)
            if count != 3 ** dim_tau:
                bad[key] = (count, 3 ** dim_tau)
        total_ok = len(K.vertices) == sum(per_face.values())
        if bad or not total_ok:
            return CheckResult("counts", False, {"bad_faces": bad})
        witness = {"vertices": len(K.vertices), "faces": len(per_face)}
        keys = set(per_face)
        if keys == {tuple(sorted(s)) for s in
                    _all_subsets(range(n + 1))} - {tuple(range(n + 1))}:
            witness["formula"] = (4 ** (n + 1) - 1) // 3
        return CheckResult("counts", True, witness)
    return CheckResult("counts", True, {"vertices": len(K.vertices)})


def _all_subsets(it):
    from itertools import combinations

    items = list(it)
    for k in range(len(items) + 1):
        yield from combinations(items, k)
