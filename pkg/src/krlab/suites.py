"""Verification suites shared by the command line and the acceptance tests."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cartan import CartanDatum, all_types, datum
from .dynkin import DynkinAut, automorphism_group, classical_restriction, sigma_group


@dataclass
class Assertion:
    name: str
    status: str  # "pass", "fail" or "skipped"
    ref: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "ref": self.ref, "detail": self.detail}


@dataclass
class VerificationReport:
    suite: str
    assertions: list[Assertion] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, name: str, ok: bool | None, ref: str, detail: str = "") -> None:
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        self.assertions.append(Assertion(name, status, ref, detail))

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for a in self.assertions:
            out[a.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts()["fail"] == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "counts": self.counts(),
                "seconds": round(self.seconds, 3),
                "assertions": [a.to_json() for a in self.assertions]}

    def summary(self) -> str:
        c = self.counts()
        lines = [f"{self.suite}: {'PASS' if self.ok else 'FAIL'} "
                 f"({c['pass']} pass, {c['fail']} fail, {c['skipped']} skipped, {self.seconds:.2f}s)"]
        lines += [f"  {a.status.upper()} {a.name}" + (f": {a.detail}" if a.detail else "")
                  for a in self.assertions if a.status != "pass"]
        return "\n".join(lines)


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self.start
        return False


# -- wtilde ------------------------------------------------------------------------


def wtilde_suite(max_rank: int = 6) -> VerificationReport:
    """Minimal coset representative of the W-part of ``t_{-c_r omega_r}`` against the explicit word."""
    from .weyl import factor_w_sigma, from_word, min_coset_rep_left_W0, translation, wtilde_word

    rep = VerificationReport("wtilde")
    with _Timer(rep):
        for t in all_types(max_rank):
            d = datum(t)
            for r in d.classical_nodes:
                if r in d.special_nodes:
                    continue
                z, _ = factor_w_sigma(translation(d, -(d.c[r]) * d.omega(r)))
                _, w2 = min_coset_rep_left_W0(from_word(d, z))
                word = wtilde_word(d, r)
                same = from_word(d, w2) == from_word(d, word)
                reduced = len(word) == len(w2)
                rep.add(f"{t.code()} r={r}", same and reduced, "minimal coset representative",
                        "" if same and reduced else f"computed {w2}, explicit {word}")
    return rep


# -- special nodes, Sigma and the map Aut(X) -> Aut(X_0) ---------------------------


def expected_special_nodes(d: CartanDatum) -> tuple[int, ...]:
    fam, n = d.type.family, d.n
    table = {"A": tuple(range(n + 1)), "B": (0, 1), "A2odd": (0, 1), "C": (0, n), "D2": (0, n),
             "D": (0, 1, n - 1, n), "A2even": (0,)}
    return table[fam]


def _perm_on(cycles: list[tuple[int, ...]], nodes) -> dict[int, int]:
    out = {i: i for i in nodes}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a] = b
    return out


def expected_sigma(d: CartanDatum) -> dict[int, dict[int, int]]:
    """``tau_i`` restricted to the special nodes, from the explicit descriptions."""
    fam, n = d.type.family, d.n
    I0 = expected_special_nodes(d)
    out = {0: {i: i for i in I0}}
    if fam == "A":
        for i in I0:
            out[i] = {j: (j - i) % (n + 1) for j in I0}
    elif fam in ("B", "A2odd"):
        out[1] = _perm_on([(0, 1)], I0)
    elif fam in ("C", "D2"):
        out[n] = _perm_on([(0, n)], I0)
    elif fam == "D" and n % 2:
        out[n - 1] = _perm_on([(0, n, 1, n - 1)], I0)
        out[1] = _perm_on([(0, 1), (n - 1, n)], I0)
        out[n] = _perm_on([(0, n - 1, 1, n)], I0)
    elif fam == "D":
        out[1] = _perm_on([(0, 1), (n - 1, n)], I0)
        out[n - 1] = _perm_on([(0, n - 1), (1, n)], I0)
        out[n] = _perm_on([(0, n), (1, n - 1)], I0)
    return out


def _closure_images(gens: list[tuple[dict, dict]]) -> dict[tuple, dict]:
    """Extend ``generator -> image`` multiplicatively; keys are restrictions to I^0."""
    def key(p):
        return tuple(sorted(p.items()))

    def compose(p, q):  # p after q
        return {i: p.get(q[i], q[i]) for i in q}

    ident_src = {i: i for i in gens[0][0]}
    ident_img = {i: i for i in gens[0][1]}
    out = {key(ident_src): ident_img}
    frontier = [(ident_src, ident_img)]
    while frontier:
        nxt = []
        for src, img in frontier:
            for gs, gi in gens:
                s2, i2 = compose(gs, src), compose(gi, img)
                k = key(s2)
                if k in out:
                    if out[k] != i2:
                        raise AssertionError("generator images do not define a homomorphism")
                    continue
                out[k] = i2
                nxt.append((s2, i2))
        frontier = nxt
    return out


def expected_classical_image(d: CartanDatum, sigma: DynkinAut) -> dict[int, int]:
    """Image of sigma in Aut(X_0) from the explicit case list (trivial outside A_n, D_n)."""
    fam, n = d.type.family, d.n
    ident = {i: i for i in d.classical_nodes}
    if fam == "A" and n >= 2:
        reverses = (sigma(1) - sigma(0)) % (n + 1) == n
        return {i: n + 1 - i for i in d.classical_nodes} if reverses else ident
    if fam != "D":
        return ident
    I0 = expected_special_nodes(d)
    if n == 4:
        gens = []
        for i in (1, 3, 4):
            j, k = [x for x in (1, 3, 4) if x != i]
            gens.append((_perm_on([(0, i)], I0), _perm_on([(j, k)], (1, 3, 4))))
    else:
        flip = _perm_on([(n - 1, n)], (n - 1, n))
        gens = [(_perm_on([(0, 1)], I0), flip),
                (_perm_on([(n - 1, n)], I0), flip),
                (_perm_on([(0, n), (1, n - 1)], I0), flip if n % 2 else {n - 1: n - 1, n: n})]
    table = _closure_images(gens)
    img = table[tuple(sorted((i, sigma(i)) for i in I0))]
    out = dict(ident)
    out.update(img)
    return out


def sigma_suite(max_rank: int = 8) -> VerificationReport:
    """Special nodes, Sigma and the images in Aut(X_0) against the explicit tables."""
    rep = VerificationReport("sigma")
    with _Timer(rep):
        for t in all_types(max_rank):
            d = datum(t)
            I0 = expected_special_nodes(d)
            rep.add(f"{t.code()} special nodes", tuple(d.special_nodes) == I0, "special nodes",
                    f"computed {d.special_nodes}")
            group = sigma_group(d)
            expect = expected_sigma(d)
            ok = set(group) == set(expect) and all(
                {j: group[i](j) for j in I0} == expect[i] for i in expect)
            rep.add(f"{t.code()} Sigma", ok, "special automorphisms",
                    "" if ok else str({i: str(g) for i, g in group.items()}))
            if t.family == "D" and t.rank % 2 == 0:
                klein = all(g.order() <= 2 for g in group.values()) and len(group) == 4
                rep.add(f"{t.code()} Sigma is Z/2 x Z/2", klein, "special automorphisms")
            elif group:
                cyclic = any(g.order() == len(group) for g in group.values())
                rep.add(f"{t.code()} Sigma cyclic", cyclic, "special automorphisms")
            taus_trivial = all(all(k == v for k, v in classical_restriction(d, g).items())
                               for g in group.values())
            rep.add(f"{t.code()} tau' trivial", taus_trivial, "classical image of Sigma")
            images_ok, bad = True, ""
            for sigma in automorphism_group(d):
                got = classical_restriction(d, sigma)
                if got != expected_classical_image(d, sigma):
                    images_ok, bad = False, f"{sigma} -> {got}"
                    break
            rep.add(f"{t.code()} Aut(X) -> Aut(X_0)", images_ok, "classical image of Aut(X)", bad)
            if t.family == "D":
                s01 = next(s for s in automorphism_group(d) if s(0) == 1 and s(1) == 0
                           and s(d.n - 1) == d.n - 1)
                img = classical_restriction(d, s01)
                want = {i: i for i in d.classical_nodes}
                want[d.n - 1], want[d.n] = d.n, d.n - 1
                rep.add(f"{t.code()} (0,1) -> (n-1,n)", img == want, "classical image of Aut(X)")
    return rep


# -- KR crystal suites ---------------------------------------------------------------


def criterion_instances() -> list:
    """B^{r,s} for A_n^(1) (n <= 3, s <= 3) and A_{2n}^(2) (n <= 3, s <= 2)."""
    from .kr_a import KRCrystalA
    from .virtual_a2 import VirtualKR

    out = [KRCrystalA(n, r, s) for n in (1, 2, 3) for r in range(1, n + 1) for s in (1, 2, 3)]
    out += [VirtualKR(n, r, s) for n in (1, 2, 3) for r in range(1, n + 1) for s in (1, 2)]
    return out


def classical_orbit(d: CartanDatum, lam):
    seen, stack = {lam}, [lam]
    while stack:
        mu = stack.pop()
        for i in d.classical_nodes:
            nu = d.classical_reflect(i, mu)
            if nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return seen


def convex_hull_violations(B) -> list[str]:
    """Weights outside the hull of ``W_0 . s omega_r`` and extremal weights of multiplicity != 1."""
    from collections import Counter

    from .dynkin import dominant_representative

    d = B.datum
    lam = B.s * d.omega(B.r)
    mult = Counter(tuple(B.wt(b)[1:]) for b in B.graph.elements)
    bad = []
    for key in mult:
        mu = d.classical(key)
        gap = d.alpha_coordinates(lam - dominant_representative(d, mu))
        if any(x < 0 for x in gap):
            bad.append(f"weight {key} outside the hull")
    for mu in classical_orbit(d, lam):
        key = tuple(int(x) for x in mu.coeffs)
        if mult.get(key, 0) != 1:
            bad.append(f"extremal weight {key} has multiplicity {mult.get(key, 0)}")
    return bad


def axioms_suite(instances=None) -> VerificationReport:
    from .crystal import check_axioms
    from .rank2 import regularity_check

    rep = VerificationReport("axioms")
    with _Timer(rep):
        for B in instances if instances is not None else criterion_instances():
            g = B.graph
            bad = check_axioms(B, g.elements)
            rep.add(f"{B.label} axioms", not bad, "crystal axioms", "; ".join(bad[:3]))
            reg = regularity_check(g)
            rep.add(f"{B.label} regularity", reg.ok, "regularity",
                    "; ".join(reg.violations[:3]))
            hull = convex_hull_violations(B)
            rep.add(f"{B.label} convex hull", not hull, "weights in the convex hull",
                    "; ".join(hull[:3]))
    return rep


def u_suite(instances=None) -> VerificationReport:
    from .errors import AssumptionViolation

    rep = VerificationReport("u")
    with _Timer(rep):
        for B in instances if instances is not None else criterion_instances():
            try:
                B.find_u()
                rep.add(f"{B.label} unique u", True, "unique u")
            except AssumptionViolation as exc:
                rep.add(f"{B.label} unique u", False, "unique u", str(exc))
    return rep


def demazure_suite(instances=None) -> VerificationReport:
    from .demazure import verify_A1_A2

    rep = VerificationReport("demazure")
    with _Timer(rep):
        for B in instances if instances is not None else criterion_instances():
            r = verify_A1_A2(B)
            rep.add(f"{B.label} (A2)", r.a2, "f_w2 closure avoids the formal factor")
            rep.add(f"{B.label} (A1)", r.a1, "Demazure crystal B'", "; ".join(r.notes))
            rep.add(f"{B.label} closure", r.closure, "classical closure is B (x) u",
                    f"|B''|={r.b_double_prime}, |B|={r.kr_size}")
    return rep


def characters_suite(instances=None) -> VerificationReport:
    from .demazure import compare_characters

    rep = VerificationReport("characters")
    with _Timer(rep):
        for B in instances if instances is not None else criterion_instances():
            ok, chi, crys = compare_characters(B)
            rep.add(f"{B.label} character", ok, "Demazure character equals KR weights",
                    "" if ok else f"{chi.total()} Demazure terms vs {sum(crys.values())} elements")
    return rep


def paths_suite(instances=None, variant: str = "stated") -> VerificationReport:
    from .hwpaths import verify_paths

    rep = VerificationReport(f"paths[{variant}]")
    with _Timer(rep):
        for B in instances if instances is not None else criterion_instances():
            if B.datum.type.family != "A2even":
                continue
            r = verify_paths(B, variant)
            fails = r.failures()
            rep.add(f"{B.label} paths", r.ok, "lowering paths to classical highest weights",
                    "" if r.ok else f"fails for {fails}")
    return rep


def lemy_suite(ns=(2, 3), ss=(1, 2)) -> VerificationReport:
    from .virtual_a2 import VirtualKR, lem_y_instance

    rep = VerificationReport("lem_y")
    with _Timer(rep):
        for n in ns:
            for r in range(1, n + 1):
                for s in ss:
                    V = VirtualKR(n, r, s)
                    for k in range(r):
                        out = lem_y_instance(V, k)
                        rep.add(f"{V.label} k={k}", out["ok"], "extremal element y",
                                "" if out["ok"] else f"b={out['b']} y={out['y']} f0^s y={out['f0s_y']}")
    return rep


def rmatrix_pairs() -> list:
    from .kr_a import KRCrystalA
    from .virtual_a2 import VirtualKR

    out = []
    for n in (1, 2):
        Bs = [KRCrystalA(n, r, s) for r in range(1, n + 1) for s in (1, 2)]
        out += [(a, b) for a in Bs for b in Bs]
    wide = [KRCrystalA(2, r, 3) for r in (1, 2)]
    ones = [KRCrystalA(2, r, 1) for r in (1, 2)]
    out += [(a, b) for a in wide for b in ones] + [(b, a) for a in wide for b in ones]
    Vs = [VirtualKR(2, r, 1) for r in (1, 2)]
    out += [(a, b) for a in Vs for b in Vs]
    V12 = VirtualKR(2, 1, 2)
    out += [(V12, Vs[0]), (Vs[0], V12)]
    return out


def rmatrix_suite(pairs=None) -> VerificationReport:
    from .rmatrix import verify_rmatrix

    rep = VerificationReport("rmatrix")
    with _Timer(rep):
        for B1, B2 in pairs if pairs is not None else rmatrix_pairs():
            r = verify_rmatrix(B1, B2)
            rep.add(f"{r.label} connected", r.connected, "connectedness of B1 (x) B2")
            rep.add(f"{r.label} recipe = oracle", r.recipe_matches, "combinatorial R recipe")
            rep.add(f"{r.label} involutive", r.involutive, "R21 R12 = id")
            rep.add(f"{r.label} morphism", not r.violations, "R commutes with e_i, f_i",
                    "; ".join(r.violations[:3]))
    return rep


SUITES = {
    "wtilde": wtilde_suite,
    "sigma": sigma_suite,
    "axioms": axioms_suite,
    "u": u_suite,
    "demazure": demazure_suite,
    "characters": characters_suite,
    "paths": paths_suite,
    "lem_y": lemy_suite,
    "rmatrix": rmatrix_suite,
}
