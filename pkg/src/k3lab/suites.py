"""Named verification suites behind the CLI: every check re-derives its
claim from the constants at call time, so a mutated constant flips the
owning check to fail."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import constants as cst
from . import kummer as km
from . import lattice as lat
from . import modular as md
from . import shioda_inose as si
from . import toric
from . import weierstrass as w
from .exact import variables

SUITE_NAMES = ("identities", "lattice", "kummer", "toric", "weierstrass", "modular")


@dataclass(frozen=True)
class CheckResult:
    id: str
    description: str
    status: str  # "pass" | "fail"
    witness: str


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    status: str
    checks: tuple
    elapsed_ms: int

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": self.status,
            "checks": [
                {
                    "id": c.id,
                    "description": c.description,
                    "status": c.status,
                    "witness": c.witness,
                }
                for c in self.checks
            ],
            "elapsed_ms": self.elapsed_ms,
        }


def _check(checks, cid, description, fn):
    try:
        ok, witness = fn()
    except Exception as exc:  # a raising check is a failing check
        ok, witness = False, f"raised {type(exc).__name__}: {exc}"
    checks.append(CheckResult(cid, description, "pass" if ok else "fail", witness))


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


def _identities_checks(checks):
    _check(checks, "identities.h_sum",
           "the three fiber forms are linearly dependent with sum zero",
           lambda: (si.verify_h_sum(), "H_inf + H_plus + H_minus == 0"))

    def kappa_fit():
        fitted = si.fit_kappa()
        return fitted == cst.KAPPA, f"fitted constant {fitted}"
    _check(checks, "identities.kappa_fit",
           "the y1^2 normalization refits to the frozen constant", kappa_fit)

    _check(checks, "identities.master_cubic",
           "the cubic relation among x1, y1^2, z+1/z holds exactly",
           lambda: (si.verify_master_identity(cst.KAPPA),
                    "zero polynomial after clearing denominators"))

    def j1728():
        ok = si.j_minus_1728_factorization()
        j = si.j_from_lambda(Fraction(1, 4))
        ok = ok and j == Fraction(35152, 9) and j - 1728 == Fraction(19600, 9)
        return ok, f"j(1/4) = {j}"
    _check(checks, "identities.j1728_factorization",
           "the square factorization of j - 1728 and its spot values", j1728)

    def routes():
        rng = random.Random(2024)
        for _ in range(50):
            l1, l2 = si.random_lambda(rng), si.random_lambda(rng)
            via_l = si.ab_powers_from_lambda(l1, l2)
            via_j = si.ab_powers_from_j(si.j_from_lambda(l1), si.j_from_lambda(l2))
            if via_l != via_j:
                return False, f"mismatch at ({l1}, {l2})"
        return True, "50 random pairs agree through both routes"
    _check(checks, "identities.route_independence",
           "a^3 and b^2 agree between the lambda route and the j route", routes)


# ---------------------------------------------------------------------------
# lattice
# ---------------------------------------------------------------------------


def _lattice_checks(checks):
    def invariants():
        inv = lat.lattice_invariants(lat.graph_to_gram(toric.x_curve_graph()))
        ok = (inv.rank == 18 and inv.signature == (1, 17)
              and abs(inv.determinant) == 1 and inv.is_even)
        return ok, f"rank {inv.rank}, signature {inv.signature}, det {inv.determinant}"
    _check(checks, "lattice.tree_invariants",
           "the 19-curve tree spans an even rank-18 lattice of signature (1,17), det ±1",
           invariants)

    def e8_sides():
        tree = toric.x_curve_graph()
        gram = lat.graph_to_gram(tree)
        std = lat.standard_lattice("E8(-1)")
        for side in ("z0", "zi"):
            nodes = toric.e8_side_nodes(side)
            if not lat.is_e8_dynkin(tree.subgraph(nodes)):
                return False, f"{side} side fails Dynkin recognition"
            idx = [tree.nodes.index(n) for n in nodes]
            vecs = [[1 if j == i else 0 for j in range(gram.dim)] for i in idx]
            if lat.induced_gram(gram, vecs).gram != std.gram:
                return False, f"{side} side induced Gram differs"
        return True, "both sides are E8 diagrams inducing the standard form"
    _check(checks, "lattice.e8_sides",
           "both eight-node sides are E8 diagrams with the standard Gram", e8_sides)

    def section_fiber():
        gram = lat.graph_to_gram(toric.x_curve_graph())
        s = toric.section_class()
        f0 = toric.fiber_class_at_zero()
        fi = toric.fiber_class_at_infinity()
        values = tuple(int(v) for v in (
            gram.pairing(s, s), gram.pairing(f0, f0), gram.pairing(s, f0),
            gram.pairing(s, fi), gram.pairing(f0, fi)))
        ok = values == (-2, 0, 1, 1, 0)
        return ok, f"(S^2, F^2, S.F, S.F', F.F') = {values}"
    _check(checks, "lattice.section_fiber",
           "the section and fiber classes span a hyperbolic pair", section_fiber)

    def kernel():
        gram = lat.graph_to_gram(toric.x_curve_graph())
        basis = lat.kernel_basis(gram)
        diff = [a - b for a, b in zip(toric.fiber_class_at_zero(),
                                      toric.fiber_class_at_infinity())]
        ok = len(basis) == 1 and (basis[0] == diff or basis[0] == [-x for x in diff])
        return ok, f"kernel dimension {len(basis)}"
    _check(checks, "lattice.kernel",
           "the kernel is spanned by the difference of the two fiber classes",
           kernel)

    def coordinate_curves():
        gram = lat.graph_to_gram(toric.x_curve_graph())
        g1 = toric.genus1_curve_class()
        g2 = toric.genus2_curve_class()
        v1 = gram.pairing(g1, g1)
        v2 = gram.pairing(g2, g2)
        v4 = gram.pairing([2 * x for x in g2], [2 * x for x in g2])
        return (v1, v2, v4) == (0, 2, 8), f"self-pairings {v1}, {v2}, {v4}"
    _check(checks, "lattice.coordinate_curves",
           "the genus-1 and genus-2 curve classes match adjunction", coordinate_curves)


# ---------------------------------------------------------------------------
# kummer
# ---------------------------------------------------------------------------


def _kummer_checks(checks):
    _check(checks, "kummer.fiber_relations",
           "the ruling classes decompose through every half-fiber",
           lambda: (km.fiber_relations_hold() and km.integrality_report(),
                    "relations and integral pairings hold"))

    def d_class():
        gens = km.named_classes()
        d2 = km.pair(gens["D"], gens["D"])
        sec = km.pair(gens["D"], gens["F1_3"])
        return (d2, sec) == (0, 1), f"D^2 = {d2}, D.F1_3 = {sec}"
    _check(checks, "kummer.d_class",
           "the fibration class is isotropic with section F1_3", d_class)

    _check(checks, "kummer.e8_fiber",
           "the nine-curve weighted sum equals D with orthogonal components",
           lambda: (km.verify_e8_fiber(), "decomposition verified"))

    _check(checks, "kummer.star_fibers",
           "both five-curve star fibers sum to D; C2 matches its expansion",
           lambda: (km.verify_star_fibers() and km.c2_matches_transcription(),
                    "both fibers sum to D"))

    def tree():
        report = km.labeled_tree_report()
        return (report.matches_expected and report.rank == 18,
                f"adjacency ok: {report.matches_expected}, rank {report.rank}")
    _check(checks, "kummer.labeled_tree",
           "the twenty labeled curves realize the incidence tree at rank 18", tree)

    def octet():
        octet = km.branch_octet()
        for i, (_, a) in enumerate(octet):
            if km.pair(a, a) != -2:
                return False, "self-intersection failure"
            for _, b in octet[i + 1:]:
                if km.pair(a, b) != 0:
                    return False, "pair failure"
        return True, "eight disjoint (-2)-classes"
    _check(checks, "kummer.branch_octet",
           "the branch octet is pairwise orthogonal of square -2", octet)

    def isogeny():
        rows = []
        for n in (1, 2, 3, 5):
            got = km.isogeny_fiber_numbers(n)
            expected = (2 * n, 2, -4 * n, -8 * n, -2 * n)
            if (got.ry_f1, got.ry_f2, got.proj_square, got.rx_square,
                    got.generator_square) != expected:
                return False, f"mismatch at n = {n}"
            rows.append(f"n={n}: {got.proj_square}/{got.rx_square}")
        return True, "; ".join(rows)
    _check(checks, "kummer.isogeny_numbers",
           "projection and pullback squares are -4n and -8n", isogeny)


# ---------------------------------------------------------------------------
# toric
# ---------------------------------------------------------------------------


def _toric_checks(checks):
    def dual():
        d = toric.dual_polytope(toric.delta())
        ok = set(d.vertices) == set(cst.DELTA_DUAL_VERTICES)
        dd = toric.dual_polytope(d)
        ok = ok and set(dd.vertices) == set(cst.DELTA_VERTICES)
        ok = ok and toric.interior_lattice_points(toric.delta()) == [(0, 0, 0)]
        ok = ok and toric.interior_lattice_points(d) == [(0, 0, 0)]
        return ok, f"dual vertices {sorted(d.vertices)}"
    _check(checks, "toric.dual",
           "the dual simplex has the expected vertices and is reflexive", dual)

    def edges():
        profile = sorted(r.singularity
                         for r in toric.edge_reports(toric.dual_polytope(toric.delta())))
        ok = profile == sorted(["A11", "A2", "A2", "A1", "A1", "smooth"])
        return ok, ", ".join(profile)
    _check(checks, "toric.edges",
           "the edge singularity profile is A11, A2, A2, A1, A1, smooth", edges)

    def genera():
        v1, v2, v3, v4 = cst.DELTA_VERTICES
        p = toric.delta()
        got = sorted(toric.facet_genus(p, f) for f in
                     ((v1, v2, v3), (v1, v2, v4), (v2, v3, v4), (v1, v3, v4)))
        return got == [0, 0, 1, 2], f"facet genera {got}"
    _check(checks, "toric.genera", "facet genera are 0, 0, 1, 2", genera)

    def points():
        dual_count = len(toric.lattice_points(toric.dual_polytope(toric.delta())))
        own = set(toric.lattice_points(toric.delta()))
        shifted = set(toric.shifted_support_points().values())
        oracle = 0
        for dd in range(3):
            for cc in range(4):
                rest = 12 - 4 * cc - 6 * dd
                if rest >= 0:
                    oracle += rest + 1
        ok = dual_count == oracle == 39 and own == shifted and len(own) == 9
        return ok, f"dual count {dual_count}, own count {len(own)}"
    _check(checks, "toric.points",
           "lattice point counts match the weighted-monomial oracle", points)

    def shift():
        s = toric.support_shift()
        pts = toric.shifted_support_points()
        p = toric.delta()
        ok = s == cst.SUPPORT_SHIFT
        for mono, idx in cst.SUPPORT_VERTEX_MAP:
            ok = ok and pts[mono] == cst.DELTA_VERTICES[idx]
        interior = [m for m, q in pts.items() if p.strictly_contains(q)]
        ok = ok and len(interior) == 1
        return ok, f"shift {s}, interior monomial {interior}"
    _check(checks, "toric.support_shift",
           "the support shift lands the nine monomials in the simplex", shift)


# ---------------------------------------------------------------------------
# weierstrass
# ---------------------------------------------------------------------------


def _weierstrass_checks(checks):
    def substitution():
        x, y, t, a, b = variables("x", "y", "t", "a", "b")
        lhs = (y * t**3) ** 2 - (-x * t**2) ** 3 - (a * t**4) * (-x * t**2) \
            - (-(t**5 + b * t**6 + t**7))
        rhs = t**6 * (y**2 + x**3 + a * x + b) + t**7 + t**5
        return (lhs - rhs).is_zero(), "chart substitution identity"
    _check(checks, "weierstrass.substitution",
           "the Weierstrass model re-substitutes to the defining equation",
           substitution)

    def euler():
        rng = random.Random(99)
        checked = 0
        while checked < 50:
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            member = w.FamilyMember(a, b)
            if w.is_degenerate(member):
                continue
            fa = w.fiber_analysis(member)
            if not (str(fa.at_zero) == str(fa.at_infinity) == "II*"
                    and fa.euler_total == 24):
                return False, f"failure at (a, b) = ({a}, {b})"
            checked += 1
        return True, "50 members: II* + II* + 4 = 24"
    _check(checks, "weierstrass.euler_budget",
           "II* fibers at both ends with Euler budget 24", euler)

    def degeneracy():
        rng = random.Random(101)
        orbit = [lambda l: 1 - l, lambda l: 1 / l, lambda l: l,
                 lambda l: l / (l - 1), lambda l: (l - 1) / l, lambda l: 1 / (1 - l)]
        matched = unmatched = 0
        while matched < 20 or unmatched < 20:
            l1 = si.random_lambda(rng)
            if matched < 20:
                l2 = orbit[rng.randrange(6)](l1)
                if l2 not in (0, 1):
                    p = si.ab_powers_from_lambda(l1, l2)
                    if not w.is_degenerate_powers(p.a_cubed, p.b_squared):
                        return False, f"matched pair ({l1}, {l2}) reads smooth"
                    matched += 1
            l3 = si.random_lambda(rng)
            if unmatched < 20 and si.j_from_lambda(l1) != si.j_from_lambda(l3):
                p = si.ab_powers_from_lambda(l1, l3)
                if w.is_degenerate_powers(p.a_cubed, p.b_squared):
                    return False, f"unmatched pair ({l1}, {l3}) reads degenerate"
                unmatched += 1
        return True, "20 matched and 20 unmatched samples agree with j-equality"
    _check(checks, "weierstrass.degeneracy_equivalence",
           "degeneration happens exactly on the equal-j locus", degeneracy)


# ---------------------------------------------------------------------------
# modular
# ---------------------------------------------------------------------------


def _modular_checks(checks, cache_dir=None):
    def j_values():
        e1 = abs(md.j_numeric(mpmath.mpc(0, 1)) - 1728)
        e2 = abs(md.j_numeric(mpmath.mpc(0, 2)) - 287496)
        ok = e1 < mpmath.mpf(10) ** -15 and e2 < mpmath.mpf(10) ** -10
        return ok, f"errors {mpmath.nstr(e1, 3)}, {mpmath.nstr(e2, 3)}"
    _check(checks, "modular.j_values",
           "j(i) = 1728 and j(2i) = 287496 at stated tolerances", j_values)

    def phi(n):
        def run():
            p = md.modular_polynomial(n, cache_dir)
            ok = p.is_symmetric() and p.degree() == n + 1
            ok = ok and all(isinstance(v, int) for v in p.coefficients.values())
            if n == 2:
                ok = ok and p.coefficients.get((2, 2)) == -1
            rng = random.Random(300 + n)
            worst = mpmath.mpf(0)
            with mpmath.workprec(256):
                for _ in range(10):
                    tau = mpmath.mpc(rng.uniform(-0.4, 0.4), rng.uniform(0.9, 1.9))
                    x, y = md.fricke_pair(tau, n)
                    rel = abs(md.eval_modpoly(p, x, y)) / p.coefficient_scale(x, y)
                    worst = max(worst, rel)
            ok = ok and worst < mpmath.mpf(10) ** -4
            return ok, f"worst relative vanishing {mpmath.nstr(worst, 3)}"
        return run
    _check(checks, "modular.phi2",
           "level-2 polynomial: integer, symmetric, vanishing on Fricke pairs",
           phi(2))
    _check(checks, "modular.phi3",
           "level-3 polynomial: integer, symmetric, vanishing on Fricke pairs",
           phi(3))


_SUITE_BUILDERS = {
    "identities": _identities_checks,
    "lattice": _lattice_checks,
    "kummer": _kummer_checks,
    "toric": _toric_checks,
    "weierstrass": _weierstrass_checks,
    "modular": _modular_checks,
}


def run_suite(name: str, cache_dir=None) -> SuiteReport:
    """Run one suite (or 'all'); checks are reported sorted by id."""
    if name != "all" and name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}")
    started = time.monotonic()
    checks: list[CheckResult] = []
    names = SUITE_NAMES if name == "all" else (name,)
    for suite in names:
        builder = _SUITE_BUILDERS[suite]
        if suite == "modular":
            builder(checks, cache_dir)
        else:
            builder(checks)
    checks.sort(key=lambda chk: chk.id)
    ids = [chk.id for chk in checks]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate check ids")
    status = "pass" if all(chk.status == "pass" for chk in checks) else "fail"
    elapsed_ms = int((time.monotonic() - started) * 1000)
    return SuiteReport(name, status, tuple(checks), elapsed_ms)
