"""Bounded verification suite: every invariant the library promises, exact.

Each check runs inside caller-configured bounds and reports a pass/fail
with a short detail string.  The CLI `verify-all` subcommand is a thin
wrapper; the acceptance test suite runs the same properties at the larger
bounds fixed there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .branching import (
    BranchingGraph,
    CentralFunction,
    L1Vector,
    check_stochastic_row,
    classical_gt_graph,
    gtq_graph,
    level_window,
    link,
    pairing,
    phi_pushdown,
    pushdown_chain,
    theta_map,
    young_graph,
)
from .charfun import adjoint_check, coherence_check, multiplicativity_check, random_torus_point
from .harmonic import check_harmonic, convex_mix, counit_system, from_top
from .oracles import (
    pushdown_matrix_oracle,
    splice_expand_oracle,
    syt_count_recursive,
    tensor_expand_oracle,
)
from .repsystem import (
    SigmaElement,
    SystemElement,
    ZhatElement,
    equal_on_window,
    module_action,
    sigma_eval_product,
    sigma_product_function,
    zhat_coefficient,
    zhat_mul,
)
from .sampler import empirical_tv, sample_down_histogram
from .scalars import LaurentPoly, evaluate_scalar, scalars_equal
from .signatures import bracket, dim_syt, partitions_of, signatures_of_length
from .symfunc import dim_classical, lr_splice, lr_tensor, qdim, splice_components, tensor_components


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def __bool__(self):
        return self.ok


def _sig_pool(max_level: int, part_bound: int, include_empty=True):
    out = [] if not include_empty else [()]
    for n in range(1, max_level + 1):
        out.extend(signatures_of_length(n, -part_bound, part_bound))
    return out


def check_stochastic_links(max_level: int, part_bound: int) -> CheckResult:
    rows = 0
    for graph in (gtq_graph(-1), gtq_graph(+1), classical_gt_graph()):
        for n in range(1, max_level + 1):
            for lam in signatures_of_length(n, -part_bound, part_bound):
                v = check_stochastic_row(graph, lam)
                rows += 1
                if not v.ok:
                    return CheckResult("stochastic-links", False,
                                       f"{graph.describe()} row {lam}: defect {v.defect}")
    yg = young_graph()
    for n in range(1, max_level + 1):
        for lam in partitions_of(n):
            v = check_stochastic_row(yg, lam)
            rows += 1
            if not v.ok:
                return CheckResult("stochastic-links", False, f"young row {lam}")
    return CheckResult("stochastic-links", True, f"{rows} rows exact")


def check_q1_degeneration(max_level: int, part_bound: int) -> CheckResult:
    gq = gtq_graph(-1)
    gc = classical_gt_graph()
    edges = 0
    for n in range(2, max_level + 1):
        for lam in signatures_of_length(n, -part_bound, part_bound):
            for mu in signatures_of_length(n - 1, -part_bound, part_bound):
                kq = link(gq, lam, mu)
                kc = link(gc, lam, mu)
                if kq.evaluate(1) != kc:
                    return CheckResult("q1-degeneration", False, f"edge {lam}->{mu}")
                mult = Fraction(dim_classical(lam)) * kc / dim_classical(mu)
                if mult not in (0, 1):
                    return CheckResult("q1-degeneration", False,
                                       f"integrality fails at {lam}->{mu}: {mult}")
                edges += 1
    return CheckResult("q1-degeneration", True, f"{edges} edges exact")


def check_duality(pairs: int, max_level: int, part_bound: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    graphs = [gtq_graph(-1), gtq_graph(+1), classical_gt_graph(),
              gtq_graph(-1, Fraction(9, 10))]
    for i in range(pairs):
        g = graphs[i % len(graphs)]
        n = rng.randint(0, max_level - 1)
        upper = list(signatures_of_length(n + 1, -part_bound, part_bound))
        lower = list(signatures_of_length(n, -part_bound, part_bound))
        omega = L1Vector(n + 1, {v: Fraction(rng.randint(-5, 5), rng.randint(1, 7))
                                 for v in rng.sample(upper, min(4, len(upper)))})
        f = CentralFunction.from_dict(
            n, {v: Fraction(rng.randint(-5, 5), rng.randint(1, 7))
                for v in rng.sample(lower, min(4, len(lower)))})
        lhs = pairing(phi_pushdown(g, omega), f)
        rhs = pairing(omega, theta_map(g, f))
        if not scalars_equal(lhs, rhs):
            return CheckResult("theta-phi-duality", False, f"pair {i} on {g.describe()}")
        mass_in = omega.mass()
        mass_out = phi_pushdown(g, omega).mass()
        if not scalars_equal(mass_in, mass_out):
            return CheckResult("theta-phi-duality", False, f"mass not preserved, pair {i}")
    return CheckResult("theta-phi-duality", True, f"{pairs} random pairs exact")


def check_q_commutation(max_level: int, part_bound: int) -> CheckResult:
    sigs = _sig_pool(max_level, part_bound)
    worked = (zhat_mul(ZhatElement.basis((1,)), ZhatElement.basis((2,)))
              == (ZhatElement.basis((3, 0)) + ZhatElement.basis((2, 1)))
              .scale(LaurentPoly.q_power(1)))
    if not worked:
        return CheckResult("q-commutation", False, "worked example z(1) z(2) failed")
    for mu in sigs:
        zmu = ZhatElement.basis(mu)
        for nu in sigs:
            lhs = zhat_mul(zmu, ZhatElement.basis(nu))
            rhs = zhat_mul(ZhatElement.basis(nu), zmu).scale(
                LaurentPoly.q_power(2 * bracket(mu, nu)))
            if lhs != rhs:
                return CheckResult("q-commutation", False, f"pair {mu}, {nu}")
    return CheckResult("q-commutation", True, f"{len(sigs)}^2 ordered pairs exact")


def _sigma_triple_value(graph, f1, f2, f3, lam, left: bool):
    def pair(fa, fb, level):
        return CentralFunction(level, lambda v: sigma_eval_product(
            graph, SigmaElement({fa.level: fa}), SigmaElement({fb.level: fb}), v))

    if left:
        inner = pair(f1, f2, f1.level + f2.level)
        return sigma_eval_product(graph, SigmaElement({inner.level: inner}),
                                  SigmaElement({f3.level: f3}), lam)
    inner = pair(f2, f3, f2.level + f3.level)
    return sigma_eval_product(graph, SigmaElement({f1.level: f1}),
                              SigmaElement({inner.level: inner}), lam)


def check_ring_laws(triples: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    partition_pool = [s for s in _sig_pool(2, 3) if not s or s[-1] >= 0]
    for i in range(triples):
        a, b, c = (ZhatElement.basis(rng.choice(partition_pool)) for _ in range(3))
        if zhat_mul(zhat_mul(a, b), c) != zhat_mul(a, zhat_mul(b, c)):
            return CheckResult("ring-laws", False, f"associativity fails at triple {i}")
    g = gtq_graph(-1)
    pool = _sig_pool(2, 2, include_empty=False)
    for i in range(max(10, triples // 5)):
        sigs = [rng.choice(pool) for _ in range(3)]
        fs = [CentralFunction.indicator(len(s), s) for s in sigs]
        total = sum(len(s) for s in sigs)
        probes = set()
        prod = zhat_mul(zhat_mul(ZhatElement.basis(sigs[0]), ZhatElement.basis(sigs[1])),
                        ZhatElement.basis(sigs[2]))
        for (n, lam) in list(prod.coeffs)[:2]:
            probes.add(lam)
            stretched = (lam[0] + 1,) + lam[1:-1] + (lam[-1] - 1,)
            probes.add(stretched)
        if not probes:
            probes = {tuple([0] * total)}
        for lam in probes:
            lhs = _sigma_triple_value(g, *fs, lam, left=True)
            rhs = _sigma_triple_value(g, *fs, lam, left=False)
            if not scalars_equal(lhs, rhs):
                return CheckResult("ring-laws", False,
                                   f"pointwise associativity fails at {lam} for {sigs}")
    unit = ZhatElement.unit()
    x = ZhatElement.basis((2, 0)) + ZhatElement.basis((1,)).scale(LaurentPoly.q_power(-1))
    if zhat_mul(unit, x) != x or zhat_mul(x, unit) != x:
        return CheckResult("ring-laws", False, "unit law fails")
    for mu in _sig_pool(2, 2, include_empty=False):
        for nu in _sig_pool(2, 2, include_empty=False):
            prod = zhat_mul(ZhatElement.basis(mu), ZhatElement.basis(nu))
            for (n, lam), coef in prod.items():
                if coef.evaluate(1) != lr_splice(lam, mu, nu):
                    return CheckResult("ring-laws", False,
                                       f"structure constant at q=1 differs: {lam}|{mu},{nu}")
            back = zhat_mul(ZhatElement.basis(nu), ZhatElement.basis(mu))
            q1 = {k: c.evaluate(1) for k, c in prod.items()}
            q1b = {k: c.evaluate(1) for k, c in back.items()}
            if q1 != q1b:
                return CheckResult("ring-laws", False, f"q=1 commutativity fails {mu},{nu}")
    return CheckResult("ring-laws", True,
                       f"{triples} associativity triples; unit; q=1 structure constants")


def check_module_relation(max_level: int, window_min: int) -> CheckResult:
    g = gtq_graph(-1)
    checked = 0
    for n in range(1, max_level + 1):
        bound = 2
        while len(list(signatures_of_length(n + 1, -bound, bound))) < window_min:
            bound += 1
        window = list(signatures_of_length(n + 1, -bound, bound))
        for mu in signatures_of_length(n, -2, 2):
            f = CentralFunction.indicator(n, mu)
            x = SigmaElement({n: f})
            prod = SystemElement(n + 1, sigma_product_function(
                g, x, SigmaElement.level_unit(1), n + 1))
            theta = SystemElement(n + 1, theta_map(g, f))
            v = equal_on_window(g, prod, theta, n + 1, window)
            checked += len(window)
            if not v.agree:
                return CheckResult("module-relation", False,
                                   f"f=z{list(mu)}: differ at {v.witness}")
    return CheckResult("module-relation", True, f"{checked} vertex comparisons exact")


def check_harmonic_suite(max_level: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    g = gtq_graph(-1, Fraction(9, 10))
    tops = [(1, 0, 0), (2, 1, 0), (1, 0, -1)]
    systems = []
    for top in tops:
        systems.append(from_top(g, L1Vector.delta(len(top), top)))
    two = L1Vector(3, {(1, 0, 0): Fraction(1, 3), (2, 0, -1): Fraction(2, 3)})
    systems.append(from_top(g, two))
    systems.append(counit_system(g, max_level))
    systems.append(counit_system(young_graph(), max_level))
    systems.append(counit_system(classical_gt_graph(), max_level))
    systems.append(convex_mix(systems[0], systems[1], Fraction(1, 4)))
    for s in systems:
        if not check_harmonic(s).ok:
            return CheckResult("harmonic-suite", False, f"{s!r} fails")
    yg = young_graph()
    for n_top in range(0, 6):
        plancherel = L1Vector(n_top, {
            lam: Fraction(dim_syt(lam) ** 2, _factorial(n_top)) for lam in partitions_of(n_top)})
        sysp = from_top(yg, plancherel)
        if not check_harmonic(sysp).ok:
            return CheckResult("harmonic-suite", False, f"plancherel n={n_top} fails")
    base = systems[0]
    vecs = [base.vector(n) for n in range(base.top_level + 1)]
    lam = next(iter(vecs[2].support()))
    perturbed = vecs[2].add(L1Vector(2, {lam: Fraction(1, 1000)}))
    broken_levels = vecs[:2] + [perturbed] + vecs[3:]
    from .harmonic import CoherentSystem

    broken = CoherentSystem(base.graph, broken_levels)
    if check_harmonic(broken).ok:
        return CheckResult("harmonic-suite", False, "perturbation not rejected")
    return CheckResult("harmonic-suite", True,
                       f"{len(systems)} systems + plancherel exact; perturbation rejected")


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def check_charfun(points: int, tol: float, seed: int) -> CheckResult:
    rng = random.Random(seed)
    q = Fraction(9, 10)
    g = gtq_graph(-1, q)
    nu1 = from_top(g, L1Vector.delta(3, (2, 1, 0)))
    nu2 = from_top(g, L1Vector.delta(3, (1, 0, -1)))
    worst = 0.0
    for _ in range(points):
        for n in range(0, 3):
            t = random_torus_point(n, rng)
            c = coherence_check(nu1, n, t, tol)
            worst = max(worst, c.defect)
            if not c.ok:
                return CheckResult("charfun", False, f"coherence defect {c.defect}")
        t = random_torus_point(3, rng)
        m = multiplicativity_check(nu1, nu2, 3, t, tol)
        worst = max(worst, m.defect)
        if not m.ok:
            return CheckResult("charfun", False, f"multiplicativity defect {m.defect}")
        a = adjoint_check(nu1, 3, t, tol)
        worst = max(worst, a.defect)
        if not a.ok:
            return CheckResult("charfun", False, f"adjoint defect {a.defect}")
    ae = adjoint_check(nu1, 3, (1, -1, 1), tol)
    if not ae.ok:
        return CheckResult("charfun", False, "exact adjoint at a +-1 point fails")
    return CheckResult("charfun", True, f"{points} points/check, worst defect {worst:.2e}")


def check_lr_oracles(max_size: int) -> CheckResult:
    checked = 0
    for n_vars in (2, 3):
        for tot in range(0, max_size + 1):
            for a in range(0, tot + 1):
                for mu in partitions_of(a):
                    if len(mu) > n_vars:
                        continue
                    for nu in partitions_of(tot - a):
                        if len(nu) > n_vars:
                            continue
                        mu_s = mu + (0,) * (n_vars - len(mu))
                        nu_s = nu + (0,) * (n_vars - len(nu))
                        oracle = tensor_expand_oracle(mu_s, nu_s)
                        if oracle != dict(tensor_components(mu_s, nu_s)):
                            return CheckResult("lr-oracles", False,
                                               f"tensor {mu_s} x {nu_s}")
                        for lam, c in oracle.items():
                            if lr_tensor(lam, mu_s, nu_s) != c:
                                return CheckResult("lr-oracles", False,
                                                   f"tensor coeff {lam}|{mu_s},{nu_s}")
                        checked += 1
    for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for size in range(0, max_size + 1):
            for lam in partitions_of(size):
                if len(lam) > m + n:
                    continue
                lam_s = lam + (0,) * (m + n - len(lam))
                oracle = splice_expand_oracle(lam_s, m, n)
                comps = {}
                for mu in signatures_of_length(m, 0, size):
                    for nu in signatures_of_length(n, 0, size):
                        c = lr_splice(lam_s, mu, nu)
                        if c:
                            comps[(mu, nu)] = c
                if oracle != comps:
                    return CheckResult("lr-oracles", False, f"splice {lam_s} ({m},{n})")
                checked += 1
    return CheckResult("lr-oracles", True, f"{checked} expansions match the peel oracle")


def check_sampler(count: int, seed: int, tv_bound: float) -> CheckResult:
    g = gtq_graph(-1, Fraction(9, 10))
    top = (2, 1, 0, 0)
    h1 = sample_down_histogram(g, top, None, seed, count, 2)
    h2 = sample_down_histogram(g, top, None, seed, count, 2)
    if h1 != h2:
        return CheckResult("sampler", False, "same seed produced different histograms")
    exact = pushdown_chain(g, L1Vector.delta(4, top), 2)
    oracle = pushdown_matrix_oracle(g, L1Vector.delta(4, top), 2)
    if {k: Fraction(v) for k, v in exact.items()} != oracle:
        return CheckResult("sampler", False, "pushdown disagrees with the matrix oracle")
    tv = empirical_tv(h1, exact)
    if tv >= tv_bound:
        return CheckResult("sampler", False, f"TV {float(tv):.4f} >= {tv_bound}")
    return CheckResult("sampler", True, f"TV {float(tv):.4f} at {count} samples; deterministic")


def run_all(max_level: int = 3, part_bound: int = 3, seed: int = 42,
            tol: float = 1e-10, points: int = 10, sample_count: int = 20000) -> list:
    return [
        check_stochastic_links(max_level, part_bound),
        check_q1_degeneration(max_level, min(part_bound, 3)),
        check_duality(60, max(2, max_level - 1), min(part_bound, 3), seed),
        check_q_commutation(max_level, part_bound),
        check_ring_laws(50, seed),
        check_module_relation(min(max_level, 3), 50),
        check_harmonic_suite(max(3, max_level), seed),
        check_charfun(points, tol, seed),
        check_lr_oracles(5),
        check_sampler(sample_count, seed, 0.05),
    ]
