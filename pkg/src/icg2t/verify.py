"""The machine-verification suite: every exact identity and desk-scale
inequality the package certifies, runnable from the CLI (`icg2t verify`)
and reused by the acceptance tests.

Each check returns a CheckResult; `ok=False` carries the first
counterexample found, serialized as a plain dict.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import arith2adic, discrepancy, fexpansion, meanvalue
from .corpus import child_rng, expansion_corpus, random_point_set, split_matrix_corpus
from .generator import GeneratorParams, closed_form_traj, iterate, period
from .sums import KorobovInput, double_sum, exp_sum, korobov_rhs, shift_reduction_check, spectrum

__all__ = ["CheckResult", "VerifyOptions", "run_all", "ALL_CHECKS"]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)


@dataclass
class VerifyOptions:
    seed: int = 0
    order_s_max: int = 14
    matrix_count: int = 100
    expansion_count: int = 50
    shift_count: int = 1000
    point_set_count: int = 200
    parseval_count: int = 20
    korobov_q_max: int = 64
    et_c1: float = 3.0
    et_c2: float = 3.0
    quick: bool = False

    def scaled(self):
        if not self.quick:
            return self
        return VerifyOptions(
            seed=self.seed,
            order_s_max=10,
            matrix_count=20,
            expansion_count=10,
            shift_count=100,
            point_set_count=40,
            parseval_count=8,
            korobov_q_max=16,
            et_c1=self.et_c1,
            et_c2=self.et_c2,
        )


def check_order_law(opts):
    """Fast-path order equals iterated order and v2(g^tau - 1) = s exactly,
    for every odd g, 3 <= g <= 2^s - 3, beta <= s <= order_s_max."""
    for s in range(3, opts.order_s_max + 1):
        m = 1 << s
        for g in range(3, m - 1, 2):
            info = arith2adic.mult_order(g, s)
            if info.degenerate:
                continue
            if s < info.beta:
                continue
            brute = arith2adic.order_by_iteration(g, s)
            if info.tau != brute:
                return CheckResult(
                    "order-law", False, {"g": g, "s": s, "fast": info.tau, "brute": brute}
                )
            lifted = pow(g, info.tau, 1 << (s + 2))
            if arith2adic.v2(lifted - 1) != s:
                return CheckResult("order-law", False, {"g": g, "s": s, "issue": "v2 != s"})
    return CheckResult("order-law", True)


def check_combinatorial_identities(opts):
    """Hockey-stick and surjection identities, exhaustive for n <= 20."""
    for n in range(1, 21):
        for k in range(0, n + 1):
            lhs, rhs = arith2adic.hockey_stick(n, k)
            if lhs != rhs:
                return CheckResult(
                    "combinatorial-identities", False, {"identity": "hockey", "n": n, "k": k}
                )
        for k in range(1, n + 1):
            lhs, rhs = arith2adic.surjection_count(n, k)
            if lhs != rhs:
                return CheckResult(
                    "combinatorial-identities", False, {"identity": "surjection", "n": n, "k": k}
                )
    rng = child_rng(opts.seed, "alt-poly")
    for n in range(1, 12):
        coeffs = [rng.randint(-9, 9) for _ in range(n)]  # deg < n
        if arith2adic.alternating_poly_sum(n, coeffs) != 0:
            return CheckResult(
                "combinatorial-identities", False, {"identity": "alternating", "n": n, "coeffs": coeffs}
            )
    return CheckResult("combinatorial-identities", True)


def check_closed_form(opts):
    """Closed form reproduces Moebius iteration over a full period
    (capped at 2^14 terms) on the random split-matrix corpus."""
    corpus = split_matrix_corpus(opts.seed, opts.matrix_count)
    for mat, u0, p in corpus:
        n_check = min(period(p).value, 1 << 14)
        got = closed_form_traj(p, 0, n_check).values
        want = iterate(mat, u0, 0, n_check).values
        if got != want:
            idx = next(i for i, (a, b) in enumerate(zip(got, want)) if a != b)
            return CheckResult(
                "closed-form-vs-iteration",
                False,
                {"t": mat.t, "matrix": mat.entries(), "u0": u0, "first_mismatch": idx},
            )
        if any(v % 2 == 0 for v in got):
            return CheckResult(
                "closed-form-vs-iteration", False, {"t": mat.t, "issue": "even trajectory value"}
            )
    return CheckResult("closed-form-vs-iteration", True, {"instances": len(corpus)})


def _expansion_instances(opts):
    worked = (GeneratorParams(g=3, a=1, b=2, c=0, t=8), 4)
    return [worked] + expansion_corpus(opts.seed, opts.expansion_count)


def check_expansion_congruence(opts):
    """u_{n*tau_s} = -F(n) mod 2^t for all n with n*tau_s <= 2^14."""
    for p, s in _expansion_instances(opts):
        fe = fexpansion.build_F(p, s)
        n_max = max((1 << 14) // fe.tau_s, 2)
        for n in range(n_max + 1):
            if not fexpansion.congruence_check(fe, n):
                return CheckResult(
                    "expansion-congruence",
                    False,
                    {"g": p.g, "b": p.b, "t": p.t, "s": s, "n": n},
                )
    return CheckResult("expansion-congruence", True)


def check_coefficient_valuations(opts):
    """omega_l = v2(kappa!/l!), omega_kappa = 0, and the reduced-phase
    denominator windows, on the expansion corpus."""
    rng = child_rng(opts.seed, "phases")
    for p, s in _expansion_instances(opts):
        fe = fexpansion.build_F(p, s)
        for ell, got, expected in fexpansion.coeff_valuations(fe):
            if got != expected:
                return CheckResult(
                    "coefficient-valuations",
                    False,
                    {"g": p.g, "b": p.b, "t": p.t, "s": s, "l": ell, "omega": got, "expected": expected},
                )
        if fe.omegas[fe.kappa] != 0:
            return CheckResult(
                "coefficient-valuations", False, {"g": p.g, "t": p.t, "s": s, "issue": "omega_kappa != 0"}
            )
        vk = arith2adic.v2(math.factorial(fe.kappa)) if fe.kappa > 1 else 0
        if any(fe.omegas[ell] > vk for ell in range(1, fe.kappa)):
            return CheckResult(
                "coefficient-valuations", False, {"g": p.g, "t": p.t, "s": s, "issue": "omega_l > v2(kappa!)"}
            )
        for _ in range(3):
            h = rng.randrange(1, p.modulus, 2)
            shift = rng.randrange(0, 64)
            try:
                fexpansion.reduce_phases(fe, h, shift)
            except AssertionError as exc:
                return CheckResult(
                    "coefficient-valuations",
                    False,
                    {"g": p.g, "t": p.t, "s": s, "h": h, "shift": shift, "issue": str(exc)},
                )
    return CheckResult("coefficient-valuations", True)


def check_meanvalue_oracle(opts):
    """Grouped counter equals naive 2k-fold enumeration on the desk grid."""
    for k in range(1, 4):
        for n in range(1, 3):
            for m in range(1, 9):
                fast = meanvalue.count_solutions(k, n, m).count
                naive = meanvalue.count_solutions_naive(k, n, m).count
                if fast != naive:
                    return CheckResult(
                        "meanvalue-oracle", False, {"k": k, "n": n, "M": m, "fast": fast, "naive": naive}
                    )
                if not m**k <= fast <= m ** (2 * k):
                    return CheckResult(
                        "meanvalue-oracle", False, {"k": k, "n": n, "M": m, "issue": "range"}
                    )
    if meanvalue.count_solutions(2, 1, 2).count != 6:
        return CheckResult("meanvalue-oracle", False, {"issue": "N_{2,1}(2) != 6"})
    if any(meanvalue.count_solutions(1, 1, m).count != m for m in range(1, 9)):
        return CheckResult("meanvalue-oracle", False, {"issue": "N_{1,1}(M) != M"})
    return CheckResult("meanvalue-oracle", True)


def _farey_fractions(q_max):
    """All reduced fractions r/q in [0,1) with q <= q_max; includes 0/1."""
    out = []
    for q in range(1, q_max + 1):
        for r in range(q):
            if math.gcd(r, q) == 1:
                out.append(Fraction(r, q))
    return out


def korobov_desk_check(q_max=64, m_values=(1, 2, 3, 4), k_values=(2, 3), slack=1e-9):
    """Exhaustive double-sum bound check: |S|^(2k^2) <= RHS in log2 space,
    over exact rational phases with denominators up to q_max, degrees 1
    and 2.  Vectorized; returns (ok, counterexample_or_None)."""
    fracs = _farey_fractions(q_max)
    alphas = np.array([float(f) for f in fracs])
    qs = np.array([f.denominator for f in fracs], dtype=np.float64)
    for m in m_values:
        prods = np.array(
            [x * y for x in range(1, m + 1) for y in range(1, m + 1)], dtype=np.float64
        )
        t1 = np.exp(2j * np.pi * np.outer(alphas, prods))
        t2 = np.exp(2j * np.pi * np.outer(alphas, prods * prods))
        for k in k_values:
            base = (4 * k * k - 2 * k) * math.log2(m)
            for n in (1, 2):
                count = meanvalue.count_solutions(k, n, m).count
                term_q = np.minimum(
                    float(m), np.sqrt(qs) + float(m) / np.sqrt(qs)
                )
                term_q2 = np.minimum(
                    float(m) ** 2, np.sqrt(qs) + float(m) ** 2 / np.sqrt(qs)
                )
                if n == 1:
                    s_abs = np.abs(t1.sum(axis=1))
                    rhs = (
                        0.5 * np.log2(64 * k * k * np.log(3 * qs))
                        + base
                        + math.log2(count)
                        + np.log2(term_q)
                    )
                    with np.errstate(divide="ignore"):
                        lhs = 2 * k * k * np.log2(s_abs)
                    bad = np.nonzero(lhs > rhs + slack)[0]
                    if bad.size:
                        i = int(bad[0])
                        return False, {
                            "M": m, "k": k, "n": 1, "alpha": str(fracs[i]),
                            "lhs_log2": float(lhs[i]), "rhs_log2": float(rhs[i]),
                        }
                else:
                    s_mat = t1 @ t2.T  # S[i,j] = sum_v e(a_i v + a_j v^2)
                    q_big = np.maximum.outer(qs, qs)
                    rhs = (
                        1.0 * np.log2(64 * k * k * np.log(3 * q_big))
                        + base
                        + math.log2(count)
                        + np.add.outer(np.log2(term_q), np.log2(term_q2))
                    )
                    with np.errstate(divide="ignore"):
                        lhs = 2 * k * k * np.log2(np.abs(s_mat))
                    bad = np.nonzero(lhs > rhs + slack)
                    if bad[0].size:
                        i, j = int(bad[0][0]), int(bad[1][0])
                        return False, {
                            "M": m, "k": k, "n": 2,
                            "alpha1": str(fracs[i]), "alpha2": str(fracs[j]),
                            "lhs_log2": float(lhs[i, j]), "rhs_log2": float(rhs[i, j]),
                        }
    return True, None


def check_korobov(opts):
    ok, ce = korobov_desk_check(q_max=opts.korobov_q_max)
    if not ok:
        return CheckResult("korobov-inequality", False, ce)
    # spot-check the vectorized evaluation against the scalar API
    rng = child_rng(opts.seed, "korobov-spot")
    for _ in range(20):
        m = rng.randint(1, 4)
        k = rng.choice([2, 3])
        q1 = rng.randint(1, opts.korobov_q_max)
        r1 = rng.choice([r for r in range(q1) if math.gcd(r, q1) == 1])
        alpha = Fraction(r1, q1)
        s_val = abs(double_sum([alpha], m))
        inp = KorobovInput(
            k=k, n=1, M=m, q_list=[alpha.denominator],
            meanvalue_count=meanvalue.count_solutions(k, 1, m).count,
        )
        rhs = korobov_rhs(inp)
        lhs = 2 * k * k * math.log2(s_val) if s_val > 0 else -math.inf
        if lhs > rhs + 1e-9:
            return CheckResult(
                "korobov-inequality", False,
                {"M": m, "k": k, "alpha": str(alpha), "lhs_log2": lhs, "rhs_log2": rhs},
            )
    return CheckResult("korobov-inequality", True)


def check_shift_reduction(opts):
    """Randomized single-to-double reduction inequality instances."""
    rng = child_rng(opts.seed, "shift-instances")
    for i in range(opts.shift_count):
        n = rng.randint(1, 100)
        m = rng.randint(1, 5)
        a = rng.randint(0, 3)
        c0, c1, c2 = (rng.uniform(-1, 1) for _ in range(3))
        f = lambda x, c0=c0, c1=c1, c2=c2: c0 + c1 * x + c2 * x * x
        lhs, rhs = shift_reduction_check(f, n, m, a)
        if lhs > rhs + 1e-9:
            return CheckResult(
                "shift-reduction", False,
                {"instance": i, "N": n, "M": m, "a": a, "coeffs": [c0, c1, c2], "lhs": lhs, "rhs": rhs},
            )
    return CheckResult("shift-reduction", True, {"instances": opts.shift_count})


def _point_set_sizes(rng, count):
    sizes = [1, 2, 3, 4096]
    while len(sizes) < count:
        sizes.append(int(2 ** rng.uniform(0, 12)))
    return sizes[:count]


def check_discrepancy_oracle(opts):
    """Sorted-formula discrepancy equals the endpoint-enumeration oracle
    to 1e-12 on fixtures and random point sets."""
    fixtures = [
        ([0.5], 1.0),
        ([i / 64 for i in range(64)], 1 / 64),
        ([3 / 16, 7 / 16, 11 / 16, 15 / 16], 0.25),
    ]
    for pts, expected in fixtures:
        ps = discrepancy.PointSet(pts)
        d = discrepancy.exact_discrepancy(ps)
        o = discrepancy.brute_force_discrepancy(ps)
        if abs(d - expected) > 1e-12 or abs(d - o) > 1e-12:
            return CheckResult(
                "discrepancy-oracle", False, {"fixture": pts[:4], "formula": d, "oracle": o}
            )
    rng = child_rng(opts.seed, "point-sets")
    for size in _point_set_sizes(rng, opts.point_set_count):
        ps = discrepancy.PointSet(random_point_set(rng, size))
        d = discrepancy.exact_discrepancy(ps)
        o = discrepancy.brute_force_discrepancy(ps)
        if abs(d - o) > 1e-12:
            return CheckResult(
                "discrepancy-oracle", False, {"size": size, "formula": d, "oracle": o}
            )
        if not 1 / size - 1e-12 <= d <= 1 + 1e-12:
            return CheckResult("discrepancy-oracle", False, {"size": size, "issue": "range"})
    return CheckResult("discrepancy-oracle", True)


def _point_set_mags(points, h_max):
    x = np.asarray(points, dtype=np.float64)
    h = np.arange(1, h_max + 1, dtype=np.float64)
    return np.abs(np.exp(2j * np.pi * np.outer(h, x)).sum(axis=1))


def _et_corpora(opts):
    rng = child_rng(opts.seed, "et-corpora")
    corpora = [
        [0.5],
        [i / 64 for i in range(64)],
        [3 / 16, 7 / 16, 11 / 16, 15 / 16],
    ]
    for size in (8, 33, 128, 700):
        corpora.append(random_point_set(rng, size))
    for g, t, count in ((3, 10, 200), (5, 12, 512), (11, 14, 1000)):
        p = GeneratorParams(g=g, a=1, b=2, c=0, t=t)
        corpora.append(list(discrepancy.points_from_params(p, 0, count).points))
    return corpora


def check_et_calibration(opts):
    """Calibration guard: exact D <= truncated-sum bound with the
    configured constants, for H = 1..64, on every corpus set."""
    for idx, pts in enumerate(_et_corpora(opts)):
        ps = discrepancy.PointSet(pts)
        d = discrepancy.exact_discrepancy(ps)
        mags = _point_set_mags(pts, 64)
        for big_h in range(1, 65):
            bound = discrepancy.erdos_turan_bound(mags, ps.size, big_h, opts.et_c1, opts.et_c2)
            if d > bound + 1e-12:
                return CheckResult(
                    "et-calibration", False,
                    {"corpus": idx, "N": ps.size, "H": big_h, "exact": d, "bound": bound,
                     "c1": opts.et_c1, "c2": opts.et_c2},
                )
    return CheckResult("et-calibration", True)


# (t, g) pairs keeping tau_t * 2^t at desk scale for the full-spectrum sweep
PARSEVAL_SETS = [
    (4, 5), (5, 3), (6, 3), (7, 5), (8, 3), (8, 7), (9, 5), (10, 3),
    (10, 31), (11, 5), (11, 63), (12, 5), (12, 127), (13, 127), (13, 255),
    (14, 255), (14, 511), (15, 511), (16, 1023), (16, 2047),
]


def check_parseval(opts):
    """sum_h |S_h(0, tau_t)|^2 = 2^t * tau_t within relative 2^-30, and the
    t = 4 fixture (total 64, S_1 = 0)."""
    rng = child_rng(opts.seed, "parseval")
    for t, g in PARSEVAL_SETS[: opts.parseval_count]:
        b = rng.randrange(0, 1 << t, 2)
        p = GeneratorParams(g=g, a=1, b=b, c=0, t=t)
        tau = period(p).value
        rep = spectrum(p, 0, tau)
        expected = float((1 << t) * tau)
        if abs(rep.parseval_total - expected) > expected * 2**-30:
            return CheckResult(
                "parseval", False,
                {"t": t, "g": g, "b": b, "total": rep.parseval_total, "expected": expected},
            )
    fixture = GeneratorParams(g=5, a=1, b=2, c=0, t=4)
    rep = spectrum(fixture, 0, 4)
    if abs(rep.parseval_total - 64.0) > 64.0 * 2**-30 or abs(exp_sum(fixture, 1, 0, 4).magnitude) > 1e-12:
        return CheckResult("parseval", False, {"issue": "t=4 fixture"})
    return CheckResult("parseval", True)


def check_bound_shape(opts):
    """thm2 with unit constants equals exp(-(ln N)^3 / t^2) to rel 1e-12."""
    for t in range(3, 33, 3):
        for logn in range(1, t + 1):
            n = 1 << logn
            got = discrepancy.theorem_bounds(n, t, 3).thm2
            want = math.exp(-math.log(n) ** 3 / t**2)
            if abs(got - want) > abs(want) * 1e-12:
                return CheckResult("bound-shape", False, {"N": n, "t": t, "got": got, "want": want})
    return CheckResult("bound-shape", True)


ALL_CHECKS = [
    check_order_law,
    check_combinatorial_identities,
    check_closed_form,
    check_expansion_congruence,
    check_coefficient_valuations,
    check_meanvalue_oracle,
    check_korobov,
    check_shift_reduction,
    check_discrepancy_oracle,
    check_et_calibration,
    check_parseval,
    check_bound_shape,
]


def run_all(opts=None):
    opts = (opts or VerifyOptions()).scaled()
    return [chk(opts) for chk in ALL_CHECKS]
