"""Randomized verification suites behind `jacobi-spectra verify` and the
acceptance tests.  Every suite is deterministic under a fixed seed."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _qr
from .corpus import make_corpus, random_annulus_point, random_complex_disk, rescale_below
from .green_kernel import green, kernel_J, kernel_J_tilde_poly, kernel_bound_margin
from .jost import bound_margin_i, bound_margin_ii, jost_backsubstitute, jost_successive, phi
from .operator_core import (
    build_operator,
    extend_solution,
    gauge_residual,
    gauge_transform,
    inverse_joukowski,
    joukowski,
    sigma0,
    sigma1,
    weight_d,
    wronskian,
)
from .regions import (
    in_omega,
    in_spectrum_free_region,
    omega_constant,
    omega_constant_bisect,
    spectral_rectangles,
)
from .spectrum import (
    discrete_spectrum,
    eigenvector_check,
    jost_zeros,
    reconcile,
    stable_offband_eigenvalues,
    truncated_eigenvalues,
)

_MAX_MESSAGES = 20


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    messages: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def check(self, cond: bool, message: str):
        self.checks += 1
        if not cond:
            self.failures += 1
            if len(self.messages) < _MAX_MESSAGES:
                self.messages.append(message)


def suite_operator_identities(seed: int) -> SuiteResult:
    rng = np.random.default_rng([seed, 1])
    res = SuiteResult("operator_identities")

    t_newton = omega_constant()
    t_bisect = omega_constant_bisect()
    res.check(abs(t_newton * math.exp(t_newton) - 1.0) < 1e-15, "omega residual")
    res.check(abs(t_newton - t_bisect) < 1e-13, "omega newton vs bisection")

    for _ in range(1000):
        lam = random_complex_disk(rng, 10.0)
        z = inverse_joukowski(lam)
        res.check(abs(z) <= 1.0 + 1e-14, f"inverse_joukowski modulus {abs(z)}")
        res.check(abs(joukowski(z) - lam) < 1e-12, f"joukowski roundtrip at {lam}")

    ops = make_corpus(rng, 50)
    for op in ops:
        M = op.support_bound
        res.check(weight_d(op, M + 1) == 0.0, "d_m beyond support")
        s0 = [sigma0(op, n) for n in range(M + 2)]
        s1 = [sigma1(op, n) for n in range(M + 2)]
        res.check(all(x >= y for x, y in zip(s0, s0[1:])), "sigma0 monotone")
        res.check(all(x >= y for x, y in zip(s1, s1[1:])), "sigma1 monotone")
        res.check(s0[M] == 0.0 and s1[M] == 0.0, "sigma vanishes at M")

        z = random_annulus_point(rng, 0.1, 0.9)
        y = [random_complex_disk(rng, 1.0) + 0.1 for _ in range(4)]
        N = M + 8
        g = extend_solution(op, z, y[0], y[1], N)
        h = extend_solution(op, z, y[2], y[3], N)
        w0 = wronskian(g, h, 0)
        for n in range(1, N):
            lhs = wronskian(g, h, n)
            # scale tracks the cancellation in the wronskian products: the
            # solutions grow like |z|^{-n}, so the identity can only hold
            # relative to the size of the products being subtracted
            scale = abs(g.value(n)) * abs(h.value(n + 1)) + abs(g.value(n + 1)) * abs(h.value(n))
            for i in range(1, n + 1):
                lhs *= op.c(i)
                scale *= abs(op.c(i))
            rhs = w0
            rscale = abs(g.value(0)) * abs(h.value(1)) + abs(g.value(1)) * abs(h.value(0))
            for i in range(n):
                rhs *= op.a(i)
                rscale *= abs(op.a(i))
            scale = max(scale, rscale, 1.0)
            res.check(abs(lhs - rhs) / scale < 1e-10, f"wronskian identity n={n}")
        x = gauge_transform(op, g)
        scale = 1.0 + max(abs(v) for v in x.values)
        res.check(gauge_residual(op, z, x) / scale < 1e-12, "gauge recurrence residual")
    return res


def suite_green_identities(seed: int, n_z: int = 100) -> SuiteResult:
    rng = np.random.default_rng([seed, 2])
    res = SuiteResult("green_identities")
    ops = make_corpus(rng, 5)
    for _ in range(n_z):
        z = random_annulus_point(rng, 0.05, 0.999)
        lam = z + 1.0 / z
        G = np.zeros((23, 23), dtype=complex)
        for n in range(23):
            for m in range(23):
                G[n, m] = green(n, m, z)
        absG = np.abs(G)
        for n in range(21):
            for m in range(1, 21):
                delta = 1.0 if n == m else 0.0
                scale = 1.0 + absG[n, m + 1] + absG[n, m - 1] + abs(lam) * absG[n, m]
                r1 = G[n, m + 1] + G[n, m - 1] - lam * G[n, m] - delta
                res.check(abs(r1) / scale < 1e-10, f"green m-recurrence n={n} m={m} z={z}")
        for n in range(1, 21):
            for m in range(21):
                delta = 1.0 if n == m else 0.0
                scale = 1.0 + absG[n - 1, m] + absG[n + 1, m] + abs(lam) * absG[n, m]
                r2 = G[n - 1, m] + G[n + 1, m] - lam * G[n, m] - delta
                res.check(abs(r2) / scale < 1e-10, f"green n-recurrence n={n} m={m} z={z}")
        # Chebyshev U_{m-n-1} at (z + 1/z)/2 via the three-term recurrence
        x = lam / 2.0
        for _ in range(10):
            n = int(rng.integers(0, 10))
            m = int(rng.integers(n + 1, 11))
            u_prev, u = 1.0 + 0.0j, 2.0 * x
            k = m - n - 1
            if k == 0:
                cheb = u_prev
            else:
                for _ in range(k - 1):
                    u_prev, u = u, 2.0 * x * u - u_prev
                cheb = u
            res.check(abs(G[n, m] - cheb) < 1e-10 * (1 + abs(cheb)),
                      f"chebyshev oracle n={n} m={m} z={z}")

        op = ops[int(rng.integers(0, len(ops)))]
        for n in range(1, 12):
            for m in range(n + 2, 14):
                ja, jb, jc = (kernel_J(op, n - 1, m, z), kernel_J(op, n + 1, m, z),
                              kernel_J(op, n, m, z))
                scale = 1.0 + abs(ja) + abs(jb) + abs(lam) * abs(jc)
                res.check(abs(ja + jb - lam * jc) / scale < 1e-10,
                          f"kernel three-term n={n} m={m}")

    for _ in range(1000):
        op = ops[int(rng.integers(0, len(ops)))]
        n = int(rng.integers(0, 8))
        m = int(rng.integers(n + 1, 12))
        z = random_annulus_point(rng, 0.05, 0.999)
        if abs(z * z - 1.0) < 1e-9:
            continue
        poly_val = kernel_J_tilde_poly(op, n, m)(z)
        point_val = kernel_J(op, n, m, z) * z ** (m - n)
        res.check(abs(poly_val - point_val) < 1e-12 * (1 + abs(point_val)),
                  f"tilde poly vs point n={n} m={m} z={z}")
        res.check(kernel_bound_margin(op, n, m, z) >= -1e-12,
                  f"kernel bound margin n={n} m={m} z={z}")
    return res


def suite_theorem1(seed: int, n_ops: int = 200, n_z: int = 50) -> SuiteResult:
    rng = np.random.default_rng([seed, 3])
    res = SuiteResult("theorem1")
    ops = make_corpus(rng, n_ops)
    boundary = [1.0 + 0.0j, -1.0 + 0.0j, 1.0j, -1.0j]
    for op in ops:
        M = op.support_bound
        result = jost_backsubstitute(op)
        for n in range(M + 1):
            p = result.v_tilde(n)
            res.check(p.coeffs[0] == 1.0, f"constant term at n={n}")
            res.check(p.degree <= max(0, 2 * (M - n) - 1), f"degree bound at n={n}")
        res.check(result.v_tilde(M).is_one() and result.v_tilde(M + 3).is_one(),
                  "v~ is 1 beyond the support")

        for _ in range(n_z):
            z = random_annulus_point(rng, 0.05, 0.95)
            succ = jost_successive(op, z)
            res.check(succ.converged, f"successive iteration converged z={z}")
            direct = np.array([result.v_tilde(n)(z) for n in range(M + 1)])
            scale = 1.0 + float(np.max(np.abs(direct)))
            res.check(float(np.max(np.abs(succ.values - direct))) / scale < 1e-10,
                      f"method agreement z={z}")

            # Jost values solve the gauged three-term recurrence
            lam = z + 1.0 / z
            v = [result.v(n, z) for n in range(M + 6)]
            vscale = 1.0 + max(abs(w) for w in v)
            worst = 0.0
            for m in range(1, M + 5):
                r = v[m - 1] + op.b(m) * v[m] + op.a(m) * op.c(m) * v[m + 1] - lam * v[m]
                worst = max(worst, abs(r))
            res.check(worst / vscale < 1e-10, f"recurrence residual z={z}")

            if abs(z * z - 1.0) >= 0.05:
                res.check(bound_margin_i(op, z, int(rng.integers(0, M + 1)), result) >= -1e-12,
                          f"bound (i) z={z}")
                p = phi(z)
                for j, f_j in enumerate(succ.iterates, start=1):
                    bound = (p * sigma0(op, 0)) ** j / math.factorial(j - 1)
                    for n in range(M + 1):
                        bj = (p * sigma0(op, n)) ** j / math.factorial(j - 1)
                        res.check(abs(f_j[n]) <= bj + 1e-12 * (1.0 + bj),
                                  f"iterate bound n={n} j={j} z={z}")
            res.check(bound_margin_ii(op, z, int(rng.integers(0, M + 1)), result) >= -1e-12,
                      f"bound (ii) z={z}")
        for z in boundary:
            res.check(bound_margin_ii(op, z, 0, result) >= -1e-12, f"bound (ii) boundary z={z}")
        res.check(bound_margin_ii(op, 0.0, 0, result) >= -1e-12, "bound (ii) at z=0")
    return res


def suite_corollary1(seed: int, n_ops: int = 500, n_z: int = 200) -> SuiteResult:
    rng = np.random.default_rng([seed, 4])
    res = SuiteResult("corollary1")
    t = omega_constant()
    ops = make_corpus(rng, n_ops)
    for op in ops:
        d0 = sigma0(op, 0)
        poly = jost_backsubstitute(op).v_tilde(0)
        zs = np.array([random_annulus_point(rng, 1e-3, 1.0 - 1e-9) for _ in range(n_z)])
        vals = np.abs(np.polyval(poly.coeffs[::-1], zs))
        for z, val in zip(zs, vals):
            if in_omega(z, d0, t):
                res.check(val >= 1e-9, f"|v0| small inside Omega at z={z}")
        for root in jost_zeros(op):
            res.check(not in_omega(root, d0, t), f"jost zero inside Omega: {root}")

        shrunk = rescale_below(op, t)
        res.check(sigma1(shrunk, 0) < t, "rescaled sigma1 below threshold")
        for root in jost_zeros(shrunk):
            res.check(False, f"disk zero despite sigma1 < t: {root}")

        # enlarging any |b_m| can only grow the Omega threshold
        m = int(rng.integers(1, op.support_bound + 1))
        b_list = dict(op.b_entries)
        b_list[m] = 1.5 * b_list.get(m, 0.3 + 0.1j)
        bigger = build_operator(list(op.a_entries.items()), list(b_list.items()),
                                list(op.c_entries.items()))
        res.check(2.0 * sigma0(bigger, 0) / t >= 2.0 * d0 / t - 1e-12,
                  "threshold monotone in |b_m|")
    return res


def suite_theorem2_remark3(seed: int, n_ops: int = 200, N: int = 400) -> SuiteResult:
    rng = np.random.default_rng([seed, 5])
    res = SuiteResult("theorem2_remark3")
    t = omega_constant()
    ops = make_corpus(rng, n_ops)
    for op in ops:
        recon = reconcile(op, N=N, band_margin=0.05, match_tol=1e-4)
        res.check(recon.ok,
                  f"unmatched discrete eigenvalues {recon.failures} for op M={op.support_bound}")

        stable = stable_offband_eigenvalues(op, N, stability_tol=1e-6, band_margin=0.1)
        lams = np.array(recon.eigenvalues_from_zeros, dtype=complex)
        for lam in stable:
            dist = float(np.min(np.abs(lams - lam))) if len(lams) else math.inf
            res.check(dist < 1e-4, f"stable oracle eigenvalue {lam} has no jost zero (dist {dist})")
            res.check(not in_spectrum_free_region(op, lam, t),
                      f"oracle eigenvalue {lam} inside the spectrum-free region")
        for lam in recon.eigenvalues_from_zeros:
            res.check(not in_spectrum_free_region(op, lam, t),
                      f"discrete eigenvalue {lam} inside the spectrum-free region")

        spec = discrete_spectrum(op)
        for ev in spec:
            if abs(ev.z) < 1.0 - 1e-3:
                try:
                    resid = eigenvector_check(op, ev.z, N=op.support_bound + 60)
                    res.check(resid < 1e-10, f"eigenvector residual {resid} at z={ev.z}")
                except ValueError as exc:
                    res.check(False, f"eigenvector check rejected z={ev.z}: {exc}")

        rect = spectral_rectangles(op, t)
        if rect is not None:
            for ev in spec:
                res.check(rect.contains(ev.lam, slack=1e-9),
                          f"eigenvalue {ev.lam} outside the rectangle enclosure")
    return res


def suite_oracle_selftest(seed: int) -> SuiteResult:
    res = SuiteResult("oracle_selftest")
    free = build_operator()
    for N in (3, 10, 100):
        eigs = truncated_eigenvalues(free, N)
        exact = np.sort(2.0 * np.cos(np.arange(1, N + 1) * np.pi / (N + 1)))
        got = np.sort(eigs.real)
        res.check(float(np.max(np.abs(eigs.imag))) < 1e-10, f"real spectrum at N={N}")
        res.check(float(np.max(np.abs(got - exact))) < 1e-10, f"laplacian eigenvalues at N={N}")

    rng = np.random.default_rng([seed, 6])
    op = make_corpus(rng, 1, max_support=5)[0]
    fast = truncated_eigenvalues(op, 60)
    slow = truncated_eigenvalues(op, 60, backend="python")
    res.check(float(np.max(np.abs(fast - slow))) < 1e-9, "compiled vs fallback kernel")
    H = np.zeros((60, 60), dtype=complex)
    for k in range(60):
        H[k, k] = op.b(k + 1)
        if k + 1 < 60:
            H[k + 1, k] = op.a(k + 1)
            H[k, k + 1] = op.c(k + 1)
    dense = _qr.hessenberg_eigenvalues(H)
    dense = dense[np.lexsort((dense.imag, dense.real))]
    res.check(float(np.max(np.abs(dense - fast))) < 1e-8, "tridiagonal vs dense Hessenberg QR")
    return res


def run_all(seed: int = 0, corpus_size=None) -> list:
    """Run every suite; corpus_size overrides the per-suite operator counts."""
    t1 = corpus_size if corpus_size is not None else 200
    c1 = corpus_size if corpus_size is not None else 500
    t2 = corpus_size if corpus_size is not None else 200
    return [
        suite_operator_identities(seed),
        suite_green_identities(seed),
        suite_theorem1(seed, n_ops=t1),
        suite_corollary1(seed, n_ops=c1),
        suite_theorem2_remark3(seed, n_ops=t2),
        suite_oracle_selftest(seed),
    ]


def format_report(results, seed: int, corpus_size=None) -> str:
    lines = [f"verification report (seed={seed}, corpus-size={corpus_size or 'default'})"]
    lines.append(f"qr backend: {_qr.BACKEND}")
    for r in results:
        lines.append(f"suite {r.name}: {r.checks} checks, {r.failures} failures")
        for msg in r.messages:
            lines.append(f"  FAIL {msg}")
    ok = all(r.ok for r in results)
    lines.append("RESULT: PASS" if ok else "RESULT: FAIL")
    return "\n".join(lines) + "\n"
