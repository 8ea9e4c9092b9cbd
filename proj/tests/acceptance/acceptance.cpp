// Copyright 2026 The hwps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Acceptance run: one PASS/FAIL line per criterion. With no argument every
// criterion runs; `--criterion k` runs only criterion k. Exit status is 0
// iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hwps/cvlimit.hpp"
#include "hwps/encoding.hpp"
#include "hwps/error.hpp"
#include "hwps/fock.hpp"
#include "hwps/wigner_discrete.hpp"
#include "hwps/wigner_plane.hpp"
#include "hwps/wigner_sphere.hpp"

using namespace hwps;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [fail]");
        pass = pass && ok;
    }
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Complex omega(int d, long long k) {
    return std::polar(1.0, 2 * kPi * static_cast<double>(mod(k, d)) / d);
}

// Criterion 1: X^a Z^b = omega^{-ab} Z^b X^a for every encoding.
Verdict heisenberg_weyl() {
    Verdict v;
    const char *names[] = {"identity", "rot_pi_y", "theta_z_half"};
    double worst = 0.0;
    int encodings = 0;
    for (int d = 3; d <= 31; d += 2) {
        const int N = d - 1;
        std::vector<EncodingSpec> specs;
        specs.push_back(build_encoding(N, OperatorMatrix::identity(d), OperatorMatrix::identity(d)));
        for (const char *K : names) {
            for (const char *U : names) specs.push_back(build_encoding(N, K, U));
        }
        for (const auto &e : specs) {
            ++encodings;
            std::vector<CMatrix> xp{CMatrix::Identity(d, d)}, zp{CMatrix::Identity(d, d)};
            for (int a = 1; a < d; ++a) {
                xp.push_back(xp.back() * e.X_U.entries());
                zp.push_back(zp.back() * e.Z_U.entries());
            }
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    const CMatrix r = xp[static_cast<std::size_t>(a)] * zp[static_cast<std::size_t>(b)] -
                                      omega(d, -a * b) * zp[static_cast<std::size_t>(b)] *
                                          xp[static_cast<std::size_t>(a)];
                    worst = std::max(worst, r.cwiseAbs().maxCoeff());
                }
            }
        }
    }
    v.require(worst <= 1e-9, "max residual " + fmt("%.2e", worst) + " <= 1e-9 over " +
                                 std::to_string(encodings) + " encodings, d=3..31");
    return v;
}

// Criterion 2: sphere normalization, traciality and rotation covariance.
Verdict stratonovich_weyl() {
    Verdict v;
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double norm_worst = 0.0, trac_worst = 0.0;
    for (int N = 0; N <= 20; ++N) {
        const auto k = build_kernel(N);
        CVector psi(N + 1);
        for (int i = 0; i <= N; ++i) psi(i) = Complex(g(rng), g(rng));
        const auto grid = wigner_sphere(DensityMatrix::pure(SSRCState::normalized(N, psi)), k);
        norm_worst = std::max(norm_worst, std::abs(grid.integral() - 1.0));
        CMatrix a(N + 1, N + 1), b(N + 1, N + 1);
        for (int i = 0; i <= N; ++i) {
            for (int j = 0; j <= N; ++j) {
                a(i, j) = Complex(g(rng), g(rng));
                b(i, j) = Complex(g(rng), g(rng));
            }
        }
        a = 0.5 * (a + a.adjoint()).eval();
        b = 0.5 * (b + b.adjoint()).eval();
        const auto wa = wigner_sphere_operator(a, k, grid.thetas, grid.phis);
        const auto wb = wigner_sphere_operator(b, k, grid.thetas, grid.phis);
        const Complex lhs =
            grid.measure * (grid.weights.cast<Complex>().array() * wa.array() * wb.array()).sum();
        const Complex rhs = (a * b).trace();
        trac_worst = std::max(trac_worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    v.require(norm_worst <= 1e-6, "normalization " + fmt("%.2e", norm_worst) + " <= 1e-6 (N<=20)");
    v.require(trac_worst <= 1e-6, "traciality " + fmt("%.2e", trac_worst) + " <= 1e-6 (N<=20)");

    const int N = 10;
    const auto k = build_kernel(N);
    const auto s = schwinger_operators(N);
    const CMatrix J[3] = {s.Jx.entries(), s.Jy.entries(), s.Jz.entries()};
    const double jn = N * (N + 1.0) * (N + 2.0) / 12.0;
    const auto psi = random_pure(N, 99);
    double cov_worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto R = rotation(N, kPi * u(rng), 2 * kPi * u(rng)) * expi_hermitian(s.Jx, 2 * kPi * u(rng));
        Eigen::Matrix3d O;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                O(i, j) = (J[i] * R.entries() * J[j] * R.entries().adjoint()).trace().real() / jn;
            }
        }
        const double th = kPi * u(rng), ph = 2 * kPi * u(rng);
        const auto n = kernel_direction(k.orientation, th, ph);
        const Eigen::Vector3d m = O.transpose() * Eigen::Vector3d(n[0], n[1], n[2]);
        const auto back = kernel_angles(k.orientation, {m(0), m(1), m(2)});
        const double lhs = wigner_sphere_at(DensityMatrix::pure(SSRCState(N, R.apply(psi.coeffs()))), k, th, ph);
        const double rhs = wigner_sphere_at(DensityMatrix::pure(psi), k, back[0], back[1]);
        cov_worst = std::max(cov_worst, std::abs(lhs - rhs));
    }
    v.require(cov_worst <= 1e-6, "covariance " + fmt("%.2e", cov_worst) + " <= 1e-6 (20 rotations, N=10)");
    return v;
}

// Criterion 3: discrete Hudson.
Verdict discrete_hudson() {
    Verdict v;
    for (int d : {3, 5, 7}) {
        const auto pps = weyl_operators(d);
        double basis = 0.0;
        for (int j = 0; j < d; ++j) {
            basis = std::max(basis, discrete_negativity(wigner_discrete(QuditState::basis(d, j), pps)));
            basis = std::max(basis, discrete_negativity(wigner_discrete(QuditState::fourier_basis(d, j), pps)));
        }
        const auto scan = clifford_positivity_scan(d, {"X", "Z", "F", "P"}, 4);
        CVector w(d);
        for (int j = 0; j < d; ++j) w(j) = std::polar(1.0, kPi * j * j * j / 7.0 + 0.3 * j);
        w.normalize();
        const double witness = discrete_negativity(wigner_discrete(QuditState(d, w), pps));
        const std::string tag = "d=" + std::to_string(d);
        v.require(basis <= 1e-10 && scan.max_negativity <= 1e-10 && scan.violations.empty(),
                  tag + " stabilizer max " + fmt("%.1e", std::max(basis, scan.max_negativity)) + " over " +
                      std::to_string(scan.words) + " words");
        v.require(witness > 1e-3, tag + " witness " + fmt("%.3f", witness));
    }
    return v;
}

// Criterion 4: planar Hudson sanity.
Verdict planar_hudson() {
    Verdict v;
    const double vac = plane_negativity(wigner_plane(TruncatedModeState::fock(20, 0)));
    const double coh = plane_negativity(wigner_plane(TruncatedModeState::coherent(40, 1.0)));
    const double sq = plane_negativity(wigner_plane(TruncatedModeState::squeezed_vacuum(40, 0.4)));
    v.require(std::max({vac, coh, sq}) <= 1e-6,
              "gaussian max " + fmt("%.1e", std::max({vac, coh, sq})) + " <= 1e-6");
    for (int n : {1, 2}) {
        const auto st = TruncatedModeState::fock(20, n);
        // plane_negativity is already divided by Z_W.
        const double coarse = plane_negativity(wigner_plane(st));
        const double fine = plane_negativity(wigner_plane(st, {401, 401, 0.0}));
        const double drift = std::abs(fine - coarse) / fine;
        v.require(coarse > 0.01 && drift <= 0.1, "fock " + std::to_string(n) + " " + fmt("%.4f", coarse) +
                                                     " (refined " + fmt("%.4f", fine) + ")");
    }
    return v;
}

// Criterion 5: convergence experiments and the basis-change formula.
Verdict convergence() {
    Verdict v;
    const std::vector<int> Ns{100, 400, 1600};
    for (auto e : {Experiment::CoherentLimit, Experiment::RotationDisplacement, Experiment::XxDisplacement,
                   Experiment::PeggBarnett}) {
        const auto rs = run_sweep(e, Ns, default_params(e));
        bool ok = !rs.empty();
        std::string errs;
        for (const auto &r : rs) {
            ok = ok && !r.failed && r.monotone.value_or(false);
            errs += (errs.empty() ? "" : ",") + fmt("%.2e", r.error);
        }
        if (e == Experiment::PeggBarnett) {
            double gap = 0.0;
            for (const auto &r : rs) {
                if (r.failed) continue;
                const auto st = family_state(r.N, Complex(r.params.at("alpha"), 0.0));
                gap = std::max(gap, std::abs(r.error - st.mass_above(static_cast<int>(r.params.at("cutoff")))));
            }
            v.require(gap <= 1e-10, "pegg-barnett tail gap " + fmt("%.1e", gap));
        }
        v.require(ok, to_string(e) + " [" + errs + "]");
    }
    double worst = 0.0;
    for (int N = 1; N <= 30; ++N) {
        const auto eig = hermitian_eig(schwinger_operators(N).Jx);
        for (int n = 0; n <= N; ++n) {
            // basis_change_formula(N, n) has Jx eigenvalue (2n - N)/2, the
            // n-th in ascending order.
            worst = std::max(worst, phase_aligned_max_diff(CMatrix(basis_change_formula(N, n)),
                                                           CMatrix(eig.eigenvectors.entries().col(n))));
        }
    }
    v.require(worst <= 1e-9, "basis change vs diagonalization " + fmt("%.1e", worst) + " (N<=30)");
    return v;
}

// Criterion 6.
Verdict binomial_width() {
    Verdict v;
    const double w = binomial_width_check(400);
    v.require(w >= 0.95 && w <= 0.96, "fraction(400) = " + fmt("%.4f", w) + " in [0.95, 0.96]");
    return v;
}

// Criterion 7: encoded basis lattices do not depend on U.
Verdict encoding_equivalence() {
    Verdict v;
    double worst = 0.0;
    int transforms = 0;
    for (int d : {3, 5, 7, 9}) {
        const int N = d - 1;
        std::vector<OperatorMatrix> Us{encoding_preset("identity", N), encoding_preset("rot_pi_y", N),
                                       encoding_preset("theta_z_half", N)};
        std::mt19937_64 rng(static_cast<std::uint64_t>(d));
        std::normal_distribution<double> g;
        for (int r = 0; r < 3; ++r) {
            CMatrix h(d, d);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) h(i, j) = Complex(g(rng), g(rng));
            }
            Us.push_back(expi_hermitian(OperatorMatrix(0.5 * (h + h.adjoint()), Tri::Yes), 1.0));
        }
        const auto ref = build_encoding(N, OperatorMatrix::identity(d), Us[0]);
        for (const auto &U : Us) {
            ++transforms;
            const auto enc = build_encoding(N, OperatorMatrix::identity(d), U);
            for (int j = 0; j < d; ++j) {
                const auto a = encoded_wigner(enc, enc.basis[static_cast<std::size_t>(enc.index_of_label(j))]);
                const auto b = encoded_wigner(ref, ref.basis[static_cast<std::size_t>(ref.index_of_label(j))]);
                worst = std::max(worst, (a.values - b.values).cwiseAbs().maxCoeff());
            }
        }
    }
    v.require(worst <= 1e-12, "max lattice difference " + fmt("%.1e", worst) + " over " +
                                  std::to_string(transforms) + " code transforms");
    return v;
}

// Criterion 8: logical Fourier vs quarter rotation.
Verdict logical_fourier() {
    Verdict v;
    for (const char *label : {"vacuum", "coherent(1)"}) {
        std::vector<double> ds;
        for (int N : {16, 64, 256}) {
            const SSRCState psi = std::strcmp(label, "vacuum") == 0 ? fock_state(N, 0) : coherent_truncated(N, 1.0);
            ds.push_back(logical_fourier_defect(N, psi));
        }
        const bool dec = ds[1] < ds[0] && ds[2] < ds[1];
        v.require(dec, std::string(label) + " defects " + fmt("%.4f", ds[0]) + ", " + fmt("%.4f", ds[1]) + ", " +
                           fmt("%.4f", ds[2]) + " strictly decreasing");
    }
    return v;
}

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> all{
        {1, "heisenberg-weyl", 30, heisenberg_weyl},
        {2, "sphere-stratonovich-weyl", 60, stratonovich_weyl},
        {3, "discrete-hudson", 60, discrete_hudson},
        {4, "planar-hudson", 60, planar_hudson},
        {5, "convergence", 300, convergence},
        {6, "binomial-width", 1, binomial_width},
        {7, "encoding-equivalence", 30, encoding_equivalence},
        {8, "logical-fourier-rotation", 120, logical_fourier},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion k]\n", argv[0]);
            return 2;
        }
    }
    bool all_pass = true;
    for (const auto &c : all) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = v.pass && in_time;
        all_pass = all_pass && pass;
        std::printf("criterion %d %-26s %s  %s; %.2f s <= %.0f s%s\n", c.id, c.name, pass ? "PASS" : "FAIL",
                    v.detail.c_str(), secs, c.budget_s, in_time ? "" : " [fail]");
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
