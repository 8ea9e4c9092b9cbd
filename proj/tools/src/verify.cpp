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
#include <cmath>
#include <random>

#include "context.hpp"
#include "hwps/cvlimit.hpp"
#include "hwps/encoding.hpp"
#include "hwps/error.hpp"
#include "hwps/wigner_plane.hpp"

namespace hwps::cli {

namespace {

class Report {
  public:
    /// Passes when value <= bound.
    void at_most(const std::string &name, double value, double bound) {
        add(name, value, "<=", bound, value <= bound);
    }
    /// Passes when value > bound.
    void above(const std::string &name, double value, double bound) {
        add(name, value, ">", bound, value > bound);
    }
    void flag(const std::string &name, bool ok) { add(name, ok ? 1.0 : 0.0, "==", 1.0, ok); }

    bool pass() const { return failures_ == 0; }
    Json json() const { return checks_; }
    int failures() const { return failures_; }

  private:
    void add(const std::string &name, double value, const char *op, double bound, bool ok) {
        checks_.push_back({{"name", name}, {"value", value}, {"op", op}, {"bound", bound}, {"pass", ok}});
        if (!ok) ++failures_;
    }
    Json checks_ = Json::array();
    int failures_ = 0;
};

std::vector<int> odd_dims(const std::vector<int> &given, std::vector<int> fallback) {
    return given.empty() ? fallback : given;
}

void sw_axioms(const Context &ctx, const VerifyOptions &o, Report &rep) {
    std::mt19937_64 rng(ctx.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> g;
    const int top = o.quick ? std::min(o.N, 6) : o.N;
    for (int N = 0; N <= top; ++N) {
        const std::string tag = "N=" + std::to_string(N);
        const auto k = build_kernel(N, ctx.conventions.prefactor, ctx.conventions.orientation);
        rep.at_most("kernel_trace " + tag, k.trace_residual, 1e-8);
        rep.at_most("kernel_orthonormality " + tag, k.orthonormality_residual, 1e-8);
        rep.at_most("delta0_hermiticity " + tag, k.delta0.hermiticity_defect(), 1e-10);

        const auto psi = random_pure(N, ctx.seed + static_cast<std::uint64_t>(N));
        const auto grid = wigner_sphere(DensityMatrix::pure(psi), k);
        rep.at_most("normalization " + tag, std::abs(grid.integral() - 1.0), 1e-6);

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
        rep.at_most("traciality " + tag, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 1e-6);
    }

    // Covariance at the largest N on random rotations.
    const int N = top;
    const auto k = build_kernel(N, ctx.conventions.prefactor, ctx.conventions.orientation);
    const auto psi = random_pure(N, ctx.seed + 1000);
    const auto s = schwinger_operators(N);
    const double norm = N * (N + 1.0) * (N + 2.0) / 12.0;
    double worst = 0.0;
    for (int t = 0; t < 20 && N > 0; ++t) {
        const auto R = rotation(N, kPi * u(rng), 2 * kPi * u(rng)) * expi_hermitian(s.Jx, 2 * kPi * u(rng));
        const CMatrix J[3] = {s.Jx.entries(), s.Jy.entries(), s.Jz.entries()};
        Eigen::Matrix3d O;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                O(i, j) = (J[i] * R.entries() * J[j] * R.entries().adjoint()).trace().real() / norm;
            }
        }
        const double th = kPi * u(rng), ph = 2 * kPi * u(rng);
        const auto n = kernel_direction(k.orientation, th, ph);
        const Eigen::Vector3d m = O.transpose() * Eigen::Vector3d(n[0], n[1], n[2]);
        const auto back = kernel_angles(k.orientation, {m(0), m(1), m(2)});
        const SSRCState rotated(N, R.apply(psi.coeffs()));
        const double lhs = wigner_sphere_at(DensityMatrix::pure(rotated), k, th, ph);
        const double rhs = wigner_sphere_at(DensityMatrix::pure(psi), k, back[0], back[1]);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.at_most("rotation_covariance N=" + std::to_string(N), worst, 1e-6);
}

void hw_relations(const VerifyOptions &o, Report &rep) {
    std::vector<int> fallback;
    for (int d = 3; d <= (o.quick ? 11 : 31); d += 2) fallback.push_back(d);
    const char *names[] = {"identity", "rot_pi_y", "theta_z_half"};
    for (int d : odd_dims(o.d, fallback)) {
        if (d < 3 || d % 2 == 0) throw EvenDimension("hw-relations needs odd d >= 3, got " + std::to_string(d));
        for (const char *K : names) {
            for (const char *U : names) {
                const auto enc = build_encoding(d - 1, K, U);
                const std::string tag = "d=" + std::to_string(d) + " K=" + K + " U=" + U;
                rep.at_most("hw_defect " + tag, enc.hw_defect, 1e-9);
                rep.at_most("order_defect " + tag, enc.order_defect, 1e-9);
            }
        }
    }
}

void hudson(const Context &ctx, const VerifyOptions &o, Report &rep) {
    for (int d : odd_dims(o.d, {3, 5, 7})) {
        const std::string tag = "d=" + std::to_string(d);
        const auto pps = weyl_operators(d, ctx.conventions.weyl);
        double fourier = 0.0;
        for (int j = 0; j < d; ++j) {
            fourier = std::max(fourier, discrete_negativity(wigner_discrete(QuditState::fourier_basis(d, j), pps)));
        }
        rep.at_most("fourier_basis_negativity " + tag, fourier, 1e-10);
        const auto scan = clifford_positivity_scan(d, {"X", "Z", "F", "P"}, o.quick ? 2 : o.max_length,
                                                   ctx.conventions.weyl);
        rep.at_most("clifford_words_negativity " + tag, scan.max_negativity, 1e-10);
        CVector w(d);
        for (int j = 0; j < d; ++j) w(j) = std::polar(1.0, kPi * j * j * j / 7.0 + 0.3 * j);
        w.normalize();
        rep.above("witness_negativity " + tag, discrete_negativity(wigner_discrete(QuditState(d, w), pps)), 1e-3);
    }
    const PlaneGridSpec spec = o.quick ? PlaneGridSpec{101, 101, 0.0} : PlaneGridSpec{};
    rep.at_most("plane_vacuum", plane_negativity(wigner_plane(TruncatedModeState::fock(20, 0), spec)), 1e-6);
    rep.at_most("plane_coherent",
                plane_negativity(wigner_plane(TruncatedModeState::coherent(40, 1.0), spec)), 1e-6);
    rep.at_most("plane_squeezed",
                plane_negativity(wigner_plane(TruncatedModeState::squeezed_vacuum(40, 0.4), spec)), 1e-6);
    for (int n : {1, 2}) {
        const auto st = TruncatedModeState::fock(20, n);
        const double neg = plane_negativity(wigner_plane(st, spec));
        rep.above("plane_fock_" + std::to_string(n), neg, 0.01);
        if (!o.quick) {
            const double fine = plane_negativity(wigner_plane(st, {401, 401, 0.0}));
            rep.at_most("plane_fock_" + std::to_string(n) + "_refinement", std::abs(fine - neg) / fine, 0.1);
        }
    }
}

void appendices(const Context &ctx, const VerifyOptions &o, Report &rep) {
    const std::vector<int> Ns = o.quick ? std::vector<int>{100, 400} : std::vector<int>{100, 400, 1600};
    for (auto e : {Experiment::CoherentLimit, Experiment::RotationDisplacement, Experiment::XxDisplacement,
                   Experiment::PeggBarnett}) {
        const auto rs = run_sweep(e, Ns, default_params(e), ctx.conventions.kappa);
        bool failed = false, monotone = true;
        for (const auto &r : rs) {
            failed = failed || r.failed;
            monotone = monotone && r.monotone.value_or(false);
            if (e == Experiment::PeggBarnett && !r.failed) {
                const auto st = family_state(r.N, Complex(r.params.at("alpha"), 0.0));
                rep.at_most("pegg_barnett_tail N=" + std::to_string(r.N),
                            std::abs(r.error - st.mass_above(static_cast<int>(r.params.at("cutoff")))), 1e-10);
            }
        }
        rep.flag(to_string(e) + " no_failures", !failed);
        rep.flag(to_string(e) + " monotone", monotone);
    }
    double worst = 0.0;
    for (int N = 1; N <= (o.quick ? 12 : 30); ++N) {
        const CMatrix V = jx_eigenbasis(N).entries();
        for (int n = 0; n <= N; ++n) {
            worst = std::max(worst, phase_aligned_max_diff(CMatrix(basis_change_formula(N, n)),
                                                           CMatrix(V.col(N - n))));
        }
    }
    rep.at_most("basis_change_vs_diagonalization", worst, 1e-9);
    const double w = binomial_width_check(400);
    rep.flag("binomial_width_400_in_[0.95,0.96]", w >= 0.95 && w <= 0.96);
}

}  // namespace

int cmd_verify(const Context &ctx, const VerifyOptions &o) {
    Report rep;
    if (o.suite == "sw-axioms") {
        if (o.N < 0) throw InvalidArgument("--N must be non-negative");
        sw_axioms(ctx, o, rep);
    } else if (o.suite == "hw-relations") {
        hw_relations(o, rep);
    } else if (o.suite == "hudson") {
        hudson(ctx, o, rep);
    } else if (o.suite == "appendices") {
        appendices(ctx, o, rep);
    } else {
        throw ParseError("unknown suite '" + o.suite + "'");
    }
    Json r;
    r["manifest"] = ctx.manifest_json();
    r["suite"] = o.suite;
    r["pass"] = rep.pass();
    r["failures"] = rep.failures();
    r["checks"] = rep.json();
    ctx.emit(o.out, r.dump(2) + "\n");
    if (!o.out.empty() && o.out != "-") {
        *ctx.out << o.suite << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.failures()
                 << " failing checks)\n";
    }
    return rep.pass() ? kOk : kVerificationFailed;
}

}  // namespace hwps::cli
