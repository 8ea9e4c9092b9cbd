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

#include "hwps/cvlimit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "hwps/error.hpp"
#include "hwps/fock.hpp"

namespace hwps {

std::string to_string(Experiment e) {
    switch (e) {
    case Experiment::CoherentLimit:
        return "coherent-limit";
    case Experiment::RotationDisplacement:
        return "rotation-displacement";
    case Experiment::XxDisplacement:
        return "xx-displacement";
    case Experiment::PeggBarnett:
        return "pegg-barnett";
    }
    return "coherent-limit";
}

std::string to_string(ErrorMetric m) {
    switch (m) {
    case ErrorMetric::VectorNormDeficit:
        return "vector-2-norm";
    case ErrorMetric::SquaredNormDeficit:
        return "squared-2-norm";
    case ErrorMetric::OneMinusFidelity:
        return "1-fidelity";
    }
    return "vector-2-norm";
}

Experiment experiment_from_string(const std::string &s) {
    for (Experiment e : {Experiment::CoherentLimit, Experiment::RotationDisplacement,
                         Experiment::XxDisplacement, Experiment::PeggBarnett}) {
        if (s == to_string(e)) return e;
    }
    throw ParseError("unknown experiment '" + s + "'");
}

namespace {

int isqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::string family_name(const TruncatedModeState &s) {
    const CVector &c = s.coeffs();
    if (std::abs(std::abs(c(0)) - 1.0) < 1e-15) return "vacuum";
    return "custom";
}

// e^{i t x} psi on an (M+1)-level truncation with x = (a + a')/2; with
// `momentum` set, e^{i t p} = P e^{i t x} P^dagger, P = diag(i^n).
CVector single_mode_kick(const CVector &psi, int M, double t, bool momentum) {
    std::vector<double> diag(static_cast<std::size_t>(M) + 1, 0.0);
    std::vector<double> off(static_cast<std::size_t>(M));
    for (int n = 0; n < M; ++n) off[static_cast<std::size_t>(n)] = 0.5 * std::sqrt(n + 1.0);
    const TridiagonalEig eig = symmetric_tridiagonal_eig(diag, off);
    CVector v = CVector::Zero(M + 1);
    v.head(std::min<Eigen::Index>(psi.size(), M + 1)) =
        psi.head(std::min<Eigen::Index>(psi.size(), M + 1));
    auto ipow = [](int n) {
        static const Complex table[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
        return table[n % 4];
    };
    if (momentum) {
        for (int n = 0; n <= M; ++n) v(n) *= std::conj(ipow(n));
    }
    v = expi_tridiagonal_apply(eig, t, v);
    if (momentum) {
        for (int n = 0; n <= M; ++n) v(n) *= ipow(n);
    }
    return v;
}

CVector embed(const CVector &v, int N) {
    CVector out = CVector::Zero(N + 1);
    const Eigen::Index keep = std::min<Eigen::Index>(v.size(), N + 1);
    out.head(keep) = v.head(keep);
    return out;
}

void require_embeddable(int N, const TruncatedModeState &state) {
    if (state.tail_bound() > 1e-10) {
        throw OutsideCVRegime("state tail bound " + std::to_string(state.tail_bound()) +
                              " exceeds 1e-10");
    }
    if (state.n_max() > N && state.mass_above(N) > 1e-15) {
        throw OutsideCVRegime("state has weight above n = N = " + std::to_string(N));
    }
}

// The margin keeps the truncation edge of the single-mode kick far above
// the state's support.
int kick_levels(int N, const TruncatedModeState &state) {
    return std::min(N, state.n_max() + 80);
}

}  // namespace

PeggBarnettOperator::PeggBarnettOperator(int N) : N_(N), cutoff_(N >= 0 ? isqrt(N) : 0) {
    if (N < 1 || cutoff_ + 1 > N) {
        throw InvalidArgument("Pegg-Barnett operator needs floor(sqrt N) + 1 <= N, N=" +
                              std::to_string(N));
    }
}

CVector PeggBarnettOperator::apply(const CVector &v) const {
    if (v.size() != N_ + 1) throw DimensionMismatch("PeggBarnettOperator::apply length");
    CVector out = CVector::Zero(N_ + 1);
    for (int n = 0; n <= cutoff_; ++n) out(n + 1) = v(n);
    return out;
}

RVector PeggBarnettOperator::gram_diagonal() const {
    RVector g = RVector::Zero(N_ + 1);
    g.head(cutoff_ + 1).setOnes();
    return g;
}

CMatrix PeggBarnettOperator::dense() const {
    CMatrix m = CMatrix::Zero(N_ + 1, N_ + 1);
    for (int n = 0; n <= cutoff_; ++n) m(n + 1, n) = 1.0;
    return m;
}

ConvergenceRecord coherent_limit_error(int N, Complex alpha) {
    if (N < 1) throw InvalidArgument("coherent_limit_error: N must be positive");
    if (std::norm(alpha) >= N) {
        throw AlphaTooLarge("|alpha|^2 = " + std::to_string(std::norm(alpha)) + " >= N = " +
                            std::to_string(N));
    }
    ConvergenceRecord rec;
    rec.experiment = Experiment::CoherentLimit;
    rec.N = N;
    rec.params = {{"alpha", alpha.real()}, {"alpha_im", alpha.imag()}};
    rec.state_family = "spin-coherent";
    rec.metric = ErrorMetric::OneMinusFidelity;
    const double theta = 2.0 * std::acos(std::sqrt(1.0 - std::norm(alpha) / N));
    rec.params["theta"] = theta;
    const SSRCState sc = spin_coherent(N, theta, std::arg(alpha));
    const SSRCState ct = coherent_truncated(N, alpha);
    const double fidelity = std::norm(ct.coeffs().dot(sc.coeffs()));
    rec.error = std::max(0.0, 1.0 - fidelity);
    return rec;
}

ConvergenceRecord rotation_displacement_error(int N, double q, const TruncatedModeState &state) {
    if (N < 1) throw InvalidArgument("rotation_displacement_error: N must be positive");
    if (std::abs(q) > 0.1 * std::sqrt(static_cast<double>(N))) {
        throw OutsideCVRegime("q = " + std::to_string(q) + " exceeds 0.1 sqrt N");
    }
    require_embeddable(N, state);
    ConvergenceRecord rec;
    rec.experiment = Experiment::RotationDisplacement;
    rec.N = N;
    rec.params = {{"q", q}};
    rec.state_family = family_name(state);
    rec.metric = ErrorMetric::VectorNormDeficit;
    const CVector psi = embed(state.coeffs(), N);
    const CVector lhs = JxSpectrum(N).expi_jx(q / std::sqrt(static_cast<double>(N)), psi);
    const int M = kick_levels(N, state);
    const CVector rhs = embed(single_mode_kick(state.coeffs(), M, q, false), N);
    rec.error = phase_aligned_distance(lhs, rhs);
    return rec;
}

ConvergenceRecord xx_displacement_error(int N, const TruncatedModeState &state, double kick_scale,
                                        double kappa) {
    if (N < 1) throw InvalidArgument("xx_displacement_error: N must be positive");
    require_embeddable(N, state);
    const CVector psi = embed(state.coeffs(), N);
    const SSRCState embedded = SSRCState::normalized(N, psi);
    const CVIndicator cv = cv_limit_indicator(embedded, kappa);
    if (!cv.is_cv) {
        throw OutsideCVRegime("<n_a> = " + std::to_string(cv.mean_na) + " exceeds " +
                              std::to_string(cv.threshold));
    }
    ConvergenceRecord rec;
    rec.experiment = Experiment::XxDisplacement;
    rec.N = N;
    rec.params = {{"kick_scale", kick_scale}};
    rec.state_family = family_name(state);
    rec.metric = ErrorMetric::VectorNormDeficit;

    // X_x = V S V^dagger, V = e^{-i Jy pi/2} diag((-1)^n).
    const JxSpectrum spec(N);
    CVector w = spec.expi_jy(0.5 * kPi, psi);
    for (int n = 1; n <= N; n += 2) w(n) = -w(n);
    CVector shifted(N + 1);
    for (int n = 0; n <= N; ++n) shifted((n + 1) % (N + 1)) = w(n);
    for (int n = 1; n <= N; n += 2) shifted(n) = -shifted(n);
    const CVector lhs = spec.expi_jy(-0.5 * kPi, shifted);

    const double c = std::sqrt(kick_scale / N);
    const int M = kick_levels(N, state);
    const CVector rhs = embed(single_mode_kick(state.coeffs(), M, c, true), N);
    rec.error = phase_aligned_distance(lhs, rhs);
    return rec;
}

ConvergenceRecord pegg_barnett_compare(int N, const TruncatedModeState &state, double kappa) {
    const PeggBarnettOperator pb(N);
    require_embeddable(N, state);
    const CVector psi = embed(state.coeffs(), N);
    const CVIndicator cv = cv_limit_indicator(SSRCState::normalized(N, psi), kappa);
    if (!cv.is_cv) {
        throw OutsideCVRegime("<n_a> = " + std::to_string(cv.mean_na) + " exceeds " +
                              std::to_string(cv.threshold));
    }
    ConvergenceRecord rec;
    rec.experiment = Experiment::PeggBarnett;
    rec.N = N;
    rec.state_family = family_name(state);
    rec.metric = ErrorMetric::SquaredNormDeficit;
    const CVector lhs = relative_phase_shift(N).apply(psi);
    const CVector rhs = pb.apply(psi);
    rec.error = (lhs - rhs).squaredNorm();
    const RVector g = pb.gram_diagonal();
    rec.params = {{"cutoff", pb.cutoff()},
                  {"gram_zero_multiplicity", static_cast<double>((g.array() == 0.0).count())}};
    return rec;
}

int family_cutoff(int N, Complex alpha) {
    const double r = std::abs(alpha);
    return std::min(N, static_cast<int>(std::ceil(r * r + 12.0 * r + 40.0)));
}

TruncatedModeState family_state(int N, Complex alpha) {
    const int cut = family_cutoff(N, alpha);
    if (alpha == Complex(0.0)) return TruncatedModeState::fock(cut, 0);
    return TruncatedModeState::coherent(cut, alpha);
}

ParamGrid default_params(Experiment experiment) {
    switch (experiment) {
    case Experiment::RotationDisplacement:
        return {{"alpha", {0.0, 1.0}}, {"q", {0.5}}};
    case Experiment::XxDisplacement:
        return {{"alpha", {0.0, 1.0}}};
    case Experiment::CoherentLimit:
    case Experiment::PeggBarnett:
        break;
    }
    return {{"alpha", {1.0}}};
}

namespace {

std::vector<std::map<std::string, double>> cartesian(const ParamGrid &grid) {
    std::vector<std::map<std::string, double>> points{{}};
    for (const auto &[key, values] : grid) {
        if (values.empty()) return {};
        std::vector<std::map<std::string, double>> next;
        for (const auto &p : points) {
            for (double v : values) {
                auto q = p;
                q[key] = v;
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    return points;
}

double get(const std::map<std::string, double> &p, const char *key, double fallback) {
    const auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

ConvergenceRecord run_point(Experiment e, int N, const std::map<std::string, double> &p,
                            double kappa) {
    const Complex alpha(get(p, "alpha", 1.0), get(p, "alpha_im", 0.0));
    const std::string family = alpha == Complex(0.0) ? "vacuum" : "coherent";
    ConvergenceRecord rec;
    switch (e) {
    case Experiment::CoherentLimit:
        rec = coherent_limit_error(N, alpha);
        break;
    case Experiment::RotationDisplacement:
        rec = rotation_displacement_error(N, get(p, "q", 0.5), family_state(N, alpha));
        break;
    case Experiment::XxDisplacement:
        rec = xx_displacement_error(N, family_state(N, alpha), get(p, "kick_scale", 2.0), kappa);
        break;
    case Experiment::PeggBarnett:
        rec = pegg_barnett_compare(N, family_state(N, alpha), kappa);
        break;
    }
    if (e != Experiment::CoherentLimit) rec.state_family = family;
    return rec;
}

unsigned thread_count() {
    if (const char *env = std::getenv("HWPS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<ConvergenceRecord> run_sweep(Experiment experiment, const std::vector<int> &N_list,
                                         const ParamGrid &grid, double kappa) {
    struct Task {
        std::map<std::string, double> params;
        int N;
    };
    std::vector<Task> tasks;
    for (const auto &p : cartesian(grid)) {
        for (int N : N_list) tasks.push_back({p, N});
    }
    std::vector<ConvergenceRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task &t = tasks[i];
            try {
                out[i] = run_point(experiment, t.N, t.params, kappa);
            } catch (const Error &e) {
                out[i].failed = true;
                out[i].failure = e.category() + ": " + e.what();
            } catch (const std::exception &e) {
                out[i].failed = true;
                out[i].failure = e.what();
            }
            // Sort and group on the requested parameters, not derived ones.
            out[i].experiment = experiment;
            out[i].N = t.N;
            for (const auto &[k, v] : t.params) out[i].params[k] = v;
        }
    };
    const unsigned n_threads = std::min<std::size_t>(thread_count(), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto &th : pool) th.join();

    // Group key: the swept parameters only.
    auto key_of = [&](std::size_t i) { return tasks[i].params; };
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = key_of(a), kb = key_of(b);
        if (ka != kb) return ka < kb;
        return tasks[a].N < tasks[b].N;
    });
    std::vector<ConvergenceRecord> sorted;
    sorted.reserve(out.size());
    for (std::size_t g = 0; g < order.size();) {
        std::size_t h = g;
        while (h < order.size() && key_of(order[h]) == key_of(order[g])) ++h;
        bool monotone = true;
        double prev = 0.0;
        bool have_prev = false;
        for (std::size_t i = g; i < h; ++i) {
            const auto &r = out[order[i]];
            if (r.failed) continue;
            if (have_prev && !(r.error < prev)) monotone = false;
            prev = r.error;
            have_prev = true;
        }
        for (std::size_t i = g; i < h; ++i) {
            sorted.push_back(out[order[i]]);
            sorted.back().monotone = monotone;
        }
        g = h;
    }
    return sorted;
}

}  // namespace hwps
