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

#include "hwps/fock.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hwps/encoding.hpp"
#include "hwps/error.hpp"

namespace hwps {

namespace {

void require_nonnegative(int N, const char *what) {
    if (N < 0) throw InvalidArgument(std::string(what) + ": N must be non-negative");
}

// Sub-diagonal of a'b in the n-ordered basis: <n+1| a'b |n>.
double ladder(int N, int n) { return std::sqrt((n + 1.0) * (N - n)); }

template <class T>
T pairwise_sum_big(const std::vector<T> &v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        T s = 0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum_big(v, lo, mid) + pairwise_sum_big(v, mid, hi);
}

}  // namespace

SSRCState::SSRCState(int N, CVector coeffs, double norm_tolerance)
    : N_(N), coeffs_(std::move(coeffs)) {
    require_nonnegative(N, "SSRCState");
    if (coeffs_.size() != N + 1) {
        throw InvalidState("SSRCState with N=" + std::to_string(N) + " needs " +
                           std::to_string(N + 1) + " coefficients, got " +
                           std::to_string(coeffs_.size()));
    }
    const double norm2 = coeffs_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > norm_tolerance) {
        throw InvalidState("SSRCState not normalized: sum |c_n|^2 = " + std::to_string(norm2));
    }
}

SSRCState SSRCState::normalized(int N, CVector coeffs) {
    const double norm = coeffs.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidState("cannot normalize zero vector");
    coeffs /= norm;
    return SSRCState(N, std::move(coeffs));
}

DensityMatrix::DensityMatrix(int N, OperatorMatrix rho) : N_(N), rho_(std::move(rho)) {
    require_nonnegative(N, "DensityMatrix");
    if (rho_.dim() != N + 1) {
        throw DimensionMismatch("density matrix of dim " + std::to_string(rho_.dim()) +
                                " for N=" + std::to_string(N));
    }
    const auto eig = hermitian_eig(rho_);  // throws NonHermitianInput
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > 1e-10 || std::abs(rho_.trace().imag()) > 1e-10) {
        throw InvalidState("density matrix trace " + std::to_string(tr));
    }
    if (eig.eigenvalues.size() > 0 && eig.eigenvalues.minCoeff() < -1e-9) {
        throw InvalidState("density matrix has eigenvalue " +
                           std::to_string(eig.eigenvalues.minCoeff()));
    }
    rho_ = OperatorMatrix(rho_.entries(), Tri::Yes, Tri::Unknown);
}

DensityMatrix DensityMatrix::pure(const SSRCState &psi) {
    CMatrix rho = psi.coeffs() * psi.coeffs().adjoint();
    return DensityMatrix(psi.N(), OperatorMatrix(std::move(rho)));
}

DensityMatrix DensityMatrix::maximally_mixed(int N) {
    require_nonnegative(N, "maximally_mixed");
    CMatrix rho = CMatrix::Identity(N + 1, N + 1) / static_cast<double>(N + 1);
    return DensityMatrix(N, OperatorMatrix(std::move(rho)));
}

void ModeBasisLabel::validate() const {
    if (kind == ModeBasis::KTransformed) {
        if (!K) throw InvalidArgument("K-transformed basis label without K");
        if (K->unitarity_defect() > tol::kUnitary) {
            throw NonUnitaryTransform("basis label K not unitary, defect " +
                                      std::to_string(K->unitarity_defect()));
        }
    } else if (K) {
        throw InvalidArgument("basis label carries K but kind is " + to_string(kind));
    }
}

std::string to_string(ModeBasis b) {
    switch (b) {
    case ModeBasis::Z:
        return "z";
    case ModeBasis::X:
        return "x";
    case ModeBasis::KTransformed:
        return "k";
    }
    return "z";
}

ModeBasis mode_basis_from_string(const std::string &s) {
    if (s == "z" || s == "z-basis") return ModeBasis::Z;
    if (s == "x" || s == "x-basis") return ModeBasis::X;
    if (s == "k" || s == "K-transformed") return ModeBasis::KTransformed;
    throw ParseError("unknown basis label '" + s + "'");
}

SchwingerOperators schwinger_operators(int N) {
    require_nonnegative(N, "schwinger_operators");
    const int d = N + 1;
    CMatrix ab = CMatrix::Zero(d, d);  // a'b
    for (int n = 0; n < N; ++n) ab(n + 1, n) = ladder(N, n);
    CMatrix jz = CMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) jz(n, n) = 0.5 * (N - 2 * n);
    const Complex half_i(0.0, 0.5);
    CMatrix jx = 0.5 * (ab + ab.adjoint());
    CMatrix jy = half_i * (ab - ab.adjoint());
    return {OperatorMatrix(std::move(jx), Tri::Yes, Tri::Unknown),
            OperatorMatrix(std::move(jy), Tri::Yes, Tri::Unknown),
            OperatorMatrix(std::move(jz), Tri::Yes, Tri::Unknown)};
}

JxSpectrum::JxSpectrum(int N) : N_(N) {
    require_nonnegative(N, "JxSpectrum");
    std::vector<double> diag(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<double> off(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) off[static_cast<std::size_t>(n)] = 0.5 * ladder(N, n);
    eig_ = symmetric_tridiagonal_eig(diag, off);
    // The spectrum is known exactly: -N/2, ..., N/2.
    for (int k = 0; k <= N; ++k) {
        const double exact = -0.5 * N + k;
        if (std::abs(eig_.eigenvalues(k) - exact) > tol::kSpectral * (N + 1)) {
            throw ConventionCheckFailed("Jx spectrum off by " +
                                        std::to_string(eig_.eigenvalues(k) - exact));
        }
        eig_.eigenvalues(k) = exact;
    }
}

CVector JxSpectrum::expi_jx(double t, const CVector &v) const {
    return expi_tridiagonal_apply(eig_, t, v);
}

CVector JxSpectrum::expi_jy(double t, const CVector &v) const {
    if (v.size() != N_ + 1) throw DimensionMismatch("expi_jy length mismatch");
    CVector w = v;
    for (int n = 0; n <= N_; ++n) w(n) *= std::polar(1.0, 0.25 * kPi * (N_ - 2 * n));
    w = expi_jx(t, w);
    for (int n = 0; n <= N_; ++n) w(n) *= std::polar(1.0, -0.25 * kPi * (N_ - 2 * n));
    return w;
}

RMatrix JxSpectrum::expi_jy_dense(double t) const {
    const int d = N_ + 1;
    const RMatrix &q = eig_.eigenvectors;
    RVector c(d), s(d);
    for (int k = 0; k < d; ++k) {
        c(k) = std::cos(t * eig_.eigenvalues(k));
        s(k) = std::sin(t * eig_.eigenvalues(k));
    }
    const RMatrix cm = q * c.asDiagonal() * q.transpose();
    const RMatrix sm = q * s.asDiagonal() * q.transpose();
    // Entry (m, n) is i^{m-n} (C + iS)_{mn}, which is real.
    RMatrix out(d, d);
    for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
            switch (mod(m - n, 4)) {
            case 0:
                out(m, n) = cm(m, n);
                break;
            case 1:
                out(m, n) = -sm(m, n);
                break;
            case 2:
                out(m, n) = -cm(m, n);
                break;
            default:
                out(m, n) = sm(m, n);
                break;
            }
        }
    }
    return out;
}

OperatorMatrix rotation(int N, double theta, double phi) {
    require_nonnegative(N, "rotation");
    const RMatrix ry = JxSpectrum(N).expi_jy_dense(-theta);
    CMatrix out = ry.cast<Complex>();
    for (int n = 0; n <= N; ++n) out.row(n) *= std::polar(1.0, -phi * 0.5 * (N - 2 * n));
    return OperatorMatrix(std::move(out), Tri::Unknown, Tri::Yes);
}

SSRCState spin_coherent(int N, double theta, double phi) {
    require_nonnegative(N, "spin_coherent");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const double log_c = std::log(std::abs(c));
    const double log_s = std::log(std::abs(s));
    CVector out(N + 1);
    for (int n = 0; n <= N; ++n) {
        const int pc = N - n;
        // 0 * log 0 counts as 0 so that |0>_a|N>_b and |N>_a|0>_b come out exact.
        double log_mag = 0.5 * log_binomial(N, n);
        if (pc > 0) log_mag += pc * log_c;
        if (n > 0) log_mag += n * log_s;
        double sign = 1.0;
        if (c < 0.0 && pc % 2 == 1) sign = -sign;
        if (s < 0.0 && n % 2 == 1) sign = -sign;
        out(n) = std::isfinite(log_mag) ? sign * std::exp(log_mag) * std::polar(1.0, n * phi)
                                        : Complex(0.0);
    }
    // lgamma rounding leaves ~1e-11 norm drift at N ~ 5000; renormalize.
    return SSRCState::normalized(N, std::move(out));
}

RelativePhaseOperator relative_phase_Z(int N) {
    require_nonnegative(N, "relative_phase_Z");
    const int d = N + 1;
    CVector diag(d);
    for (int n = 0; n < d; ++n) diag(n) = std::polar(1.0, 2.0 * kPi / d * 0.5 * (N - 2 * n));
    return {OperatorMatrix::diagonal(diag, Tri::Unknown, Tri::Yes), N % 2 == 1};
}

RelativePhaseOperator relative_phase_X(int N) {
    const auto z = relative_phase_Z(N);
    const OperatorMatrix f = fourier_operator(N);
    return {f.adjoint() * z.op * f, z.odd_n_requires_care};
}

OperatorMatrix relative_phase_shift(int N) {
    require_nonnegative(N, "relative_phase_shift");
    const int d = N + 1;
    CMatrix out = CMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) out((n + 1) % d, n) = 1.0;
    return OperatorMatrix(std::move(out), Tri::Unknown, Tri::Yes);
}

OperatorMatrix jx_eigenbasis(int N) {
    require_nonnegative(N, "jx_eigenbasis");
    RMatrix v = JxSpectrum(N).expi_jy_dense(-0.5 * kPi);
    for (int n = 1; n <= N; n += 2) v.col(n) = -v.col(n);
    return OperatorMatrix(v.cast<Complex>(), Tri::Unknown, Tri::Yes);
}

CVector basis_change_formula(int N, int n) {
    if (N < 0 || n < 0 || n > N) {
        throw OutOfRange("basis_change_formula needs 0 <= n <= N, got n=" + std::to_string(n) +
                         ", N=" + std::to_string(N));
    }
    if (N > kBasisChangeMaxN) {
        throw OverflowRisk("basis_change_formula: N=" + std::to_string(N) +
                           " exceeds the log-space ceiling " + std::to_string(kBasisChangeMaxN));
    }
    // The double sum cancels by up to 43 decimal orders at N = 300, so each
    // term is formed and accumulated in 100-digit binary floating point.
    using Big = boost::multiprecision::cpp_bin_float_100;
    std::vector<Big> fact(static_cast<std::size_t>(N) + 1);
    fact[0] = 1;
    for (int i = 1; i <= N; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    std::vector<Big> sqrt_fact(fact.size());
    for (std::size_t i = 0; i < fact.size(); ++i) sqrt_fact[i] = boost::multiprecision::sqrt(fact[i]);
    auto f = [&](int i) -> const Big & { return fact[static_cast<std::size_t>(i)]; };
    auto sf = [&](int i) -> const Big & { return sqrt_fact[static_cast<std::size_t>(i)]; };
    const Big pre = sf(N - n) * sf(n) / boost::multiprecision::pow(Big(2), Big(N) / 2);
    // Output component index is the a-mode count N-m-k.
    std::vector<std::vector<Big>> terms(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N - n; ++m) {
        for (int k = 0; k <= n; ++k) {
            const int na = N - m - k;
            Big t = pre * sf(na) * sf(k + m) / (f(m) * f(N - n - m) * f(k) * f(n - k));
            if ((N - n - m) % 2 != 0) t = -t;
            terms[static_cast<std::size_t>(na)].push_back(std::move(t));
        }
    }
    CVector out = CVector::Zero(N + 1);
    for (int na = 0; na <= N; ++na) {
        out(na) = static_cast<double>(pairwise_sum_big(terms[static_cast<std::size_t>(na)], 0,
                                                       terms[static_cast<std::size_t>(na)].size()));
    }
    const double norm = out.norm();
    if (std::abs(norm - 1.0) > 1e-9) {
        throw ConventionCheckFailed("basis_change_formula lost normalization: " +
                                    std::to_string(norm));
    }
    return out;
}

double binomial_width_check(int N) {
    if (N < 4 || N % 2 != 0) throw InvalidArgument("binomial_width_check needs even N >= 4");
    const double centre = 0.5 * N;
    const double half_width = std::sqrt(static_cast<double>(N));
    const int lo = static_cast<int>(std::ceil(centre - half_width - 1e-12));
    const int hi = static_cast<int>(std::floor(centre + half_width + 1e-12));
    std::vector<double> mass;
    for (int m = std::max(lo, 0); m <= std::min(hi, N); ++m) {
        mass.push_back(std::exp(log_binomial(N, m) - N * std::log(2.0)));
    }
    return pairwise_sum(mass);
}

CVIndicator cv_limit_indicator(const SSRCState &state, double kappa) {
    if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive");
    std::vector<double> terms(static_cast<std::size_t>(state.dim()));
    for (int n = 0; n < state.dim(); ++n) {
        terms[static_cast<std::size_t>(n)] = n * std::norm(state[n]);
    }
    CVIndicator out;
    out.mean_na = pairwise_sum(terms);
    out.threshold = kappa * std::sqrt(static_cast<double>(state.N()));
    out.is_cv = out.mean_na <= out.threshold;
    return out;
}

SSRCState fock_state(int N, int n) {
    require_nonnegative(N, "fock_state");
    if (n < 0 || n > N) throw OutOfRange("fock_state index " + std::to_string(n));
    CVector c = CVector::Zero(N + 1);
    c(n) = 1.0;
    return SSRCState(N, std::move(c));
}

SSRCState coherent_truncated(int N, Complex alpha) {
    require_nonnegative(N, "coherent_truncated");
    CVector c(N + 1);
    const double r = std::abs(alpha);
    const double arg = std::arg(alpha);
    const double log_r = std::log(r);
    for (int k = 0; k <= N; ++k) {
        if (r == 0.0) {
            c(k) = k == 0 ? 1.0 : 0.0;
            continue;
        }
        const double log_mag = -0.5 * r * r + k * log_r - 0.5 * log_factorial(k);
        c(k) = std::exp(log_mag) * std::polar(1.0, k * arg);
    }
    return SSRCState::normalized(N, std::move(c));
}

SSRCState random_pure(int N, std::uint64_t seed) {
    require_nonnegative(N, "random_pure");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector c(N + 1);
    for (int n = 0; n <= N; ++n) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c(n) = Complex(re, im);
    }
    return SSRCState::normalized(N, std::move(c));
}

}  // namespace hwps
