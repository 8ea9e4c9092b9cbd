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

#include "hwps/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <lapacke.h>

#include "hwps/error.hpp"

namespace hwps {

std::string to_string(Tri t) {
    switch (t) {
    case Tri::No:
        return "no";
    case Tri::Yes:
        return "yes";
    case Tri::Unknown:
        break;
    }
    return "unknown";
}

namespace {

double max_entry(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_of(const CMatrix &m) {
    return max_entry(m - m.adjoint());
}

double unitarity_of(const CMatrix &m) {
    if (m.size() == 0) return 0.0;
    return max_entry(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols()));
}

bool hermitian_within(const CMatrix &m, double tolerance) {
    const double scale = std::max(1.0, max_entry(m));
    return hermiticity_of(m) <= tolerance * scale;
}

}  // namespace

OperatorMatrix::OperatorMatrix(CMatrix entries, Tri hermitian, Tri unitary)
    : entries_(std::move(entries)), hermitian_(hermitian), unitary_(unitary) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionMismatch("operator matrix must be square, got " +
                                std::to_string(entries_.rows()) + "x" +
                                std::to_string(entries_.cols()));
    }
    if (hermitian_ == Tri::Yes && !hermitian_within(entries_, tol::kStructural)) {
        throw NonHermitianInput("claimed hermitian, defect " +
                                std::to_string(hermiticity_of(entries_)));
    }
    if (unitary_ == Tri::Yes && unitarity_of(entries_) > tol::kUnitary) {
        throw NonUnitaryTransform("claimed unitary, defect " +
                                  std::to_string(unitarity_of(entries_)));
    }
}

OperatorMatrix OperatorMatrix::identity(int dim) {
    return OperatorMatrix(CMatrix::Identity(dim, dim), Tri::Yes, Tri::Yes);
}

OperatorMatrix OperatorMatrix::zero(int dim) {
    return OperatorMatrix(CMatrix::Zero(dim, dim), Tri::Yes, dim == 0 ? Tri::Yes : Tri::No);
}

OperatorMatrix OperatorMatrix::diagonal(const CVector &diag, Tri hermitian, Tri unitary) {
    CMatrix m = diag.asDiagonal();
    return OperatorMatrix(std::move(m), hermitian, unitary);
}

OperatorMatrix OperatorMatrix::classified(CMatrix entries) {
    const Tri h = hermitian_within(entries, tol::kStructural) ? Tri::Yes : Tri::No;
    const Tri u = unitarity_of(entries) <= tol::kUnitary ? Tri::Yes : Tri::No;
    return OperatorMatrix(std::move(entries), h, u);
}

double OperatorMatrix::hermiticity_defect() const { return hermiticity_of(entries_); }

double OperatorMatrix::unitarity_defect() const { return unitarity_of(entries_); }

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out;
    out.entries_ = entries_.adjoint();
    out.hermitian_ = hermitian_;
    out.unitary_ = unitary_;
    return out;
}

OperatorMatrix OperatorMatrix::conjugated_by(const OperatorMatrix &g) const {
    if (g.dim() != dim()) {
        throw DimensionMismatch("conjugation by a " + std::to_string(g.dim()) +
                                "-dim operator of a " + std::to_string(dim()) + "-dim one");
    }
    OperatorMatrix out;
    out.entries_ = g.entries_ * entries_ * g.entries_.adjoint();
    if (g.unitary_ == Tri::Yes) {
        out.hermitian_ = hermitian_;
        out.unitary_ = unitary_;
    }
    return out;
}

OperatorMatrix OperatorMatrix::pow(int exponent) const {
    if (exponent < 0) {
        if (unitary_ != Tri::Yes) {
            throw InvalidArgument("negative power of an operator not known to be unitary");
        }
        return adjoint().pow(-exponent);
    }
    CMatrix result = CMatrix::Identity(dim(), dim());
    CMatrix base = entries_;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    OperatorMatrix out;
    out.entries_ = std::move(result);
    out.hermitian_ = hermitian_ == Tri::Yes ? Tri::Yes : Tri::Unknown;
    out.unitary_ = unitary_ == Tri::Yes ? Tri::Yes : Tri::Unknown;
    return out;
}

CVector OperatorMatrix::apply(const CVector &v) const {
    if (v.size() != entries_.cols()) {
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                " applied to a " + std::to_string(dim()) + "-dim operator");
    }
    return entries_ * v;
}

OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("operator product dimension mismatch");
    OperatorMatrix out;
    out.entries_ = a.entries_ * b.entries_;
    if (a.unitary_ == Tri::Yes && b.unitary_ == Tri::Yes) out.unitary_ = Tri::Yes;
    return out;
}

OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("operator sum dimension mismatch");
    OperatorMatrix out;
    out.entries_ = a.entries_ + b.entries_;
    if (a.hermitian_ == Tri::Yes && b.hermitian_ == Tri::Yes) out.hermitian_ = Tri::Yes;
    return out;
}

OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("operator difference dimension mismatch");
    OperatorMatrix out;
    out.entries_ = a.entries_ - b.entries_;
    if (a.hermitian_ == Tri::Yes && b.hermitian_ == Tri::Yes) out.hermitian_ = Tri::Yes;
    return out;
}

OperatorMatrix operator*(Complex s, const OperatorMatrix &a) {
    OperatorMatrix out;
    out.entries_ = s * a.entries_;
    if (a.hermitian_ == Tri::Yes && s.imag() == 0.0) out.hermitian_ = Tri::Yes;
    if (a.unitary_ == Tri::Yes && std::abs(std::abs(s) - 1.0) <= tol::kStructural) {
        out.unitary_ = Tri::Yes;
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("max_abs_diff on differently shaped matrices");
    }
    return max_entry(a - b);
}

double phase_aligned_max_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("phase_aligned_max_diff on differently shaped matrices");
    }
    const Complex overlap = (b.conjugate().cwiseProduct(a)).sum();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    return max_entry(a - phase * b);
}

double phase_aligned_distance(const CVector &a, const CVector &b) {
    if (a.size() != b.size()) throw DimensionMismatch("phase_aligned_distance length mismatch");
    // ||a - e^{i phi} b||^2 = |a|^2 + |b|^2 - 2|<b,a>| at the optimal phi.
    const Complex overlap = b.dot(a);
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    return (a - phase * b).norm();
}

HermitianEig hermitian_eig(const OperatorMatrix &a) {
    if (!hermitian_within(a.entries(), tol::kStructural)) {
        throw NonHermitianInput("hermitian_eig: symmetry defect " +
                                std::to_string(a.hermiticity_defect()));
    }
    const CMatrix sym = 0.5 * (a.entries() + a.entries().adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw ConventionCheckFailed("hermitian_eig: eigensolver did not converge");
    }
    return HermitianEig{solver.eigenvalues(),
                        OperatorMatrix(solver.eigenvectors(), Tri::Unknown, Tri::Yes)};
}

OperatorMatrix expi_from_eig(const HermitianEig &eig, double t) {
    const CMatrix &v = eig.eigenvectors.entries();
    CVector phases(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, t * eig.eigenvalues(i));
    }
    CMatrix out = v * phases.asDiagonal() * v.adjoint();
    return OperatorMatrix(std::move(out), Tri::Unknown, Tri::Yes);
}

OperatorMatrix expi_hermitian(const OperatorMatrix &a, double t) {
    if (t == 0.0) {
        if (!hermitian_within(a.entries(), tol::kStructural)) {
            throw NonHermitianInput("expi_hermitian: symmetry defect " +
                                    std::to_string(a.hermiticity_defect()));
        }
        return OperatorMatrix::identity(a.dim());
    }
    return expi_from_eig(hermitian_eig(a), t);
}

TridiagonalEig symmetric_tridiagonal_eig(std::span<const double> diag,
                                         std::span<const double> offdiag) {
    const auto n = static_cast<lapack_int>(diag.size());
    if (n == 0) return {};
    if (offdiag.size() + 1 != diag.size()) {
        throw DimensionMismatch("tridiagonal: off-diagonal must have length n-1");
    }
    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(offdiag.begin(), offdiag.end());
    e.push_back(0.0);  // dstemr uses e[n-1] as workspace
    TridiagonalEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
    lapack_int found = 0;
    lapack_logical tryrac = 1;
    const lapack_int info = LAPACKE_dstemr(
        LAPACK_COL_MAJOR, 'V', 'A', n, d.data(), e.data(), 0.0, 0.0, 0, 0, &found,
        out.eigenvalues.data(), out.eigenvectors.data(), n, n, isuppz.data(), &tryrac);
    if (info != 0 || found != n) {
        throw ConventionCheckFailed("dstemr failed with info " + std::to_string(info));
    }
    return out;
}

CVector expi_tridiagonal_apply(const TridiagonalEig &eig, double t, const CVector &v) {
    if (v.size() != eig.eigenvalues.size()) {
        throw DimensionMismatch("expi_tridiagonal_apply length mismatch");
    }
    CVector coeffs = eig.eigenvectors.transpose().cast<Complex>() * v;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        coeffs(i) *= std::polar(1.0, t * eig.eigenvalues(i));
    }
    return eig.eigenvectors.cast<Complex>() * coeffs;
}

CMatrix expi_tridiagonal(const TridiagonalEig &eig, double t) {
    const Eigen::Index n = eig.eigenvalues.size();
    CVector phases(n);
    for (Eigen::Index i = 0; i < n; ++i) phases(i) = std::polar(1.0, t * eig.eigenvalues(i));
    const CMatrix q = eig.eigenvectors.cast<Complex>();
    return q * phases.asDiagonal() * q.transpose();
}

LogFactorialTable::LogFactorialTable(int max_n) {
    if (max_n < 0) throw OutOfRange("LogFactorialTable: negative max_n");
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    values_[0] = 0.0;
    for (int n = 1; n <= max_n; ++n) {
        // lgamma is exact enough and avoids the O(n) drift of running sums.
        values_[static_cast<std::size_t>(n)] = std::lgamma(static_cast<double>(n) + 1.0);
    }
    if (max_n >= 1) values_[1] = 0.0;
}

double LogFactorialTable::operator()(int n) const {
    if (n < 0 || n > max_n()) {
        throw OutOfRange("log factorial argument " + std::to_string(n) + " outside [0, " +
                         std::to_string(max_n()) + "]");
    }
    return values_[static_cast<std::size_t>(n)];
}

const LogFactorialTable &log_factorials() {
    static const LogFactorialTable table(65535);
    return table;
}

double log_factorial(int n) { return log_factorials()(n); }

double log_binomial(int n, int k) {
    if (k < 0 || k > n || n > log_factorials().max_n()) {
        throw OutOfRange("log_binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    const auto &lf = log_factorials();
    return lf(n) - lf(k) - lf(n - k);
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kLeaf = 16;
    if (values.size() <= kLeaf) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

SignedLog signed_log_sum(std::span<const SignedLog> terms) {
    double peak = -std::numeric_limits<double>::infinity();
    for (const auto &t : terms) {
        if (t.sign != 0) peak = std::max(peak, t.log_abs);
    }
    if (!std::isfinite(peak)) return {};
    std::vector<double> scaled;
    scaled.reserve(terms.size());
    for (const auto &t : terms) {
        if (t.sign != 0) scaled.push_back(t.sign * std::exp(t.log_abs - peak));
    }
    const double s = pairwise_sum(scaled);
    if (s == 0.0) return {};
    return SignedLog{peak + std::log(std::abs(s)), s > 0.0 ? 1 : -1};
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw InvalidArgument("gauss_legendre needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

int mod_inverse(int a, int m) {
    if (m <= 0) throw InvalidArgument("mod_inverse: modulus must be positive");
    long long t = 0, new_t = 1;
    long long r = m, new_r = mod(a, m);
    while (new_r != 0) {
        const long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) {
        throw InvalidArgument(std::to_string(a) + " has no inverse modulo " + std::to_string(m));
    }
    return mod(t, m);
}

}  // namespace hwps
