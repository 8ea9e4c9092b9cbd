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

#include "hwps/wigner_plane.hpp"

#include <algorithm>
#include <cmath>

#include "hwps/error.hpp"

namespace hwps {

TruncatedModeState::TruncatedModeState(int n_max, CVector coeffs, double tail_bound)
    : n_max_(n_max), coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
    if (n_max < 0) throw InvalidArgument("TruncatedModeState: n_max must be non-negative");
    if (coeffs_.size() != n_max + 1) {
        throw InvalidState("TruncatedModeState: expected " + std::to_string(n_max + 1) +
                           " coefficients, got " + std::to_string(coeffs_.size()));
    }
    if (!(tail_bound >= 0.0 && tail_bound < 1.0)) {
        throw InvalidArgument("TruncatedModeState: tail_bound must lie in [0, 1)");
    }
    const double norm2 = coeffs_.squaredNorm();
    if (!(norm2 <= 1.0 + 1e-10) || norm2 < 1.0 - tail_bound - 1e-10) {
        throw InvalidState("TruncatedModeState: squared norm " + std::to_string(norm2) +
                           " outside [1 - tail_bound, 1]");
    }
}

TruncatedModeState TruncatedModeState::fock(int n_max, int n) {
    if (n < 0 || n > n_max) throw OutOfRange("Fock index " + std::to_string(n));
    CVector c = CVector::Zero(n_max + 1);
    c(n) = 1.0;
    return TruncatedModeState(n_max, std::move(c), 0.0);
}

TruncatedModeState TruncatedModeState::coherent(int n_max, Complex alpha) {
    if (n_max < 0) throw InvalidArgument("coherent: n_max must be non-negative");
    const double r = std::abs(alpha);
    CVector c = CVector::Zero(n_max + 1);
    if (r == 0.0) {
        c(0) = 1.0;
        return TruncatedModeState(n_max, std::move(c), 0.0);
    }
    for (int k = 0; k <= n_max; ++k) {
        const double log_mag = -0.5 * r * r + k * std::log(r) - 0.5 * log_factorial(k);
        c(k) = std::exp(log_mag) * std::polar(1.0, k * std::arg(alpha));
    }
    const double tail = std::max(0.0, 1.0 - c.squaredNorm());
    return TruncatedModeState(n_max, std::move(c), std::min(tail + 1e-15, 0.999));
}

TruncatedModeState TruncatedModeState::squeezed_vacuum(int n_max, double r) {
    if (n_max < 0) throw InvalidArgument("squeezed_vacuum: n_max must be non-negative");
    const int big = 4 * (n_max + 1);
    CMatrix gen = CMatrix::Zero(big, big);
    for (int n = 0; n + 2 < big; ++n) {
        const double v = 0.5 * std::sqrt((n + 1.0) * (n + 2.0));
        gen(n + 2, n) = v;
        gen(n, n + 2) = v;
    }
    const OperatorMatrix u = expi_hermitian(OperatorMatrix(std::move(gen), Tri::Yes), -r);
    CVector full = u.entries().col(0);
    CVector c = full.head(n_max + 1);
    const double tail = std::max(0.0, 1.0 - c.squaredNorm());
    return TruncatedModeState(n_max, std::move(c), std::min(tail + 1e-14, 0.999));
}

TruncatedModeState TruncatedModeState::from_ssrc(const SSRCState &s) {
    return TruncatedModeState(s.N(), s.coeffs(), 0.0);
}

TruncatedModeState TruncatedModeState::resized(int n_max) const {
    if (n_max < 0) throw InvalidArgument("resized: n_max must be non-negative");
    CVector c = CVector::Zero(n_max + 1);
    const int keep = std::min(n_max, n_max_) + 1;
    c.head(keep) = coeffs_.head(keep);
    const double dropped = mass_above(n_max);
    if (dropped > 1e-15 + tail_bound_) {
        // The dropped mass is folded into the declared tail.
        return TruncatedModeState(n_max, std::move(c), std::min(tail_bound_ + dropped, 0.999));
    }
    return TruncatedModeState(n_max, std::move(c), tail_bound_);
}

double TruncatedModeState::mass_above(int cutoff) const {
    if (cutoff >= n_max_) return 0.0;
    const int from = std::max(cutoff + 1, 0);
    return coeffs_.segment(from, n_max_ + 1 - from).squaredNorm();
}

OperatorMatrix displacement(int n_max, Complex alpha) {
    if (n_max < 0) throw InvalidArgument("displacement: n_max must be non-negative");
    if (std::norm(alpha) > 0.25 * n_max) {
        throw TruncationUnsafe("displacement: |alpha|^2 = " + std::to_string(std::norm(alpha)) +
                               " exceeds n_max/4 = " + std::to_string(0.25 * n_max));
    }
    const int d = n_max + 1;
    // D = e^{i H} with H = -i(alpha a' - alpha* a), Hermitian.
    CMatrix h = CMatrix::Zero(d, d);
    for (int n = 0; n < n_max; ++n) {
        const double s = std::sqrt(n + 1.0);
        h(n + 1, n) = Complex(0.0, -1.0) * alpha * s;
        h(n, n + 1) = Complex(0.0, 1.0) * std::conj(alpha) * s;
    }
    return expi_hermitian(OperatorMatrix(std::move(h), Tri::Yes), 1.0);
}

OperatorMatrix parity_kernel(int n_max) {
    if (n_max < 0) throw InvalidArgument("parity_kernel: n_max must be non-negative");
    CVector diag(n_max + 1);
    for (int n = 0; n <= n_max; ++n) diag(n) = n % 2 == 0 ? kParityScale : -kParityScale;
    return OperatorMatrix::diagonal(diag, Tri::Yes, Tri::Unknown);
}

double parity_scale_from_integral() {
    // <0|D(alpha)|0> = e^{-|alpha|^2/2}; integrate r dr dphi on [0, 12].
    const QuadratureRule rule = gauss_legendre(96);
    constexpr double r_max = 12.0;
    double radial = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 0.5 * r_max * (rule.nodes[i] + 1.0);
        radial += 0.5 * r_max * rule.weights[i] * r * std::exp(-0.5 * r * r);
    }
    return 2.0 * kPi * radial / (4.0 * kPi);
}

CMatrix displacement_elements(int n_max, Complex beta) {
    if (n_max < 0) throw InvalidArgument("displacement_elements: n_max must be non-negative");
    if (std::abs(beta) > 30.0) {
        throw TruncationUnsafe("displacement_elements: |beta| = " +
                               std::to_string(std::abs(beta)) + " underflows");
    }
    const int d = n_max + 1;
    CMatrix out(d, d);
    out(0, 0) = std::exp(-0.5 * std::norm(beta));
    const Complex bc = std::conj(beta);
    for (int n = 0; n + 1 < d; ++n) out(0, n + 1) = -bc * out(0, n) / std::sqrt(n + 1.0);
    for (int m = 0; m + 1 < d; ++m) {
        const double inv = 1.0 / std::sqrt(m + 1.0);
        out(m + 1, 0) = beta * out(m, 0) * inv;
        for (int n = 1; n < d; ++n) {
            out(m + 1, n) = (std::sqrt(static_cast<double>(n)) * out(m, n - 1) + beta * out(m, n)) * inv;
        }
    }
    return out;
}

namespace {

// D(a) Pi D(a)^dagger = D(2a) Pi, so W_P = c_P c^dagger D(2 alpha) Pi c.
double plane_value(const CVector &c, const CVector &parity_c, int n_max, Complex alpha) {
    const CMatrix d = displacement_elements(n_max, 2.0 * alpha);
    return kParityScale * c.dot(d * parity_c).real();
}

CVector with_parity(const CVector &c) {
    CVector out = c;
    for (Eigen::Index n = 1; n < out.size(); n += 2) out(n) = -out(n);
    return out;
}

}  // namespace

double wigner_plane_at(const TruncatedModeState &state, Complex alpha) {
    return plane_value(state.coeffs(), with_parity(state.coeffs()), state.n_max(), alpha);
}

PlaneGrid wigner_plane(const TruncatedModeState &state, const PlaneGridSpec &spec) {
    if (spec.nx < 2 || spec.np < 2) throw InvalidArgument("wigner_plane: need at least 2x2 points");
    const double extent =
        spec.extent > 0.0 ? spec.extent : 0.5 * std::sqrt(static_cast<double>(state.n_max())) + 3.0;
    if (2.0 * std::sqrt(2.0) * extent > 30.0) {
        throw TruncationUnsafe("wigner_plane: grid extent " + std::to_string(extent) +
                               " leaves the representable disk");
    }
    PlaneGrid grid;
    grid.n_max = state.n_max();
    const double dx = 2.0 * extent / (spec.nx - 1);
    const double dp = 2.0 * extent / (spec.np - 1);
    for (int i = 0; i < spec.nx; ++i) grid.xs.push_back(-extent + i * dx);
    for (int j = 0; j < spec.np; ++j) grid.ps.push_back(-extent + j * dp);
    grid.cell_area = dx * dp;
    grid.values.resize(spec.nx, spec.np);
    const CVector pc = with_parity(state.coeffs());
    for (int i = 0; i < spec.nx; ++i) {
        for (int j = 0; j < spec.np; ++j) {
            grid.values(i, j) = plane_value(state.coeffs(), pc, state.n_max(),
                                            Complex(grid.xs[static_cast<std::size_t>(i)],
                                                    grid.ps[static_cast<std::size_t>(j)]));
        }
    }
    return grid;
}

double plane_negativity(const PlaneGrid &grid) {
    double neg = 0.0;
    for (Eigen::Index i = 0; i < grid.values.size(); ++i) {
        const double v = grid.values.data()[i];
        if (v < 0.0) neg -= v;
    }
    return neg * grid.cell_area / grid.normalization;
}

}  // namespace hwps
