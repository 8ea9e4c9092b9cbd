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

#include "hwps/wigner_sphere.hpp"

#include <algorithm>
#include <cmath>

#include "hwps/error.hpp"

namespace hwps {

std::string to_string(KernelPrefactor p) {
    switch (p) {
    case KernelPrefactor::Auto:
        return "auto";
    case KernelPrefactor::Standard:
        return "standard";
    case KernelPrefactor::Printed:
        return "printed";
    }
    return "auto";
}

std::string to_string(SphereOrientation o) {
    return o == SphereOrientation::XAxis ? "x-axis" : "y-axis";
}

KernelPrefactor kernel_prefactor_from_string(const std::string &s) {
    if (s == "auto") return KernelPrefactor::Auto;
    if (s == "standard" || s == "2l+1") return KernelPrefactor::Standard;
    if (s == "printed" || s == "l+1") return KernelPrefactor::Printed;
    throw ParseError("unknown kernel prefactor '" + s + "'");
}

SphereOrientation sphere_orientation_from_string(const std::string &s) {
    if (s == "x-axis" || s == "x") return SphereOrientation::XAxis;
    if (s == "y-axis" || s == "y") return SphereOrientation::YAxis;
    throw ParseError("unknown sphere orientation '" + s + "'");
}

CMatrix Multipole::dense(int N) const {
    CMatrix out = CMatrix::Zero(N + 1, N + 1);
    const int col0 = std::max(k, 0);
    for (std::size_t i = 0; i < band.size(); ++i) {
        const int col = col0 + static_cast<int>(i);
        out(col - k, col) = band[i];
    }
    return out;
}

const Multipole &SphericalKernelSet::multipole(int l, int k) const {
    if (l < 0 || l > N || std::abs(k) > l) {
        throw OutOfRange("multipole (" + std::to_string(l) + ", " + std::to_string(k) +
                         ") outside N=" + std::to_string(N));
    }
    // Multipoles are stored l-major with k = -l..l: index l^2 + (k + l).
    return multipoles[static_cast<std::size_t>(l * l + k + l)];
}

namespace {

double prefactor_value(KernelPrefactor p, int l, int N) {
    const double num = p == KernelPrefactor::Printed ? l + 1.0 : 2.0 * l + 1.0;
    return std::sqrt(num / (N + 1.0));
}

SphericalKernelSet assemble(int N, KernelPrefactor p, SphereOrientation orientation) {
    SphericalKernelSet out;
    out.N = N;
    out.prefactor = p;
    out.orientation = orientation;
    const HalfInt j = HalfInt::from_twice(N);
    out.multipoles.reserve(static_cast<std::size_t>(N + 1) * (N + 1));
    for (int l = 0; l <= N; ++l) {
        const double pl = prefactor_value(p, l, N);
        for (int k = -l; k <= l; ++k) {
            Multipole t{l, k, {}};
            // Column n' carries m' = (N - 2n')/2; row n = n' - k carries m' + k.
            for (int col = std::max(k, 0); col <= N + std::min(k, 0); ++col) {
                const HalfInt mp = HalfInt::from_twice(N - 2 * col);
                const HalfInt m = HalfInt::from_twice(N - 2 * (col - k));
                t.band.push_back(pl * clebsch_gordan(j, mp, HalfInt::from_int(l),
                                                     HalfInt::from_int(k), j, m));
            }
            out.multipoles.push_back(std::move(t));
        }
    }
    CVector diag = CVector::Zero(N + 1);
    for (int l = 0; l <= N; ++l) {
        const auto &band = out.multipole(l, 0).band;
        const double w = std::sqrt((2.0 * l + 1.0) / (N + 1.0));
        for (int n = 0; n <= N; ++n) diag(n) += w * band[static_cast<std::size_t>(n)];
    }
    out.delta0 = OperatorMatrix::diagonal(diag, Tri::Yes, Tri::Unknown);
    out.trace_residual = std::abs(out.delta0.trace() - Complex(1.0));

    // Hilbert-Schmidt orthonormality; only equal k overlap.
    double worst = 0.0;
    for (int k = -N; k <= N; ++k) {
        const int lmin = std::abs(k);
        for (int l1 = lmin; l1 <= N; ++l1) {
            const auto &b1 = out.multipole(l1, k).band;
            for (int l2 = l1; l2 <= N; ++l2) {
                const auto &b2 = out.multipole(l2, k).band;
                double dot = 0.0;
                for (std::size_t i = 0; i < b1.size(); ++i) dot += b1[i] * b2[i];
                worst = std::max(worst, std::abs(dot - (l1 == l2 ? 1.0 : 0.0)));
            }
        }
    }
    out.orthonormality_residual = worst;
    out.axioms_ok = out.trace_residual <= kSphereAxiomTolerance &&
                    worst <= kSphereAxiomTolerance;
    return out;
}

// E(theta) such that G = diag(e^{i sigma phi m_a}) E(theta).
CMatrix polar_factor(const JxSpectrum &spec, SphereOrientation o, double theta) {
    if (o == SphereOrientation::XAxis) return expi_tridiagonal(spec.eig(), theta);
    return spec.expi_jy_dense(-theta).cast<Complex>();
}

int azimuth_sign(SphereOrientation o) { return o == SphereOrientation::XAxis ? 1 : -1; }

// Coefficients c_s, s = a - b in [-N, N], of W(phi) = sum_s c_s e^{i sigma phi s}
// at fixed theta. Index s + N.
CVector azimuthal_coefficients(const CMatrix &op, const CMatrix &k_theta) {
    const int d = static_cast<int>(op.rows());
    CVector c = CVector::Zero(2 * d - 1);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) c(a - b + d - 1) += op(a, b) * k_theta(b, a);
    }
    return c;
}

Complex evaluate_azimuth(const CVector &c, int sigma, double phi) {
    const int d = static_cast<int>((c.size() + 1) / 2);
    Complex sum = 0.0;
    for (int s = -(d - 1); s <= d - 1; ++s) {
        sum += c(s + d - 1) * std::polar(1.0, sigma * phi * s);
    }
    return sum;
}

}  // namespace

SphericalKernelSet build_kernel(int N, KernelPrefactor prefactor, SphereOrientation orientation) {
    if (N < 0) throw InvalidArgument("build_kernel: N must be non-negative");
    if (prefactor != KernelPrefactor::Auto) return assemble(N, prefactor, orientation);
    for (KernelPrefactor p : {KernelPrefactor::Standard, KernelPrefactor::Printed}) {
        auto k = assemble(N, p, orientation);
        if (k.axioms_ok) return k;
    }
    throw ConventionCheckFailed("no multipole prefactor satisfies the kernel axioms for N=" +
                                std::to_string(N));
}

OperatorMatrix kernel_rotation(int N, SphereOrientation orientation, double theta, double phi) {
    if (orientation == SphereOrientation::YAxis) return rotation(N, theta, phi);
    const JxSpectrum spec(N);
    CMatrix g = expi_tridiagonal(spec.eig(), theta);
    for (int n = 0; n <= N; ++n) g.row(n) *= std::polar(1.0, phi * 0.5 * (N - 2 * n));
    return OperatorMatrix(std::move(g), Tri::Unknown, Tri::Yes);
}

std::array<double, 3> kernel_direction(SphereOrientation orientation, double theta, double phi) {
    const double st = std::sin(theta);
    if (orientation == SphereOrientation::XAxis) {
        return {st * std::sin(phi), st * std::cos(phi), std::cos(theta)};
    }
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

std::array<double, 2> kernel_angles(SphereOrientation orientation, const std::array<double, 3> &n) {
    const double r = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (!(r > 0.0)) throw InvalidArgument("kernel_angles: zero direction");
    const double theta = std::acos(std::clamp(n[2] / r, -1.0, 1.0));
    double phi = orientation == SphereOrientation::XAxis ? std::atan2(n[0], n[1])
                                                              : std::atan2(n[1], n[0]);
    if (phi < 0.0) phi += 2.0 * kPi;
    return {theta, phi};
}

OperatorMatrix kernel_at(const SphericalKernelSet &kernels, double theta, double phi) {
    const OperatorMatrix g = kernel_rotation(kernels.N, kernels.orientation, theta, phi);
    return kernels.delta0.conjugated_by(g);
}

double SphereGrid::integral() const {
    return measure * weights.cwiseProduct(values).sum();
}

Eigen::MatrixXcd wigner_sphere_operator(const CMatrix &op, const SphericalKernelSet &kernels,
                                        const std::vector<double> &thetas,
                                        const std::vector<double> &phis) {
    const int N = kernels.N;
    if (op.rows() != N + 1 || op.cols() != N + 1) {
        throw DimensionMismatch("operator of dim " + std::to_string(op.rows()) +
                                " against a kernel for N=" + std::to_string(N));
    }
    const JxSpectrum spec(N);
    const int sigma = azimuth_sign(kernels.orientation);
    const CVector d0 = kernels.delta0.entries().diagonal();
    Eigen::MatrixXcd out(thetas.size(), phis.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const CMatrix e = polar_factor(spec, kernels.orientation, thetas[i]);
        const CMatrix k_theta = e * d0.asDiagonal() * e.adjoint();
        const CVector c = azimuthal_coefficients(op, k_theta);
        for (std::size_t j = 0; j < phis.size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                evaluate_azimuth(c, sigma, phis[j]);
        }
    }
    return out;
}

SphereGrid wigner_sphere(const DensityMatrix &rho, const SphericalKernelSet &kernels,
                         const SphereGridSpec &spec) {
    if (rho.N() != kernels.N) {
        throw DimensionMismatch("state N=" + std::to_string(rho.N()) + " but kernel N=" +
                                std::to_string(kernels.N));
    }
    const int N = kernels.N;
    const int n_theta = spec.n_theta > 0 ? spec.n_theta : 2 * N + 2;
    const int n_phi = spec.n_phi > 0 ? spec.n_phi : 4 * N + 4;
    SphereGrid grid;
    grid.N = N;
    grid.measure = (N + 1.0) / (4.0 * kPi);
    grid.prefactor = kernels.prefactor;
    grid.orientation = kernels.orientation;
    // Nodes in cos(theta) come ascending, so theta descends; flip to ascend.
    const QuadratureRule gl = gauss_legendre(n_theta);
    std::vector<double> ct_w(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i) {
        const auto src = static_cast<std::size_t>(n_theta - 1 - i);
        grid.thetas.push_back(std::acos(gl.nodes[src]));
        ct_w[static_cast<std::size_t>(i)] = gl.weights[src];
    }
    const double dphi = 2.0 * kPi / n_phi;
    for (int j = 0; j < n_phi; ++j) grid.phis.push_back(j * dphi);
    grid.weights.resize(n_theta, n_phi);
    for (int i = 0; i < n_theta; ++i) {
        for (int j = 0; j < n_phi; ++j) grid.weights(i, j) = ct_w[static_cast<std::size_t>(i)] * dphi;
    }
    const auto values = wigner_sphere_operator(rho.rho().entries(), kernels, grid.thetas, grid.phis);
    grid.imag_residue = values.size() ? values.imag().cwiseAbs().maxCoeff() : 0.0;
    if (grid.imag_residue > 1e-9) {
        throw ConventionCheckFailed("spherical Wigner values have imaginary part " +
                                    std::to_string(grid.imag_residue));
    }
    grid.values = values.real();
    return grid;
}

double wigner_sphere_at(const DensityMatrix &rho, const SphericalKernelSet &kernels,
                        double theta, double phi) {
    const auto v = wigner_sphere_operator(rho.rho().entries(), kernels, {theta}, {phi});
    return v(0, 0).real();
}

double sphere_negativity(const SphereGrid &grid) {
    double neg = 0.0;
    for (Eigen::Index i = 0; i < grid.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < grid.values.cols(); ++j) {
            const double v = grid.values(i, j);
            if (v <= -1e-12) neg += grid.weights(i, j) * (-v);
        }
    }
    return grid.measure * neg;
}

}  // namespace hwps
