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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hwps/error.hpp"
#include "test_util.hpp"

using namespace hwps;

namespace {

// O_ij with R (n.J) R^dagger = (O n).J.
Eigen::Matrix3d so3_of(const OperatorMatrix &R, int N) {
    const auto j = schwinger_operators(N);
    const CMatrix J[3] = {j.Jx.entries(), j.Jy.entries(), j.Jz.entries()};
    const double norm = N * (N + 1.0) * (N + 2.0) / 12.0;
    Eigen::Matrix3d o;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            o(a, b) = (J[a] * R.entries() * J[b] * R.entries().adjoint()).trace().real() / norm;
        }
    }
    return o;
}

}  // namespace

TEST(wigner_sphere, n0_kernel_is_one) {
    const auto k = build_kernel(0);
    EXPECT_NEAR(std::abs(k.delta0(0, 0) - 1.0), 0.0, 1e-14);
}

TEST(wigner_sphere, n1_kernel_matches_spin_half_phase_point) {
    const auto k = build_kernel(1);
    EXPECT_NEAR(k.delta0(0, 0).real(), 0.5 * (1 + std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(k.delta0(1, 1).real(), 0.5 * (1 - std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(std::abs(k.delta0(0, 1)), 0.0, 1e-15);
}

TEST(wigner_sphere, auto_prefactor_resolves_to_standard) {
    for (int N : {2, 4, 10}) {
        const auto k = build_kernel(N);
        EXPECT_EQ(k.prefactor, KernelPrefactor::Standard);
        EXPECT_TRUE(k.axioms_ok);
        EXPECT_NEAR(k.delta0.trace().real(), 1.0, 1e-8);
        EXPECT_LT(k.orthonormality_residual, 1e-10);
        EXPECT_TRUE(k.delta0.hermitian() == Tri::Yes || k.delta0.hermiticity_defect() < 1e-10);
    }
}

TEST(wigner_sphere, printed_prefactor_fails_axioms) {
    const auto k = build_kernel(4, KernelPrefactor::Printed);
    EXPECT_FALSE(k.axioms_ok);
    EXPECT_GT(k.orthonormality_residual, 1e-3);
}

TEST(wigner_sphere, kernel_at_origin_is_delta0) {
    const auto k = build_kernel(5);
    EXPECT_LT(max_abs_diff(kernel_at(k, 0, 0).entries(), k.delta0.entries()), 1e-13);
}

TEST(wigner_sphere, kernel_trace_invariant) {
    const auto k = build_kernel(6);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 20; ++i) {
        const auto d = kernel_at(k, kPi * u(rng), 2 * kPi * u(rng));
        EXPECT_NEAR(std::abs(d.trace() - 1.0), 0.0, 1e-10);
        EXPECT_LT(d.hermiticity_defect(), 1e-10);
    }
}

TEST(wigner_sphere, kernel_covariance_definition) {
    for (auto o : {SphereOrientation::XAxis, SphereOrientation::YAxis}) {
        const auto k = build_kernel(4, KernelPrefactor::Auto, o);
        const double th = 0.7, ph = 2.1;
        const auto s = schwinger_operators(4);
        const OperatorMatrix g =
            o == SphereOrientation::XAxis
                ? expi_hermitian(s.Jz, ph) * expi_hermitian(s.Jx, th)
                : expi_hermitian(s.Jz, -ph) * expi_hermitian(s.Jy, -th);
        EXPECT_LT(max_abs_diff(kernel_at(k, th, ph).entries(), k.delta0.conjugated_by(g).entries()),
                  1e-10);
    }
}

TEST(wigner_sphere, kernel_direction_matches_rotated_jz) {
    const int N = 3;
    const auto s = schwinger_operators(N);
    for (auto o : {SphereOrientation::XAxis, SphereOrientation::YAxis}) {
        const double th = 1.1, ph = 0.4;
        const auto g = kernel_rotation(N, o, th, ph);
        const auto n = kernel_direction(o, th, ph);
        const CMatrix lhs = s.Jz.conjugated_by(g).entries();
        const CMatrix rhs = n[0] * s.Jx.entries() + n[1] * s.Jy.entries() + n[2] * s.Jz.entries();
        EXPECT_LT(max_abs_diff(lhs, rhs), 1e-10);
        const auto a = kernel_angles(o, n);
        EXPECT_NEAR(a[0], th, 1e-12);
        EXPECT_NEAR(a[1], ph, 1e-12);
    }
}

TEST(wigner_sphere, quadrature_weights_sum_to_four_pi) {
    const auto g = wigner_sphere(DensityMatrix::maximally_mixed(7), build_kernel(7));
    EXPECT_NEAR(g.weights.sum(), 4 * kPi, 1e-8);
    EXPECT_EQ(g.thetas.size(), 16u);
    EXPECT_EQ(g.phis.size(), 32u);
    EXPECT_NEAR(g.measure, 8.0 / (4 * kPi), 1e-15);
}

TEST(wigner_sphere, maximally_mixed_is_uniform) {
    const auto g = wigner_sphere(DensityMatrix::maximally_mixed(4), build_kernel(4));
    EXPECT_LT((g.values.array() - 0.2).abs().maxCoeff(), 1e-12);
    EXPECT_EQ(sphere_negativity(g), 0.0);
}

TEST(wigner_sphere, normalization_up_to_n20) {
    for (int N = 0; N <= 20; ++N) {
        const auto rho = DensityMatrix::pure(random_pure(N, 100 + N));
        const auto g = wigner_sphere(rho, build_kernel(N));
        EXPECT_NEAR(g.integral(), 1.0, 1e-7) << "N=" << N;
        EXPECT_LT(g.imag_residue, 1e-9);
    }
}

TEST(wigner_sphere, traciality_random_hermitian) {
    for (int N = 1; N <= 10; ++N) {
        const auto k = build_kernel(N);
        const auto grid = wigner_sphere(DensityMatrix::maximally_mixed(N), k);
        const CMatrix a = test::random_hermitian(N + 1, 7 * N);
        const CMatrix b = test::random_hermitian(N + 1, 7 * N + 1);
        const auto wa = wigner_sphere_operator(a, k, grid.thetas, grid.phis);
        const auto wb = wigner_sphere_operator(b, k, grid.thetas, grid.phis);
        const Complex lhs = grid.measure * (grid.weights.cast<Complex>().array() * wa.array() *
                                            wb.array()).sum();
        const Complex rhs = (a * b).trace();
        EXPECT_LT(std::abs(lhs - rhs), 1e-6 * std::max(1.0, std::abs(rhs))) << "N=" << N;
    }
}

TEST(wigner_sphere, rotation_covariance) {
    const int N = 5;
    const auto k = build_kernel(N);
    const auto psi = random_pure(N, 3);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 20; ++t) {
        const auto R = rotation(N, kPi * u(rng), 2 * kPi * u(rng)) *
                       expi_hermitian(schwinger_operators(N).Jx, 2 * kPi * u(rng));
        const auto O = so3_of(R, N);
        const SSRCState rotated(N, R.apply(psi.coeffs()));
        const double th = kPi * u(rng), ph = 2 * kPi * u(rng);
        const auto n = kernel_direction(k.orientation, th, ph);
        const Eigen::Vector3d m = O.transpose() * Eigen::Vector3d(n[0], n[1], n[2]);
        const auto back = kernel_angles(k.orientation, {m(0), m(1), m(2)});
        const double lhs = wigner_sphere_at(DensityMatrix::pure(rotated), k, th, ph);
        const double rhs = wigner_sphere_at(DensityMatrix::pure(psi), k, back[0], back[1]);
        EXPECT_NEAR(lhs, rhs, 1e-9);
    }
}

TEST(wigner_sphere, spin_coherent_peaks_at_its_direction) {
    const int N = 10;
    const double th0 = 1.0, ph0 = 2.0;
    const auto k = build_kernel(N);
    const auto grid = wigner_sphere(DensityMatrix::pure(spin_coherent(N, th0, ph0)), k);
    // spin_coherent is R(th0, ph0)|0>_a|N>_b, pointing along the y-axis
    // convention direction.
    const auto target =
        kernel_angles(k.orientation, kernel_direction(SphereOrientation::YAxis, th0, ph0));
    Eigen::Index i = 0, j = 0;
    grid.values.maxCoeff(&i, &j);
    const double dth = kPi / static_cast<double>(grid.thetas.size());
    const double dph = 2 * kPi / static_cast<double>(grid.phis.size());
    EXPECT_LT(std::abs(grid.thetas[static_cast<std::size_t>(i)] - target[0]), dth);
    double dphi = std::remainder(grid.phis[static_cast<std::size_t>(j)] - target[1], 2 * kPi);
    EXPECT_LT(std::abs(dphi), dph);
    const double peak = wigner_sphere_at(DensityMatrix::pure(spin_coherent(N, th0, ph0)), k,
                                         target[0], target[1]);
    EXPECT_GE(peak + 1e-12, grid.values.maxCoeff());
}

TEST(wigner_sphere, antipodal_fock_states) {
    const int N = 6;
    const auto k = build_kernel(N);
    const auto g0 = wigner_sphere(DensityMatrix::pure(fock_state(N, 0)), k);
    const auto gN = wigner_sphere(DensityMatrix::pure(fock_state(N, N)), k);
    const auto nt = static_cast<Eigen::Index>(g0.thetas.size());
    for (Eigen::Index i = 0; i < nt; ++i) {
        EXPECT_NEAR(g0.thetas[static_cast<std::size_t>(i)] +
                        g0.thetas[static_cast<std::size_t>(nt - 1 - i)],
                    kPi, 1e-12);
        for (Eigen::Index j = 0; j < g0.values.cols(); ++j) {
            EXPECT_NEAR(g0.values(i, j), gN.values(nt - 1 - i, j), 1e-9);
        }
    }
}

TEST(wigner_sphere, spin_coherent_negativity_small_and_shrinking) {
    // Not zero: the spin Wigner function of a coherent state has a shallow
    // negative ring opposite its peak.
    double prev = 1.0;
    for (int N : {2, 5, 10, 20}) {
        const auto g = wigner_sphere(DensityMatrix::pure(spin_coherent(N, 0.3, 0.2)),
                                     build_kernel(N), {4 * N + 4, 8 * N + 8});
        const double neg = sphere_negativity(g);
        EXPECT_LT(neg, prev) << "N=" << N;
        prev = neg;
    }
    EXPECT_LT(prev, 1e-3);
}

TEST(wigner_sphere, dicke_equator_state_is_negative) {
    const int N = 8;
    const auto k = build_kernel(N);
    const auto rho = DensityMatrix::pure(fock_state(N, N / 2));
    const auto g = wigner_sphere(rho, k);
    EXPECT_GT(sphere_negativity(g), 0.01);
    // The pole itself is positive for m = 0; the negative bands lie between.
    EXPECT_GT(wigner_sphere_at(rho, k, 0.0, 0.0), 0.0);
    EXPECT_LT(g.values.minCoeff(), -0.05);
}

TEST(wigner_sphere, dimension_mismatch) {
    EXPECT_THROW(wigner_sphere(DensityMatrix::maximally_mixed(3), build_kernel(4)),
                 DimensionMismatch);
}

TEST(wigner_sphere, convention_names_round_trip) {
    for (auto p : {KernelPrefactor::Auto, KernelPrefactor::Standard, KernelPrefactor::Printed}) {
        EXPECT_EQ(kernel_prefactor_from_string(to_string(p)), p);
    }
    for (auto o : {SphereOrientation::XAxis, SphereOrientation::YAxis}) {
        EXPECT_EQ(sphere_orientation_from_string(to_string(o)), o);
    }
    EXPECT_THROW(kernel_prefactor_from_string("nope"), ParseError);
}
