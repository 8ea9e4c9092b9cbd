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
#include "hwps/encoding.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "hwps/error.hpp"
#include "test_util.hpp"

using namespace hwps;

namespace {

Complex omega(int d, long long k) { return std::polar(1.0, 2 * kPi * static_cast<double>(mod(k, d)) / d); }

OperatorMatrix random_unitary(int d, std::uint64_t seed) {
    return expi_hermitian(OperatorMatrix(test::random_hermitian(d, seed), Tri::Yes), 1.0);
}

}  // namespace

TEST(encoding, fourier_small_cases) {
    EXPECT_NEAR(std::abs(fourier_operator(0)(0, 0) - 1.0), 0.0, 1e-15);
    const auto f = fourier_operator(1);
    const double s = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(f(0, 0) - s) + std::abs(f(0, 1) - s) + std::abs(f(1, 0) - s) +
                    std::abs(f(1, 1) + s),
                0.0, 1e-15);
    EXPECT_LT(fourier_operator(9).unitarity_defect(), 1e-12);
}

TEST(encoding, fourier_conjugates_clock_to_shift) {
    const int N = 4;
    const auto f = fourier_operator(N);
    const CMatrix lhs = (f.adjoint() * relative_phase_Z(N).op * f).entries();
    EXPECT_LT(phase_aligned_max_diff(lhs, relative_phase_X(N).op.entries()), 1e-9);
}

TEST(encoding, fourier_squared_is_parity_relabelling) {
    const int d = 7;
    const CMatrix f2 = (fourier_operator(d - 1) * fourier_operator(d - 1)).entries();
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            EXPECT_NEAR(std::abs(f2(k, j) - (k == mod(-j, d) ? 1.0 : 0.0)), 0.0, 1e-12);
        }
    }
}

TEST(encoding, plain_encoding) {
    const int N = 6;
    const auto e = build_encoding(N, "identity", "identity");
    EXPECT_EQ(e.kappa_class, KappaClass::Identity);
    EXPECT_LT(max_abs_diff(e.Z_U.entries(), relative_phase_Z(N).op.entries()), 1e-14);
    for (int n = 0; n <= N; ++n) {
        EXPECT_LT((e.basis[static_cast<std::size_t>(n)].coeffs() - fock_state(N, n).coeffs())
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-15);
    }
    EXPECT_LT(e.hw_defect, 1e-9);
    EXPECT_NEAR(std::abs(e.global_phase - omega(N + 1, 0) * std::polar(1.0, kPi * N / (N + 1.0))),
                0.0, 1e-12);
}

TEST(encoding, x_basis_encoding_clock_eigenvalues) {
    const int N = 6;
    const auto e = build_encoding(N, "identity", "rot_pi_y");
    EXPECT_EQ(e.kappa_class, KappaClass::RotPiY);
    const auto V = jx_eigenbasis(N);
    const double w = 2 * kPi / (N + 1);
    for (int n = 0; n <= N; ++n) {
        const CVector col = V.entries().col(n);
        EXPECT_LT((e.basis[static_cast<std::size_t>(n)].coeffs() - col).cwiseAbs().maxCoeff(), 1e-12);
        const CVector zc = e.Z_U.apply(col);
        EXPECT_LT((zc - std::polar(1.0, w * (N / 2.0 - n)) * col).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(encoding, x_basis_shift_is_cyclic_on_labels) {
    const int N = 4;
    const auto e = build_encoding(N, "identity", "rot_pi_y");
    for (int j = 0; j <= N; ++j) {
        const CVector from = e.basis[static_cast<std::size_t>(e.index_of_label(j))].coeffs();
        const CVector to = e.basis[static_cast<std::size_t>(e.index_of_label(j + 1))].coeffs();
        EXPECT_LT((e.X_U.apply(from) - e.global_phase * to).cwiseAbs().maxCoeff(), 1e-10) << j;
    }
}

TEST(encoding, theta_z_half_moves_vacuum_to_balanced_state) {
    for (int N : {4, 6, 10}) {
        const auto K = encoding_preset("theta_z_half", N);
        const CVector out = K.apply(fock_state(N, 0).coeffs());
        EXPECT_NEAR(std::abs(out(N / 2)), 1.0, 1e-14);
        EXPECT_LT(K.unitarity_defect(), 1e-12);
    }
    EXPECT_THROW(encoding_preset("theta_z_half", 5), InvalidArgument);
    EXPECT_THROW(encoding_preset("bogus", 4), InvalidArgument);
}

TEST(encoding, heisenberg_weyl_all_presets) {
    const char *names[] = {"identity", "rot_pi_y", "theta_z_half"};
    for (int N : {2, 4, 8, 12}) {
        for (const char *k : names) {
            for (const char *u : names) {
                const auto e = build_encoding(N, k, u);
                EXPECT_LT(e.hw_defect, 1e-9) << N << k << u;
                EXPECT_LT(e.order_defect, 1e-9);
            }
        }
    }
}

TEST(encoding, order_phases_recorded) {
    const int N = 4;
    const auto e = build_encoding(N, "identity", "identity");
    const CMatrix zd = e.Z_U.pow(N + 1).entries();
    EXPECT_LT(max_abs_diff(zd, e.z_order_phase * CMatrix::Identity(N + 1, N + 1)), 1e-9);
    const CMatrix xd = e.X_U.pow(N + 1).entries();
    EXPECT_LT(max_abs_diff(xd, e.x_order_phase * CMatrix::Identity(N + 1, N + 1)), 1e-9);
}

TEST(encoding, odd_n_is_flagged) {
    const auto e = build_encoding(5, "identity", "identity");
    EXPECT_TRUE(e.odd_n_requires_care);
    EXPECT_LT(e.hw_defect, 1e-9);
    EXPECT_TRUE(relative_phase_Z(5).odd_n_requires_care);
}

TEST(encoding, covariance_under_common_unitary) {
    const int N = 6;
    const auto V = random_unitary(N + 1, 77);
    const auto K = encoding_preset("theta_z_half", N);
    const auto U = encoding_preset("rot_pi_y", N);
    const auto a = build_encoding(N, K, U);
    const auto b = build_encoding(N, V * K, V * U);
    EXPECT_LT(max_abs_diff(a.kappa.entries(), b.kappa.entries()), 1e-12);
    for (int n = 0; n <= N; ++n) {
        const auto wa = encoded_wigner(a, a.basis[static_cast<std::size_t>(n)]);
        const auto wb = encoded_wigner(b, b.basis[static_cast<std::size_t>(n)]);
        EXPECT_LT((wa.values - wb.values).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(encoding, encoded_basis_lattice_matches_qudit_basis) {
    const int N = 4;
    const auto e = build_encoding(N, "identity", "rot_pi_y");
    const auto pps = weyl_operators(N + 1);
    for (int j = 0; j <= N; ++j) {
        const auto w = encoded_wigner(e, e.basis[static_cast<std::size_t>(e.index_of_label(j))]);
        const auto ref = wigner_discrete(QuditState::basis(N + 1, j), pps);
        EXPECT_LT((w.values - ref.values).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(encoding, su2_preserved_under_conjugation) {
    const int N = 5;
    const auto K = random_unitary(N + 1, 3);
    const auto s = schwinger_operators(N);
    const CMatrix x = s.Jx.conjugated_by(K).entries(), y = s.Jy.conjugated_by(K).entries(),
                  z = s.Jz.conjugated_by(K).entries();
    EXPECT_LT(max_abs_diff(test::commutator(x, y), Complex(0, 1) * z), 1e-10);
    EXPECT_LT(max_abs_diff(test::commutator(y, z), Complex(0, 1) * x), 1e-10);
}

TEST(encoding, rejects_non_unitary) {
    CMatrix m = CMatrix::Identity(3, 3);
    m(0, 0) = 2.0;
    EXPECT_THROW(build_encoding(2, OperatorMatrix(m), OperatorMatrix::identity(3)), NonUnitaryTransform);
    EXPECT_THROW(build_encoding(2, OperatorMatrix::identity(4), OperatorMatrix::identity(3)),
                 DimensionMismatch);
}

TEST(encoding, logical_fourier_defect_phase_invariant) {
    const int N = 16;
    const auto psi = coherent_truncated(N, 0.5);
    const SSRCState rotated(N, std::polar(1.0, 0.8) * psi.coeffs());
    EXPECT_NEAR(logical_fourier_defect(N, psi), logical_fourier_defect(N, rotated), 1e-12);
}

TEST(encoding, logical_fourier_defect_values) {
    // Independent numpy computation of the same construction.
    EXPECT_NEAR(logical_fourier_defect(16, fock_state(16, 0)), 0.67638, 1e-4);
    EXPECT_NEAR(logical_fourier_defect(64, fock_state(64, 0)), 0.68828, 1e-4);
    EXPECT_NEAR(logical_fourier_defect(16, coherent_truncated(16, 1.0)), 1.30006, 1e-4);
    // Outside the CV regime the defect is O(1); reported, no claim.
    const double far = logical_fourier_defect(4, fock_state(4, 4));
    EXPECT_GT(far, 0.0);
    EXPECT_LE(far, std::sqrt(2.0) + 1e-12);
}

TEST(encoding, logical_fourier_family) {
    const auto r = logical_fourier_as_rotation(16);
    EXPECT_EQ(r.states.size(), 4u);
    EXPECT_EQ(r.per_state.size(), 4u);
    EXPECT_NEAR(r.defect, *std::max_element(r.per_state.begin(), r.per_state.end()), 0.0);
    LogicalFourierConfig strict;
    strict.enforce_cv = true;
    const auto s = logical_fourier_as_rotation(64, strict);
    for (const auto &name : s.states) EXPECT_NE(name, "coherent:2.000000");
}

TEST(encoding, trivial_code_embedding) {
    const int N = 4;
    const auto c = embed_code(N, N + 1, CMatrix::Identity(N + 1, N + 1));
    EXPECT_LT(max_abs_diff(c.Zbar.entries(), qudit_clock(N + 1).entries()), 1e-14);
    const CMatrix zx = (c.Zbar * c.Xbar).entries();
    const CMatrix xz = (c.Xbar * c.Zbar).entries();
    EXPECT_LT(max_abs_diff(zx, omega(N + 1, 1) * xz), 1e-9);
}

TEST(encoding, sub_code_shift_lifts_to_three_step) {
    const int N = 8, k = 3;
    CMatrix iso = CMatrix::Zero(N + 1, k);
    for (int j = 0; j < k; ++j) iso(3 * j, j) = 1.0;
    const auto c = embed_code(N, k, iso);
    const CMatrix lifted = c.lift(c.Xbar);
    for (int j = 0; j < k; ++j) {
        EXPECT_NEAR(std::abs(lifted(3 * ((j + 1) % k), 3 * j) - 1.0), 0.0, 1e-12);
    }
    const CVector zero_bar = iso.col(0);
    const auto w = c.wigner(zero_bar);
    const auto ref = wigner_discrete(QuditState::basis(3, 0), weyl_operators(3));
    EXPECT_LT((w.values - ref.values).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(encoding, code_embedding_errors) {
    EXPECT_THROW(embed_code(4, 2, CMatrix::Identity(5, 2)), EvenCodeDimension);
    CMatrix bad = CMatrix::Identity(5, 3);
    bad(1, 0) = 1.0;
    EXPECT_THROW(embed_code(4, 3, bad), NonIsometric);
}
