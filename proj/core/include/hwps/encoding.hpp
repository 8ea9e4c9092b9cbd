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

// Qudit encodings in the (N+1)-dimensional two-mode space: clock, Fourier
// and shift operators, their transforms by a code unitary U and a physical
// transform K, and k-dimensional sub-codes.

#ifndef HWPS_ENCODING_HPP
#define HWPS_ENCODING_HPP

#include <string>
#include <vector>

#include "hwps/fock.hpp"
#include "hwps/numerics.hpp"
#include "hwps/wigner_discrete.hpp"

namespace hwps {

/// F_{nm} = omega^{nm}/sqrt(N+1).
OperatorMatrix fourier_operator(int N);

enum class KappaClass { Identity, RotPiY, Other };
std::string to_string(KappaClass k);

inline constexpr double kKappaTolerance = 1e-9;

/// Named transforms: "identity", "rot_pi_y" (= jx_eigenbasis(N)),
/// "theta_z_half" (forward relative-phase shift to the power N/2; N even).
OperatorMatrix encoding_preset(const std::string &name, int N);

struct EncodingSpec {
    int N = 0;
    int d = 1;
    OperatorMatrix K, U;
    OperatorMatrix Z_U, X_U, F_U;  // U Z U^dagger, F_U^dagger Z_U F_U, U F U^dagger
    OperatorMatrix kappa;          // K^dagger U
    KappaClass kappa_class = KappaClass::Other;
    double kappa_identity_distance = 0.0;  // phase-aligned max-entry distance
    double kappa_rot_distance = 0.0;
    std::vector<SSRCState> basis;  // U|j>_a|N-j>_b

    double hw_defect = 0.0;       // max over a, b of |X^a Z^b - omega^{-ab} Z^b X^a|
    Complex z_order_phase = 1.0;  // Z_U^d = phase * 1
    Complex x_order_phase = 1.0;  // X_U^d = phase * 1
    double order_defect = 0.0;    // after removing those phases
    Complex global_phase = 1.0;   // omega^{N/2} carried by Z and X
    std::vector<int> logical_label;  // j(n) for basis index n
    bool odd_n_requires_care = false;

    /// Basis index n whose logical label is j.
    int index_of_label(int j) const;
};

/// Throws NonUnitaryTransform or HWRelationViolated (tolerance 1e-9).
EncodingSpec build_encoding(int N, const OperatorMatrix &K, const OperatorMatrix &U);
EncodingSpec build_encoding(int N, const std::string &K_preset, const std::string &U_preset);

/// Logical state in the encoding's own frame: coefficients on logical labels
/// j = 0..d-1 of U^dagger psi.
CVector logical_amplitudes(const EncodingSpec &enc, const SSRCState &physical);

/// Discrete Wigner lattice of an encoded state in logical coordinates.
DiscreteLattice encoded_wigner(const EncodingSpec &enc, const SSRCState &physical,
                               WeylConvention convention = WeylConvention::SymmetricHalf);

/// How the Fourier operator compared with the rotation is labelled.
/// Logical: DFT in the logical labels j(n). Raw: U F U^dagger in index n.
enum class FourierLabelling { Logical, Raw };

struct LogicalFourierConfig {
    bool include_vacuum = true;
    std::vector<double> coherent_alphas{0.5, 1.0, 2.0};
    FourierLabelling labelling = FourierLabelling::Logical;
    /// Test states must satisfy <n_a> <= kappa sqrt N; others are skipped.
    double kappa = kDefaultKappa;
    bool enforce_cv = false;
};

struct LogicalFourierResult {
    int N = 0;
    double defect = 0.0;  // max over the family
    std::vector<std::string> states;
    std::vector<double> per_state;
};

/// Distance between e^{i Jz pi/2}|psi> and the logical Fourier transform of
/// the Jx-basis encoding applied to |psi>, minimised over a global phase.
LogicalFourierResult logical_fourier_as_rotation(int N, const LogicalFourierConfig &config = {});
double logical_fourier_defect(int N, const SSRCState &psi,
                              FourierLabelling labelling = FourierLabelling::Logical);

struct CodeEmbedding {
    int N = 0;
    int k = 0;
    CMatrix isometry;  // (N+1) x k
    OperatorMatrix Zbar, Xbar, Fbar;

    /// isometry * op * isometry^dagger
    CMatrix lift(const OperatorMatrix &logical) const;
    /// isometry^dagger * psi
    CVector pull_back(const CVector &physical) const;
    DiscreteLattice wigner(const CVector &physical,
                           WeylConvention convention = WeylConvention::SymmetricHalf) const;
};

/// Throws EvenCodeDimension for even k, NonIsometric when columns are not
/// orthonormal to 1e-10.
CodeEmbedding embed_code(int N, int k, const CMatrix &isometry);

}  // namespace hwps

#endif  // HWPS_ENCODING_HPP
