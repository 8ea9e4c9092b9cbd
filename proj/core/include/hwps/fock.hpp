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

// Two-mode states with fixed total photon number N. Vectors and matrices use
// the basis |n>_a |N-n>_b ordered by n ascending; the spin view is j = N/2
// with Jz eigenvalue (N-2n)/2 on basis vector n.

#ifndef HWPS_FOCK_HPP
#define HWPS_FOCK_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hwps/numerics.hpp"

namespace hwps {

/// Pure state sum_n c_n |n>_a |N-n>_b.
class SSRCState {
  public:
    /// Validates length N+1 and unit norm to `norm_tolerance`.
    SSRCState(int N, CVector coeffs, double norm_tolerance = 1e-10);

    /// Rescales to unit norm; throws InvalidState on a zero vector.
    static SSRCState normalized(int N, CVector coeffs);

    int N() const { return N_; }
    int dim() const { return N_ + 1; }
    const CVector &coeffs() const { return coeffs_; }
    Complex operator[](int n) const { return coeffs_(n); }

  private:
    int N_;
    CVector coeffs_;
};

class DensityMatrix {
  public:
    /// Checks hermiticity (1e-12), unit trace (1e-10) and eigenvalues >= -1e-9.
    DensityMatrix(int N, OperatorMatrix rho);

    static DensityMatrix pure(const SSRCState &psi);
    static DensityMatrix maximally_mixed(int N);

    int N() const { return N_; }
    int dim() const { return N_ + 1; }
    const OperatorMatrix &rho() const { return rho_; }

  private:
    int N_;
    OperatorMatrix rho_;
};

enum class ModeBasis { Z, X, KTransformed };

struct ModeBasisLabel {
    ModeBasis kind = ModeBasis::Z;
    std::optional<OperatorMatrix> K;

    /// Throws NonUnitaryTransform when K is present and not unitary, and
    /// InvalidArgument when K is present for a non-K kind or missing for one.
    void validate() const;
};

std::string to_string(ModeBasis b);
ModeBasis mode_basis_from_string(const std::string &s);

struct SchwingerOperators {
    OperatorMatrix Jx, Jy, Jz;
};

/// Jz = (b'b - a'a)/2, Jx = (a'b + b'a)/2, Jy = (i/2)(a'b - b'a).
SchwingerOperators schwinger_operators(int N);

/// R(theta, phi) = e^{-i Jz phi} e^{-i Jy theta}.
OperatorMatrix rotation(int N, double theta, double phi);

/// Spectral data of Jx for one N, reused for O(N^2) vector actions at large
/// N where dense exponentials are too expensive.
class JxSpectrum {
  public:
    explicit JxSpectrum(int N);

    int N() const { return N_; }
    const TridiagonalEig &eig() const { return eig_; }

    CVector expi_jx(double t, const CVector &v) const;
    /// e^{i t Jy} v, using Jy = e^{-i Jz pi/2} Jx e^{i Jz pi/2}.
    CVector expi_jy(double t, const CVector &v) const;
    /// Dense e^{i t Jy}; real for every t.
    RMatrix expi_jy_dense(double t) const;

  private:
    int N_;
    TridiagonalEig eig_;
};

/// Closed-form binomial amplitudes of R(theta, phi)|0>_a|N>_b, in log space.
SSRCState spin_coherent(int N, double theta, double phi);

struct RelativePhaseOperator {
    OperatorMatrix op;
    /// Set for odd N (even d = N+1); the constructions assume odd d.
    bool odd_n_requires_care = false;
};

/// Z = e^{i Jz 2 pi/(N+1)} = diag(omega^{(N-2n)/2}).
RelativePhaseOperator relative_phase_Z(int N);

/// X = F^dagger Z F = omega^{N/2} * (|n> -> |n-1 mod d>).
RelativePhaseOperator relative_phase_X(int N);

/// The explicit forward ladder sum_n |n+1><n| + |0><N|.
OperatorMatrix relative_phase_shift(int N);

/// Columns |n>_{a_x}|N-n>_{b_x}: Jx eigenvalue (N-2n)/2, real, first
/// component positive. Equals R(pi/2, 0) diag((-1)^n).
OperatorMatrix jx_eigenbasis(int N);

/// Largest N accepted by basis_change_formula.
inline constexpr int kBasisChangeMaxN = 300;

/// z-basis coefficients of |n>_{a_x}|N-n>_{b_x} from the closed double sum
/// over (m, k), accumulated pairwise in 100-digit floating point per output
/// component. Throws OverflowRisk for N > kBasisChangeMaxN.
CVector basis_change_formula(int N, int n);

/// Binomial(N, 1/2) mass inside [N/2 - sqrt N, N/2 + sqrt N].
double binomial_width_check(int N);

struct CVIndicator {
    double mean_na = 0.0;
    double threshold = 0.0;
    bool is_cv = false;
};

inline constexpr double kDefaultKappa = 0.1;

/// mean_na = sum n |c_n|^2, is_cv = mean_na <= kappa sqrt N.
CVIndicator cv_limit_indicator(const SSRCState &state, double kappa = kDefaultKappa);

SSRCState fock_state(int N, int n);

/// Truncated coherent amplitudes e^{-|a|^2/2} a^k / sqrt(k!), k <= N,
/// renormalized.
SSRCState coherent_truncated(int N, Complex alpha);

/// Haar-like random state from complex Gaussian amplitudes.
SSRCState random_pure(int N, std::uint64_t seed);

}  // namespace hwps

#endif  // HWPS_FOCK_HPP
