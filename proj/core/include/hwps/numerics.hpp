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

// Dense complex linear algebra used throughout the toolkit: an operator
// wrapper with structural flags, Hermitian eigendecomposition, unitary
// exponentials of Hermitian generators, log-space combinatorics,
// Clebsch-Gordan coefficients and Gauss-Legendre quadrature.

#ifndef HWPS_NUMERICS_HPP
#define HWPS_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hwps {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Tolerance ladder shared by every module.
namespace tol {
inline constexpr double kStructural = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kSpectral = 1e-9;
}  // namespace tol

/// Tri-state structural flag.
enum class Tri : std::uint8_t { No, Yes, Unknown };

std::string to_string(Tri t);

/// Dense square complex matrix with cached structural flags.
///
/// Flags are fixed at construction. A `Tri::Yes` claim is verified against
/// the tolerance ladder (hermitian: max |A - A^dagger| <= 1e-12 relative to
/// the largest entry; unitary: max |A^dagger A - 1| <= 1e-10) and rejected
/// with NonHermitianInput / NonUnitaryTransform if it does not hold.
class OperatorMatrix {
  public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(CMatrix entries, Tri hermitian = Tri::Unknown,
                            Tri unitary = Tri::Unknown);

    static OperatorMatrix identity(int dim);
    static OperatorMatrix zero(int dim);
    static OperatorMatrix diagonal(const CVector &diag, Tri hermitian = Tri::Unknown,
                                   Tri unitary = Tri::Unknown);
    /// Builds the matrix and evaluates both flags.
    static OperatorMatrix classified(CMatrix entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const CMatrix &entries() const { return entries_; }
    Complex operator()(int row, int col) const { return entries_(row, col); }

    Tri hermitian() const { return hermitian_; }
    Tri unitary() const { return unitary_; }

    /// max |A - A^dagger| entry.
    double hermiticity_defect() const;
    /// max |A^dagger A - 1| entry.
    double unitarity_defect() const;

    OperatorMatrix adjoint() const;
    /// g * this * g^dagger
    OperatorMatrix conjugated_by(const OperatorMatrix &g) const;
    OperatorMatrix pow(int exponent) const;
    Complex trace() const { return entries_.trace(); }

    CVector apply(const CVector &v) const;

    friend OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator*(Complex s, const OperatorMatrix &a);

  private:
    CMatrix entries_;
    Tri hermitian_ = Tri::Unknown;
    Tri unitary_ = Tri::Unknown;
};

/// max_ij |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// min over phi of max_ij |a_ij - e^{i phi} b_ij|, with phi taken from the
/// Frobenius inner product (exact minimiser of the Frobenius distance).
double phase_aligned_max_diff(const CMatrix &a, const CMatrix &b);

/// min over phi of || a - e^{i phi} b ||_2 (closed form via <b, a>).
double phase_aligned_distance(const CVector &a, const CVector &b);

struct HermitianEig {
    RVector eigenvalues;        // ascending
    OperatorMatrix eigenvectors;  // columns; unitary
};

/// Eigendecomposition of a Hermitian matrix. Throws NonHermitianInput when
/// the symmetry defect exceeds 1e-12 (relative to the largest entry).
HermitianEig hermitian_eig(const OperatorMatrix &a);

/// e^{i t A} = V diag(e^{i t lambda}) V^dagger for Hermitian A.
OperatorMatrix expi_hermitian(const OperatorMatrix &a, double t);
OperatorMatrix expi_from_eig(const HermitianEig &eig, double t);

/// Eigensystem of a real symmetric tridiagonal matrix.
struct TridiagonalEig {
    RVector eigenvalues;   // ascending
    RMatrix eigenvectors;  // orthonormal columns, arbitrary signs
};

/// `diag` has length n, `offdiag` length n-1.
TridiagonalEig symmetric_tridiagonal_eig(std::span<const double> diag,
                                         std::span<const double> offdiag);

/// Q diag(e^{i t lambda}) Q^T v without forming the dense exponential.
CVector expi_tridiagonal_apply(const TridiagonalEig &eig, double t, const CVector &v);

/// Dense e^{i t T} from a tridiagonal eigensystem.
CMatrix expi_tridiagonal(const TridiagonalEig &eig, double t);

/// Table of ln(n!) for 0 <= n <= max_n.
class LogFactorialTable {
  public:
    explicit LogFactorialTable(int max_n);

    int max_n() const { return static_cast<int>(values_.size()) - 1; }
    double operator()(int n) const;
    std::span<const double> values() const { return values_; }

  private:
    std::vector<double> values_;
};

/// Process-wide table (max_n = 65535), built once on first use.
const LogFactorialTable &log_factorials();

double log_factorial(int n);

/// ln C(n, k). Throws OutOfRange unless 0 <= k <= n <= max_n.
double log_binomial(int n, int k);

/// A half-integer stored as twice its value.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_int(int v) { return HalfInt{2 * v}; }
    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    double value() const { return 0.5 * twice; }
    bool is_integer() const { return twice % 2 == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
};

/// <j1 m1; j2 m2 | J M> in the Condon-Shortley convention, from Racah's
/// closed form summed in log space with explicit signs. Returns 0 when
/// M != m1 + m2; throws InvalidAngularMomenta for inconsistent labels.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Sum of terms given as (log|t|, sign) pairs, scaled by the largest
/// magnitude and accumulated pairwise. Returns (log|sum|, sign); sign is 0
/// for an exactly vanishing sum.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 0;
    double value() const;
};
SignedLog signed_log_sum(std::span<const SignedLog> terms);

double pairwise_sum(std::span<const double> values);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Multiplicative inverse of a modulo m (gcd must be 1).
int mod_inverse(int a, int m);

/// Non-negative remainder.
constexpr int mod(long long a, int m) {
    const long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace hwps

#endif  // HWPS_NUMERICS_HPP
