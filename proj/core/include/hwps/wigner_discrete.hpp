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

// Discrete Wigner function on the d x d torus for odd d. Lattice points are
// (n, m) = (shift, phase); X|j> = |j+1>, Z|j> = omega^j |j>.

#ifndef HWPS_WIGNER_DISCRETE_HPP
#define HWPS_WIGNER_DISCRETE_HPP

#include <string>
#include <vector>

#include "hwps/numerics.hpp"

namespace hwps {

/// Weyl phase: SymmetricHalf uses omega^{2^{-1} n m}, Literal omega^{n m}.
enum class WeylConvention { SymmetricHalf, Literal };

std::string to_string(WeylConvention c);
WeylConvention weyl_convention_from_string(const std::string &s);

class QuditState {
  public:
    QuditState(int d, CVector amps);

    static QuditState basis(int d, int j);
    /// F|j> with F_{ab} = omega^{ab}/sqrt d.
    static QuditState fourier_basis(int d, int j);

    int d() const { return d_; }
    const CVector &amps() const { return amps_; }

  private:
    int d_;
    CVector amps_;
};

OperatorMatrix qudit_shift(int d);  // X
OperatorMatrix qudit_clock(int d);  // Z
OperatorMatrix qudit_fourier(int d);
/// diag(omega^{2^{-1} j^2}); odd d only.
OperatorMatrix qudit_quadratic_phase(int d);

class PhasePointSet {
  public:
    int d() const { return d_; }
    WeylConvention convention() const { return convention_; }
    const OperatorMatrix &weyl(int n, int m) const;
    const OperatorMatrix &point(int n, int m) const;

  private:
    friend PhasePointSet weyl_operators(int d, WeylConvention convention);
    int d_ = 0;
    WeylConvention convention_ = WeylConvention::SymmetricHalf;
    std::vector<OperatorMatrix> weyl_;    // index n*d + m
    std::vector<OperatorMatrix> points_;  // index n*d + m
};

/// T_{n,m} and Delta_{n,m} = T Delta_0 T^dagger with Delta_0 = (1/d) sum T.
/// Throws EvenDimension for even d and InvalidArgument for d < 3.
PhasePointSet weyl_operators(int d, WeylConvention convention = WeylConvention::SymmetricHalf);

struct DiscreteLattice {
    int d = 0;
    WeylConvention convention = WeylConvention::SymmetricHalf;
    RMatrix values;  // values(n, m)
    double imag_residue = 0.0;

    double total() const { return values.sum(); }
};

/// W(n, m) = (1/d) Tr[Delta_{n,m} rho]. Under SymmetricHalf an imaginary
/// part above 1e-9 throws ConventionCheckFailed; under Literal it is
/// only reported.
DiscreteLattice wigner_discrete(const CMatrix &rho, const PhasePointSet &pps);
DiscreteLattice wigner_discrete(const QuditState &psi, const PhasePointSet &pps);

/// sum max(0, -W).
double discrete_negativity(const DiscreteLattice &lattice);

struct CliffordViolation {
    std::string word;
    int basis_state = 0;
    double negativity = 0.0;
};

struct CliffordScanReport {
    int d = 0;
    int max_length = 0;
    std::vector<std::string> gates;
    std::size_t words = 0;
    std::size_t evaluations = 0;
    double max_negativity = 0.0;
    std::vector<CliffordViolation> violations;
};

inline constexpr double kStabilizerNegativityTolerance = 1e-10;

/// Applies every word of length <= max_length over `gates` (names "X", "Z",
/// "F", "P") to every computational basis state and records words whose
/// negativity exceeds 1e-10.
CliffordScanReport clifford_positivity_scan(int d, const std::vector<std::string> &gates,
                                            int max_length = 4,
                                            WeylConvention convention = WeylConvention::SymmetricHalf);

}  // namespace hwps

#endif  // HWPS_WIGNER_DISCRETE_HPP
