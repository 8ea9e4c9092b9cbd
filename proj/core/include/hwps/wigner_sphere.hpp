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

// Spherical Wigner function of a spin-N/2 system built from Clebsch-Gordan
// multipoles.

#ifndef HWPS_WIGNER_SPHERE_HPP
#define HWPS_WIGNER_SPHERE_HPP

#include <array>
#include <string>
#include <vector>

#include "hwps/fock.hpp"
#include "hwps/numerics.hpp"

namespace hwps {

/// Multipole prefactor p_l. Standard is sqrt((2l+1)/(N+1)); Printed is
/// sqrt((l+1)/(N+1)). Auto picks the first that passes the kernel axioms.
enum class KernelPrefactor { Auto, Standard, Printed };

/// Kernel conjugation. XAxis: G = e^{i Jz phi} e^{i Jx theta}.
/// YAxis: G = R(theta, phi) = e^{-i Jz phi} e^{-i Jy theta}.
enum class SphereOrientation { XAxis, YAxis };

std::string to_string(KernelPrefactor p);
std::string to_string(SphereOrientation o);
KernelPrefactor kernel_prefactor_from_string(const std::string &s);
SphereOrientation sphere_orientation_from_string(const std::string &s);

/// T_{l,k} = p_l sum_{m'} <j m'; l k | j m'+k> |m'+k><m'|. Only the k-th
/// diagonal is non-zero; band[i] is the entry in column i + max(k, 0).
struct Multipole {
    int l = 0;
    int k = 0;
    std::vector<double> band;

    CMatrix dense(int N) const;
};

struct SphericalKernelSet {
    int N = 0;
    KernelPrefactor prefactor = KernelPrefactor::Standard;  // resolved, never Auto
    SphereOrientation orientation = SphereOrientation::XAxis;
    OperatorMatrix delta0;             // diagonal, sum_l sqrt((2l+1)/(N+1)) T_{l,0}
    std::vector<Multipole> multipoles;  // ordered by (l, k)
    double trace_residual = 0.0;        // |Tr delta0 - 1|
    double orthonormality_residual = 0.0;  // max |Tr[T^dagger T'] - delta|
    bool axioms_ok = false;

    const Multipole &multipole(int l, int k) const;
};

inline constexpr double kSphereAxiomTolerance = 1e-8;

/// Throws ConventionCheckFailed when Auto finds no passing prefactor. An
/// explicit prefactor is always built; `axioms_ok` records the verdict.
SphericalKernelSet build_kernel(int N, KernelPrefactor prefactor = KernelPrefactor::Auto,
                                SphereOrientation orientation = SphereOrientation::XAxis);

/// The conjugating unitary G(theta, phi) of the selected orientation.
OperatorMatrix kernel_rotation(int N, SphereOrientation orientation, double theta, double phi);

/// Unit vector n with G Jz G^dagger = n . J.
std::array<double, 3> kernel_direction(SphereOrientation orientation, double theta, double phi);

/// Angles whose kernel direction is `n` (inverse of kernel_direction).
std::array<double, 2> kernel_angles(SphereOrientation orientation, const std::array<double, 3> &n);

/// G delta0 G^dagger.
OperatorMatrix kernel_at(const SphericalKernelSet &kernels, double theta, double phi);

struct SphereGridSpec {
    int n_theta = 0;  // 0 selects 2N+2 Gauss-Legendre nodes in cos(theta)
    int n_phi = 0;    // 0 selects 4N+4 uniform nodes
};

struct SphereGrid {
    int N = 0;
    std::vector<double> thetas;  // ascending
    std::vector<double> phis;
    RMatrix weights;  // steradian, rows theta, cols phi
    RMatrix values;   // W_S(theta_i, phi_j)
    double measure = 0.0;  // (N+1)/(4 pi)
    double imag_residue = 0.0;
    KernelPrefactor prefactor = KernelPrefactor::Standard;
    SphereOrientation orientation = SphereOrientation::XAxis;

    /// measure * sum weights * values
    double integral() const;
};

/// Values Re Tr[rho kernel_at(theta, phi)] on the quadrature grid.
/// Throws DimensionMismatch if rho and the kernel disagree on N, and
/// ConventionCheckFailed if an imaginary part above 1e-9 appears.
SphereGrid wigner_sphere(const DensityMatrix &rho, const SphericalKernelSet &kernels,
                         const SphereGridSpec &spec = {});

/// Same quadrature for any square matrix (used for traciality checks with
/// non-state Hermitian operators). Returns complex values.
Eigen::MatrixXcd wigner_sphere_operator(const CMatrix &op, const SphericalKernelSet &kernels,
                                        const std::vector<double> &thetas,
                                        const std::vector<double> &phis);

double wigner_sphere_at(const DensityMatrix &rho, const SphericalKernelSet &kernels,
                        double theta, double phi);

/// measure * sum weights * max(0, -value); values in (-1e-12, 0) count as 0.
double sphere_negativity(const SphereGrid &grid);

}  // namespace hwps

#endif  // HWPS_WIGNER_SPHERE_HPP
