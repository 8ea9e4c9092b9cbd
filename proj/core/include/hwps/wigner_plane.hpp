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

// Single-mode planar Wigner function on a truncated Fock space, with the
// quadrature x = (a + a^dagger)/2 (vacuum variance 1/4) and the parity
// kernel P0 = (1/4pi) int D(alpha) d^2 alpha = (1/2)(-1)^n.

#ifndef HWPS_WIGNER_PLANE_HPP
#define HWPS_WIGNER_PLANE_HPP

#include <vector>

#include "hwps/fock.hpp"
#include "hwps/numerics.hpp"

namespace hwps {

/// Scale c_P of P0 = c_P (-1)^n.
inline constexpr double kParityScale = 0.5;

/// Integral of W_P over the plane for any normalized state: pi/4.
inline constexpr double kPlaneNormalization = kPi / 4.0;

class TruncatedModeState {
  public:
    /// Requires sum |c_n|^2 in [1 - tail_bound, 1] (1e-12 slack above).
    TruncatedModeState(int n_max, CVector coeffs, double tail_bound = 0.0);

    static TruncatedModeState fock(int n_max, int n);
    /// Coherent amplitudes on n <= n_max; tail_bound is the discarded mass.
    static TruncatedModeState coherent(int n_max, Complex alpha);
    /// e^{-i r (a^2 + a'^2)/2}|0>, computed on a 4x larger space and cut back.
    static TruncatedModeState squeezed_vacuum(int n_max, double r);
    /// Coefficients of an SSRC state read as a single-mode state of mode a.
    static TruncatedModeState from_ssrc(const SSRCState &s);

    int n_max() const { return n_max_; }
    const CVector &coeffs() const { return coeffs_; }
    double tail_bound() const { return tail_bound_; }

    /// Zero-pads (or truncates, when the dropped mass is below 1e-15) to a
    /// new cutoff.
    TruncatedModeState resized(int n_max) const;
    /// sum |c_n|^2 over n > cutoff.
    double mass_above(int cutoff) const;

  private:
    int n_max_;
    CVector coeffs_;
    double tail_bound_;
};

/// D(alpha) = e^{alpha a' - alpha* a} as the exponential of the truncated
/// generator. Throws TruncationUnsafe when |alpha|^2 > n_max/4.
OperatorMatrix displacement(int n_max, Complex alpha);

/// c_P diag((-1)^n).
OperatorMatrix parity_kernel(int n_max);

/// (1/4pi) int <0|D(alpha)|0> d^2 alpha by radial Gauss-Legendre quadrature;
/// the oracle that fixes kParityScale.
double parity_scale_from_integral();

/// <m|D(beta)|n> for 0 <= m, n <= n_max, exact (untruncated) matrix
/// elements by recursion. Throws TruncationUnsafe when |beta| > 30, where
/// e^{-|beta|^2/2} underflows the recursion seed.
CMatrix displacement_elements(int n_max, Complex beta);

/// W_P(alpha) = Tr[rho D(alpha) P0 D(alpha)^dagger].
double wigner_plane_at(const TruncatedModeState &state, Complex alpha);

struct PlaneGridSpec {
    int nx = 201;
    int np = 201;
    double extent = 0.0;  // 0 selects sqrt(n_max)/2 + 3
};

struct PlaneGrid {
    int n_max = 0;
    std::vector<double> xs;
    std::vector<double> ps;
    double cell_area = 0.0;
    RMatrix values;  // rows x, cols p
    double normalization = kPlaneNormalization;

    double integral() const { return cell_area * values.sum(); }
};

PlaneGrid wigner_plane(const TruncatedModeState &state, const PlaneGridSpec &spec = {});

/// sum cell_area max(0, -value) / Z_W.
double plane_negativity(const PlaneGrid &grid);

}  // namespace hwps

#endif  // HWPS_WIGNER_PLANE_HPP
