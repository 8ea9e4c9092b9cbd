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

// Finite-N experiments for the large-N contraction of the two-mode space to
// a single mode: rotated Fock states vs coherent states, rotations vs
// displacements, the Jx-basis shift vs a momentum kick, and the relative
// phase shift vs its truncated (Pegg-Barnett-like) ladder.

#ifndef HWPS_CVLIMIT_HPP
#define HWPS_CVLIMIT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hwps/numerics.hpp"
#include "hwps/wigner_plane.hpp"

namespace hwps {

enum class Experiment { CoherentLimit, RotationDisplacement, XxDisplacement, PeggBarnett };
enum class ErrorMetric { VectorNormDeficit, SquaredNormDeficit, OneMinusFidelity };

std::string to_string(Experiment e);
std::string to_string(ErrorMetric m);
Experiment experiment_from_string(const std::string &s);

struct ConvergenceRecord {
    Experiment experiment = Experiment::CoherentLimit;
    int N = 0;
    std::map<std::string, double> params;
    std::string state_family;
    double error = 0.0;
    ErrorMetric metric = ErrorMetric::VectorNormDeficit;
    bool failed = false;
    std::string failure;  // error category and message
    std::optional<bool> monotone;  // set by run_sweep per parameter point
};

/// Sum_{n <= cutoff} |n+1><n| with cutoff = floor(sqrt N), acting on the
/// (N+1)-dimensional space.
class PeggBarnettOperator {
  public:
    explicit PeggBarnettOperator(int N);

    int N() const { return N_; }
    int cutoff() const { return cutoff_; }
    CVector apply(const CVector &v) const;
    /// Diagonal of P^dagger P: 1 for n <= cutoff, 0 above.
    RVector gram_diagonal() const;
    CMatrix dense() const;

  private:
    int N_;
    int cutoff_;
};

/// 1 - |<coherent_truncated(N, alpha) | spin_coherent(N, theta(alpha, N), arg alpha)>|^2
/// with theta = 2 arccos sqrt(1 - |alpha|^2/N). Throws AlphaTooLarge when
/// |alpha|^2 >= N.
ConvergenceRecord coherent_limit_error(int N, Complex alpha);

/// || e^{i Jx q/sqrt N} psi - e^{i q x} psi ||, phase aligned, both in the
/// (N+1)-dimensional embedding. Throws OutsideCVRegime for q > 0.1 sqrt N,
/// tail_bound > 1e-10 or n_max > N.
ConvergenceRecord rotation_displacement_error(int N, double q, const TruncatedModeState &state);

/// || X_x psi - e^{i c p} psi ||, phase aligned, with X_x the forward shift
/// conjugated into the Jx eigenbasis and c = sqrt(kick_scale / N) (the
/// default kick_scale = 2 gives sqrt(2/N)). Throws OutsideCVRegime unless
/// the embedded state passes cv_limit_indicator with threshold `kappa`.
ConvergenceRecord xx_displacement_error(int N, const TruncatedModeState &state,
                                        double kick_scale = 2.0, double kappa = kDefaultKappa);

/// || S psi - P psi ||^2 with S the forward relative-phase shift and P the
/// Pegg-Barnett ladder. Equals the mass above the cutoff. Reports the zero
/// multiplicity of P^dagger P in params["gram_zero_multiplicity"].
ConvergenceRecord pegg_barnett_compare(int N, const TruncatedModeState &state,
                                       double kappa = kDefaultKappa);

/// State families used by sweeps: alpha = 0 is the vacuum, otherwise a
/// coherent state with amplitude alpha (+ i alpha_im) on a cutoff large
/// enough for a 1e-16 tail.
TruncatedModeState family_state(int N, Complex alpha);
int family_cutoff(int N, Complex alpha);

/// Parameter grid: each key maps to the values swept; the Cartesian product
/// is taken. Recognised keys: alpha, alpha_im, q, kick_scale.
using ParamGrid = std::map<std::string, std::vector<double>>;

/// Runs every (params, N) point concurrently (thread count from the
/// HWPS_THREADS environment variable, default hardware concurrency). Errors
/// become failed records. Output sorted by (params, N); `monotone` is true
/// when the non-failed errors strictly decrease with N at that point.
/// `kappa` is the CV-regime threshold handed to the experiments that check it.
std::vector<ConvergenceRecord> run_sweep(Experiment experiment, const std::vector<int> &N_list,
                                         const ParamGrid &grid, double kappa = kDefaultKappa);

/// Default parameter point of each experiment (alpha = 1, q = 0.5).
ParamGrid default_params(Experiment experiment);

}  // namespace hwps

#endif  // HWPS_CVLIMIT_HPP
