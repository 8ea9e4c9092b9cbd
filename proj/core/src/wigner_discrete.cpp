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

#include "hwps/wigner_discrete.hpp"

#include <algorithm>
#include <cmath>

#include "hwps/error.hpp"

namespace hwps {

std::string to_string(WeylConvention c) {
    return c == WeylConvention::SymmetricHalf ? "symmetric-half" : "paper-literal";
}

WeylConvention weyl_convention_from_string(const std::string &s) {
    if (s == "symmetric-half" || s == "symmetric") return WeylConvention::SymmetricHalf;
    if (s == "paper-literal" || s == "literal") return WeylConvention::Literal;
    throw ParseError("unknown Weyl convention '" + s + "'");
}

namespace {

void require_odd(int d) {
    if (d < 3) throw InvalidArgument("qudit dimension must be at least 3, got " + std::to_string(d));
    if (d % 2 == 0) throw EvenDimension("qudit dimension " + std::to_string(d) + " is even");
}

Complex omega_pow(int d, long long k) { return std::polar(1.0, 2.0 * kPi * mod(k, d) / d); }

}  // namespace

QuditState::QuditState(int d, CVector amps) : d_(d), amps_(std::move(amps)) {
    if (d < 1) throw InvalidArgument("QuditState: d must be positive");
    if (amps_.size() != d) throw InvalidState("QuditState: expected " + std::to_string(d) + " amplitudes");
    if (std::abs(amps_.squaredNorm() - 1.0) > 1e-10) {
        throw InvalidState("QuditState not normalized: " + std::to_string(amps_.squaredNorm()));
    }
}

QuditState QuditState::basis(int d, int j) {
    if (d < 1 || j < 0 || j >= d) throw OutOfRange("qudit basis index " + std::to_string(j));
    CVector a = CVector::Zero(d);
    a(j) = 1.0;
    return QuditState(d, std::move(a));
}

QuditState QuditState::fourier_basis(int d, int j) {
    if (d < 1 || j < 0 || j >= d) throw OutOfRange("qudit basis index " + std::to_string(j));
    return QuditState(d, qudit_fourier(d).entries().col(j));
}

OperatorMatrix qudit_shift(int d) {
    if (d < 1) throw InvalidArgument("qudit_shift: d must be positive");
    CMatrix x = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
    return OperatorMatrix(std::move(x), Tri::Unknown, Tri::Yes);
}

OperatorMatrix qudit_clock(int d) {
    if (d < 1) throw InvalidArgument("qudit_clock: d must be positive");
    CVector z(d);
    for (int j = 0; j < d; ++j) z(j) = omega_pow(d, j);
    return OperatorMatrix::diagonal(z, Tri::Unknown, Tri::Yes);
}

OperatorMatrix qudit_fourier(int d) {
    if (d < 1) throw InvalidArgument("qudit_fourier: d must be positive");
    CMatrix f(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) f(a, b) = s * omega_pow(d, static_cast<long long>(a) * b);
    }
    return OperatorMatrix(std::move(f), Tri::Unknown, Tri::Yes);
}

OperatorMatrix qudit_quadratic_phase(int d) {
    require_odd(d);
    const int half = mod_inverse(2, d);
    CVector p(d);
    for (int j = 0; j < d; ++j) p(j) = omega_pow(d, static_cast<long long>(half) * j * j);
    return OperatorMatrix::diagonal(p, Tri::Unknown, Tri::Yes);
}

const OperatorMatrix &PhasePointSet::weyl(int n, int m) const {
    return weyl_[static_cast<std::size_t>(mod(n, d_) * d_ + mod(m, d_))];
}

const OperatorMatrix &PhasePointSet::point(int n, int m) const {
    return points_[static_cast<std::size_t>(mod(n, d_) * d_ + mod(m, d_))];
}

PhasePointSet weyl_operators(int d, WeylConvention convention) {
    require_odd(d);
    PhasePointSet out;
    out.d_ = d;
    out.convention_ = convention;
    const int c = convention == WeylConvention::SymmetricHalf ? mod_inverse(2, d) : 1;
    const OperatorMatrix x = qudit_shift(d);
    const OperatorMatrix z = qudit_clock(d);
    std::vector<OperatorMatrix> xp, zp;
    for (int k = 0; k < d; ++k) {
        xp.push_back(x.pow(k));
        zp.push_back(z.pow(k));
    }
    CMatrix delta0 = CMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
            OperatorMatrix t = omega_pow(d, static_cast<long long>(c) * n * m) *
                               (xp[static_cast<std::size_t>(n)] * zp[static_cast<std::size_t>(m)]);
            delta0 += t.entries();
            out.weyl_.push_back(std::move(t));
        }
    }
    delta0 /= static_cast<double>(d);
    const OperatorMatrix d0(std::move(delta0));
    for (const auto &t : out.weyl_) out.points_.push_back(d0.conjugated_by(t));
    return out;
}

DiscreteLattice wigner_discrete(const CMatrix &rho, const PhasePointSet &pps) {
    const int d = pps.d();
    if (rho.rows() != d || rho.cols() != d) {
        throw DimensionMismatch("density matrix of dim " + std::to_string(rho.rows()) +
                                " against a d=" + std::to_string(d) + " phase-point set");
    }
    DiscreteLattice out;
    out.d = d;
    out.convention = pps.convention();
    out.values.resize(d, d);
    for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
            // Tr[A rho] = sum_ab A_ab rho_ba
            const Complex w = pps.point(n, m).entries().cwiseProduct(rho.transpose()).sum() /
                              static_cast<double>(d);
            out.values(n, m) = w.real();
            out.imag_residue = std::max(out.imag_residue, std::abs(w.imag()));
        }
    }
    if (pps.convention() == WeylConvention::SymmetricHalf && out.imag_residue > 1e-9) {
        throw ConventionCheckFailed("discrete Wigner imaginary residue " +
                                    std::to_string(out.imag_residue));
    }
    return out;
}

DiscreteLattice wigner_discrete(const QuditState &psi, const PhasePointSet &pps) {
    return wigner_discrete(CMatrix(psi.amps() * psi.amps().adjoint()), pps);
}

double discrete_negativity(const DiscreteLattice &lattice) {
    double neg = 0.0;
    for (Eigen::Index i = 0; i < lattice.values.size(); ++i) {
        neg += std::max(0.0, -lattice.values.data()[i]);
    }
    return neg;
}

CliffordScanReport clifford_positivity_scan(int d, const std::vector<std::string> &gates,
                                            int max_length, WeylConvention convention) {
    require_odd(d);
    if (max_length < 0) throw InvalidArgument("clifford_positivity_scan: negative word length");
    std::vector<OperatorMatrix> ops;
    for (const auto &g : gates) {
        if (g == "X") ops.push_back(qudit_shift(d));
        else if (g == "Z") ops.push_back(qudit_clock(d));
        else if (g == "F") ops.push_back(qudit_fourier(d));
        else if (g == "P") ops.push_back(qudit_quadratic_phase(d));
        else throw InvalidArgument("unknown Clifford gate '" + g + "'");
    }
    const PhasePointSet pps = weyl_operators(d, convention);
    CliffordScanReport report;
    report.d = d;
    report.max_length = max_length;
    report.gates = gates;

    // Breadth-first over words; each level extends the previous one.
    struct Word {
        std::string name;
        CMatrix u;
    };
    std::vector<Word> level{{"", CMatrix::Identity(d, d)}};
    const int depth = gates.empty() ? 0 : max_length;
    for (int len = 0; len <= depth; ++len) {
        for (const auto &w : level) {
            ++report.words;
            for (int j = 0; j < d; ++j) {
                const CVector psi = w.u.col(j);
                const double neg = discrete_negativity(
                    wigner_discrete(CMatrix(psi * psi.adjoint()), pps));
                ++report.evaluations;
                report.max_negativity = std::max(report.max_negativity, neg);
                if (neg > kStabilizerNegativityTolerance) {
                    report.violations.push_back({w.name.empty() ? "I" : w.name, j, neg});
                }
            }
        }
        if (len == depth) break;
        std::vector<Word> next;
        next.reserve(level.size() * ops.size());
        for (const auto &w : level) {
            for (std::size_t g = 0; g < ops.size(); ++g) {
                // Words read left to right in application order.
                next.push_back({w.name + gates[g], ops[g].entries() * w.u});
            }
        }
        level = std::move(next);
    }
    return report;
}

}  // namespace hwps
