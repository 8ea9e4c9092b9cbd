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

#include <algorithm>
#include <cmath>

#include "hwps/error.hpp"

namespace hwps {

namespace {

Complex omega_pow(int d, double k) { return std::polar(1.0, 2.0 * kPi * k / d); }

void require_dim(const OperatorMatrix &m, int N, const char *what) {
    if (m.dim() != N + 1) {
        throw DimensionMismatch(std::string(what) + " has dim " + std::to_string(m.dim()) +
                                ", expected " + std::to_string(N + 1));
    }
}

std::vector<int> logical_labels(int N) {
    const int d = N + 1;
    std::vector<int> out(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        out[static_cast<std::size_t>(n)] = N % 2 == 0 ? mod(N / 2 - n, d) : mod(-n, d);
    }
    return out;
}

// Permutation matrix sending logical label j to basis index n(j).
CMatrix label_to_index(const std::vector<int> &labels) {
    const auto d = static_cast<Eigen::Index>(labels.size());
    CMatrix p = CMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) p(n, labels[static_cast<std::size_t>(n)]) = 1.0;
    return p;
}

}  // namespace

OperatorMatrix fourier_operator(int N) {
    if (N < 0) throw InvalidArgument("fourier_operator: N must be non-negative");
    const int d = N + 1;
    CMatrix f(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) f(n, m) = s * omega_pow(d, static_cast<double>(mod(1LL * n * m, d)));
    }
    return OperatorMatrix(std::move(f), Tri::Unknown, Tri::Yes);
}

std::string to_string(KappaClass k) {
    switch (k) {
    case KappaClass::Identity:
        return "identity";
    case KappaClass::RotPiY:
        return "rot_pi_y";
    case KappaClass::Other:
        break;
    }
    return "other";
}

OperatorMatrix encoding_preset(const std::string &name, int N) {
    if (N < 0) throw InvalidArgument("encoding_preset: N must be non-negative");
    if (name == "identity") return OperatorMatrix::identity(N + 1);
    if (name == "rot_pi_y") return jx_eigenbasis(N);
    if (name == "theta_z_half") {
        if (N % 2 != 0) throw InvalidArgument("theta_z_half needs even N, got " + std::to_string(N));
        return relative_phase_shift(N).pow(N / 2);
    }
    throw InvalidArgument("unknown encoding preset '" + name + "'");
}

int EncodingSpec::index_of_label(int j) const {
    const auto it = std::find(logical_label.begin(), logical_label.end(), mod(j, d));
    return static_cast<int>(it - logical_label.begin());
}

EncodingSpec build_encoding(int N, const OperatorMatrix &K, const OperatorMatrix &U) {
    if (N < 0) throw InvalidArgument("build_encoding: N must be non-negative");
    require_dim(K, N, "K");
    require_dim(U, N, "U");
    for (const auto *m : {&K, &U}) {
        if (m->unitarity_defect() > tol::kUnitary) {
            throw NonUnitaryTransform(std::string(m == &K ? "K" : "U") +
                                      " is not unitary, defect " +
                                      std::to_string(m->unitarity_defect()));
        }
    }
    EncodingSpec enc;
    enc.N = N;
    enc.d = N + 1;
    const int d = enc.d;
    enc.K = OperatorMatrix(K.entries(), Tri::Unknown, Tri::Yes);
    enc.U = OperatorMatrix(U.entries(), Tri::Unknown, Tri::Yes);

    const auto z = relative_phase_Z(N);
    enc.odd_n_requires_care = z.odd_n_requires_care;
    const OperatorMatrix f = fourier_operator(N);
    enc.Z_U = z.op.conjugated_by(enc.U);
    enc.F_U = f.conjugated_by(enc.U);
    enc.X_U = enc.F_U.adjoint() * enc.Z_U * enc.F_U;
    enc.global_phase = omega_pow(d, 0.5 * N);
    enc.logical_label = logical_labels(N);

    enc.kappa = enc.K.adjoint() * enc.U;
    enc.kappa_identity_distance =
        phase_aligned_max_diff(enc.kappa.entries(), CMatrix::Identity(d, d));
    enc.kappa_rot_distance = phase_aligned_max_diff(enc.kappa.entries(), jx_eigenbasis(N).entries());
    if (enc.kappa_identity_distance <= kKappaTolerance) {
        enc.kappa_class = KappaClass::Identity;
    } else if (enc.kappa_rot_distance <= kKappaTolerance) {
        enc.kappa_class = KappaClass::RotPiY;
    }

    for (int j = 0; j < d; ++j) enc.basis.emplace_back(N, enc.U.entries().col(j));

    // Heisenberg-Weyl relation over every pair of powers.
    std::vector<CMatrix> xp{CMatrix::Identity(d, d)};
    std::vector<CMatrix> zp{CMatrix::Identity(d, d)};
    for (int k = 1; k <= d; ++k) {
        xp.push_back(xp.back() * enc.X_U.entries());
        zp.push_back(zp.back() * enc.Z_U.entries());
    }
    double hw = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const CMatrix lhs = xp[static_cast<std::size_t>(a)] * zp[static_cast<std::size_t>(b)];
            const CMatrix rhs = zp[static_cast<std::size_t>(b)] * xp[static_cast<std::size_t>(a)];
            hw = std::max(hw, max_abs_diff(lhs, omega_pow(d, -static_cast<double>(mod(1LL * a * b, d))) * rhs));
        }
    }
    enc.hw_defect = hw;
    const CMatrix &zd = zp.back();
    const CMatrix &xd = xp.back();
    enc.z_order_phase = zd.trace() / static_cast<double>(d);
    enc.x_order_phase = xd.trace() / static_cast<double>(d);
    enc.order_defect =
        std::max(max_abs_diff(zd, enc.z_order_phase * CMatrix::Identity(d, d)),
                 max_abs_diff(xd, enc.x_order_phase * CMatrix::Identity(d, d)));
    if (enc.hw_defect > 1e-9 || enc.order_defect > 1e-9) {
        throw HWRelationViolated("encoding N=" + std::to_string(N) + ": HW defect " +
                                 std::to_string(enc.hw_defect) + ", order defect " +
                                 std::to_string(enc.order_defect));
    }
    return enc;
}

EncodingSpec build_encoding(int N, const std::string &K_preset, const std::string &U_preset) {
    return build_encoding(N, encoding_preset(K_preset, N), encoding_preset(U_preset, N));
}

CVector logical_amplitudes(const EncodingSpec &enc, const SSRCState &physical) {
    if (physical.N() != enc.N) {
        throw DimensionMismatch("state N=" + std::to_string(physical.N()) + " in encoding N=" +
                                std::to_string(enc.N));
    }
    const CVector by_index = enc.U.entries().adjoint() * physical.coeffs();
    CVector out(enc.d);
    for (int n = 0; n < enc.d; ++n) out(enc.logical_label[static_cast<std::size_t>(n)]) = by_index(n);
    return out;
}

DiscreteLattice encoded_wigner(const EncodingSpec &enc, const SSRCState &physical,
                               WeylConvention convention) {
    const CVector amps = logical_amplitudes(enc, physical);
    return wigner_discrete(CMatrix(amps * amps.adjoint()), weyl_operators(enc.d, convention));
}

double logical_fourier_defect(int N, const SSRCState &psi, FourierLabelling labelling) {
    if (psi.N() != N) throw DimensionMismatch("logical_fourier_defect: state N mismatch");
    const OperatorMatrix v = jx_eigenbasis(N);
    CMatrix f = fourier_operator(N).entries();
    if (labelling == FourierLabelling::Logical) {
        const CMatrix p = label_to_index(logical_labels(N));
        f = p * f * p.transpose();
    }
    const CVector encoded = v.entries() * (f * (v.entries().adjoint() * psi.coeffs()));
    CVector rotated = psi.coeffs();
    for (int n = 0; n <= N; ++n) rotated(n) *= std::polar(1.0, 0.5 * kPi * 0.5 * (N - 2 * n));
    return phase_aligned_distance(rotated, encoded);
}

LogicalFourierResult logical_fourier_as_rotation(int N, const LogicalFourierConfig &config) {
    if (N < 0 || N % 2 != 0) throw InvalidArgument("logical_fourier_as_rotation needs even N");
    LogicalFourierResult out;
    out.N = N;
    std::vector<std::pair<std::string, SSRCState>> family;
    if (config.include_vacuum) family.emplace_back("vacuum", fock_state(N, 0));
    for (double a : config.coherent_alphas) {
        family.emplace_back("coherent:" + std::to_string(a), coherent_truncated(N, a));
    }
    for (const auto &[name, psi] : family) {
        if (config.enforce_cv && !cv_limit_indicator(psi, config.kappa).is_cv) continue;
        const double e = logical_fourier_defect(N, psi, config.labelling);
        out.states.push_back(name);
        out.per_state.push_back(e);
        out.defect = std::max(out.defect, e);
    }
    return out;
}

CMatrix CodeEmbedding::lift(const OperatorMatrix &logical) const {
    if (logical.dim() != k) throw DimensionMismatch("lift: logical operator dimension");
    return isometry * logical.entries() * isometry.adjoint();
}

CVector CodeEmbedding::pull_back(const CVector &physical) const {
    if (physical.size() != isometry.rows()) throw DimensionMismatch("pull_back: vector length");
    return isometry.adjoint() * physical;
}

DiscreteLattice CodeEmbedding::wigner(const CVector &physical, WeylConvention convention) const {
    const CVector a = pull_back(physical);
    return wigner_discrete(CMatrix(a * a.adjoint()), weyl_operators(k, convention));
}

CodeEmbedding embed_code(int N, int k, const CMatrix &isometry) {
    if (N < 0) throw InvalidArgument("embed_code: N must be non-negative");
    if (k < 1 || k > N + 1) throw InvalidArgument("embed_code: need 1 <= k <= N+1");
    if (k % 2 == 0) throw EvenCodeDimension("code dimension " + std::to_string(k) + " is even");
    if (isometry.rows() != N + 1 || isometry.cols() != k) {
        throw DimensionMismatch("isometry must be (N+1) x k");
    }
    const double defect = max_abs_diff(isometry.adjoint() * isometry, CMatrix::Identity(k, k));
    if (defect > 1e-10) throw NonIsometric("isometry defect " + std::to_string(defect));
    CodeEmbedding out;
    out.N = N;
    out.k = k;
    out.isometry = isometry;
    out.Zbar = qudit_clock(k);
    out.Fbar = qudit_fourier(k);
    out.Xbar = out.Fbar.adjoint() * out.Zbar * out.Fbar;
    return out;
}

}  // namespace hwps
