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
// Shared state of one CLI invocation and the per-command entry points.

#ifndef HWPS_TOOLS_CONTEXT_HPP
#define HWPS_TOOLS_CONTEXT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

#include "hwps/fock.hpp"
#include "hwps/wigner_discrete.hpp"
#include "hwps/wigner_sphere.hpp"

namespace hwps::cli {

using Json = nlohmann::ordered_json;

struct Conventions {
    WeylConvention weyl = WeylConvention::SymmetricHalf;
    KernelPrefactor prefactor = KernelPrefactor::Auto;
    SphereOrientation orientation = SphereOrientation::XAxis;
    double kappa = kDefaultKappa;
};

/// Parses "key=value" with keys weyl, prefactor, orientation, kappa.
void apply_convention(Conventions &c, const std::string &setting);

struct Context {
    std::vector<std::string> args;
    std::string command;
    std::uint64_t seed = 0;
    Conventions conventions;
    std::ostream *out = nullptr;
    std::ostream *err = nullptr;

    std::vector<std::string> manifest_lines() const;
    Json manifest_json() const;
    /// Writes atomically to `path`, or to stdout when it is empty or "-".
    void emit(const std::string &path, const std::string &text) const;
};

struct StateOptions {
    std::string family;
    int N = -1;
    int n = 0;
    int j = 0;
    double theta = 0.0;
    double phi = 0.0;
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    std::string U = "identity";
    std::string out;
};

struct WignerOptions {
    std::string geometry;
    std::string state_path;
    bool mixed = false;
    int N = -1;  // expected N (sphere, plane) or -1
    int d = -1;  // expected d (torus) or -1
    int n_theta = 0, n_phi = 0;
    int nx = 201, np = 201;
    double extent = 0.0;
    std::string K = "identity";
    std::string U = "identity";
    std::string out;
    std::string summary;
};

struct EncodeOptions {
    int N = -1;
    std::string K = "identity";
    std::string U = "identity";
    std::string out;
    std::string basis_out;
};

struct VerifyOptions {
    std::string suite;
    int N = 8;
    std::vector<int> d;
    bool quick = false;
    int max_length = 4;
    std::string out;
};

struct SweepOptions {
    std::string config;
    std::string out;
};

int cmd_state(const Context &ctx, const StateOptions &o);
int cmd_wigner(const Context &ctx, const WignerOptions &o);
int cmd_encode(const Context &ctx, const EncodeOptions &o);
int cmd_verify(const Context &ctx, const VerifyOptions &o);
int cmd_sweep(const Context &ctx, const SweepOptions &o);

/// Preset name or a matrix JSON file path.
OperatorMatrix load_transform(const std::string &spec, int N);

}  // namespace hwps::cli

#endif  // HWPS_TOOLS_CONTEXT_HPP
