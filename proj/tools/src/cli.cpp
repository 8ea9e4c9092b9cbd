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
#include "cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "context.hpp"
#include "hwps/error.hpp"
#include "hwps/io.hpp"

#ifndef HWPS_VERSION
#define HWPS_VERSION "unknown"
#endif

namespace hwps::cli {

void apply_convention(Conventions &c, const std::string &setting) {
    const auto eq = setting.find('=');
    if (eq == std::string::npos) {
        throw ParseError("--convention expects key=value, got '" + setting + "'");
    }
    const std::string key = setting.substr(0, eq), value = setting.substr(eq + 1);
    if (key == "weyl") {
        c.weyl = weyl_convention_from_string(value);
    } else if (key == "prefactor") {
        c.prefactor = kernel_prefactor_from_string(value);
    } else if (key == "orientation") {
        c.orientation = sphere_orientation_from_string(value);
    } else if (key == "kappa") {
        std::size_t used = 0;
        double k = 0.0;
        try {
            k = std::stod(value, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != value.size() || !(k > 0.0)) throw ParseError("kappa must be a positive number");
        c.kappa = k;
    } else {
        throw ParseError("unknown convention key '" + key + "'");
    }
}

std::vector<std::string> Context::manifest_lines() const {
    std::string cmdline = "hwps";
    for (const auto &a : args) cmdline += " " + a;
    return {
        std::string("tool: hwps ") + HWPS_VERSION,
        "command: " + cmdline,
        "seed: " + std::to_string(seed),
        "convention: weyl=" + to_string(conventions.weyl) +
            " prefactor=" + to_string(conventions.prefactor) +
            " orientation=" + to_string(conventions.orientation) +
            " kappa=" + io::format_double(conventions.kappa),
    };
}

Json Context::manifest_json() const {
    Json m;
    m["tool"] = "hwps";
    m["version"] = HWPS_VERSION;
    m["command"] = command;
    m["args"] = args;
    m["seed"] = seed;
    m["convention"] = {{"weyl", to_string(conventions.weyl)},
                       {"prefactor", to_string(conventions.prefactor)},
                       {"orientation", to_string(conventions.orientation)},
                       {"kappa", conventions.kappa}};
    return m;
}

void Context::emit(const std::string &path, const std::string &text) const {
    if (path.empty() || path == "-") {
        *out << text;
        return;
    }
    io::write_file_atomic(path, text);
}

namespace {

int exit_code_for(const Error &e) {
    if (dynamic_cast<const DimensionMismatch *>(&e) || dynamic_cast<const EvenDimension *>(&e)) {
        return kDimensionMismatch;
    }
    if (dynamic_cast<const HWRelationViolated *>(&e) || dynamic_cast<const NonUnitaryTransform *>(&e) ||
        dynamic_cast<const ConventionCheckFailed *>(&e) || dynamic_cast<const NonIsometric *>(&e) ||
        dynamic_cast<const EvenCodeDimension *>(&e)) {
        return kConstructionFailed;
    }
    return kBadInput;
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw ParseError("bad integer list '" + s + "'");
        v.push_back(x);
    }
    return v;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Context ctx;
    ctx.args = args;
    ctx.out = &out;
    ctx.err = &err;

    CLI::App app{"Phase-space representations of two-mode bosonic states with fixed photon number", "hwps"};
    app.require_subcommand(1);
    app.fallthrough();
    std::vector<std::string> conventions;
    app.add_option("--convention", conventions,
                   "key=value: weyl (symmetric-half|paper-literal), prefactor (auto|standard|printed), "
                   "orientation (x-axis|y-axis), kappa (CV threshold)");
    app.set_version_flag("--version", std::string("hwps ") + HWPS_VERSION);

    StateOptions so;
    auto *state = app.add_subcommand("state", "write a normalized two-mode state as JSON");
    state->add_option("--family", so.family, "fock|spin-coherent|coherent-truncated|qudit-basis|random-pure")
        ->required();
    state->add_option("--N", so.N, "total photon number")->required();
    state->add_option("--n", so.n, "photons in mode a (fock)");
    state->add_option("--j", so.j, "logical label (qudit-basis)");
    state->add_option("--theta", so.theta, "polar angle (spin-coherent)");
    state->add_option("--phi", so.phi, "azimuth (spin-coherent)");
    state->add_option("--alpha-re", so.alpha_re, "coherent amplitude, real part");
    state->add_option("--alpha-im", so.alpha_im, "coherent amplitude, imaginary part");
    state->add_option("--U", so.U, "code transform for qudit-basis (preset or matrix file)");
    state->add_option("--seed", ctx.seed, "random-pure seed");
    state->add_option("-o,--out", so.out, "output path (default stdout)");

    WignerOptions wo;
    auto *wigner = app.add_subcommand("wigner", "evaluate a Wigner function onto a CSV grid");
    wigner->add_option("geometry", wo.geometry, "sphere|plane|torus")
        ->required()
        ->check(CLI::IsMember({"sphere", "plane", "torus"}));
    wigner->add_option("--state", wo.state_path, "state JSON file");
    wigner->add_flag("--mixed", wo.mixed, "maximally mixed state (sphere, torus); needs --N or --d");
    wigner->add_option("--N", wo.N, "expected total photon number");
    wigner->add_option("--d", wo.d, "expected qudit dimension (torus)");
    wigner->add_option("--n-theta", wo.n_theta, "sphere: Gauss-Legendre nodes (0 = 2N+2)");
    wigner->add_option("--n-phi", wo.n_phi, "sphere: azimuthal nodes (0 = 4N+4)");
    wigner->add_option("--nx", wo.nx, "plane: x nodes");
    wigner->add_option("--np", wo.np, "plane: p nodes");
    wigner->add_option("--extent", wo.extent, "plane: half-width (0 = sqrt(n_max)/2 + 3)");
    wigner->add_option("--K", wo.K, "torus: physical transform");
    wigner->add_option("--U", wo.U, "torus: code transform");
    wigner->add_option("-o,--out", wo.out, "CSV path (default stdout)");
    wigner->add_option("--summary", wo.summary, "summary JSON path (default <out>.summary.json)");

    EncodeOptions eo;
    auto *encode = app.add_subcommand("encode", "build an encoding and report its checks");
    encode->add_option("--N", eo.N, "total photon number")->required();
    encode->add_option("--K", eo.K, "physical transform: identity|rot_pi_y|theta_z_half|<matrix.json>");
    encode->add_option("--U", eo.U, "code transform: identity|rot_pi_y|theta_z_half|<matrix.json>");
    encode->add_option("-o,--out", eo.out, "report path (default stdout)");
    encode->add_option("--basis-out", eo.basis_out, "write the computational basis as JSON");

    VerifyOptions vo;
    std::string d_list;
    auto *verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", vo.suite, "sw-axioms|hw-relations|hudson|appendices")
        ->required()
        ->check(CLI::IsMember({"sw-axioms", "hw-relations", "hudson", "appendices"}));
    verify->add_option("--N", vo.N, "sw-axioms: largest N");
    verify->add_option("--d", d_list, "comma-separated odd dimensions");
    verify->add_flag("--quick", vo.quick, "smaller sizes");
    verify->add_option("--max-length", vo.max_length, "hudson: Clifford word length");
    verify->add_option("--seed", ctx.seed, "seed for random test inputs");
    verify->add_option("-o,--out", vo.out, "report path (default stdout)");

    SweepOptions wo2;
    auto *sweep = app.add_subcommand("sweep", "run a convergence sweep from a JSON config");
    sweep->add_option("config", wo2.config, "config file")->required();
    sweep->add_option("-o,--out", wo2.out, "CSV path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        for (const auto &c : conventions) apply_convention(ctx.conventions, c);
        if (*state) {
            ctx.command = "state";
            return cmd_state(ctx, so);
        }
        if (*wigner) {
            ctx.command = "wigner";
            return cmd_wigner(ctx, wo);
        }
        if (*encode) {
            ctx.command = "encode";
            return cmd_encode(ctx, eo);
        }
        if (*verify) {
            ctx.command = "verify";
            if (!d_list.empty()) vo.d = parse_int_list(d_list);
            return cmd_verify(ctx, vo);
        }
        if (*sweep) {
            ctx.command = "sweep";
            return cmd_sweep(ctx, wo2);
        }
    } catch (const Error &e) {
        err << "hwps: " << e.category() << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        err << "hwps: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace hwps::cli
