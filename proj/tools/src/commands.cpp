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
#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>

#include "context.hpp"
#include "hwps/cvlimit.hpp"
#include "hwps/encoding.hpp"
#include "hwps/error.hpp"
#include "hwps/io.hpp"
#include "hwps/wigner_plane.hpp"

namespace hwps::cli {

namespace {

Json pair(Complex z) { return Json::array({z.real(), z.imag()}); }

bool is_preset(const std::string &s) {
    return s == "identity" || s == "rot_pi_y" || s == "theta_z_half";
}

std::string basis_label_for(const std::string &U) {
    if (U == "identity") return "z";
    if (U == "rot_pi_y") return "x";
    return "k";
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string summary_path(const WignerOptions &o) {
    if (!o.summary.empty()) return o.summary;
    if (o.out.empty() || o.out == "-") return "";
    return o.out + ".summary.json";
}

io::CsvTable table_with_manifest(const Context &ctx) {
    io::CsvTable t;
    t.manifest = ctx.manifest_lines();
    return t;
}

void emit_wigner(const Context &ctx, const WignerOptions &o, const io::CsvTable &table,
                 Json summary) {
    ctx.emit(o.out, table.render());
    const std::string text = summary.dump(2) + "\n";
    const std::string sp = summary_path(o);
    if (!sp.empty()) {
        io::write_file_atomic(sp, text);
        *ctx.out << text;
    }
}

}  // namespace

OperatorMatrix load_transform(const std::string &spec, int N) {
    if (is_preset(spec)) return encoding_preset(spec, N);
    if (!std::filesystem::exists(spec)) {
        throw ParseError("'" + spec + "' is neither a preset nor a readable matrix file");
    }
    CMatrix m = io::matrix_from_json(io::read_file(spec));
    if (m.rows() != N + 1) {
        throw DimensionMismatch("matrix in " + spec + " has dim " + std::to_string(m.rows()) +
                                ", expected " + std::to_string(N + 1));
    }
    return OperatorMatrix(std::move(m));
}

int cmd_state(const Context &ctx, const StateOptions &o) {
    if (o.N < 0) throw InvalidArgument("--N must be non-negative");
    std::string basis = "z";
    auto make = [&]() -> SSRCState {
        if (o.family == "fock") return fock_state(o.N, o.n);
        if (o.family == "spin-coherent") return spin_coherent(o.N, o.theta, o.phi);
        if (o.family == "coherent-truncated") return coherent_truncated(o.N, {o.alpha_re, o.alpha_im});
        if (o.family == "random-pure") return random_pure(o.N, ctx.seed);
        if (o.family == "qudit-basis") {
            const EncodingSpec enc =
                build_encoding(o.N, OperatorMatrix::identity(o.N + 1), load_transform(o.U, o.N));
            if (o.j < 0 || o.j > o.N) {
                throw OutOfRange("--j must lie in [0, " + std::to_string(o.N) + "]");
            }
            basis = basis_label_for(o.U);
            return enc.basis[static_cast<std::size_t>(enc.index_of_label(o.j))];
        }
        throw ParseError("unknown state family '" + o.family + "'");
    };
    const SSRCState s = make();
    Json j = Json::parse(io::state_to_json({s, basis, o.family}));
    j["manifest"] = ctx.manifest_json();
    ctx.emit(o.out, j.dump(2) + "\n");
    return kOk;
}

int cmd_wigner(const Context &ctx, const WignerOptions &o) {
    if (o.mixed == !o.state_path.empty()) {
        throw InvalidArgument("give exactly one of --state and --mixed");
    }
    std::optional<io::StateFile> sf;
    if (!o.state_path.empty()) sf = io::state_from_json(io::read_file(o.state_path));
    const Conventions &cv = ctx.conventions;

    if (o.geometry == "sphere") {
        int N = o.N;
        if (sf) {
            if (N >= 0 && N != sf->state.N()) {
                throw DimensionMismatch("state has N=" + std::to_string(sf->state.N()) +
                                        ", --N is " + std::to_string(N));
            }
            N = sf->state.N();
        } else if (N < 0) {
            throw InvalidArgument("--mixed needs --N");
        }
        const DensityMatrix rho = sf ? DensityMatrix::pure(sf->state) : DensityMatrix::maximally_mixed(N);
        const auto kernels = build_kernel(N, cv.prefactor, cv.orientation);
        const auto g = wigner_sphere(rho, kernels, {o.n_theta, o.n_phi});
        io::CsvTable t = table_with_manifest(ctx);
        t.manifest.push_back("geometry: sphere");
        t.manifest.push_back("N: " + std::to_string(N));
        t.manifest.push_back("measure: " + io::format_double(g.measure));
        t.manifest.push_back("prefactor: " + to_string(g.prefactor));
        t.manifest.push_back("orientation: " + to_string(g.orientation));
        t.columns = {"theta", "phi", "weight", "value"};
        Eigen::Index bi = 0, bj = 0;
        const double vmax = g.values.maxCoeff(&bi, &bj);
        for (std::size_t i = 0; i < g.thetas.size(); ++i) {
            for (std::size_t j = 0; j < g.phis.size(); ++j) {
                const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
                t.add_row({io::format_double(g.thetas[i]), io::format_double(g.phis[j]),
                           io::format_double(g.weights(ii, jj)), io::format_double(g.values(ii, jj))});
            }
        }
        Json s;
        s["manifest"] = ctx.manifest_json();
        s["geometry"] = "sphere";
        s["N"] = N;
        s["normalization"] = g.integral();
        s["normalization_residual"] = std::abs(g.integral() - 1.0);
        s["negativity"] = sphere_negativity(g);
        s["max"] = vmax;
        s["argmax"] = {{"theta", g.thetas[static_cast<std::size_t>(bi)]},
                       {"phi", g.phis[static_cast<std::size_t>(bj)]}};
        s["min"] = g.values.minCoeff();
        s["measure"] = g.measure;
        s["imag_residue"] = g.imag_residue;
        s["prefactor"] = to_string(g.prefactor);
        s["orientation"] = to_string(g.orientation);
        emit_wigner(ctx, o, t, std::move(s));
        return kOk;
    }

    if (o.geometry == "plane") {
        if (!sf) throw InvalidArgument("plane needs --state");
        if (o.N >= 0 && o.N != sf->state.N()) {
            throw DimensionMismatch("state has N=" + std::to_string(sf->state.N()) + ", --N is " +
                                    std::to_string(o.N));
        }
        const auto mode = TruncatedModeState::from_ssrc(sf->state);
        const auto g = wigner_plane(mode, {o.nx, o.np, o.extent});
        io::CsvTable t = table_with_manifest(ctx);
        t.manifest.push_back("geometry: plane");
        t.manifest.push_back("n_max: " + std::to_string(g.n_max));
        t.manifest.push_back("Z_W: " + io::format_double(g.normalization));
        t.manifest.push_back("quadrature: x=(a+a^dagger)/2 p=(a-a^dagger)/(2i)");
        t.columns = {"x", "p", "value"};
        for (std::size_t i = 0; i < g.xs.size(); ++i) {
            for (std::size_t j = 0; j < g.ps.size(); ++j) {
                t.add_row({io::format_double(g.xs[i]), io::format_double(g.ps[j]),
                           io::format_double(g.values(static_cast<Eigen::Index>(i),
                                                      static_cast<Eigen::Index>(j)))});
            }
        }
        Eigen::Index bi = 0, bj = 0;
        const double vmax = g.values.maxCoeff(&bi, &bj);
        Json s;
        s["manifest"] = ctx.manifest_json();
        s["geometry"] = "plane";
        s["n_max"] = g.n_max;
        s["Z_W"] = g.normalization;
        s["integral"] = g.integral();
        s["normalization"] = g.integral() / g.normalization;
        s["negativity"] = plane_negativity(g);
        s["max"] = vmax;
        s["argmax"] = {{"x", g.xs[static_cast<std::size_t>(bi)]}, {"p", g.ps[static_cast<std::size_t>(bj)]}};
        s["min"] = g.values.minCoeff();
        s["cell_area"] = g.cell_area;
        emit_wigner(ctx, o, t, std::move(s));
        return kOk;
    }

    // torus
    int d = o.d;
    if (sf) {
        if (d >= 0 && d != sf->state.dim()) {
            throw DimensionMismatch("state has d=" + std::to_string(sf->state.dim()) + ", --d is " +
                                    std::to_string(d));
        }
        if (o.N >= 0 && o.N != sf->state.N()) {
            throw DimensionMismatch("state has N=" + std::to_string(sf->state.N()) + ", --N is " +
                                    std::to_string(o.N));
        }
        d = sf->state.dim();
    } else if (d < 0) {
        if (o.N < 0) throw InvalidArgument("--mixed needs --d or --N");
        d = o.N + 1;
    }
    const auto pps = weyl_operators(d, cv.weyl);
    DiscreteLattice lat;
    if (sf) {
        const auto enc = build_encoding(d - 1, load_transform(o.K, d - 1), load_transform(o.U, d - 1));
        lat = encoded_wigner(enc, sf->state, cv.weyl);
    } else {
        lat = wigner_discrete(CMatrix(CMatrix::Identity(d, d) / static_cast<double>(d)), pps);
    }
    io::CsvTable t = table_with_manifest(ctx);
    t.manifest.push_back("geometry: torus");
    t.manifest.push_back("d: " + std::to_string(d));
    t.manifest.push_back("weyl: " + to_string(lat.convention));
    t.manifest.push_back("lattice: (n, m) = (shift, phase)");
    t.columns = {"n", "m", "value"};
    for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
            t.add_row({std::to_string(n), std::to_string(m), io::format_double(lat.values(n, m))});
        }
    }
    Eigen::Index bi = 0, bj = 0;
    const double vmax = lat.values.maxCoeff(&bi, &bj);
    Json s;
    s["manifest"] = ctx.manifest_json();
    s["geometry"] = "torus";
    s["d"] = d;
    s["weyl"] = to_string(lat.convention);
    s["normalization"] = lat.total();
    s["negativity"] = discrete_negativity(lat);
    s["max"] = vmax;
    s["argmax"] = {{"n", bi}, {"m", bj}};
    s["min"] = lat.values.minCoeff();
    s["imag_residue"] = lat.imag_residue;
    emit_wigner(ctx, o, t, std::move(s));
    return kOk;
}

int cmd_encode(const Context &ctx, const EncodeOptions &o) {
    if (o.N < 0) throw InvalidArgument("--N must be non-negative");
    const OperatorMatrix K = load_transform(o.K, o.N);
    const EncodingSpec enc = build_encoding(o.N, K, load_transform(o.U, o.N));

    const CVector vac = K.apply(fock_state(o.N, 0).coeffs());
    Eigen::Index peak = 0;
    vac.cwiseAbs2().maxCoeff(&peak);

    Json r;
    r["manifest"] = ctx.manifest_json();
    r["N"] = o.N;
    r["d"] = enc.d;
    r["K"] = o.K;
    r["U"] = o.U;
    r["hw_defect"] = enc.hw_defect;
    r["kappa_class"] = to_string(enc.kappa_class);
    r["checks"] = {{"hw_defect", enc.hw_defect},
                   {"order_defect", enc.order_defect},
                   {"kappa_class", to_string(enc.kappa_class)},
                   {"kappa_identity_distance", enc.kappa_identity_distance},
                   {"kappa_rot_pi_y_distance", enc.kappa_rot_distance}};
    r["phase_bookkeeping"] = {{"global_phase", pair(enc.global_phase)},
                              {"z_order_phase", pair(enc.z_order_phase)},
                              {"x_order_phase", pair(enc.x_order_phase)},
                              {"logical_label", enc.logical_label},
                              {"odd_n_requires_care", enc.odd_n_requires_care}};
    r["new_vacuum"] = {{"index", peak},
                       {"n_a", peak},
                       {"n_b", o.N - peak},
                       {"weight", std::norm(vac(peak))}};
    r["basis_file"] = o.basis_out.empty() ? Json(nullptr) : Json(o.basis_out);

    if (!o.basis_out.empty()) {
        Json b;
        b["manifest"] = ctx.manifest_json();
        b["N"] = o.N;
        Json states = Json::array();
        for (std::size_t n = 0; n < enc.basis.size(); ++n) {
            Json c = Json::array();
            for (Eigen::Index i = 0; i < enc.basis[n].coeffs().size(); ++i) {
                c.push_back(pair(enc.basis[n].coeffs()(i)));
            }
            states.push_back({{"index", n}, {"logical_label", enc.logical_label[n]}, {"coeffs", c}});
        }
        b["basis"] = std::move(states);
        io::write_file_atomic(o.basis_out, b.dump(2) + "\n");
    }
    ctx.emit(o.out, r.dump(2) + "\n");
    return kOk;
}

int cmd_sweep(const Context &ctx, const SweepOptions &o) {
    Json cfg;
    try {
        cfg = Json::parse(io::read_file(o.config));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("sweep config: ") + e.what());
    }
    if (!cfg.is_object() || !cfg.contains("experiment") || !cfg["experiment"].is_string()) {
        throw ParseError("sweep config needs a string field 'experiment'");
    }
    const Experiment exp = experiment_from_string(cfg["experiment"].get<std::string>());
    const char *nkey = cfg.contains("N_list") ? "N_list" : "N";
    if (!cfg.contains(nkey) || !cfg[nkey].is_array()) throw ParseError("sweep config needs an 'N' array");
    std::vector<int> Ns;
    for (const auto &v : cfg[nkey]) {
        if (!v.is_number_integer()) throw ParseError("N entries must be integers, got " + v.dump());
        Ns.push_back(v.get<int>());
    }
    static const std::set<std::string> known{"alpha", "alpha_im", "q", "kick_scale"};
    ParamGrid grid;
    auto take = [&](const std::string &key, const Json &v) {
        if (!known.count(key)) throw ParseError("unknown sweep parameter '" + key + "'");
        std::vector<double> vals;
        if (v.is_number()) {
            vals.push_back(v.get<double>());
        } else if (v.is_array()) {
            for (const auto &x : v) {
                if (!x.is_number()) throw ParseError("parameter '" + key + "' has a non-number");
                vals.push_back(x.get<double>());
            }
        } else {
            throw ParseError("parameter '" + key + "' must be a number or array");
        }
        grid[key] = std::move(vals);
    };
    for (const auto &[key, v] : cfg.items()) {
        if (key == "experiment" || key == nkey || key == "params" || key == "state_family") continue;
        take(key, v);
    }
    if (cfg.contains("params")) {
        if (!cfg["params"].is_object()) throw ParseError("'params' must be an object");
        for (const auto &[key, v] : cfg["params"].items()) take(key, v);
    }
    if (cfg.contains("state_family")) {
        const auto fam = cfg["state_family"].get<std::string>();
        if (fam == "vacuum") {
            grid["alpha"] = {0.0};
        } else if (fam != "coherent") {
            throw ParseError("state_family must be 'vacuum' or 'coherent'");
        }
    }
    if (grid.empty()) grid = default_params(exp);

    const auto records = run_sweep(exp, Ns, grid, ctx.conventions.kappa);
    io::CsvTable t = table_with_manifest(ctx);
    t.manifest.push_back("experiment: " + to_string(exp));
    t.manifest.push_back("config: " + cfg.dump());
    t.columns = {"experiment", "N"};
    for (const auto &[key, v] : grid) t.columns.push_back(key);
    for (const char *c : {"state_family", "metric", "error", "failed", "failure", "monotone_flag"}) {
        t.columns.emplace_back(c);
    }
    for (const auto &r : records) {
        std::vector<std::string> row{to_string(r.experiment), std::to_string(r.N)};
        for (const auto &[key, v] : grid) row.push_back(io::format_double(r.params.at(key)));
        row.push_back(r.state_family);
        row.push_back(to_string(r.metric));
        row.push_back(r.failed ? "nan" : io::format_double(r.error));
        row.push_back(r.failed ? "1" : "0");
        row.push_back(csv_safe(r.failure));
        row.push_back(r.monotone.value_or(false) ? "1" : "0");
        t.add_row(std::move(row));
    }
    ctx.emit(o.out, t.render());
    return kOk;
}

}  // namespace hwps::cli
