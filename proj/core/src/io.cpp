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

#include "hwps/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hwps/error.hpp"

namespace hwps::io {

using nlohmann::ordered_json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_file_atomic(const std::string &path, const std::string &contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidArgument("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw InvalidArgument("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InvalidArgument("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

// nlohmann prints doubles with the shortest round-trip form, which is
// already lossless.
ordered_json complex_pair(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

Complex parse_pair(const ordered_json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("expected [re, im] pair, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json parse_json(const std::string &text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string state_to_json(const StateFile &s) {
    ordered_json j;
    j["N"] = s.state.N();
    ordered_json coeffs = ordered_json::array();
    for (Eigen::Index n = 0; n < s.state.coeffs().size(); ++n) {
        coeffs.push_back(complex_pair(s.state.coeffs()(n)));
    }
    j["coeffs"] = std::move(coeffs);
    j["basis"] = s.basis;
    j["kind"] = s.kind;
    return j.dump(2) + "\n";
}

StateFile state_from_json(const std::string &text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("N") || !j.contains("coeffs")) {
        throw ParseError("state JSON needs fields N and coeffs");
    }
    if (!j["N"].is_number_integer() || j["N"].get<long long>() < 0) {
        throw ParseError("state JSON: N must be a non-negative integer");
    }
    const int N = j["N"].get<int>();
    const auto &c = j["coeffs"];
    if (!c.is_array()) throw ParseError("state JSON: coeffs must be an array");
    CVector coeffs(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) coeffs(static_cast<Eigen::Index>(i)) = parse_pair(c[i]);
    std::string basis = j.value("basis", std::string("z"));
    mode_basis_from_string(basis);  // validates the label
    return StateFile{SSRCState(N, std::move(coeffs)), basis, j.value("kind", std::string("custom"))};
}

std::string matrix_to_json(const CMatrix &m) {
    ordered_json j;
    j["dim"] = m.rows();
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump() + "\n";
}

CMatrix matrix_from_json(const std::string &text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("matrix JSON needs an entries array");
    }
    const auto &rows = j["entries"];
    const auto d = static_cast<Eigen::Index>(rows.size());
    if (j.contains("dim") && j["dim"].get<long long>() != d) {
        throw ParseError("matrix JSON: dim disagrees with entries");
    }
    CMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const auto &row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw ParseError("matrix JSON: row " + std::to_string(r) + " has the wrong length");
        }
        for (Eigen::Index c = 0; c < d; ++c) m(r, c) = parse_pair(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) {
        throw DimensionMismatch("CSV row has " + std::to_string(row.size()) + " cells, expected " +
                                std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string CsvTable::render() const {
    std::string out;
    for (const auto &line : manifest) out += "# " + line + "\n";
    auto join = [&out](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    join(columns);
    for (const auto &r : rows) join(r);
    return out;
}

CsvTable CsvTable::parse(const std::string &text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    auto split = [](const std::string &s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(s);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!s.empty() && s.back() == ',') cells.emplace_back();
        return cells;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.manifest.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        if (!header) {
            t.columns = split(line);
            header = true;
            continue;
        }
        auto cells = split(line);
        if (cells.size() != t.columns.size()) throw ParseError("CSV row width mismatch: " + line);
        t.rows.push_back(std::move(cells));
    }
    if (!header) throw ParseError("CSV has no header row");
    return t;
}

std::vector<double> CsvTable::numeric_column(const std::string &name) const {
    std::size_t idx = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) idx = i;
    }
    if (idx == columns.size()) throw ParseError("no CSV column '" + name + "'");
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        const std::string &s = r[idx];
        char *end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size()) throw ParseError("non-numeric cell '" + s + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace hwps::io
