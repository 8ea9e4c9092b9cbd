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

// File formats: state and matrix JSON, and CSV tables whose header lines
// ('#'-prefixed) carry the run manifest.

#ifndef HWPS_IO_HPP
#define HWPS_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "hwps/fock.hpp"
#include "hwps/numerics.hpp"

namespace hwps::io {

/// Shortest round-trip representation is not required; 17 significant
/// digits always round-trip an IEEE double.
std::string format_double(double v);

/// Writes via a temporary file in the same directory and renames it over
/// `path`.
void write_file_atomic(const std::string &path, const std::string &contents);
std::string read_file(const std::string &path);

struct StateFile {
    SSRCState state;
    std::string basis = "z";
    std::string kind = "custom";
};

/// {"N": int, "coeffs": [[re, im], ...], "basis": str, "kind": str}
std::string state_to_json(const StateFile &s);
/// Validates length and normalization (1e-10); throws ParseError or
/// InvalidState.
StateFile state_from_json(const std::string &text);

/// {"dim": int, "entries": [[[re, im], ...], ...]} (row-major)
std::string matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const std::string &text);

/// A CSV table with '#'-prefixed manifest lines, a header row, and rows of
/// numbers or strings.
struct CsvTable {
    std::vector<std::string> manifest;  // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string render() const;
    static CsvTable parse(const std::string &text);
    /// Column as doubles; throws ParseError on a non-numeric cell.
    std::vector<double> numeric_column(const std::string &name) const;
};

}  // namespace hwps::io

#endif  // HWPS_IO_HPP
