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

#include <cmath>
#include <filesystem>

#include <gtest/gtest.h>

#include "hwps/error.hpp"

using namespace hwps;

TEST(io, format_double_round_trips) {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::nextafter(1.0, 2.0)}) {
        EXPECT_EQ(std::strtod(io::format_double(v).c_str(), nullptr), v);
    }
    EXPECT_EQ(io::format_double(std::nan("")), "nan");
}

TEST(io, state_json_round_trip) {
    const auto s = random_pure(6, 7);
    const std::string text = io::state_to_json({s, "x", "random-pure"});
    const auto back = io::state_from_json(text);
    EXPECT_EQ(back.state.N(), 6);
    EXPECT_EQ(back.basis, "x");
    EXPECT_EQ(back.kind, "random-pure");
    EXPECT_EQ((back.state.coeffs() - s.coeffs()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(io::state_to_json(back), text);
}

TEST(io, state_json_validation) {
    EXPECT_THROW(io::state_from_json("{"), ParseError);
    EXPECT_THROW(io::state_from_json(R"({"N": 1})"), ParseError);
    EXPECT_THROW(io::state_from_json(R"({"N": 1, "coeffs": [[1, 0]]})"), InvalidState);
    EXPECT_THROW(io::state_from_json(R"({"N": 1, "coeffs": [[1, 0], [1, 0]]})"), InvalidState);
    EXPECT_THROW(io::state_from_json(R"({"N": 0, "coeffs": [[1]]})"), ParseError);
    EXPECT_THROW(io::state_from_json(R"({"N": 0, "coeffs": [[1, 0]], "basis": "w"})"), ParseError);
    EXPECT_NO_THROW(io::state_from_json(R"({"N": 0, "coeffs": [[0, 1]]})"));
}

TEST(io, matrix_json_round_trip) {
    CMatrix m(2, 2);
    m << Complex(1, 2), Complex(0.1, -0.3), Complex(1.0 / 3, 0), Complex(-5e-17, 7);
    EXPECT_EQ((io::matrix_from_json(io::matrix_to_json(m)) - m).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_THROW(io::matrix_from_json(R"({"entries": [[[1, 0]], [[0, 0]]]})"), ParseError);
}

TEST(io, csv_round_trip) {
    io::CsvTable t;
    t.manifest = {"command: test", "seed: 3"};
    t.columns = {"x", "value"};
    t.add_row({io::format_double(0.1), io::format_double(-1.0 / 7.0)});
    t.add_row({"2", "3"});
    EXPECT_THROW(t.add_row({"1"}), DimensionMismatch);
    const auto back = io::CsvTable::parse(t.render());
    EXPECT_EQ(back.manifest, t.manifest);
    EXPECT_EQ(back.columns, t.columns);
    EXPECT_EQ(back.numeric_column("value")[0], -1.0 / 7.0);
    EXPECT_EQ(back.render(), t.render());
    EXPECT_THROW(back.numeric_column("missing"), ParseError);
}

TEST(io, csv_rejects_bad_input) {
    EXPECT_THROW(io::CsvTable::parse("# only a comment\n"), ParseError);
    EXPECT_THROW(io::CsvTable::parse("a,b\n1\n"), ParseError);
    const auto t = io::CsvTable::parse("a\nfoo\n");
    EXPECT_THROW(t.numeric_column("a"), ParseError);
}

TEST(io, atomic_write_replaces_file) {
    const auto dir = std::filesystem::temp_directory_path() / "hwps_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "out.txt").string();
    io::write_file_atomic(path, "first");
    io::write_file_atomic(path, "second");
    EXPECT_EQ(io::read_file(path), "second");
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    EXPECT_THROW(io::write_file_atomic((dir / "no/such/dir/x").string(), "y"), InvalidArgument);
    EXPECT_THROW(io::read_file((dir / "missing").string()), InvalidArgument);
    std::filesystem::remove_all(dir);
}
