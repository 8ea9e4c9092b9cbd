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

// Racah's closed form for SU(2) coupling coefficients. Every factorial ratio
// is kept in log space; the alternating sum is carried as signed logs.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hwps/error.hpp"
#include "hwps/numerics.hpp"

namespace hwps {

namespace {

std::string label(HalfInt h) {
    return h.is_integer() ? std::to_string(h.twice / 2) : std::to_string(h.twice) + "/2";
}

// (twice-value) -> integer; caller has already checked parity.
int whole(int twice) { return twice / 2; }

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    auto bad = [&](const std::string &why) {
        return InvalidAngularMomenta("<" + label(j1) + " " + label(m1) + "; " + label(j2) + " " +
                                     label(m2) + " | " + label(J) + " " + label(M) + ">: " + why);
    };
    if (j1.twice < 0 || j2.twice < 0 || J.twice < 0) throw bad("negative angular momentum");
    if (std::abs(m1.twice) > j1.twice || std::abs(m2.twice) > j2.twice ||
        std::abs(M.twice) > J.twice) {
        throw bad("projection exceeds its angular momentum");
    }
    if ((j1.twice + m1.twice) % 2 != 0 || (j2.twice + m2.twice) % 2 != 0 ||
        (J.twice + M.twice) % 2 != 0) {
        throw bad("projection and angular momentum differ by a half-integer");
    }
    if (J.twice < std::abs(j1.twice - j2.twice) || J.twice > j1.twice + j2.twice ||
        (j1.twice + j2.twice + J.twice) % 2 != 0) {
        throw bad("triangle condition violated");
    }
    if (M.twice != m1.twice + m2.twice) return 0.0;

    const int a = whole(j1.twice + j2.twice - J.twice);  // j1+j2-J
    const int b = whole(j1.twice - m1.twice);            // j1-m1
    const int c = whole(j2.twice + m2.twice);            // j2+m2
    const int d = whole(J.twice - j2.twice + m1.twice);  // J-j2+m1
    const int e = whole(J.twice - j1.twice - m2.twice);  // J-j1-m2

    const auto &lf = log_factorials();
    const double log_prefactor =
        0.5 * (std::log(J.twice + 1.0) + lf(whole(J.twice + j1.twice - j2.twice)) +
               lf(whole(J.twice - j1.twice + j2.twice)) + lf(a) -
               lf(whole(j1.twice + j2.twice + J.twice) + 1) + lf(whole(J.twice + M.twice)) +
               lf(whole(J.twice - M.twice)) + lf(b) + lf(whole(j1.twice + m1.twice)) +
               lf(whole(j2.twice - m2.twice)) + lf(c));

    const int k_min = std::max({0, -d, -e});
    const int k_max = std::min({a, b, c});
    std::vector<SignedLog> terms;
    terms.reserve(static_cast<std::size_t>(std::max(0, k_max - k_min + 1)));
    for (int k = k_min; k <= k_max; ++k) {
        const double log_den =
            lf(k) + lf(a - k) + lf(b - k) + lf(c - k) + lf(d + k) + lf(e + k);
        terms.push_back({log_prefactor - log_den, k % 2 == 0 ? 1 : -1});
    }
    return signed_log_sum(terms).value();
}

}  // namespace hwps
