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
#include <benchmark/benchmark.h>

#include "hwps/cvlimit.hpp"
#include "hwps/encoding.hpp"
#include "hwps/fock.hpp"
#include "hwps/wigner_discrete.hpp"
#include "hwps/wigner_plane.hpp"
#include "hwps/wigner_sphere.hpp"

using namespace hwps;

static void BM_BuildKernel(benchmark::State &st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(build_kernel(N));
}
BENCHMARK(BM_BuildKernel)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_WignerSphereGrid(benchmark::State &st) {
    const int N = static_cast<int>(st.range(0));
    const auto k = build_kernel(N);
    const auto rho = DensityMatrix::pure(random_pure(N, 7));
    for (auto _ : st) benchmark::DoNotOptimize(wigner_sphere(rho, k));
}
BENCHMARK(BM_WignerSphereGrid)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ExpiTridiagonal(benchmark::State &st) {
    const int N = static_cast<int>(st.range(0));
    const JxSpectrum spec(N);
    const CVector v = fock_state(N, 0).coeffs();
    for (auto _ : st) benchmark::DoNotOptimize(spec.expi_jx(0.37, v));
}
BENCHMARK(BM_ExpiTridiagonal)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMicrosecond);

static void BM_BasisChangeFormula(benchmark::State &st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(basis_change_formula(N, N / 3));
}
BENCHMARK(BM_BasisChangeFormula)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_DisplacementElements(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(displacement_elements(n, Complex(0.7, -0.3)));
}
BENCHMARK(BM_DisplacementElements)->Arg(20)->Arg(80)->Unit(benchmark::kMicrosecond);

static void BM_WignerPlaneGrid(benchmark::State &st) {
    const auto s = TruncatedModeState::fock(20, 2);
    for (auto _ : st) benchmark::DoNotOptimize(wigner_plane(s));
}
BENCHMARK(BM_WignerPlaneGrid)->Unit(benchmark::kMillisecond);

static void BM_WignerDiscrete(benchmark::State &st) {
    const int d = static_cast<int>(st.range(0));
    const auto pps = weyl_operators(d);
    const auto q = QuditState::fourier_basis(d, 1);
    for (auto _ : st) benchmark::DoNotOptimize(wigner_discrete(q, pps));
}
BENCHMARK(BM_WignerDiscrete)->Arg(7)->Arg(31)->Unit(benchmark::kMicrosecond);

static void BM_BuildEncoding(benchmark::State &st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(build_encoding(N, "identity", "rot_pi_y"));
}
BENCHMARK(BM_BuildEncoding)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CoherentLimit(benchmark::State &st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(coherent_limit_error(N, Complex(1.0, 0.0)));
}
BENCHMARK(BM_CoherentLimit)->Arg(400)->Arg(1600)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
