#include <benchmark/benchmark.h>

#include "copos/copos.hpp"

namespace {

using namespace copos;

void BM_LcpEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_instance(InstanceKind::symmetric, n, 9, 1234);
  for (auto _ : state) {
    MinimizationResult r = solve_box_qp_lcp(m);
    benchmark::DoNotOptimize(r.gamma);
  }
  state.counters["patterns"] = static_cast<double>(std::uint64_t{1} << (2 * n));
}
BENCHMARK(BM_LcpEnumeration)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_FaceOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_instance(InstanceKind::symmetric, n, 9, 1234);
  for (auto _ : state) {
    MinimizationResult r = face_enumerate_min(m);
    benchmark::DoNotOptimize(r.gamma);
  }
}
BENCHMARK(BM_FaceOracle)->DenseRange(1, 7)->Unit(benchmark::kMillisecond);

void BM_CertifyAdversarial(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto scheme = state.range(1) ? CertificateScheme::dyadic : CertificateScheme::fixed_denominator;
  const auto m = adversarial_matrix(k);
  for (auto _ : state) {
    CertificateReport r = certify_noncopositive(m, scheme);
    benchmark::DoNotOptimize(r.measured_bits);
  }
}
BENCHMARK(BM_CertifyAdversarial)->ArgsProduct({{1, 8, 64}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_EncodingLength(benchmark::State& state) {
  const auto m = random_instance(InstanceKind::psd, static_cast<std::size_t>(state.range(0)), 1000, 9);
  for (auto _ : state) {
    EncodingStats s = encoding_length(m);
    benchmark::DoNotOptimize(s.L);
  }
}
BENCHMARK(BM_EncodingLength)->RangeMultiplier(4)->Range(4, 256);

}  // namespace
BENCHMARK_MAIN();
