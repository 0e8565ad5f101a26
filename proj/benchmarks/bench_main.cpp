#include <benchmark/benchmark.h>

#include "hypercomp/groth_ring.hpp"
#include "hypercomp/iso_engine.hpp"
#include "hypercomp/poly_io.hpp"
#include "hypercomp/poly_ops.hpp"
#include "hypercomp/varieties.hpp"

using namespace hypercomp;

namespace {

const std::vector<std::string> kVars{"x", "y", "z", "w"};

void BM_PolyMultiply(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  QPoly a = parse_polynomial("x + 2*y - z + 3*w + 1", kVars).pow(e);
  QPoly b = parse_polynomial("x*y - z^2 + w", kVars).pow(e / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>((a * b).size());
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PolyCompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  QPoly f = parse_polynomial("x^3*y + z^" + std::to_string(d) + " + w*z", kVars);
  std::vector<QPoly> subs{parse_polynomial("x", kVars), parse_polynomial("y + x*z^2", kVars),
                          parse_polynomial("z + x^2*w", kVars), parse_polynomial("w - y", kVars)};
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, subs));
}
BENCHMARK(BM_PolyCompose)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_CountPointsProjective(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  auto h = Hypersurface::projective(parse_polynomial("x*y + z^2 + z*w", kVars));
  auto F = FiniteField::make_q(q);
  CountOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_points(h, F, {}, o));
}
BENCHMARK(BM_CountPointsProjective)->Arg(5)->Arg(9)->Arg(16)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_FamilyCertification(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_family(family_z_square(d)));
}
BENCHMARK(BM_FamilyCertification)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_InvolutionDirect(benchmark::State& state) {
  CertifyOptions o;
  o.route = CertRoute::Direct;
  auto phi = nodal_cubic_involution();
  for (auto _ : state) benchmark::DoNotOptimize(certify_projective_iso(nodal_cubic(), nodal_cubic(), phi, phi, o));
}
BENCHMARK(BM_InvolutionDirect)->Unit(benchmark::kMillisecond);

void BM_Interpolation(benchmark::State& state) {
  std::vector<std::pair<std::uint64_t, mpz_class>> counts;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    counts.emplace_back(q, mpz_class(static_cast<unsigned long>(q * q * q * q + q * q + 1)));
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_count_polynomial(counts, 4));
}
BENCHMARK(BM_Interpolation);

}  // namespace

BENCHMARK_MAIN();
