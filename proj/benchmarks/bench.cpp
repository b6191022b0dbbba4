#include <benchmark/benchmark.h>

#include "dalg/ideals.hpp"
#include "dalg/structure.hpp"
#include "dalg/text.hpp"

using namespace dalg;

namespace {

DiffRingPtr ring(std::uint64_t p, std::uint32_t m, std::uint32_t n) {
  return make_ring({p == 0 ? BaseKind::Rationals : BaseKind::PrimeField, p, m}, n);
}

void BM_RittReduceHighDerivative(benchmark::State& state) {
  auto R = ring(0, 1, 1);
  const AutoreducedSet G({parse_poly("y'^2 - 4*y", R)});
  std::string f = "y";
  for (int i = 0; i < state.range(0); ++i) f += "'";
  const DiffPoly target = parse_poly(f + "^2 + y*" + f, R);
  for (auto _ : state) benchmark::DoNotOptimize(ritt_reduce(target, G));
}
BENCHMARK(BM_RittReduceHighDerivative)->DenseRange(2, 6, 2);

void BM_RittReduceTwoDerivations(benchmark::State& state) {
  auto R = ring(state.range(0), 2, 2);
  const AutoreducedSet G({parse_poly("d0 y0^2 - y1", R), parse_poly("d1 y1 - y0*y1", R)});
  const DiffPoly f = parse_poly("(d0^2 d1 y0)^2 + d0 d1^2 y1 * y0 - 3", R);
  for (auto _ : state) benchmark::DoNotOptimize(ritt_reduce(f, G));
}
BENCHMARK(BM_RittReduceTwoDerivations)->Arg(0)->Arg(5);

void BM_SaturatedGroebner(benchmark::State& state) {
  auto R = ring(0, 1, 1);
  const std::vector<DiffPoly> gens = prolong({parse_poly("y'^2 - 4*y", R)}, static_cast<std::uint32_t>(state.range(0)));
  const DiffPoly H = parse_poly("2*y'", R);
  for (auto _ : state) {
    AlgebraicIdeal I(R, gens, {}, H);
    benchmark::DoNotOptimize(I.basis());
  }
}
BENCHMARK(BM_SaturatedGroebner)->DenseRange(1, 4);

void BM_SaturationMember(benchmark::State& state) {
  auto R = ring(0, 1, 2);
  SaturationQuery q{parse_poly("d0^2 y1", R), {parse_poly("y0*y1 - d0 y0", R)}, {}, parse_poly("y0", R),
                    static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(saturation_member(q));
}
BENCHMARK(BM_SaturationMember)->DenseRange(1, 3);

void BM_RittWuCharset(benchmark::State& state) {
  auto R = ring(state.range(0), 2, 1);
  const std::vector<DiffPoly> F{parse_poly("d0 y0 - y0^2", R), parse_poly("d1 y0 - 1", R),
                                parse_poly("d0 d1 y0 + y0", R)};
  for (auto _ : state) benchmark::DoNotOptimize(ritt_wu_charset(F));
}
BENCHMARK(BM_RittWuCharset)->Arg(0)->Arg(3);

void BM_StructurePipeline(benchmark::State& state) {
  auto R = ring(state.range(0), 1, 2);
  const std::vector<DiffPoly> gens{parse_poly("d0 y0 - y1", R)};
  for (auto _ : state) {
    auto d = decompose(R, gens, {}, 3);
    benchmark::DoNotOptimize(verify_claims(d, gens, {}, {}, 3));
  }
}
BENCHMARK(BM_StructurePipeline)->Arg(0)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
