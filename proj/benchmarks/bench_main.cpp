#include <benchmark/benchmark.h>

#include <random>

#include "cubext/arith.hpp"
#include "cubext/ffcubic.hpp"

using namespace cubext;

namespace {

Field field_of(std::int64_t order) {
  switch (order) {
    case 49: return Field::make(7, 2);
    case 81: return Field::make(3, 4);
    case 1024: return Field::make(2, 10);
    default: return Field::make(static_cast<std::uint64_t>(order), 1);
  }
}

RatFunc random_ratfunc(const Field& F, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  std::vector<FieldElem> n, d;
  for (int i = 0; i <= deg; ++i) n.push_back(F.from_index(pick(rng)));
  for (int i = 0; i < deg; ++i) d.push_back(F.from_index(pick(rng)));
  d.push_back(F.one());
  return RatFunc::make(FPoly(F, n), FPoly(F, d));
}

}  // namespace

static void BM_FieldMul(benchmark::State& state) {
  const Field F = field_of(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(1, F.order() - 1);
  FieldElem a = F.from_index(pick(rng));
  const FieldElem b = F.from_index(pick(rng));
  for (auto _ : state) {
    a = a * b + b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(81)->Arg(1024)->Arg(65521);

static void BM_DecomposeAny(benchmark::State& state) {
  const Field F = field_of(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  for (auto _ : state) {
    auto r = decompose_any(F, F.from_index(pick(rng)), F.from_index(pick(rng)), F.from_index(pick(rng)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_DecomposeAny)->Arg(7)->Arg(49)->Arg(81)->Arg(1024);

static void BM_FactorDegree12(benchmark::State& state) {
  const Field F = field_of(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  for (auto _ : state) {
    std::vector<FieldElem> c;
    for (int i = 0; i < 12; ++i) c.push_back(F.from_index(pick(rng)));
    c.push_back(F.one());
    auto r = factor_fq(FPoly(F, c));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_FactorDegree12)->Arg(7)->Arg(81);

static void BM_Genus(benchmark::State& state) {
  const Field F = field_of(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<Extension> exts;
  while (exts.size() < 64) {
    const RatFunc a = random_ratfunc(F, 3, rng);
    CanonicalCubic<RatFunc> form = F.characteristic() == 3 ? CanonicalCubic<RatFunc>{Char3<RatFunc>{a}}
                                                           : CanonicalCubic<RatFunc>{Pure<RatFunc>{a}};
    if (a.is_zero() || has_rational_root(form)) continue;
    Extension E = Extension::make(form);
    if (is_constant_extension(E).kind == ConstantResult::Kind::Geometric) exts.push_back(std::move(E));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(genus(exts[i++ % exts.size()]));
}
BENCHMARK(BM_Genus)->Arg(3)->Arg(7)->Arg(81);

static void BM_ReduceCubicFqx(benchmark::State& state) {
  const Field F = field_of(state.range(0));
  std::mt19937_64 rng(5);
  for (auto _ : state) {
    const Cubic<RatFunc> T{random_ratfunc(F, 2, rng), random_ratfunc(F, 2, rng), random_ratfunc(F, 2, rng)};
    if (T.g.is_zero()) continue;
    benchmark::DoNotOptimize(reduce_cubic(T));
  }
}
BENCHMARK(BM_ReduceCubicFqx)->Arg(5)->Arg(7);
BENCHMARK_MAIN();
