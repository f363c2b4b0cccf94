#include "symprove/groebner.hpp"
#include "symprove/io.hpp"
#include "symprove/poly_gcd.hpp"
#include "symprove/prover.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace symprove;

void BM_Stage1Deterministic(benchmark::State& state) {
  PRKModel m(PRKSpec{SystemKind::deterministic, static_cast<std::size_t>(state.range(0)), true});
  auto order = default_variable_order(m, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stage1_normal_form(m, order));
  }
}
BENCHMARK(BM_Stage1Deterministic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_OracleDeterministic(benchmark::State& state) {
  PRKModel m(PRKSpec{SystemKind::deterministic, static_cast<std::size_t>(state.range(0)), true});
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_solve_oracle(m));
  }
}
BENCHMARK(BM_OracleDeterministic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Stage2(benchmark::State& state) {
  PRKModel m(PRKSpec{SystemKind::deterministic, 2, true});
  auto gg = stage1_normal_form(m, default_variable_order(m, 1));
  auto order = stage2_order(m, state.range(0) ? OrderKind::lex : OrderKind::grevlex);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stage2_reduce(gg, m, order));
  }
}
BENCHMARK(BM_Stage2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SymplecticBasis(benchmark::State& state) {
  PRKModel m(PRKSpec{SystemKind::stochastic, static_cast<std::size_t>(state.range(0)), true});
  auto spec = build_symplectic_ideal(m, stage2_order(m, OrderKind::grevlex));
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(spec));
  }
}
BENCHMARK(BM_SymplecticBasis)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Cyclic3(benchmark::State& state) {
  auto file = parse_ideal_file(
      "vars: x, y, z\norder: grevlex\nx + y + z\nx*y + y*z + z*x\nx*y*z - 1\n");
  IdealSpec<Rational> spec{file.generators, file.order};
  for (auto& g : spec.generators) {
    g = file.to_rational(g);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(spec));
  }
}
BENCHMARK(BM_Cyclic3);

void BM_Gcd(benchmark::State& state) {
  auto t = std::make_shared<SymbolTable>();
  std::vector<SymbolId> ids;
  for (auto n : {"a", "b", "c", "d"}) {
    ids.push_back(t->add(n, SymbolKind::parameter));
  }
  auto o = make_order(OrderKind::grevlex, ids, t);
  auto p = [&](std::string_view s) { return parse_polynomial(s, *t, o); };
  auto g = p("a*b - c*d + 3");
  auto x = g * p("a^2 + b*c - d + 1");
  auto y = g * p("a*c - b^2*d - 2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd(x, y));
  }
}
BENCHMARK(BM_Gcd);

} // namespace
BENCHMARK_MAIN();
