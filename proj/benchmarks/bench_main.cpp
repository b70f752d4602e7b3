#include <benchmark/benchmark.h>

#include "circact/circact.hpp"

namespace {

using namespace circact;

CircleHomeo sample_homeo() {
  return make_circle_homeo({{Rational(0), Rational(1, 16)},
                            {Rational(1, 4), Rational(1, 3)},
                            {Rational(1, 2), Rational(5, 8)},
                            {Rational(5, 7), Rational(11, 13)},
                            {Rational(7, 8), Rational(31, 32)}});
}

GapSet sample_gapset() {
  return GapSet::from_blocks({{Rational(0), Rational(1, 8)},
                              {Rational(1, 3), Rational(1, 2)},
                              {Rational(2, 3), Rational(2, 3)},
                              {Rational(3, 4), Rational(1)}});
}

void BM_CircleCompose(benchmark::State& state) {
  const CircleHomeo f = sample_homeo();
  const CircleHomeo g = CircleHomeo::rotation(Rational(1, 3)) * f;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_CircleCompose);

void BM_CircleEval(benchmark::State& state) {
  const CircleHomeo f = sample_homeo();
  const Rational x(17, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(x));
  }
}
BENCHMARK(BM_CircleEval);

void BM_PhiEval(benchmark::State& state) {
  const AnnulusMap m =
      act_phi(sample_gapset(), SignAssignment({1, -1, 1}), sample_homeo());
  const AnnulusPoint p(Rational(5, 24), Rational(3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m(p));
  }
}
BENCHMARK(BM_PhiEval);

void BM_ConjugatedChainEval(benchmark::State& state) {
  const AnnulusMap phi =
      act_phi(sample_gapset(), SignAssignment({1, -1, 1}), sample_homeo());
  const AnnulusMap t = twist_conjugator(sample_gapset(), 0);
  const AnnulusMap m = t * phi * t.inverse();
  const AnnulusPoint p(Rational(5, 24), Rational(3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m(p));
  }
}
BENCHMARK(BM_ConjugatedChainEval);

void BM_DecideConjugacy(benchmark::State& state) {
  const GapSet K = sample_gapset();
  const SignAssignment la({1, -1, 1}), lap({-1, -1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_conjugacy(K, la, K, lap));
  }
}
BENCHMARK(BM_DecideConjugacy);

void BM_VerifyWitness(benchmark::State& state) {
  const GapSet K = sample_gapset();
  const SignAssignment la({1, -1, 1}), lap({-1, -1, 1});
  const auto v = decide_conjugacy(K, la, K, lap);
  const auto family = standard_test_family();
  const auto grid = standard_grid(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_conjugacy(
        *v.witness, phi_family(K, la), phi_family(K, lap), family, grid));
  }
}
BENCHMARK(BM_VerifyWitness);

void BM_RecoverGapset(benchmark::State& state) {
  const GapSet K = sample_gapset();
  const SignAssignment la({1, -1, 1});
  const auto oracle = AnnulusOracle::from_action(
      [&](const CircleHomeo& f) { return act_phi(K, la, f); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_gapset(oracle, Rational(0)));
  }
}
BENCHMARK(BM_RecoverGapset);

void BM_RecoverLinePoint(benchmark::State& state) {
  const LineHomeo h = make_line_homeo({{Rational(0), Rational(0)},
                                       {Rational(1, 3), Rational(1, 8)},
                                       {Rational(1), Rational(1)}});
  const LineHomeo hinv = h.inverse();
  const auto oracle = LineOracle::from_action(
      [&](const LineHomeo& g) { return h * g * hinv; });
  const std::vector<Rational> grid{Rational(1, 2)};
  std::vector<Rational> schedule;
  for (int k = 2; k <= 26; k += 4) schedule.push_back(dyadic(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_line_conjugacy(oracle, grid, schedule));
  }
}
BENCHMARK(BM_RecoverLinePoint);

void BM_SerializeRoundTrip(benchmark::State& state) {
  const CircleHomeo f = sample_homeo();
  for (auto _ : state) {
    benchmark::DoNotOptimize(read_circle_homeo(write_circle_homeo(f)));
  }
}
BENCHMARK(BM_SerializeRoundTrip);

}  // namespace

BENCHMARK_MAIN();
