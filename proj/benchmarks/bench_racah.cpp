#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include <racah/embedding.hpp>
#include <racah/independence.hpp>
#include <racah/racah_nf.hpp>
#include <racah/usl2.hpp>

using namespace racah;

namespace {

// Ordered-basis product of two dense-ish enveloping elements whose exponents
// grow with the range argument.
void BM_EnvelopingProduct(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  USl2Element u, v;
  for (std::int32_t i = 0; i <= n; ++i) {
    u += pbw(i, n - i, i, frac(1, i + 1));
    v += pbw(n - i, i, n - i, frac(-1, i + 2));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(u * v);
  }
}

// The slow letter-by-letter rewriter on the same word, as a contrast with
// the closed-form product above.
void BM_WordRewriter(benchmark::State& state) {
  std::string word;
  for (std::int64_t i = 0; i < state.range(0); ++i) word += "feh"[i % 3];
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbw_from_word(word));
  }
}

void BM_Normalize(benchmark::State& state) {
  RandomExprOptions opt;
  opt.max_depth = static_cast<int>(state.range(0));
  std::vector<RacahExpr> exprs = random_racah_exprs(16, 0xBE7C4ll, opt);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(exprs[i]));
    i = (i + 1) % exprs.size();
  }
}

void BM_EmbedTree(benchmark::State& state) {
  RandomExprOptions opt;
  opt.max_depth = static_cast<int>(state.range(0));
  std::vector<RacahExpr> exprs = random_racah_exprs(16, 0xBE7C4ll, opt);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(exprs[i]));
    i = (i + 1) % exprs.size();
  }
}

void BM_EmbedNormalForm(benchmark::State& state) {
  RandomExprOptions opt;
  opt.max_depth = static_cast<int>(state.range(0));
  std::vector<RacahNF> forms;
  for (const RacahExpr& e : random_racah_exprs(16, 0xBE7C4ll, opt)) {
    forms.push_back(normalize(e));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(forms[i]));
    i = (i + 1) % forms.size();
  }
}

void BM_InjectivityBlock(benchmark::State& state) {
  InjectivityOptions opt;
  opt.caps = {1, 1, 1, 0, 0, 0, 0};
  opt.caps[0] = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(injectivity_certificate(opt));
  }
}

BENCHMARK(BM_EnvelopingProduct)->DenseRange(2, 10, 2);
// The rewriter re-normalizes every partial word, so its cost rises steeply;
// sixteen letters is already around the practical ceiling.
BENCHMARK(BM_WordRewriter)->RangeMultiplier(2)->Range(4, 16);
BENCHMARK(BM_Normalize)->DenseRange(2, 6, 2);
BENCHMARK(BM_EmbedTree)->DenseRange(2, 6, 2);
BENCHMARK(BM_EmbedNormalForm)->DenseRange(2, 6, 2);
BENCHMARK(BM_InjectivityBlock)->DenseRange(1, 2, 1);

}  // namespace

BENCHMARK_MAIN();
