#include <benchmark/benchmark.h>

#include "gapord/gap_seq.hpp"
#include "gapord/harness.hpp"
#include "gapord/motype.hpp"
#include "gapord/ordinal.hpp"
#include "gapord/reify.hpp"

using namespace gapord;

namespace {

std::vector<OrdTerm> sample_terms(std::size_t n, std::uint64_t size) {
  Rng rng(42);
  std::vector<OrdTerm> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_ord(rng, size));
  return out;
}

void BM_cmp_ord(benchmark::State& state) {
  auto pool = sample_terms(256, static_cast<std::uint64_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const OrdTerm& a = pool[i % pool.size()];
    const OrdTerm& b = pool[(i * 7 + 1) % pool.size()];
    benchmark::DoNotOptimize(cmp_ord(a, b));
    ++i;
  }
}
BENCHMARK(BM_cmp_ord)->Arg(4)->Arg(8)->Arg(16);

void BM_ord_mul(benchmark::State& state) {
  auto pool = sample_terms(256, static_cast<std::uint64_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const OrdTerm& a = pool[i % pool.size()];
    const OrdTerm& b = pool[(i * 7 + 1) % pool.size()];
    benchmark::DoNotOptimize(mul(a, b));
    ++i;
  }
}
BENCHMARK(BM_ord_mul)->Arg(4)->Arg(8);

void BM_leq_r(benchmark::State& state) {
  Rng rng(7);
  std::vector<GapSeq> pool;
  for (int i = 0; i < 128; ++i)
    pool.push_back(random_seq(rng, 4, static_cast<std::uint64_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(leq_r(pool[i % pool.size()], pool[(i * 5 + 1) % pool.size()]));
    ++i;
  }
}
BENCHMARK(BM_leq_r)->Arg(8)->Arg(16)->Arg(32);

void BM_oracle_vs_dp(benchmark::State& state) {
  Rng rng(7);
  std::vector<GapSeq> pool;
  for (int i = 0; i < 64; ++i)
    pool.push_back(random_seq(rng, 3, static_cast<std::uint64_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle_leq(pool[i % pool.size()], pool[(i * 5 + 1) % pool.size()],
                   GapVariant::StrongRealizer));
    ++i;
  }
}
BENCHMARK(BM_oracle_vs_dp)->Arg(4)->Arg(6);

void BM_reify_push(benchmark::State& state) {
  Rng rng(11);
  for (auto _ : state) {
    TreeBadSeqReifier reifier(fin(3));
    OrdTerm last;
    int stall = 0;
    while (stall < 20) {
      try {
        last = reifier.push(random_tree(rng, 3, static_cast<std::uint64_t>(state.range(0))));
        stall = 0;
      } catch (const NotBad&) {
        ++stall;
      }
    }
    benchmark::DoNotOptimize(last);
  }
}
BENCHMARK(BM_reify_push)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_motype_G(benchmark::State& state) {
  OrdTerm a = add(mul(omega_pow(omega()), fin(2)), add(omega(), fin(3)));
  for (auto _ : state) benchmark::DoNotOptimize(motype_G(a));
}
BENCHMARK(BM_motype_G);

}  // namespace

BENCHMARK_MAIN();
