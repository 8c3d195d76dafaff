#include <benchmark/benchmark.h>

#include "diffdef/definability.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/verify.hpp"
#include "generators.hpp"

using namespace diffdef;

namespace {

const Definition& example() {
  static const Definition d = define_from_curve(parse_equation("(y' - D(x,2)) * x' = 0"));
  return d;
}

const Definition& corpus_curve() {
  static const Definition d = [] {
    gen::Gen g(3);
    DiffPoly f = g.graph_curve();
    while (f.total_degree() < 3) f = g.graph_curve();
    return define_from_curve(f);
  }();
  return d;
}

template <auto Check>
void run(benchmark::State& state, const Definition& d) {
  const auto samples = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    SemanticReport r = Check(d.formula, d.relations(), d.witnesses, Var::x(), d.trace.target(), ModelConfig{}, samples);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * samples);
}

void BM_ExampleParallel(benchmark::State& s) { run<semantic_check>(s, example()); }
void BM_ExampleSerial(benchmark::State& s) { run<semantic_check_serial>(s, example()); }
void BM_CorpusParallel(benchmark::State& s) { run<semantic_check>(s, corpus_curve()); }
void BM_CorpusSerial(benchmark::State& s) { run<semantic_check_serial>(s, corpus_curve()); }

}  // namespace

BENCHMARK(BM_ExampleParallel)->Arg(16)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExampleSerial)->Arg(16)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusParallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusSerial)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
