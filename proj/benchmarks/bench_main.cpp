#include <benchmark/benchmark.h>

#include "hnnembed/dehn.hpp"
#include "hnnembed/presentation.hpp"
#include "hnnembed/stallings.hpp"
#include "hnnembed/w_family.hpp"
#include "hnnembed/words.hpp"

using namespace hnnembed;

namespace {

Alphabet alphabet_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return Alphabet(names);
}

std::vector<Letter> letters_of(std::size_t n) {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t g = 0; g < n; ++g) gens.push_back(g);
  return signed_letters(gens);
}

void BM_ComputePieces(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto letters = letters_of(3);
  std::vector<Word> rels;
  for (int i = 0; i < 3; ++i) rels.push_back(cyclic_reduce(random_reduced_word(rng, letters, len)).core);
  const Presentation p(alphabet_of(3), rels);
  for (auto _ : state) benchmark::DoNotOptimize(compute_pieces(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputePieces)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Fold(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto letters = letters_of(3);
  std::vector<Word> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_reduced_word(rng, letters, 12));
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_core(gens));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fold)->RangeMultiplier(2)->Range(2, 128)->Complexity();

void BM_EulerianDigramWord(benchmark::State& state) {
  const Alphabet a = alphabet_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_digram_word(a));
}
BENCHMARK(BM_EulerianDigramWord)->DenseRange(2, 10, 2);

void BM_DehnSolve(benchmark::State& state) {
  const Alphabet cc{"c1", "c2"};
  const Presentation p(cc, generate_w_family(3, cc, 0, 1).words);
  const DehnSolver solver(p);
  Rng rng(3);
  std::vector<Word> samples;
  for (int i = 0; i < 64; ++i) samples.push_back(random_trivial_word(rng, p, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(samples[i++ % samples.size()]));
}
BENCHMARK(BM_DehnSolve)->RangeMultiplier(2)->Range(1, 16);

}  // namespace
BENCHMARK_MAIN();
