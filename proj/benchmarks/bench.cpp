#include <benchmark/benchmark.h>

#include "ladders/board.hpp"
#include "ladders/chain.hpp"
#include "ladders/compete.hpp"
#include "ladders/simulate.hpp"

namespace {

const ladders::Board& paper_board() {
  static ladders::Board board =
      ladders::load_board_file(BOARDS_DIR "/paper-figure2.json");
  return board;
}

void BM_BuildChain(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ladders::build_chain(paper_board()));
}
BENCHMARK(BM_BuildChain);

void BM_AbsorptionProfile(benchmark::State& state) {
  auto chain = ladders::build_chain(paper_board());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ladders::absorption_profile(chain, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AbsorptionProfile)->Arg(100)->Arg(1000);

void BM_WinMatrix(benchmark::State& state) {
  auto profile =
      ladders::absorption_profile(ladders::build_chain(paper_board()), 1000);
  for (auto _ : state)
    benchmark::DoNotOptimize(ladders::win_matrix(profile));
}
BENCHMARK(BM_WinMatrix);

void BM_BestTriangle(benchmark::State& state) {
  auto win = ladders::win_matrix(
      ladders::absorption_profile(ladders::build_chain(paper_board()), 1000));
  for (auto _ : state) benchmark::DoNotOptimize(ladders::best_triangle(win));
}
BENCHMARK(BM_BestTriangle);

void BM_PlayGames(benchmark::State& state) {
  const auto& board = paper_board();
  std::uint64_t game = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(ladders::play_game(board, 0, {1, game++}));
}
BENCHMARK(BM_PlayGames);

void BM_PairedEdges(benchmark::State& state) {
  const auto& board = paper_board();
  for (auto _ : state)
    benchmark::DoNotOptimize(ladders::edge_paired_games(
        board, 69, 79, static_cast<std::uint64_t>(state.range(0)), 7));
}
BENCHMARK(BM_PairedEdges)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
