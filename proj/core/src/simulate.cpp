#include "ladders/simulate.hpp"

#include <cmath>

namespace ladders {

void DurationHistogram::add(int state, int duration) {
  auto& bins = counts[state];
  if (static_cast<int>(bins.size()) <= duration) bins.resize(duration + 1, 0);
  ++bins[duration];
}

std::uint64_t DurationHistogram::total(int state) const {
  auto it = counts.find(state);
  if (it == counts.end()) return 0;
  std::uint64_t n = 0;
  for (std::uint64_t c : it->second) n += c;
  return n;
}

int DurationHistogram::max_duration() const {
  int m = 0;
  for (const auto& [state, bins] : counts)
    for (int d = static_cast<int>(bins.size()) - 1; d >= 0; --d)
      if (bins[d] != 0) {
        if (d > m) m = d;
        break;
      }
  return m;
}

std::uint64_t DurationHistogram::total_samples() const {
  std::uint64_t n = 0;
  for (const auto& [state, bins] : counts)
    for (std::uint64_t c : bins) n += c;
  return n;
}

namespace {

// Core game loop without path recording; returns the duration.
int run_game(const Board& board, int start, SplitMix64& rng) {
  int state = start;
  int steps = 0;
  while (state != board.size()) {
    state = board.resolve_move(state, roll_die(rng));
    if (++steps > kMaxGameSteps)
      throw SimulationError("game from " + std::to_string(start) +
                            " exceeded " + std::to_string(kMaxGameSteps) +
                            " steps; board looks malformed");
  }
  return steps;
}

std::uint64_t per_start_stream(std::size_t start_index, std::uint64_t game) {
  return (static_cast<std::uint64_t>(start_index) << 32) | game;
}

}  // namespace

std::vector<int> play_game(const Board& board, int start, RngSeed seed) {
  if (start < 0 || start > board.size() || board.is_redirect_source(start))
    throw SimulationError("start " + std::to_string(start) +
                          " is not a resting square");
  SplitMix64 rng = make_stream(seed);
  std::vector<int> path{start};
  while (path.back() != board.size()) {
    path.push_back(board.resolve_move(path.back(), roll_die(rng)));
    if (static_cast<int>(path.size()) > kMaxGameSteps)
      throw SimulationError("game exceeded step cap; board looks malformed");
  }
  return path;
}

DurationHistogram simulate_per_start(const Board& board,
                                     const std::vector<int>& starts,
                                     std::uint64_t games_per_start,
                                     std::uint64_t seed) {
  if (games_per_start < 1)
    throw SimulationError("games_per_start must be >= 1");
  DurationHistogram hist;
  for (std::size_t a = 0; a < starts.size(); ++a) {
    int start = starts[a];
    if (start < 0 || start > board.size() || board.is_redirect_source(start))
      throw SimulationError("start " + std::to_string(start) +
                            " is not a resting square");
    hist.counts[start];  // state present even before first sample
    for (std::uint64_t g = 0; g < games_per_start; ++g) {
      SplitMix64 rng = make_stream({seed, per_start_stream(a, g)});
      hist.add(start, run_game(board, start, rng));
    }
  }
  return hist;
}

DurationHistogram simulate_trajectory_reuse(const Board& board,
                                            std::uint64_t games,
                                            std::uint64_t seed) {
  if (games < 1) throw SimulationError("games must be >= 1");
  DurationHistogram hist;
  std::vector<int> path;
  for (std::uint64_t g = 0; g < games; ++g) {
    path = play_game(board, 0, {seed, g});
    const int n = static_cast<int>(path.size()) - 1;  // rolls in the game
    // visit at time t still has n - t steps to go; final visit unsampled
    for (int t = 0; t < n; ++t) hist.add(path[t], n - t);
  }
  return hist;
}

EdgeEstimate edge_from_histograms(const DurationHistogram& h, int i, int j) {
  auto it_i = h.counts.find(i);
  auto it_j = h.counts.find(j);
  if (it_i == h.counts.end() || h.total(i) == 0)
    throw SimulationError("no samples for state " + std::to_string(i));
  if (it_j == h.counts.end() || h.total(j) == 0)
    throw SimulationError("no samples for state " + std::to_string(j));
  const auto& hi = it_i->second;
  const auto& hj = it_j->second;

  // count of j-samples strictly above each duration, by suffix sums
  long double wins = 0, draws = 0;
  const int dj = static_cast<int>(hj.size());
  std::vector<long double> above(dj + 1, 0);
  for (int d = dj - 1; d >= 0; --d)
    above[d] = above[d + 1] + static_cast<long double>(hj[d]);
  for (int d = 0; d < static_cast<int>(hi.size()); ++d) {
    if (hi[d] == 0) continue;
    long double ci = static_cast<long double>(hi[d]);
    if (d + 1 <= dj) wins += ci * above[d + 1];
    if (d < dj) draws += ci * static_cast<long double>(hj[d]);
  }
  long double pairs = static_cast<long double>(h.total(i)) *
                      static_cast<long double>(h.total(j));
  EdgeEstimate e;
  e.win = static_cast<double>(wins / pairs);
  e.draw = static_cast<double>(draws / pairs);
  e.loss = static_cast<double>((pairs - wins - draws) / pairs);
  e.edge = static_cast<double>((wins - (pairs - wins - draws)) / pairs);
  e.method = "histogram";
  e.games = h.total(i);
  return e;
}

EdgeEstimate edge_paired_games(const Board& board, int i, int j,
                               std::uint64_t games, std::uint64_t seed) {
  if (games < 2) throw SimulationError("paired estimate needs >= 2 games");
  std::uint64_t wins = 0, losses = 0;
  for (std::uint64_t g = 0; g < games; ++g) {
    SplitMix64 rng_i = make_stream({seed, 2 * g});
    SplitMix64 rng_j = make_stream({seed, 2 * g + 1});
    int di = run_game(board, i, rng_i);
    int dj = run_game(board, j, rng_j);
    if (di < dj)
      ++wins;
    else if (dj < di)
      ++losses;
  }
  EdgeEstimate e;
  double n = static_cast<double>(games);
  e.win = wins / n;
  e.loss = losses / n;
  e.draw = (games - wins - losses) / n;
  e.edge = e.win - e.loss;
  // per-pair outcome is +1/0/-1; sample standard error of its mean
  double second_moment = (wins + losses) / n;
  double var = second_moment - e.edge * e.edge;
  e.stderr_edge = std::sqrt(var / n);
  e.method = "paired";
  e.games = games;
  return e;
}

std::map<int, std::uint64_t> visit_count_samples(const Board& board,
                                                 int state,
                                                 std::uint64_t games,
                                                 std::uint64_t seed,
                                                 VisitMethod method) {
  if (state == board.size() || board.is_redirect_source(state) || state < 0 ||
      state > board.size())
    throw SimulationError("state " + std::to_string(state) +
                          " is not transient");
  std::map<int, std::uint64_t> hist;
  if (method == VisitMethod::PerStart) {
    for (std::uint64_t g = 0; g < games; ++g) {
      auto path = play_game(board, state, {seed, g});
      int k = 0;
      for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (path[t] == state) ++k;
      ++hist[k];
    }
  } else {
    for (std::uint64_t g = 0; g < games; ++g) {
      auto path = play_game(board, 0, {seed, g});
      int visits = 0;
      for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (path[t] == state) ++visits;
      // the m-th visit (1-based) sees visits - m + 1 visits from it onward
      for (int m = 1; m <= visits; ++m) ++hist[visits - m + 1];
    }
  }
  return hist;
}

std::pair<double, double> geometric_identity(double p, int k) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("p must lie strictly between 0 and 1");
  if (k < 1) throw std::domain_error("k must be positive");
  // numerator sum_{t>=k} p^{t-1}(1-p) = p^{k-1}; denominator
  // sum_{t>=1} t p^{t-1}(1-p) = 1/(1-p)
  double lhs = std::pow(p, k - 1) / (1.0 / (1.0 - p));
  double rhs = std::pow(p, k - 1) * (1.0 - p);
  return {lhs, rhs};
}

}  // namespace ladders
