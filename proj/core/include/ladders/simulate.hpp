#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladders/board.hpp"
#include "ladders/rng.hpp"

namespace ladders {

class SimulationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Per-state counts of observed game durations.
struct DurationHistogram {
  // state -> counts indexed by duration
  std::map<int, std::vector<std::uint64_t>> counts;

  void add(int state, int duration);
  std::uint64_t total(int state) const;
  int max_duration() const;
  std::uint64_t total_samples() const;
};

/// Win/loss/draw estimate for a pair of start states. `stderr_edge` is
/// present only for the paired-game method, where per-pair outcomes are
/// independent.
struct EdgeEstimate {
  double win = 0, loss = 0, draw = 0;
  double edge = 0;  // win - loss
  std::optional<double> stderr_edge;
  std::string method;
  std::uint64_t games = 0;
};

/// Steps beyond which a game is assumed stuck on a malformed board.
inline constexpr int kMaxGameSteps = 1'000'000;

/// One full game from `start`: repeated die rolls until the finish square.
/// Returns the visited resting squares, starting with `start` and ending
/// at the finish; duration = path.size() - 1.
std::vector<int> play_game(const Board& board, int start, RngSeed rng);

/// Independent games, one duration sample per game per start.
/// Game g from the a-th listed start uses stream (a << 32) | g.
DurationHistogram simulate_per_start(const Board& board,
                                     const std::vector<int>& starts,
                                     std::uint64_t games_per_start,
                                     std::uint64_t seed);

/// All games start from square 0; a game visiting v_0 .. v_n = finish
/// contributes remaining-duration samples (v_t, n - t) for t < n. The
/// terminal finish visit is not sampled. Game g uses stream g.
DurationHistogram simulate_trajectory_reuse(const Board& board,
                                            std::uint64_t games,
                                            std::uint64_t seed);

/// Histogram-paired estimate: every i-sample compared against every
/// j-sample via the duration histograms, never pairwise over raw samples.
/// No standard error (comparisons are dependent).
EdgeEstimate edge_from_histograms(const DurationHistogram& h, int i, int j);

/// Simulates `games` independent pairs (one game from i with stream 2g,
/// one from j with stream 2g+1) and scores each pair; attaches the
/// standard error of the edge over per-pair outcomes.
EdgeEstimate edge_paired_games(const Board& board, int i, int j,
                               std::uint64_t games, std::uint64_t seed);

enum class VisitMethod { PerStart, TrajectoryReuse };

/// Empirical distribution of K, the number of visits to `state` from a
/// given visit onward (inclusive). PerStart starts each game at `state`;
/// TrajectoryReuse starts at 0 and samples every visit. Game g uses
/// stream g in both methods. Returns counts keyed by K; an empty map from
/// TrajectoryReuse means the state was never visited.
std::map<int, std::uint64_t> visit_count_samples(const Board& board,
                                                 int state,
                                                 std::uint64_t games,
                                                 std::uint64_t seed,
                                                 VisitMethod method);

/// Size-biased sampling identity for geometric visit counts: returns
/// (lhs, rhs) where lhs is the k-th-last-visit fraction
/// sum_{t>=k} p^{t-1}(1-p) / sum_{t>=1} t p^{t-1}(1-p) in closed form
/// and rhs = p^{k-1}(1-p). Throws std::domain_error unless 0 < p < 1.
std::pair<double, double> geometric_identity(double p, int k);

}  // namespace ladders
