#pragma once

#include <Eigen/Dense>
#include <unordered_map>
#include <vector>

#include "ladders/board.hpp"

namespace ladders {

class ChainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Absorbing Markov chain over a board's resting squares. The finish square
/// is the unique absorbing state; every off-absorbing row has at most six
/// nonzero entries, each a multiple of 1/6.
struct GameChain {
  std::vector<int> states;                   // ascending square numbers
  std::unordered_map<int, int> index_of;     // square -> dense index
  Eigen::MatrixXd transition;                // row-stochastic
  int absorbing_index = -1;

  int index(int square) const;
};

GameChain build_chain(const Board& board);

/// Finish-time distributions truncated at s_max. f[i][s] is the probability
/// the game from states[i] ends exactly at step s; g[i][s] within s steps.
struct DurationProfile {
  std::vector<int> states;
  int s_max = 0;
  std::vector<std::vector<double>> f;  // [state][s], s = 0..s_max
  std::vector<std::vector<double>> g;
  std::vector<double> tail;            // 1 - g[i][s_max]
};

/// Runs the vector recursion g(0) = indicator(absorbing), g(s) = A g(s-1);
/// g[i][s] equals the i-th entry of A^s applied to the absorbing indicator,
/// i.e. the s-step absorption probability, without forming matrix powers.
DurationProfile absorption_profile(const GameChain& chain, int s_max = 1000);

/// Truncated sum over the profile. Returns per-state expectations in the
/// profile's state order; `tail_warning` (if non-null) is set when any
/// tail exceeds 1e-9.
std::vector<double> expected_durations(const DurationProfile& profile,
                                       bool* tail_warning = nullptr);

/// Direct linear solve of (I - Q_t) E = 1 over transient states.
/// Verifies first that the finish is reachable from every state; throws
/// ChainError naming an offending state otherwise.
std::vector<double> expected_durations_exact(const GameChain& chain);

/// Probability that `state` is visited again before absorption:
/// p = 1 - 1/N[i][i] with N the fundamental matrix (I - Q_t)^{-1}.
/// Throws ChainError if `state` is not transient.
double return_probability(const GameChain& chain, int state);

}  // namespace ladders
