#include "ladders/chain.hpp"

#include <deque>

namespace ladders {

int GameChain::index(int square) const {
  auto it = index_of.find(square);
  if (it == index_of.end())
    throw ChainError("square " + std::to_string(square) +
                     " is not a state of this chain");
  return it->second;
}

GameChain build_chain(const Board& board) {
  GameChain chain;
  chain.states = board.resting_squares();
  const int n = static_cast<int>(chain.states.size());
  for (int i = 0; i < n; ++i) chain.index_of[chain.states[i]] = i;
  chain.absorbing_index = chain.index_of.at(board.size());

  chain.transition = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (i == chain.absorbing_index) {
      chain.transition(i, i) = 1.0;
      continue;
    }
    for (int roll = 1; roll <= 6; ++roll) {
      int dest = board.resolve_move(chain.states[i], roll);
      chain.transition(i, chain.index_of.at(dest)) += 1.0 / 6.0;
    }
  }
  return chain;
}

namespace {

struct SparseRow {
  // at most 6 (column, probability) entries per transient row
  int cols[6];
  double probs[6];
  int n = 0;
};

std::vector<SparseRow> sparse_rows(const GameChain& chain) {
  const int n = static_cast<int>(chain.states.size());
  std::vector<SparseRow> rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double p = chain.transition(i, j);
      if (p != 0.0) {
        rows[i].cols[rows[i].n] = j;
        rows[i].probs[rows[i].n] = p;
        ++rows[i].n;
      }
    }
  }
  return rows;
}

// Transient states in chain order, i.e. all but the absorbing one.
std::vector<int> transient_indices(const GameChain& chain) {
  std::vector<int> t;
  t.reserve(chain.states.size() - 1);
  for (int i = 0; i < static_cast<int>(chain.states.size()); ++i)
    if (i != chain.absorbing_index) t.push_back(i);
  return t;
}

void check_absorption_reachable(const GameChain& chain) {
  const int n = static_cast<int>(chain.states.size());
  // reverse reachability from the absorbing state
  std::vector<char> reach(n, 0);
  reach[chain.absorbing_index] = 1;
  std::deque<int> queue{chain.absorbing_index};
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i)
      if (!reach[i] && chain.transition(i, j) != 0.0) {
        reach[i] = 1;
        queue.push_back(i);
      }
  }
  for (int i = 0; i < n; ++i)
    if (!reach[i])
      throw ChainError("finish is unreachable from state " +
                       std::to_string(chain.states[i]));
}

Eigen::MatrixXd transient_submatrix(const GameChain& chain,
                                    const std::vector<int>& trans) {
  const int m = static_cast<int>(trans.size());
  Eigen::MatrixXd Qt(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      Qt(a, b) = chain.transition(trans[a], trans[b]);
  return Qt;
}

}  // namespace

DurationProfile absorption_profile(const GameChain& chain, int s_max) {
  if (s_max < 1) throw ChainError("s_max must be >= 1");
  const int n = static_cast<int>(chain.states.size());
  auto rows = sparse_rows(chain);

  DurationProfile profile;
  profile.states = chain.states;
  profile.s_max = s_max;
  profile.f.assign(n, std::vector<double>(s_max + 1, 0.0));
  profile.g.assign(n, std::vector<double>(s_max + 1, 0.0));
  profile.tail.assign(n, 0.0);

  std::vector<double> prev(n, 0.0), cur(n, 0.0);
  prev[chain.absorbing_index] = 1.0;
  for (int i = 0; i < n; ++i) profile.g[i][0] = prev[i];
  profile.f[chain.absorbing_index][0] = 1.0;

  for (int s = 1; s <= s_max; ++s) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      const SparseRow& row = rows[i];
      for (int k = 0; k < row.n; ++k) acc += row.probs[k] * prev[row.cols[k]];
      cur[i] = acc;
    }
    for (int i = 0; i < n; ++i) {
      profile.g[i][s] = cur[i];
      profile.f[i][s] = cur[i] - prev[i];
    }
    std::swap(prev, cur);
  }
  for (int i = 0; i < n; ++i) profile.tail[i] = 1.0 - prev[i];
  return profile;
}

std::vector<double> expected_durations(const DurationProfile& profile,
                                       bool* tail_warning) {
  const int n = static_cast<int>(profile.states.size());
  bool warn = false;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int s = 1; s <= profile.s_max; ++s)
      acc += static_cast<double>(s) * profile.f[i][s];
    e[i] = acc;
    if (profile.tail[i] > 1e-9) warn = true;
  }
  if (tail_warning) *tail_warning = warn;
  return e;
}

std::vector<double> expected_durations_exact(const GameChain& chain) {
  check_absorption_reachable(chain);
  auto trans = transient_indices(chain);
  const int m = static_cast<int>(trans.size());
  Eigen::MatrixXd Qt = transient_submatrix(chain, trans);
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) - Qt;
  Eigen::VectorXd e = M.partialPivLu().solve(Eigen::VectorXd::Ones(m));

  std::vector<double> out(chain.states.size(), 0.0);
  for (int a = 0; a < m; ++a) out[trans[a]] = e[a];
  return out;
}

double return_probability(const GameChain& chain, int state) {
  int idx = chain.index(state);
  if (idx == chain.absorbing_index)
    throw ChainError("state " + std::to_string(state) +
                     " is absorbing, not transient");
  check_absorption_reachable(chain);
  auto trans = transient_indices(chain);
  const int m = static_cast<int>(trans.size());
  int a = -1;
  for (int t = 0; t < m; ++t)
    if (trans[t] == idx) a = t;
  Eigen::MatrixXd Qt = transient_submatrix(chain, trans);
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) - Qt;
  // column a of the fundamental matrix N = (I - Qt)^{-1}
  Eigen::VectorXd col = M.partialPivLu().solve(Eigen::VectorXd::Unit(m, a));
  return 1.0 - 1.0 / col[a];
}

}  // namespace ladders
