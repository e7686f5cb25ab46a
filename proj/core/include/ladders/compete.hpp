#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ladders/chain.hpp"

namespace ladders {

/// Pairwise competition results under the fair-round rule: Q(i,j) is the
/// probability the player starting at states[i] finishes in a strictly
/// earlier round than one starting at states[j]; X = Q - Q^T is the winning
/// edge; draw(i,j) = 1 - Q(i,j) - Q(j,i).
struct WinMatrix {
  std::vector<int> states;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd X;
  Eigen::MatrixXd draw;
  int s_max = 0;

  int index(int square) const;
};

/// Accumulates Q(i,j) = sum_s f_i(s) (1 - g_j(s)) by per-step rank-1
/// updates. Warns (via `tail_warning`) when profile tails exceed 1e-9,
/// in which case Q underestimates.
WinMatrix win_matrix(const DurationProfile& profile,
                     bool* tail_warning = nullptr);

/// A directed 3-cycle of states with its edges and bottleneck c.
/// Canonical orientation: i is the smallest state in the cycle and the
/// edge leaving i is listed first.
struct Triangle {
  int i = 0, j = 0, k = 0;
  double edge_ij = 0, edge_jk = 0, edge_ki = 0;
  double c = 0;  // min of the three edges
};

/// Exhaustive scan over all directed triples, maximizing the bottleneck
/// edge. Returns the maximizer even when c <= 0 (callers check c > 0 for
/// intransitivity). Ties broken by lexicographically smallest (i, j, k).
/// Throws std::invalid_argument with fewer than 3 states.
Triangle best_triangle(const WinMatrix& win);

/// All directed triangles with bottleneck >= c_min, each cycle reported
/// once in canonical orientation, sorted lexicographically by (i, j, k).
std::vector<Triangle> triangles_above(const WinMatrix& win, double c_min);

}  // namespace ladders
