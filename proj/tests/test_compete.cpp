#include "ladders/compete.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace ladders;

namespace {

Board mini10() { return load_board_file(BOARDS_DIR "/mini10.json"); }

DurationProfile mini10_profile(int s_max = 1000) {
  return absorption_profile(build_chain(mini10()), s_max);
}

// WinMatrix with X set directly, for synthetic ordering tests.
WinMatrix synthetic(const std::vector<int>& states,
                    const Eigen::MatrixXd& X) {
  WinMatrix w;
  w.states = states;
  w.X = X;
  const int n = static_cast<int>(states.size());
  w.Q = Eigen::MatrixXd::Constant(n, n, 0.25) + X / 2.0;
  w.draw = Eigen::MatrixXd::Ones(n, n) - w.Q - w.Q.transpose();
  return w;
}

}  // namespace

TEST_CASE("win matrix invariants") {
  WinMatrix win = win_matrix(mini10_profile());
  const int n = static_cast<int>(win.states.size());
  for (int i = 0; i < n; ++i) {
    CHECK(win.X(i, i) == 0.0);
    for (int j = 0; j < n; ++j) {
      CHECK(win.X(i, j) == -win.X(j, i));  // computed as one difference
      CHECK(win.Q(i, j) >= 0.0);
      CHECK(win.Q(i, j) <= 1.0);
      CHECK(win.draw(i, j) >= -1e-15);
      CHECK(std::abs(win.Q(i, j) + win.Q(j, i) + win.draw(i, j) - 1.0) <
            1e-12);
    }
  }
}

TEST_CASE("rank-1 accumulation equals the direct double sum") {
  DurationProfile p = mini10_profile(400);
  WinMatrix win = win_matrix(p);
  const int n = static_cast<int>(win.states.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double direct = 0.0;
      for (int s = 0; s <= p.s_max; ++s)
        direct += p.f[i][s] * (1.0 - p.g[j][s]);
      CHECK(std::abs(win.Q(i, j) - direct) < 1e-12);
    }
}

TEST_CASE("mini10 Q matches the dense-power brute force") {
  Board board = mini10();
  WinMatrix win = win_matrix(absorption_profile(build_chain(board), 1000));
  auto brute = oracle::brute_win_matrix(oracle::power_profile(board, 1000));
  const int n = static_cast<int>(win.states.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(win.Q(i, j) - brute[i][j]) < 1e-12);
}

TEST_CASE("tail warning when the horizon is too short") {
  bool warn = false;
  win_matrix(mini10_profile(3), &warn);
  CHECK(warn);
  warn = true;
  win_matrix(mini10_profile(1000), &warn);
  CHECK_FALSE(warn);
}

TEST_CASE("best triangle against an independent triple loop") {
  WinMatrix win = win_matrix(mini10_profile());
  Triangle best = best_triangle(win);
  CHECK(best.c == std::min({best.edge_ij, best.edge_jk, best.edge_ki}));

  const int n = static_cast<int>(win.states.size());
  double best_c = -2.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        best_c = std::max(best_c, std::min({win.X(a, b), win.X(b, c),
                                            win.X(c, a)}));
      }
  CHECK(best.c == doctest::Approx(best_c).epsilon(1e-15));
  // canonical orientation
  CHECK(best.i < best.j);
  CHECK(best.i < best.k);
}

TEST_CASE("a totally ordered matrix has no positive cycle") {
  std::vector<int> states{1, 2, 3, 4};
  Eigen::MatrixXd X(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      X(i, j) = i == j ? 0.0 : (i < j ? 0.1 * (j - i) : -0.1 * (i - j));
  Triangle t = best_triangle(synthetic(states, X));
  CHECK(t.c <= 0.0);
}

TEST_CASE("best_triangle needs at least 3 states") {
  std::vector<int> states{1, 2};
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(2, 2);
  CHECK_THROWS_AS(best_triangle(synthetic(states, X)),
                  std::invalid_argument);
}

TEST_CASE("triangles_above: bounds and oracle list") {
  WinMatrix win = win_matrix(mini10_profile());
  CHECK(triangles_above(win, 1.0).empty());  // edges are below 1

  auto listed = triangles_above(win, 0.0);
  // independent count of directed 3-cycles with min edge >= 0, one per
  // canonical orientation
  const int n = static_cast<int>(win.states.size());
  std::size_t expected = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (std::min({win.X(a, b), win.X(b, c), win.X(c, a)}) >= 0.0)
          ++expected;
        if (std::min({win.X(a, c), win.X(c, b), win.X(b, a)}) >= 0.0)
          ++expected;
      }
  CHECK(listed.size() == expected);
  for (const auto& t : listed) {
    CHECK(t.c >= 0.0);
    CHECK(t.i < t.j);
    CHECK(t.i < t.k);
    CHECK(t.c == std::min({t.edge_ij, t.edge_jk, t.edge_ki}));
  }
}

TEST_CASE("triangle membership is invariant under state relabeling") {
  DurationProfile p = mini10_profile();
  WinMatrix base = win_matrix(p);

  // permute the profile's state order and recompute
  DurationProfile perm = p;
  const int n = static_cast<int>(p.states.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = (i * 5 + 3) % n;  // a permutation
  {
    std::set<int> check(order.begin(), order.end());
    REQUIRE(check.size() == static_cast<std::size_t>(n));
  }
  for (int i = 0; i < n; ++i) {
    perm.states[i] = p.states[order[i]];
    perm.f[i] = p.f[order[i]];
    perm.g[i] = p.g[order[i]];
    perm.tail[i] = p.tail[order[i]];
  }
  WinMatrix shuffled = win_matrix(perm);

  Triangle a = best_triangle(base);
  Triangle b = best_triangle(shuffled);
  CHECK(a.i == b.i);
  CHECK(a.j == b.j);
  CHECK(a.k == b.k);
  CHECK(a.c == doctest::Approx(b.c).epsilon(1e-12));
}
