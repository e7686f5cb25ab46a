#include "ladders/compete.hpp"

#include <algorithm>
#include <stdexcept>

namespace ladders {

int WinMatrix::index(int square) const {
  for (int i = 0; i < static_cast<int>(states.size()); ++i)
    if (states[i] == square) return i;
  throw std::invalid_argument("square " + std::to_string(square) +
                              " is not a state of this matrix");
}

WinMatrix win_matrix(const DurationProfile& profile, bool* tail_warning) {
  const int n = static_cast<int>(profile.states.size());
  bool warn = false;
  for (double t : profile.tail)
    if (t > 1e-9) warn = true;
  if (tail_warning) *tail_warning = warn;

  WinMatrix win;
  win.states = profile.states;
  win.s_max = profile.s_max;
  win.Q = Eigen::MatrixXd::Zero(n, n);

  // rank-1 accumulation: Q += f(s) * (1 - g(s))^T for each step
  Eigen::VectorXd fs(n), survive(n);
  for (int s = 0; s <= profile.s_max; ++s) {
    for (int i = 0; i < n; ++i) {
      fs[i] = profile.f[i][s];
      survive[i] = 1.0 - profile.g[i][s];
    }
    win.Q.noalias() += fs * survive.transpose();
  }
  win.X = win.Q - win.Q.transpose();
  win.draw = Eigen::MatrixXd::Ones(n, n) - win.Q - win.Q.transpose();
  return win;
}

namespace {

Triangle make_triangle(const WinMatrix& win, int a, int b, int c) {
  Triangle t;
  t.i = win.states[a];
  t.j = win.states[b];
  t.k = win.states[c];
  t.edge_ij = win.X(a, b);
  t.edge_jk = win.X(b, c);
  t.edge_ki = win.X(c, a);
  t.c = std::min({t.edge_ij, t.edge_jk, t.edge_ki});
  return t;
}

bool lex_less(const Triangle& a, const Triangle& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return a.k < b.k;
}

// Visits each directed 3-cycle once, in canonical orientation: the first
// state is the smallest of the three, and both directions around the
// cycle are distinct candidates.
template <typename Fn>
void for_each_cycle(const WinMatrix& win, Fn&& fn) {
  const int n = static_cast<int>(win.states.size());
  // index order by ascending state number
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return win.states[a] < win.states[b]; });
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        fn(make_triangle(win, order[a], order[b], order[c]));
        fn(make_triangle(win, order[a], order[c], order[b]));
      }
}

}  // namespace

Triangle best_triangle(const WinMatrix& win) {
  if (win.states.size() < 3)
    throw std::invalid_argument("triangle search needs at least 3 states");
  bool have = false;
  Triangle best;
  for_each_cycle(win, [&](const Triangle& t) {
    if (!have || t.c > best.c || (t.c == best.c && lex_less(t, best))) {
      best = t;
      have = true;
    }
  });
  return best;
}

std::vector<Triangle> triangles_above(const WinMatrix& win, double c_min) {
  std::vector<Triangle> out;
  if (win.states.size() < 3) return out;
  for_each_cycle(win, [&](const Triangle& t) {
    if (t.c >= c_min) out.push_back(t);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace ladders
