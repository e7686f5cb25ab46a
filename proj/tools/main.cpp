// ladders: snakes-and-ladders race-game analysis CLI.
//
// Subcommands: expectations, winmatrix, cycles, simulate, dice.
// All reports are CSV by default and deterministic for a fixed seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ladders/board.hpp"
#include "ladders/chain.hpp"
#include "ladders/compete.hpp"
#include "ladders/dice.hpp"
#include "ladders/rng.hpp"
#include "ladders/simulate.hpp"

namespace {

using namespace ladders;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Output {
  std::ostream* out = &std::cout;
  std::ofstream file;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    out = &file;
  }
  std::ostream& os() { return *out; }
};

struct CommonOpts {
  std::string board_path;
  std::string out_path;
  std::string format = "csv";
  int s_max = 1000;
  std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_board = true) {
  auto* b = cmd->add_option("--board", opts.board_path, "board file (canonical or flat track)");
  if (needs_board) b->required();
  cmd->add_option("--smax", opts.s_max, "truncation horizon")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "base RNG seed");
  cmd->add_option("--format", opts.format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
  cmd->add_option("--out", opts.out_path, "write report to file instead of stdout");
}

int cmd_expectations(const CommonOpts& opts, const std::string& fg_path,
                     int fg_cap) {
  Board board = load_board_file(opts.board_path);
  GameChain chain = build_chain(board);
  DurationProfile profile = absorption_profile(chain, opts.s_max);
  bool tail_warn = false;
  auto trunc = expected_durations(profile, &tail_warn);
  auto exact = expected_durations_exact(chain);
  if (tail_warn)
    std::cerr << "warning: profile tail exceeds 1e-9; truncated expectations underestimate\n";

  if (!fg_path.empty()) {
    std::ofstream fg(fg_path);
    if (!fg) throw std::runtime_error("cannot open output file: " + fg_path);
    int cap = fg_cap < 0 ? profile.s_max : std::min(fg_cap, profile.s_max);
    fg << "state,s,f,g\n";
    for (std::size_t i = 0; i < profile.states.size(); ++i)
      for (int s = 0; s <= cap; ++s)
        fg << profile.states[i] << ',' << s << ',' << fmt(profile.f[i][s])
           << ',' << fmt(profile.g[i][s]) << '\n';
  }

  Output output;
  output.open(opts.out_path);
  std::ostream& os = output.os();
  if (opts.format == "csv") {
    os << "state,expected_moves,expected_moves_exact\n";
    for (std::size_t i = 0; i < chain.states.size(); ++i)
      os << chain.states[i] << ',' << fmt(trunc[i]) << ',' << fmt(exact[i]) << '\n';
  } else {
    os << "expected moves to finish (" << board.name() << ", smax=" << opts.s_max << ")\n";
    for (std::size_t i = 0; i < chain.states.size(); ++i)
      os << "  state " << chain.states[i] << ": " << fmt(exact[i]) << '\n';
  }
  return 0;
}

void print_matrix(std::ostream& os, const std::vector<int>& states,
                  const Eigen::MatrixXd& m, const std::string& title) {
  os << "# " << title << '\n' << "state";
  for (int s : states) os << ',' << s;
  os << '\n';
  for (std::size_t i = 0; i < states.size(); ++i) {
    os << states[i];
    for (std::size_t j = 0; j < states.size(); ++j) os << ',' << fmt(m(i, j));
    os << '\n';
  }
}

int cmd_winmatrix(const CommonOpts& opts) {
  Board board = load_board_file(opts.board_path);
  DurationProfile profile = absorption_profile(build_chain(board), opts.s_max);
  bool tail_warn = false;
  WinMatrix win = win_matrix(profile, &tail_warn);
  if (tail_warn)
    std::cerr << "warning: profile tail exceeds 1e-9; Q underestimates\n";

  Output output;
  output.open(opts.out_path);
  std::ostream& os = output.os();
  print_matrix(os, win.states, win.Q, "Q");
  os << '\n';
  print_matrix(os, win.states, win.X, "X");
  return 0;
}

int cmd_cycles(const CommonOpts& opts, double c_min) {
  Board board = load_board_file(opts.board_path);
  WinMatrix win = win_matrix(absorption_profile(build_chain(board), opts.s_max));
  auto triangles = triangles_above(win, c_min);

  Output output;
  output.open(opts.out_path);
  std::ostream& os = output.os();
  if (opts.format == "csv") {
    os << "i,j,k,edge_ij,edge_jk,edge_ki,c\n";
    for (const auto& t : triangles)
      os << t.i << ',' << t.j << ',' << t.k << ',' << fmt(t.edge_ij) << ','
         << fmt(t.edge_jk) << ',' << fmt(t.edge_ki) << ',' << fmt(t.c) << '\n';
  } else {
    if (triangles.empty()) {
      os << "no triangle with bottleneck >= " << fmt(c_min) << '\n';
    } else {
      for (const auto& t : triangles)
        os << t.i << " > " << t.j << " > " << t.k << " > " << t.i
           << "  (edges " << fmt(t.edge_ij) << ", " << fmt(t.edge_jk) << ", "
           << fmt(t.edge_ki) << "; c = " << fmt(t.c) << ")\n";
    }
  }
  return 0;
}

void print_edge_row(std::ostream& os, int i, int j, const EdgeEstimate& e,
                    std::uint64_t seed) {
  os << i << ',' << j << ',' << fmt(e.win) << ',' << fmt(e.loss) << ','
     << fmt(e.draw) << ',' << fmt(e.edge) << ','
     << (e.stderr_edge ? fmt(*e.stderr_edge) : std::string()) << ','
     << e.method << ',' << e.games << ',' << seed << '\n';
}

int cmd_simulate(const CommonOpts& opts, const std::string& method,
                 std::vector<int> states, std::uint64_t games) {
  Board board = load_board_file(opts.board_path);

  Output output;
  output.open(opts.out_path);
  std::ostream& os = output.os();

  auto edge_header = [&] {
    os << "i,j,win,loss,draw,edge,stderr,method,games,seed\n";
  };
  auto cyclic_pairs = [&](auto&& fn) {
    if (states.size() < 2) return;
    for (std::size_t a = 0; a < states.size(); ++a)
      fn(states[a], states[(a + 1) % states.size()]);
  };

  if (method == "paired") {
    if (states.size() < 2)
      throw SimulationError("paired method needs at least 2 --states");
    edge_header();
    cyclic_pairs([&](int i, int j) {
      print_edge_row(os, i, j, edge_paired_games(board, i, j, games, opts.seed),
                     opts.seed);
    });
    return 0;
  }

  if (method == "perstart" && states.empty())
    throw SimulationError("perstart method needs at least 1 --states");
  DurationHistogram hist =
      method == "perstart"
          ? simulate_per_start(board, states, games, opts.seed)
          : simulate_trajectory_reuse(board, games, opts.seed);

  os << "state,duration,count\n";
  for (const auto& [state, bins] : hist.counts) {
    if (!states.empty() && method == "reuse" &&
        std::find(states.begin(), states.end(), state) == states.end())
      continue;
    for (int d = 0; d < static_cast<int>(bins.size()); ++d)
      if (bins[d] != 0) os << state << ',' << d << ',' << bins[d] << '\n';
  }
  if (states.size() >= 2) {
    os << '\n';
    edge_header();
    cyclic_pairs([&](int i, int j) {
      print_edge_row(os, i, j, edge_from_histograms(hist, i, j), opts.seed);
    });
  }
  return 0;
}

int cmd_dice(const CommonOpts& opts, const std::string& dice_path,
             const std::string& mode_name) {
  auto dice = load_dice_file(dice_path);
  CycleMode mode = cycle_mode_from_string(mode_name);
  CycleReport report = verify_cycle(dice, mode);

  Output output;
  output.open(opts.out_path);
  std::ostream& os = output.os();
  if (opts.format == "csv") {
    os << "a,b,win,draw,loss,edge,win_dec,draw_dec,loss_dec,edge_dec\n";
    for (std::size_t t = 0; t < dice.size(); ++t) {
      const auto& d = report.duels[t];
      os << dice[t].label << ',' << dice[(t + 1) % dice.size()].label << ','
         << to_string(d.win) << ',' << to_string(d.draw) << ','
         << to_string(d.loss) << ',' << to_string(d.edge()) << ','
         << fmt(boost::rational_cast<double>(d.win)) << ','
         << fmt(boost::rational_cast<double>(d.draw)) << ','
         << fmt(boost::rational_cast<double>(d.loss)) << ','
         << fmt(boost::rational_cast<double>(d.edge())) << '\n';
    }
    os << "\ncycle," << mode_name << ',' << (report.qualifies ? "yes" : "no")
       << '\n';
  } else {
    for (std::size_t t = 0; t < dice.size(); ++t) {
      const auto& d = report.duels[t];
      os << dice[t].label << " vs " << dice[(t + 1) % dice.size()].label
         << ": win " << to_string(d.win) << " ("
         << fmt(boost::rational_cast<double>(d.win)) << "), draw "
         << to_string(d.draw) << ", loss " << to_string(d.loss) << ", edge "
         << to_string(d.edge()) << " ("
         << fmt(boost::rational_cast<double>(d.edge())) << ")\n";
    }
    os << "cycle (" << mode_name << "): "
       << (report.qualifies ? "qualifies" : "does not qualify") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snakes-and-ladders Markov analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  double c_min = 0.005;
  std::string method = "perstart";
  std::vector<int> states;
  std::uint64_t games = 100000;
  std::string dice_path;
  std::string mode_name = "strict";

  std::string fg_path;
  int fg_cap = -1;
  auto* exp = app.add_subcommand("expectations", "expected moves to finish per state");
  add_common(exp, opts);
  exp->add_option("--fg", fg_path, "also write the f/g distribution CSV here");
  exp->add_option("--fg-cap", fg_cap, "largest s in the f/g CSV (default smax)");

  auto* winm = app.add_subcommand("winmatrix", "pairwise win probabilities Q and edges X");
  add_common(winm, opts);

  auto* cyc = app.add_subcommand("cycles", "intransitive triangles with bottleneck >= cmin");
  add_common(cyc, opts);
  cyc->add_option("--cmin", c_min, "minimum bottleneck edge");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo histograms and edge estimates");
  add_common(sim, opts);
  sim->add_option("--method", method, "perstart|reuse|paired")
      ->check(CLI::IsMember({"perstart", "reuse", "paired"}));
  sim->add_option("--states", states, "start states (cyclic pairs for edges)")->delimiter(',');
  sim->add_option("--games", games, "games per start (or pairs)")->check(CLI::PositiveNumber);

  auto* dice = app.add_subcommand("dice", "exact dice duels and cycle verification");
  add_common(dice, opts, /*needs_board=*/false);
  dice->add_option("file", dice_path, "dice document")->required();
  dice->add_option("--mode", mode_name, "strict|positive")
      ->check(CLI::IsMember({"strict", "positive"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (exp->parsed()) return cmd_expectations(opts, fg_path, fg_cap);
    if (winm->parsed()) return cmd_winmatrix(opts);
    if (cyc->parsed()) return cmd_cycles(opts, c_min);
    if (sim->parsed()) return cmd_simulate(opts, method, states, games);
    if (dice->parsed()) return cmd_dice(opts, dice_path, mode_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
