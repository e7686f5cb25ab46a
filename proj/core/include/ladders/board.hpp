#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ladders {

/// What happens when a move would land past the final square.
enum class Overshoot { Reflect, Stay, Finish };

std::string to_string(Overshoot policy);
Overshoot overshoot_from_string(const std::string& s);

class BoardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A race-game board: a strip of squares 0..size with redirects
/// (snakes/ladders). Immutable after construction; construction validates
/// the redirect map (range checks, no self-redirects, no cycles).
class Board {
public:
  Board(int size, std::map<int, int> redirects,
        Overshoot policy = Overshoot::Reflect, std::string name = {});

  int size() const { return size_; }
  const std::map<int, int>& redirects() const { return redirects_; }
  Overshoot overshoot() const { return policy_; }
  const std::string& name() const { return name_; }

  bool is_redirect_source(int square) const {
    return redirects_.count(square) != 0;
  }

  /// Follows redirects from `square` to a fixpoint. A non-redirect square
  /// returns itself.
  int resting_square(int square) const;

  /// One die roll from a resting, non-finish square: advance, apply the
  /// overshoot policy, then resolve redirects. Reflection happens before
  /// redirect resolution.
  int resolve_move(int state, int roll) const;

  /// All squares a player can actually occupy, ascending (0 and size
  /// included, redirect sources excluded).
  std::vector<int> resting_squares() const;

private:
  int size_;
  std::map<int, int> redirects_;
  Overshoot policy_;
  std::string name_;
  std::vector<int> resting_;  // fixpoint of the redirect map, per square
};

/// Parses a board document: either the canonical structured format or a
/// whitespace-separated flat track (see docs/formats). Throws BoardError.
Board load_board(const std::string& text);
Board load_board_file(const std::string& path);

/// Canonical serialization; load_board(to_canonical(b)) round-trips exactly.
std::string to_canonical(const Board& board);

}  // namespace ladders
