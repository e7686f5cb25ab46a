#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace ladders {

using Rational = boost::rational<long long>;

class DiceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A die as a list of (value, probability) faces with exact rational
/// probabilities summing to 1. Values need not be distinct across dice.
struct Die {
  struct Face {
    long long value = 0;
    Rational prob{1};
  };
  std::string label;
  std::vector<Face> faces;
};

/// Validates probabilities (positive, sum exactly 1, at least one face).
Die make_die(std::string label, std::vector<Die::Face> faces);

/// Convenience: fair die over the given values.
Die fair_die(std::string label, std::vector<long long> values);

struct DuelResult {
  Rational win, draw, loss;
  Rational edge() const { return win - loss; }
};

/// Higher value wins; exact rational arithmetic throughout.
DuelResult duel(const Die& a, const Die& b);

enum class CycleMode { StrictMajority, PositiveEdge };

CycleMode cycle_mode_from_string(const std::string& s);

struct CycleReport {
  std::vector<DuelResult> duels;  // die t vs die t+1, wrapping
  bool qualifies = false;
};

/// Each die must beat its successor (wrapping): win > 1/2 under
/// StrictMajority, edge > 0 under PositiveEdge. Throws DiceError with
/// fewer than 3 dice.
CycleReport verify_cycle(const std::vector<Die>& dice, CycleMode mode);

/// Each face value v becomes c - v; probabilities unchanged. Reverses the
/// value order, so dueling complements swaps win and loss.
Die complement(const Die& die, long long c);

struct DiceConfig {
  std::vector<Die> dice;  // in cycle order: dice[t] beats dice[t+1]
};

/// Exhaustive search for PositiveEdge cycles among three dice with the
/// given face counts (each 1 or 2), integer values in [value_min,
/// value_max], and face probabilities with denominator <= max_denominator.
/// Deterministic lexicographic enumeration order.
std::vector<DiceConfig> search_cycles(const std::vector<int>& face_counts,
                                      int value_min, int value_max,
                                      int max_denominator);

/// The (1,1,2) case: two one-sided dice and one two-sided die. Expected
/// empty on any grid.
std::vector<DiceConfig> search_112(int value_min, int value_max,
                                   int max_denominator);

/// Parses the structured dice document (see docs/formats). Probabilities
/// are "numerator/denominator" strings; omitted probabilities mean fair.
std::vector<Die> load_dice(const std::string& text);
std::vector<Die> load_dice_file(const std::string& path);

std::string to_string(const Rational& r);

}  // namespace ladders
