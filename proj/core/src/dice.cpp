#include "ladders/dice.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace ladders {

Die make_die(std::string label, std::vector<Die::Face> faces) {
  if (faces.empty()) throw DiceError("die '" + label + "' has no faces");
  Rational sum{0};
  for (const auto& face : faces) {
    if (face.prob <= Rational{0})
      throw DiceError("die '" + label + "' has a non-positive probability");
    sum += face.prob;
  }
  if (sum != Rational{1})
    throw DiceError("die '" + label + "' probabilities sum to " +
                    to_string(sum) + ", not 1");
  return Die{std::move(label), std::move(faces)};
}

Die fair_die(std::string label, std::vector<long long> values) {
  std::vector<Die::Face> faces;
  Rational p{1, static_cast<long long>(values.size())};
  for (long long v : values) faces.push_back({v, p});
  return make_die(std::move(label), std::move(faces));
}

DuelResult duel(const Die& a, const Die& b) {
  DuelResult r{Rational{0}, Rational{0}, Rational{0}};
  for (const auto& fa : a.faces)
    for (const auto& fb : b.faces) {
      Rational p = fa.prob * fb.prob;
      if (fa.value > fb.value)
        r.win += p;
      else if (fa.value < fb.value)
        r.loss += p;
      else
        r.draw += p;
    }
  return r;
}

CycleMode cycle_mode_from_string(const std::string& s) {
  if (s == "strict") return CycleMode::StrictMajority;
  if (s == "positive") return CycleMode::PositiveEdge;
  throw DiceError("unknown cycle mode: '" + s + "' (want strict|positive)");
}

CycleReport verify_cycle(const std::vector<Die>& dice, CycleMode mode) {
  if (dice.size() < 3) throw DiceError("a cycle needs at least 3 dice");
  CycleReport report;
  report.qualifies = true;
  const Rational half{1, 2};
  for (std::size_t t = 0; t < dice.size(); ++t) {
    DuelResult d = duel(dice[t], dice[(t + 1) % dice.size()]);
    bool ok = mode == CycleMode::StrictMajority ? d.win > half
                                                : d.edge() > Rational{0};
    if (!ok) report.qualifies = false;
    report.duels.push_back(d);
  }
  return report;
}

Die complement(const Die& die, long long c) {
  Die out = die;
  for (auto& face : out.faces) face.value = c - face.value;
  return out;
}

namespace {

// All dice with the given face count over values in [lo, hi] and
// probability denominators <= max_den, in lexicographic order. Face
// values are strictly increasing (equal values would merge).
std::vector<Die> enumerate_dice(int n_faces, int lo, int hi, int max_den,
                                const std::string& label) {
  std::vector<Die> out;
  if (n_faces == 1) {
    for (long long v = lo; v <= hi; ++v)
      out.push_back(make_die(label, {{v, Rational{1}}}));
    return out;
  }
  if (n_faces != 2)
    throw DiceError("search supports face counts 1 and 2 only");
  // reduced fractions in (0,1), ordered by (denominator, numerator)
  std::vector<Rational> probs;
  for (int den = 2; den <= max_den; ++den)
    for (int num = 1; num < den; ++num)
      if (std::gcd(num, den) == 1) probs.push_back(Rational{num, den});
  for (long long v1 = lo; v1 <= hi; ++v1)
    for (long long v2 = v1 + 1; v2 <= hi; ++v2)
      for (const Rational& p : probs)
        out.push_back(make_die(label, {{v1, p}, {v2, Rational{1} - p}}));
  return out;
}

}  // namespace

std::vector<DiceConfig> search_cycles(const std::vector<int>& face_counts,
                                      int value_min, int value_max,
                                      int max_denominator) {
  if (face_counts.size() != 3)
    throw DiceError("search expects exactly 3 face counts");
  if (value_min > value_max || max_denominator < 1)
    throw DiceError("empty search grid");
  const char* labels[3] = {"A", "B", "C"};
  std::vector<std::vector<Die>> pools;
  for (int t = 0; t < 3; ++t)
    pools.push_back(enumerate_dice(face_counts[t], value_min, value_max,
                                   max_denominator, labels[t]));
  std::vector<DiceConfig> hits;
  for (const Die& a : pools[0])
    for (const Die& b : pools[1])
      for (const Die& c : pools[2]) {
        // both cycle directions over the fixed assignment
        for (auto order : {std::vector<Die>{a, b, c},
                           std::vector<Die>{a, c, b}}) {
          if (verify_cycle(order, CycleMode::PositiveEdge).qualifies)
            hits.push_back({std::move(order)});
        }
      }
  return hits;
}

std::vector<DiceConfig> search_112(int value_min, int value_max,
                                   int max_denominator) {
  return search_cycles({1, 1, 2}, value_min, value_max, max_denominator);
}

namespace {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational{std::stoll(s)};
    return Rational{std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw DiceError("cannot parse probability '" + s + "'");
  }
}

}  // namespace

std::vector<Die> load_dice(const std::string& text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("dice"))
    throw DiceError("dice document must be an object with a 'dice' list");
  std::vector<Die> out;
  for (const auto& d : doc.at("dice")) {
    std::string label = d.value("label", "die" + std::to_string(out.size()));
    std::vector<Die::Face> faces;
    bool any_explicit = false;
    for (const auto& f : d.at("faces")) {
      Die::Face face;
      if (f.is_number_integer()) {
        face.value = f.get<long long>();
      } else {
        face.value = f.at("value").get<long long>();
        if (f.contains("prob")) {
          face.prob = parse_rational(f.at("prob").get<std::string>());
          any_explicit = true;
        }
      }
      faces.push_back(face);
    }
    if (!any_explicit) {
      // omitted probabilities mean a fair die
      Rational p{1, static_cast<long long>(faces.size())};
      for (auto& face : faces) face.prob = p;
    }
    out.push_back(make_die(std::move(label), std::move(faces)));
  }
  return out;
}

std::vector<Die> load_dice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiceError("cannot open dice file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_dice(buf.str());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" +
         std::to_string(r.denominator());
}

}  // namespace ladders
