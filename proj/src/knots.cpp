#include "qknot/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qknot/errors.hpp"

namespace qknot {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::InvalidArgument, "braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strands_)
      throw Error(ErrorCode::InvalidArgument,
                  "generator " + std::to_string(l.generator) + " out of range for " + std::to_string(strands_) +
                      " strands");
    if (l.sign != 1 && l.sign != -1) throw Error(ErrorCode::InvalidArgument, "letter sign must be +-1");
  }
}

BraidWord BraidWord::from_ints(int strands, const std::vector<int>& letters) {
  std::vector<BraidLetter> out;
  int needed = 1;
  for (int v : letters) {
    if (v == 0) throw Error(ErrorCode::ParseError, "generator 0 is not allowed");
    out.push_back({std::abs(v), v > 0 ? 1 : -1});
    needed = std::max(needed, std::abs(v) + 1);
  }
  return BraidWord(strands > 0 ? strands : needed, std::move(out));
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::istringstream is{std::string(text)};
  std::vector<int> values;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad braid letter '" + token + "'");
    }
    if (used != token.size()) throw Error(ErrorCode::ParseError, "bad braid letter '" + token + "'");
    values.push_back(v);
  }
  return from_ints(strands, values);
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters_) w += l.sign;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  // pos[i]: current position of the strand that started at position i
  std::vector<int> pos(strands_);
  for (int i = 0; i < strands_; ++i) pos[i] = i;
  for (const auto& l : letters_) {
    const int a = l.generator - 1;
    for (auto& p : pos) {
      if (p == a) {
        p = a + 1;
      } else if (p == a + 1) {
        p = a;
      }
    }
  }
  return pos;
}

int BraidWord::component_count() const {
  auto perm = permutation();
  std::vector<bool> seen(strands_, false);
  int cycles = 0;
  for (int i = 0; i < strands_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<BraidLetter> stack;
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(strands_, std::move(stack));
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i].sign * letters_[i].generator;
  return os.str();
}

SingularBraidWord::SingularBraidWord(BraidWord b, std::vector<std::size_t> marked)
    : braid(std::move(b)), marks(std::move(marked)) {
  std::sort(marks.begin(), marks.end());
  if (std::adjacent_find(marks.begin(), marks.end()) != marks.end())
    throw Error(ErrorCode::InvalidArgument, "double point marked twice");
  for (auto m : marks)
    if (m >= braid.length()) throw Error(ErrorCode::InvalidArgument, "mark beyond braid length");
}

LongKnotDiagram::LongKnotDiagram(std::vector<DiagramEvent> events) : events_(std::move(events)) {
  // lanes: true = upward
  std::vector<bool> up{true};
  for (const auto& e : events_) {
    const int n = static_cast<int>(up.size());
    switch (e.kind) {
      case DiagramEvent::Kind::Crossing:
        if (e.lane < 0 || e.lane + 1 >= n || !up[e.lane] || !up[e.lane + 1])
          throw Error(ErrorCode::InvalidArgument, "crossing must join two upward lanes");
        if (e.sign != 1 && e.sign != -1) throw Error(ErrorCode::InvalidArgument, "crossing sign must be +-1");
        writhe_ += e.sign;
        break;
      case DiagramEvent::Kind::Cap:
        if (e.lane < 0 || e.lane + 1 >= n) throw Error(ErrorCode::InvalidArgument, "cap lane out of range");
        if (up[e.lane] != (e.turn == Turn::LeftUp) || up[e.lane + 1] == up[e.lane])
          throw Error(ErrorCode::InvalidArgument, "cap orientation does not match lanes");
        up.erase(up.begin() + e.lane, up.begin() + e.lane + 2);
        break;
      case DiagramEvent::Kind::Cup:
        if (e.lane < 0 || e.lane > n) throw Error(ErrorCode::InvalidArgument, "cup lane out of range");
        up.insert(up.begin() + e.lane, {e.turn == Turn::LeftUp, e.turn != Turn::LeftUp});
        break;
    }
    max_lanes_ = std::max(max_lanes_, static_cast<int>(up.size()));
  }
  if (up.size() != 1 || !up[0]) throw Error(ErrorCode::InvalidArgument, "diagram must end with one upward strand");
}

LongKnotDiagram closure_to_long(const BraidWord& b) {
  if (!b.closes_to_knot())
    throw Error(ErrorCode::NotAKnot, "closure of '" + b.to_string() + "' has " +
                                         std::to_string(b.component_count()) + " components");
  const int s = b.strands();
  std::vector<DiagramEvent> events;
  // nested cups: braid strand k (1..s-1) returns on lane 2s-1-k
  for (int k = 1; k < s; ++k) events.push_back(DiagramEvent::cup(k, Turn::LeftUp));
  for (const auto& l : b.letters()) events.push_back(DiagramEvent::crossing(l.sign, l.generator - 1));
  for (int k = s - 1; k >= 1; --k) events.push_back(DiagramEvent::cap(k, Turn::LeftUp));
  return LongKnotDiagram(std::move(events));
}

LongKnotDiagram normalize_writhe(const LongKnotDiagram& d) {
  const int w = d.writhe();
  if (w == 0) return d;
  std::vector<DiagramEvent> events = d.events();
  const int sign = w > 0 ? -1 : 1;
  for (int i = 0; i < std::abs(w); ++i) {
    events.push_back(DiagramEvent::cup(1, Turn::LeftUp));
    events.push_back(DiagramEvent::crossing(sign, 0));
    events.push_back(DiagramEvent::cap(1, Turn::LeftUp));
  }
  return LongKnotDiagram(std::move(events));
}

void KnotCombination::add(const BraidWord& b, const Int& coeff) {
  if (coeff == 0) return;
  BraidWord key = b.freely_reduced();
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

KnotCombination& KnotCombination::operator+=(const KnotCombination& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

KnotCombination& KnotCombination::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= scalar;
  return *this;
}

KnotCombination resolve_singular(const SingularBraidWord& sb) {
  const std::size_t d = sb.double_points();
  if (d > 20) throw Error(ErrorCode::InvalidArgument, "too many double points");
  KnotCombination out;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    std::vector<BraidLetter> letters = sb.braid.letters();
    int sign = 1;
    for (std::size_t k = 0; k < d; ++k) {
      const int chosen = (mask >> k) & 1UL ? -1 : 1;
      letters[sb.marks[k]].sign = chosen;
      sign *= chosen;
    }
    BraidWord b(sb.braid.strands(), std::move(letters));
    if (!b.closes_to_knot()) throw Error(ErrorCode::NotAKnot, "resolution '" + b.to_string() + "' is a link");
    out.add(b, sign);
  }
  return out;
}

namespace {

struct TableEntry {
  const char* name;
  int strands;
  std::vector<int> letters;
};

const std::vector<TableEntry>& table() {
  static const std::vector<TableEntry> entries = {
      {"unknot", 1, {}},
      {"trefoil", 2, {1, 1, 1}},
      {"figure8", 3, {1, -2, 1, -2}},
      {"5_1", 2, {1, 1, 1, 1, 1}},
      {"5_2", 3, {1, 1, 1, 2, -1, 2}},
      {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
      {"6_2", 3, {1, 1, 1, -2, 1, -2}},
      {"6_3", 3, {1, 1, -2, 1, -2, -2}},
      {"7_1", 2, {1, 1, 1, 1, 1, 1, 1}},
  };
  return entries;
}

}  // namespace

BraidWord knot_table(std::string_view name) {
  for (const auto& e : table())
    if (name == e.name) return BraidWord::from_ints(e.strands, e.letters);
  throw Error(ErrorCode::UnknownKnot, std::string(name));
}

const std::vector<std::string>& knot_table_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : table()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

}  // namespace qknot
