#pragma once

/**
 * @file knots.hpp
 * @brief Braid presentations, long-knot event diagrams, singular braids and
 *        integer combinations of knots.
 */

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qknot/bigint.hpp"

namespace qknot {

struct BraidLetter {
  int generator;  // 1-based: sigma_generator acts on strands generator, generator+1
  int sign;       // +1 or -1
  auto operator<=>(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// Whitespace-separated signed generator indices, e.g. "1 1 -2". Strand count
  /// defaults to max|i| + 1.
  static BraidWord parse(std::string_view text, int strands = 0);
  /// Signed integer form, e.g. {1, 1, -2}.
  static BraidWord from_ints(int strands, const std::vector<int>& letters);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  int writhe() const;
  /// Permutation induced on strand positions (0-based): perm[i] = where strand at bottom position i ends.
  std::vector<int> permutation() const;
  int component_count() const;
  bool closes_to_knot() const { return component_count() == 1; }

  /// Removes adjacent sigma_i sigma_i^{-1} pairs until none remain.
  BraidWord freely_reduced() const;
  std::string to_string() const;

  auto operator<=>(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

/// Braid word with marked double points; the sign stored at a marked letter is ignored.
struct SingularBraidWord {
  BraidWord braid;
  std::vector<std::size_t> marks;

  SingularBraidWord(BraidWord b, std::vector<std::size_t> marked);
  std::size_t double_points() const { return marks.size(); }
};

/// Cup/cap shape: which of the two legs carries the strand upward.
enum class Turn { LeftUp, RightUp };

struct CrossingEvent {
  int sign;
  int lane;  // crossing between lanes lane and lane+1
};
struct CapEvent {
  int lane;  // joins lanes lane and lane+1
  Turn turn;
};
struct CupEvent {
  int lane;  // creates lanes lane and lane+1
  Turn turn;
};

struct DiagramEvent {
  enum class Kind { Crossing, Cap, Cup };
  Kind kind;
  int lane;
  int sign;   // crossings only
  Turn turn;  // caps and cups only

  static DiagramEvent crossing(int sign, int lane) { return {Kind::Crossing, lane, sign, Turn::LeftUp}; }
  static DiagramEvent cap(int lane, Turn turn) { return {Kind::Cap, lane, 0, turn}; }
  static DiagramEvent cup(int lane, Turn turn) { return {Kind::Cup, lane, 0, turn}; }
  bool operator==(const DiagramEvent&) const = default;
};

/**
 * A 1-1 tangle read bottom to top. Lanes are positions among the strands
 * currently present; the diagram starts and ends with the single open strand
 * on lane 0, oriented upward. Crossings only ever involve two upward lanes.
 */
class LongKnotDiagram {
 public:
  LongKnotDiagram() = default;
  explicit LongKnotDiagram(std::vector<DiagramEvent> events);

  const std::vector<DiagramEvent>& events() const { return events_; }
  int writhe() const { return writhe_; }
  int max_lanes() const { return max_lanes_; }

 private:
  std::vector<DiagramEvent> events_;
  int writhe_ = 0;
  int max_lanes_ = 1;
};

/// Long knot whose closure is the closure of b; strand 0 stays open and the
/// others are closed on the right. Throws NotAKnot for links.
LongKnotDiagram closure_to_long(const BraidWord& b);

/// Appends |w| kinks of sign -sign(w) on the open strand so the writhe becomes 0.
LongKnotDiagram normalize_writhe(const LongKnotDiagram& d);

/// Formal Z-linear combination of braid closures. Keys are freely reduced words.
class KnotCombination {
 public:
  KnotCombination() = default;

  void add(const BraidWord& b, const Int& coeff);
  const std::map<BraidWord, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  KnotCombination& operator+=(const KnotCombination& other);
  KnotCombination& operator*=(const Int& scalar);
  friend KnotCombination operator+(KnotCombination a, const KnotCombination& b) { return a += b; }
  friend KnotCombination operator*(KnotCombination a, const Int& s) { return a *= s; }

 private:
  std::map<BraidWord, Int> terms_;
};

/// Sum over the 2^d resolutions of the double points, each weighted by the product
/// of chosen signs. Throws NotAKnot when a resolution is a link.
KnotCombination resolve_singular(const SingularBraidWord& sb);

/// Standard braid presentations for unknot, trefoil, figure8, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1.
BraidWord knot_table(std::string_view name);
const std::vector<std::string>& knot_table_names();

}  // namespace qknot
