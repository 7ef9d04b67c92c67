#ifndef BIDDING_BUDGET_HPP_
#define BIDDING_BUDGET_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bidding {

class BudgetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A budget with an optional advantage mark, ordered 0 < 0* < 1 < 1* < ...
// Stored as level = 2 * magnitude + mark, so succ/pred are +-1.
class AdvValue {
 public:
  constexpr AdvValue() = default;
  constexpr explicit AdvValue(std::uint64_t magnitude, bool advantage = false)
      : level_(2 * magnitude + (advantage ? 1 : 0)) {}

  static constexpr AdvValue from_level(std::uint64_t level) {
    AdvValue v;
    v.level_ = level;
    return v;
  }

  constexpr std::uint64_t magnitude() const { return level_ / 2; }
  constexpr bool has_advantage() const { return (level_ & 1) != 0; }
  constexpr std::uint64_t level() const { return level_; }

  friend constexpr auto operator<=>(AdvValue, AdvValue) = default;

 private:
  std::uint64_t level_ = 0;
};

AdvValue succ(AdvValue x);
AdvValue pred(AdvValue x);  // throws on 0

// x (+) y: at most one operand may be marked.
AdvValue oplus(AdvValue x, AdvValue y);
// x (-) y: requires y <= x and y marked only if x is marked.
AdvValue ominus(AdvValue x, AdvValue y);

// The largest representable budget k*.
constexpr AdvValue max_budget(std::uint64_t k) { return AdvValue(k, true); }

// Player 2's budget k* (-) B.
AdvValue opponent_budget(AdvValue b, std::uint64_t k);

// A threshold in [k] plus the sentinel top (player 1 cannot win).
class ThresholdValue {
 public:
  constexpr ThresholdValue() = default;
  constexpr ThresholdValue(AdvValue v) : level_(v.level()) {}  // NOLINT

  static constexpr ThresholdValue top() {
    ThresholdValue t;
    t.level_ = kTopLevel;
    return t;
  }

  constexpr bool is_top() const { return level_ == kTopLevel; }
  AdvValue value() const;  // throws on top
  // Order position; top sorts above every finite budget.
  constexpr std::uint64_t order_key() const { return level_; }

  // Magnitude used by averaging: |top| = k + 1, unmarked.
  std::uint64_t magnitude(std::uint64_t k) const;
  bool has_advantage() const { return !is_top() && (level_ & 1) != 0; }
  bool within(std::uint64_t k) const {
    return is_top() || level_ <= max_budget(k).level();
  }

  friend constexpr auto operator<=>(ThresholdValue, ThresholdValue) = default;
  friend constexpr bool operator==(ThresholdValue, ThresholdValue) = default;

 private:
  static constexpr std::uint64_t kTopLevel =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t level_ = 0;
};

// B >= T with the extended order.
inline bool meets(AdvValue b, ThresholdValue t) {
  return !t.is_top() && b >= t.value();
}

// 0 -> top, top -> 0, otherwise k* (-) pred(x). An involution.
ThresholdValue flip_threshold(ThresholdValue x, std::uint64_t k);

std::string to_string(AdvValue x);
std::string to_string(ThresholdValue x);
// Digits with an optional trailing '*'. Throws BudgetError.
AdvValue parse_budget(std::string_view text);
// As parse_budget, plus the literal "top".
ThresholdValue parse_threshold(std::string_view text);

std::ostream& operator<<(std::ostream& os, AdvValue x);
std::ostream& operator<<(std::ostream& os, ThresholdValue x);

}  // namespace bidding

#endif  // BIDDING_BUDGET_HPP_
