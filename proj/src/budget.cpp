#include "bidding/budget.hpp"

#include <charconv>

namespace bidding {

namespace {

constexpr std::uint64_t kMaxLevel = std::numeric_limits<std::uint64_t>::max() - 2;

}  // namespace

AdvValue succ(AdvValue x) {
  if (x.level() >= kMaxLevel) throw BudgetError("succ: budget overflow");
  return AdvValue::from_level(x.level() + 1);
}

AdvValue pred(AdvValue x) {
  if (x.level() == 0) throw BudgetError("pred: 0 has no predecessor");
  return AdvValue::from_level(x.level() - 1);
}

AdvValue oplus(AdvValue x, AdvValue y) {
  if (x.has_advantage() && y.has_advantage()) {
    throw BudgetError("oplus: both operands carry the advantage");
  }
  if (x.level() > kMaxLevel - y.level()) throw BudgetError("oplus: overflow");
  // Levels add exactly because at most one mark is present.
  return AdvValue::from_level(x.level() + y.level());
}

AdvValue ominus(AdvValue x, AdvValue y) {
  if (y.has_advantage() && !x.has_advantage()) {
    throw BudgetError("ominus: " + to_string(x) + " lacks the advantage of " +
                      to_string(y));
  }
  if (y > x) {
    throw BudgetError("ominus: " + to_string(y) + " exceeds " + to_string(x));
  }
  return AdvValue::from_level(x.level() - y.level());
}

AdvValue opponent_budget(AdvValue b, std::uint64_t k) {
  if (b > max_budget(k)) {
    throw BudgetError("opponent_budget: " + to_string(b) + " exceeds " +
                      to_string(max_budget(k)));
  }
  return ominus(max_budget(k), b);
}

AdvValue ThresholdValue::value() const {
  if (is_top()) throw BudgetError("top has no budget value");
  return AdvValue::from_level(level_);
}

std::uint64_t ThresholdValue::magnitude(std::uint64_t k) const {
  return is_top() ? k + 1 : level_ / 2;
}

ThresholdValue flip_threshold(ThresholdValue x, std::uint64_t k) {
  if (x.is_top()) return AdvValue(0);
  if (x.value() == AdvValue(0)) return ThresholdValue::top();
  return ominus(max_budget(k), pred(x.value()));
}

std::string to_string(AdvValue x) {
  std::string s = std::to_string(x.magnitude());
  if (x.has_advantage()) s += '*';
  return s;
}

std::string to_string(ThresholdValue x) {
  return x.is_top() ? std::string("top") : to_string(x.value());
}

AdvValue parse_budget(std::string_view text) {
  std::string_view digits = text;
  bool marked = false;
  if (!digits.empty() && digits.back() == '*') {
    marked = true;
    digits.remove_suffix(1);
  }
  if (digits.empty()) {
    throw BudgetError("malformed budget literal '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw BudgetError("malformed budget literal '" + std::string(text) + "'");
    }
  }
  std::uint64_t magnitude = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), magnitude);
  if (ec != std::errc() || magnitude > (kMaxLevel >> 2)) {
    throw BudgetError("budget literal out of range '" + std::string(text) + "'");
  }
  return AdvValue(magnitude, marked);
}

ThresholdValue parse_threshold(std::string_view text) {
  if (text == "top") return ThresholdValue::top();
  return parse_budget(text);
}

std::ostream& operator<<(std::ostream& os, AdvValue x) {
  return os << to_string(x);
}

std::ostream& operator<<(std::ostream& os, ThresholdValue x) {
  return os << to_string(x);
}

}  // namespace bidding
