#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuspsys {

// Left turns act by L = (1 1; 0 1), right turns by R = (1 0; 1 1).
// kLeft < kRight so that canonical forms order 'L' before 'R'.
enum class Turn : std::uint8_t { kLeft = 0, kRight = 1 };

constexpr char to_char(Turn t) noexcept { return t == Turn::kLeft ? 'L' : 'R'; }
constexpr Turn opposite(Turn t) noexcept { return t == Turn::kLeft ? Turn::kRight : Turn::kLeft; }

// A nonempty cyclic word in L and R.
class TurnWord {
 public:
  explicit TurnWord(std::vector<Turn> letters);

  // Accepts plain letters and exponent shorthand, including parenthesized
  // groups: "RLLLLRLLLL", "RL4RL4" and "(RL4)2" all denote the same word.
  static TurnWord parse(std::string_view text);

  const std::vector<Turn>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Turn operator[](std::size_t i) const { return letters_[i]; }

  // A power of a single letter: the word of a loop around a cusp.
  bool is_peripheral() const noexcept;

  // Word read along the reversed walk: reverse the letters and swap L and R.
  TurnWord reversed() const;
  TurnWord rotated(std::size_t shift) const;

  // "RLLLLRLLLL"
  std::string plain() const;
  // "RL4RL4"
  std::string compact() const;

  friend bool operator==(const TurnWord&, const TurnWord&) = default;
  friend auto operator<=>(const TurnWord&, const TurnWord&) = default;

 private:
  std::vector<Turn> letters_;
};

// 2x2 integer matrix with overflow-checked products by L and R.
struct UnimodularMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  // this * L and this * R; throw Error(kOverflow) when an entry overflows.
  UnimodularMatrix times(Turn t) const;
  std::int64_t trace() const;

  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
};

using BigInt = boost::multiprecision::cpp_int;

// Exact trace of the product of the letters; throws kOverflow if a 64-bit
// entry overflows, in which case trace_exact() gives the value.
std::int64_t trace(const TurnWord& w);
BigInt trace_exact(const TurnWord& w);

// 2 arccosh(trace / 2); throws kPeripheral when the trace is 2.
double length_from_trace(std::int64_t trace);
double geodesic_length(const TurnWord& w);

// Least word, in L < R order, among the rotations of w and of w.reversed().
TurnWord canonical(const TurnWord& w);

}  // namespace cuspsys
