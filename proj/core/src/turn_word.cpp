#include "cuspsys/turn_word.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

constexpr std::size_t kMaxParsedLength = 1'000'000;

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Turn> parse() {
    auto letters = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return letters;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::kParse, "turn word '" + std::string(text_) + "' at offset " +
                                       std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::vector<Turn> sequence() {
    std::vector<Turn> out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      std::vector<Turn> item;
      const char c = text_[pos_];
      if (c == 'L' || c == 'R') {
        item.push_back(c == 'L' ? Turn::kLeft : Turn::kRight);
        ++pos_;
      } else if (c == '(') {
        ++pos_;
        item = sequence();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("unbalanced '('");
        ++pos_;
      } else {
        fail(std::string("expected L, R or '(' but found '") + c + "'");
      }
      const std::size_t reps = exponent();
      if (out.size() + reps * item.size() > kMaxParsedLength) fail("word too long");
      for (std::size_t r = 0; r < reps; ++r) out.insert(out.end(), item.begin(), item.end());
    }
  }

  std::size_t exponent() {
    std::size_t n = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = 10 * n + static_cast<std::size_t>(text_[pos_++] - '0');
      if (n > kMaxParsedLength) fail("exponent too large");
      any = true;
    }
    if (!any) return 1;
    if (n == 0) fail("exponent must be positive");
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorKind::kOverflow, "64-bit overflow in turn-word product; use trace_exact");
  }
  return out;
}

}  // namespace

TurnWord::TurnWord(std::vector<Turn> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::kEmptyWord, "turn word must be nonempty");
}

TurnWord TurnWord::parse(std::string_view text) { return TurnWord(WordParser(text).parse()); }

bool TurnWord::is_peripheral() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [&](Turn t) { return t == letters_.front(); });
}

TurnWord TurnWord::reversed() const {
  std::vector<Turn> out(letters_.rbegin(), letters_.rend());
  for (Turn& t : out) t = opposite(t);
  return TurnWord(std::move(out));
}

TurnWord TurnWord::rotated(std::size_t shift) const {
  std::vector<Turn> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return TurnWord(std::move(out));
}

std::string TurnWord::plain() const {
  std::string s;
  s.reserve(letters_.size());
  for (Turn t : letters_) s.push_back(to_char(t));
  return s;
}

std::string TurnWord::compact() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    s.push_back(to_char(letters_[i]));
    if (j - i > 1) s += std::to_string(j - i);
    i = j;
  }
  return s;
}

UnimodularMatrix UnimodularMatrix::times(Turn t) const {
  // (a b; c d) L = (a, a + b; c, c + d),  (a b; c d) R = (a + b, b; c + d, d)
  if (t == Turn::kLeft) return {a, checked_add(a, b), c, checked_add(c, d)};
  return {checked_add(a, b), b, checked_add(c, d), d};
}

std::int64_t UnimodularMatrix::trace() const { return checked_add(a, d); }

std::int64_t trace(const TurnWord& w) {
  UnimodularMatrix m;
  for (Turn t : w.letters()) m = m.times(t);
  return m.trace();
}

BigInt trace_exact(const TurnWord& w) {
  BigInt a = 1, b = 0, c = 0, d = 1;
  for (Turn t : w.letters()) {
    if (t == Turn::kLeft) {
      b += a;
      d += c;
    } else {
      a += b;
      c += d;
    }
  }
  return a + d;
}

double length_from_trace(std::int64_t tr) {
  if (tr <= 2) {
    throw Error(ErrorKind::kPeripheral,
                "trace " + std::to_string(tr) + " is not hyperbolic; the class is peripheral");
  }
  return 2.0 * std::acosh(static_cast<double>(tr) / 2.0);
}

double geodesic_length(const TurnWord& w) {
  if (w.is_peripheral()) {
    throw Error(ErrorKind::kPeripheral, "word " + w.compact() + " is a cusp loop");
  }
  try {
    return length_from_trace(trace(w));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kOverflow) throw;
    // Traces beyond 2^63: arccosh(x/2) = log(x) to double precision.
    return 2.0 * std::log(trace_exact(w).convert_to<double>());
  }
}

TurnWord canonical(const TurnWord& w) {
  const std::size_t n = w.size();
  std::vector<Turn> best = w.letters();
  std::vector<Turn> candidate(n);
  for (const TurnWord& base : {w, w.reversed()}) {
    const auto& letters = base.letters();
    for (std::size_t shift = 0; shift < n; ++shift) {
      std::rotate_copy(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(shift),
                       letters.end(), candidate.begin());
      if (candidate < best) best = candidate;
    }
  }
  return TurnWord(std::move(best));
}

}  // namespace cuspsys
