#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace betabranch::expansions {

/// A binary digit, 0 or 1.
using Digit = std::uint8_t;

/// A finite digit sequence; also the transcript of a sequence of maps T_d.
using Word = std::vector<Digit>;

/// "0110" for {0,1,1,0}.
std::string to_string(const Word& w);

/// Parses a string of '0'/'1' characters; throws ParseError otherwise.
Word parse_word(std::string_view text);

/// w repeated n times.
Word power(const Word& w, std::size_t n);

/// Infinite word PRE (PER)^inf in canonical form: the period is primitive and the
/// preperiod is minimal, so that equal infinite words have equal representations.
class EventuallyPeriodicWord {
 public:
  /// Canonicalizes; throws Error(InvalidArgument) if the period is empty or a digit is not binary.
  EventuallyPeriodicWord(Word preperiod, Word period);

  /// "PRE|PER", e.g. "0111|10"; the period must be nonempty.
  static EventuallyPeriodicWord parse(std::string_view text);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  /// Digit at 0-based position i.
  Digit at(std::size_t i) const;

  /// First n digits.
  Word prefix(std::size_t n) const;

  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  Word pre_;
  Word per_;
};

/// "PRE|PER".
std::string to_string(const EventuallyPeriodicWord& w);

}  // namespace betabranch::expansions
