#include "betabranch/expansions/word.hpp"

#include <algorithm>

#include "betabranch/error.hpp"

namespace betabranch::expansions {

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Digit d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw ParseError("expected binary digit, got '" + std::string(1, text[i]) + "'", i + 1);
    w.push_back(static_cast<Digit>(text[i] - '0'));
  }
  return w;
}

Word power(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw Error(ErrorKind::InvalidArgument, "eventually periodic word needs a nonempty period");
  auto binary = [](Digit d) { return d <= 1; };
  if (!std::all_of(pre_.begin(), pre_.end(), binary) || !std::all_of(per_.begin(), per_.end(), binary))
    throw Error(ErrorKind::InvalidArgument, "digits must be 0 or 1");

  const std::size_t n = per_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = per_[i] == per_[i - d];
    if (repeats) {
      per_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected 'PRE|PER'", text.size() + 1);
  if (text.find('|', bar + 1) != std::string_view::npos) throw ParseError("more than one '|'", text.find('|', bar + 1) + 1);
  Word pre = parse_word(text.substr(0, bar));
  Word per;
  try {
    per = parse_word(text.substr(bar + 1));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), bar + 1 + e.column());
  }
  if (per.empty()) throw ParseError("finite word where an infinite word is required (empty period)", bar + 2);
  return EventuallyPeriodicWord(std::move(pre), std::move(per));
}

Digit EventuallyPeriodicWord::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word EventuallyPeriodicWord::prefix(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

std::string to_string(const EventuallyPeriodicWord& w) { return to_string(w.preperiod()) + "|" + to_string(w.period()); }

}  // namespace betabranch::expansions
