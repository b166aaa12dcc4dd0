#include "cglab/literal.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "cglab/errors.hpp"

namespace cglab {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Rep parse() {
    skip_space();
    if (at_end()) throw ParseError("empty representation literal", pos_);
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return {};
      pos_ = save;
    }
    std::vector<Mult> dense;
    for (;;) {
      auto [weight, count] = term();
      if (static_cast<std::size_t>(weight) >= dense.size()) dense.resize(static_cast<std::size_t>(weight) + 1, 0);
      dense[static_cast<std::size_t>(weight)] += count;
      skip_space();
      if (at_end()) break;
      if (peek() != '+') throw ParseError(std::string("expected '+' but found '") + peek() + "'", pos_);
      ++pos_;
    }
    return Rep(std::move(dense));
  }

 private:
  std::pair<Weight, Mult> term() {
    skip_space();
    if (at_end()) throw ParseError("expected a term", pos_);
    if (peek() == '-') throw ParseError("negative multiplicity", pos_);
    Mult count = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      count = number<Mult>();
      skip_space();
      if (at_end() || peek() != '*') throw ParseError("expected '*' after multiplicity", pos_);
      ++pos_;
      skip_space();
    }
    if (at_end() || peek() != 'S') throw ParseError("expected 'S'", pos_);
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a nonnegative highest weight", pos_);
    Weight weight = number<Weight>();
    return {weight, count};
  }

  template <class T>
  T number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    T value{};
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) throw ParseError("number out of range", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_terms(std::span<const Mult> mult) {
  std::string out;
  for (std::size_t m = mult.size(); m-- > 0;) {
    if (mult[m] == 0) continue;
    if (mult[m] < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    out += std::to_string(mult[m] < 0 ? -mult[m] : mult[m]);
    out += "*S";
    out += std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Rep parse_rep(std::string_view text) { return Parser(text).parse(); }

std::string format_rep(const Rep& r) { return format_terms(r.multiplicities()); }
std::string format_rep(const VirtualRep& r) { return format_terms(r.multiplicities()); }

}  // namespace cglab
