#include "waring/parser.hpp"

#include <algorithm>
#include <cctype>

namespace waring {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at offset " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression", 0);
    Polynomial p = sum();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

  std::size_t max_var() const { return max_var_; }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    // Keep the reported offset inside the text, even for end-of-input errors.
    throw ParseError(message, std::min(at, text_.empty() ? 0 : text_.size() - 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial sum() {
    Polynomial acc = product();
    while (true) {
      if (accept('+')) acc = add(acc, product());
      else if (accept('-')) acc = sub(acc, product());
      else return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (accept('*')) acc = mul(acc, unary());
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (!at_digit()) fail("exponent must be a non-negative integer literal", at);
    const auto lit = digits();
    const Integer e{std::string(lit)};
    if (!e.fits_ulong_p()) fail("exponent too large", at);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses", pos_);
    return pow(base, e.get_ui());
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer value{std::string(digits())};
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
        fail("implicit multiplication is not supported; use '*'", pos_);
      return Polynomial::constant(value);
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (!at_digit()) fail("variable name must be x followed by an index", at);
      const std::size_t idx_at = pos_;
      const auto idx = digits();
      if (idx.front() == '0') fail("variable index must be a positive integer without leading zeros", idx_at);
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        fail("variable index must be numeric", pos_);
      if (idx.size() > 9) fail("variable index too large", idx_at);
      const std::size_t var = std::stoul(std::string(idx));
      max_var_ = std::max(max_var_, var);
      return Polynomial::variable(var);
    }
    fail(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::optional<std::size_t> num_vars_hint) {
  if (num_vars_hint && *num_vars_hint == 0) throw std::invalid_argument("variable count hint must be positive");
  Parser parser(text);
  Polynomial p = parser.run();
  const std::size_t m = std::max({parser.max_var(), num_vars_hint.value_or(1), std::size_t{1}});
  return p.with_num_vars(m);
}

}  // namespace waring
