#include "waring/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace waring {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  trim();
}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {
  trim();
}

Monomial Monomial::variable(std::size_t var, Exponent power) {
  if (var == 0) throw std::out_of_range("variable indices start at 1");
  std::vector<Exponent> e(var, 0);
  e[var - 1] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::pair(std::size_t i, Exponent a, std::size_t j, Exponent b) {
  if (i == 0 || j == 0) throw std::out_of_range("variable indices start at 1");
  std::vector<Exponent> e(std::max(i, j), 0);
  e[i - 1] += a;
  e[j - 1] += b;
  return Monomial(std::move(e));
}

Exponent Monomial::exponent(std::size_t var) const {
  if (var == 0) throw std::out_of_range("variable indices start at 1");
  return var <= exps_.size() ? exps_[var - 1] : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  const auto& longer = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& shorter = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  Monomial out;
  out.exps_ = longer;
  for (std::size_t v = 0; v < shorter.size(); ++v) out.exps_[v] += shorter[v];
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  // Trimmed vectors of equal degree: a plain lexicographic compare is exact,
  // since a strict prefix would force the longer one to carry extra degree.
  return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(),
                                                other.exps_.begin(), other.exps_.end());
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v + 1);
    if (exps_[v] > 1) {
      out += '^';
      out += std::to_string(exps_[v]);
    }
  }
  return out;
}

bool Monomial::is_canonical() const {
  if (!exps_.empty() && exps_.back() == 0) return false;
  return degree_ == std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace waring
