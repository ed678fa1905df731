#include "waring/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace waring {

// Wraps terms that are already canonical (sorted, merged, nonzero).
class PolynomialBuilder {
 public:
  static Polynomial make(std::size_t num_vars, std::vector<Polynomial::Term> terms) {
    Polynomial p(num_vars);
    p.terms_ = std::move(terms);
    return p;
  }
};

namespace {

using Term = Polynomial::Term;
using i128 = __int128;

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

std::size_t used_vars(const std::vector<Term>& terms) {
  std::size_t m = 0;
  for (const auto& t : terms) m = std::max(m, t.monomial.max_variable());
  return m;
}

void reduce_coeff(Integer& c, const Integer& modulus) {
  if (modulus != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
}

Integer from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

// Merge-sorts terms that may contain duplicates and zeros into canonical form.
std::vector<Term> canonicalize(std::vector<Term> terms, const Integer& modulus) {
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty()) {
        reduce_coeff(out.back().coeff, modulus);
        if (out.back().coeff == 0) out.pop_back();
      }
      out.push_back(std::move(t));
    }
  }
  if (!out.empty()) {
    reduce_coeff(out.back().coeff, modulus);
    if (out.back().coeff == 0) out.pop_back();
  }
  return out;
}

// Linear-probing table from packed exponent keys to accumulator slots.
class KeyIndex {
 public:
  static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();

  explicit KeyIndex(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.assign(cap, kEmpty);
    slots_.assign(cap, 0);
  }

  // Returns the slot for `key`, inserting `next_slot` if new.
  std::uint32_t find_or_insert(std::uint64_t key, std::uint32_t next_slot, bool& inserted) {
    if (2 * (count_ + 1) > keys_.size()) grow();
    std::size_t mask = keys_.size() - 1;
    std::size_t pos = mix(key) & mask;
    while (true) {
      if (keys_[pos] == key) {
        inserted = false;
        return slots_[pos];
      }
      if (keys_[pos] == kEmpty) {
        keys_[pos] = key;
        slots_[pos] = next_slot;
        ++count_;
        inserted = true;
        return next_slot;
      }
      pos = (pos + 1) & mask;
    }
  }

 private:
  static std::size_t mix(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdull;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }

  void grow() {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint32_t> old_slots = std::move(slots_);
    keys_.assign(old_keys.size() * 2, kEmpty);
    slots_.assign(old_keys.size() * 2, 0);
    std::size_t mask = keys_.size() - 1;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == kEmpty) continue;
      std::size_t pos = mix(old_keys[i]) & mask;
      while (keys_[pos] != kEmpty) pos = (pos + 1) & mask;
      keys_[pos] = old_keys[i];
      slots_[pos] = old_slots[i];
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

// Exponent vectors packed into one word, x1 in the most significant field,
// so numeric order of keys equals lexicographic order of exponents.
struct Packing {
  std::size_t vars = 0;
  unsigned bits = 0;

  std::uint64_t pack(const Monomial& m) const {
    std::uint64_t key = 0;
    for (std::size_t v = 1; v <= vars; ++v) key = (key << bits) | m.exponent(v);
    return key;
  }

  Monomial unpack(std::uint64_t key) const {
    std::vector<Exponent> e(vars);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (std::size_t v = vars; v-- > 0;) {
      e[v] = static_cast<Exponent>(key & mask);
      key >>= bits;
    }
    return Monomial(std::move(e));
  }
};

std::optional<Packing> choose_packing(const std::vector<Term>& a, const std::vector<Term>& b,
                                      const TruncationSpec& spec) {
  const std::size_t vars = std::max(used_vars(a), used_vars(b));
  if (vars == 0) return Packing{0, 1};
  std::uint64_t bound = 0;
  for (std::size_t v = 1; v <= vars; ++v) {
    std::uint64_t ea = 0, eb = 0;
    for (const auto& t : a) ea = std::max<std::uint64_t>(ea, t.monomial.exponent(v));
    for (const auto& t : b) eb = std::max<std::uint64_t>(eb, t.monomial.exponent(v));
    bound = std::max(bound, ea + eb);
  }
  if (spec.max_total_degree()) bound = std::min(bound, *spec.max_total_degree());
  const unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(bound)));
  // Keep one bit spare so no key collides with the empty marker.
  if (vars * bits > 63) return std::nullopt;
  return Packing{vars, bits};
}

struct PackedOperand {
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> degrees;
  const std::vector<Term>* terms;
};

// Operand terms whose degree already exceeds the cap are dropped; the rest are
// ordered by ascending degree so the inner loop can stop early.
PackedOperand pack_operand(const std::vector<Term>& terms, const Packing& packing,
                           std::vector<Term>& storage, const TruncationSpec& spec) {
  storage.clear();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    if (spec.keeps(it->monomial.total_degree())) storage.push_back(*it);
  PackedOperand op{{}, {}, &storage};
  op.keys.reserve(storage.size());
  op.degrees.reserve(storage.size());
  for (const auto& t : storage) {
    op.keys.push_back(packing.pack(t.monomial));
    op.degrees.push_back(t.monomial.total_degree());
  }
  return op;
}

template <class Acc>
struct Accumulator;

template <>
struct Accumulator<i128> {
  std::vector<std::int64_t> a_vals, b_vals;
  std::vector<i128> sums;

  void load(const std::vector<Term>& a, const std::vector<Term>& b) {
    for (const auto& t : a) a_vals.push_back(t.coeff.get_si());
    for (const auto& t : b) b_vals.push_back(t.coeff.get_si());
  }
  void add(std::uint32_t slot, bool fresh, std::size_t i, std::size_t j, int factor) {
    i128 v = static_cast<i128>(a_vals[i]) * b_vals[j] * factor;
    if (fresh) sums.push_back(v);
    else sums[slot] += v;
  }
  Integer finish(std::uint32_t slot) const { return from_i128(sums[slot]); }
};

template <>
struct Accumulator<Integer> {
  const std::vector<Term>* a = nullptr;
  const std::vector<Term>* b = nullptr;
  std::vector<Integer> sums;

  void load(const std::vector<Term>& aa, const std::vector<Term>& bb) {
    a = &aa;
    b = &bb;
  }
  void add(std::uint32_t slot, bool fresh, std::size_t i, std::size_t j, int factor) {
    if (fresh) sums.emplace_back(0);
    mpz_ptr dst = sums[slot].get_mpz_t();
    if (factor == 1) {
      mpz_addmul(dst, (*a)[i].coeff.get_mpz_t(), (*b)[j].coeff.get_mpz_t());
    } else {
      Integer twice = (*a)[i].coeff * factor;
      mpz_addmul(dst, twice.get_mpz_t(), (*b)[j].coeff.get_mpz_t());
    }
  }
  Integer finish(std::uint32_t slot) const { return sums[slot]; }
};

template <class Acc>
std::vector<Term> packed_product(const PackedOperand& a, const PackedOperand& b, bool squaring,
                                 const Packing& packing, const TruncationSpec& spec) {
  Accumulator<Acc> acc;
  acc.load(*a.terms, *b.terms);
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> degrees;
  KeyIndex index(std::max(a.keys.size(), b.keys.size()) * 4);
  const auto cap = spec.max_total_degree();

  for (std::size_t i = 0; i < a.keys.size(); ++i) {
    const std::size_t j0 = squaring ? i : 0;
    for (std::size_t j = j0; j < b.keys.size(); ++j) {
      const std::uint64_t deg = a.degrees[i] + b.degrees[j];
      if (cap && deg > *cap) break;
      const std::uint64_t key = a.keys[i] + b.keys[j];
      bool fresh = false;
      const auto slot = index.find_or_insert(key, static_cast<std::uint32_t>(keys.size()), fresh);
      if (fresh) {
        keys.push_back(key);
        degrees.push_back(deg);
      }
      acc.add(slot, fresh, i, j, squaring && j != i ? 2 : 1);
    }
  }

  std::vector<std::uint32_t> order(keys.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (degrees[x] != degrees[y]) return degrees[x] > degrees[y];
    return keys[x] > keys[y];
  });
  std::vector<Term> out;
  out.reserve(order.size());
  for (auto s : order) {
    Integer c = acc.finish(s);
    reduce_coeff(c, spec.coefficient_modulus());
    if (c != 0) out.push_back({packing.unpack(keys[s]), std::move(c)});
  }
  return out;
}

// Upper bound on |coefficient| of any product term fits comfortably in 127 bits.
bool fits_i128(const std::vector<Term>& a, const std::vector<Term>& b, bool squaring) {
  Integer max_a = 0, max_b = 0;
  for (const auto& t : a) {
    if (!t.coeff.fits_slong_p()) return false;
    max_a = std::max<Integer>(max_a, abs(t.coeff));
  }
  for (const auto& t : b) {
    if (!t.coeff.fits_slong_p()) return false;
    max_b = std::max<Integer>(max_b, abs(t.coeff));
  }
  Integer bound = max_a * max_b * static_cast<unsigned long>(std::min(a.size(), b.size()) + 1);
  if (squaring) bound *= 2;
  return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125;
}

std::vector<Term> generic_product(const std::vector<Term>& a, const std::vector<Term>& b,
                                  const TruncationSpec& spec) {
  std::map<Monomial, Integer> acc;
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      if (!spec.keeps(ta.monomial.total_degree() + tb.monomial.total_degree())) continue;
      acc[ta.monomial * tb.monomial] += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    Integer c = it->second;
    reduce_coeff(c, spec.coefficient_modulus());
    if (c != 0) out.push_back({it->first, std::move(c)});
  }
  return out;
}

std::vector<Term> product_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool squaring,
                                const TruncationSpec& spec) {
  if (a.empty() || b.empty()) return {};
  auto packing = choose_packing(a, b, spec);
  if (!packing) return generic_product(a, b, spec);
  std::vector<Term> sa, sb;
  PackedOperand pa = pack_operand(a, *packing, sa, spec);
  PackedOperand pb = squaring ? pa : pack_operand(b, *packing, sb, spec);
  if (squaring) pb.terms = &sa;
  if (fits_i128(sa, squaring ? sa : sb, squaring))
    return packed_product<i128>(pa, pb, squaring, *packing, spec);
  return packed_product<Integer>(pa, pb, squaring, *packing, spec);
}

std::vector<Term> merge_sum(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TruncationSpec::TruncationSpec(std::optional<std::uint64_t> max_total_degree, Integer coefficient_modulus)
    : max_degree_(max_total_degree), modulus_(std::move(coefficient_modulus)) {
  if (modulus_ < 0 || modulus_ == 1)
    throw std::invalid_argument("coefficient modulus must be 0 (exact) or at least 2");
}

Polynomial::Polynomial(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw std::invalid_argument("a polynomial ring needs at least one variable");
}

Polynomial Polynomial::constant(const Integer& c, std::size_t num_vars) {
  Polynomial p(num_vars);
  if (c != 0) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t var, std::size_t num_vars) {
  Polynomial p(std::max(var, num_vars));
  p.terms_.push_back({Monomial::variable(var), 1});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.max_variable() > num_vars)
      throw std::out_of_range("monomial " + t.monomial.to_string() + " exceeds " +
                              std::to_string(num_vars) + " variables");
  return PolynomialBuilder::make(num_vars, canonicalize(std::move(terms), 0));
}

std::uint64_t Polynomial::total_degree() const {
  // Graded order puts a top-degree term first.
  return terms_.empty() ? 0 : terms_.front().monomial.total_degree();
}

Integer Polynomial::coeff(const Monomial& a) const {
  if (a.max_variable() > num_vars_)
    throw std::out_of_range("monomial " + a.to_string() + " uses a variable beyond x" +
                            std::to_string(num_vars_));
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                             [](const Term& t, const Monomial& m) { return t.monomial > m; });
  if (it != terms_.end() && it->monomial == a) return it->coeff;
  return 0;
}

Polynomial Polynomial::with_num_vars(std::size_t m) const {
  if (used_vars(terms_) > m)
    throw std::out_of_range("cannot view polynomial in fewer variables than it uses");
  return PolynomialBuilder::make(m, terms_);
}

Polynomial Polynomial::restrict_to(std::span<const std::size_t> vars) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    bool ok = true;
    const auto exps = t.monomial.exponents();
    for (std::size_t v = 0; v < exps.size() && ok; ++v)
      if (exps[v] != 0 && std::find(vars.begin(), vars.end(), v + 1) == vars.end()) ok = false;
    if (ok) kept.push_back(t);
  }
  return PolynomialBuilder::make(num_vars_, std::move(kept));
}

Polynomial Polynomial::reduced(const TruncationSpec& spec) const {
  if (spec.is_exact()) return *this;
  std::vector<Term> kept;
  kept.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!spec.keeps(t.monomial.total_degree())) continue;
    Integer c = t.coeff;
    reduce_coeff(c, spec.coefficient_modulus());
    if (c != 0) kept.push_back({t.monomial, std::move(c)});
  }
  return PolynomialBuilder::make(num_vars_, std::move(kept));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> negated = terms_;
  for (auto& t : negated) t.coeff = -t.coeff;
  return PolynomialBuilder::make(num_vars_, std::move(negated));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    Integer magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.coeff == 0 || !t.monomial.is_canonical() || t.monomial.max_variable() > num_vars_) return false;
    if (i > 0 && !(terms_[i - 1].monomial > t.monomial)) return false;
  }
  return num_vars_ > 0;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  return PolynomialBuilder::make(std::max(f.num_vars(), g.num_vars()), merge_sum(f.terms(), g.terms(), false));
}

Polynomial sub(const Polynomial& f, const Polynomial& g) {
  return PolynomialBuilder::make(std::max(f.num_vars(), g.num_vars()), merge_sum(f.terms(), g.terms(), true));
}

Polynomial scale(const Polynomial& f, const Integer& c) {
  if (c == 0) return Polynomial(f.num_vars());
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.coeff *= c;
  return PolynomialBuilder::make(f.num_vars(), std::move(terms));
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const TruncationSpec& spec) {
  const std::size_t m = std::max(f.num_vars(), g.num_vars());
  const bool squaring = &f == &g || f.terms() == g.terms();
  if (spec.coefficient_modulus() != 0) {
    Polynomial fr = f.reduced(spec);
    Polynomial gr = squaring ? fr : g.reduced(spec);
    return PolynomialBuilder::make(m, product_terms(fr.terms(), gr.terms(), squaring, spec));
  }
  return PolynomialBuilder::make(m, product_terms(f.terms(), g.terms(), squaring, spec));
}

Polynomial pow(const Polynomial& f, std::uint64_t e, const TruncationSpec& spec) {
  Polynomial base = f.reduced(spec);
  std::optional<Polynomial> result;
  while (true) {
    if (e & 1) result = result ? mul(*result, base, spec) : base;
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base, spec);
  }
  if (!result) return Polynomial::constant(1, f.num_vars()).reduced(spec);
  return *result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

}  // namespace waring
