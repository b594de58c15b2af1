#ifndef VBRAID_LAURENT_HPP
#define VBRAID_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vbraid/error.hpp"

namespace vbraid {

using BigInt = boost::multiprecision::cpp_int;

/// A unit of Z[t,t^-1]: sign * t^exponent.
struct Unit {
  int     sign;
  int64_t exponent;

  friend bool operator==(Unit const&, Unit const&) = default;
};

/// Exact element of Z[t,t^-1].
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal exactly when their term lists are equal. The zero
/// polynomial has no terms.
class LaurentPoly {
 public:
  using Term = std::pair<int64_t, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(BigInt(c), 0) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(BigInt c, int64_t exponent = 0) {
    if (c != 0) {
      terms_.emplace_back(exponent, std::move(c));
    }
  }

  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::map<int64_t, BigInt> acc;
    for (auto& [e, c] : terms) {
      acc[e] += c;
    }
    LaurentPoly p;
    for (auto& [e, c] : acc) {
      if (c != 0) {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    return p;
  }

  static LaurentPoly monomial(BigInt c, int64_t exponent) {
    return LaurentPoly(std::move(c), exponent);
  }

  /// The indeterminate t.
  static LaurentPoly t() { return monomial(1, 1); }

  std::vector<Term> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Only meaningful when nonzero.
  int64_t min_exponent() const { return terms_.front().first; }
  int64_t max_exponent() const { return terms_.back().first; }

  BigInt coefficient(int64_t exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](Term const& term, int64_t e) { return term.first < e; });
    if (it != terms_.end() && it->first == exponent) {
      return it->second;
    }
    return 0;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& term : r.terms_) {
      term.second = -term.second;
    }
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.push_back(*j++);
      } else {
        BigInt c = i->second + j->second;
        if (c != 0) {
          r.terms_.emplace_back(i->first, std::move(c));
        }
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b) {
    return a + (-b);
  }

  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    // Dense accumulation over the exponent span of the product.
    int64_t const lo   = a.min_exponent() + b.min_exponent();
    int64_t const span = a.max_exponent() + b.max_exponent() - lo + 1;
    std::vector<BigInt> acc(static_cast<std::size_t>(span));
    for (auto const& [ea, ca] : a.terms_) {
      for (auto const& [eb, cb] : b.terms_) {
        acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
      }
    }
    LaurentPoly r;
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] != 0) {
        r.terms_.emplace_back(lo + static_cast<int64_t>(k), std::move(acc[k]));
      }
    }
    return r;
  }

  LaurentPoly& operator+=(LaurentPoly const& o) { return *this = *this + o; }
  LaurentPoly& operator-=(LaurentPoly const& o) { return *this = *this - o; }
  LaurentPoly& operator*=(LaurentPoly const& o) { return *this = *this * o; }

  /// Multiplies by t^k.
  LaurentPoly shifted(int64_t k) const {
    LaurentPoly r = *this;
    for (auto& term : r.terms_) {
      term.first += k;
    }
    return r;
  }

  /// c^k for k >= 0, (c^-1)^(-k) for units and k < 0.
  LaurentPoly pow(int64_t k) const;

  /// Sum of the coefficients, i.e. the value at t = 1.
  BigInt evaluate_at_one() const {
    BigInt s = 0;
    for (auto const& term : terms_) {
      s += term.second;
    }
    return s;
  }

  friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k != 0) {
        out += " + ";
      }
      out += terms_[k].second.str();
      if (terms_[k].first != 0) {
        out += "*t^" + std::to_string(terms_[k].first);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, LaurentPoly const& p) {
    return os << p.to_string();
  }

 private:
  std::vector<Term> terms_;
};

/// Returns (s, k) when a = s * t^k, empty otherwise.
inline std::optional<Unit> lp_is_unit(LaurentPoly const& a) {
  if (a.term_count() != 1) {
    return std::nullopt;
  }
  auto const& [e, c] = a.terms().front();
  if (c == 1) {
    return Unit{1, e};
  }
  if (c == -1) {
    return Unit{-1, e};
  }
  return std::nullopt;
}

inline LaurentPoly unit_inverse(Unit u) {
  return LaurentPoly::monomial(u.sign, -u.exponent);
}

inline LaurentPoly LaurentPoly::pow(int64_t k) const {
  if (k < 0) {
    auto u = lp_is_unit(*this);
    if (!u) {
      throw NonUnitDeterminant("negative power of a non-unit Laurent polynomial");
    }
    return unit_inverse(*u).pow(-k);
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) {
      result *= base;
    }
    k >>= 1;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

/// Exact quotient a / b in Z[t,t^-1]. Throws InexactDivision when b does not
/// divide a.
inline LaurentPoly lp_divexact(LaurentPoly const& a, LaurentPoly const& b) {
  if (b.is_zero()) {
    throw InexactDivision("division by the zero Laurent polynomial");
  }
  if (a.is_zero()) {
    return {};
  }
  // Work with ordinary polynomials: shift so both have constant terms.
  int64_t const shift_a = a.min_exponent();
  int64_t const shift_b = b.min_exponent();
  std::vector<BigInt> num(static_cast<std::size_t>(a.max_exponent() - shift_a + 1));
  std::vector<BigInt> den(static_cast<std::size_t>(b.max_exponent() - shift_b + 1));
  for (auto const& [e, c] : a.terms()) {
    num[static_cast<std::size_t>(e - shift_a)] = c;
  }
  for (auto const& [e, c] : b.terms()) {
    den[static_cast<std::size_t>(e - shift_b)] = c;
  }
  if (num.size() < den.size()) {
    throw InexactDivision("Laurent division is not exact");
  }
  BigInt const& lead = den.back();
  std::vector<BigInt> quot(num.size() - den.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt const& top = num[k + den.size() - 1];
    if (top == 0) {
      continue;
    }
    if (top % lead != 0) {
      throw InexactDivision("Laurent division is not exact");
    }
    BigInt q = top / lead;
    for (std::size_t j = 0; j < den.size(); ++j) {
      num[k + j] -= q * den[j];
    }
    quot[k] = std::move(q);
  }
  for (auto const& r : num) {
    if (r != 0) {
      throw InexactDivision("Laurent division is not exact");
    }
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (quot[k] != 0) {
      terms.emplace_back(static_cast<int64_t>(k) + shift_a - shift_b, quot[k]);
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly lp_add(LaurentPoly const& a, LaurentPoly const& b) { return a + b; }
inline LaurentPoly lp_mul(LaurentPoly const& a, LaurentPoly const& b) { return a * b; }

}  // namespace vbraid

#endif  // VBRAID_LAURENT_HPP
