#ifndef VBRAID_LPMATRIX_HPP
#define VBRAID_LPMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/laurent.hpp"

namespace vbraid {

/// Square matrix over Z[t,t^-1], stored row-major.
class LPMatrix {
 public:
  LPMatrix() = default;
  explicit LPMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  LPMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
      : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (auto const& row : rows) {
      if (row.size() != n_) {
        throw DimensionMismatch("matrix rows must all have length "
                                + std::to_string(n_));
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static LPMatrix identity(std::size_t n) {
    LPMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  LaurentPoly const& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * n_ + c];
  }

  bool is_identity() const { return *this == identity(n_); }

  friend bool operator==(LPMatrix const&, LPMatrix const&) = default;

 private:
  std::size_t              n_ = 0;
  std::vector<LaurentPoly> entries_;
};

inline LPMatrix mat_mul(LPMatrix const& a, LPMatrix const& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.size()) + "x"
                            + std::to_string(a.size()) + " by "
                            + std::to_string(b.size()) + "x"
                            + std::to_string(b.size()));
  }
  std::size_t const n = a.size();
  LPMatrix          r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) {
          r(i, j) += a(i, k) * b(k, j);
        }
      }
    }
  }
  return r;
}

inline LPMatrix operator*(LPMatrix const& a, LPMatrix const& b) {
  return mat_mul(a, b);
}

namespace detail {

  inline LPMatrix minor_of(LPMatrix const& a, std::size_t row, std::size_t col) {
    std::size_t const n = a.size();
    LPMatrix          m(n - 1);
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
      if (i == row) {
        continue;
      }
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j == col) {
          continue;
        }
        m(mi, mj++) = a(i, j);
      }
      ++mi;
    }
    return m;
  }

  inline LaurentPoly det_cofactor(LPMatrix const& a) {
    std::size_t const n = a.size();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return a(0, 0);
    }
    if (n == 2) {
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    }
    LaurentPoly d;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(0, j).is_zero()) {
        continue;
      }
      LaurentPoly term = a(0, j) * det_cofactor(minor_of(a, 0, j));
      if (j % 2 == 0) {
        d += term;
      } else {
        d -= term;
      }
    }
    return d;
  }

  // Fraction-free (Bareiss) elimination; every division is exact.
  inline LaurentPoly det_bareiss(LPMatrix a) {
    std::size_t const n    = a.size();
    int               sign = 1;
    LaurentPoly       prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k).is_zero()) {
        std::size_t p = k + 1;
        while (p < n && a(p, k).is_zero()) {
          ++p;
        }
        if (p == n) {
          return {};
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(k, j), a(p, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = lp_divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        }
        a(i, k) = LaurentPoly();
      }
      prev = a(k, k);
    }
    LaurentPoly d = n == 0 ? LaurentPoly(1) : a(n - 1, n - 1);
    return sign < 0 ? -d : d;
  }

}  // namespace detail

inline constexpr std::size_t kCofactorDetLimit = 6;

/// Exact determinant: cofactor expansion up to 6x6, Bareiss elimination above.
inline LaurentPoly mat_det(LPMatrix const& a) {
  if (a.size() <= kCofactorDetLimit) {
    return detail::det_cofactor(a);
  }
  return detail::det_bareiss(a);
}

/// Inverse of a matrix whose determinant is a unit +-t^k, via the adjugate.
inline LPMatrix mat_inverse(LPMatrix const& a) {
  LaurentPoly const d = mat_det(a);
  auto const        u = lp_is_unit(d);
  if (!u) {
    throw NonUnitDeterminant("determinant " + d.to_string()
                             + " is not a unit of Z[t,t^-1]");
  }
  LaurentPoly const d_inv = unit_inverse(*u);
  std::size_t const n     = a.size();
  LPMatrix          r(n);
  if (n == 1) {
    r(0, 0) = d_inv;
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly c = mat_det(detail::minor_of(a, j, i)) * d_inv;
      r(i, j)       = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return r;
}

/// A in the top-left block, B in the bottom-right, zero elsewhere.
inline LPMatrix block_diag(LPMatrix const& a, LPMatrix const& b) {
  std::size_t const m = a.size();
  std::size_t const n = b.size();
  LPMatrix          r(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      r(i, j) = a(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(m + i, m + j) = b(i, j);
    }
  }
  return r;
}

inline std::string to_string(LPMatrix const& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != 0) {
        out += ", ";
      }
      out += a(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

}  // namespace vbraid

#endif  // VBRAID_LPMATRIX_HPP
