#ifndef VBRAID_PERM_HPP
#define VBRAID_PERM_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/error.hpp"

namespace vbraid {

/// Permutation of {1..n} in one-line notation: image(x) for x = 1..n.
class Permutation {
 public:
  Permutation() = default;

  /// Takes 1-based images and checks they form a bijection of {1..n}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > images_.size()
          || seen[static_cast<std::size_t>(v - 1)]) {
        throw DomainError("images do not form a permutation of {1.."
                          + std::to_string(images_.size()) + "}");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = static_cast<int>(i + 1);
    }
    return Permutation(std::move(images));
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::vector<int> const& images() const noexcept { return images_; }

  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }

  bool is_identity() const { return *this == identity(size()); }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    }
    return Permutation(std::move(inv));
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;

 private:
  std::vector<int> images_;
};

/// (f o g)(x) = f(g(x)).
inline Permutation p_compose(Permutation const& f, Permutation const& g) {
  if (f.size() != g.size()) {
    throw DimensionMismatch("cannot compose permutations of "
                            + std::to_string(f.size()) + " and "
                            + std::to_string(g.size()) + " points");
  }
  std::vector<int> images(f.size());
  for (std::size_t x = 1; x <= f.size(); ++x) {
    images[x - 1] = f(g(static_cast<int>(x)));
  }
  return Permutation(std::move(images));
}

/// The transposition (i i+1) of {1..n}.
inline Permutation p_transposition(int i, std::size_t n) {
  if (i < 1 || static_cast<std::size_t>(i) + 1 > n) {
    throw IndexOutOfRange("transposition index " + std::to_string(i)
                          + " out of range for n = " + std::to_string(n));
  }
  std::vector<int> images(n);
  for (std::size_t x = 0; x < n; ++x) {
    images[x] = static_cast<int>(x + 1);
  }
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return Permutation(std::move(images));
}

/// True iff f is a single n-cycle (the identity on one point counts).
inline bool p_is_cycle(Permutation const& f) {
  std::size_t const n = f.size();
  if (n == 0) {
    return false;
  }
  std::size_t length = 0;
  int         x      = 1;
  do {
    x = f(x);
    ++length;
  } while (x != 1);
  return length == n;
}

/// "[2,3,1]"
inline std::string to_image_string(Permutation const& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += std::to_string(f.images()[i]);
  }
  return out + "]";
}

/// "(1 2 3)(4 5)"; fixed points are omitted and the identity prints as "()".
inline std::string to_cycle_string(Permutation const& f) {
  std::string       out;
  std::vector<bool> done(f.size(), false);
  for (std::size_t start = 1; start <= f.size(); ++start) {
    if (done[start - 1] || f(static_cast<int>(start)) == static_cast<int>(start)) {
      continue;
    }
    out += "(";
    int x = static_cast<int>(start);
    do {
      if (x != static_cast<int>(start)) {
        out += " ";
      }
      out += std::to_string(x);
      done[static_cast<std::size_t>(x - 1)] = true;
      x                                     = f(x);
    } while (x != static_cast<int>(start));
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace vbraid

#endif  // VBRAID_PERM_HPP
