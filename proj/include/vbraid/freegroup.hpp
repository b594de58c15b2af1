#ifndef VBRAID_FREEGROUP_HPP
#define VBRAID_FREEGROUP_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/error.hpp"

namespace vbraid {

/// x_generator^exponent with exponent = +-1.
struct FreeLetter {
  int generator;
  int exponent;

  FreeLetter inverse() const { return {generator, -exponent}; }
  friend bool operator==(FreeLetter const&, FreeLetter const&) = default;
};

/// Freely reduced word in the free group on x_1, x_2, ...
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<FreeLetter> letters) {
    for (auto l : letters) {
      push_back(l);
    }
  }
  explicit FreeWord(std::vector<FreeLetter> const& letters) {
    for (auto l : letters) {
      push_back(l);
    }
  }

  static FreeWord generator(int i) { return FreeWord({FreeLetter{i, 1}}); }

  /// Appends one letter, cancelling against the last letter if possible.
  void push_back(FreeLetter l) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw DomainError("free group letters carry exponent +1 or -1");
    }
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  void append(FreeWord const& w) {
    for (auto l : w.letters_) {
      push_back(l);
    }
  }

  FreeWord inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      r.letters_.push_back(it->inverse());
    }
    return r;
  }

  std::vector<FreeLetter> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(FreeWord const&, FreeWord const&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

inline FreeWord fw_concat(FreeWord u, FreeWord const& v) {
  u.append(v);
  return u;
}

/// "x1 x2^-1 x1"; the empty word prints as "".
inline std::string to_string(FreeWord const& w) {
  std::string out;
  for (auto const& l : w.letters()) {
    if (!out.empty()) {
      out += " ";
    }
    out += "x" + std::to_string(l.generator);
    if (l.exponent < 0) {
      out += "^-1";
    }
  }
  return out;
}

/// Endomorphism of F_rank given by the images of x_1..x_rank.
class FreeAut {
 public:
  FreeAut() = default;
  FreeAut(std::size_t rank, std::vector<FreeWord> images)
      : rank_(rank), images_(std::move(images)) {
    if (images_.size() != rank_) {
      throw DimensionMismatch("automorphism of F_" + std::to_string(rank_)
                              + " needs " + std::to_string(rank_) + " images");
    }
    for (auto const& img : images_) {
      for (auto const& l : img.letters()) {
        if (l.generator < 1 || static_cast<std::size_t>(l.generator) > rank_) {
          throw DimensionMismatch("image uses x" + std::to_string(l.generator)
                                  + " outside F_" + std::to_string(rank_));
        }
      }
    }
  }

  static FreeAut identity(std::size_t rank) {
    std::vector<FreeWord> images;
    images.reserve(rank);
    for (std::size_t i = 1; i <= rank; ++i) {
      images.push_back(FreeWord::generator(static_cast<int>(i)));
    }
    return FreeAut(rank, std::move(images));
  }

  std::size_t rank() const noexcept { return rank_; }
  std::vector<FreeWord> const& images() const noexcept { return images_; }
  FreeWord const& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  bool is_identity() const { return *this == identity(rank_); }

  friend bool operator==(FreeAut const&, FreeAut const&) = default;

 private:
  std::size_t           rank_ = 0;
  std::vector<FreeWord> images_;
};

/// Substitutes f's images into w.
inline FreeWord aut_apply(FreeAut const& f, FreeWord const& w) {
  FreeWord r;
  for (auto const& l : w.letters()) {
    if (l.generator < 1 || static_cast<std::size_t>(l.generator) > f.rank()) {
      throw DimensionMismatch("word uses x" + std::to_string(l.generator)
                              + " but the automorphism has rank "
                              + std::to_string(f.rank()));
    }
    FreeWord const& img = f.image(l.generator);
    if (l.exponent > 0) {
      r.append(img);
    } else {
      r.append(img.inverse());
    }
  }
  return r;
}

/// f o g: x_i maps to f(g(x_i)).
inline FreeAut aut_compose(FreeAut const& f, FreeAut const& g) {
  if (f.rank() != g.rank()) {
    throw DimensionMismatch("cannot compose automorphisms of ranks "
                            + std::to_string(f.rank()) + " and "
                            + std::to_string(g.rank()));
  }
  std::vector<FreeWord> images;
  images.reserve(g.rank());
  for (auto const& img : g.images()) {
    images.push_back(aut_apply(f, img));
  }
  return FreeAut(f.rank(), std::move(images));
}

inline std::string to_string(FreeAut const& f) {
  std::string out;
  for (std::size_t i = 1; i <= f.rank(); ++i) {
    out += "x" + std::to_string(i) + " -> " + to_string(f.image(static_cast<int>(i)))
           + "\n";
  }
  return out;
}

}  // namespace vbraid

#endif  // VBRAID_FREEGROUP_HPP
