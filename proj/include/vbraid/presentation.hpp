#ifndef VBRAID_PRESENTATION_HPP
#define VBRAID_PRESENTATION_HPP

#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

/// One defining relation lhs = rhs.
struct Relator {
  std::string id;      // e.g. "VB3/R04"
  std::string schema;  // e.g. "zeta-braid(i=1)"
  GroupWord   lhs;
  GroupWord   rhs;
};

struct Presentation {
  Flavor               flavor;
  std::size_t          n;
  std::vector<Relator> relators;
};

namespace detail {

  class RelatorBuilder {
   public:
    RelatorBuilder(Flavor f, std::size_t n) : p_{f, n, {}} {}

    void add(std::string schema, std::vector<Letter> lhs, std::vector<Letter> rhs) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "/R%02zu", p_.relators.size() + 1);
      p_.relators.push_back(
          Relator{std::string(flavor_name(p_.flavor)) + std::to_string(p_.n) + buf,
                  std::move(schema), GroupWord(p_.flavor, p_.n, std::move(lhs)),
                  GroupWord(p_.flavor, p_.n, std::move(rhs))});
    }

    Presentation take() { return std::move(p_); }

   private:
    Presentation p_;
  };

  inline std::string params(int i) { return "(i=" + std::to_string(i) + ")"; }
  inline std::string params(int i, int j) {
    return "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
  }

  inline void add_symmetric(RelatorBuilder& b, int k) {
    using L = Letter;
    for (int i = 1; i <= k; ++i) {
      b.add("zeta-square" + params(i), {L::zeta(i), L::zeta(i)}, {});
    }
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 2; j <= k; ++j) {
        b.add("zeta-commute" + params(i, j), {L::zeta(i), L::zeta(j)},
              {L::zeta(j), L::zeta(i)});
      }
    }
    for (int i = 1; i + 1 <= k; ++i) {
      b.add("zeta-braid" + params(i), {L::zeta(i), L::zeta(i + 1), L::zeta(i)},
            {L::zeta(i + 1), L::zeta(i), L::zeta(i + 1)});
    }
  }

  inline void add_sigma_commute(RelatorBuilder& b, int k) {
    using L = Letter;
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 2; j <= k; ++j) {
        b.add("sigma-commute" + params(i, j), {L::sigma(i), L::sigma(j)},
              {L::sigma(j), L::sigma(i)});
      }
    }
  }

  inline void add_sigma_braid(RelatorBuilder& b, int k) {
    using L = Letter;
    for (int i = 1; i + 1 <= k; ++i) {
      b.add("sigma-braid" + params(i), {L::sigma(i), L::sigma(i + 1), L::sigma(i)},
            {L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)});
    }
  }

  inline void add_mixed(RelatorBuilder& b, int k) {
    using L = Letter;
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (j - i > 1 || i - j > 1) {
          b.add("mixed-commute" + params(i, j), {L::sigma(i), L::zeta(j)},
                {L::zeta(j), L::sigma(i)});
        }
      }
    }
    for (int i = 1; i + 1 <= k; ++i) {
      b.add("mixed-zzs" + params(i), {L::zeta(i), L::zeta(i + 1), L::sigma(i)},
            {L::sigma(i + 1), L::zeta(i), L::zeta(i + 1)});
    }
  }

}  // namespace detail

/// Every instance of every relation schema of the flavor's presentation on
/// n >= 2 strands, in a fixed order.
inline Presentation relators(Flavor flavor, std::size_t n) {
  if (n < 2) {
    throw DomainError("presentations need n >= 2, got n = " + std::to_string(n));
  }
  using L = Letter;
  int const              k = static_cast<int>(n) - 1;
  detail::RelatorBuilder b(flavor, n);
  switch (flavor) {
    case Flavor::Br:
      detail::add_sigma_commute(b, k);
      detail::add_sigma_braid(b, k);
      break;
    case Flavor::Sym: detail::add_symmetric(b, k); break;
    case Flavor::VB:
    case Flavor::BP:
      detail::add_symmetric(b, k);
      detail::add_sigma_commute(b, k);
      detail::add_sigma_braid(b, k);
      detail::add_mixed(b, k);
      if (flavor == Flavor::BP) {
        for (int i = 1; i + 1 <= k; ++i) {
          b.add("mixed-ssz" + detail::params(i), {L::sigma(i), L::sigma(i + 1), L::zeta(i)},
                {L::zeta(i + 1), L::sigma(i), L::sigma(i + 1)});
        }
      }
      break;
    case Flavor::SB:
    case Flavor::SG:
      detail::add_sigma_commute(b, k);
      for (int i = 1; i <= k; ++i) {
        for (int j = i + 2; j <= k; ++j) {
          b.add("a-commute" + detail::params(i, j), {L::a(i), L::a(j)}, {L::a(j), L::a(i)});
        }
      }
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          if (j - i != 1 && i - j != 1) {
            b.add("a-sigma-commute" + detail::params(i, j), {L::a(i), L::sigma(j)},
                  {L::sigma(j), L::a(i)});
          }
        }
      }
      detail::add_sigma_braid(b, k);
      for (int i = 1; i + 1 <= k; ++i) {
        b.add("singular-ssa" + detail::params(i), {L::sigma(i), L::sigma(i + 1), L::a(i)},
              {L::a(i + 1), L::sigma(i), L::sigma(i + 1)});
      }
      for (int i = 1; i + 1 <= k; ++i) {
        b.add("singular-ssa-mirror" + detail::params(i),
              {L::sigma(i + 1), L::sigma(i), L::a(i + 1)},
              {L::a(i), L::sigma(i + 1), L::sigma(i)});
      }
      for (int i = 1; i <= k; ++i) {
        b.add("sigma-inverse-right" + detail::params(i), {L::sigma(i), L::sigma(i, -1)}, {});
        b.add("sigma-inverse-left" + detail::params(i), {L::sigma(i, -1), L::sigma(i)}, {});
      }
      break;
  }
  return b.take();
}

}  // namespace vbraid

#endif  // VBRAID_PRESENTATION_HPP
