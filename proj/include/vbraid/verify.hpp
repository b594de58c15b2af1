#ifndef VBRAID_VERIFY_HPP
#define VBRAID_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/presentation.hpp"
#include "vbraid/reps.hpp"
#include "vbraid/word.hpp"

// Checks every defining relation of a presentation under every applicable
// representation.

namespace vbraid {

enum class Rep { Burau, Aut, Perm, ExpSum, Abelian };

inline constexpr Rep kAllReps[] = {Rep::Burau, Rep::Aut, Rep::Perm, Rep::ExpSum, Rep::Abelian};

inline std::string_view rep_name(Rep r) {
  switch (r) {
    case Rep::Burau: return "burau";
    case Rep::Aut: return "aut";
    case Rep::Perm: return "perm";
    case Rep::ExpSum: return "expsum";
    case Rep::Abelian: return "abelianize";
  }
  return "?";
}

inline Rep parse_rep(std::string_view text) {
  for (Rep r : kAllReps) {
    if (rep_name(r) == text) {
      return r;
    }
  }
  if (text == "abel") {
    return Rep::Abelian;
  }
  throw DomainError("unknown representation '" + std::string(text) + "'");
}

inline bool rep_applies(Rep r, Flavor f) {
  switch (r) {
    case Rep::Burau:
    case Rep::Aut:
    case Rep::Perm: return f != Flavor::SB && f != Flavor::SG;
    case Rep::ExpSum: return true;
    case Rep::Abelian: return f == Flavor::VB || f == Flavor::BP;
  }
  return false;
}

/// Whether rho(lhs) == rho(rhs) exactly.
inline bool relation_holds(Rep r, GroupWord const& lhs, GroupWord const& rhs) {
  switch (r) {
    case Rep::Burau: return burau(lhs) == burau(rhs);
    case Rep::Aut: return aut_rep(lhs) == aut_rep(rhs);
    case Rep::Perm: return perm_proj(lhs) == perm_proj(rhs);
    case Rep::ExpSum: return exp_sum(lhs) == exp_sum(rhs);
    case Rep::Abelian: return abelianize(lhs) == abelianize(rhs);
  }
  return false;
}

struct VerifyRecord {
  Flavor      flavor;
  std::size_t n;
  std::string relator_id;
  std::string schema;
  Rep         rep;
  bool        pass;
};

struct VerifyOptions {
  std::vector<Flavor> flavors{Flavor::VB};
  std::size_t         n_min = 2;
  std::size_t         n_max = 7;
  std::vector<Rep>    reps{std::begin(kAllReps), std::end(kAllReps)};
  // Harness self-test: append sigma_1 to the right-hand side of this relator.
  std::optional<std::string> inject_fault;
};

struct VerifyReport {
  std::vector<VerifyRecord> records;

  std::size_t failures() const {
    std::size_t f = 0;
    for (auto const& r : records) {
      f += r.pass ? 0 : 1;
    }
    return f;
  }
  bool all_pass() const { return failures() == 0; }
};

inline VerifyReport run_verification(VerifyOptions const& opt) {
  VerifyReport report;
  for (Flavor flavor : opt.flavors) {
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
      Presentation const pres = relators(flavor, n);
      for (auto const& rel : pres.relators) {
        GroupWord rhs = rel.rhs;
        if (opt.inject_fault && *opt.inject_fault == rel.id) {
          rhs.push_back(Letter::sigma(1));
        }
        for (Rep rep : opt.reps) {
          if (!rep_applies(rep, flavor)) {
            continue;
          }
          report.records.push_back(
              {flavor, n, rel.id, rel.schema, rep, relation_holds(rep, rel.lhs, rhs)});
        }
      }
    }
  }
  return report;
}

/// One tab-separated line per record plus a summary line.
inline std::string render_text(VerifyReport const& report) {
  std::string out;
  for (auto const& r : report.records) {
    out += std::string(flavor_name(r.flavor)) + "\t" + std::to_string(r.n) + "\t"
           + r.relator_id + "\t" + r.schema + "\t" + std::string(rep_name(r.rep)) + "\t"
           + (r.pass ? "pass" : "FAIL") + "\n";
  }
  out += "checked " + std::to_string(report.records.size()) + ", failed "
         + std::to_string(report.failures()) + "\n";
  return out;
}

}  // namespace vbraid

#endif  // VBRAID_VERIFY_HPP
