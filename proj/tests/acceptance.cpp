// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "random_words.hpp"
#include "run_cli.hpp"
#include "vbraid/vbraid.hpp"

using namespace vbraid;
using testing::Rng;

namespace {

struct Outcome {
  bool        pass = true;
  std::string detail;
};

// Collects the first few failures so a red line says what went wrong.
class Tally {
 public:
  void check(bool ok, std::string const& what) {
    ++checked_;
    if (!ok) {
      if (failed_ < 3) {
        first_ += (first_.empty() ? "" : "; ") + what;
      }
      ++failed_;
    }
  }
  std::size_t failed() const { return failed_; }
  Outcome outcome(std::string const& extra = "") const {
    std::ostringstream os;
    os << checked_ << " checks, " << failed_ << " failed";
    if (!extra.empty()) {
      os << "; " << extra;
    }
    if (!first_.empty()) {
      os << "; first: " << first_;
    }
    return {failed_ == 0, os.str()};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_  = 0;
  std::string first_;
};

LaurentPoly const t = LaurentPoly::t();

// 1. Every VB and BP relator, n = 2..7, under all five representations.
Outcome relation_soundness() {
  VerifyOptions opt;
  opt.flavors = {Flavor::VB, Flavor::BP};
  opt.n_min   = 2;
  opt.n_max   = 7;
  Tally tally;
  auto const report = run_verification(opt);
  for (auto const& r : report.records) {
    tally.check(r.pass, r.relator_id + " " + std::string(rep_name(r.rep)));
  }
  std::size_t expected = 0;
  for (Flavor f : opt.flavors) {
    for (std::size_t n = 2; n <= 7; ++n) {
      expected += relators(f, n).relators.size() * std::size(kAllReps);
    }
  }
  tally.check(report.records.size() == expected, "record count");
  // The harness must notice a corrupted relator, or a pass means nothing.
  opt.inject_fault = "VB4/R05";
  tally.check(!run_verification(opt).all_pass(), "injected fault went unnoticed");
  return tally.outcome(std::to_string(report.records.size()) + " relator/rep pairs");
}

// 2. Generator matrices, built independently entry by entry.
Outcome burau_generators() {
  Tally tally;
  for (Flavor f : {Flavor::VB, Flavor::BP}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (int i = 1; i < static_cast<int>(n); ++i) {
        for (Letter const l : {Letter::sigma(i), Letter::sigma(i, -1), Letter::zeta(i)}) {
          GroupWord const w(f, n, {l});
          std::string const tag = std::string(flavor_name(f)) + std::to_string(n) + " "
                                  + to_string(l);
          tally.check(burau(w) == oracle::burau_generator(l, n), tag);
          tally.check(burau_generator(l, n) == oracle::burau_generator(l, n), tag);
        }
      }
    }
  }
  return tally.outcome();
}

// 3. Determinants of generators and of random words.
Outcome determinants() {
  Tally tally;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int i = 1; i < static_cast<int>(n); ++i) {
      tally.check(mat_det(burau(GroupWord(Flavor::VB, n, {Letter::sigma(i)}))) == -t,
                  "det sigma");
      tally.check(mat_det(burau(GroupWord(Flavor::VB, n, {Letter::zeta(i)}))) == LaurentPoly(-1),
                  "det zeta");
    }
  }
  Rng rng(1003);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int k = 0; k < 1000; ++k) {
    GroupWord const   w      = testing::random_word_upto(Flavor::VB, size(rng), 50, rng);
    LaurentPoly const expect = (-t).pow(exp_sum(w)) * LaurentPoly(-1).pow(zeta_count(w));
    tally.check(mat_det(burau(w)) == expect, to_string(w));
  }
  return tally.outcome("det(sigma) = -t, det(zeta) = -1");
}

// 4. Abelianization.
Outcome abelianization() {
  Tally tally;
  Rng   rng(1004);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int k = 0; k < 1000; ++k) {
    Flavor const      f = k % 2 == 0 ? Flavor::VB : Flavor::BP;
    std::size_t const n = size(rng);
    GroupWord const   u = testing::random_word_upto(f, n, 30, rng);
    GroupWord const   v = testing::random_word_upto(f, n, 30, rng);
    tally.check(abelianize(u * v) == ab_add(abelianize(u), abelianize(v)), "homomorphism");
    if (f == Flavor::VB) {
      tally.check(abelianize(to_bp(u)) == abelianize(u), "to_bp");
    }
    LaurentPoly const d = mat_det(burau(u));
    tally.check(d.term_count() == 1 && d.max_exponent() == exp_sum(u), "det degree");
  }
  return tally.outcome();
}

// 5. Symmetric group words evaluated directly and through VB.
Outcome section_identity() {
  Tally tally;
  Rng   rng(1005);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  for (int k = 0; k < 200; ++k) {
    std::size_t const n = size(rng);
    GroupWord const   w = testing::random_word_upto(Flavor::Sym, n, 40, rng);
    tally.check(perm_proj(w.recast(Flavor::VB, n)) == oracle::perm_track(w), to_string(w));
  }
  return tally.outcome();
}

// 6. Permutative structure.
Outcome zeta_involution() {
  Tally tally;
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; m + n <= 8; ++n) {
      GroupWord const w   = zeta_block(m, n) * zeta_block(n, m);
      std::string const tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      tally.check(perm_proj(w).is_identity(), tag + " perm");
      tally.check(burau(w).is_identity(), tag + " burau");
      tally.check(aut_rep(w).is_identity(), tag + " aut");
    }
  }
  return tally.outcome();
}

std::vector<GroupWord> generator_words(std::size_t n) {
  std::vector<GroupWord> out{GroupWord(Flavor::VB, n)};
  for (int i = 1; i < static_cast<int>(n); ++i) {
    for (Letter const l : {Letter::sigma(i), Letter::sigma(i, -1), Letter::zeta(i)}) {
      out.emplace_back(Flavor::VB, n, std::vector<Letter>{l});
    }
  }
  return out;
}

Outcome naturality() {
  Tally tally;
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t n = 1; m + n <= 8; ++n) {
      auto const g1 = generator_words(m);
      auto const g2 = generator_words(n);
      for (auto const& w1 : g1) {
        tally.check(check_naturality(m, n, w1, g2.front()), to_string(w1));
      }
      for (auto const& w2 : g2) {
        tally.check(check_naturality(m, n, g1.front(), w2), to_string(w2));
      }
    }
  }
  Rng rng(1006);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int k = 0; k < 100; ++k) {
    std::size_t const m = size(rng);
    std::size_t const n = std::uniform_int_distribution<std::size_t>(1, 8 - m)(rng);
    GroupWord const   w1 = testing::random_word_upto(Flavor::VB, m, 6, rng);
    GroupWord const   w2 = testing::random_word_upto(Flavor::VB, n, 6, rng);
    tally.check(check_naturality(m, n, w1, w2), to_string(w1) + " | " + to_string(w2));
  }
  return tally.outcome();
}

Outcome coherence() {
  Tally       tally;
  std::size_t b1 = 0, b2 = 0, b2_comm = 0, total = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t q = 0; q <= 4; ++q) {
        auto const r = coherence_report(m, n, q);
        ++total;
        b1 += r.b1_literal ? 1 : 0;
        b2 += r.b2_literal ? 1 : 0;
        b2_comm += r.b2_up_to_commutation ? 1 : 0;
        tally.check(check_coherence(m, n, q), "(" + std::to_string(m) + "," + std::to_string(n)
                                                  + "," + std::to_string(q) + ")");
      }
    }
  }
  std::ostringstream os;
  os << "B1 literal " << b1 << "/" << total << ", B2 literal " << b2 << "/" << total
     << ", B2 up to far commutation " << b2_comm << "/" << total;
  return tally.outcome(os.str());
}

// 7. Pairing against block sums.
Outcome pairing() {
  Tally tally;
  Rng   rng(1007);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int k = 0; k < 200; ++k) {
    Flavor const    f  = k % 2 == 0 ? Flavor::VB : Flavor::BP;
    GroupWord const w1 = testing::random_word_upto(f, size(rng), 15, rng);
    GroupWord const w2 = testing::random_word_upto(f, size(rng), 15, rng);
    tally.check(burau(mu(w1, w2)) == block_diag(burau(w1), burau(w2)),
                to_string(w1) + " | " + to_string(w2));
  }
  return tally.outcome();
}

// 8. Rewriting search.
Outcome rewriting() {
  Tally       tally;
  std::size_t relator_count = 0;
  for (Flavor f : kAllFlavors) {
    for (std::size_t n = 2; n <= 6; ++n) {
      RewriteSystem const sys = rewrite_system(f, n);
      for (auto const& rel : relators(f, n).relators) {
        ++relator_count;
        BfsOptions opt;
        opt.depth    = 2;
        auto const r = bfs_equal(sys, rel.lhs, rel.rhs, opt);
        tally.check(r.equal(), rel.id + " not found");
        if (r.equal()) {
          tally.check(replay(sys, rel.lhs, r.witness) == rel.rhs, rel.id + " replay");
        }
      }
    }
  }
  GroupWord const w1 = parse_word("s1 s2 z1", Flavor::VB, 3);
  GroupWord const w2 = parse_word("z2 s1 s2", Flavor::VB, 3);
  BfsOptions      opt;
  opt.depth          = 4;
  auto const forbidden = bfs_equal(w1, w2, opt);
  tally.check(!forbidden.equal(), "forbidden pair derived");
  tally.check(!forbidden.budget_exhausted, "forbidden search hit the node budget");
  return tally.outcome(std::to_string(relator_count) + " relators; forbidden pair unknown after "
                       + std::to_string(forbidden.nodes_visited) + " words");
}

// 9. Gauss codes.
Outcome gauss() {
  Tally tally;
  GaussCode trefoil;
  try {
    trefoil = parse_gauss("O1U2O3U1O2U3");
    tally.check(to_string(trefoil) == "O1U2O3U1O2U3", "round trip");
  } catch (Error const& e) {
    tally.check(false, std::string("rejected trefoil: ") + e.what());
  }
  for (char const* bad : {"O1U", "O1U1O2", "O1O1", "X1U1", "O1 U1", "O0U0", "U1O1U1O1", "1O"}) {
    bool rejected = false;
    try {
      parse_gauss(bad);
    } catch (ParseError const&) {
      rejected = true;
    }
    tally.check(rejected, std::string("accepted ") + bad);
  }
  GaussCode const closure = closure_code(parse_word("s1 s1 s1", Flavor::VB, 2), 2);
  tally.check(equal_up_to_rotation(closure, trefoil), "trefoil closure " + to_string(closure));
  for (auto const& [text, n] : std::vector<std::pair<char const*, std::size_t>>{
           {"s1 s1", 2}, {"", 2}, {"s1", 3}, {"z1 z1 s2", 3}}) {
    bool rejected = false;
    try {
      closure_code(parse_word(text, Flavor::VB, n));
    } catch (NotAKnot const&) {
      rejected = true;
    }
    tally.check(rejected, std::string("closure of '") + text + "' accepted");
  }
  return tally.outcome();
}

// 10. Byte-identical reports.
Outcome determinism() {
  Tally tally;
  for (std::string const args : {"verify --flavor all -n 2..7", "--json verify --flavor vb,bp -n 2..5"}) {
    auto const a = testing::run_cli(args);
    auto const b = testing::run_cli(args);
    tally.check(a.status == 0 && !a.out.empty(), args + " did not run cleanly");
    tally.check(a.out == b.out && a.status == b.status, args + " differs between runs");
  }
  VerifyOptions opt;
  opt.flavors.assign(std::begin(kAllFlavors), std::end(kAllFlavors));
  tally.check(render_text(run_verification(opt)) == render_text(run_verification(opt)),
              "in-process reports differ");
  return tally.outcome();
}

struct Part {
  std::string              id;
  std::string              title;
  std::function<Outcome()> run;
};

struct Criterion {
  std::string       id;
  std::vector<Part> parts;
};

Outcome run_part(Part const& p, double& secs) {
  auto const start = std::chrono::steady_clock::now();
  Outcome    o;
  try {
    o = p.run();
  } catch (std::exception const& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}
}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {"1", {{"1", "relation soundness", relation_soundness}}},
      {"2", {{"2", "Burau generator matrices", burau_generators}}},
      {"3", {{"3", "determinants", determinants}}},
      {"4", {{"4", "abelianization", abelianization}}},
      {"5", {{"5", "symmetric group section", section_identity}}},
      {"6",
       {{"6a", "zeta block involution", zeta_involution},
        {"6b", "naturality", naturality},
        {"6c", "literal coherence", coherence}}},
      {"7", {{"7", "pairing and block sums", pairing}}},
      {"8", {{"8", "rewriting search", rewriting}}},
      {"9", {{"9", "Gauss codes", gauss}}},
      {"10", {{"10", "determinism", determinism}}},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    if (c.parts.size() == 1) {
      double        secs = 0;
      Outcome const o    = run_part(c.parts.front(), secs);
      failed += o.pass ? 0 : 1;
      std::printf("criterion %-2s %s  %s (%.1fs): %s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL",
                  c.parts.front().title.c_str(), secs, o.detail.c_str());
      std::fflush(stdout);
      continue;
    }
    bool        pass = true;
    std::string names;
    for (auto const& p : c.parts) {
      double        secs = 0;
      Outcome const o    = run_part(p, secs);
      pass               = pass && o.pass;
      names += (names.empty() ? "" : ", ") + p.id + (o.pass ? " pass" : " FAIL");
      std::printf("  part %-3s %s  %s (%.1fs): %s\n", p.id.c_str(), o.pass ? "PASS" : "FAIL",
                  p.title.c_str(), secs, o.detail.c_str());
    }
    failed += pass ? 0 : 1;
    std::printf("criterion %-2s %s  permutative structure: %s\n", c.id.c_str(),
                pass ? "PASS" : "FAIL", names.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
