// vbraid: command-line front end for the virtual braid toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
// error, 4 precondition failure, 10 unknown (equal found no derivation).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vbraid/json.hpp"
#include "vbraid/vbraid.hpp"

namespace {

using namespace vbraid;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse        = 2;
constexpr int kExitDomain       = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitUnknown      = 10;

struct Range {
  std::size_t lo;
  std::size_t hi;
};

Range parse_range(std::string const& text) {
  auto const dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      auto const v = std::stoul(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument(text);
      }
      return {v, v};
    }
    std::string const a = text.substr(0, dots);
    std::string const b = text.substr(dots + 2);
    auto const        lo = std::stoul(a, &used);
    if (used != a.size()) {
      throw std::invalid_argument(text);
    }
    auto const hi = std::stoul(b, &used);
    if (used != b.size() || hi < lo) {
      throw std::invalid_argument(text);
    }
    return {lo, hi};
  } catch (std::exception const&) {
    throw SyntaxError(0, "bad strand range '" + text + "', expected N or A..B");
  }
}

std::vector<std::string> split_list(std::string const& text) {
  std::vector<std::string> out;
  std::string              cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int bfs_depth_default() {
  if (char const* env = std::getenv("VBRAID_BFS_DEPTH")) {
    try {
      return std::stoi(env);
    } catch (std::exception const&) {
      throw SyntaxError(0, std::string("VBRAID_BFS_DEPTH is not an integer: '") + env + "'");
    }
  }
  return BfsOptions{}.depth;
}

struct WordArgs {
  std::string flavor = "vb";
  std::size_t n      = 2;
  std::string word;
};

void add_word_args(CLI::App* cmd, WordArgs& args, bool flavor_option = true) {
  if (flavor_option) {
    cmd->add_option("--flavor", args.flavor, "br, sym, vb, bp, sb or sg")
        ->capture_default_str();
  }
  cmd->add_option("-n,--strands", args.n, "number of strands")->required();
  cmd->add_option("word", args.word, "word such as \"s1 s2^-1 z1\"")->required();
}

GroupWord read_word(WordArgs const& args) {
  return parse_word(args.word, parse_flavor(args.flavor), args.n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual braid groups: words, representations, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON encodings");

  WordArgs reduce_args, burau_args, aut_args, perm_args, abel_args, det_args, gauss_args;
  auto*    reduce_cmd = app.add_subcommand("reduce", "free reduction of a word");
  add_word_args(reduce_cmd, reduce_args);
  auto* burau_cmd = app.add_subcommand("burau", "Burau matrix of a word (JSON)");
  add_word_args(burau_cmd, burau_args);
  auto* aut_cmd = app.add_subcommand("aut", "automorphism of F_n attached to a word");
  add_word_args(aut_cmd, aut_args);
  auto* perm_cmd = app.add_subcommand("perm", "permutation of a word (JSON)");
  add_word_args(perm_cmd, perm_args);
  auto* abel_cmd = app.add_subcommand("abelianize", "image in Z/2 + Z (JSON)");
  add_word_args(abel_cmd, abel_args);
  auto* det_cmd = app.add_subcommand("det", "determinant of the Burau matrix");
  add_word_args(det_cmd, det_args);
  auto* gauss_cmd = app.add_subcommand("closure-gauss", "Gauss code of the closure");
  add_word_args(gauss_cmd, gauss_args);

  std::string parse_gauss_text;
  auto*       parse_gauss_cmd = app.add_subcommand("gauss", "validate and canonicalize a Gauss code");
  parse_gauss_cmd->add_option("code", parse_gauss_text, "code such as O1U2O3U1O2U3")->required();

  std::string rel_flavor = "vb";
  std::size_t rel_n      = 3;
  auto*       rel_cmd    = app.add_subcommand("relators", "list the defining relations");
  rel_cmd->add_option("--flavor", rel_flavor)->capture_default_str();
  rel_cmd->add_option("-n,--strands", rel_n)->required();

  std::string                verify_flavor = "vb";
  std::string                verify_range  = "2..7";
  std::string                verify_reps   = "all";
  std::optional<std::string> verify_fault;
  auto* verify_cmd = app.add_subcommand("verify", "check every relator under every representation");
  verify_cmd->add_option("--flavor", verify_flavor, "flavor, comma list, or all")
      ->capture_default_str();
  verify_cmd->add_option("-n,--strands", verify_range, "N or A..B")->capture_default_str();
  verify_cmd->add_option("--reps", verify_reps, "burau,aut,perm,expsum,abelianize or all")
      ->capture_default_str();
  verify_cmd->add_option("--inject-fault", verify_fault,
                         "harness self-test: corrupt the relator with this id");

  std::string equal_flavor = "vb";
  std::size_t equal_n      = 2;
  std::string equal_w1, equal_w2;
  std::optional<int>         equal_depth;
  std::optional<std::size_t> equal_cap;
  auto* equal_cmd = app.add_subcommand("equal", "bounded search for a derivation w1 = w2");
  equal_cmd->add_option("--flavor", equal_flavor)->capture_default_str();
  equal_cmd->add_option("-n,--strands", equal_n)->required();
  equal_cmd->add_option("--depth", equal_depth, "rewrite steps (default 6 or $VBRAID_BFS_DEPTH)");
  equal_cmd->add_option("--length-cap", equal_cap, "longest intermediate word");
  equal_cmd->add_option("w1", equal_w1)->required();
  equal_cmd->add_option("w2", equal_w2)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*reduce_cmd) {
      GroupWord const r = free_reduce(read_word(reduce_args));
      if (as_json) {
        std::cout << json::Json(to_string(r)).dump() << "\n";
      } else {
        std::cout << to_string(r) << "\n";
      }
    } else if (*burau_cmd) {
      std::cout << json::encode(burau(read_word(burau_args))).dump() << "\n";
    } else if (*aut_cmd) {
      FreeAut const f = aut_rep(read_word(aut_args));
      if (as_json) {
        std::cout << json::encode(f).dump() << "\n";
      } else {
        std::cout << to_string(f);
      }
    } else if (*perm_cmd) {
      std::cout << json::encode(perm_proj(read_word(perm_args))).dump() << "\n";
    } else if (*abel_cmd) {
      std::cout << json::encode(abelianize(read_word(abel_args))).dump() << "\n";
    } else if (*det_cmd) {
      LaurentPoly const d = mat_det(burau(read_word(det_args)));
      if (as_json) {
        std::cout << json::encode(d).dump() << "\n";
      } else {
        std::cout << d.to_string() << "\n";
      }
    } else if (*gauss_cmd) {
      std::cout << to_string(closure_code(read_word(gauss_args))) << "\n";
    } else if (*parse_gauss_cmd) {
      GaussCode const c = parse_gauss(parse_gauss_text);
      std::cout << to_string(c) << "\n";
    } else if (*rel_cmd) {
      Presentation const p = relators(parse_flavor(rel_flavor), rel_n);
      for (auto const& r : p.relators) {
        std::cout << r.id << "\t" << r.schema << "\t" << to_string(r.lhs) << " = "
                  << (r.rhs.empty() ? "1" : to_string(r.rhs)) << "\n";
      }
    } else if (*verify_cmd) {
      VerifyOptions opt;
      opt.flavors.clear();
      if (verify_flavor == "all") {
        opt.flavors.assign(std::begin(kAllFlavors), std::end(kAllFlavors));
      } else {
        for (auto const& f : split_list(verify_flavor)) {
          opt.flavors.push_back(parse_flavor(f));
        }
      }
      Range const range = parse_range(verify_range);
      opt.n_min         = range.lo;
      opt.n_max         = range.hi;
      if (verify_reps != "all") {
        opt.reps.clear();
        for (auto const& r : split_list(verify_reps)) {
          opt.reps.push_back(parse_rep(r));
        }
      }
      opt.inject_fault          = verify_fault;
      VerifyReport const report = run_verification(opt);
      if (as_json) {
        std::cout << json::encode(report).dump(1) << "\n";
      } else {
        std::cout << render_text(report);
      }
      return report.all_pass() ? 0 : kExitVerifyFailed;
    } else if (*equal_cmd) {
      Flavor const    flavor = parse_flavor(equal_flavor);
      GroupWord const w1     = parse_word(equal_w1, flavor, equal_n);
      GroupWord const w2     = parse_word(equal_w2, flavor, equal_n);
      BfsOptions      opt;
      opt.depth      = equal_depth.value_or(bfs_depth_default());
      opt.length_cap = equal_cap;
      RewriteSystem const sys    = rewrite_system(flavor, equal_n);
      BfsResult const     result = bfs_equal(sys, w1, w2, opt);
      if (as_json) {
        std::cout << json::encode(sys, result).dump() << "\n";
      } else if (result.equal()) {
        std::cout << "equal\n";
        GroupWord w = w1;
        std::cout << "  " << (w.empty() ? "1" : to_string(w)) << "\n";
        for (auto const& s : result.witness) {
          w = apply_step(sys, w, s);
          std::cout << describe_step(sys, s) << "\n"
                    << "  " << (w.empty() ? "1" : to_string(w)) << "\n";
        }
      } else {
        std::cout << "unknown\n";
      }
      return result.equal() ? 0 : kExitUnknown;
    }
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (DomainError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
