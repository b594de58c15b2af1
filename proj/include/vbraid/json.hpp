#ifndef VBRAID_JSON_HPP
#define VBRAID_JSON_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "vbraid/gauss.hpp"
#include "vbraid/laurent.hpp"
#include "vbraid/lpmatrix.hpp"
#include "vbraid/perm.hpp"
#include "vbraid/reps.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/verify.hpp"

// JSON encodings. Object keys keep insertion order so output is stable.

namespace vbraid::json {

using Json = nlohmann::ordered_json;

/// {"0":"1","1":"-1"} for 1 - t: exponent -> coefficient, both decimal strings.
inline Json encode(LaurentPoly const& p) {
  Json j = Json::object();
  for (auto const& [e, c] : p.terms()) {
    j[std::to_string(e)] = c.str();
  }
  return j;
}

inline LaurentPoly decode_poly(Json const& j) {
  if (!j.is_object()) {
    throw ParseError("Laurent polynomial JSON must be an object");
  }
  std::vector<LaurentPoly::Term> terms;
  for (auto const& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw ParseError("Laurent coefficients are encoded as decimal strings");
    }
    std::size_t used = 0;
    int64_t     e    = 0;
    try {
      e = std::stoll(key, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) {
      throw ParseError("bad exponent key '" + key + "'");
    }
    try {
      terms.emplace_back(e, BigInt(value.get<std::string>()));
    } catch (std::exception const&) {
      throw ParseError("bad coefficient '" + value.get<std::string>() + "'");
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

/// {"n": k, "entries": [[poly, ...], ...]}
inline Json encode(LPMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(encode(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"]       = m.size();
  j["entries"] = std::move(rows);
  return j;
}

inline LPMatrix decode_matrix(Json const& j) {
  auto const  n = j.at("n").get<std::size_t>();
  auto const& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("matrix JSON needs n rows");
  }
  LPMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("matrix JSON rows need n entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      m(i, k) = decode_poly(rows[i][k]);
    }
  }
  return m;
}

inline Json encode(Permutation const& p) {
  Json j;
  j["images"] = p.images();
  j["cycles"] = to_cycle_string(p);
  return j;
}

inline Json encode(AbelianImage const& a) {
  Json j;
  j["zeta_parity"] = a.zeta_parity;
  j["sigma_sum"]   = a.sigma_sum;
  return j;
}

inline Json encode(FreeAut const& f) {
  Json j;
  j["rank"] = f.rank();
  Json images = Json::array();
  for (auto const& w : f.images()) {
    images.push_back(to_string(w));
  }
  j["images"] = std::move(images);
  return j;
}

inline Json encode(RewriteSystem const& sys, BfsResult const& r) {
  Json j;
  j["result"] = r.equal() ? "equal" : "unknown";
  Json steps  = Json::array();
  for (auto const& s : r.witness) {
    Json step;
    step["rule"]      = s.rule;
    step["origin"]    = sys.rules.at(s.rule).origin;
    step["direction"] = s.forward ? "forward" : "backward";
    step["position"]  = s.position;
    steps.push_back(std::move(step));
  }
  j["witness"]       = std::move(steps);
  j["nodes_visited"] = r.nodes_visited;
  return j;
}

inline Json encode(VerifyReport const& report) {
  Json records = Json::array();
  for (auto const& r : report.records) {
    Json rec;
    rec["flavor"]  = std::string(flavor_name(r.flavor));
    rec["n"]       = r.n;
    rec["relator"] = r.relator_id;
    rec["schema"]  = r.schema;
    rec["rep"]     = std::string(rep_name(r.rep));
    rec["pass"]    = r.pass;
    records.push_back(std::move(rec));
  }
  Json j;
  j["records"] = std::move(records);
  j["checked"] = report.records.size();
  j["failed"]  = report.failures();
  return j;
}

}  // namespace vbraid::json

#endif  // VBRAID_JSON_HPP
