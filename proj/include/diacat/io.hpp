#ifndef DIACAT_IO_HPP_
#define DIACAT_IO_HPP_

// JSON documents for presentations, linear combinations, matrices,
// structure tables and decategorification reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "decat.hpp"
#include "diagram.hpp"
#include "dsl.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"
#include "normalform.hpp"
#include "presentation.hpp"

namespace diacat::io {

using Json = nlohmann::ordered_json;

inline Json rational_json(Rational const& q) { return q.get_str(); }

inline Json to_json(Matrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Json to_json(LinearCombination const& lc) {
  Json terms = Json::array();
  for (auto const& [d, c] : lc.terms()) {
    terms.push_back({{"coeff", c.to_text()}, {"diagram", render(d)}});
  }
  return {{"dom", lc.dom().to_text()},
          {"cod", lc.cod().to_text()},
          {"text", render(lc)},
          {"terms", std::move(terms)}};
}

inline Json to_json(FrobeniusData const& f) {
  auto elem = [](AlgebraElement const& a) {
    Json v = Json::array();
    for (auto const& q : a) v.push_back(rational_json(q));
    return v;
  };
  Json mult = Json::array();
  for (auto const& row : f.mult) {
    Json r = Json::array();
    for (auto const& e : row) r.push_back(elem(e));
    mult.push_back(std::move(r));
  }
  Json trace = Json::array();
  for (auto const& q : f.trace) trace.push_back(rational_json(q));
  Json dual = Json::array();
  for (auto const& d : f.dual_basis) dual.push_back(elem(d));
  return {{"basis", f.basis},
          {"mult", std::move(mult)},
          {"unit", elem(f.unit)},
          {"trace", std::move(trace)},
          {"dual_basis", std::move(dual)}};
}

inline Json to_json(Presentation const& p) {
  Json objects = Json::array();
  for (auto const& o : p.signature().objects()) {
    Json j = {{"code", std::string(1, o.code)}, {"name", o.name}};
    j["dual"] = o.dual_of ? Json(std::string(1, *o.dual_of)) : Json(nullptr);
    objects.push_back(std::move(j));
  }
  Json gens = Json::array();
  for (auto const& g : p.signature().generators()) {
    Json j = {{"name", g.name},
              {"dom", g.dom.to_text()},
              {"cod", g.cod.to_text()},
              {"kind", to_string(g.payload)}};
    if (g.labelled) j["labels"] = p.signature().labels(g.name);
    gens.push_back(std::move(j));
  }
  Json rels = Json::array();
  for (auto const& r : p.relations()) {
    rels.push_back({{"name", r.name}, {"lhs", render(r.lhs)}, {"rhs", render(r.rhs)}});
  }
  Json doc = {{"id", p.id()},
              {"strategy", to_string(p.strategy())},
              {"params", p.params().names()},
              {"objects", std::move(objects)},
              {"generators", std::move(gens)},
              {"relations", std::move(rels)}};
  if (p.frobenius()) doc["frobenius"] = to_json(*p.frobenius());
  return doc;
}

inline Json to_json(StructureTable const& t) {
  Json basis = Json::array();
  for (auto const& b : t.basis) basis.push_back(to_text(b));
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.table.size(); ++i) {
    for (std::size_t j = 0; j < t.table[i].size(); ++j) {
      Json terms = Json::array();
      for (auto const& [k, c] : t.table[i][j]) terms.push_back({k, c.to_text()});
      entries.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  }
  return {{"preset", t.preset}, {"n", t.n}, {"basis", std::move(basis)},
          {"table", std::move(entries)}};
}

inline Json young_report(Partition const& l, GroupAlgebraElem const& e) {
  return {{"lambda", partition_text(l)},
          {"f_hook", hook_length_dim(l)},
          {"rank", ideal_rank(e)},
          {"idempotent_ok", e * e == e}};
}

// {"basis": [...], "mult": [[elem]], "unit": elem, "trace": [...]}, with
// elements as arrays of rational strings or numbers.
inline FrobeniusData frobenius_from_json(Json const& j) {
  auto rat = [](Json const& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw Error(ErrorCode::parse_error, "expected a rational, got " + v.dump());
  };
  auto elem = [&](Json const& v) {
    if (!v.is_array()) throw Error(ErrorCode::parse_error, "expected an array");
    AlgebraElement a;
    for (auto const& x : v) a.push_back(rat(x));
    return a;
  };
  FrobeniusData f;
  try {
    f.basis = j.at("basis").get<std::vector<std::string>>();
    for (auto const& row : j.at("mult")) {
      f.mult.emplace_back();
      for (auto const& e : row) f.mult.back().push_back(elem(e));
    }
    f.unit = elem(j.at("unit"));
    for (auto const& x : j.at("trace")) f.trace.push_back(rat(x));
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::parse_error, std::string("frobenius data: ") + e.what());
  }
  return f;
}

}  // namespace diacat::io

#endif  // DIACAT_IO_HPP_
