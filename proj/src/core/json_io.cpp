#include "core/json_io.hpp"

#include <sstream>

namespace schub {

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON input");
  return j;
}

Json tableau_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return Json{{"rows", rows}};
}

Tableau tableau_from_json(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows")) throw parse_error("tableau: missing \"rows\"");
    rows = &j.at("rows");
  }
  if (!rows->is_array()) throw parse_error("tableau: rows must be an array");
  std::vector<std::vector<int>> out;
  for (const Json& row : *rows) {
    if (!row.is_array()) throw parse_error("tableau: each row must be an array");
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw parse_error("tableau: entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  try {
    return Tableau(std::move(out));
  } catch (const domain_error& e) {
    throw parse_error(std::string("tableau: ") + e.what());
  }
}

Json tableau_set_json(const TableauSet& ts) {
  Json out = Json::array();
  for (const Tableau& t : ts.members()) out.push_back(tableau_json(t));
  return out;
}

Json formal_sum_json(const FormalSum& s) {
  Json out = Json::array();
  for (const auto& [t, c] : s.terms()) out.push_back(Json{{"coeff", c}, {"tableau", tableau_json(t)}});
  return out;
}

Json skew_json(const SkewTableau& u) {
  Json rows = Json::array();
  for (int r = 0; r < u.outer().rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < u.inner().part(r); ++c) row.push_back(nullptr);
    for (int v : u.filling()[r]) row.push_back(v);
    rows.push_back(row);
  }
  return Json{{"outer", u.outer().parts()}, {"inner", u.inner().parts()}, {"rows", rows}};
}

SkewTableau skew_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outer") || !j.contains("rows"))
    throw parse_error("skew tableau: need \"outer\", \"inner\", \"rows\"");
  Partition outer = partition_from_json(j.at("outer"));
  Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition();
  std::vector<std::vector<int>> filling(outer.rows());
  const Json& rows = j.at("rows");
  if (!rows.is_array()) throw parse_error("skew tableau: rows must be an array");
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (const Json& v : rows[r]) {
      if (v.is_null()) continue;
      if (!v.is_number_integer()) throw parse_error("skew tableau: entries must be integers");
      filling[r].push_back(v.get<int>());
    }
  }
  try {
    return SkewTableau(std::move(outer), std::move(inner), std::move(filling));
  } catch (const domain_error& e) {
    throw parse_error(std::string("skew tableau: ") + e.what());
  }
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("partition: expected an array");
  std::vector<int> parts;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw parse_error("partition: parts must be integers");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const domain_error& e) {
    throw parse_error(std::string("partition: ") + e.what());
  }
}

Json field_json(const FieldSpec& f) {
  if (f.is_rationals()) return Json{{"field", "Q"}};
  return Json{{"field", "Fp"}, {"p", f.p()}};
}

FieldSpec field_from_json(const Json& j) {
  try {
    if (j.is_string()) return FieldSpec::from_string(j.get<std::string>());
    if (j.is_object() && j.contains("field")) {
      const std::string kind = j.at("field").get<std::string>();
      if (kind == "Q") return FieldSpec::rationals();
      if (kind == "Fp") return FieldSpec::prime(j.at("p").get<std::int64_t>());
    }
  } catch (const domain_error& e) {
    throw parse_error(std::string("field: ") + e.what());
  }
  throw parse_error("field: expected {\"field\":\"Q\"} or {\"field\":\"Fp\",\"p\":...}");
}

std::string rat_to_string(const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw parse_error("cannot parse rational '" + s + "'");
  }
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  if (s.field().is_rationals()) {
    const auto& m = s.q_rows();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
      rows.push_back(row);
    }
  } else {
    const auto& m = s.fp_rows();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(std::to_string(m.at(r, c)));
      rows.push_back(row);
    }
  }
  return rows;
}

namespace {

Rat entry_to_rat(const Json& v) {
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
  throw parse_error("matrix entries must be strings or integers");
}

}  // namespace

Subspace subspace_from_json(int n, const FieldSpec& f, const Json& j) {
  if (!j.is_array()) throw parse_error("matrix: expected an array of rows");
  const int rows = static_cast<int>(j.size());
  if (f.is_rationals()) {
    Mat<Rat> m(rows, n + 1);
    for (int r = 0; r < rows; ++r) {
      if (static_cast<int>(j[r].size()) != n + 1) throw parse_error("matrix: need n+1 columns");
      for (int c = 0; c <= n; ++c) m.at(r, c) = entry_to_rat(j[r][c]);
    }
    return Subspace::from_matrix(n, f, std::move(m));
  }
  Mat<std::int64_t> m(rows, n + 1);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != n + 1) throw parse_error("matrix: need n+1 columns");
    for (int c = 0; c <= n; ++c) m.at(r, c) = rat_mod_p(entry_to_rat(j[r][c]), f.p());
  }
  return Subspace::from_matrix(n, f, std::move(m));
}

Json flag_json(const Flag& f) {
  Json out = Json::array();
  for (int i = 1; i <= f.ambient(); ++i) out.push_back(subspace_json(f.at(i)));
  return out;
}

Flag flag_from_json(int n, const FieldSpec& f, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw parse_error("flag: expected n matrices F_1..F_n");
  std::vector<Subspace> members;
  members.push_back(Subspace::full(n, f));
  for (const Json& m : j) members.push_back(subspace_from_json(n, f, m));
  try {
    return Flag(n, f, std::move(members));
  } catch (const domain_error& e) {
    throw parse_error(std::string("flag: ") + e.what());
  }
}

}  // namespace schub
