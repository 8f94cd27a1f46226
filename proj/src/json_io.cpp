#include "diagmaps/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace diagmaps {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());  // values outside int64 travel as decimal strings
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("invalid integer string: " + j.get<std::string>());
    }
  }
  throw ParseError("expected an integer");
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  std::vector<std::vector<Int>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<Int> r;
    r.reserve(row.size());
    for (const Json& v : row) r.push_back(int_from_json(v));
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("ragged matrix");
  }
  return IntMatrix::from_row_vectors(rows);
}

Json group_to_json(const FgAbGroup& g) {
  Json out;
  out["ambient_rank"] = g.ambient_rank();
  Json cols = Json::array();
  for (std::size_t j = 0; j < g.relations().cols(); ++j) {
    Json col = Json::array();
    for (std::size_t i = 0; i < g.ambient_rank(); ++i) col.push_back(int_to_json(g.relations()(i, j)));
    cols.push_back(std::move(col));
  }
  out["relations"] = std::move(cols);
  return out;
}

FgAbGroup group_from_json(const Json& j) {
  const Json& rank_j = require_field(j, "ambient_rank");
  Int rank = int_from_json(rank_j);
  if (rank < 0) throw ParseError("ambient_rank must be nonnegative");
  const std::size_t m = rank.convert_to<std::size_t>();
  const Json& rels = require_field(j, "relations");
  if (!rels.is_array()) throw ParseError("relations must be an array of columns");
  std::vector<std::vector<Int>> cols;
  for (const Json& col : rels) {
    if (!col.is_array()) throw ParseError("each relation must be an array");
    std::vector<Int> c;
    for (const Json& v : col) c.push_back(int_from_json(v));
    if (c.size() != m) throw ParseError("relation column length does not match ambient_rank");
    cols.push_back(std::move(c));
  }
  try {
    return FgAbGroup::from_presentation(m, IntMatrix::from_columns(m, cols));
  } catch (const PresentationError& e) {
    throw ParseError(e.what());
  }
}

Json element_to_json(const Element& e) {
  Json out;
  Json coords = Json::array();
  for (const Int& c : e.coords()) coords.push_back(int_to_json(c));
  out["coords"] = std::move(coords);
  return out;
}

Element element_from_json(const Json& j, const FgAbGroup& group) {
  const Json& coords_j = require_field(j, "coords");
  if (!coords_j.is_array()) throw ParseError("coords must be an array");
  std::vector<Int> coords;
  for (const Json& v : coords_j) coords.push_back(int_from_json(v));
  if (coords.size() != group.ambient_rank()) {
    throw ParseError("element coordinate length does not match the group's ambient rank");
  }
  return group.element(std::move(coords));
}

Json hom_to_json(const Homomorphism& h) {
  Json out;
  out["matrix"] = matrix_to_json(h.matrix());
  return out;
}

Homomorphism hom_from_json(const Json& j, const FgAbGroup& source, const FgAbGroup& target) {
  IntMatrix m = matrix_from_json(require_field(j, "matrix"));
  if (m.rows() == 0 && target.ambient_rank() == 0) m = IntMatrix(0, source.ambient_rank());
  if (m.rows() != target.ambient_rank() || m.cols() != source.ambient_rank()) {
    throw ParseError("homomorphism matrix shape must be target_rank x source_rank");
  }
  return Homomorphism(source, target, std::move(m));
}

Json quadratic_to_json(const QuadraticMap& q) {
  Json out;
  out["pi2"] = group_to_json(q.pi2());
  out["pi3"] = group_to_json(q.pi3());
  out["eta_square"] = hom_to_json(q.linearization());
  return out;
}

QuadraticMap quadratic_from_json(const Json& j) {
  FgAbGroup pi2 = group_from_json(require_field(j, "pi2"));
  FgAbGroup pi3 = group_from_json(require_field(j, "pi3"));
  GammaGroup g = gamma_group(pi2);
  Homomorphism lin = hom_from_json(require_field(j, "eta_square"), g.group, pi3);
  return QuadraticMap(pi2, pi3, std::move(lin));
}

Json target_to_json(const TargetData& t) {
  Json out;
  out["n"] = t.n;
  out["pi_n"] = group_to_json(t.pi_n);
  out["pi_n1"] = group_to_json(t.pi_n1);
  out["pi_2n"] = group_to_json(t.pi_2n);
  out["pi_2n1"] = group_to_json(t.pi_2n1);
  Json p1n = Json::array();
  for (const auto& row : t.p1n) {
    Json r = Json::array();
    for (const Element& e : row) r.push_back(element_to_json(e));
    p1n.push_back(std::move(r));
  }
  out["P1n"] = std::move(p1n);
  Json pnn = Json::array();
  for (const auto& row : t.pnn) {
    Json r = Json::array();
    for (const Element& e : row) r.push_back(element_to_json(e));
    pnn.push_back(std::move(r));
  }
  out["Pnn"] = std::move(pnn);
  out["tau_sign"] = t.tau_sign;
  return out;
}

TargetData target_from_json(const Json& j) {
  TargetData t;
  t.n = int_from_json(require_field(j, "n")).convert_to<int>();
  t.pi_n = group_from_json(require_field(j, "pi_n"));
  t.pi_n1 = group_from_json(require_field(j, "pi_n1"));
  t.pi_2n = group_from_json(require_field(j, "pi_2n"));
  t.pi_2n1 = group_from_json(require_field(j, "pi_2n1"));
  const Json& p1n = require_field(j, "P1n");
  if (!p1n.is_array() || p1n.size() != t.pi_n1.ambient_rank()) {
    throw ParseError("P1n must have one row per generator of pi_n1");
  }
  for (const Json& row : p1n) {
    if (!row.is_array() || row.size() != t.pi_n.ambient_rank()) {
      throw ParseError("P1n rows must have one entry per generator of pi_n");
    }
    std::vector<Element> r;
    for (const Json& v : row) r.push_back(element_from_json(v, t.pi_2n));
    t.p1n.push_back(std::move(r));
  }
  const Json& pnn = require_field(j, "Pnn");
  if (!pnn.is_array() || pnn.size() != t.pi_n.ambient_rank()) {
    throw ParseError("Pnn must have one row per generator of pi_n");
  }
  for (const Json& row : pnn) {
    if (!row.is_array() || row.size() != t.pi_n.ambient_rank()) {
      throw ParseError("Pnn must be square over the generators of pi_n");
    }
    std::vector<Element> r;
    for (const Json& v : row) r.push_back(element_from_json(v, t.pi_2n1));
    t.pnn.push_back(std::move(r));
  }
  t.tau_sign = int_from_json(require_field(j, "tau_sign")).convert_to<int>();
  try {
    t.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("invalid target data: ") + e.what());
  }
  return t;
}

}  // namespace diagmaps
