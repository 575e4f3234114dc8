#include "homquot/json_io.hpp"

#include <fstream>
#include <vector>

#include "homquot/errors.hpp"

namespace homquot {

namespace {

const Json& expect(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
  return j.at(key);
}

std::size_t expect_count(const Json& j, const char* key, const char* what) {
  const Json& v = expect(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string(what) + ": \"" + key +
                     "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + ": expected a scalar string");
  return j.get<std::string>();
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  Json j;
  if (f.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p();
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  std::string kind = expect_string(expect(j, "kind", "field"), "field kind");
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    std::size_t p = expect_count(j, "p", "field");
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("field: unknown kind \"" + kind + "\"");
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Scalar& x : v) j.push_back(x.str());
  return j;
}

Vec vec_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array()) throw ParseError("vector: expected an array");
  Vec v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(Scalar::parse(f, expect_string(x, "vector entry")));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vec_to_json(m.row(r)));
  return j;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
  std::vector<Vec> rows;
  rows.reserve(j.size());
  std::size_t cols = 0;
  for (const Json& r : j) {
    Vec row = vec_from_json(f, r);
    if (rows.empty())
      cols = row.size();
    else if (row.size() != cols)
      throw ParseError("matrix: ragged rows");
    rows.push_back(std::move(row));
  }
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  return m;
}

Json subspace_to_json(const Subspace& s) {
  Json j = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) j.push_back(vec_to_json(s.basis_row(i)));
  return j;
}

Subspace subspace_from_json(const FieldSpec& f, std::size_t ambient,
                            const Json& j) {
  if (!j.is_array()) throw ParseError("subspace: expected an array of rows");
  std::vector<Vec> rows;
  for (const Json& r : j) {
    Vec row = vec_from_json(f, r);
    if (row.size() != ambient)
      throw ParseError("subspace: row length does not match the ambient dimension");
    rows.push_back(std::move(row));
  }
  Subspace s = Subspace::from_vectors(f, ambient, rows);
  if (s.dim() != rows.size())
    throw ParseError("subspace: rows are linearly dependent");
  return s;
}

Json algebra_to_json(const HomLieAlgebra& L) {
  const FieldSpec& f = L.field();
  std::size_t n = L.dim();
  Json j;
  j["field"] = field_to_json(f);
  j["dim"] = n;
  Json bracket = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      Vec v = L.bracket(vec_unit(f, n, i), vec_unit(f, n, k));
      if (vec_is_zero(v)) continue;
      Json e;
      e["i"] = i;
      e["j"] = k;
      e["value"] = vec_to_json(v);
      bracket.push_back(e);
    }
  j["bracket"] = bracket;
  j["alpha"] = matrix_to_json(L.alpha());
  return j;
}

HomLieAlgebra algebra_from_json(const Json& j, bool verify) {
  FieldSpec f = field_from_json(expect(j, "field", "algebra"));
  std::size_t n = expect_count(j, "dim", "algebra");
  const Json& bracket = expect(j, "bracket", "algebra");
  if (!bracket.is_array()) throw ParseError("algebra: \"bracket\" must be an array");
  std::vector<BracketEntry> entries;
  for (const Json& e : bracket) {
    std::size_t i = expect_count(e, "i", "bracket entry");
    std::size_t k = expect_count(e, "j", "bracket entry");
    if (i >= k || k >= n)
      throw ParseError("bracket entry: indices must satisfy i < j < dim");
    Vec v = vec_from_json(f, expect(e, "value", "bracket entry"));
    if (v.size() != n)
      throw ParseError("bracket entry: value length does not match dim");
    entries.push_back({i, k, std::move(v)});
  }
  Matrix alpha = matrix_from_json(f, expect(j, "alpha", "algebra"));
  if (alpha.rows() != n || alpha.cols() != n)
    throw ParseError("algebra: \"alpha\" must be a dim x dim matrix");
  HomLieAlgebra L = HomLieAlgebra::from_structure(f, n, entries, alpha);
  return verify ? L.verified() : L;
}

Json extension_to_json(const Extension& e) {
  Json j;
  j["ambient"] = algebra_to_json(e.ambient);
  j["subalgebra_basis"] = subspace_to_json(e.sub_space);
  return j;
}

Extension extension_from_json(const Json& j) {
  HomLieAlgebra ambient = algebra_from_json(expect(j, "ambient", "extension"));
  const Json& basis = expect(j, "subalgebra_basis", "extension");
  if (!basis.is_array())
    throw ParseError("extension: \"subalgebra_basis\" must be an array");
  std::vector<Vec> rows;
  for (const Json& r : basis) {
    Vec row = vec_from_json(ambient.field(), r);
    if (row.size() != ambient.dim())
      throw ParseError("extension: basis row length does not match the ambient dim");
    rows.push_back(std::move(row));
  }
  Matrix m = Matrix::from_rows(ambient.field(), rows, ambient.dim());
  return make_extension(ambient, m);
}

Json maxq_to_json(const MaxQuotients& m) {
  Json j = algebra_to_json(m.carrier);
  j["phi"] = matrix_to_json(m.phi);
  j["i_min_basis"] = subspace_to_json(m.i_min);
  return j;
}

Json operator_algebra_to_json(const OperatorAlgebra& a) {
  Json j;
  j["field"] = field_to_json(a.field);
  j["ambient_dim"] = a.ambient_dim;
  j["unital"] = a.unital;
  Json basis = Json::array();
  for (const Matrix& b : a.basis) basis.push_back(matrix_to_json(b));
  j["basis"] = basis;
  Json gens = Json::array();
  for (const std::string& g : a.generators) gens.push_back(g);
  j["generators"] = gens;
  return j;
}

OperatorAlgebra operator_algebra_from_json(const Json& j) {
  FieldSpec f = field_from_json(expect(j, "field", "operator algebra"));
  std::size_t n = expect_count(j, "ambient_dim", "operator algebra");
  const Json& unital = expect(j, "unital", "operator algebra");
  if (!unital.is_boolean())
    throw ParseError("operator algebra: \"unital\" must be a boolean");
  const Json& basis = expect(j, "basis", "operator algebra");
  if (!basis.is_array())
    throw ParseError("operator algebra: \"basis\" must be an array");
  std::vector<Matrix> gens;
  for (const Json& b : basis) {
    Matrix m = matrix_from_json(f, b);
    if (m.rows() != n || m.cols() != n)
      throw ParseError("operator algebra: basis matrices must be ambient_dim square");
    gens.push_back(std::move(m));
  }
  std::vector<std::string> names;
  const Json& gn = expect(j, "generators", "operator algebra");
  if (!gn.is_array())
    throw ParseError("operator algebra: \"generators\" must be an array");
  for (const Json& g : gn) names.push_back(expect_string(g, "generator name"));

  // closure is an invariant of the type, so rebuilding through the closure
  // operation both validates and re-canonicalizes
  OperatorAlgebra a = operator_closure(f, n, gens, unital.get<bool>());
  if (a.dim() != gens.size())
    throw ParseError("operator algebra: basis is not a closed independent span");
  a.generators = std::move(names);
  return a;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["value"] = v.is_true() ? "true" : v.is_false() ? "false" : "unknown";
  j["method"] = method_name(v.method);
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness.has_value()) {
    Json w;
    w["kind"] = v.witness->kind;
    Json vecs;
    for (const auto& [name, vec] : v.witness->vectors) vecs[name] = vec_to_json(vec);
    w["vectors"] = vecs;
    Json subs;
    for (const auto& [name, s] : v.witness->subspaces) subs[name] = subspace_to_json(s);
    w["subspaces"] = subs;
    j["witness"] = w;
  }
  return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j;
  j["alternating"] = verdict_to_json(r.alternating);
  j["hom_jacobi"] = verdict_to_json(r.hom_jacobi);
  j["multiplicative"] = verdict_to_json(r.multiplicative);
  j["classical_jacobi"] = verdict_to_json(r.classical_jacobi);
  j["hom_ok"] = r.hom_ok();
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << dump_json(j);
  if (!out) throw ParseError("failed while writing " + path);
}

}  // namespace homquot
