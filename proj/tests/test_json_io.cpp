#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "homquot/errors.hpp"
#include "homquot/json_io.hpp"

using namespace homquot;

namespace {

Vec fvec(const FieldSpec& f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar::of(f, x));
  return v;
}

HomLieAlgebra sl2(const FieldSpec& f) {
  std::vector<BracketEntry> entries = {
      {0, 1, fvec(f, {0, 0, 1})},
      {0, 2, fvec(f, {-2, 0, 0})},
      {1, 2, fvec(f, {0, 2, 0})},
  };
  return HomLieAlgebra::from_structure(f, 3, entries, Matrix::identity(f, 3))
      .verified();
}

Matrix mat_unit(const FieldSpec& f, std::size_t n, std::size_t r,
                std::size_t c) {
  Matrix m(f, n, n);
  m.set(r, c, Scalar::one(f));
  return m;
}

}  // namespace

TEST_CASE("field round trip") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2),
                      FieldSpec::prime(97)}) {
    CHECK(field_from_json(field_to_json(f)) == f);
  }
  CHECK_THROWS_AS(field_from_json(Json{{"kind", "real"}}), ParseError);
  CHECK_THROWS_AS(field_from_json(Json::array()), ParseError);
}

TEST_CASE("scalars travel as exact strings") {
  FieldSpec q = FieldSpec::rationals();
  Vec v = {Scalar::of(q, 3, 4), Scalar::of(q, -2), Scalar::zero(q)};
  Json j = vec_to_json(v);
  CHECK(j[0] == "3/4");
  CHECK(j[1] == "-2");
  CHECK(j[2] == "0");
  CHECK(vec_cmp(vec_from_json(q, j), v) == 0);

  FieldSpec f5 = FieldSpec::prime(5);
  Vec w = {Scalar::of(f5, -1), Scalar::of(f5, 7)};
  Json jw = vec_to_json(w);
  CHECK(jw[0] == "4");
  CHECK(jw[1] == "2");
  CHECK(vec_cmp(vec_from_json(f5, jw), w) == 0);
}

TEST_CASE("matrix and subspace round trips") {
  FieldSpec f = FieldSpec::prime(3);
  Matrix m = mat_unit(f, 2, 0, 1) + mat_unit(f, 2, 1, 0).scaled(Scalar::of(f, 2));
  CHECK(matrix_from_json(f, matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(f, Json::parse(R"([["1","0"],["1"]])")),
                  ParseError);

  Subspace s = Subspace::from_vectors(
      f, 3, {fvec(f, {1, 2, 0}), fvec(f, {0, 0, 1})});
  CHECK(subspace_from_json(f, 3, subspace_to_json(s)) == s);
  // dependent rows are rejected rather than silently collapsed
  CHECK_THROWS_AS(
      subspace_from_json(f, 3,
                         Json::parse(R"([["1","0","0"],["2","0","0"]])")),
      ParseError);
}

TEST_CASE("algebra serialization is canonical and bit-stable") {
  FieldSpec f = FieldSpec::rationals();
  HomLieAlgebra L = sl2(f);
  Json j = algebra_to_json(L);

  // only the nonzero upper pairs are listed
  CHECK(j["bracket"].size() == 3);
  CHECK(j["bracket"][0]["i"] == 0);
  CHECK(j["bracket"][0]["j"] == 1);

  HomLieAlgebra back = algebra_from_json(j);
  CHECK(back.is_verified());
  CHECK(dump_json(algebra_to_json(back)) == dump_json(j));

  // keys arrive sorted regardless of insertion order
  std::string text = dump_json(j);
  CHECK(text.find("\"alpha\"") < text.find("\"bracket\""));
  CHECK(text.find("\"bracket\"") < text.find("\"dim\""));
  CHECK(text.find("\"dim\"") < text.find("\"field\""));
}

TEST_CASE("non-algebras are rejected unless verification is waived") {
  FieldSpec f = FieldSpec::rationals();
  // alternating bracket whose twist is not multiplicative
  Json j;
  j["field"] = field_to_json(f);
  j["dim"] = 2;
  j["bracket"] = Json::array({Json{{"i", 0}, {"j", 1}, {"value", Json::array({"1", "0"})}}});
  Json alpha = Json::array({Json::array({"0", "1"}), Json::array({"1", "0"})});
  j["alpha"] = alpha;

  CHECK_THROWS_AS(algebra_from_json(j), PreconditionFailed);
  HomLieAlgebra raw = algebra_from_json(j, false);
  CHECK(!raw.is_verified());
  AxiomReport r = raw.check_axioms();
  CHECK(r.alternating.is_true());
  CHECK(!r.hom_ok());

  Json rep = axiom_report_to_json(r);
  CHECK(rep["hom_ok"] == false);
  CHECK(rep["multiplicative"]["value"] == "false");
}

TEST_CASE("malformed algebra documents raise parse errors") {
  FieldSpec f = FieldSpec::prime(5);
  Json good = algebra_to_json(sl2(f));

  Json no_dim = good;
  no_dim.erase("dim");
  CHECK_THROWS_AS(algebra_from_json(no_dim), ParseError);

  Json bad_pair = good;
  bad_pair["bracket"][0]["i"] = 2;  // i >= j
  CHECK_THROWS_AS(algebra_from_json(bad_pair), ParseError);

  Json bad_alpha = good;
  bad_alpha["alpha"] = Json::array({Json::array({"1", "0"})});
  CHECK_THROWS_AS(algebra_from_json(bad_alpha), ParseError);

  Json float_scalar = good;
  float_scalar["bracket"][0]["value"][2] = 1.0;
  CHECK_THROWS_AS(algebra_from_json(float_scalar), ParseError);
}

TEST_CASE("extension round trip") {
  FieldSpec f = FieldSpec::prime(5);
  HomLieAlgebra q = sl2(f);
  Extension e = make_extension(
      q, Matrix::from_rows(f, {vec_unit(f, 3, 0), vec_unit(f, 3, 2)}, 3));
  Json j = extension_to_json(e);
  Extension back = extension_from_json(j);
  CHECK(back.sub_space == e.sub_space);
  CHECK(dump_json(extension_to_json(back)) == dump_json(j));

  Json bad = j;
  // span{e,f} is not closed: [e,f] = h escapes
  bad["subalgebra_basis"][1] = Json::array({"0", "1", "0"});
  CHECK_THROWS_AS(extension_from_json(bad), NotASubalgebra);
}

TEST_CASE("operator algebra round trip validates closure") {
  FieldSpec f = FieldSpec::prime(3);
  OperatorAlgebra a = operator_closure(
      f, 2, {mat_unit(f, 2, 0, 1), mat_unit(f, 2, 1, 0)}, false);
  Json j = operator_algebra_to_json(a);
  OperatorAlgebra back = operator_algebra_from_json(j);
  CHECK(back == a);
  CHECK(back.generators == a.generators);
  CHECK(dump_json(operator_algebra_to_json(back)) == dump_json(j));

  Json open_basis = j;
  open_basis["basis"] = Json::array({matrix_to_json(mat_unit(f, 2, 0, 1)),
                                     matrix_to_json(mat_unit(f, 2, 1, 0))});
  CHECK_THROWS_AS(operator_algebra_from_json(open_basis), ParseError);
}

TEST_CASE("verdict serialization carries the witness") {
  FieldSpec f = FieldSpec::prime(3);
  Witness w;
  w.kind = "sandwich-zero";
  w.vectors["mu"] = fvec(f, {0, 1, 0, 0});
  w.subspaces.emplace("radical",
                      Subspace::from_vectors(f, 4, {fvec(f, {0, 1, 0, 0})}));
  Verdict v = Verdict::no(Method::Exhaustive, w, "nilpotent line");
  Json j = verdict_to_json(v);
  CHECK(j["value"] == "false");
  CHECK(j["method"] == "exhaustive");
  CHECK(j["note"] == "nilpotent line");
  CHECK(j["witness"]["kind"] == "sandwich-zero");
  CHECK(j["witness"]["vectors"]["mu"][1] == "1");
  CHECK(j["witness"]["subspaces"]["radical"].size() == 1);

  Json ju = verdict_to_json(Verdict::unknown(Method::WitnessSet, "cap"));
  CHECK(ju["value"] == "unknown");
  CHECK(!ju.contains("witness"));
}

TEST_CASE("maximal quotient serialization extends the algebra document") {
  FieldSpec f = FieldSpec::prime(5);
  Ctx ctx;
  MaxQuotients m = build_maximal_quotients(sl2(f), ctx);
  Json j = maxq_to_json(m);
  CHECK(j.contains("bracket"));
  CHECK(j.contains("phi"));
  CHECK(j.contains("i_min_basis"));
  HomLieAlgebra carrier = algebra_from_json(j);
  CHECK(carrier.dim() == m.carrier.dim());
  CHECK(matrix_from_json(f, j["phi"]) == m.phi);
}

TEST_CASE("file round trip") {
  FieldSpec f = FieldSpec::prime(2);
  Json j = algebra_to_json(sl2(FieldSpec::rationals()));
  std::string path = "test_json_io_tmp.json";
  write_json_file(path, j);
  Json back = load_json_file(path);
  CHECK(back == j);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_file("does_not_exist.json"), ParseError);
  write_json_file(path, Json::array());
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_json_file(path), ParseError);
  std::remove(path.c_str());
}
