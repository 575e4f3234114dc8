#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <set>

#include "homquot/corpus.hpp"
#include "homquot/envelope.hpp"
#include "homquot/errors.hpp"
#include "homquot/props.hpp"

using namespace homquot;

namespace {

std::string fingerprint(const std::vector<HomLieAlgebra>& batch) {
  std::string s;
  for (const HomLieAlgebra& a : batch) s += dump_json(algebra_to_json(a));
  return s;
}

bool alpha_is_scalar(const HomLieAlgebra& a) {
  const Matrix& m = a.alpha();
  Scalar lam = m.at(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& want = r == c ? lam : Scalar::zero(a.field());
      if (!(m.at(r, c) == want)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("strategy names round trip") {
  for (Strategy s :
       {Strategy::LieWithIdentityTwist, Strategy::LieWithScalarTwist,
        Strategy::LieWithCentroidTwist, Strategy::CentralDegenerate,
        Strategy::RejectionSampled})
    CHECK(strategy_from_name(strategy_name(s)) == s);
  CHECK_THROWS_AS(strategy_from_name("make-it-up"), ParseError);
}

TEST_CASE("generation is a pure function of the spec") {
  for (Strategy s :
       {Strategy::LieWithIdentityTwist, Strategy::LieWithScalarTwist,
        Strategy::LieWithCentroidTwist, Strategy::CentralDegenerate}) {
    GeneratorSpec spec{s, FieldSpec::prime(3), 4, 42, 6};
    CHECK(fingerprint(generate(spec)) == fingerprint(generate(spec)));
  }
  GeneratorSpec rej{Strategy::RejectionSampled, FieldSpec::prime(2), 3, 42, 5};
  CHECK(fingerprint(generate(rej)) == fingerprint(generate(rej)));

  GeneratorSpec q{Strategy::LieWithCentroidTwist, FieldSpec::rationals(), 4,
                  7, 4};
  CHECK(fingerprint(generate(q)) == fingerprint(generate(q)));
}

TEST_CASE("every strategy emits verified algebras") {
  std::vector<GeneratorSpec> specs = {
      {Strategy::LieWithIdentityTwist, FieldSpec::prime(2), 4, 1, 5},
      {Strategy::LieWithIdentityTwist, FieldSpec::rationals(), 3, 2, 4},
      {Strategy::LieWithScalarTwist, FieldSpec::prime(5), 3, 3, 5},
      {Strategy::LieWithScalarTwist, FieldSpec::rationals(), 4, 4, 4},
      {Strategy::LieWithCentroidTwist, FieldSpec::prime(3), 4, 5, 5},
      {Strategy::LieWithCentroidTwist, FieldSpec::rationals(), 3, 6, 4},
      {Strategy::CentralDegenerate, FieldSpec::prime(2), 2, 7, 5},
      {Strategy::CentralDegenerate, FieldSpec::prime(3), 5, 8, 6},
      {Strategy::CentralDegenerate, FieldSpec::rationals(), 4, 9, 5},
      {Strategy::RejectionSampled, FieldSpec::prime(2), 2, 10, 4},
      {Strategy::RejectionSampled, FieldSpec::prime(2), 3, 11, 6},
  };
  for (const GeneratorSpec& spec : specs) {
    std::vector<HomLieAlgebra> batch = generate(spec);
    REQUIRE(batch.size() == spec.count);
    for (const HomLieAlgebra& a : batch) {
      CHECK(a.is_verified());
      // re-verify from scratch rather than trusting the flag
      HomLieAlgebra raw = HomLieAlgebra::from_structure(
          a.field(), a.dim(), a.table(), a.alpha());
      CHECK(raw.check_axioms().hom_ok());
      CHECK(a.dim() == spec.dim);
      CHECK(a.field() == spec.field);
    }
  }
}

TEST_CASE("twist shapes match the strategy") {
  GeneratorSpec idspec{Strategy::LieWithIdentityTwist, FieldSpec::prime(3), 4,
                       13, 5};
  for (const HomLieAlgebra& a : generate(idspec)) {
    CHECK(a.alpha() == Matrix::identity(a.field(), 4));
    CHECK(a.check_axioms().classical_jacobi.is_true());
  }

  GeneratorSpec scspec{Strategy::LieWithScalarTwist, FieldSpec::prime(5), 3,
                       14, 8};
  for (const HomLieAlgebra& a : generate(scspec)) {
    CHECK(alpha_is_scalar(a));
    CHECK(a.check_axioms().classical_jacobi.is_true());
  }

  GeneratorSpec ctspec{Strategy::LieWithCentroidTwist, FieldSpec::prime(3), 4,
                       15, 8};
  bool some_nonscalar = false;
  for (const HomLieAlgebra& a : generate(ctspec)) {
    CHECK(a.check_axioms().classical_jacobi.is_true());
    if (!alpha_is_scalar(a)) some_nonscalar = true;
  }
  // the centroid of a decomposable algebra is bigger than the scalars, so a
  // run of eight draws should visit it; seed pinned to keep this stable
  CHECK(some_nonscalar);
}

TEST_CASE("central degenerate instances have full annihilator") {
  GeneratorSpec spec{Strategy::CentralDegenerate, FieldSpec::prime(3), 5, 21,
                     8};
  for (const HomLieAlgebra& a : generate(spec)) {
    CHECK(annihilator(a, a.full_subspace()).is_full());
    CHECK(is_semiprime(a, Mode::Auto, Ctx{}).is_false());
  }
}

TEST_CASE("the dim-4 degenerate stream opens with the canonical table") {
  GeneratorSpec spec{Strategy::CentralDegenerate, FieldSpec::rationals(), 4, 7,
                     2};
  std::vector<HomLieAlgebra> batch = generate(spec);
  const HomLieAlgebra& a = batch[0];

  FieldSpec f = a.field();
  // [e1,e2] = [e1,e3] = e1, [e2,e3] = e2 and the twist sends e0, e3 to e0
  CHECK(vec_cmp(a.bracket_basis(1, 2), vec_unit(f, 4, 1)) == 0);
  CHECK(vec_cmp(a.bracket_basis(1, 3), vec_unit(f, 4, 1)) == 0);
  CHECK(vec_cmp(a.bracket_basis(2, 3), vec_unit(f, 4, 2)) == 0);
  CHECK(vec_cmp(a.twist(vec_unit(f, 4, 0)), vec_unit(f, 4, 0)) == 0);
  CHECK(vec_cmp(a.twist(vec_unit(f, 4, 3)), vec_unit(f, 4, 0)) == 0);
  CHECK(a.twist(vec_unit(f, 4, 1)) == Vec(4, Scalar::zero(f)));

  AxiomReport r = a.check_axioms();
  CHECK(r.hom_ok());
  CHECK(r.classical_jacobi.is_false());
}

TEST_CASE("rejection sampling refuses anything beyond its budget") {
  CHECK_THROWS_AS(
      generate({Strategy::RejectionSampled, FieldSpec::prime(3), 3, 1, 1}),
      PreconditionFailed);
  CHECK_THROWS_AS(
      generate({Strategy::RejectionSampled, FieldSpec::prime(2), 4, 1, 1}),
      PreconditionFailed);
  CHECK_THROWS_AS(
      generate({Strategy::RejectionSampled, FieldSpec::rationals(), 2, 1, 1}),
      PreconditionFailed);

  std::vector<HomLieAlgebra> batch =
      generate({Strategy::RejectionSampled, FieldSpec::prime(2), 3, 77, 10});
  std::set<std::string> distinct;
  for (const HomLieAlgebra& a : batch)
    distinct.insert(dump_json(algebra_to_json(a)));
  CHECK(distinct.size() == 10);
}

TEST_CASE("subspace lattice enumeration") {
  Ctx ctx;
  CHECK(all_subspaces(FieldSpec::prime(2), 2, ctx).size() == 5);
  CHECK(all_subspaces(FieldSpec::prime(2), 3, ctx).size() == 16);
  CHECK(all_subspaces(FieldSpec::prime(3), 2, ctx).size() == 6);
  // 1 + 40 + 130 + 40 + 1 over GF(3)^4
  CHECK(all_subspaces(FieldSpec::prime(3), 4, ctx).size() == 212);

  Ctx tight;
  tight.max_lattice = 10;
  CHECK_THROWS_AS(all_subspaces(FieldSpec::prime(3), 4, tight),
                  EnumerationTooLarge);
  CHECK_THROWS_AS(all_subspaces(FieldSpec::rationals(), 2, ctx),
                  UnsupportedMode);
}

TEST_CASE("hom subalgebra scan") {
  Ctx ctx;
  FieldSpec f = FieldSpec::prime(3);
  std::vector<BracketEntry> entries = {
      {0, 1, {Scalar::zero(f), Scalar::zero(f), Scalar::one(f)}},
      {0, 2, {Scalar::of(f, -2), Scalar::zero(f), Scalar::zero(f)}},
      {1, 2, {Scalar::zero(f), Scalar::of(f, 2), Scalar::zero(f)}},
  };
  HomLieAlgebra sl2 =
      HomLieAlgebra::from_structure(f, 3, entries, Matrix::identity(f, 3))
          .verified();
  std::vector<Subspace> subs = hom_subalgebras(sl2, ctx);

  Subspace borel = Subspace::from_vectors(
      f, 3, {vec_unit(f, 3, 0), vec_unit(f, 3, 2)});
  Subspace ef =
      Subspace::from_vectors(f, 3, {vec_unit(f, 3, 0), vec_unit(f, 3, 1)});
  auto has = [&](const Subspace& s) {
    for (const Subspace& t : subs)
      if (t == s) return true;
    return false;
  };
  CHECK(has(sl2.zero_subspace()));
  CHECK(has(sl2.full_subspace()));
  CHECK(has(borel));
  CHECK(!has(ef));

  // abelian with identity twist: everything qualifies
  HomLieAlgebra ab =
      HomLieAlgebra::from_structure(f, 2, {}, Matrix::identity(f, 2))
          .verified();
  CHECK(hom_subalgebras(ab, ctx).size() == 6);
}

TEST_CASE("curated set carries its promised verdicts") {
  Ctx ctx;
  std::vector<CorpusInstance> set = curated();
  std::set<std::string> names;
  for (const CorpusInstance& c : set) names.insert(c.name);
  for (const char* want :
       {"ex2_5", "abelian_3", "sl2_Q", "sl2_gf5", "sl2sl2_gf5", "borel_in_sl2",
        "heisenberg_alpha0", "so3_gf2", "sl2_gf5_self"})
    CHECK(names.count(want) == 1);
  CHECK(names.size() == set.size());

  for (const CorpusInstance& c : set) {
    CAPTURE(c.name);
    CHECK(c.algebra.is_verified());
    auto it = c.expected.find("ann_dim");
    if (it != c.expected.end())
      CHECK(std::to_string(annihilator(c.algebra, c.algebra.full_subspace()).dim()) ==
            it->second);
    auto check_pred = [&](const char* key, auto&& fn) {
      auto e = c.expected.find(key);
      if (e == c.expected.end()) return;
      Verdict v = fn();
      REQUIRE(!v.is_unknown());
      CHECK((v.is_true() ? "true" : "false") == e->second);
    };
    check_pred("nondegenerate",
               [&] { return is_nondegenerate(c.algebra, Mode::Auto, ctx); });
    check_pred("semiprime",
               [&] { return is_semiprime(c.algebra, Mode::Auto, ctx); });
    check_pred("prime", [&] { return is_prime(c.algebra, Mode::Auto, ctx); });
    if (c.expected.count("hom_ok"))
      CHECK((c.algebra.check_axioms().hom_ok() ? "true" : "false") ==
            c.expected.at("hom_ok"));
    if (c.expected.count("classical_jacobi"))
      CHECK((c.algebra.check_axioms().classical_jacobi.is_true() ? "true"
                                                                 : "false") ==
            c.expected.at("classical_jacobi"));
    if (c.extension) {
      check_pred("weak_quotient", [&] {
        return is_weak_quotient_algebra(*c.extension, Mode::Auto, ctx);
      });
      check_pred("quotient", [&] {
        return is_quotient_algebra(*c.extension, Mode::Auto, ctx);
      });
      check_pred("ideally_absorbed", [&] {
        return is_ideally_absorbed(*c.extension, Mode::Auto, ctx);
      });
      check_pred("dense", [&] {
        return hom_annihilator_dense(*c.extension).second;
      });
    }
  }
}

TEST_CASE("extension battery is large, small-field, and deterministic") {
  std::vector<CorpusInstance> bat = extension_battery();
  CHECK(bat.size() >= 200);

  std::set<std::string> names;
  for (const CorpusInstance& c : bat) {
    CAPTURE(c.name);
    CHECK(names.insert(c.name).second);
    REQUIRE(c.extension.has_value());
    CHECK(c.algebra.dim() <= 4);
    CHECK(c.algebra.field().is_prime_field());
    CHECK(c.algebra.field().p() <= 3);
    CHECK(c.extension->sub_dim() >= 1);
    if (c.strategy == std::string("central-degenerate"))
      CHECK(c.expected.at("negative_control") == "true");
  }

  std::vector<CorpusInstance> again = extension_battery();
  REQUIRE(again.size() == bat.size());
  for (std::size_t i = 0; i < bat.size(); ++i) {
    CHECK(again[i].name == bat[i].name);
    CHECK(dump_json(algebra_to_json(again[i].algebra)) ==
          dump_json(algebra_to_json(bat[i].algebra)));
    CHECK(dump_json(extension_to_json(*again[i].extension)) ==
          dump_json(extension_to_json(*bat[i].extension)));
  }
}

TEST_CASE("corpus directory round trip") {
  namespace fs = std::filesystem;
  std::string dir = "test_corpus_tmp";
  fs::remove_all(dir);
  std::vector<CorpusInstance> set = curated();
  write_corpus(dir, set);

  CHECK(fs::exists(dir + "/manifest.json"));
  CHECK(fs::exists(dir + "/sl2_gf5.alg.json"));
  CHECK(fs::exists(dir + "/borel_in_sl2.ext.json"));
  CHECK(!fs::exists(dir + "/sl2_gf5.ext.json"));

  std::vector<CorpusInstance> back = load_corpus(dir);
  REQUIRE(back.size() == set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    CHECK(back[i].name == set[i].name);
    CHECK(back[i].strategy == set[i].strategy);
    CHECK(back[i].expected == set[i].expected);
    CHECK(dump_json(algebra_to_json(back[i].algebra)) ==
          dump_json(algebra_to_json(set[i].algebra)));
    CHECK(back[i].extension.has_value() == set[i].extension.has_value());
    if (back[i].extension)
      CHECK(back[i].extension->sub_space == set[i].extension->sub_space);
  }

  // writing the same set again leaves every byte unchanged
  auto slurp = [&](const std::string& p) {
    return dump_json(load_json_file(p));
  };
  std::string before = slurp(dir + "/manifest.json");
  write_corpus(dir, set);
  CHECK(slurp(dir + "/manifest.json") == before);

  fs::remove(dir + "/sl2_gf5.alg.json");
  CHECK_THROWS_AS(load_corpus(dir), ParseError);
  fs::remove_all(dir);
}

TEST_CASE("census over GF(2) squares with hand counts") {
  Ctx ctx;
  CensusReport r = rejection_census(FieldSpec::prime(2), 2, ctx);
  CHECK(r.tables_scanned == 64);
  // the zero bracket passes with any twist
  CHECK(r.hom_lie >= 16);
  CHECK(r.classical_lie <= r.hom_lie);
  CHECK(r.ann_zero <= r.hom_lie);
  CHECK(r.ann_zero_outside <= r.ann_zero);

  CHECK_THROWS_AS(rejection_census(FieldSpec::prime(2), 4, ctx),
                  PreconditionFailed);
  CHECK_THROWS_AS(rejection_census(FieldSpec::prime(5), 2, ctx),
                  PreconditionFailed);
}

TEST_CASE("census over GF(2)^3 settles the construction-coverage question") {
  Ctx ctx;
  CensusReport r = rejection_census(FieldSpec::prime(2), 3, ctx);
  CHECK(r.tables_scanned == 262144);
  CHECK(r.hom_lie > 0);

  std::string summary =
      "dim 3 census: " + std::to_string(r.hom_lie) + " hom-lie, " +
      std::to_string(r.classical_lie) + " lie, " + std::to_string(r.ann_zero) +
      " with zero annihilator, " + std::to_string(r.centroid_twisted_lie) +
      " centroid-twisted lie, " + std::to_string(r.ann_zero_outside) +
      " annihilator-free outside the construction";
  MESSAGE(summary);

  if (r.ann_zero_outside > 0) {
    REQUIRE(r.outside_witness.has_value());
    HomLieAlgebra w = algebra_from_json(*r.outside_witness);
    CHECK(w.check_axioms().hom_ok());
    CHECK(annihilator(w, w.full_subspace()).dim() == 0);
  } else {
    CHECK(!r.outside_witness.has_value());
  }
}
