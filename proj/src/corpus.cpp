#include "homquot/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "homquot/errors.hpp"

namespace homquot {

namespace {

std::uint64_t sample(std::mt19937_64& rng, std::uint64_t m) {
  // raw modulo keeps the stream identical across standard libraries, which
  // std::uniform_int_distribution does not promise
  return m == 0 ? 0 : rng() % m;
}

Scalar sample_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_prime_field()) return Scalar::of(f, static_cast<long>(sample(rng, f.p())));
  return Scalar::of(f, static_cast<long>(sample(rng, 7)) - 3);
}

Vec sample_vec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(sample_scalar(f, rng));
  return v;
}

Matrix sample_invertible(const FieldSpec& f, std::size_t n,
                         std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, sample_scalar(f, rng));
    if (rank(m) == n) return m;
  }
  throw CapExceeded("could not sample an invertible basis change");
}

Matrix inverse(const Matrix& p) {
  std::size_t n = p.rows();
  Matrix inv(p.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = linear_solve(p, vec_unit(p.field(), n, j));
    if (!x) throw PreconditionFailed("matrix is not invertible");
    for (std::size_t i = 0; i < n; ++i) inv.set(i, j, (*x)[i]);
  }
  return inv;
}

// ---- base Lie algebras (alpha = id), padded with abelian directions ----

using Entries = std::vector<BracketEntry>;

HomLieAlgebra lie(const FieldSpec& f, std::size_t n, const Entries& entries) {
  return HomLieAlgebra::from_structure(f, n, entries, Matrix::identity(f, n))
      .verified();
}

HomLieAlgebra abelian(const FieldSpec& f, std::size_t n) {
  return lie(f, n, {});
}

// [e0, ei] = ei: the Lie algebra of the line's affine scalings, any dim >= 2
HomLieAlgebra almost_abelian(const FieldSpec& f, std::size_t n) {
  Entries e;
  for (std::size_t i = 1; i < n; ++i)
    e.push_back({0, i, vec_unit(f, n, i)});
  return lie(f, n, e);
}

// [x_i, y_i] = z on the first 2k+1 coordinates
HomLieAlgebra heisenberg_padded(const FieldSpec& f, std::size_t n) {
  std::size_t k = (n - 1) / 2;
  Entries e;
  for (std::size_t i = 0; i < k; ++i)
    e.push_back({2 * i, 2 * i + 1, vec_unit(f, n, 2 * k)});
  return lie(f, n, e);
}

Entries sl2_block(const FieldSpec& f, std::size_t n, std::size_t off) {
  Vec h = vec_unit(f, n, off + 2);
  Vec me2 = vec_scale(Scalar::of(f, -2), vec_unit(f, n, off));
  Vec f2 = vec_scale(Scalar::of(f, 2), vec_unit(f, n, off + 1));
  return {{off, off + 1, h}, {off, off + 2, me2}, {off + 1, off + 2, f2}};
}

HomLieAlgebra sl2_padded(const FieldSpec& f, std::size_t n) {
  return lie(f, n, sl2_block(f, n, 0));
}

HomLieAlgebra sl2sl2_padded(const FieldSpec& f, std::size_t n) {
  Entries e = sl2_block(f, n, 0);
  Entries e2 = sl2_block(f, n, 3);
  e.insert(e.end(), e2.begin(), e2.end());
  return lie(f, n, e);
}

std::vector<HomLieAlgebra> base_pool(const FieldSpec& f, std::size_t n) {
  std::vector<HomLieAlgebra> pool;
  pool.push_back(abelian(f, n));
  if (n >= 2) pool.push_back(almost_abelian(f, n));
  if (n >= 3) {
    pool.push_back(heisenberg_padded(f, n));
    pool.push_back(sl2_padded(f, n));
  }
  if (n >= 6) pool.push_back(sl2sl2_padded(f, n));
  return pool;
}

HomLieAlgebra change_basis(const HomLieAlgebra& L, const Matrix& p,
                           const Matrix& pinv, const Matrix& alpha) {
  const FieldSpec& f = L.field();
  std::size_t n = L.dim();
  Entries entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = p.apply(L.bracket(pinv.col(i), pinv.col(j)));
      if (std::any_of(v.begin(), v.end(),
                      [](const Scalar& s) { return !s.is_zero(); }))
        entries.push_back({i, j, v});
    }
  return HomLieAlgebra::from_structure(f, n, entries, alpha);
}

/// Solutions of g([x, y]) = [g(x), y] as flat n x n matrices.  The mirror
/// identity [x, g(y)] = g([x, y]) follows from antisymmetry, so one side
/// pins down the whole multiplicativity requirement.
Subspace centroid_space(const HomLieAlgebra& L) {
  const FieldSpec& f = L.field();
  std::size_t n = L.dim();
  std::vector<Vec> rows;
  // all ordered pairs: the identity is bilinear, so holding on every basis
  // pair is exactly holding on L x L, and i <= j alone is strictly weaker
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec cij = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n * n, Scalar::zero(f));
        for (std::size_t m = 0; m < n; ++m) {
          row[k * n + m] = row[k * n + m] + cij[m];
          row[m * n + i] = row[m * n + i] - L.c(m, j, k);
        }
        rows.push_back(std::move(row));
      }
    }
  if (rows.empty()) return Subspace::full(f, n * n);
  return kernel(Matrix::from_rows(f, rows, n * n));
}

Matrix centroid_lattice_point(const HomLieAlgebra& L, std::mt19937_64& rng) {
  Subspace c = centroid_space(L);
  const FieldSpec& f = L.field();
  std::size_t n = L.dim();
  Vec flat(n * n, Scalar::zero(f));
  for (std::size_t r = 0; r < c.dim(); ++r)
    flat = vec_add(flat, vec_scale(sample_scalar(f, rng), c.basis_row(r)));
  return Matrix::from_flat(f, n, n, flat);
}

HomLieAlgebra ex25(const FieldSpec& f) {
  Entries e = {{1, 2, vec_unit(f, 4, 1)},
               {1, 3, vec_unit(f, 4, 1)},
               {2, 3, vec_unit(f, 4, 2)}};
  Matrix alpha(f, 4, 4);
  alpha.set(0, 0, Scalar::one(f));
  alpha.set(0, 3, Scalar::one(f));
  return HomLieAlgebra::from_structure(f, 4, e, alpha).verified();
}

HomLieAlgebra central_degenerate(const FieldSpec& f, std::size_t n,
                                 std::mt19937_64& rng) {
  if (n < 2) return HomLieAlgebra::from_structure(f, n, {}, Matrix(f, n, n)).verified();
  // indices split three ways: Z feeds the twist image and never appears in
  // a bracket, A = [nz, n) carries the bracket, V in front of A receives the
  // values and is killed by the twist; together those force
  // [alpha(L), L] = 0 and alpha([L, L]) = 0, so every Hom axiom is vacuous
  std::size_t nz = sample(rng, n - 1);
  std::size_t na = n - nz;
  std::size_t nv = 1 + sample(rng, na);
  Entries entries;
  for (std::size_t i = nz; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(n, Scalar::zero(f));
      bool nonzero = false;
      for (std::size_t t = 0; t < nv; ++t) {
        Scalar s = sample_scalar(f, rng);
        if (!s.is_zero()) nonzero = true;
        v[nz + t] = s;
      }
      if (nonzero) entries.push_back({i, j, v});
    }
  Matrix alpha(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= nz && i < nz + nv) continue;  // twist kills the value block
    for (std::size_t z = 0; z < nz; ++z) alpha.set(z, i, sample_scalar(f, rng));
  }
  return HomLieAlgebra::from_structure(f, n, entries, alpha);
}

HomLieAlgebra rejection_candidate(const FieldSpec& f, std::size_t n,
                                  std::mt19937_64& rng) {
  Entries entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = sample_vec(f, n, rng);
      if (std::any_of(v.begin(), v.end(),
                      [](const Scalar& s) { return !s.is_zero(); }))
        entries.push_back({i, j, v});
    }
  Matrix alpha(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) alpha.set(r, c, sample_scalar(f, rng));
  return HomLieAlgebra::from_structure(f, n, entries, alpha);
}

}  // namespace

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::LieWithIdentityTwist: return "lie-identity-twist";
    case Strategy::LieWithScalarTwist: return "lie-scalar-twist";
    case Strategy::LieWithCentroidTwist: return "lie-centroid-twist";
    case Strategy::CentralDegenerate: return "central-degenerate";
    case Strategy::RejectionSampled: return "rejection-sampled";
  }
  throw Error("unreachable strategy");
}

Strategy strategy_from_name(const std::string& name) {
  for (Strategy s :
       {Strategy::LieWithIdentityTwist, Strategy::LieWithScalarTwist,
        Strategy::LieWithCentroidTwist, Strategy::CentralDegenerate,
        Strategy::RejectionSampled})
    if (name == strategy_name(s)) return s;
  throw ParseError("unknown strategy \"" + name + "\"");
}

std::vector<HomLieAlgebra> generate(const GeneratorSpec& spec) {
  const FieldSpec& f = spec.field;
  std::size_t n = spec.dim;
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<HomLieAlgebra> out;
  out.reserve(spec.count);

  if (spec.strategy == Strategy::RejectionSampled) {
    if (!f.is_prime_field() || f.p() != 2 || n > 3)
      throw PreconditionFailed(
          "rejection sampling is only budgeted for dim <= 3 over GF(2)");
    std::set<std::string> seen;
    std::uint64_t budget = 20000 * static_cast<std::uint64_t>(spec.count) + 20000;
    while (out.size() < spec.count) {
      if (budget-- == 0) throw CapExceeded("rejection budget exhausted");
      HomLieAlgebra cand = rejection_candidate(f, n, rng);
      if (!cand.check_axioms().hom_ok()) continue;
      HomLieAlgebra v = cand.verified();
      if (seen.insert(dump_json(algebra_to_json(v))).second)
        out.push_back(std::move(v));
    }
    return out;
  }

  if (spec.strategy == Strategy::CentralDegenerate) {
    for (std::size_t i = 0; i < spec.count; ++i) {
      // the four-dimensional stream always opens with the canonical
      // degenerate table so it is present in every such corpus
      if (i == 0 && n == 4) {
        out.push_back(ex25(f));
        continue;
      }
      out.push_back(central_degenerate(f, n, rng).verified());
    }
    return out;
  }

  std::vector<HomLieAlgebra> pool = base_pool(f, n);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const HomLieAlgebra& base = pool[sample(rng, pool.size())];
    Matrix p = sample_invertible(f, n, rng);
    Matrix pinv = inverse(p);
    HomLieAlgebra conj =
        change_basis(base, p, pinv, Matrix::identity(f, n)).verified();
    switch (spec.strategy) {
      case Strategy::LieWithIdentityTwist:
        out.push_back(std::move(conj));
        break;
      case Strategy::LieWithScalarTwist: {
        Scalar lam = sample_scalar(f, rng);
        Matrix alpha = Matrix::identity(f, n).scaled(lam);
        out.push_back(change_basis(base, p, pinv, alpha).verified());
        break;
      }
      case Strategy::LieWithCentroidTwist: {
        Matrix alpha = centroid_lattice_point(conj, rng);
        out.push_back(
            HomLieAlgebra::from_structure(f, n, conj.table(), alpha).verified());
        break;
      }
      default:
        throw Error("unreachable strategy");
    }
  }
  return out;
}

std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t n,
                                    const Ctx& ctx) {
  if (!f.is_prime_field())
    throw UnsupportedMode("subspace lattice enumeration needs a finite field");
  std::vector<Vec> pts = enumerate_projective(f, n, ctx);
  struct Less {
    bool operator()(const Subspace& a, const Subspace& b) const {
      return subspace_cmp(a, b) < 0;
    }
  };
  std::set<Subspace, Less> seen;
  std::vector<Subspace> frontier = {Subspace::zero(f, n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& s : frontier)
      for (const Vec& v : pts) {
        if (s.member(v)) continue;
        Subspace t = s.sum(Subspace::from_vectors(f, n, {v}));
        if (seen.insert(t).second) {
          if (seen.size() > ctx.max_lattice)
            throw EnumerationTooLarge("subspace lattice exceeds max_lattice");
          next.push_back(std::move(t));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Subspace> hom_subalgebras(const HomLieAlgebra& L, const Ctx& ctx) {
  std::vector<Subspace> out;
  for (Subspace& s : all_subspaces(L.field(), L.dim(), ctx))
    if (is_hom_subalgebra(L, s).is_true()) out.push_back(std::move(s));
  return out;
}

namespace {

CorpusInstance named_algebra(std::string name, HomLieAlgebra a,
                             std::map<std::string, std::string> expected) {
  return {std::move(name), "curated", 0, std::move(a), std::nullopt,
          std::move(expected)};
}

CorpusInstance named_extension(std::string name, Extension e,
                               std::map<std::string, std::string> expected) {
  HomLieAlgebra ambient = e.ambient;
  return {std::move(name), "curated", 0, std::move(ambient), std::move(e),
          std::move(expected)};
}

Extension sub_extension(const HomLieAlgebra& q,
                        std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (std::size_t i : idx) rows.push_back(vec_unit(q.field(), q.dim(), i));
  return make_extension(q, Matrix::from_rows(q.field(), rows, q.dim()));
}

}  // namespace

std::vector<CorpusInstance> curated() {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec f5 = FieldSpec::prime(5);
  std::vector<CorpusInstance> out;

  out.push_back(named_algebra("ex2_5", ex25(q),
                              {{"hom_ok", "true"},
                               {"classical_jacobi", "false"},
                               {"nondegenerate", "false"},
                               {"semiprime", "false"},
                               {"prime", "false"},
                               {"ann_dim", "4"},
                               {"negative_control", "true"}}));
  out.push_back(named_algebra("abelian_3", abelian(q, 3),
                              {{"hom_ok", "true"},
                               {"classical_jacobi", "true"},
                               {"nondegenerate", "false"},
                               {"semiprime", "false"},
                               {"prime", "false"},
                               {"ann_dim", "3"},
                               {"negative_control", "true"}}));
  // scan predicates stay off here: over Q they report Unknown by contract,
  // and the GF(5) twin below carries the exhaustive verdicts
  out.push_back(named_algebra("sl2_Q", sl2_padded(q, 3),
                              {{"hom_ok", "true"},
                               {"classical_jacobi", "true"},
                               {"ann_dim", "0"}}));
  out.push_back(named_algebra("sl2_gf5", sl2_padded(f5, 3),
                              {{"nondegenerate", "true"},
                               {"semiprime", "true"},
                               {"prime", "true"},
                               {"ann_dim", "0"}}));
  out.push_back(named_algebra("sl2sl2_gf5", sl2sl2_padded(f5, 6),
                              {{"nondegenerate", "true"},
                               {"semiprime", "true"},
                               {"prime", "false"},
                               {"ann_dim", "0"}}));
  out.push_back(named_algebra("so3_gf2",
                              lie(f2, 3,
                                  {{0, 1, vec_unit(f2, 3, 2)},
                                   {0, 2, vec_unit(f2, 3, 1)},
                                   {1, 2, vec_unit(f2, 3, 0)}}),
                              {{"semiprime", "true"}, {"ann_dim", "0"}}));

  HomLieAlgebra sl2f5 = sl2_padded(f5, 3);
  // weak holds: [e, alpha(q)] lands in the Borel for every nonzero q, while
  // f starves the full quotient property; the pair separates the two notions
  out.push_back(named_extension("borel_in_sl2", sub_extension(sl2f5, {0, 2}),
                                {{"weak_quotient", "true"},
                                 {"quotient", "false"},
                                 {"ideally_absorbed", "false"}}));
  out.push_back(named_extension("sl2_gf5_self", sub_extension(sl2f5, {0, 1, 2}),
                                {{"weak_quotient", "true"},
                                 {"quotient", "true"},
                                 {"ideally_absorbed", "true"}}));

  HomLieAlgebra heis =
      HomLieAlgebra::from_structure(f3, 3, {{0, 1, vec_unit(f3, 3, 2)}},
                                    Matrix(f3, 3, 3))
          .verified();
  out.push_back(named_extension("heisenberg_alpha0",
                                sub_extension(heis, {0, 2}),
                                {{"dense", "true"},
                                 {"ann_dim", "3"},
                                 {"negative_control", "true"}}));
  return out;
}

std::vector<CorpusInstance> extension_battery() {
  Ctx ctx;
  struct Src {
    Strategy st;
    std::uint32_t p;
    std::size_t dim;
    std::uint64_t seed;
    std::size_t count;
  };
  const std::vector<Src> srcs = {
      {Strategy::LieWithIdentityTwist, 2, 3, 101, 3},
      {Strategy::LieWithIdentityTwist, 2, 4, 102, 3},
      {Strategy::LieWithIdentityTwist, 3, 3, 103, 3},
      {Strategy::LieWithIdentityTwist, 3, 4, 104, 3},
      {Strategy::LieWithScalarTwist, 2, 3, 201, 3},
      {Strategy::LieWithScalarTwist, 3, 3, 202, 3},
      {Strategy::LieWithScalarTwist, 3, 4, 203, 3},
      {Strategy::LieWithCentroidTwist, 2, 4, 301, 3},
      {Strategy::LieWithCentroidTwist, 3, 3, 302, 3},
      {Strategy::LieWithCentroidTwist, 3, 4, 303, 3},
      {Strategy::CentralDegenerate, 2, 4, 401, 3},
      {Strategy::CentralDegenerate, 3, 3, 402, 3},
      {Strategy::CentralDegenerate, 3, 4, 403, 3},
      {Strategy::RejectionSampled, 2, 3, 501, 4},
  };
  const char* tags[] = {"idt", "sct", "cct", "cdg", "rej"};
  std::vector<CorpusInstance> out;
  for (const Src& src : srcs) {
    GeneratorSpec spec{src.st, FieldSpec::prime(src.p), src.dim, src.seed,
                       src.count};
    std::vector<HomLieAlgebra> algebras = generate(spec);
    for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
      const HomLieAlgebra& q = algebras[ai];
      std::vector<Subspace> subs;
      for (Subspace& s : hom_subalgebras(q, ctx))
        if (s.dim() > 0) subs.push_back(std::move(s));
      std::size_t keep = subs.size() < 8 ? subs.size() : 8;
      std::size_t stride = keep == 0 ? 1 : (subs.size() + keep - 1) / keep;
      std::size_t wi = 0;
      for (std::size_t si = 0; si < subs.size(); si += stride, ++wi) {
        std::string name = "bat_" +
                           std::string(tags[static_cast<int>(src.st)]) + "_p" +
                           std::to_string(src.p) + "d" +
                           std::to_string(src.dim) + "_s" +
                           std::to_string(src.seed) + "_" +
                           std::to_string(ai) + "_w" + std::to_string(wi);
        std::map<std::string, std::string> expected;
        if (src.st == Strategy::CentralDegenerate)
          expected["negative_control"] = "true";
        out.push_back({std::move(name), strategy_name(src.st), src.seed, q,
                       make_extension(q, subs[si].basis()), std::move(expected)});
      }
    }
  }
  return out;
}

std::vector<CorpusInstance> shipped_corpus() {
  std::vector<CorpusInstance> out = curated();
  for (CorpusInstance& c : extension_battery()) out.push_back(std::move(c));
  return out;
}

CensusReport rejection_census(const FieldSpec& f, std::size_t dim,
                              const Ctx& ctx) {
  if (!f.is_prime_field() || f.p() != 2 || dim > 3)
    throw PreconditionFailed("the census is only budgeted for dim <= 3 over GF(2)");
  std::size_t pairs = dim * (dim - 1) / 2;
  std::size_t bracket_bits = pairs * dim;
  std::size_t alpha_bits = dim * dim;
  std::uint64_t total = 1ull << (bracket_bits + alpha_bits);
  if (total > ctx.max_enum)
    throw EnumerationTooLarge("census exceeds max_enum");

  CensusReport rep;
  Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t bits = code;
    Entries entries;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        Vec v(dim, zero);
        bool nonzero = false;
        for (std::size_t k = 0; k < dim; ++k) {
          if (bits & 1) {
            v[k] = one;
            nonzero = true;
          }
          bits >>= 1;
        }
        if (nonzero) entries.push_back({i, j, std::move(v)});
      }
    Matrix alpha(f, dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        if (bits & 1) alpha.set(r, c, one);
        bits >>= 1;
      }
    HomLieAlgebra cand = HomLieAlgebra::from_structure(f, dim, entries, alpha);
    ++rep.tables_scanned;
    AxiomReport ax = cand.check_axioms();
    if (!ax.hom_ok()) continue;
    ++rep.hom_lie;
    bool is_lie = ax.classical_jacobi.is_true();
    if (is_lie) ++rep.classical_lie;
    HomLieAlgebra ok = cand.verified();
    bool ann0 = annihilator(ok, ok.full_subspace()).dim() == 0;
    if (ann0) ++rep.ann_zero;
    bool centroid_lie = false;
    if (is_lie) {
      // twist inside the centroid of an honest Lie bracket: exactly the
      // instances the construction strategies can reach
      Subspace c = centroid_space(ok);
      centroid_lie = c.member(alpha.flat());
    }
    if (centroid_lie) ++rep.centroid_twisted_lie;
    if (ann0 && !centroid_lie) {
      ++rep.ann_zero_outside;
      if (!rep.outside_witness) rep.outside_witness = algebra_to_json(ok);
    }
  }
  return rep;
}

Json manifest_json(const std::vector<CorpusInstance>& instances) {
  Json list = Json::array();
  for (const CorpusInstance& c : instances) {
    Json e;
    e["name"] = c.name;
    e["strategy"] = c.strategy;
    e["seed"] = c.seed;
    e["field"] = field_to_json(c.algebra.field());
    e["dim"] = c.algebra.dim();
    Json files;
    files["alg"] = c.name + ".alg.json";
    if (c.extension) files["ext"] = c.name + ".ext.json";
    e["files"] = files;
    Json exp = Json::object();
    for (const auto& [k, v] : c.expected) exp[k] = v;
    e["expected"] = exp;
    list.push_back(e);
  }
  Json m;
  m["instances"] = list;
  return m;
}

void write_corpus(const std::string& dir,
                  const std::vector<CorpusInstance>& instances) {
  std::filesystem::create_directories(dir);
  for (const CorpusInstance& c : instances) {
    write_json_file(dir + "/" + c.name + ".alg.json",
                    algebra_to_json(c.algebra));
    if (c.extension)
      write_json_file(dir + "/" + c.name + ".ext.json",
                      extension_to_json(*c.extension));
  }
  write_json_file(dir + "/manifest.json", manifest_json(instances));
}

std::vector<CorpusInstance> load_corpus(const std::string& dir) {
  Json m = load_json_file(dir + "/manifest.json");
  if (!m.is_object() || !m.contains("instances") || !m["instances"].is_array())
    throw ParseError("manifest: expected an object with \"instances\"");
  std::vector<CorpusInstance> out;
  for (const Json& e : m["instances"]) {
    if (!e.is_object() || !e.contains("name") || !e.contains("files"))
      throw ParseError("manifest entry: missing name/files");
    std::string name = e["name"].get<std::string>();
    const Json& files = e["files"];
    HomLieAlgebra a =
        algebra_from_json(load_json_file(dir + "/" + files.at("alg").get<std::string>()));
    std::optional<Extension> ext;
    if (files.contains("ext"))
      ext = extension_from_json(
          load_json_file(dir + "/" + files.at("ext").get<std::string>()));
    std::map<std::string, std::string> expected;
    if (e.contains("expected"))
      for (const auto& [k, v] : e["expected"].items())
        expected[k] = v.get<std::string>();
    std::uint64_t seed = e.contains("seed") ? e["seed"].get<std::uint64_t>() : 0;
    std::string strategy =
        e.contains("strategy") ? e["strategy"].get<std::string>() : "";
    out.push_back({std::move(name), std::move(strategy), seed, std::move(a),
                   std::move(ext), std::move(expected)});
  }
  return out;
}

}  // namespace homquot
