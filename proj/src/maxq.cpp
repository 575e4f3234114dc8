#include "homquot/maxq.hpp"

#include "homquot/errors.hpp"

namespace homquot {

namespace {

// Basis rows of s as the columns of an ambient × dim(s) matrix.
Matrix basis_columns(const Subspace& s) { return s.basis().transpose(); }

Matrix mat_pow(const Matrix& a, std::size_t k) {
  Matrix r = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

// Column t is pders[t].matrix flattened; expressing a candidate map in this
// span yields its coordinates in the solved basis.
Matrix pder_span_matrix(const FieldSpec& f, std::size_t rows,
                        const std::vector<PartialDerivation>& pders) {
  Matrix p(f, rows, pders.size());
  for (std::size_t t = 0; t < pders.size(); ++t) {
    Vec flat = pders[t].matrix.flat();
    for (std::size_t r = 0; r < rows; ++r) p.set(r, t, flat[r]);
  }
  return p;
}

Vec coords_in_pders(const Matrix& span, const Matrix& target,
                    const char* what) {
  auto c = linear_solve(span, target.flat());
  if (!c) throw StructureViolation(std::string(what) +
                                   ": map is not a partial derivation");
  return *c;
}

void require_preconditions(const HomLieAlgebra& L, const Ctx& ctx,
                           const char* op) {
  require_verified(L, op);
  if (L.field().kind() == FieldKind::Prime) {
    Verdict sp = is_semiprime(L, Mode::Exhaustive, ctx);
    if (!sp.is_true())
      throw PreconditionFailed(std::string(op) + ": algebra is not semiprime");
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(L.alpha().col(j));
    Subspace im = Subspace::from_vectors(L.field(), L.dim(), cols);
    if (!is_hom_ideal(L, im).is_true())
      throw PreconditionFailed(std::string(op) +
                               ": twist image is not a Hom-ideal");
    if (!is_essential(L, im, Mode::Exhaustive, ctx).is_true())
      throw PreconditionFailed(std::string(op) +
                               ": twist image is not essential");
    return;
  }
  if (!rational_semisimple_shortcut(L))
    throw PreconditionFailed(
        std::string(op) +
        ": over the rationals, requires identity twist and a nondegenerate "
        "Killing form");
}

// ad(s) restricted to i_min, as carrier coordinates.  Throws when the
// restriction leaves L or falls outside the solved derivation space.
Vec psi_column(const Extension& e, const MaxQuotients& m, const Matrix& span,
               const Vec& s) {
  const HomLieAlgebra& Q = e.ambient;
  std::size_t nl = e.sub_dim();
  std::size_t d = m.i_min.dim();
  Matrix dmat(Q.field(), nl, d);
  Vec as = Q.twist(s);
  for (std::size_t j = 0; j < d; ++j) {
    Vec img = Q.bracket(as, e.to_ambient(m.i_min.basis_row(j)));
    if (!e.sub_space.member(img))
      throw StructureViolation(
          "embed_psi: adjoint image of the minimum essential ideal leaves "
          "the subalgebra");
    Vec c = e.to_sub(img);
    for (std::size_t r = 0; r < nl; ++r) dmat.set(r, j, c[r]);
  }
  return coords_in_pders(span, dmat, "embed_psi");
}

void require_quotient(const Extension& e, const MaxQuotients& m,
                      const Ctx& ctx, const char* op) {
  if (m.i_min.ambient_dim() != e.sub_dim())
    throw DimensionMismatch("carrier was built over a different subalgebra");
  Verdict q = is_quotient_algebra(e, Mode::Auto, ctx);
  if (!q.is_true())
    throw PreconditionFailed(std::string(op) +
                             ": extension is not a verified quotient algebra");
}

}  // namespace

std::vector<PartialDerivation> pder_solve(const HomLieAlgebra& L,
                                          const Subspace& I, std::size_t k) {
  require_verified(L, "pder_solve");
  if (I.ambient_dim() != L.dim())
    throw DimensionMismatch("domain ambient dimension");
  if (!is_hom_ideal(L, I).is_true())
    throw PreconditionFailed("pder_solve: domain is not a Hom-ideal");

  const FieldSpec& f = L.field();
  std::size_t n = L.dim(), d = I.dim();
  if (d == 0) return {};

  Matrix ak = mat_pow(L.alpha(), k);
  std::vector<Vec> bas(d);
  for (std::size_t t = 0; t < d; ++t) bas[t] = I.basis_row(t);

  // Unknown D is n × d, flattened row-major: D[p][q] at p·d + q.
  std::vector<Vec> rows;
  auto blank = [&] { return vec_zero(f, n * d); };

  // δ(α(b_t)) = α(δ(b_t)), one vector equation per domain basis element.
  for (std::size_t t = 0; t < d; ++t) {
    Vec ct = I.coordinates(L.twist(bas[t]));
    for (std::size_t r = 0; r < n; ++r) {
      Vec row = blank();
      for (std::size_t q = 0; q < d; ++q) row[r * d + q] = row[r * d + q] + ct[q];
      for (std::size_t p = 0; p < n; ++p)
        row[p * d + t] = row[p * d + t] - L.alpha().at(r, p);
      rows.push_back(std::move(row));
    }
  }

  // δ([b_i, b_j]) = [δ(b_i), α^k(b_j)] + [α^k(b_i), δ(b_j)] per i < j; the
  // diagonal case is 0 = 0 by antisymmetry.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec cz = I.coordinates(L.bracket(bas[i], bas[j]));
      Matrix rj = L.bracket_right(ak.apply(bas[j]));
      Matrix li = L.bracket_left(ak.apply(bas[i]));
      for (std::size_t r = 0; r < n; ++r) {
        Vec row = blank();
        for (std::size_t q = 0; q < d; ++q)
          row[r * d + q] = row[r * d + q] + cz[q];
        for (std::size_t p = 0; p < n; ++p) {
          row[p * d + i] = row[p * d + i] - rj.at(r, p);
          row[p * d + j] = row[p * d + j] - li.at(r, p);
        }
        rows.push_back(std::move(row));
      }
    }
  }

  Subspace sol = kernel(Matrix::from_rows(f, rows, n * d));
  std::vector<PartialDerivation> out;
  for (std::size_t t = 0; t < sol.dim(); ++t)
    out.push_back({I, Matrix::from_flat(f, n, d, sol.basis_row(t)), k});
  return out;
}

Verdict class_equal(const PartialDerivation& d1, const PartialDerivation& d2,
                    const HomLieAlgebra& L, const Ctx& ctx) {
  require_verified(L, "class_equal");
  if (d1.twist_power != 0 || d2.twist_power != 0)
    throw PreconditionFailed("class_equal: defined for twist power zero");
  if (d1.domain.ambient_dim() != L.dim() || d2.domain.ambient_dim() != L.dim())
    throw DimensionMismatch("derivation domain ambient dimension");

  Subspace meet = d1.domain.intersect(d2.domain);
  std::size_t m = meet.dim();

  // Equalizer {v in meet : δ(v) = μ(v)}, computed in meet coordinates.
  Matrix diff(L.field(), L.dim(), m);
  for (std::size_t t = 0; t < m; ++t) {
    Vec w = meet.basis_row(t);
    Vec dv = vec_sub(d1.apply(w), d2.apply(w));
    for (std::size_t r = 0; r < L.dim(); ++r) diff.set(r, t, dv[r]);
  }
  Subspace kc = kernel(diff);
  std::vector<Vec> eq_vectors;
  Matrix wm = basis_columns(meet);
  for (std::size_t t = 0; t < kc.dim(); ++t)
    eq_vectors.push_back(wm.apply(kc.basis_row(t)));
  Subspace eq = Subspace::from_vectors(L.field(), L.dim(), eq_vectors);

  // Any ideal of agreement sits inside eq, hence inside w; equality of
  // classes is exactly essentiality of w.
  Subspace w = largest_ideal_inside(L, eq);
  Verdict ess = is_essential(L, w, Mode::Auto, ctx);

  Witness cert;
  cert.subspaces.emplace("K", w);
  if (ess.is_true()) return Verdict::yes_with(ess.method, cert);
  if (ess.is_unknown())
    return Verdict::unknown(ess.method,
                            "agreement ideal essentiality undecided: " +
                                ess.note);
  cert.kind = "separating-vector";
  // Least meet basis vector where the maps disagree, when one exists; the
  // meet can also agree entirely yet fail to contain an essential ideal.
  for (std::size_t t = 0; t < m; ++t) {
    Vec wv = meet.basis_row(t);
    if (vec_cmp(d1.apply(wv), d2.apply(wv)) != 0) {
      cert.vectors["v"] = wv;
      cert.vectors["first"] = d1.apply(wv);
      cert.vectors["second"] = d2.apply(wv);
      break;
    }
  }
  if (ess.witness && ess.witness->subspaces.count("J"))
    cert.subspaces.emplace("J", ess.witness->subspaces.at("J"));
  return Verdict::no(ess.method, cert);
}

bool rational_semisimple_shortcut(const HomLieAlgebra& L) {
  require_verified(L, "rational_semisimple_shortcut");
  if (!L.field().is_rational()) return false;
  std::size_t n = L.dim();
  if (L.alpha() != Matrix::identity(L.field(), n)) return false;
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i)
    ads.push_back(L.ad(vec_unit(L.field(), n, i)));
  Matrix gram(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix prod = ads[i] * ads[j];
      Scalar tr = Scalar::zero(L.field());
      for (std::size_t t = 0; t < n; ++t) tr = tr + prod.at(t, t);
      gram.set(i, j, tr);
      gram.set(j, i, tr);
    }
  }
  return rank(gram) == n;
}

MaxQuotients build_maximal_quotients(const HomLieAlgebra& L, const Ctx& ctx) {
  require_preconditions(L, ctx, "build_maximal_quotients");
  const FieldSpec& f = L.field();
  std::size_t n = L.dim();

  Subspace i_min = f.kind() == FieldKind::Prime
                       ? minimum_essential_ideal(L, ctx)
                       : L.full_subspace();
  if (bracket_span(L, i_min, i_min) != i_min)
    throw StructureViolation(
        "build_maximal_quotients: minimum essential ideal is not spanned by "
        "its own brackets");

  std::vector<PartialDerivation> pders = pder_solve(L, i_min, 0);
  std::size_t m = pders.size();
  std::size_t d = i_min.dim();
  for (const PartialDerivation& p : pders)
    for (std::size_t j = 0; j < d; ++j)
      if (!i_min.member(p.matrix.col(j)))
        throw StructureViolation(
            "build_maximal_quotients: derivation does not preserve the "
            "minimum essential ideal");

  // Endomorphism form of each basis derivation, for the commutator bracket.
  Matrix wm = basis_columns(i_min);
  std::vector<Matrix> endo;
  for (const PartialDerivation& p : pders) {
    Matrix r(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = i_min.coordinates(p.matrix.col(j));
      for (std::size_t q = 0; q < d; ++q) r.set(q, j, c[q]);
    }
    endo.push_back(std::move(r));
  }

  Matrix span = pder_span_matrix(f, n * d, pders);
  std::vector<BracketEntry> entries;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) {
      Matrix comm = endo[s] * endo[t] - endo[t] * endo[s];
      Vec coords = coords_in_pders(span, wm * comm,
                                   "build_maximal_quotients bracket");
      if (!vec_is_zero(coords)) entries.push_back({s, t, coords});
    }
  }

  Matrix alpha_tilde(f, m, m);
  for (std::size_t t = 0; t < m; ++t) {
    Vec coords = coords_in_pders(span, L.alpha() * pders[t].matrix,
                                 "build_maximal_quotients twist");
    for (std::size_t r = 0; r < m; ++r) alpha_tilde.set(r, t, coords[r]);
  }

  HomLieAlgebra raw = HomLieAlgebra::from_structure(f, m, entries, alpha_tilde);
  if (!raw.check_axioms().hom_ok())
    throw StructureViolation(
        "build_maximal_quotients: carrier fails the Hom-Lie axioms");
  HomLieAlgebra carrier = raw.verified();

  Matrix phi(f, m, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad = L.ad(vec_unit(f, n, i));
    Matrix restr(f, n, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec img = ad.apply(i_min.basis_row(j));
      for (std::size_t r = 0; r < n; ++r) restr.set(r, j, img[r]);
    }
    Vec coords = coords_in_pders(span, restr, "build_maximal_quotients phi");
    for (std::size_t r = 0; r < m; ++r) phi.set(r, i, coords[r]);
  }
  if (kernel(phi).dim() != 0)
    throw StructureViolation(
        "build_maximal_quotients: canonical embedding is not injective");

  return MaxQuotients{std::move(carrier), std::move(i_min), std::move(pders),
                      std::move(alpha_tilde), std::move(phi)};
}

Matrix psi_matrix(const Extension& e, const MaxQuotients& m, const Ctx& ctx) {
  require_quotient(e, m, ctx, "psi_matrix");
  const FieldSpec& f = e.ambient.field();
  std::size_t nq = e.ambient_dim();
  Matrix span = pder_span_matrix(f, e.sub_dim() * m.i_min.dim(), m.pder_basis);
  Matrix psi(f, m.pder_basis.size(), nq);
  for (std::size_t i = 0; i < nq; ++i) {
    Vec c = psi_column(e, m, span, vec_unit(f, nq, i));
    for (std::size_t r = 0; r < psi.rows(); ++r) psi.set(r, i, c[r]);
  }
  if (kernel(psi).dim() != 0)
    throw StructureViolation("psi_matrix: embedding is not injective");
  if (psi * e.embedding != m.phi)
    throw StructureViolation(
        "psi_matrix: embedding does not restrict to the canonical one");
  return psi;
}

Vec embed_psi(const Extension& e, const MaxQuotients& m, const Vec& s,
              const Ctx& ctx) {
  require_quotient(e, m, ctx, "embed_psi");
  if (s.size() != e.ambient_dim())
    throw DimensionMismatch("element length");
  Matrix span = pder_span_matrix(e.ambient.field(),
                                 e.sub_dim() * m.i_min.dim(), m.pder_basis);
  return psi_column(e, m, span, s);
}

std::pair<Verdict, Verdict> check_overalgebra_criterion(const Extension& e,
                                                        const Ctx& ctx) {
  const HomLieAlgebra& L = e.sub;
  const HomLieAlgebra& Q = e.ambient;
  require_preconditions(L, ctx, "check_overalgebra_criterion");

  bool finite = L.field().kind() == FieldKind::Prime;
  Method meth = finite ? Method::Exhaustive : Method::DerivedCriterion;
  std::vector<Subspace> essentials;
  if (finite) {
    IdealLattice lat = ideal_lattice(L, ctx);
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (lat.essential_flags[i]) essentials.push_back(lat.ideals[i]);
  } else {
    // Semisimple shortcut: the full algebra is the only essential ideal.
    essentials.push_back(L.full_subspace());
  }

  // [α(I), s] ⊆ L, where I ranges over candidates and s over ambient basis
  // vectors; an intersection of winners covers arbitrary s.
  auto absorbed_into_sub = [&](const Subspace& ideal, const Vec& s) {
    for (std::size_t t = 0; t < ideal.dim(); ++t) {
      Vec u = e.to_ambient(L.twist(ideal.basis_row(t)));
      if (!e.sub_space.member(Q.bracket(u, s))) return false;
    }
    return true;
  };
  Verdict one = Verdict::yes(meth);
  for (std::size_t i = 0; i < e.ambient_dim(); ++i) {
    Vec s = vec_unit(Q.field(), e.ambient_dim(), i);
    bool found = false;
    for (const Subspace& ideal : essentials)
      if (absorbed_into_sub(ideal, s)) { found = true; break; }
    if (!found) {
      Witness w;
      w.kind = "undominated-element";
      w.vectors["s"] = s;
      w.indices = {i};
      one = Verdict::no(meth, w);
      break;
    }
  }

  // No essential ideal may annihilate a nonzero ambient element.  Over ℚ
  // only the full algebra is essential, so that single kernel decides.
  Verdict two = Verdict::yes(meth);
  for (const Subspace& ideal : essentials) {
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < ideal.dim(); ++t) {
      Matrix bl =
          Q.bracket_left(e.to_ambient(L.twist(ideal.basis_row(t))));
      for (std::size_t r = 0; r < bl.rows(); ++r) rows.push_back(bl.row(r));
    }
    Subspace k = kernel(Matrix::from_rows(Q.field(), rows, e.ambient_dim()));
    if (k.dim() != 0) {
      Witness w;
      w.kind = "annihilated-element";
      w.vectors["s"] = k.basis_row(0);
      w.subspaces.emplace("I", ideal);
      w.subspaces.emplace("kernel", k);
      two = Verdict::no(meth, w);
      break;
    }
  }

  return {one, two};
}

}  // namespace homquot
