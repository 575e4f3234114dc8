#include "homquot/homlie.hpp"

#include "homquot/errors.hpp"

#include <set>
#include <string>

namespace homquot {

HomLieAlgebra HomLieAlgebra::from_structure(
    const FieldSpec& f, std::size_t dim,
    const std::vector<BracketEntry>& entries, const Matrix& alpha) {
  if (alpha.rows() != dim || alpha.cols() != dim)
    throw DimensionMismatch("twist matrix must be square of the algebra dimension");
  if (alpha.field() != f) throw FieldMismatch("twist matrix field");

  Vec c(dim * dim * dim, Scalar::zero(f));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim)
      throw DimensionMismatch("bracket entry index out of range");
    if (e.i >= e.j)
      throw StructureViolation("bracket table must list pairs with i < j only");
    if (!seen.insert({e.i, e.j}).second)
      throw StructureViolation("duplicate bracket table pair");
    if (e.value.size() != dim)
      throw DimensionMismatch("bracket entry value length");
    for (std::size_t k = 0; k < dim; ++k) {
      if (e.value[k].field() != f) throw FieldMismatch("bracket entry scalar");
      c[(e.i * dim + e.j) * dim + k] = e.value[k];
      c[(e.j * dim + e.i) * dim + k] = -e.value[k];
    }
  }

  std::vector<BracketEntry> table(entries);
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  });
  return HomLieAlgebra(f, dim, std::move(c), alpha, std::move(table));
}

Vec HomLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(n_, Scalar::zero(field_));
  for (std::size_t k = 0; k < n_; ++k) out[k] = c(i, j, k);
  return out;
}

Vec HomLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw DimensionMismatch("bracket operand length");
  Vec out(n_, Scalar::zero(field_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& ck = c(i, j, k);
        if (!ck.is_zero()) out[k] = out[k] + w * ck;
      }
    }
  }
  return out;
}

Vec HomLieAlgebra::twist(const Vec& x) const { return alpha_.apply(x); }

Matrix HomLieAlgebra::bracket_left(const Vec& x) const {
  if (x.size() != n_) throw DimensionMismatch("bracket_left operand length");
  Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) {
      Scalar acc = Scalar::zero(field_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        acc = acc + x[i] * c(i, j, k);
      }
      m.set(k, j, acc);
    }
  }
  return m;
}

Matrix HomLieAlgebra::bracket_right(const Vec& w) const {
  if (w.size() != n_) throw DimensionMismatch("bracket_right operand length");
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      Scalar acc = Scalar::zero(field_);
      for (std::size_t j = 0; j < n_; ++j) {
        if (w[j].is_zero()) continue;
        acc = acc + c(i, j, k) * w[j];
      }
      m.set(k, i, acc);
    }
  }
  return m;
}

Matrix HomLieAlgebra::ad(const Vec& x) const {
  require_verified(*this, "ad");
  return bracket_left(twist(x));
}

AxiomReport HomLieAlgebra::check_axioms() const {
  AxiomReport rep{Verdict::yes(Method::Exhaustive),
                  Verdict::yes(Method::Exhaustive),
                  Verdict::yes(Method::Exhaustive),
                  Verdict::yes(Method::Exhaustive)};

  // Alternating: by construction [e_i,e_j] = -[e_j,e_i] and [e_i,e_i]=0,
  // but re-check the tensor rather than trusting the constructor.
  for (std::size_t i = 0; i < n_ && rep.alternating.is_true(); ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      Vec d = vec_add(bracket_basis(i, j), bracket_basis(j, i));
      if (i == j) d = bracket_basis(i, i);
      if (!vec_is_zero(d)) {
        Witness w;
        w.kind = "alternating-defect";
        w.indices = {i, j};
        w.vectors["defect"] = d;
        rep.alternating = Verdict::no(Method::Exhaustive, w);
        break;
      }
    }
  }

  // Twisted Jacobi on basis triples i<j<k (sufficient by trilinearity and
  // the alternating identity).
  for (std::size_t i = 0; i < n_ && rep.hom_jacobi.is_true(); ++i) {
    for (std::size_t j = i + 1; j < n_ && rep.hom_jacobi.is_true(); ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        Vec ei = vec_unit(field_, n_, i);
        Vec ej = vec_unit(field_, n_, j);
        Vec ek = vec_unit(field_, n_, k);
        Vec s = bracket(twist(ei), bracket_basis(j, k));
        s = vec_add(s, bracket(twist(ej), bracket_basis(k, i)));
        s = vec_add(s, bracket(twist(ek), bracket_basis(i, j)));
        if (!vec_is_zero(s)) {
          Witness w;
          w.kind = "hom-jacobi-defect";
          w.indices = {i, j, k};
          w.vectors["defect"] = s;
          rep.hom_jacobi = Verdict::no(Method::Exhaustive, w);
          break;
        }
      }
    }
  }

  // Multiplicativity: α[x,y] = [αx, y] = [x, αy] on all basis pairs.  The
  // diagonal matters: α[e_i,e_i] = 0 forces [αe_i, e_i] = 0, which is not
  // automatic.
  for (std::size_t i = 0; i < n_ && rep.multiplicative.is_true(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Vec ei = vec_unit(field_, n_, i);
      Vec ej = vec_unit(field_, n_, j);
      Vec lhs = twist(bracket_basis(i, j));
      Vec m1 = bracket(twist(ei), ej);
      Vec m2 = bracket(ei, twist(ej));
      if (lhs != m1 || lhs != m2) {
        Witness w;
        w.kind = "multiplicativity-defect";
        w.indices = {i, j};
        w.vectors["twist_of_bracket"] = lhs;
        w.vectors["bracket_twist_left"] = m1;
        w.vectors["bracket_twist_right"] = m2;
        rep.multiplicative = Verdict::no(Method::Exhaustive, w);
        break;
      }
    }
  }

  // Untwisted Jacobi, reported for diagnosis only.
  for (std::size_t i = 0; i < n_ && rep.classical_jacobi.is_true(); ++i) {
    for (std::size_t j = i + 1; j < n_ && rep.classical_jacobi.is_true(); ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        Vec ei = vec_unit(field_, n_, i);
        Vec ej = vec_unit(field_, n_, j);
        Vec ek = vec_unit(field_, n_, k);
        Vec s = bracket(ei, bracket_basis(j, k));
        s = vec_add(s, bracket(ej, bracket_basis(k, i)));
        s = vec_add(s, bracket(ek, bracket_basis(i, j)));
        if (!vec_is_zero(s)) {
          Witness w;
          w.kind = "jacobi-defect";
          w.indices = {i, j, k};
          w.vectors["defect"] = s;
          rep.classical_jacobi = Verdict::no(Method::Exhaustive, w);
          break;
        }
      }
    }
  }

  return rep;
}

HomLieAlgebra HomLieAlgebra::verified() const {
  AxiomReport rep = check_axioms();
  if (!rep.hom_ok()) {
    std::string which = !rep.alternating.is_true() ? "alternating"
                        : !rep.hom_jacobi.is_true() ? "twisted Jacobi"
                                                    : "multiplicativity";
    throw PreconditionFailed("axiom check failed: " + which);
  }
  HomLieAlgebra out(*this);
  out.verified_ = true;
  return out;
}

Element make_element(const HomLieAlgebra& L, const Vec& v) {
  if (v.size() != L.dim()) throw DimensionMismatch("element length");
  for (const auto& s : v)
    if (s.field() != L.field()) throw FieldMismatch("element scalar");
  return Element{&L, v};
}

Element bracket(const Element& x, const Element& y) {
  if (x.parent != y.parent)
    throw FieldMismatch("elements belong to different algebras");
  return Element{x.parent, x.parent->bracket(x.coords, y.coords)};
}

Element twist(const Element& x) {
  return Element{x.parent, x.parent->twist(x.coords)};
}

void require_verified(const HomLieAlgebra& L, const char* op) {
  if (!L.is_verified())
    throw PreconditionFailed(std::string(op) + " requires a verified algebra");
}

Verdict is_hom_subalgebra(const HomLieAlgebra& L, const Subspace& s) {
  require_verified(L, "is_hom_subalgebra");
  if (s.ambient_dim() != L.dim())
    throw DimensionMismatch("subspace ambient dimension");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec img = L.twist(s.basis_row(i));
    if (!s.member(img)) {
      Witness w;
      w.kind = "twist-escape";
      w.vectors["x"] = s.basis_row(i);
      w.vectors["image"] = img;
      return Verdict::no(Method::Structural, w);
    }
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vec br = L.bracket(s.basis_row(i), s.basis_row(j));
      if (!s.member(br)) {
        Witness w;
        w.kind = "bracket-escape";
        w.vectors["x"] = s.basis_row(i);
        w.vectors["y"] = s.basis_row(j);
        w.vectors["image"] = br;
        return Verdict::no(Method::Structural, w);
      }
    }
  }
  return Verdict::yes(Method::Structural);
}

Verdict is_hom_ideal(const HomLieAlgebra& L, const Subspace& ideal) {
  require_verified(L, "is_hom_ideal");
  if (ideal.ambient_dim() != L.dim())
    throw DimensionMismatch("subspace ambient dimension");
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    Vec img = L.twist(ideal.basis_row(i));
    if (!ideal.member(img)) {
      Witness w;
      w.kind = "twist-escape";
      w.vectors["x"] = ideal.basis_row(i);
      w.vectors["image"] = img;
      return Verdict::no(Method::Structural, w);
    }
  }
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vec br = L.bracket(ideal.basis_row(i), vec_unit(L.field(), L.dim(), j));
      if (!ideal.member(br)) {
        Witness w;
        w.kind = "bracket-escape";
        w.vectors["x"] = ideal.basis_row(i);
        w.indices = {j};
        w.vectors["image"] = br;
        return Verdict::no(Method::Structural, w);
      }
    }
  }
  return Verdict::yes(Method::Structural);
}

Subspace ideal_generated(const HomLieAlgebra& L, const std::vector<Vec>& gens) {
  require_verified(L, "ideal_generated");
  Subspace cur = Subspace::from_vectors(L.field(), L.dim(), gens);
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i < cur.dim(); ++i) {
      next.push_back(cur.basis_row(i));
      next.push_back(L.twist(cur.basis_row(i)));
      for (std::size_t j = 0; j < L.dim(); ++j)
        next.push_back(L.bracket(cur.basis_row(i), vec_unit(L.field(), L.dim(), j)));
    }
    Subspace grown = Subspace::from_vectors(L.field(), L.dim(), next);
    if (grown.dim() == cur.dim()) return cur;
    cur = grown;
  }
}

Subspace subalgebra_generated(const HomLieAlgebra& L,
                              const std::vector<Vec>& gens) {
  require_verified(L, "subalgebra_generated");
  Subspace cur = Subspace::from_vectors(L.field(), L.dim(), gens);
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i < cur.dim(); ++i) {
      next.push_back(cur.basis_row(i));
      next.push_back(L.twist(cur.basis_row(i)));
      for (std::size_t j = i + 1; j < cur.dim(); ++j)
        next.push_back(L.bracket(cur.basis_row(i), cur.basis_row(j)));
    }
    Subspace grown = Subspace::from_vectors(L.field(), L.dim(), next);
    if (grown.dim() == cur.dim()) return cur;
    cur = grown;
  }
}

Subspace annihilator(const HomLieAlgebra& L, const Subspace& h) {
  require_verified(L, "annihilator");
  if (h.ambient_dim() != L.dim())
    throw DimensionMismatch("subspace ambient dimension");
  if (h.dim() == 0) return L.full_subspace();
  Matrix stacked = L.bracket_right(L.twist(h.basis_row(0)));
  for (std::size_t k = 1; k < h.dim(); ++k)
    stacked = stacked.vstack(L.bracket_right(L.twist(h.basis_row(k))));
  return kernel(stacked);
}

Subspace largest_ideal_inside(const HomLieAlgebra& L, const Subspace& v) {
  require_verified(L, "largest_ideal_inside");
  if (v.ambient_dim() != L.dim())
    throw DimensionMismatch("subspace ambient dimension");
  Subspace cur = v;
  for (;;) {
    if (cur.dim() == 0) return cur;
    Matrix cond = cur.conditions();
    if (cond.rows() == 0) return cur;  // cur is the whole space, an ideal
    // x stays in cur, α(x) lands in cur, every [x, e_j] lands in cur
    Matrix sys = cond.vstack(cond * L.alpha());
    for (std::size_t j = 0; j < L.dim(); ++j)
      sys = sys.vstack(cond * L.bracket_right(vec_unit(L.field(), L.dim(), j)));
    Subspace next = kernel(sys);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b) {
  require_verified(a, "direct_sum");
  require_verified(b, "direct_sum");
  if (a.field() != b.field()) throw FieldMismatch("direct_sum fields");
  const FieldSpec& f = a.field();
  std::size_t na = a.dim(), n = na + b.dim();

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vec v = a.bracket_basis(i, j);
      if (vec_is_zero(v)) continue;
      Vec padded(n, Scalar::zero(f));
      for (std::size_t k = 0; k < na; ++k) padded[k] = v[k];
      entries.push_back({i, j, padded});
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vec v = b.bracket_basis(i, j);
      if (vec_is_zero(v)) continue;
      Vec padded(n, Scalar::zero(f));
      for (std::size_t k = 0; k < b.dim(); ++k) padded[na + k] = v[k];
      entries.push_back({na + i, na + j, padded});
    }

  Matrix alpha(f, n, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) alpha.set(i, j, a.alpha().at(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      alpha.set(na + i, na + j, b.alpha().at(i, j));

  return HomLieAlgebra::from_structure(f, n, entries, alpha).verified();
}

Induced induced_on(const HomLieAlgebra& L, const Subspace& s) {
  require_verified(L, "induced_on");
  Verdict sub = is_hom_subalgebra(L, s);
  if (!sub.is_true())
    throw NotASubalgebra("induced_on requires a twist-stable subalgebra");
  const FieldSpec& f = L.field();
  std::size_t m = s.dim();

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec w = L.bracket(s.basis_row(i), s.basis_row(j));
      Vec coords = s.coordinates(w);
      if (!vec_is_zero(coords)) entries.push_back({i, j, coords});
    }

  Matrix alpha(f, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec img = s.coordinates(L.twist(s.basis_row(j)));
    for (std::size_t i = 0; i < m; ++i) alpha.set(i, j, img[i]);
  }

  Matrix emb(f, L.dim(), m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < L.dim(); ++i)
      emb.set(i, j, s.basis_row(j)[i]);

  HomLieAlgebra alg = HomLieAlgebra::from_structure(f, m, entries, alpha).verified();
  return Induced{std::move(alg), std::move(emb)};
}

}  // namespace homquot
