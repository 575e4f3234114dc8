#pragma once

#include "homquot/exalg.hpp"
#include "homquot/verdict.hpp"

namespace homquot {

/// One upper-triangular bracket table entry: [e_i, e_j] = value, i < j.
struct BracketEntry {
  std::size_t i, j;
  Vec value;
};

/// Axiom verification result.  The classical Jacobi entry is diagnostic
/// only; it does not gate verification (alternating + twisted Jacobi +
/// multiplicativity do).
struct AxiomReport {
  Verdict alternating;
  Verdict hom_jacobi;
  Verdict multiplicative;
  Verdict classical_jacobi;

  bool hom_ok() const {
    return alternating.is_true() && hom_jacobi.is_true() &&
           multiplicative.is_true();
  }
};

/// Finite-dimensional algebra (L, [·,·], α) given by structure constants
/// c[i][j] = coordinates of [e_i, e_j] and the twist matrix α.  Values are
/// immutable; `verified()` returns a copy flagged as satisfying the axioms,
/// and every structural operation demands that flag.
class HomLieAlgebra {
public:
  static HomLieAlgebra from_structure(const FieldSpec& f, std::size_t dim,
                                      const std::vector<BracketEntry>& entries,
                                      const Matrix& alpha);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Matrix& alpha() const { return alpha_; }
  const std::vector<BracketEntry>& table() const { return table_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec twist(const Vec& x) const;

  /// Matrix of y ↦ [x, y].
  Matrix bracket_left(const Vec& x) const;
  /// Matrix of x ↦ [x, w].
  Matrix bracket_right(const Vec& w) const;
  /// Inner derivation ad_x : y ↦ [α(x), y]; requires a verified algebra.
  Matrix ad(const Vec& x) const;

  AxiomReport check_axioms() const;
  /// Copy flagged verified; throws PreconditionFailed if a Hom axiom fails.
  HomLieAlgebra verified() const;
  bool is_verified() const { return verified_; }

  Subspace zero_subspace() const { return Subspace::zero(field_, n_); }
  Subspace full_subspace() const { return Subspace::full(field_, n_); }

private:
  HomLieAlgebra(const FieldSpec& f, std::size_t n, Vec c, Matrix alpha,
                std::vector<BracketEntry> table)
      : field_(f), n_(n), c_(std::move(c)), alpha_(std::move(alpha)),
        table_(std::move(table)), verified_(false) {}

  FieldSpec field_;
  std::size_t n_;
  Vec c_;  // n³ structure constants, ((i·n)+j)·n+k
  Matrix alpha_;
  std::vector<BracketEntry> table_;  // canonical i<j input form (for JSON round-trip)
  bool verified_;
};

/// Element of a specific algebra; the parent must outlive it.
struct Element {
  const HomLieAlgebra* parent = nullptr;
  Vec coords;
};

Element make_element(const HomLieAlgebra& L, const Vec& v);
Element bracket(const Element& x, const Element& y);
Element twist(const Element& x);

void require_verified(const HomLieAlgebra& L, const char* op);

Verdict is_hom_subalgebra(const HomLieAlgebra& L, const Subspace& s);
Verdict is_hom_ideal(const HomLieAlgebra& L, const Subspace& i);

/// Least subspace containing the given vectors, stable under α and under
/// bracketing with all of L.  Closure iteration, ≤ dim rounds.
Subspace ideal_generated(const HomLieAlgebra& L, const std::vector<Vec>& gens);

/// Least subspace containing the given vectors, stable under α and closed
/// under brackets of its own members.
Subspace subalgebra_generated(const HomLieAlgebra& L,
                              const std::vector<Vec>& gens);

/// Ann_L(H) = {x : [x, α(y)] = 0 for all y in H}.
Subspace annihilator(const HomLieAlgebra& L, const Subspace& h);

/// Largest Hom-ideal of L contained in V (greatest fixpoint of the
/// invariance constraints).
Subspace largest_ideal_inside(const HomLieAlgebra& L, const Subspace& v);

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b);

struct Induced {
  HomLieAlgebra algebra;
  Matrix embedding;  // ambient_dim × dim(S), columns are the basis rows
};

/// The subalgebra on S as an algebra in its own right, with the inclusion.
Induced induced_on(const HomLieAlgebra& L, const Subspace& s);

}  // namespace homquot
