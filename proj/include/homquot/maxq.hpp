#pragma once

#include "homquot/props.hpp"
#include "homquot/quotients.hpp"

namespace homquot {

/// Linear map δ : I → L with δ∘α = α∘δ on I and the twisted Leibniz rule
/// δ([x,y]) = [δ(x), α^k(y)] + [α^k(x), δ(y)].  `matrix` takes coordinates
/// in the canonical basis of `domain` to ambient L-coordinates.
struct PartialDerivation {
  Subspace domain;
  Matrix matrix;
  std::size_t twist_power = 0;

  /// δ(v) for v given in ambient coordinates; v must lie in the domain.
  Vec apply(const Vec& v) const { return matrix.apply(domain.coordinates(v)); }
};

/// Canonical basis of the solution space of partial k-derivations on the
/// Hom-ideal I.  Both invariants reduce to one kernel computation over the
/// dim L · dim I matrix entries.
std::vector<PartialDerivation> pder_solve(const HomLieAlgebra& L,
                                          const Subspace& I, std::size_t k);

/// Whether two 0-derivations agree on some essential ideal inside the
/// intersection of their domains.  Computed without the lattice: take the
/// equalizer Eq = {v : δv = μv} and W = largest ideal of L inside Eq; any
/// agreement ideal lands in W, so the classes match iff W is essential.
Verdict class_equal(const PartialDerivation& d1, const PartialDerivation& d2,
                    const HomLieAlgebra& L, const Ctx& ctx);

/// The algebra of maximal quotients: carrier = all 0-derivations on the
/// minimum essential ideal, bracket = operator commutator, twist = post-
/// composition with α, together with the canonical dense embedding of L.
struct MaxQuotients {
  HomLieAlgebra carrier;
  Subspace i_min;
  std::vector<PartialDerivation> pder_basis;
  Matrix alpha_tilde;  // carrier twist in the pder basis
  Matrix phi;          // dim carrier × dim L, x ↦ ad(x)|_{i_min}
};

/// Requires a semiprime L whose twist image α(L) is an essential Hom-ideal.
/// Over a finite field these are checked exhaustively; over ℚ only the
/// semisimple shortcut below is accepted.  Structural failures while
/// assembling the carrier raise StructureViolation.
MaxQuotients build_maximal_quotients(const HomLieAlgebra& L, const Ctx& ctx);

/// α = id and the Killing form tr(ad x · ad y) nondegenerate.  In
/// characteristic zero that forces semisimplicity, and an ideal omitting a
/// simple factor meets it trivially, so L is its own minimum essential
/// ideal and no ideal enumeration is needed.
bool rational_semisimple_shortcut(const HomLieAlgebra& L);

/// ψ on all of Q at once: column i is the carrier element ad(b_i)|_{i_min}
/// for the i-th ambient basis vector.  Asserts injectivity and that ψ
/// restricted to L is φ.  The extension must be a quotient algebra of its
/// subalgebra (any exact True verdict qualifies).
Matrix psi_matrix(const Extension& e, const MaxQuotients& m, const Ctx& ctx);

/// ψ(s) for a single ambient element, as coordinates in the pder basis.
/// ad(s) must map i_min into L; quotient-ness guarantees that, and inputs
/// violating it raise StructureViolation.
Vec embed_psi(const Extension& e, const MaxQuotients& m, const Vec& s,
              const Ctx& ctx);

/// The two overalgebra conditions for L ⊆ Q sitting inside the maximal
/// quotients: (1) every ambient element has an essential denominator ideal
/// pushing it into L, and (2) no nonzero ambient element is killed by an
/// essential ideal.  Finite fields scan the essential lattice members; over
/// ℚ the semisimple shortcut reduces both to I = L.
std::pair<Verdict, Verdict> check_overalgebra_criterion(const Extension& e,
                                                        const Ctx& ctx);

}  // namespace homquot
