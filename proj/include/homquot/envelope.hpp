#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homquot/context.hpp"
#include "homquot/homlie.hpp"
#include "homquot/quotients.hpp"
#include "homquot/verdict.hpp"

namespace homquot {

/// A product-closed span of n×n operators on F^n.  The basis is canonical:
/// flatten each matrix row-major, row-reduce, unflatten.  Equality of two
/// algebras is therefore entrywise equality of their bases.  `unital`
/// records whether the identity was adjoined; it is a property of how the
/// value was built, not of the span (the span may contain the identity
/// without `unital` being set).  Closure under products is asserted at every
/// construction site.
struct OperatorAlgebra {
  FieldSpec field;
  std::size_t ambient_dim = 0;
  std::vector<Matrix> basis;
  std::vector<std::string> generators;  // provenance of the generating set
  bool unital = false;

  std::size_t dim() const { return basis.size(); }
  bool is_zero() const { return basis.empty(); }

  /// The span as a subspace of F^(n²), row-major flattening.
  Subspace span() const;
  bool contains(const Matrix& m) const;
  /// Coordinates in the canonical basis; throws if m lies outside.
  Vec coordinates(const Matrix& m) const;
  /// Σ coords[i]·basis[i].
  Matrix element(const Vec& coords) const;

  bool operator==(const OperatorAlgebra& o) const;
  bool operator!=(const OperatorAlgebra& o) const { return !(*this == o); }
};

/// Flattened span of same-shape square matrices, as a subspace of F^(n²).
Subspace mat_span(const FieldSpec& f, std::size_t n,
                  const std::vector<Matrix>& mats);

/// span{x·y : x over xs, y over ys} ⊆ F^(n²).
Subspace product_span(const FieldSpec& f, std::size_t n,
                      const std::vector<Matrix>& xs,
                      const std::vector<Matrix>& ys);

/// Smallest product-closed span containing the generators (plus the identity
/// when unital).  Iterates pairwise products until the dimension stabilizes;
/// n² is a hard bound on the number of rounds.  `provenance`, when given,
/// must parallel `gens`.
OperatorAlgebra operator_closure(const FieldSpec& f, std::size_t n,
                                 const std::vector<Matrix>& gens, bool unital,
                                 std::vector<std::string> provenance = {});

enum class EnvelopeSource { Sub, Ambient };

/// Envelope of inner maps computed in the ambient algebra: generators are
/// the maps y ↦ [α(b), y] on Q with b over the subalgebra basis (Sub) or the
/// ambient basis (Ambient).  Non-unital in both cases.
OperatorAlgebra inner_envelope(const Extension& e, EnvelopeSource source);

/// Envelope of all inner maps of L itself; non-unital.
OperatorAlgebra adjoint_envelope(const HomLieAlgebra& L);

/// adjoint_envelope with the identity adjoined: the multiplication algebra.
OperatorAlgebra multiplication_algebra(const HomLieAlgebra& L);

/// Span of `a` plus the identity operator.  Unital and non-unital algebras
/// are distinct values everywhere; adjoining the identity is always this
/// explicit step.
OperatorAlgebra unitization(const OperatorAlgebra& a);

/// The part of the ambient envelope leaving the subalgebra invariant:
/// {μ : μ(L) ⊆ L}.  Product closure is automatic and asserted.
OperatorAlgebra invariant_subalgebra_a0(const Extension& e);
OperatorAlgebra invariant_subalgebra_a0(const Extension& e,
                                        const OperatorAlgebra& ambient_env);

enum class Side { Left, Right };

/// Right: {a over A : x·a = 0 for every x over X}; Left mirrors.  X must
/// sit inside A's span.  When X is a one-sided ideal of A on the matching
/// side, the annihilator is two-sided and that is asserted.  The result is
/// a subspace of F^(n²).
Subspace one_sided_annihilator(const OperatorAlgebra& a, const Subspace& x,
                               Side side);

/// The two-sided ideal of the subalgebra envelope generated by the envelope
/// of the ideal's inner maps, computed as E·E_I + E_I where E is the
/// envelope over the subalgebra basis and E_I the one over the ideal basis.
/// Equality with the mirrored span E_I·E + E_I is asserted, as is product
/// closure.
OperatorAlgebra assoc_ideal_generated(const Extension& e,
                                      const Subspace& ideal);
OperatorAlgebra assoc_ideal_generated(const Extension& e,
                                      const Subspace& ideal,
                                      const OperatorAlgebra& sub_env);

/// Validates a single-element certificate for the left-quotient property:
/// j must be a left ideal of a with zero right annihilator in a, and
/// 0 ≠ j·q ⊆ a.  One such j per q forces is_left_quotient_algebra(a, s).
Verdict left_denominator_certificate(const OperatorAlgebra& a, const Matrix& q,
                                     const Subspace& j);

/// Left-quotient test for A ⊆ S: for all p, q over S with p ≠ 0 there is x
/// over A with x·q ∈ A and x·p ≠ 0.  The common denominator ∩(A : bᵢ) over
/// an S-basis settles True over any field; failing that, finite fields scan
/// q projectively (subject to ctx caps) and the rationals degrade to witness
/// refutation or Unknown.
Verdict is_left_quotient_algebra(const OperatorAlgebra& a,
                                 const OperatorAlgebra& s, Mode mode,
                                 const Ctx& ctx);

/// No μ in A beyond zero with μ·A·μ = 0.  Finite fields scan projectively;
/// the rationals use the radical of the trace form on the unitization's
/// regular representation (exact in characteristic zero).  Over GF(p) the
/// trace route is sound only when p exceeds the unitization's dimension and
/// is used, and recorded, only then.
Verdict is_assoc_semiprime(const OperatorAlgebra& a, Mode mode,
                           const Ctx& ctx);

/// Operators in the ambient multiplication algebra vanishing on the
/// subalgebra, as a subspace of F^(n²), plus the density verdict
/// (dense ⇔ that space is zero).  When the ambient annihilator is zero the
/// same test inside the non-unital envelope is equivalent; both are
/// computed and their agreement is asserted.
std::pair<Subspace, Verdict> hom_annihilator_dense(const Extension& e);

/// Orbit of the ideal under the ambient multiplication algebra: least
/// subspace containing the ideal and stable under every inner map of Q.
/// Stability under the twist is asserted.  Whether the orbit is a Hom-ideal
/// of Q is checked and reported through `hom_ideal_out`; it is not assumed.
Subspace operator_orbit(const Extension& e, const Subspace& ideal,
                        bool* hom_ideal_out = nullptr);

/// L semiprime and its multiplication algebra semiprime.  When both hold,
/// semiprimeness of the non-unital envelope (an ideal of the multiplication
/// algebra) follows and is asserted.
Verdict is_multiplicatively_semiprime(const HomLieAlgebra& L, Mode mode,
                                      const Ctx& ctx);

}  // namespace homquot
