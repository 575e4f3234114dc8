#pragma once

#include "homquot/context.hpp"
#include "homquot/homlie.hpp"
#include "homquot/verdict.hpp"

namespace homquot {

/// A verified pair L ⊆ Q: the ambient algebra, the subalgebra span with its
/// canonical (RREF) basis, and L as an algebra in its own right.
struct Extension {
  HomLieAlgebra ambient;   // Q
  Subspace sub_space;      // L inside Q
  HomLieAlgebra sub;       // L with induced structure, basis = sub_space rows
  Matrix embedding;        // dim Q × dim L, columns are the canonical basis

  std::size_t ambient_dim() const { return ambient.dim(); }
  std::size_t sub_dim() const { return sub.dim(); }

  /// L-coordinates → Q-coordinates.
  Vec to_ambient(const Vec& c) const { return embedding.apply(c); }
  /// Q-coordinates → L-coordinates; the vector must lie in L.
  Vec to_sub(const Vec& v) const { return sub_space.coordinates(v); }
};

Extension make_extension(const HomLieAlgebra& ambient, const Matrix& sub_basis);
Extension self_extension(const HomLieAlgebra& L);

/// q together with its closure _L(q) and denominator ideal (L:q).
struct DenominatorData {
  Vec q;          // Q-coordinates
  Subspace lq;    // subspace of Q: span of q and iterated right brackets by L
  Subspace colon; // (L:q) in L-coordinates
};

/// Least subspace of Q containing q and closed under [·, x] for x in L.
Subspace lq_span(const Extension& e, const Vec& q);

/// (L:q) = {x in L : [x, α(_L(q))] ⊆ L}; always a Hom-ideal of L.
DenominatorData denominator_ideal(const Extension& e, const Vec& q);

/// I* = intersection of (L:b) over an ambient basis {b}; contained in every
/// (L:q) because _L(q) sits inside the sum of the _L(b).
Subspace uniform_denominator(const Extension& e);

Verdict is_weak_quotient_algebra(const Extension& e, Mode mode, const Ctx& ctx);

Verdict is_quotient_algebra(
    const Extension& e, Mode mode, const Ctx& ctx,
    const std::vector<std::pair<Vec, Vec>>& hints = {});

Verdict is_ideally_absorbed(const Extension& e, Mode mode, const Ctx& ctx);

}  // namespace homquot
