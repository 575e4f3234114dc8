#pragma once

#include "homquot/context.hpp"
#include "homquot/homlie.hpp"
#include "homquot/verdict.hpp"

namespace homquot {

/// Every Hom-ideal of a finite-field algebra, in canonical order.  Complete
/// because every ideal is the (finite) sum of the principal ideals of its
/// nonzero members, and the list is closed under pairwise sum.
struct IdealLattice {
  std::vector<Subspace> ideals;
  std::vector<bool> essential_flags;
  std::string generated_from;

  std::size_t size() const { return ideals.size(); }
};

IdealLattice ideal_lattice(const HomLieAlgebra& L, const Ctx& ctx);

/// span{[a, α(b)] : a in A, b in B}.
Subspace bracket_span(const HomLieAlgebra& L, const Subspace& a,
                      const Subspace& b);

Verdict is_essential(const HomLieAlgebra& L, const Subspace& ideal, Mode mode,
                     const Ctx& ctx);

Verdict is_nondegenerate(const HomLieAlgebra& L, Mode mode, const Ctx& ctx,
                         const std::vector<Vec>& hints = {});

Verdict is_semiprime(const HomLieAlgebra& L, Mode mode, const Ctx& ctx,
                     const std::vector<Vec>& hints = {});

Verdict is_prime(const HomLieAlgebra& L, Mode mode, const Ctx& ctx,
                 const std::vector<Vec>& hints = {});

/// Intersection of the essential ideals in the full lattice; asserted to be
/// essential itself (finite dimension guarantees the minimum exists).
Subspace minimum_essential_ideal(const HomLieAlgebra& L, const Ctx& ctx);

/// I^1 = I, I^k = span[I^{k-1}, α(I)].  Each power is re-checked to be a
/// Hom-ideal.
Subspace ideal_power(const HomLieAlgebra& L, const Subspace& ideal,
                     std::size_t k);

}  // namespace homquot
