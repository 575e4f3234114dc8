#include "homquot/props.hpp"

#include "homquot/errors.hpp"

#include <algorithm>
#include <map>

namespace homquot {

namespace {

void require_ideal(const HomLieAlgebra& L, const Subspace& i, const char* op) {
  if (!is_hom_ideal(L, i).is_true())
    throw PreconditionFailed(std::string(op) + ": input subspace is not a Hom-ideal");
}

Mode resolve(const HomLieAlgebra& L, Mode mode, Mode finite_default,
             Mode rational_default) {
  if (mode != Mode::Auto) return mode;
  return L.field().kind() == FieldKind::Prime ? finite_default
                                              : rational_default;
}

}  // namespace

Subspace bracket_span(const HomLieAlgebra& L, const Subspace& a,
                      const Subspace& b) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      vs.push_back(L.bracket(a.basis_row(i), L.twist(b.basis_row(j))));
  return Subspace::from_vectors(L.field(), L.dim(), vs);
}

IdealLattice ideal_lattice(const HomLieAlgebra& L, const Ctx& ctx) {
  require_verified(L, "ideal_lattice");
  if (L.field().kind() != FieldKind::Prime)
    throw UnsupportedMode("ideal_lattice needs a finite field");

  std::vector<Subspace> ideals;
  auto insert = [&](const Subspace& s) {
    auto it = std::lower_bound(
        ideals.begin(), ideals.end(), s,
        [](const Subspace& x, const Subspace& y) { return subspace_cmp(x, y) < 0; });
    if (it != ideals.end() && *it == s) return false;
    if (ideals.size() >= ctx.max_lattice)
      throw CapExceeded("ideal lattice exceeds the configured cap");
    ideals.insert(it, s);
    return true;
  };

  insert(L.zero_subspace());
  std::vector<Vec> pts = enumerate_projective(L.field(), L.dim(), ctx);
  for (const auto& x : pts) insert(ideal_generated(L, {x}));

  // close under pairwise sum and intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = ideals.size();
    for (std::size_t i = 0; i < n && !grew; ++i)
      for (std::size_t j = i + 1; j < n && !grew; ++j) {
        if (insert(ideals[i].sum(ideals[j]))) grew = true;
        if (insert(ideals[i].intersect(ideals[j]))) grew = true;
      }
  }

  IdealLattice lat;
  lat.ideals = std::move(ideals);
  lat.generated_from = "principal closures of " + std::to_string(pts.size()) +
                       " projective points, sum/meet closure";

  // I is essential iff it contains every minimal nonzero ideal: any nonzero
  // ideal J contains a minimal one M, and I ∩ J ⊇ I ∩ M = M ≠ 0.
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
    if (lat.ideals[i].dim() == 0) continue;
    bool is_min = true;
    for (std::size_t j = 0; j < lat.ideals.size() && is_min; ++j) {
      if (j == i || lat.ideals[j].dim() == 0) continue;
      if (lat.ideals[j].dim() < lat.ideals[i].dim() &&
          lat.ideals[i].contains(lat.ideals[j]))
        is_min = false;
    }
    if (is_min) minimal.push_back(i);
  }
  lat.essential_flags.resize(lat.ideals.size());
  for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
    bool ess = true;
    if (lat.ideals[i].dim() == 0 && L.dim() > 0) ess = false;
    for (std::size_t m : minimal)
      if (!lat.ideals[i].contains(lat.ideals[m])) { ess = false; break; }
    lat.essential_flags[i] = ess;
  }
  return lat;
}

Verdict is_essential(const HomLieAlgebra& L, const Subspace& ideal, Mode mode,
                     const Ctx& ctx) {
  require_verified(L, "is_essential");
  require_ideal(L, ideal, "is_essential");

  if (ideal.dim() == 0) {
    if (L.dim() == 0) return Verdict::yes(Method::Structural);
    Witness w;
    w.kind = "missed-ideal";
    w.subspaces.emplace("J", L.full_subspace());
    return Verdict::no(Method::Structural, w);
  }

  Mode m = resolve(L, mode, Mode::Exhaustive, Mode::Witness);
  if (m == Mode::Exhaustive) {
    if (L.field().kind() != FieldKind::Prime)
      throw UnsupportedMode("exhaustive essentiality needs a finite field");
    std::vector<Vec> pts = enumerate_projective(L.field(), L.dim(), ctx);
    auto offends = [&](std::size_t idx) {
      Subspace p = ideal_generated(L, {pts[idx]});
      return ideal.intersect(p).dim() == 0;
    };
    auto hit = least_index_where(pts.size(), ctx.jobs, offends);
    if (!hit) return Verdict::yes(Method::Exhaustive);
    Witness w;
    w.kind = "missed-ideal";
    w.vectors["generator"] = pts[*hit];
    w.subspaces.emplace("J", ideal_generated(L, {pts[*hit]}));
    return Verdict::no(Method::Exhaustive, w);
  }

  // structural route: zero annihilator forces essential; with semiprimeness
  // the converse holds too
  Subspace ann = annihilator(L, ideal);
  if (ann.dim() == 0) return Verdict::yes(Method::Structural);
  Verdict sp = is_semiprime(L, Mode::Auto, ctx);
  if (sp.is_true()) {
    Witness w;
    w.kind = "annihilator-element";
    w.vectors["z"] = ann.basis_row(0);
    w.subspaces.emplace("annihilator", ann);
    return Verdict::no(Method::Structural, w);
  }
  return Verdict::unknown(Method::Structural,
                          "nonzero annihilator but semiprimeness undecided");
}

Verdict is_nondegenerate(const HomLieAlgebra& L, Mode mode, const Ctx& ctx,
                         const std::vector<Vec>& hints) {
  require_verified(L, "is_nondegenerate");
  Mode m = resolve(L, mode, Mode::Exhaustive, Mode::Witness);

  auto square_zero = [&](const Vec& x) {
    Matrix a = L.ad(x);
    return (a * a).is_zero();
  };

  if (m == Mode::Exhaustive) {
    if (L.field().kind() != FieldKind::Prime)
      throw UnsupportedMode("exhaustive nondegeneracy needs a finite field");
    std::vector<Vec> pts = enumerate_projective(L.field(), L.dim(), ctx);
    auto hit = least_index_where(pts.size(), ctx.jobs,
                                 [&](std::size_t i) { return square_zero(pts[i]); });
    if (!hit) return Verdict::yes(Method::Exhaustive);
    Witness w;
    w.kind = "absolute-zero-divisor";
    w.vectors["x"] = pts[*hit];
    return Verdict::no(Method::Exhaustive, w);
  }

  std::vector<Vec> cand = hints;
  for (std::size_t i = 0; i < L.dim(); ++i)
    cand.push_back(vec_unit(L.field(), L.dim(), i));
  for (const auto& x : cand) {
    if (vec_is_zero(x)) continue;
    if (square_zero(x)) {
      Witness w;
      w.kind = "absolute-zero-divisor";
      w.vectors["x"] = x;
      return Verdict::no(Method::WitnessSet, w);
    }
  }
  return Verdict::unknown(Method::WitnessSet,
                          "no witness among basis/supplied vectors");
}

Verdict is_semiprime(const HomLieAlgebra& L, Mode mode, const Ctx& ctx,
                     const std::vector<Vec>& hints) {
  require_verified(L, "is_semiprime");
  Mode m = resolve(L, mode, Mode::Exhaustive, Mode::Witness);

  auto offends = [&](const Vec& x) {
    Subspace p = ideal_generated(L, {x});
    return p.dim() > 0 && bracket_span(L, p, p).dim() == 0;
  };

  if (m == Mode::Exhaustive) {
    if (L.field().kind() != FieldKind::Prime)
      throw UnsupportedMode("exhaustive semiprimeness needs a finite field");
    std::vector<Vec> pts = enumerate_projective(L.field(), L.dim(), ctx);
    auto hit = least_index_where(pts.size(), ctx.jobs,
                                 [&](std::size_t i) { return offends(pts[i]); });
    if (!hit) return Verdict::yes(Method::Exhaustive);
    Witness w;
    w.kind = "degenerate-principal-ideal";
    w.vectors["x"] = pts[*hit];
    w.subspaces.emplace("I", ideal_generated(L, {pts[*hit]}));
    return Verdict::no(Method::Exhaustive, w);
  }

  std::vector<Vec> cand = hints;
  for (std::size_t i = 0; i < L.dim(); ++i)
    cand.push_back(vec_unit(L.field(), L.dim(), i));
  for (const auto& x : cand) {
    if (vec_is_zero(x)) continue;
    if (offends(x)) {
      Witness w;
      w.kind = "degenerate-principal-ideal";
      w.vectors["x"] = x;
      w.subspaces.emplace("I", ideal_generated(L, {x}));
      return Verdict::no(Method::WitnessSet, w);
    }
  }
  return Verdict::unknown(Method::WitnessSet,
                          "no witness among basis/supplied vectors");
}

Verdict is_prime(const HomLieAlgebra& L, Mode mode, const Ctx& ctx,
                 const std::vector<Vec>& hints) {
  require_verified(L, "is_prime");
  Mode m = resolve(L, mode, Mode::Exhaustive, Mode::Witness);

  auto offends = [&](const Vec& x, const Vec& y) {
    Subspace p = ideal_generated(L, {x});
    Subspace r = ideal_generated(L, {y});
    return p.dim() > 0 && r.dim() > 0 && bracket_span(L, p, r).dim() == 0;
  };

  if (m == Mode::Exhaustive) {
    if (L.field().kind() != FieldKind::Prime)
      throw UnsupportedMode("exhaustive primeness needs a finite field");
    std::vector<Vec> pts = enumerate_projective(L.field(), L.dim(), ctx);
    std::size_t n = pts.size();
    auto hit = least_index_where(n * n, ctx.jobs, [&](std::size_t k) {
      return offends(pts[k / n], pts[k % n]);
    });
    if (!hit) return Verdict::yes(Method::Exhaustive);
    Witness w;
    w.kind = "orthogonal-ideal-pair";
    w.vectors["x"] = pts[*hit / n];
    w.vectors["y"] = pts[*hit % n];
    w.subspaces.emplace("I", ideal_generated(L, {pts[*hit / n]}));
    w.subspaces.emplace("J", ideal_generated(L, {pts[*hit % n]}));
    return Verdict::no(Method::Exhaustive, w);
  }

  std::vector<Vec> cand = hints;
  for (std::size_t i = 0; i < L.dim(); ++i)
    cand.push_back(vec_unit(L.field(), L.dim(), i));
  for (const auto& x : cand)
    for (const auto& y : cand) {
      if (vec_is_zero(x) || vec_is_zero(y)) continue;
      if (offends(x, y)) {
        Witness w;
        w.kind = "orthogonal-ideal-pair";
        w.vectors["x"] = x;
        w.vectors["y"] = y;
        w.subspaces.emplace("I", ideal_generated(L, {x}));
        w.subspaces.emplace("J", ideal_generated(L, {y}));
        return Verdict::no(Method::WitnessSet, w);
      }
    }
  return Verdict::unknown(Method::WitnessSet,
                          "no witness among basis/supplied vectors");
}

Subspace minimum_essential_ideal(const HomLieAlgebra& L, const Ctx& ctx) {
  require_verified(L, "minimum_essential_ideal");
  IdealLattice lat = ideal_lattice(L, ctx);
  Subspace meet = L.full_subspace();
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.essential_flags[i]) meet = meet.intersect(lat.ideals[i]);
  Verdict check = is_essential(L, meet, Mode::Exhaustive, ctx);
  if (!check.is_true())
    throw StructureViolation(
        "intersection of essential ideals failed its essentiality check");
  return meet;
}

Subspace ideal_power(const HomLieAlgebra& L, const Subspace& ideal,
                     std::size_t k) {
  require_verified(L, "ideal_power");
  require_ideal(L, ideal, "ideal_power");
  if (k < 1) throw PreconditionFailed("ideal_power needs k >= 1");
  Subspace cur = ideal;
  for (std::size_t step = 2; step <= k; ++step) {
    cur = bracket_span(L, cur, ideal);
    if (!is_hom_ideal(L, cur).is_true())
      throw StructureViolation("ideal power is not a Hom-ideal");
  }
  return cur;
}

}  // namespace homquot
