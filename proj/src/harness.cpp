#include "homquot/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "homquot/errors.hpp"

namespace homquot {

namespace {

Mode mode_for(const FieldSpec& f) {
  return f.is_rational() ? Mode::Derived : Mode::Exhaustive;
}

/// Predicate evaluation that reads a blown cap as Unknown instead of
/// unwinding, so a capped hypothesis surfaces as N.A. with its reason.
template <typename Fn>
Verdict guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const EnumerationTooLarge& e) {
    return Verdict::unknown(Method::Exhaustive, e.what());
  } catch (const CapExceeded& e) {
    return Verdict::unknown(Method::Exhaustive, e.what());
  } catch (const UnsupportedMode& e) {
    return Verdict::unknown(Method::Structural, e.what());
  }
}

CheckResult passed() { return CheckResult{Outcome::Pass, "", std::nullopt}; }

CheckResult undecided(std::string detail) {
  return CheckResult{Outcome::Unknown, std::move(detail), std::nullopt};
}

CheckResult failed(std::string detail, Json certificate) {
  return CheckResult{Outcome::Fail, std::move(detail), std::move(certificate)};
}

std::string tri_phrase(const char* name, const Verdict& v) {
  return std::string("precondition ") + name + " is " +
         (v.is_false() ? "False" : "Unknown");
}

/// nullopt when the verdict is exhaustively True, else the N.A. reason.
std::optional<std::string> gate(const Verdict& v, const char* name) {
  if (v.is_true()) return std::nullopt;
  return tri_phrase(name, v);
}

std::optional<std::string> need_finite(const EvalCache& ev, const char* what) {
  if (!ev.algebra().field().is_rational()) return std::nullopt;
  return std::string("field is rational: ") + what + " unavailable";
}

Scalar dot(const FieldSpec& f, const Vec& a, const Vec& b) {
  Scalar s = Scalar::zero(f);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

Json instance_json(const CorpusInstance& inst) {
  Json j;
  j["name"] = inst.name;
  j["algebra"] = algebra_to_json(inst.algebra);
  if (inst.extension) j["extension"] = extension_to_json(*inst.extension);
  return j;
}

/// Rows of a subalgebra-coordinate subspace pushed into ambient
/// coordinates.
Subspace to_ambient_space(const Extension& e, const Subspace& s) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i)
    rows.push_back(e.to_ambient(s.basis_row(i)));
  return Subspace::from_vectors(e.ambient.field(), e.ambient_dim(), rows);
}

/// Non-unital product closure of {ad_x : x over a basis of gens}.
OperatorAlgebra ads_closure(const HomLieAlgebra& Q, const Subspace& gens) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < gens.dim(); ++i)
    mats.push_back(Q.ad(gens.basis_row(i)));
  return operator_closure(Q.field(), Q.dim(), mats, false);
}

/// {x : [α(x), r] = 0 for r over the rows of s}.
Subspace twisted_killers(const HomLieAlgebra& Q, const Subspace& s) {
  Matrix stack(Q.field(), 0, Q.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    stack = stack.vstack(Q.bracket_right(s.basis_row(i)) * Q.alpha());
  return kernel(stack);
}

/// {q : [α(q), s] ⊆ target}, all in ambient coordinates.
Subspace pushing_space(const HomLieAlgebra& Q, const Subspace& s,
                       const Subspace& target) {
  Matrix cond = target.conditions();
  Matrix stack(Q.field(), 0, Q.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    stack = stack.vstack(cond * (Q.bracket_right(s.basis_row(i)) * Q.alpha()));
  return kernel(stack);
}

/// Whether [a', b'] ⊆ target where a' and b' are the rows of a and b with
/// the twist applied on the side selected by the flags.
bool bracket_into(const HomLieAlgebra& Q, const Subspace& a, bool twist_a,
                  const Subspace& b, bool twist_b, const Subspace& target) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec x = a.basis_row(i);
    if (twist_a) x = Q.twist(x);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vec y = b.basis_row(j);
      if (twist_b) y = Q.twist(y);
      if (!target.member(Q.bracket(x, y))) return false;
    }
  }
  return true;
}

/// Coefficient vectors c with Σ c_k·basis_k vanishing on every row of s.
Subspace operator_killers(const OperatorAlgebra& a, const Subspace& s) {
  const FieldSpec& f = a.field;
  std::size_t n = a.ambient_dim;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::vector<Vec> images;
    for (const Matrix& m : a.basis) images.push_back(m.apply(s.basis_row(i)));
    for (std::size_t r = 0; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(images[k][r]);
      rows.push_back(row);
    }
  }
  Matrix stack = Matrix::from_rows(f, rows, a.dim());
  return kernel(stack);
}

std::vector<Matrix> unflatten(const FieldSpec& f, std::size_t n,
                              const Subspace& flat_span) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < flat_span.dim(); ++i)
    mats.push_back(Matrix::from_flat(f, n, n, flat_span.basis_row(i)));
  return mats;
}

Matrix basis_matrix(const Subspace& s) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_row(i));
  return Matrix::from_rows(s.field(), rows, s.ambient_dim());
}

/// Projective representatives plus the zero vector: the statements
/// quantify over all of Q and every quantity involved is invariant under
/// scaling, so this set decides them.
std::vector<Vec> ambient_points(const HomLieAlgebra& Q, const Ctx& ctx) {
  std::vector<Vec> pts = enumerate_projective(Q.field(), Q.dim(), ctx);
  pts.push_back(Vec(Q.dim(), Scalar::zero(Q.field())));
  return pts;
}

std::optional<std::string> maxq_precondition(EvalCache& ev, const Ctx& ctx) {
  const HomLieAlgebra& L = ev.algebra();
  if (L.field().is_rational()) {
    if (rational_semisimple_shortcut(L)) return std::nullopt;
    return std::string(
        "structural route over the rationals does not apply "
        "(twist not the identity or Killing form degenerate)");
  }
  if (auto r = gate(ev.semiprime_top(ctx), "semiprime")) return r;
  std::vector<Vec> im;
  for (std::size_t i = 0; i < L.dim(); ++i)
    im.push_back(L.twist(vec_unit(L.field(), L.dim(), i)));
  Subspace image = Subspace::from_vectors(L.field(), L.dim(), im);
  Verdict ess = guarded(
      [&] { return is_essential(L, image, Mode::Exhaustive, ctx); });
  if (auto r = gate(ess, "α(L) essential")) return r;
  return std::nullopt;
}

std::vector<PropertyCheck> make_registry() {
  std::vector<PropertyCheck> reg;

  auto add = [&reg](std::string id, std::string anchor, std::string notes,
                    Shape shape,
                    std::function<std::optional<std::string>(EvalCache&,
                                                             const Ctx&)> pre,
                    std::function<CheckResult(EvalCache&, const Ctx&)> prop) {
    reg.push_back(PropertyCheck{std::move(id), std::move(anchor),
                                std::move(notes), shape, std::move(pre),
                                std::move(prop)});
  };

  auto no_pre = [](EvalCache&, const Ctx&) -> std::optional<std::string> {
    return std::nullopt;
  };
  auto finite_pre = [](const char* what) {
    return [what](EvalCache& ev, const Ctx&) { return need_finite(ev, what); };
  };

  // ---------------------------------------------------------------- R2.9
  add(
      "R2.9",
      "L nondegenerate ⇒ L semiprime ⇒ Ann(L) = {0}",
      "both implications checked; vacuous when the verdicts are False",
      Shape::Algebra, finite_pre("exhaustive predicate scans"),
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const Verdict& nd = ev.nondegenerate_top(ctx);
        const Verdict& sp = ev.semiprime_top(ctx);
        if (nd.is_unknown()) return undecided("nondegeneracy verdict is Unknown");
        if (sp.is_unknown()) return undecided("semiprimeness verdict is Unknown");
        std::size_t ann = annihilator(L, L.full_subspace()).dim();
        Json cert;
        cert["nondegenerate"] = nd.is_true();
        cert["semiprime"] = sp.is_true();
        cert["ann_dim"] = ann;
        if (nd.is_true() && !sp.is_true())
          return failed("nondegenerate but not semiprime", cert);
        if (sp.is_true() && ann != 0)
          return failed("semiprime but Ann(L) nonzero", cert);
        return passed();
      });

  // --------------------------------------------------------------- P2.10
  add(
      "P2.10",
      "If Ann_L(I) = {0}, then I is essential. If L is semiprime, then "
      "I ∩ Ann_L(I) = {0} and I is essential if and only if "
      "Ann_L(I) = {0}",
      "I over the full ideal lattice; essentiality read from the lattice, "
      "annihilators computed independently",
      Shape::Algebra, finite_pre("the ideal lattice"),
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const IdealLattice& lat = ev.lattice_top(ctx);
        const Verdict& sp = ev.semiprime_top(ctx);
        if (sp.is_unknown()) return undecided("semiprimeness verdict is Unknown");
        for (std::size_t i = 0; i < lat.size(); ++i) {
          const Subspace& I = lat.ideals[i];
          Subspace ann = annihilator(L, I);
          bool ann_zero = ann.dim() == 0;
          bool ess = lat.essential_flags[i];
          Json cert;
          cert["ideal"] = subspace_to_json(I);
          cert["ann"] = subspace_to_json(ann);
          cert["essential"] = ess;
          if (ann_zero && !ess)
            return failed("Ann_L(I) = 0 but I not essential", cert);
          if (sp.is_true()) {
            if (!I.intersect(ann).is_zero())
              return failed("semiprime but I ∩ Ann_L(I) ≠ 0", cert);
            if (ess != ann_zero)
              return failed("semiprime but essential ⇎ Ann_L(I) = 0", cert);
          }
        }
        return passed();
      });

  // --------------------------------------------------------------- P2.11
  add(
      "P2.11",
      "L is prime if and only if for every nonzero Hom-ideal I of L, "
      "Ann_L(I) = {0}",
      "equivalence: primeness scan against a lattice-wide annihilator scan",
      Shape::Algebra, finite_pre("the ideal lattice"),
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const Verdict& pr = ev.prime_top(ctx);
        if (pr.is_unknown()) return undecided("primeness verdict is Unknown");
        const IdealLattice& lat = ev.lattice_top(ctx);
        bool all_zero = true;
        Json offender;
        for (const Subspace& I : lat.ideals) {
          if (I.is_zero()) continue;
          if (annihilator(L, I).dim() != 0) {
            all_zero = false;
            offender = subspace_to_json(I);
            break;
          }
        }
        if (pr.is_true() == all_zero) return passed();
        Json cert;
        cert["prime"] = pr.is_true();
        cert["every_nonzero_ideal_ann_zero"] = all_zero;
        if (!all_zero) cert["ideal"] = offender;
        return failed("primeness disagrees with the annihilator scan", cert);
      });

  // ---------------------------------------------------------------- P3.1
  add(
      "P3.1",
      "(L : q) is a Hom-ideal of L. Moreover, it's maximal among the "
      "Hom-ideals I of L such that [I, α(q)] ⊆ L",
      "q over projective points of Q plus zero; maximality against the "
      "full ideal lattice of L",
      Shape::Extension, finite_pre("the q scan and the ideal lattice"),
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const HomLieAlgebra& Q = e.ambient;
        const IdealLattice& lat = ev.lattice_sub(ctx);
        for (const Vec& q : ambient_points(Q, ctx)) {
          DenominatorData dd = denominator_ideal(e, q);
          Json cert;
          cert["q"] = vec_to_json(q);
          cert["colon"] = subspace_to_json(dd.colon);
          if (!is_hom_ideal(e.sub, dd.colon).is_true())
            return failed("(L : q) is not a Hom-ideal", cert);
          Vec aq = Q.twist(q);
          for (const Subspace& I : lat.ideals) {
            Subspace iamb = to_ambient_space(e, I);
            bool pushes = true;
            for (std::size_t i = 0; i < iamb.dim() && pushes; ++i)
              pushes = e.sub_space.member(Q.bracket(iamb.basis_row(i), aq));
            if (pushes && !dd.colon.contains(I)) {
              cert["ideal"] = subspace_to_json(I);
              return failed("ideal with [I, α(q)] ⊆ L escapes (L : q)", cert);
            }
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- P3.3
  add(
      "P3.3",
      "If Ann(L) = {0}, then L is an algebra of quotients of itself. If Q "
      "is an algebra of quotients of L, then Ann_Q(L) = Ann(L) = {0}",
      "clause one runs on the self-extension of L when its annihilator "
      "vanishes",
      Shape::Extension, finite_pre("exhaustive quotient scans"),
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        std::size_t ann_l = annihilator(e.sub, e.sub.full_subspace()).dim();
        if (ann_l == 0) {
          Verdict self =
              is_quotient_algebra(self_extension(e.sub), Mode::Exhaustive, ctx);
          if (self.is_unknown())
            return undecided("self-quotient verdict is Unknown");
          if (!self.is_true()) {
            Json cert;
            cert["self_quotient"] = verdict_to_json(self);
            return failed("Ann(L) = 0 but L not a quotient algebra of itself",
                          cert);
          }
        }
        const Verdict& qv = ev.quotient(ctx);
        if (qv.is_unknown()) return undecided("quotient verdict is Unknown");
        if (qv.is_true()) {
          std::size_t ann_q_l = annihilator(e.ambient, e.sub_space).dim();
          if (ann_q_l != 0 || ann_l != 0) {
            Json cert;
            cert["ann_dim"] = ann_l;
            cert["ann_Q_L_dim"] = ann_q_l;
            return failed("quotient algebra with nonzero annihilator", cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- P3.6
  add(
      "P3.6",
      "If I is a nonzero Hom-ideal of Q, then I ∩ L is a nonzero Hom-ideal "
      "of L. If L is semiprime(prime), so is Q",
      "I over the ideal lattice of Q",
      Shape::Extension,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice of Q")) return r;
        return gate(ev.weak(ctx), "weak algebra of quotients");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const IdealLattice& lat = ev.lattice_top(ctx);
        for (const Subspace& I : lat.ideals) {
          if (I.is_zero()) continue;
          Subspace meet = I.intersect(e.sub_space);
          Json cert;
          cert["ideal"] = subspace_to_json(I);
          cert["meet"] = subspace_to_json(meet);
          if (meet.is_zero())
            return failed("nonzero ideal of Q meets L trivially", cert);
          std::vector<Vec> rows;
          for (std::size_t i = 0; i < meet.dim(); ++i)
            rows.push_back(e.to_sub(meet.basis_row(i)));
          Subspace meet_sub =
              Subspace::from_vectors(e.sub.field(), e.sub_dim(), rows);
          if (!is_hom_ideal(e.sub, meet_sub).is_true())
            return failed("I ∩ L is not a Hom-ideal of L", cert);
        }
        const Verdict& sp_l = ev.semiprime_sub(ctx);
        const Verdict& pr_l = ev.prime_sub(ctx);
        if (sp_l.is_unknown())
          return undecided("semiprimeness of L is Unknown");
        if (pr_l.is_unknown()) return undecided("primeness of L is Unknown");
        if (sp_l.is_true()) {
          const Verdict& sp_q = ev.semiprime_top(ctx);
          if (sp_q.is_unknown())
            return undecided("semiprimeness of Q is Unknown");
          if (!sp_q.is_true())
            return failed("L semiprime but Q not semiprime",
                          Json{{"ambient_verdict", verdict_to_json(sp_q)}});
        }
        if (pr_l.is_true()) {
          const Verdict& pr_q = ev.prime_top(ctx);
          if (pr_q.is_unknown()) return undecided("primeness of Q is Unknown");
          if (!pr_q.is_true())
            return failed("L prime but Q not prime",
                          Json{{"ambient_verdict", verdict_to_json(pr_q)}});
        }
        return passed();
      });

  // ---------------------------------------------------------------- P3.8
  add(
      "P3.8",
      "(L : q) is an essential Hom-ideal of L. Moreover, "
      "Ann_L((L : q)) = {0}",
      "q over projective points of Q plus zero; hypotheses via the "
      "exhaustive quotient or ideally-absorbed verdict",
      Shape::Extension,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the q scan")) return r;
        const Verdict& qv = ev.quotient(ctx);
        const Verdict& av = ev.absorbed(ctx);
        if (qv.is_true() || av.is_true()) return std::nullopt;
        return tri_phrase("quotient", qv) + "; " +
               tri_phrase("ideally absorbed", av);
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        for (const Vec& q : ambient_points(e.ambient, ctx)) {
          DenominatorData dd = denominator_ideal(e, q);
          Json cert;
          cert["q"] = vec_to_json(q);
          cert["colon"] = subspace_to_json(dd.colon);
          Verdict ess = is_essential(e.sub, dd.colon, Mode::Exhaustive, ctx);
          if (ess.is_unknown())
            return undecided("essentiality of (L : q) is Unknown");
          if (!ess.is_true()) return failed("(L : q) not essential", cert);
          if (annihilator(e.sub, dd.colon).dim() != 0)
            return failed("Ann_L((L : q)) nonzero", cert);
        }
        return passed();
      });

  // ---------------------------------------------------------------- L3.9
  add(
      "L3.9",
      "Let I be a Hom-ideal of L with Ann_L(I) = {0}. Then there is no "
      "nonzero element x in Q such that [α(x), I] = {0}",
      "I over the lattice ideals with vanishing annihilator",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.weak(ctx), "weak algebra of quotients");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          if (annihilator(e.sub, I).dim() != 0) continue;
          Subspace iamb = to_ambient_space(e, I);
          Subspace K = twisted_killers(e.ambient, iamb);
          if (K.dim() != 0) {
            Json cert;
            cert["ideal"] = subspace_to_json(I);
            cert["x"] = vec_to_json(K.basis_row(0));
            return failed("nonzero x in Q with [α(x), I] = 0", cert);
          }
        }
        return passed();
      });

  // --------------------------------------------------------------- T3.10
  add(
      "T3.10",
      "Q is an algebra of quotients of L if and only if Q is ideally "
      "absorbed into L",
      "both sides decided exhaustively and independently; the derived "
      "criterion must agree whenever it is decisive",
      Shape::Extension, finite_pre("exhaustive quotient scans"),
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const Verdict& qv = ev.quotient(ctx);
        const Verdict& av = ev.absorbed(ctx);
        if (qv.is_unknown()) return undecided("quotient verdict is Unknown");
        if (av.is_unknown())
          return undecided("ideally-absorbed verdict is Unknown");
        Json cert;
        cert["quotient"] = verdict_to_json(qv);
        cert["ideally_absorbed"] = verdict_to_json(av);
        if (qv.is_true() != av.is_true())
          return failed("quotient and ideally-absorbed verdicts disagree",
                        cert);
        Verdict dq = is_quotient_algebra(e, Mode::Derived, ctx);
        if (!dq.is_unknown() && dq.is_true() != qv.is_true()) {
          cert["derived"] = verdict_to_json(dq);
          return failed("derived criterion disagrees with the exhaustive scan",
                        cert);
        }
        return passed();
      });

  // --------------------------------------------------------------- P3.11
  add(
      "P3.11",
      "For every Hom-ideal I of L, Ann_L(I) = {0} implies Ann_Q(I) = {0}",
      "I over the full ideal lattice of L",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.weak(ctx), "weak algebra of quotients");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          if (annihilator(e.sub, I).dim() != 0) continue;
          Subspace iamb = to_ambient_space(e, I);
          Subspace ann_q = annihilator(e.ambient, iamb);
          if (ann_q.dim() != 0) {
            Json cert;
            cert["ideal"] = subspace_to_json(I);
            cert["ann_Q"] = subspace_to_json(ann_q);
            return failed("Ann_L(I) = 0 but Ann_Q(I) ≠ 0", cert);
          }
        }
        return passed();
      });

  // --------------------------------------------------------------- P3.13
  add(
      "P3.13",
      "For every essential Hom-ideal I of L, we have that Q is an algebra "
      "of quotients of I",
      "I over the essential lattice ideals, each as a new extension I ⊆ Q",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        if (auto r = gate(ev.semiprime_sub(ctx), "L semiprime")) return r;
        return gate(ev.quotient(ctx), "quotient");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const IdealLattice& lat = ev.lattice_sub(ctx);
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!lat.essential_flags[i]) continue;
          Subspace iamb = to_ambient_space(e, lat.ideals[i]);
          Extension ei = make_extension(e.ambient, basis_matrix(iamb));
          Verdict v = is_quotient_algebra(ei, Mode::Exhaustive, ctx);
          if (v.is_unknown())
            return undecided("quotient verdict over an ideal is Unknown");
          if (!v.is_true()) {
            Json cert;
            cert["ideal"] = subspace_to_json(lat.ideals[i]);
            cert["verdict"] = verdict_to_json(v);
            return failed("Q is not a quotient algebra of an essential ideal",
                          cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- T4.4
  add(
      "T4.4",
      "Q, with these operations, is a Hom-Lie algebra satisfying "
      "α̃([δ_I, μ_J]) = [α̃(δ_I), μ_J] = [δ_I, α̃(μ_J)] ... and containing "
      "L as a subalgebra, via the injection φ : L → Q, x ↦ (ad_x)_L",
      "carrier axioms re-verified; φ checked injective, twist-intertwining "
      "and bracket-compatible on all basis pairs",
      Shape::Algebra, maxq_precondition,
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const EvalCache::MaxqSlot& slot = ev.maxq(ctx);
        if (!slot.built)
          return failed("carrier construction failed",
                        Json{{"error", slot.error}});
        const MaxQuotients& m = *slot.built;
        if (!m.carrier.check_axioms().hom_ok())
          return failed("carrier fails the Hom axioms", Json::object());
        if (kernel(m.phi).dim() != 0)
          return failed("φ is not injective",
                        Json{{"phi", matrix_to_json(m.phi)}});
        if (!(m.alpha_tilde * m.phi == m.phi * L.alpha()))
          return failed("φ does not intertwine the twists",
                        Json{{"phi", matrix_to_json(m.phi)}});
        for (std::size_t i = 0; i < L.dim(); ++i)
          for (std::size_t j = 0; j < L.dim(); ++j) {
            Vec lhs = m.carrier.bracket(m.phi.col(i), m.phi.col(j));
            Vec rhs = m.phi.apply(L.twist(L.bracket_basis(i, j)));
            if (vec_cmp(lhs, rhs) != 0) {
              Json cert;
              cert["i"] = i;
              cert["j"] = j;
              cert["lhs"] = vec_to_json(lhs);
              cert["rhs"] = vec_to_json(rhs);
              return failed("[φx, φy] ≠ φ(α([x, y])) on a basis pair", cert);
            }
          }
        return passed();
      });

  // ---------------------------------------------------------------- L4.5
  add(
      "L4.5",
      "[δ_I, (ad_x)_L] = (ad_δ(x))_L",
      "δ over the carrier basis, x over the minimum essential ideal basis",
      Shape::Algebra, maxq_precondition,
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const EvalCache::MaxqSlot& slot = ev.maxq(ctx);
        if (!slot.built)
          return failed("carrier construction failed",
                        Json{{"error", slot.error}});
        const MaxQuotients& m = *slot.built;
        const FieldSpec& f = L.field();
        for (std::size_t t = 0; t < m.pder_basis.size(); ++t)
          for (std::size_t j = 0; j < m.i_min.dim(); ++j) {
            Vec x = m.i_min.basis_row(j);
            Vec lhs = m.carrier.bracket(vec_unit(f, m.carrier.dim(), t),
                                        m.phi.apply(x));
            Vec rhs = m.phi.apply(m.pder_basis[t].apply(x));
            if (vec_cmp(lhs, rhs) != 0) {
              Json cert;
              cert["delta_index"] = t;
              cert["x"] = vec_to_json(x);
              cert["lhs"] = vec_to_json(lhs);
              cert["rhs"] = vec_to_json(rhs);
              return failed("[δ, φx] ≠ φ(δ(x))", cert);
            }
          }
        return passed();
      });

  // ---------------------------------------------------------------- P4.6
  add(
      "P4.6",
      "Q(L) is semiprime and an algebra of quotients of L",
      "the carrier is taken as an extension over the φ-image of L",
      Shape::Algebra, maxq_precondition,
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const EvalCache::MaxqSlot& slot = ev.maxq(ctx);
        if (!slot.built)
          return failed("carrier construction failed",
                        Json{{"error", slot.error}});
        const MaxQuotients& m = *slot.built;
        Mode mode = mode_for(m.carrier.field());
        Verdict sp = guarded(
            [&] { return is_semiprime(m.carrier, mode, ctx); });
        if (sp.is_unknown())
          return undecided("carrier semiprimeness verdict is Unknown");
        if (!sp.is_true())
          return failed("carrier is not semiprime",
                        Json{{"verdict", verdict_to_json(sp)}});
        Extension eq = make_extension(m.carrier, m.phi.transpose());
        Verdict qv = is_quotient_algebra(eq, mode, ctx);
        if (qv.is_unknown())
          return undecided("carrier quotient verdict is Unknown");
        if (!qv.is_true())
          return failed("carrier is not a quotient algebra of φ(L)",
                        Json{{"verdict", verdict_to_json(qv)}});
        return passed();
      });

  // ---------------------------------------------------------------- P4.8
  add(
      "P4.8",
      "(1) For any s ∈ S, there exists I ∈ 𝒥_e(L) such that "
      "[α(I), s] ⊆ L. (2) For s ∈ S and I ∈ 𝒥_e(L), [α(I), s] = {0} "
      "implies that s = 0",
      "both overalgebra conditions evaluated on the carrier over φ(L)",
      Shape::Algebra, maxq_precondition,
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const EvalCache::MaxqSlot& slot = ev.maxq(ctx);
        if (!slot.built)
          return failed("carrier construction failed",
                        Json{{"error", slot.error}});
        const MaxQuotients& m = *slot.built;
        Extension eq = make_extension(m.carrier, m.phi.transpose());
        auto [c1, c2] = check_overalgebra_criterion(eq, ctx);
        if (c1.is_unknown() || c2.is_unknown())
          return undecided("an overalgebra condition is Unknown");
        if (c1.is_true() && c2.is_true()) return passed();
        Json cert;
        cert["denominators_exist"] = verdict_to_json(c1);
        cert["no_killed_elements"] = verdict_to_json(c2);
        return failed("an overalgebra condition fails on the carrier", cert);
      });

  // ---------------------------------------------------------------- L5.1
  add(
      "L5.1",
      "Ann_L(I) = {0} if and only if rann_{A(L)}(A_L(I)) = {0}",
      "I over the full ideal lattice; element and operator sides computed "
      "independently",
      Shape::Algebra,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        const HomLieAlgebra& L = ev.algebra();
        (void)ctx;
        if (annihilator(L, L.full_subspace()).dim() != 0)
          return std::string("precondition Ann(L) = {0} is False");
        return std::nullopt;
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const OperatorAlgebra& A = ev.env_top(ctx);
        for (const Subspace& I : ev.lattice_top(ctx).ideals) {
          bool elementwise = annihilator(L, I).dim() == 0;
          OperatorAlgebra AI = ads_closure(L, I);
          bool operatorwise =
              one_sided_annihilator(A, AI.span(), Side::Right).dim() == 0;
          if (elementwise != operatorwise) {
            Json cert;
            cert["ideal"] = subspace_to_json(I);
            cert["ann_zero"] = elementwise;
            cert["rann_zero"] = operatorwise;
            return failed("element and operator annihilators disagree", cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- L5.2
  add(
      "L5.2",
      "ad_x ad_y = ad_{α([x, y])} + ad_y ad_x",
      "all basis pairs; the enclosing one-sided ideal equality is asserted "
      "at every construction of the generated associative ideal",
      Shape::Algebra, no_pre,
      [](EvalCache& ev, const Ctx&) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const FieldSpec& f = L.field();
        std::vector<Matrix> ads;
        for (std::size_t i = 0; i < L.dim(); ++i)
          ads.push_back(L.ad(vec_unit(f, L.dim(), i)));
        for (std::size_t i = 0; i < L.dim(); ++i)
          for (std::size_t j = 0; j < L.dim(); ++j) {
            Matrix lhs = ads[i] * ads[j];
            Matrix rhs =
                L.ad(L.twist(L.bracket_basis(i, j))) + ads[j] * ads[i];
            if (!(lhs == rhs)) {
              Json cert;
              cert["i"] = i;
              cert["j"] = j;
              cert["lhs"] = matrix_to_json(lhs);
              cert["rhs"] = matrix_to_json(rhs);
              return failed("commutation identity fails on a basis pair",
                            cert);
            }
          }
        return passed();
      });

  // ---------------------------------------------------------------- L5.3
  add(
      "L5.3",
      "rann_{A_Q(L)}(Ĩ) = rann_{A_Q(L)}(A_Q(I)); "
      "lann_{A_Q(L)}(Ĩ) = lann_{A_Q(L)}(A_Q(I))",
      "I over the ideal lattice of L; Ĩ built as the generated two-sided "
      "ideal, A_Q(I) as a plain closure",
      Shape::ExtensionIdeal, [](EvalCache& ev, const Ctx&) {
        return need_finite(ev, "the ideal lattice");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const OperatorAlgebra& aql = ev.env_sub(ctx);
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          Subspace iamb = to_ambient_space(e, I);
          OperatorAlgebra itil = assoc_ideal_generated(e, iamb, aql);
          OperatorAlgebra aqi = ads_closure(e.ambient, iamb);
          Subspace r_itil =
              one_sided_annihilator(aql, itil.span(), Side::Right);
          Subspace r_aqi = one_sided_annihilator(aql, aqi.span(), Side::Right);
          Subspace l_itil = one_sided_annihilator(aql, itil.span(), Side::Left);
          Subspace l_aqi = one_sided_annihilator(aql, aqi.span(), Side::Left);
          if (!(r_itil == r_aqi) || !(l_itil == l_aqi)) {
            Json cert;
            cert["ideal"] = subspace_to_json(I);
            cert["rann_equal"] = (r_itil == r_aqi);
            cert["lann_equal"] = (l_itil == l_aqi);
            return failed("annihilators of Ĩ and A_Q(I) disagree", cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- L5.4
  add(
      "L5.4",
      "If Ann_L(I) = {0}, then rann_{A(Q)}(A_Q(I)) = {0}",
      "I over the lattice ideals with vanishing annihilator",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.weak(ctx), "weak algebra of quotients");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const OperatorAlgebra& aq = ev.env_top(ctx);
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          if (annihilator(e.sub, I).dim() != 0) continue;
          Subspace iamb = to_ambient_space(e, I);
          OperatorAlgebra aqi = ads_closure(e.ambient, iamb);
          Subspace r = one_sided_annihilator(aq, aqi.span(), Side::Right);
          if (r.dim() != 0) {
            Json cert;
            cert["ideal"] = subspace_to_json(I);
            cert["rann"] = subspace_to_json(r);
            return failed("A_Q(I) has a nonzero right annihilator in A(Q)",
                          cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- L5.5
  add(
      "L5.5",
      "ad_{x₁}⋯ad_{x_n} ad_y = ad_y ad_{x₁}⋯ad_{x_n} + "
      "Σ ad_{x₁}⋯ad_{α([x_i, y])}⋯ad_{x_n}",
      "factor count n ≤ 3, every argument over the canonical basis",
      Shape::Algebra, no_pre,
      [](EvalCache& ev, const Ctx&) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const FieldSpec& f = L.field();
        std::size_t n = L.dim();
        std::vector<Matrix> ads;
        for (std::size_t i = 0; i < n; ++i)
          ads.push_back(L.ad(vec_unit(f, n, i)));
        std::vector<std::size_t> tuple;
        std::function<CheckResult(std::size_t)> walk =
            [&](std::size_t depth) -> CheckResult {
          if (!tuple.empty()) {
            for (std::size_t y = 0; y < n; ++y) {
              Matrix prod = Matrix::identity(f, n);
              for (std::size_t idx : tuple) prod = prod * ads[idx];
              Matrix lhs = prod * ads[y];
              Matrix rhs = ads[y] * prod;
              for (std::size_t i = 0; i < tuple.size(); ++i) {
                Matrix term = Matrix::identity(f, n);
                for (std::size_t k = 0; k < tuple.size(); ++k) {
                  if (k == i)
                    term = term * L.ad(L.twist(L.bracket_basis(tuple[k], y)));
                  else
                    term = term * ads[tuple[k]];
                }
                rhs = rhs + term;
              }
              if (!(lhs == rhs)) {
                Json cert;
                cert["tuple"] = tuple;
                cert["y"] = y;
                return failed("pull-through identity fails", cert);
              }
            }
          }
          if (depth == 0) return passed();
          for (std::size_t i = 0; i < n; ++i) {
            tuple.push_back(i);
            CheckResult r = walk(depth - 1);
            tuple.pop_back();
            if (r.outcome != Outcome::Pass) return r;
          }
          return passed();
        };
        return walk(3);
      });

  // ---------------------------------------------------------------- L5.6
  add(
      "L5.6",
      "for μ = ad_{q₁}⋯ad_{q_n} with [α(q_i), I] ⊆ L, "
      "μ(Ĩ)ⁿ + (Ĩ)ⁿμ ⊆ A₀",
      "monomial length n ≤ 2; q-factors over a basis of "
      "{q : [α(q), I] ⊆ L}",
      Shape::ExtensionIdeal, [](EvalCache& ev, const Ctx&) {
        return need_finite(ev, "the ideal lattice");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const HomLieAlgebra& Q = e.ambient;
        const FieldSpec& f = Q.field();
        const OperatorAlgebra& a0 = ev.env_a0(ctx);
        const OperatorAlgebra& aql = ev.env_sub(ctx);
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          Subspace iamb = to_ambient_space(e, I);
          Subspace d = pushing_space(Q, iamb, e.sub_space);
          OperatorAlgebra itil = assoc_ideal_generated(e, iamb, aql);
          std::vector<Matrix> pow1 = itil.basis;
          std::vector<Matrix> pow2 = unflatten(
              f, Q.dim(),
              product_span(f, Q.dim(), itil.basis, itil.basis));
          auto check_mu = [&](const Matrix& mu,
                              const std::vector<Matrix>& power,
                              Json head) -> std::optional<CheckResult> {
            for (const Matrix& t : power) {
              if (!a0.contains(mu * t)) {
                head["side"] = "mu-first";
                return failed("μ(Ĩ)ⁿ escapes A₀", head);
              }
              if (!a0.contains(t * mu)) {
                head["side"] = "mu-last";
                return failed("(Ĩ)ⁿμ escapes A₀", head);
              }
            }
            return std::nullopt;
          };
          for (std::size_t i = 0; i < d.dim(); ++i) {
            Json head;
            head["ideal"] = subspace_to_json(I);
            head["q1"] = vec_to_json(d.basis_row(i));
            if (auto r = check_mu(Q.ad(d.basis_row(i)), pow1, head)) return *r;
          }
          for (std::size_t i = 0; i < d.dim(); ++i)
            for (std::size_t j = 0; j < d.dim(); ++j) {
              Json head;
              head["ideal"] = subspace_to_json(I);
              head["q1"] = vec_to_json(d.basis_row(i));
              head["q2"] = vec_to_json(d.basis_row(j));
              Matrix mu = Q.ad(d.basis_row(i)) * Q.ad(d.basis_row(j));
              if (auto r = check_mu(mu, pow2, head)) return *r;
            }
        }
        return passed();
      });

  // ---------------------------------------------------------------- C5.7
  add(
      "C5.7",
      "for μ = ad_{q₁}⋯ad_{q_n} with [α(q_i), I] ⊆ L, μ(Ĩⁿ) ⊆ A₀ and "
      "(Ĩⁿ)μ ⊆ A₀, where I¹ = I and I^k = [I^{k-1}, α(I)]",
      "monomial length n ≤ 2; q-factors over a basis of "
      "{q : [α(q), I] ⊆ L}; Ĩⁿ is the generated ideal of the bracket "
      "power",
      Shape::ExtensionIdeal, [](EvalCache& ev, const Ctx&) {
        return need_finite(ev, "the ideal lattice");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const HomLieAlgebra& Q = e.ambient;
        const OperatorAlgebra& a0 = ev.env_a0(ctx);
        const OperatorAlgebra& aql = ev.env_sub(ctx);
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          Subspace iamb = to_ambient_space(e, I);
          Subspace d = pushing_space(Q, iamb, e.sub_space);
          for (std::size_t len = 1; len <= 2; ++len) {
            Subspace power = ideal_power(e.sub, I, len);
            OperatorAlgebra ptil =
                assoc_ideal_generated(e, to_ambient_space(e, power), aql);
            std::vector<std::vector<std::size_t>> monos;
            if (len == 1) {
              for (std::size_t i = 0; i < d.dim(); ++i) monos.push_back({i});
            } else {
              for (std::size_t i = 0; i < d.dim(); ++i)
                for (std::size_t j = 0; j < d.dim(); ++j)
                  monos.push_back({i, j});
            }
            for (const auto& mono : monos) {
              Matrix mu = Matrix::identity(Q.field(), Q.dim());
              for (std::size_t idx : mono) mu = mu * Q.ad(d.basis_row(idx));
              for (const Matrix& t : ptil.basis) {
                if (a0.contains(mu * t) && a0.contains(t * mu)) continue;
                Json cert;
                cert["ideal"] = subspace_to_json(I);
                cert["power"] = len;
                Json qs = Json::array();
                for (std::size_t idx : mono)
                  qs.push_back(vec_to_json(d.basis_row(idx)));
                cert["q_factors"] = qs;
                return failed("a bracket-power product escapes A₀", cert);
              }
            }
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- L5.8
  add(
      "L5.8",
      "If I is a Hom-ideal with Ann_L(I) = {0}, then Ann_L(I^s) = {0} for "
      "any s ≥ 1. Any finite intersection of ideals with zero "
      "α-annihilator will also have zero α-annihilator",
      "powers s ≤ 3; intersections over lattice pairs",
      Shape::Algebra,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.semiprime_top(ctx), "semiprime");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const HomLieAlgebra& L = ev.algebra();
        const IdealLattice& lat = ev.lattice_top(ctx);
        std::vector<const Subspace*> good;
        for (const Subspace& I : lat.ideals)
          if (annihilator(L, I).dim() == 0) good.push_back(&I);
        for (const Subspace* I : good)
          for (std::size_t s = 2; s <= 3; ++s) {
            Subspace p = ideal_power(L, *I, s);
            if (annihilator(L, p).dim() != 0) {
              Json cert;
              cert["ideal"] = subspace_to_json(*I);
              cert["s"] = s;
              cert["power"] = subspace_to_json(p);
              return failed("a bracket power gains annihilator", cert);
            }
          }
        for (std::size_t a = 0; a < good.size(); ++a)
          for (std::size_t b = a + 1; b < good.size(); ++b) {
            Subspace meet = good[a]->intersect(*good[b]);
            if (annihilator(L, meet).dim() != 0) {
              Json cert;
              cert["first"] = subspace_to_json(*good[a]);
              cert["second"] = subspace_to_json(*good[b]);
              return failed("an intersection gains annihilator", cert);
            }
          }
        return passed();
      });

  // ---------------------------------------------------------------- P5.9
  add(
      "P5.9",
      "Ann(Q) = {0} and, if μ ∈ A(Q)\\{0}, there exists a Hom-ideal I of L "
      "with Ann_L(I) = {0} such that μĨ ⊆ A₀ and {0} ≠ Ĩμ ⊆ A₀. If "
      "μ = ad_q, then we also have μĨ(L) ≠ {0}",
      "μ restricted to ad_q for basis q; the denominator recipe takes "
      "I = (L : q)",
      Shape::Extension,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "exhaustive quotient scans")) return r;
        if (auto r = gate(ev.semiprime_sub(ctx), "L semiprime")) return r;
        return gate(ev.quotient(ctx), "quotient");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const HomLieAlgebra& Q = e.ambient;
        const OperatorAlgebra& a0 = ev.env_a0(ctx);
        const OperatorAlgebra& aql = ev.env_sub(ctx);
        if (annihilator(Q, Q.full_subspace()).dim() != 0)
          return failed("Ann(Q) nonzero on a quotient extension",
                        Json::object());
        for (std::size_t k = 0; k < Q.dim(); ++k) {
          Vec q = vec_unit(Q.field(), Q.dim(), k);
          Matrix mu = Q.ad(q);
          if (mu.is_zero()) continue;
          DenominatorData dd = denominator_ideal(e, q);
          OperatorAlgebra itil =
              assoc_ideal_generated(e, to_ambient_space(e, dd.colon), aql);
          Json cert;
          cert["q"] = vec_to_json(q);
          cert["colon"] = subspace_to_json(dd.colon);
          bool left_nonzero = false;
          for (const Matrix& t : itil.basis) {
            if (!a0.contains(mu * t))
              return failed("μĨ escapes A₀", cert);
            Matrix tm = t * mu;
            if (!a0.contains(tm)) return failed("Ĩμ escapes A₀", cert);
            if (!tm.is_zero()) left_nonzero = true;
          }
          if (!left_nonzero) return failed("Ĩμ = {0}", cert);
          bool moves_l = false;
          for (const Matrix& t : itil.basis) {
            for (std::size_t i = 0; i < e.sub_space.dim() && !moves_l; ++i)
              moves_l = !vec_is_zero(
                  mu.apply(t.apply(e.sub_space.basis_row(i))));
            if (moves_l) break;
          }
          if (!moves_l) return failed("μĨ(L) = {0}", cert);
        }
        return passed();
      });

  // --------------------------------------------------------------- T5.11
  add(
      "T5.11",
      "A(Q) is a left quotient algebra of A₀",
      "the common-denominator certificate settles True; otherwise an "
      "exhaustive scan within caps, degrading to Unknown past them",
      Shape::Extension,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "exhaustive quotient scans")) return r;
        if (auto r = gate(ev.semiprime_sub(ctx), "L semiprime")) return r;
        return gate(ev.quotient(ctx), "quotient");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        Verdict v = is_left_quotient_algebra(ev.env_a0(ctx), ev.env_top(ctx),
                                             Mode::Auto, ctx);
        if (v.is_unknown())
          return undecided("left-quotient verdict is Unknown");
        if (v.is_true()) return passed();
        return failed("A(Q) is not a left quotient algebra of A₀",
                      Json{{"verdict", verdict_to_json(v)}});
      });

  // --------------------------------------------------------------- R5.12
  add(
      "R5.12",
      "A₀Ĩ + Ĩ is a left ideal of A₀ with zero right annihilator",
      "I over the lattice ideals with vanishing annihilator",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.semiprime_sub(ctx), "L semiprime");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const HomLieAlgebra& Q = e.ambient;
        const FieldSpec& f = Q.field();
        const OperatorAlgebra& a0 = ev.env_a0(ctx);
        const OperatorAlgebra& aql = ev.env_sub(ctx);
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          if (annihilator(e.sub, I).dim() != 0) continue;
          OperatorAlgebra itil =
              assoc_ideal_generated(e, to_ambient_space(e, I), aql);
          Subspace j = product_span(f, Q.dim(), a0.basis, itil.basis)
                           .sum(itil.span());
          Json cert;
          cert["ideal"] = subspace_to_json(I);
          for (const Matrix& a : a0.basis)
            for (std::size_t r = 0; r < j.dim(); ++r) {
              Matrix jm = Matrix::from_flat(f, Q.dim(), Q.dim(),
                                            j.basis_row(r));
              if (!j.member((a * jm).flat()))
                return failed("A₀Ĩ + Ĩ is not a left ideal of A₀", cert);
            }
          Subspace r = one_sided_annihilator(a0, j, Side::Right);
          if (r.dim() != 0) {
            cert["rann"] = subspace_to_json(r);
            return failed("A₀Ĩ + Ĩ has a nonzero right annihilator", cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- L6.1
  add(
      "L6.1",
      "L is a dense Hom-subalgebra of Q if and only if "
      "[ μ(L) = {0} for some μ in A(Q) implies μ = 0 ]",
      "equivalence: the multiplication-algebra density test against a "
      "kernel computation inside the non-unital envelope",
      Shape::Extension,
      [](EvalCache& ev, const Ctx&) -> std::optional<std::string> {
        const HomLieAlgebra& Q = ev.ext().ambient;
        if (annihilator(Q, Q.full_subspace()).dim() != 0)
          return std::string("precondition Ann(Q) = {0} is False");
        return std::nullopt;
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        bool lhs = ev.dense(ctx).is_true();
        const OperatorAlgebra& aq = ev.env_top(ctx);
        Subspace killers = operator_killers(aq, e.sub_space);
        bool rhs = killers.dim() == 0;
        if (lhs == rhs) return passed();
        Json cert;
        cert["dense"] = lhs;
        cert["envelope_condition"] = rhs;
        if (!rhs) {
          Matrix mu = aq.element(killers.basis_row(0));
          cert["mu"] = matrix_to_json(mu);
        }
        return failed("density disagrees with the envelope condition", cert);
      });

  // ---------------------------------------------------------------- L6.2
  add(
      "L6.2",
      "If μ is an element of M(Q) such that μ(I) = {0}, then "
      "μ(M(Q)(I)) = {0}",
      "I over the ideal lattice of L; μ over a basis of the vanishing "
      "subspace of M(Q)",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.dense(ctx), "dense extension");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const OperatorAlgebra& mq = ev.mult_top(ctx);
        for (const Subspace& I : ev.lattice_sub(ctx).ideals) {
          Subspace iamb = to_ambient_space(e, I);
          Subspace killers = operator_killers(mq, iamb);
          if (killers.dim() == 0) continue;
          Subspace orbit = operator_orbit(e, iamb);
          for (std::size_t k = 0; k < killers.dim(); ++k) {
            Matrix mu = mq.element(killers.basis_row(k));
            for (std::size_t r = 0; r < orbit.dim(); ++r)
              if (!vec_is_zero(mu.apply(orbit.basis_row(r)))) {
                Json cert;
                cert["ideal"] = subspace_to_json(I);
                cert["mu"] = matrix_to_json(mu);
                cert["orbit"] = subspace_to_json(orbit);
                return failed("an operator kills I but not its orbit", cert);
              }
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- C6.3
  add(
      "C6.3",
      "If [α(I), J] = {0}, then [M(Q)(I), α(M(Q)(J))] = {0}",
      "ordered pairs (I, J) over the ideal lattice of L",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        return gate(ev.dense(ctx), "dense extension");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const HomLieAlgebra& Q = e.ambient;
        const IdealLattice& lat = ev.lattice_sub(ctx);
        std::vector<Subspace> amb, orbits;
        for (const Subspace& I : lat.ideals)
          amb.push_back(to_ambient_space(e, I));
        for (const Subspace& a : amb) orbits.push_back(operator_orbit(e, a));
        Subspace zero = Q.zero_subspace();
        for (std::size_t i = 0; i < amb.size(); ++i)
          for (std::size_t j = 0; j < amb.size(); ++j) {
            if (!bracket_into(Q, amb[i], true, amb[j], false, zero)) continue;
            if (bracket_into(Q, orbits[i], false, orbits[j], true, zero))
              continue;
            Json cert;
            cert["ideal_i"] = subspace_to_json(lat.ideals[i]);
            cert["ideal_j"] = subspace_to_json(lat.ideals[j]);
            cert["orbit_i"] = subspace_to_json(orbits[i]);
            cert["orbit_j"] = subspace_to_json(orbits[j]);
            return failed("orthogonal ideals with non-orthogonal orbits",
                          cert);
          }
        return passed();
      });

  // ---------------------------------------------------------------- C6.4
  add(
      "C6.4",
      "If Q is semiprime, then L is also semiprime",
      "", Shape::Extension,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = gate(ev.dense(ctx), "dense extension")) return r;
        return gate(ev.semiprime_top(ctx), "Q semiprime");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Verdict& sp = ev.semiprime_sub(ctx);
        if (sp.is_unknown())
          return undecided("semiprimeness of L is Unknown");
        if (sp.is_true()) return passed();
        return failed("Q semiprime and dense over a non-semiprime L",
                      Json{{"verdict", verdict_to_json(sp)}});
      });

  // ---------------------------------------------------------------- L6.5
  add(
      "L6.5",
      "If Q is multiplicatively semiprime, then L is also multiplicatively "
      "semiprime",
      "", Shape::Extension,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = gate(ev.dense(ctx), "dense extension")) return r;
        return gate(ev.mult_semiprime_top(ctx), "Q multiplicatively semiprime");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Verdict& ms = ev.mult_semiprime_sub(ctx);
        if (ms.is_unknown())
          return undecided("multiplicative semiprimeness of L is Unknown");
        if (ms.is_true()) return passed();
        return failed("dense extension loses multiplicative semiprimeness",
                      Json{{"verdict", verdict_to_json(ms)}});
      });

  // ---------------------------------------------------------------- P6.7
  add(
      "P6.7",
      "I ⊆ Q is a dense extension for every essential Hom-ideal I of L",
      "I over the essential lattice ideals, each as a new extension",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        if (auto r = gate(ev.dense(ctx), "dense extension")) return r;
        if (auto r = gate(ev.mult_semiprime_top(ctx),
                          "Q multiplicatively semiprime"))
          return r;
        return gate(ev.quotient(ctx), "quotient");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const IdealLattice& lat = ev.lattice_sub(ctx);
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!lat.essential_flags[i]) continue;
          Subspace iamb = to_ambient_space(e, lat.ideals[i]);
          Extension ei = make_extension(e.ambient, basis_matrix(iamb));
          auto [ann, v] = hom_annihilator_dense(ei);
          if (!v.is_true()) {
            Json cert;
            cert["ideal"] = subspace_to_json(lat.ideals[i]);
            cert["annihilating_operators"] = subspace_to_json(ann);
            return failed("an essential ideal is not dense in Q", cert);
          }
        }
        return passed();
      });

  // ---------------------------------------------------------------- C6.8
  add(
      "C6.8",
      "for every essential Hom-ideal I of L, lann_{A(Q)}(Ĩ) = {0}",
      "I over the essential lattice ideals",
      Shape::ExtensionIdeal,
      [](EvalCache& ev, const Ctx& ctx) -> std::optional<std::string> {
        if (auto r = need_finite(ev, "the ideal lattice")) return r;
        if (auto r = gate(ev.dense(ctx), "dense extension")) return r;
        if (auto r = gate(ev.mult_semiprime_top(ctx),
                          "Q multiplicatively semiprime"))
          return r;
        return gate(ev.quotient(ctx), "quotient");
      },
      [](EvalCache& ev, const Ctx& ctx) -> CheckResult {
        const Extension& e = ev.ext();
        const OperatorAlgebra& aq = ev.env_top(ctx);
        const OperatorAlgebra& aql = ev.env_sub(ctx);
        const IdealLattice& lat = ev.lattice_sub(ctx);
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!lat.essential_flags[i]) continue;
          OperatorAlgebra itil = assoc_ideal_generated(
              e, to_ambient_space(e, lat.ideals[i]), aql);
          Subspace l = one_sided_annihilator(aq, itil.span(), Side::Left);
          if (l.dim() != 0) {
            Json cert;
            cert["ideal"] = subspace_to_json(lat.ideals[i]);
            cert["lann"] = subspace_to_json(l);
            return failed("Ĩ of an essential ideal has a left annihilator",
                          cert);
          }
        }
        return passed();
      });

  return reg;
}

bool shape_fits(Shape s, const CorpusInstance& inst) {
  return s == Shape::Algebra || inst.extension.has_value();
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Algebra: return "algebra";
    case Shape::Extension: return "extension";
    default: return "extension+ideal";
  }
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "not_applicable";
    default: return "unknown";
  }
}

const Extension& EvalCache::ext() const {
  if (!inst.extension)
    throw PreconditionFailed("instance '" + inst.name +
                             "' carries no extension");
  return *inst.extension;
}

const Verdict& EvalCache::nondegenerate_top(const Ctx& ctx) {
  if (!nondegenerate_top_)
    nondegenerate_top_ = guarded([&] {
      return is_nondegenerate(inst.algebra, mode_for(inst.algebra.field()),
                              ctx);
    });
  return *nondegenerate_top_;
}

const Verdict& EvalCache::semiprime_top(const Ctx& ctx) {
  if (!semiprime_top_)
    semiprime_top_ = guarded([&] {
      return is_semiprime(inst.algebra, mode_for(inst.algebra.field()), ctx);
    });
  return *semiprime_top_;
}

const Verdict& EvalCache::prime_top(const Ctx& ctx) {
  if (!prime_top_)
    prime_top_ = guarded([&] {
      return is_prime(inst.algebra, mode_for(inst.algebra.field()), ctx);
    });
  return *prime_top_;
}

const Verdict& EvalCache::mult_semiprime_top(const Ctx& ctx) {
  if (!mult_semiprime_top_)
    mult_semiprime_top_ = guarded([&] {
      return is_multiplicatively_semiprime(
          inst.algebra, mode_for(inst.algebra.field()), ctx);
    });
  return *mult_semiprime_top_;
}

const IdealLattice& EvalCache::lattice_top(const Ctx& ctx) {
  if (!lattice_top_) lattice_top_ = ideal_lattice(inst.algebra, ctx);
  return *lattice_top_;
}

const Verdict& EvalCache::semiprime_sub(const Ctx& ctx) {
  if (!semiprime_sub_)
    semiprime_sub_ = guarded([&] {
      return is_semiprime(ext().sub, mode_for(ext().sub.field()), ctx);
    });
  return *semiprime_sub_;
}

const Verdict& EvalCache::prime_sub(const Ctx& ctx) {
  if (!prime_sub_)
    prime_sub_ = guarded([&] {
      return is_prime(ext().sub, mode_for(ext().sub.field()), ctx);
    });
  return *prime_sub_;
}

const Verdict& EvalCache::mult_semiprime_sub(const Ctx& ctx) {
  if (!mult_semiprime_sub_)
    mult_semiprime_sub_ = guarded([&] {
      return is_multiplicatively_semiprime(ext().sub,
                                           mode_for(ext().sub.field()), ctx);
    });
  return *mult_semiprime_sub_;
}

const IdealLattice& EvalCache::lattice_sub(const Ctx& ctx) {
  if (!lattice_sub_) lattice_sub_ = ideal_lattice(ext().sub, ctx);
  return *lattice_sub_;
}

const Verdict& EvalCache::weak(const Ctx& ctx) {
  if (!weak_)
    weak_ = guarded([&] {
      return is_weak_quotient_algebra(ext(), mode_for(ext().sub.field()), ctx);
    });
  return *weak_;
}

const Verdict& EvalCache::quotient(const Ctx& ctx) {
  if (!quotient_)
    quotient_ = guarded([&] {
      return is_quotient_algebra(ext(), mode_for(ext().sub.field()), ctx);
    });
  return *quotient_;
}

const Verdict& EvalCache::absorbed(const Ctx& ctx) {
  if (!absorbed_)
    absorbed_ = guarded([&] {
      return is_ideally_absorbed(ext(), mode_for(ext().sub.field()), ctx);
    });
  return *absorbed_;
}

const Verdict& EvalCache::dense(const Ctx& ctx) {
  (void)ctx;
  if (!dense_) dense_ = hom_annihilator_dense(ext()).second;
  return *dense_;
}

const OperatorAlgebra& EvalCache::env_top(const Ctx& ctx) {
  (void)ctx;
  if (!env_top_) env_top_ = adjoint_envelope(inst.algebra);
  return *env_top_;
}

const OperatorAlgebra& EvalCache::env_sub(const Ctx& ctx) {
  (void)ctx;
  if (!env_sub_) env_sub_ = inner_envelope(ext(), EnvelopeSource::Sub);
  return *env_sub_;
}

const OperatorAlgebra& EvalCache::env_a0(const Ctx& ctx) {
  if (!env_a0_) env_a0_ = invariant_subalgebra_a0(ext(), env_top(ctx));
  return *env_a0_;
}

const OperatorAlgebra& EvalCache::mult_top(const Ctx& ctx) {
  (void)ctx;
  if (!mult_top_) mult_top_ = multiplication_algebra(inst.algebra);
  return *mult_top_;
}

const EvalCache::MaxqSlot& EvalCache::maxq(const Ctx& ctx) {
  if (!maxq_) {
    MaxqSlot s;
    try {
      s.built = build_maximal_quotients(inst.algebra, ctx);
    } catch (const Error& e) {
      s.error = e.what();
    }
    maxq_ = std::move(s);
  }
  return *maxq_;
}

const std::vector<PropertyCheck>& check_registry() {
  static const std::vector<PropertyCheck> reg = make_registry();
  return reg;
}

const PropertyCheck& find_check(const std::string& id) {
  for (const PropertyCheck& c : check_registry())
    if (c.id == id) return c;
  throw Error("unknown check id: " + id);
}

CheckResult evaluate_check(const PropertyCheck& c, EvalCache& ev,
                           const Ctx& ctx) {
  if (!shape_fits(c.shape, ev.inst))
    throw PreconditionFailed("check " + c.id + " needs shape " +
                             shape_name(c.shape) + " but instance '" +
                             ev.inst.name + "' is a bare algebra");
  try {
    if (c.precondition)
      if (auto na = c.precondition(ev, ctx))
        return CheckResult{Outcome::NotApplicable, *na, std::nullopt};
  } catch (const EnumerationTooLarge& e) {
    return CheckResult{Outcome::NotApplicable,
                       std::string("precondition hit a cap: ") + e.what(),
                       std::nullopt};
  } catch (const CapExceeded& e) {
    return CheckResult{Outcome::NotApplicable,
                       std::string("precondition hit a cap: ") + e.what(),
                       std::nullopt};
  } catch (const UnsupportedMode& e) {
    return CheckResult{Outcome::NotApplicable,
                       std::string("precondition unsupported here: ") +
                           e.what(),
                       std::nullopt};
  }
  CheckResult r;
  try {
    r = c.property(ev, ctx);
  } catch (const EnumerationTooLarge& e) {
    return CheckResult{Outcome::Unknown,
                       std::string("enumeration over cap: ") + e.what(),
                       std::nullopt};
  } catch (const CapExceeded& e) {
    return CheckResult{Outcome::Unknown,
                       std::string("enumeration over cap: ") + e.what(),
                       std::nullopt};
  } catch (const UnsupportedMode& e) {
    return CheckResult{Outcome::Unknown,
                       std::string("unsupported here: ") + e.what(),
                       std::nullopt};
  } catch (const Error& e) {
    r = failed(std::string("library error: ") + e.what(),
               Json{{"error", e.what()}});
  }
  if (r.outcome == Outcome::Fail) {
    Json doc;
    doc["check"] = c.id;
    doc["detail"] = r.detail;
    doc["instance"] = instance_json(ev.inst);
    doc["certificate"] = r.witness ? *r.witness : Json::object();
    r.witness = doc;
  }
  return r;
}

CheckResult run_check(const std::string& id, const CorpusInstance& inst,
                      const Ctx& ctx) {
  const PropertyCheck& c = find_check(id);
  EvalCache ev(inst);
  return evaluate_check(c, ev, ctx);
}

std::size_t HarnessReport::total_fail() const {
  std::size_t n = 0;
  for (const CheckRow& r : rows) n += r.fail;
  return n;
}

Json HarnessReport::to_json() const {
  Json j;
  j["fingerprint"] = fingerprint;
  j["instances"] = instances;
  Json rows_j = Json::array();
  std::size_t tp = 0, tf = 0, tn = 0, tu = 0;
  for (const CheckRow& r : rows) {
    Json row;
    row["id"] = r.id;
    row["anchor"] = r.anchor;
    row["shape"] = shape_name(r.shape);
    row["pass"] = r.pass;
    row["fail"] = r.fail;
    row["not_applicable"] = r.not_applicable;
    row["unknown"] = r.unknown;
    Json reasons = Json::object();
    for (const auto& [k, v] : r.na_reasons) reasons[k] = v;
    row["reasons"] = reasons;
    row["failures"] = r.failures;
    rows_j.push_back(row);
    tp += r.pass;
    tf += r.fail;
    tn += r.not_applicable;
    tu += r.unknown;
  }
  j["checks"] = rows_j;
  j["totals"] =
      Json{{"pass", tp}, {"fail", tf}, {"not_applicable", tn}, {"unknown", tu}};
  return j;
}

Json corpus_fingerprint(const std::vector<CorpusInstance>& corpus) {
  std::map<std::string, std::size_t> sources;
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const CorpusInstance& inst : corpus) {
    std::ostringstream key;
    key << inst.strategy << "|seed=" << inst.seed << "|"
        << dump_json(field_to_json(inst.algebra.field()))
        << "|dim=" << inst.algebra.dim();
    if (inst.extension) key << "|sub=" << inst.extension->sub_dim();
    sources[key.str()] += 1;
    mix(inst.name);
    mix(dump_json(algebra_to_json(inst.algebra)));
    if (inst.extension) mix(dump_json(extension_to_json(*inst.extension)));
  }
  Json out;
  out["instances"] = corpus.size();
  Json src = Json::array();
  for (const auto& [k, v] : sources)
    src.push_back(Json{{"source", k}, {"count", v}});
  out["sources"] = src;
  out["digest"] = hex64(h);
  return out;
}

HarnessReport run_suite(const std::vector<CorpusInstance>& corpus,
                        const std::vector<std::string>& filter,
                        const Ctx& ctx) {
  const std::vector<PropertyCheck>& reg = check_registry();
  std::set<std::string> wanted;
  for (const std::string& id : filter) {
    find_check(id);
    wanted.insert(id);
  }
  std::vector<const PropertyCheck*> selected;
  for (const PropertyCheck& c : reg)
    if (wanted.empty() || wanted.count(c.id)) selected.push_back(&c);

  std::vector<std::vector<std::optional<CheckResult>>> grid(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::size_t jobs = ctx.jobs < 1 ? 1 : static_cast<std::size_t>(ctx.jobs);
  if (!corpus.empty()) jobs = std::min(jobs, corpus.size());

  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < corpus.size(); i += jobs) {
      try {
        EvalCache ev(corpus[i]);
        grid[i].resize(selected.size());
        for (std::size_t k = 0; k < selected.size(); ++k)
          if (shape_fits(selected[k]->shape, corpus[i]))
            grid[i][k] = evaluate_check(*selected[k], ev, ctx);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (std::thread& t : pool) t.join();
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  HarnessReport rep;
  rep.instances = corpus.size();
  rep.fingerprint = corpus_fingerprint(corpus);
  for (std::size_t k = 0; k < selected.size(); ++k) {
    CheckRow row;
    row.id = selected[k]->id;
    row.anchor = selected[k]->anchor;
    row.shape = selected[k]->shape;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (grid[i].empty() || !grid[i][k]) continue;
      const CheckResult& r = *grid[i][k];
      switch (r.outcome) {
        case Outcome::Pass:
          row.pass += 1;
          break;
        case Outcome::Fail:
          row.fail += 1;
          if (r.witness) row.failures.push_back(*r.witness);
          break;
        case Outcome::NotApplicable:
          row.not_applicable += 1;
          row.na_reasons[r.detail] += 1;
          break;
        case Outcome::Unknown:
          row.unknown += 1;
          row.na_reasons["unknown: " + r.detail] += 1;
          break;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CheckResult reproduce_failure(const Json& failure, const Ctx& ctx) {
  if (!failure.is_object() || !failure.contains("check") ||
      !failure.contains("instance"))
    throw ParseError("failure document needs 'check' and 'instance'");
  const Json& ij = failure.at("instance");
  std::optional<Extension> ext;
  if (ij.contains("extension")) ext = extension_from_json(ij.at("extension"));
  HomLieAlgebra alg =
      ext ? ext->ambient : algebra_from_json(ij.at("algebra"), true);
  CorpusInstance inst{ij.at("name").get<std::string>(), "replay", 0,
                      std::move(alg), std::move(ext), {}};
  return run_check(failure.at("check").get<std::string>(), inst, ctx);
}

}  // namespace homquot
