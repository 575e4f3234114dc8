#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homquot/context.hpp"
#include "homquot/corpus.hpp"
#include "homquot/envelope.hpp"
#include "homquot/json_io.hpp"
#include "homquot/maxq.hpp"
#include "homquot/props.hpp"
#include "homquot/quotients.hpp"

namespace homquot {

/// What a check needs from an instance.  Algebra checks run on the
/// instance's algebra (the ambient one when an extension is attached);
/// Extension and ExtensionIdeal checks require the attached pair, the
/// latter quantifying internally over the ideal lattice of the subalgebra.
enum class Shape { Algebra, Extension, ExtensionIdeal };

const char* shape_name(Shape s);

enum class Outcome { Pass, Fail, NotApplicable, Unknown };

const char* outcome_name(Outcome o);

/// One check on one instance.  `detail` names the precondition verdict
/// behind a NotApplicable, the undecided quantity behind an Unknown, and
/// the broken clause behind a Fail.  `witness` is present exactly on Fail
/// and contains the serialized instance plus the refuting data; replaying
/// the check from that document alone must fail again.
struct CheckResult {
  Outcome outcome = Outcome::Unknown;
  std::string detail;
  std::optional<Json> witness;
};

/// Per-instance scratchpad shared by every check that runs against the
/// same instance: predicate verdicts, lattices and operator envelopes are
/// computed once and reused.  Accessors taking a Ctx compute lazily; the
/// ones that can blow an enumeration cap store an Unknown verdict instead
/// of throwing, so a capped precondition reads as N.A., not as an error.
struct EvalCache {
  const CorpusInstance& inst;

  explicit EvalCache(const CorpusInstance& i) : inst(i) {}

  const HomLieAlgebra& algebra() const { return inst.algebra; }
  bool has_extension() const { return inst.extension.has_value(); }
  const Extension& ext() const;

  // verdicts and ideal lattice of the instance algebra (ambient Q)
  const Verdict& nondegenerate_top(const Ctx& ctx);
  const Verdict& semiprime_top(const Ctx& ctx);
  const Verdict& prime_top(const Ctx& ctx);
  const Verdict& mult_semiprime_top(const Ctx& ctx);
  const IdealLattice& lattice_top(const Ctx& ctx);

  // the same for the subalgebra L of an extension instance
  const Verdict& semiprime_sub(const Ctx& ctx);
  const Verdict& prime_sub(const Ctx& ctx);
  const Verdict& mult_semiprime_sub(const Ctx& ctx);
  const IdealLattice& lattice_sub(const Ctx& ctx);

  // extension predicates, exhaustive over finite fields, derived over Q
  const Verdict& weak(const Ctx& ctx);
  const Verdict& quotient(const Ctx& ctx);
  const Verdict& absorbed(const Ctx& ctx);
  const Verdict& dense(const Ctx& ctx);

  // operator algebras over the ambient space
  const OperatorAlgebra& env_top(const Ctx& ctx);   // A(Q)
  const OperatorAlgebra& env_sub(const Ctx& ctx);   // A_Q(L)
  const OperatorAlgebra& env_a0(const Ctx& ctx);    // invariant part A_0
  const OperatorAlgebra& mult_top(const Ctx& ctx);  // M(Q)

  // maximal quotients of the instance algebra; `error` carries the reason
  // when construction failed instead of the structure
  struct MaxqSlot {
    std::optional<MaxQuotients> built;
    std::string error;
  };
  const MaxqSlot& maxq(const Ctx& ctx);

 private:
  std::optional<Verdict> nondegenerate_top_, semiprime_top_, prime_top_,
      mult_semiprime_top_, semiprime_sub_, prime_sub_, mult_semiprime_sub_,
      weak_, quotient_, absorbed_, dense_;
  std::optional<IdealLattice> lattice_top_, lattice_sub_;
  std::optional<OperatorAlgebra> env_top_, env_sub_, env_a0_;
  std::optional<OperatorAlgebra> mult_top_;
  std::optional<MaxqSlot> maxq_;
};

/// An executable numbered statement.  `anchor` is the literal quote it
/// certifies; `notes` documents quantifier ranges and deliberate
/// restrictions (monomial length caps, basis-only scans).  `precondition`
/// returns the N.A. reason when the hypotheses are not exhaustively
/// established (False or Unknown both block, and the reason says which);
/// `property` runs only past that gate.
struct PropertyCheck {
  std::string id;
  std::string anchor;
  std::string notes;
  Shape shape;
  std::function<std::optional<std::string>(EvalCache&, const Ctx&)>
      precondition;
  std::function<CheckResult(EvalCache&, const Ctx&)> property;
};

/// All checks, in statement order.  Ids: R2.9, P2.10, P2.11, P3.1, P3.3,
/// P3.6, P3.8, L3.9, T3.10, P3.11, P3.13, T4.4, L4.5, P4.6, P4.8,
/// L5.1-L5.6, C5.7, L5.8, P5.9, T5.11, R5.12, L6.1, L6.2, C6.3, C6.4,
/// L6.5, P6.7, C6.8.
const std::vector<PropertyCheck>& check_registry();

/// Lookup by id; throws Error on an unknown id.
const PropertyCheck& find_check(const std::string& id);

/// Evaluates one check against a prepared cache.  Shape mismatches throw
/// PreconditionFailed.  Cap overruns during the precondition read as
/// NotApplicable and during the property as Unknown; any other library
/// error counts as Fail and is surfaced, never swallowed.
CheckResult evaluate_check(const PropertyCheck& c, EvalCache& ev,
                           const Ctx& ctx);

/// One-shot: build the cache, find the check, evaluate.
CheckResult run_check(const std::string& id, const CorpusInstance& inst,
                      const Ctx& ctx);

struct CheckRow {
  std::string id;
  std::string anchor;
  Shape shape = Shape::Algebra;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t unknown = 0;
  // reason string → number of instances skipped or undecided for it
  std::map<std::string, std::size_t> na_reasons;
  std::vector<Json> failures;

  std::size_t evaluated() const {
    return pass + fail + not_applicable + unknown;
  }
};

struct HarnessReport {
  std::vector<CheckRow> rows;
  Json fingerprint;
  std::size_t instances = 0;

  std::size_t total_fail() const;
  Json to_json() const;
};

/// Identity of a corpus: instance count, the (strategy, seed, field, dims)
/// sources with multiplicities, and a digest of the serialized instances.
Json corpus_fingerprint(const std::vector<CorpusInstance>& corpus);

/// Runs every registry check (or just the ids in `filter`) over the
/// corpus.  Instances whose shape does not fit a check do not enter that
/// row's counts.  Work is split across ctx.jobs threads by instance; the
/// merged report is byte-identical for any job count.  Unknown filter ids
/// throw Error.
HarnessReport run_suite(const std::vector<CorpusInstance>& corpus,
                        const std::vector<std::string>& filter,
                        const Ctx& ctx);

/// Replays the check recorded in a failure document against the instance
/// serialized inside it.  Used to validate that stored witnesses are
/// self-contained.
CheckResult reproduce_failure(const Json& failure, const Ctx& ctx);

}  // namespace homquot
