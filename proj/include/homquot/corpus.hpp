#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homquot/context.hpp"
#include "homquot/homlie.hpp"
#include "homquot/json_io.hpp"
#include "homquot/quotients.hpp"

namespace homquot {

/// How an algebra is manufactured.  Every strategy emits instances that are
/// Hom-Lie by construction and re-verified before they leave generate().
enum class Strategy {
  LieWithIdentityTwist,
  LieWithScalarTwist,
  LieWithCentroidTwist,
  CentralDegenerate,
  RejectionSampled,
};

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct GeneratorSpec {
  Strategy strategy = Strategy::LieWithIdentityTwist;
  FieldSpec field = FieldSpec::rationals();
  std::size_t dim = 3;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Deterministic: the output is a pure function of the spec, and identical
/// specs serialize to bit-identical JSON.  RejectionSampled is only budgeted
/// for dim <= 3 over GF(2); anything else is refused up front.
std::vector<HomLieAlgebra> generate(const GeneratorSpec& spec);

/// One corpus entry: an algebra, optionally a distinguished extension inside
/// it, and the expected verdicts acceptance tests pin down.
struct CorpusInstance {
  std::string name;
  std::string strategy;
  std::uint64_t seed;
  HomLieAlgebra algebra;
  std::optional<Extension> extension;
  std::map<std::string, std::string> expected;
};

/// The named presets: the canonical degenerate four-dimensional table, small
/// classics over Q and prime fields, and the extensions exercised throughout
/// the test suite.  Expected-verdict metadata rides along.
std::vector<CorpusInstance> curated();

/// Deterministic battery of small extensions over GF(2)/GF(3) with ambient
/// dim <= 4: for each generated algebra, every Hom-subalgebra found in the
/// subspace lattice yields one extension (strided down to a handful per
/// algebra so no single algebra dominates).  At least 200 instances.
std::vector<CorpusInstance> extension_battery();

/// curated() + extension_battery(); what `gen --preset shipped` writes.
std::vector<CorpusInstance> shipped_corpus();

/// Every subspace of F^n, canonically ordered.  Finite fields only; throws
/// EnumerationTooLarge past ctx.max_lattice.
std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t n,
                                    const Ctx& ctx);

/// The subspaces closed under both the bracket and the twist.
std::vector<Subspace> hom_subalgebras(const HomLieAlgebra& L, const Ctx& ctx);

/// Exhaustive scan of every (bracket, alpha) table at this dimension over
/// GF(2), dim <= 3.  Counts how many tables are Hom-Lie, how many of those
/// are nondegenerate with Ann = 0, and how many fall outside the
/// Lie-with-centroid-twist construction; stores one outside witness if any
/// exists.  This measures how thin the variety is and settles empirically
/// whether the construction strategies cover the annihilator-free instances.
struct CensusReport {
  std::uint64_t tables_scanned = 0;
  std::uint64_t hom_lie = 0;
  std::uint64_t classical_lie = 0;
  std::uint64_t ann_zero = 0;
  std::uint64_t centroid_twisted_lie = 0;  ///< Lie bracket and alpha in its centroid
  std::uint64_t ann_zero_outside = 0;      ///< Ann = 0 but not centroid-twisted-Lie
  std::optional<Json> outside_witness;
};

CensusReport rejection_census(const FieldSpec& f, std::size_t dim,
                              const Ctx& ctx);

/// corpus/<name>.alg.json (+ .ext.json when present) + manifest.json.
void write_corpus(const std::string& dir,
                  const std::vector<CorpusInstance>& instances);
std::vector<CorpusInstance> load_corpus(const std::string& dir);
Json manifest_json(const std::vector<CorpusInstance>& instances);

}  // namespace homquot
