#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "homquot/envelope.hpp"
#include "homquot/homlie.hpp"
#include "homquot/maxq.hpp"
#include "homquot/quotients.hpp"
#include "homquot/verdict.hpp"

namespace homquot {

using Json = nlohmann::json;

// All scalars travel as strings so rational values stay exact; keys are
// emitted sorted, making every serialization byte-deterministic.

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldSpec& f, const Json& j);

/// Row-major list of rows of scalar strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const Json& j);

/// RREF basis rows; parsing re-canonicalizes and insists nothing collapses.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldSpec& f, std::size_t ambient,
                            const Json& j);

/// {"field", "dim", "bracket": [{"i","j","value"}...], "alpha"}; only
/// nonzero brackets with i < j are listed, in lexicographic order.
Json algebra_to_json(const HomLieAlgebra& L);
/// Parses and re-verifies the Hom axioms (throws PreconditionFailed if they
/// fail); pass verify = false to inspect raw structures, e.g. for axiom
/// reports on candidate input.
HomLieAlgebra algebra_from_json(const Json& j, bool verify = true);

/// {"ambient": <algebra>, "subalgebra_basis": [[...]]}.
Json extension_to_json(const Extension& e);
Extension extension_from_json(const Json& j);

/// Carrier algebra fields plus "phi" and "i_min_basis".
Json maxq_to_json(const MaxQuotients& m);

Json operator_algebra_to_json(const OperatorAlgebra& a);
OperatorAlgebra operator_algebra_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

Json axiom_report_to_json(const AxiomReport& r);

/// Canonical dump: two-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace homquot
