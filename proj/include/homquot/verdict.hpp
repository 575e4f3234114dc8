#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homquot/exalg.hpp"

namespace homquot {

enum class Tri { False = 0, True = 1, Unknown = 2 };

enum class Method { Exhaustive, DerivedCriterion, WitnessSet, Structural };

/// Machine-checkable certificate attached to a verdict.  Everything a
/// checker needs to re-evaluate the claim: named vectors (witness elements,
/// defects), named subspaces (offending ideals), and basis-index tuples.
struct Witness {
  std::string kind;
  std::map<std::string, Vec> vectors;
  std::map<std::string, Subspace> subspaces;
  std::vector<std::size_t> indices;
};

/// Three-valued certified answer.  False always carries a witness that
/// re-verifies; Unknown only arises over infinite fields or behind a cap.
struct Verdict {
  Tri value = Tri::Unknown;
  Method method = Method::Structural;
  std::optional<Witness> witness;
  std::string note;

  bool is_true() const { return value == Tri::True; }
  bool is_false() const { return value == Tri::False; }
  bool is_unknown() const { return value == Tri::Unknown; }

  static Verdict yes(Method m, std::string note = "") {
    return Verdict{Tri::True, m, std::nullopt, std::move(note)};
  }
  static Verdict yes_with(Method m, Witness w, std::string note = "") {
    return Verdict{Tri::True, m, std::move(w), std::move(note)};
  }
  static Verdict no(Method m, Witness w, std::string note = "") {
    return Verdict{Tri::False, m, std::move(w), std::move(note)};
  }
  static Verdict unknown(Method m, std::string note) {
    return Verdict{Tri::Unknown, m, std::nullopt, std::move(note)};
  }
};

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::DerivedCriterion: return "derived";
    case Method::WitnessSet: return "witness-set";
    default: return "structural";
  }
}

/// Requested decision mode for predicate evaluation; verdicts record the
/// method actually used.
enum class Mode { Auto, Exhaustive, Derived, Witness };

}  // namespace homquot
