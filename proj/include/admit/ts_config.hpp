#pragma once

#include <optional>
#include <string>
#include <vector>

#include "admit/duality.hpp"

namespace admit {

// A substructure X of the s-th power of the alter ego with a surjective
// morphism gamma from the power onto X and an embedding eta of D(M) into X.
struct TSConfiguration {
  std::size_t s = 0;
  std::vector<Element> points;  // X as a subset of the power
  FiniteStructure x;
  StructMorphism gamma;
  StructMorphism eta;
};

struct TSVerification {
  bool ok = true;
  std::string violation;
};

TSVerification verify_ts_configuration(TSConfiguration const& cfg,
                                       AlterEgo const& ego);

// Completes a configuration from a point set of the power, searching for
// gamma and eta. Nothing when either does not exist or the set is not a
// substructure.
std::optional<TSConfiguration> configuration_on(
    AlterEgo const& ego, std::size_t s, std::vector<Element> points,
    FiniteStructure const* dual_m = nullptr,
    FiniteStructure const* power = nullptr);

struct TSSearchStats {
  std::size_t substructures = 0;    // closed sets visited
  std::size_t iso_classes = 0;      // tested after deduplication
  std::size_t surjection_tests = 0;
};

// Least-size configuration, ties broken by the sorted point set. Candidates
// are the substructures of the power containing an embedded copy of D(M),
// tried size by size up to size_cap points (0 means the whole power), one
// per isomorphism class. Throws SearchExhausted when none qualifies.
TSConfiguration search_ts_configuration(AlterEgo const& ego, std::size_t s,
                                        std::size_t size_cap = 0,
                                        TSSearchStats* stats = nullptr);

struct TSMResult {
  FiniteStructure dual_m;
  TSConfiguration config;
  bool from_hint = false;
  SubstructureLattice lattice;
  std::vector<std::size_t> maximal;  // indices into lattice.members
  bool sweep_skipped = false;
  std::vector<std::size_t> survivors;  // indices into lattice.members
  std::vector<MorphismAlgebra> algebras;
  TSSearchStats search;
};

// Runs the whole pipeline: compatibility, generator count, D(M), a
// configuration (from the hint's point labels when given, else searched),
// the X-substructure lattice of X, its maximal join-irreducibles, the
// morphic-image sweep and E of the survivors.
TSMResult test_spaces_method(AlterEgo const& ego, std::size_t s,
                             FiniteStructure const* hint = nullptr,
                             std::size_t size_cap = 0);

}  // namespace admit
