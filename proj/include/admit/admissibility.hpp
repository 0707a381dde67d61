#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/free_algebra.hpp"
#include "admit/quasivariety.hpp"

namespace admit {

struct Witness {
  std::size_t algebra = 0;  // index into the checked set
  Assignment assignment;
};

struct CheckReport {
  bool valid = true;
  std::optional<Witness> witness;
  std::uint64_t evaluations = 0;  // assignments examined
  double seconds = 0;
  std::string route;  // "direct", "free" or "test"
};

struct CheckOptions {
  // 0 = hardware concurrency. Results do not depend on this.
  unsigned workers = 1;
};

// Ranges over all assignments of the quasi-identity's variables in each
// algebra (odometer over variables by first occurrence, the first variable
// slowest). The witness is the first falsifying assignment in that order,
// in the first algebra that has one.
CheckReport check_validity(GeneratorSet const& k, QuasiIdentity const& q,
                           CheckOptions opts = {});

// Validity in the free algebra, evaluated coordinatewise: an assignment of
// free-algebra elements satisfies an identity iff every coordinate does.
CheckReport check_validity_free(FreeAlgebra const& f, QuasiIdentity const& q,
                                CheckOptions opts = {});

enum class Route { free, test };

// Admissibility in ISP(M) for quasi-identities in at most s variables, via
// the free algebra on s generators or a test set generating the same
// quasivariety as that free algebra.
CheckReport is_admissible(FiniteAlgebra const& m, std::size_t s,
                          QuasiIdentity const& q, Route via,
                          GeneratorSet const& test_set = {},
                          FreeAlgebraOptions free_opts = {},
                          CheckOptions opts = {});

// Reads a free-algebra witness as a substitution: variable i goes to the
// stored term of its value. Throws AlgebraError when the report has no
// witness or the algebra carries no terms.
std::vector<Term> counterexample_substitution(CheckReport const& report,
                                              FreeAlgebra const& f);

struct RandomQidOptions {
  std::size_t max_vars = 3;
  std::size_t max_premises = 2;
  std::size_t max_depth = 3;
};

// Seeded generator of quasi-identities over a signature; variables are drawn
// from x0..x(max_vars-1).
class RandomQidGenerator {
 public:
  RandomQidGenerator(Signature sig, std::uint64_t seed,
                     RandomQidOptions opts = {});
  QuasiIdentity next();
  Term term(std::size_t depth);

 private:
  Signature sig_;
  RandomQidOptions opts_;
  std::mt19937_64 rng_;
};

}  // namespace admit
