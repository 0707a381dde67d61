#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/structure.hpp"

namespace admit {

// Text formats; grammar in docs/formats.md. Parsers throw ParseError with a
// 1-based line:column position.

// `algebra NAME`, `elements ...`, then `op NAME/ARITY` blocks of
// `args -> value` rows.
FiniteAlgebra parse_algebra(std::string_view text);
std::string print_algebra(FiniteAlgebra const& a);

// `structure NAME`, `elements ...`, then `op`, `partial`, `relation` and
// `order` blocks. Orders are expanded to their reflexive-transitive closure
// and stored as binary relations; printing writes the expanded relation.
FiniteStructure parse_structure(std::string_view text);
std::string print_structure(FiniteStructure const& x);

// One term: variables x0, x1, ...; `f(t1, ..., tn)`; constants `c` or
// `c()`; `(t1 f t2)` for binary f.
Term parse_term(std::string_view text, Signature const& sig);
std::string print_term(Term const& t);

// `p1 = q1, ..., pk = qk => l = r`; the premise side may be empty.
QuasiIdentity parse_quasi_identity(std::string_view text, Signature const& sig);
std::string print_quasi_identity(QuasiIdentity const& q);

// One quasi-identity per non-blank line; `#` comments.
std::vector<QuasiIdentity> parse_quasi_identities(std::string_view text,
                                                  Signature const& sig);
std::string print_quasi_identities(std::vector<QuasiIdentity> const& qs);

// True when `s` can be written without quotes in .alg/.str documents.
bool is_plain_label(std::string_view s);

std::string read_file(std::string const& path);

}  // namespace admit
