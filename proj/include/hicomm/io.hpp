// Algebra file parsing/serialization and fingerprints.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hicomm/algebra.hpp"

namespace hicomm {

struct ParsedAlgebra {
  FiniteAlgebra algebra;
  std::optional<Term> malcev;  // verified when present in the file
};

// JSON schema: { "name": str?, "size": int, "operations": [ { "symbol": str,
// "arity": int, "table": [int...] } ], "malcev_term": str?,
// "with_constants": bool? }. Tables are row-major, leftmost argument most
// significant. A malcev_term must verify or parsing fails.
ParsedAlgebra parse_algebra_text(const std::string& text, const Limits& limits = {});
ParsedAlgebra parse_algebra_file(const std::string& path, const Limits& limits = {});

// Canonical serialization; parse(serialize(a)) == a.
std::string serialize_algebra(const FiniteAlgebra& alg);

// FNV-1a over the canonical serialization.
std::uint64_t algebra_fingerprint(const FiniteAlgebra& alg);

}  // namespace hicomm
