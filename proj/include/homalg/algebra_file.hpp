#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "homalg/hom_dialgebra.hpp"

namespace homalg {

// Malformed input file (bad JSON, wrong shape, unknown kind, bad rational).
// Distinct from a structurally valid file whose algebra breaks the laws,
// which parses fine and is reported through validate().
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using LoadedAlgebra = std::variant<AlgebraPtr, DialgebraPtr>;

// File format: a JSON object with
//   kind   "hom-associative" | "hom-dialgebra"
//   name   optional string (defaults to the file stem)
//   dim    positive integer d
//   alpha  d x d matrix, row i = coordinates of alpha(e_i)
// and either
//   mu     d x d x d array, mu[i][j][k] = e_k coefficient of e_i * e_j
// or
//   dashv, vdash   the -| and |- product tensors in the same layout.
// Scalars are JSON integers or strings "p/q" in lowest terms or not.
LoadedAlgebra load_algebra_text(const std::string& text, const std::string& origin);
LoadedAlgebra load_algebra_file(const std::string& path);

std::string serialize(const HomAssociativeAlgebra& a);
std::string serialize(const HomDialgebra& d);
std::string serialize(const LoadedAlgebra& any);

}  // namespace homalg
