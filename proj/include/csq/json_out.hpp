#pragma once

// Deterministic JSON output: insertion-ordered objects and every float
// printed as %.12e, so identical inputs give byte-identical files.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "csq/operator.hpp"

namespace csq::json {

using Json = nlohmann::ordered_json;

std::string format_number(double v);

Json complex(Complex z);
/// {"dim": n, "re": [[...]], "im": [[...]]}
Json matrix(const ComplexMatrix& m);
/// Inverse of `matrix`; throws InvalidArgument on a malformed document.
ComplexMatrix parse_matrix(const Json& j);

void write(std::ostream& os, const Json& j);
std::string dump(const Json& j);

}  // namespace csq::json
