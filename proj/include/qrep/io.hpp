#pragma once

#include "json.hpp"
#include "qrep/category.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

// {"order": N, "coeffs": [[num, den], ...]}; integers outside int64 are emitted as strings.
nlohmann::json scalar_to_json(const Scalar& s);
// Adds "float": [re, im] next to the exact form.
nlohmann::json scalar_to_json_with_float(const Scalar& s);
Scalar scalar_from_json(const FieldPtr& f, const nlohmann::json& j);

// Row-major array of scalars.
nlohmann::json matrix_to_json(const Matrix& m);
// Integer-valued matrices as plain integers (throws if an entry is not a rational integer).
nlohmann::json integer_matrix_to_json(const Matrix& m);
std::string integer_matrix_to_csv(const Matrix& m);

// Persistent 6j memo: {"level": k, "entries": [[key, scalar], ...]}.
nlohmann::json f_cache_to_json(const Category& cat);
// Returns the number of entries loaded; a file for another level loads nothing.
std::size_t f_cache_from_json(const Category& cat, const nlohmann::json& j);

}  // namespace qrep
