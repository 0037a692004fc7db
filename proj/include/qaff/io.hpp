#pragma once

#include "json.hpp"
#include "qaff/linalg.hpp"

namespace qaff {

// [[row, col, "scalar"], ...]
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const ScalarContext& ctx, const nlohmann::json& j, std::size_t rows, std::size_t cols);

nlohmann::json vector_to_json(const SparseVec& v, std::size_t dim);
SparseVec vector_from_json(const ScalarContext& ctx, const nlohmann::json& j);

nlohmann::json context_to_json(const ScalarContext& ctx);
ScalarContext context_from_json(const nlohmann::json& j);

}  // namespace qaff
