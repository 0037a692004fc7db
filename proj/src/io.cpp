#include "qaff/io.hpp"

namespace qaff {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i)) j.push_back({i, c, v.str()});
    return j;
}

Matrix matrix_from_json(const ScalarContext& ctx, const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw UsageError("matrix must be a list of [row, col, scalar] triples");
    Matrix m(rows, cols);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw UsageError("matrix entry must be [row, col, scalar]");
        auto r = e[0].get<std::size_t>();
        auto c = e[1].get<std::size_t>();
        if (r >= rows || c >= cols) throw UsageError("matrix entry out of range");
        m.add_to(r, c, ctx.parse(e[2].get<std::string>()));
    }
    return m;
}

nlohmann::json vector_to_json(const SparseVec& v, std::size_t dim) {
    nlohmann::json j = nlohmann::json::array();
    for (const Scalar& x : dense_from_sparse(v, dim)) j.push_back(x.str());
    return j;
}

SparseVec vector_from_json(const ScalarContext& ctx, const nlohmann::json& j) {
    std::vector<Scalar> d;
    for (const auto& e : j) d.push_back(ctx.parse(e.get<std::string>()));
    return sparse_from_dense(d);
}

nlohmann::json context_to_json(const ScalarContext& ctx) { return {{"n", ctx.n()}, {"backend", ctx.describe()}}; }

ScalarContext context_from_json(const nlohmann::json& j) {
    return ScalarContext::from_backend_string(j.at("n").get<int>(), j.value("backend", std::string("symbolic")));
}

}  // namespace qaff
