#include "qaff/module_tools.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "qaff/io.hpp"

namespace qaff {

bool all_pass(const std::vector<RelationResult>& r) {
    return std::all_of(r.begin(), r.end(), [](const RelationResult& x) { return x.pass; });
}

nlohmann::json relations_to_json(const std::vector<RelationResult>& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : r) j.push_back({{"relation", x.relation}, {"pass", x.pass}});
    return j;
}

OperatorSet OperatorSet::transposed() const {
    OperatorSet t;
    t.dim = dim;
    t.names = names;
    for (const auto& m : ops) t.ops.push_back(m.transpose());
    return t;
}

void OperatorSet::add(std::string name, Matrix m) {
    if (m.rows() != dim || m.cols() != dim) throw UsageError("operator " + name + " has the wrong shape");
    names.push_back(std::move(name));
    ops.push_back(std::move(m));
}

Echelon spin(const OperatorSet& m, const std::vector<SparseVec>& seeds) {
    Echelon e(m.dim);
    std::deque<SparseVec> queue;
    for (const auto& s : seeds)
        if (e.insert(s)) queue.push_back(s);
    while (!queue.empty() && !e.full()) {
        SparseVec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : m.ops) {
            SparseVec w = g.apply(v);
            if (e.insert(w)) queue.push_back(std::move(w));
        }
    }
    return e;
}

bool is_invariant(const OperatorSet& m, const Echelon& sub) {
    for (const auto& b : sub.basis())
        for (const auto& g : m.ops)
            if (!sub.contains(g.apply(b))) return false;
    return true;
}

OperatorSet restrict_to(const OperatorSet& m, const Echelon& sub) {
    std::vector<SparseVec> basis = sub.basis();
    OperatorSet r;
    r.dim = basis.size();
    r.names = m.names;
    for (std::size_t gi = 0; gi < m.ops.size(); ++gi) {
        const Matrix& g = m.ops[gi];
        std::vector<SparseVec> cols;
        for (const auto& b : basis) {
            SparseVec img = g.apply(b);
            if (!sub.contains(img)) throw MathError("subspace is not invariant under " + m.names[gi]);
            cols.push_back(sparse_from_dense(sub.coordinates(img)));
        }
        r.ops.push_back(Matrix::from_columns(r.dim, cols));
    }
    return r;
}

std::vector<Scalar> quotient_coordinates(const Echelon& sub, const SparseVec& v) {
    SparseVec red = sub.reduce(v);
    std::vector<std::size_t> fc = sub.free_columns();
    std::vector<Scalar> out(fc.size());
    std::size_t k = 0;
    for (const auto& [i, x] : red) {
        while (k < fc.size() && fc[k] < i) ++k;
        if (k < fc.size() && fc[k] == i) out[k] = x;
    }
    return out;
}

OperatorSet quotient_by(const OperatorSet& m, const Echelon& sub) {
    std::vector<std::size_t> fc = sub.free_columns();
    OperatorSet r;
    r.dim = fc.size();
    r.names = m.names;
    for (const auto& g : m.ops) {
        std::vector<SparseVec> cols;
        for (std::size_t f : fc) cols.push_back(sparse_from_dense(quotient_coordinates(sub, g.apply(unit_vector(f)))));
        r.ops.push_back(Matrix::from_columns(r.dim, cols));
    }
    return r;
}

Echelon largest_submodule_in(const OperatorSet& m, const Echelon& space) {
    Echelon cur = space;
    for (;;) {
        std::vector<SparseVec> basis = cur.basis();
        if (basis.empty()) return cur;
        // Unknown coefficients c with g(sum c_k b_k) in cur for every g.
        std::size_t r = basis.size();
        std::vector<SparseVec> reduced;
        for (const auto& b : basis)
            for (const auto& g : m.ops) reduced.push_back(cur.reduce(g.apply(b)));
        std::size_t ng = m.ops.size();
        Matrix eqs(ng * m.dim, r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t gi = 0; gi < ng; ++gi)
                for (const auto& [i, x] : reduced[k * ng + gi]) eqs.row(gi * m.dim + i).emplace_back(k, x);
        std::vector<SparseVec> sol = kernel(eqs);
        if (sol.size() == r) return cur;
        Echelon next(m.dim);
        for (const auto& c : sol) {
            Accumulator acc(m.dim);
            for (const auto& [k, x] : c) acc.add_scaled(basis[k], x);
            next.insert(acc.take());
        }
        cur = next;
    }
}

// ---------------------------------------------------------------------------

nlohmann::json IrreducibilityCertificate::to_json(std::size_t dim) const {
    nlohmann::json j;
    j["irreducible"] = irreducible;
    j["method"] = method;
    if (!probe.empty()) j["probe"] = probe;
    if (!witness.empty()) j["witness"] = vector_to_json(witness, dim);
    if (!dual_witness.empty()) j["dual_witness"] = vector_to_json(dual_witness, dim);
    if (!submodule.empty()) {
        nlohmann::json s = nlohmann::json::array();
        for (const auto& v : submodule) s.push_back(vector_to_json(v, dim));
        j["submodule"] = s;
    }
    return j;
}

namespace {

Echelon annihilator(std::size_t dim, const Echelon& dual) {
    std::vector<SparseVec> rows = dual.basis();
    Matrix m = Matrix::from_rows(dim, rows);
    return span_of(dim, kernel(m));
}

// Span of the algebra generated by the operators, as flattened matrices.
std::vector<Matrix> algebra_basis(const OperatorSet& m, std::size_t limit) {
    std::size_t d = m.dim;
    auto flat = [d](const Matrix& x) {
        SparseVec v;
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& [j, s] : x.row(i)) v.emplace_back(i * d + j, s);
        return v;
    };
    Echelon e(d * d);
    std::vector<Matrix> basis;
    std::deque<Matrix> queue;
    Matrix id = Matrix::identity(d);
    e.insert(flat(id));
    basis.push_back(id);
    queue.push_back(id);
    while (!queue.empty() && basis.size() < limit) {
        Matrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : m.ops) {
            Matrix y = g * x;
            if (e.insert(flat(y))) {
                basis.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return basis;
}

Scalar trace(const Matrix& m) {
    Scalar t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.get(i, i);
    return t;
}

}  // namespace

IrreducibilityCertificate is_irreducible(const OperatorSet& m, const std::vector<Probe>& probes, std::uint64_t seed) {
    IrreducibilityCertificate cert;
    if (m.dim == 0) throw UsageError("irreducibility of the zero module");
    if (m.dim == 1) {
        cert.irreducible = true;
        cert.method = "dimension";
        return cert;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(1, 9);
    OperatorSet dual = m.transposed();
    auto reducible = [&](const std::string& method, const std::string& probe, SparseVec w, const Echelon& sub) {
        cert.irreducible = false;
        cert.method = method;
        cert.probe = probe;
        cert.witness = std::move(w);
        cert.submodule = sub.basis();
        return cert;
    };
    for (const auto& p : probes) {
        std::vector<SparseVec> ker = kernel(p.op);
        if (ker.empty()) continue;
        std::vector<SparseVec> seeds = ker;
        if (ker.size() > 1) {
            Accumulator acc(m.dim);
            for (const auto& k : ker) acc.add_scaled(k, Scalar(coeff(rng)));
            seeds.push_back(acc.take());
        }
        for (const auto& k : seeds) {
            Echelon s = spin(m, {k});
            if (s.rank() < m.dim) return reducible("spin", p.name, k, s);
        }
        if (ker.size() != 1) continue;
        std::vector<SparseVec> dker = kernel(p.op.transpose());
        Echelon ds = spin(dual, {dker.front()});
        if (ds.rank() < m.dim) {
            cert = reducible("dual-spin", p.name, {}, annihilator(m.dim, ds));
            cert.dual_witness = dker.front();
            return cert;
        }
        cert.irreducible = true;
        cert.method = "norton";
        cert.probe = p.name;
        cert.witness = ker.front();
        cert.dual_witness = dker.front();
        return cert;
    }
    if (m.dim <= 16) {
        std::vector<Matrix> alg = algebra_basis(m, m.dim * m.dim);
        if (alg.size() == m.dim * m.dim) {
            cert.irreducible = true;
            cert.method = "burnside";
            return cert;
        }
        // In characteristic zero the radical is the kernel of the trace form.
        std::size_t a = alg.size();
        Matrix gram(a, a);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) gram.set(i, j, trace(alg[i] * alg[j]));
        for (const auto& c : kernel(gram)) {
            Matrix x(m.dim, m.dim);
            for (const auto& [i, s] : c) x += alg[i] * s;
            for (std::size_t j = 0; j < m.dim; ++j) {
                SparseVec col = x.column(j);
                if (col.empty()) continue;
                Echelon s = spin(m, {col});
                if (s.rank() < m.dim) return reducible("radical", "trace-form", col, s);
            }
        }
    }
    throw MathError("irreducibility undecided: no usable singular element");
}

bool check_certificate(const OperatorSet& m, const std::vector<Probe>& probes, const IrreducibilityCertificate& c) {
    if (c.method == "dimension") return m.dim == 1;
    if (!c.irreducible) {
        Echelon s = span_of(m.dim, c.submodule);
        return s.rank() > 0 && s.rank() < m.dim && is_invariant(m, s);
    }
    if (c.method == "burnside") return algebra_basis(m, m.dim * m.dim).size() == m.dim * m.dim;
    if (c.method != "norton") return false;
    for (const auto& p : probes) {
        if (p.name != c.probe) continue;
        return kernel(p.op).size() == 1 && p.op.apply(c.witness).empty() &&
               p.op.transpose().apply(c.dual_witness).empty() && !c.witness.empty() && !c.dual_witness.empty() &&
               spin(m, {c.witness}).full() && spin(m.transposed(), {c.dual_witness}).full();
    }
    return false;
}

// ---------------------------------------------------------------------------

std::vector<Matrix> hom_space(const OperatorSet& a, const OperatorSet& b) {
    if (a.names != b.names) throw UsageError("modules have different generator lists");
    std::size_t da = a.dim, db = b.dim;
    std::size_t unknowns = da * db;  // T[i][k] at i * da + k
    Echelon e(unknowns);
    for (std::size_t g = 0; g < a.ops.size() && !e.full(); ++g) {
        Matrix at = a.ops[g].transpose();
        const Matrix& bg = b.ops[g];
        for (std::size_t i = 0; i < db && !e.full(); ++i)
            for (std::size_t j = 0; j < da; ++j) {
                // (T A)[i][j] - (B T)[i][j]
                Accumulator acc(unknowns);
                for (const auto& [k, x] : at.row(j)) acc.add(i * da + k, x);
                for (const auto& [k, x] : bg.row(i)) acc.add(k * da + j, -x);
                SparseVec eq = acc.take();
                if (!eq.empty()) e.insert(eq);
            }
    }
    Matrix eqs = Matrix::from_rows(unknowns, e.basis());
    std::vector<Matrix> out;
    for (const auto& sol : kernel(eqs)) {
        Matrix t(db, da);
        for (const auto& [u, x] : sol) t.row(u / da).emplace_back(u % da, x);
        out.push_back(std::move(t));
    }
    return out;
}

bool is_intertwiner(const OperatorSet& a, const OperatorSet& b, const Matrix& t) {
    if (a.names != b.names) return false;
    for (std::size_t g = 0; g < a.ops.size(); ++g)
        if (!(t * a.ops[g] == b.ops[g] * t)) return false;
    return true;
}

bool is_invertible(const Matrix& t) { return t.rows() == t.cols() && rank(t) == t.rows(); }

IsoResult generic_isomorphism(const OperatorSet& a, const OperatorSet& b, std::uint64_t seed) {
    IsoResult r;
    if (a.dim != b.dim) {
        r.reason = "dimensions differ";
        return r;
    }
    std::vector<Matrix> hom = hom_space(a, b);
    if (hom.empty()) {
        r.reason = "no nonzero homomorphism";
        return r;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix t(b.dim, a.dim);
        for (std::size_t k = 0; k < hom.size(); ++k) {
            long c = (hom.size() == 1) ? 1 : coeff(rng);
            if (c) t += hom[k] * Scalar(c);
        }
        if (is_invertible(t)) {
            r.isomorphic = true;
            r.intertwiner = std::move(t);
            return r;
        }
    }
    r.reason = "no invertible homomorphism found";
    return r;
}

}  // namespace qaff
