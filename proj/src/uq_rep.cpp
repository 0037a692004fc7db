#include "qaff/uq_rep.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "qaff/errors.hpp"
#include "qaff/io.hpp"

namespace qaff {

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

Weight epsilon(int n, int r) {
    Weight w(static_cast<std::size_t>(n), 0);
    if (r >= 1 && r <= n) w[static_cast<std::size_t>(r - 1)] += 1;
    if (r - 1 >= 1 && r - 1 <= n) w[static_cast<std::size_t>(r - 2)] -= 1;
    return w;
}

Weight fundamental_weight(int n, int i) {
    if (i < 1 || i > n) throw UsageError("fundamental weight index " + std::to_string(i) + " out of range");
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
}

long level_of(const Weight& w) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long>(i + 1) * w[i];
    return s;
}

// ---------------------------------------------------------------------------

namespace {

std::string idx(int i) { return std::to_string(i); }

int first_index(const UqModule& w) { return w.affine ? 0 : 1; }

}  // namespace

OperatorSet UqModule::operators() const {
    OperatorSet o;
    o.dim = dim;
    for (int i = first_index(*this); i <= n(); ++i) {
        auto u = static_cast<std::size_t>(i);
        o.add("x+" + idx(i), xp.at(u));
        o.add("x-" + idx(i), xm.at(u));
        o.add("k" + idx(i), k.at(u));
        o.add("kinv" + idx(i), kinv.at(u));
    }
    if (has_t)
        for (int r = 1; r <= n() + 1; ++r) {
            o.add("t" + idx(r), t.at(static_cast<std::size_t>(r - 1)));
            o.add("tinv" + idx(r), tinv.at(static_cast<std::size_t>(r - 1)));
        }
    return o;
}

void UqModule::compute_weights() {
    weights.assign(dim, Weight(static_cast<std::size_t>(n()), 0));
    for (int i = 1; i <= n(); ++i) {
        const Matrix& ki = k.at(static_cast<std::size_t>(i));
        if (!ki.is_diagonal()) throw MathError("k" + idx(i) + " is not diagonal in the module basis");
        for (std::size_t b = 0; b < dim; ++b) {
            long m = 0;
            if (!ctx.q_exponent_of(ki.get(b, b), m))
                throw MathError("k" + idx(i) + " has an eigenvalue that is not an integral power of q");
            weights[b][static_cast<std::size_t>(i - 1)] = m;
        }
    }
}

UqModule uq_from_operators(const UqModule& like, const OperatorSet& ops) {
    UqModule w;
    w.ctx = like.ctx;
    w.dim = ops.dim;
    w.affine = like.affine;
    w.has_t = like.has_t;
    auto get = [&](const std::string& name) {
        for (std::size_t g = 0; g < ops.names.size(); ++g)
            if (ops.names[g] == name) return ops.ops[g];
        throw UsageError("operator list lacks " + name);
    };
    std::size_t sz = static_cast<std::size_t>(like.n() + 1);
    w.xp.resize(sz);
    w.xm.resize(sz);
    w.k.resize(sz);
    w.kinv.resize(sz);
    for (int i = first_index(like); i <= like.n(); ++i) {
        auto u = static_cast<std::size_t>(i);
        w.xp[u] = get("x+" + idx(i));
        w.xm[u] = get("x-" + idx(i));
        w.k[u] = get("k" + idx(i));
        w.kinv[u] = get("kinv" + idx(i));
    }
    if (w.has_t)
        for (int r = 1; r <= like.n() + 1; ++r) {
            w.t.push_back(get("t" + idx(r)));
            w.tinv.push_back(get("tinv" + idx(r)));
        }
    w.compute_weights();
    return w;
}

UqModule restrict_to_finite(const UqModule& w, bool keep_t) {
    UqModule r = w;
    r.affine = false;
    r.xp[0] = r.xm[0] = r.k[0] = r.kinv[0] = Matrix();
    if (!keep_t) {
        r.has_t = false;
        r.t.clear();
        r.tinv.clear();
    }
    return r;
}

nlohmann::json UqModule::to_json() const {
    nlohmann::json j;
    j["algebra"] = affine ? "Uqhat" : "Uq";
    j["n"] = n();
    j["gl"] = has_t;
    j["dim"] = dim;
    j["context"] = context_to_json(ctx);
    nlohmann::json g = nlohmann::json::object();
    OperatorSet o = operators();
    for (std::size_t i = 0; i < o.names.size(); ++i) g[o.names[i]] = matrix_to_json(o.ops[i]);
    j["generators"] = g;
    if (!weights.empty()) j["weights"] = weights;
    return j;
}

UqModule UqModule::from_json(const nlohmann::json& j) {
    UqModule w;
    std::string alg = j.at("algebra").get<std::string>();
    if (alg != "Uq" && alg != "Uqhat") throw UsageError("not a quantum group module descriptor: algebra '" + alg + "'");
    w.affine = alg == "Uqhat";
    w.ctx = context_from_json(j.at("context"));
    if (j.at("n").get<int>() != w.ctx.n()) throw UsageError("descriptor rank disagrees with its context");
    w.dim = j.at("dim").get<std::size_t>();
    w.has_t = j.value("gl", false);
    const auto& g = j.at("generators");
    OperatorSet o;
    o.dim = w.dim;
    for (auto it = g.begin(); it != g.end(); ++it) o.add(it.key(), matrix_from_json(w.ctx, it.value(), w.dim, w.dim));
    return uq_from_operators(w, o);
}

// ---------------------------------------------------------------------------

NaturalRep natural_rep(const ScalarContext& ctx) {
    int n = ctx.n();
    if (n < 1) throw UsageError("rank must be at least 1");
    auto d = static_cast<std::size_t>(n + 1);
    NaturalRep nr;
    UqModule& v = nr.v;
    v.ctx = ctx;
    v.dim = d;
    v.has_t = true;
    v.xp.resize(d);
    v.xm.resize(d);
    v.k.resize(d);
    v.kinv.resize(d);
    for (int i = 1; i <= n; ++i) {
        auto u = static_cast<std::size_t>(i);
        Matrix xp(d, d), xm(d, d);
        xp.set(u - 1, u, Scalar(1L));
        xm.set(u, u - 1, Scalar(1L));
        std::vector<Scalar> kd, kid;
        for (int r = 1; r <= n + 1; ++r) {
            long e = (r == i ? 1 : 0) - (r == i + 1 ? 1 : 0);
            kd.push_back(ctx.q_power(e));
            kid.push_back(ctx.q_power(-e));
        }
        v.xp[u] = xp;
        v.xm[u] = xm;
        v.k[u] = Matrix::diagonal(kd);
        v.kinv[u] = Matrix::diagonal(kid);
    }
    for (int r = 1; r <= n + 1; ++r) {
        std::vector<Scalar> td, tid;
        for (int s = 1; s <= n + 1; ++s) {
            long e = (r == s ? ctx.q_degree() : 0) - 2;  // q^{delta - 1/(n+1)} with q^{1/(n+1)} = t^2
            td.push_back(ctx.t_power(e));
            tid.push_back(ctx.t_power(-e));
        }
        v.t.push_back(Matrix::diagonal(td));
        v.tinv.push_back(Matrix::diagonal(tid));
    }
    v.compute_weights();
    nr.x_theta_plus = Matrix(d, d);
    nr.x_theta_plus.set(0, d - 1, Scalar(1L));
    nr.x_theta_minus = Matrix(d, d);
    nr.x_theta_minus.set(d - 1, 0, Scalar(1L));
    std::vector<Scalar> kt, kti;
    for (int r = 1; r <= n + 1; ++r) {
        long e = (r == 1 ? 1 : 0) - (r == n + 1 ? 1 : 0);
        kt.push_back(ctx.q_power(e));
        kti.push_back(ctx.q_power(-e));
    }
    nr.k_theta = Matrix::diagonal(kt);
    nr.k_theta_inv = Matrix::diagonal(kti);
    return nr;
}

UqModule tensor(const UqModule& a, const UqModule& b) {
    if (!a.ctx.same_field(b.ctx) || a.n() != b.n()) throw UsageError("tensor factors live over different contexts");
    if (a.affine != b.affine) throw UsageError("cannot tensor an affine module with a finite one");
    UqModule w;
    w.ctx = a.ctx;
    w.dim = a.dim * b.dim;
    w.affine = a.affine;
    w.has_t = a.has_t && b.has_t;
    Matrix ia = Matrix::identity(a.dim), ib = Matrix::identity(b.dim);
    auto sz = static_cast<std::size_t>(a.n() + 1);
    w.xp.resize(sz);
    w.xm.resize(sz);
    w.k.resize(sz);
    w.kinv.resize(sz);
    for (int i = first_index(a); i <= a.n(); ++i) {
        auto u = static_cast<std::size_t>(i);
        w.xp[u] = kron(a.xp[u], b.k[u]) + kron(ia, b.xp[u]);
        w.xm[u] = kron(a.xm[u], ib) + kron(a.kinv[u], b.xm[u]);
        w.k[u] = kron(a.k[u], b.k[u]);
        w.kinv[u] = kron(a.kinv[u], b.kinv[u]);
    }
    if (w.has_t)
        for (std::size_t r = 0; r < a.t.size(); ++r) {
            w.t.push_back(kron(a.t[r], b.t[r]));
            w.tinv.push_back(kron(a.tinv[r], b.tinv[r]));
        }
    if (!a.weights.empty() && !b.weights.empty()) {
        for (const auto& wa : a.weights)
            for (const auto& wb : b.weights) {
                Weight s = wa;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += wb[i];
                w.weights.push_back(s);
            }
    } else {
        w.compute_weights();
    }
    return w;
}

UqModule tensor_rep(const UqModule& base, int ell) {
    if (ell < 1) throw UsageError("tensor power needs l >= 1");
    UqModule w = base;
    for (int k = 1; k < ell; ++k) w = tensor(w, base);
    return w;
}

Matrix kron_all(const std::vector<Matrix>& factors) {
    if (factors.empty()) return Matrix::identity(1);
    Matrix m = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) m = kron(m, factors[i]);
    return m;
}

Matrix rcheck(const ScalarContext& ctx) {
    auto d = static_cast<std::size_t>(ctx.n() + 1);
    Matrix m(d * d, d * d);
    Scalar q = ctx.q(), q2 = ctx.q_power(2L);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
            std::size_t rs = r * d + s, sr = s * d + r;
            if (r == s) {
                m.set(rs, rs, q2);
            } else {
                m.set(sr, rs, q);
                if (r > s) m.set(rs, rs, q2 - Scalar(1L));
            }
        }
    return m;
}

Matrix rcheck_i(const ScalarContext& ctx, int ell, int i) {
    if (i < 1 || i >= ell) throw UsageError("R-matrix index " + idx(i) + " out of range for l = " + idx(ell));
    auto d = static_cast<std::size_t>(ctx.n() + 1);
    std::vector<Matrix> f;
    for (int k = 1; k < i; ++k) f.push_back(Matrix::identity(d));
    f.push_back(rcheck(ctx));
    for (int k = i + 2; k <= ell; ++k) f.push_back(Matrix::identity(d));
    return kron_all(f);
}

// ---------------------------------------------------------------------------

std::map<Weight, std::vector<std::size_t>> weight_spaces(const UqModule& w) {
    UqModule tmp;
    const std::vector<Weight>* ws = &w.weights;
    if (ws->size() != w.dim) {
        tmp = w;
        tmp.compute_weights();
        ws = &tmp.weights;
    }
    std::map<Weight, std::vector<std::size_t>> out;
    for (std::size_t b = 0; b < w.dim; ++b) out[(*ws)[b]].push_back(b);
    return out;
}

std::map<Weight, std::size_t> character(const UqModule& w) {
    std::map<Weight, std::size_t> out;
    for (const auto& [mu, ids] : weight_spaces(w)) out[mu] = ids.size();
    return out;
}

std::map<Weight, std::vector<SparseVec>> highest_weight_vectors(const UqModule& w) {
    std::vector<Matrix> xpt;
    for (int i = 1; i <= w.n(); ++i) xpt.push_back(w.xp.at(static_cast<std::size_t>(i)).transpose());
    std::map<Weight, std::vector<SparseVec>> out;
    for (const auto& [mu, ids] : weight_spaces(w)) {
        Matrix local(xpt.size() * w.dim, ids.size());
        for (std::size_t c = 0; c < ids.size(); ++c)
            for (std::size_t i = 0; i < xpt.size(); ++i)
                for (const auto& [r, x] : xpt[i].row(ids[c])) local.row(i * w.dim + r).emplace_back(c, x);
        std::vector<SparseVec> ker = kernel(local);
        if (ker.empty()) continue;
        auto& dst = out[mu];
        for (const auto& v : ker) {
            SparseVec g;
            for (const auto& [c, x] : v) g.emplace_back(ids[c], x);
            dst.push_back(std::move(g));
        }
    }
    return out;
}

UqModule irreducible_highest_weight(const ScalarContext& ctx, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != ctx.n()) throw UsageError("weight has the wrong length");
    if (!is_dominant(lambda)) throw UsageError("weight " + weight_str(lambda) + " is not dominant");
    long lev = level_of(lambda);
    NaturalRep nr = natural_rep(ctx);
    if (lev == 0) {
        UqModule triv = nr.v;
        triv.dim = 1;
        for (auto* list : {&triv.xp, &triv.xm})
            for (int i = 1; i <= ctx.n(); ++i) (*list)[static_cast<std::size_t>(i)] = Matrix(1, 1);
        for (auto* list : {&triv.k, &triv.kinv})
            for (int i = 1; i <= ctx.n(); ++i) (*list)[static_cast<std::size_t>(i)] = Matrix::identity(1);
        triv.has_t = false;
        triv.t.clear();
        triv.tinv.clear();
        triv.compute_weights();
        return triv;
    }
    UqModule big = tensor_rep(nr.v, static_cast<int>(lev));
    auto hw = highest_weight_vectors(big);
    auto it = hw.find(lambda);
    if (it == hw.end()) throw MathError("no highest-weight vector of weight " + weight_str(lambda));
    OperatorSet ops = big.operators();
    Echelon sub = spin(ops, {it->second.front()});
    return uq_from_operators(big, restrict_to(ops, sub));
}

// ---------------------------------------------------------------------------

namespace {

int cartan(int n, bool affine, int i, int j) {
    if (i == j) return 2;
    if (affine && n == 1) return -2;
    int d = std::abs(i - j);
    if (d == 1 || (affine && d == n)) return -1;
    return 0;
}

Scalar q_integer(const ScalarContext& ctx, long m) {
    return (ctx.q_power(m) - ctx.q_power(-m)) / (ctx.q() - ctx.q_power(-1L));
}

Scalar q_binomial(const ScalarContext& ctx, long n, long r) {
    Scalar num(1L), den(1L);
    for (long k = 0; k < r; ++k) {
        num *= q_integer(ctx, n - k);
        den *= q_integer(ctx, k + 1);
    }
    return num / den;
}

}  // namespace

std::vector<RelationResult> verify_quantum_relations(const UqModule& w) {
    const ScalarContext& ctx = w.ctx;
    int n = w.n();
    int lo = first_index(w);
    for (int i = lo; i <= n; ++i) {
        auto u = static_cast<std::size_t>(i);
        if (u >= w.xp.size() || w.xp[u].rows() != w.dim || w.xm[u].rows() != w.dim || w.k[u].rows() != w.dim ||
            w.kinv[u].rows() != w.dim)
            throw UsageError("module lacks the generators for index " + idx(i));
    }
    Matrix id = Matrix::identity(w.dim);
    auto X = [&](int sign, int i) -> const Matrix& {
        return sign > 0 ? w.xp[static_cast<std::size_t>(i)] : w.xm[static_cast<std::size_t>(i)];
    };
    auto K = [&](int i) -> const Matrix& { return w.k[static_cast<std::size_t>(i)]; };
    auto Ki = [&](int i) -> const Matrix& { return w.kinv[static_cast<std::size_t>(i)]; };
    auto xname = [](int sign, int i) { return std::string(sign > 0 ? "x+" : "x-") + idx(i); };
    std::vector<RelationResult> out;
    for (int i = lo; i <= n; ++i)
        out.push_back({"k" + idx(i) + " kinv" + idx(i) + " = 1", K(i) * Ki(i) == id && Ki(i) * K(i) == id});
    for (int i = lo; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({"k" + idx(i) + " k" + idx(j) + " commute", K(i) * K(j) == K(j) * K(i)});
    for (int i = lo; i <= n; ++i)
        for (int j = lo; j <= n; ++j)
            for (int sign : {1, -1}) {
                long a = cartan(n, w.affine, i, j) * sign;
                out.push_back({"k" + idx(i) + " " + xname(sign, j) + " kinv" + idx(i) + " = q^" + std::to_string(a) + " " +
                                   xname(sign, j),
                               K(i) * X(sign, j) * Ki(i) == X(sign, j) * ctx.q_power(a)});
            }
    Scalar qq = (ctx.q() - ctx.q_power(-1L)).inverse();
    for (int i = lo; i <= n; ++i)
        for (int j = lo; j <= n; ++j) {
            Matrix c = X(1, i) * X(-1, j) - X(-1, j) * X(1, i);
            Matrix rhs = i == j ? (K(i) - Ki(i)) * qq : Matrix(w.dim, w.dim);
            out.push_back({"[x+" + idx(i) + ", x-" + idx(j) + "]", c == rhs});
        }
    Scalar qh = ctx.q_power(Rational(1, 2)), qhi = ctx.q_power(Rational(-1, 2));
    auto bracket = [&](const Matrix& a, const Matrix& b) { return a * b * qh - b * a * qhi; };
    for (int i = lo; i <= n; ++i)
        for (int j = lo; j <= n; ++j) {
            if (i == j) continue;
            long N = 1 - cartan(n, w.affine, i, j);
            for (int sign : {1, -1}) {
                const Matrix& xi = X(sign, i);
                const Matrix& xj = X(sign, j);
                std::vector<Matrix> pw{id};
                for (long r = 1; r <= N; ++r) pw.push_back(pw.back() * xi);
                Matrix sum(w.dim, w.dim);
                for (long r = 0; r <= N; ++r) {
                    Scalar c = q_binomial(ctx, N, r) * Scalar(r % 2 ? -1L : 1L);
                    sum += pw[static_cast<std::size_t>(N - r)] * xj * pw[static_cast<std::size_t>(r)] * c;
                }
                out.push_back({"serre " + xname(sign, i) + " " + xname(sign, j), sum.is_zero()});
                if (N == 2)
                    out.push_back({"bracket " + xname(sign, i) + " " + xname(sign, j),
                                   bracket(xi, bracket(xj, xi)).is_zero()});
            }
        }
    if (w.has_t) {
        std::size_t nt = static_cast<std::size_t>(n + 1);
        if (w.t.size() != nt || w.tinv.size() != nt) throw UsageError("module lacks t generators");
        Matrix prod = id;
        for (std::size_t r = 0; r < nt; ++r) {
            out.push_back({"t" + idx(static_cast<int>(r + 1)) + " tinv = 1", w.t[r] * w.tinv[r] == id});
            for (std::size_t s = r + 1; s < nt; ++s)
                out.push_back({"t" + idx(static_cast<int>(r + 1)) + " t" + idx(static_cast<int>(s + 1)) + " commute",
                               w.t[r] * w.t[s] == w.t[s] * w.t[r]});
            prod = prod * w.t[r];
        }
        out.push_back({"t1 ... t" + idx(n + 1) + " = 1", prod == id});
        for (int i = 1; i <= n; ++i) {
            auto u = static_cast<std::size_t>(i);
            out.push_back({"k" + idx(i) + " = t" + idx(i) + " tinv" + idx(i + 1), K(i) == w.t[u - 1] * w.tinv[u]});
            for (std::size_t r = 0; r < nt; ++r)
                for (int sign : {1, -1}) {
                    // t_r x_i^+ t_r^{-1} = q^{delta_{r,i} - delta_{r,i+1}} x_i^+
                    long e = (static_cast<int>(r + 1) == i ? 1 : 0) - (static_cast<int>(r + 1) == i + 1 ? 1 : 0);
                    out.push_back({"t" + idx(static_cast<int>(r + 1)) + " " + xname(sign, i) + " tinv",
                                   w.t[r] * X(sign, i) * w.tinv[r] == X(sign, i) * ctx.q_power(e * sign)});
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<SparseVec> JimboQuotient::relation_basis() const {
    std::vector<SparseVec> out;
    for (const auto& blk : blocks)
        for (const auto& row : blk.rel.basis()) {
            SparseVec v;
            for (const auto& [c, x] : row) v.emplace_back(blk.cols[c], x);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            out.push_back(std::move(v));
        }
    return out;
}

SparseVec JimboQuotient::project(const SparseVec& ambient) const {
    std::map<std::size_t, SparseVec> per_block;
    for (const auto& [a, x] : ambient) per_block[block_of[a]].emplace_back(local_of[a], x);
    SparseVec out;
    for (auto& [bi, local] : per_block) {
        const Block& blk = blocks[bi];
        std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [c, x] : blk.rel.reduce(local)) {
            long qi = quotient_index[blk.cols[c]];
            if (qi < 0) throw MathError("projection hit a pivot column");
            out.emplace_back(static_cast<std::size_t>(qi), x);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Matrix JimboQuotient::induced(const std::function<SparseVec(std::size_t)>& op, const std::string& name) const {
    std::vector<SparseVec> cache(ambient_dim());
    std::vector<char> have(ambient_dim(), 0);
    auto image = [&](std::size_t a) -> const SparseVec& {
        if (!have[a]) {
            cache[a] = op(a);
            have[a] = 1;
        }
        return cache[a];
    };
    for (const auto& rel : relation_basis()) {
        Accumulator acc(ambient_dim());
        for (const auto& [a, x] : rel) acc.add_scaled(image(a), x);
        if (!project(acc.take()).empty())
            throw MathError("operator " + name + " does not preserve the defining relations");
    }
    std::vector<SparseVec> cols;
    for (std::size_t a : basis) cols.push_back(project(image(a)));
    return Matrix::from_columns(basis.size(), cols);
}

JimboResult jimbo_J(const RightModule& m, int n) {
    const ScalarContext& ctx = m.ctx;
    if (ctx.n() != n) throw UsageError("module context has rank " + idx(ctx.n()) + ", expected " + idx(n));
    int ell = m.ell;
    if (ell < 1) throw UsageError("Hecke module needs l >= 1");
    NaturalRep nr = natural_rep(ctx);
    UqModule tv = tensor_rep(nr.v, ell);
    auto d = static_cast<std::size_t>(n + 1);

    JimboResult res;
    JimboQuotient& jq = res.quotient;
    jq.dim_m = m.dim;
    jq.ell = ell;
    jq.nv = tv.dim;
    std::size_t amb = jq.ambient_dim();
    jq.block_of.assign(amb, 0);
    jq.local_of.assign(amb, 0);
    jq.quotient_index.assign(amb, -1);

    // Group tensor basis vectors by content (number of occurrences of each letter).
    std::map<std::vector<int>, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < jq.nv; ++v) {
        std::vector<int> content(d, 0);
        std::size_t x = v;
        for (int k = 0; k < ell; ++k, x /= d) ++content[x % d];
        groups[content].push_back(v);
    }
    std::vector<Matrix> rt;
    for (int i = 1; i < ell; ++i) rt.push_back(rcheck_i(ctx, ell, i).transpose());

    for (const auto& [content, vs] : groups) {
        JimboQuotient::Block blk;
        std::size_t bi = jq.blocks.size();
        for (std::size_t b = m.dim; b-- > 0;)
            for (std::size_t v : vs) {
                std::size_t a = b * jq.nv + v;
                jq.block_of[a] = bi;
                jq.local_of[a] = blk.cols.size();
                blk.cols.push_back(a);
            }
        blk.rel = Echelon(blk.cols.size());
        for (int i = 1; i < ell; ++i) {
            const Matrix& s = m.s(i);
            const Matrix& r = rt[static_cast<std::size_t>(i - 1)];
            for (std::size_t b = 0; b < m.dim && !blk.rel.full(); ++b)
                for (std::size_t v : vs) {
                    Accumulator acc(blk.cols.size());
                    for (const auto& [b2, x] : s.row(b)) acc.add(jq.local_of[b2 * jq.nv + v], x);
                    for (const auto& [v2, x] : r.row(v)) acc.add(jq.local_of[b * jq.nv + v2], -x);
                    SparseVec rel = acc.take();
                    if (!rel.empty()) blk.rel.insert(rel);
                }
        }
        for (std::size_t c : blk.rel.free_columns()) jq.basis.push_back(blk.cols[c]);
        jq.blocks.push_back(std::move(blk));
    }
    std::sort(jq.basis.begin(), jq.basis.end(), [&](std::size_t x, std::size_t y) {
        std::size_t vx = x % jq.nv, vy = y % jq.nv;
        if (vx != vy) return vx < vy;
        return x / jq.nv < y / jq.nv;
    });
    for (std::size_t q = 0; q < jq.basis.size(); ++q) jq.quotient_index[jq.basis[q]] = static_cast<long>(q);

    UqModule& w = res.module;
    w.ctx = ctx;
    w.dim = jq.basis.size();
    w.has_t = true;
    OperatorSet tops = tv.operators();
    OperatorSet qops;
    qops.dim = w.dim;
    for (std::size_t g = 0; g < tops.ops.size(); ++g) {
        Matrix gt = tops.ops[g].transpose();
        std::size_t nv = jq.nv;
        auto op = [&gt, nv](std::size_t a) {
            SparseVec out;
            std::size_t b = a / nv, v = a % nv;
            for (const auto& [v2, x] : gt.row(v)) out.emplace_back(b * nv + v2, x);
            return out;
        };
        qops.add(tops.names[g], jq.induced(op, tops.names[g]));
    }
    w = uq_from_operators(tv, qops);
    return res;
}

// ---------------------------------------------------------------------------

std::vector<Probe> UqModule::probes() const {
    std::vector<Probe> out;
    auto spaces = weight_spaces(*this);
    std::vector<std::pair<std::size_t, Weight>> order;
    for (const auto& [mu, ids] : spaces) order.emplace_back(ids.size(), mu);
    std::sort(order.begin(), order.end());
    const long coeffs[] = {1, 2, 5, 11, 23, 47};
    for (const auto& [sz, mu] : order) {
        const auto& ids = spaces[mu];
        std::vector<char> in(dim, 0);
        for (std::size_t b : ids) in[b] = 1;
        Matrix rest(dim, dim);
        for (std::size_t b = 0; b < dim; ++b)
            if (!in[b]) rest.set(b, b, Scalar(1L));
        if (sz == 1) {
            out.push_back({"weight " + weight_str(mu), rest});
            continue;
        }
        for (int flip = 0; flip < 2; ++flip) {
            Matrix c(dim, dim);
            for (int i = first_index(*this); i <= n(); ++i) {
                auto u = static_cast<std::size_t>(i);
                Matrix term = flip ? xp[u] * xm[u] : xm[u] * xp[u];
                c += term * Scalar(coeffs[u % 6]);
            }
            // compress to the weight space
            Matrix comp = rest;
            for (std::size_t b : ids)
                for (const auto& [j, x] : c.row(b))
                    if (in[j]) comp.add_to(b, j, x);
            out.push_back({std::string(flip ? "casimir-up " : "casimir ") + weight_str(mu), comp});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

IsoResult uq_isomorphism(const UqModule& a, const UqModule& b, std::uint64_t seed) {
    IsoResult res;
    OperatorSet oa = a.operators(), ob = b.operators();
    if (oa.names != ob.names) throw UsageError("modules have different generator lists");
    if (a.dim != b.dim) {
        res.reason = "dimensions differ";
        return res;
    }
    if (character(a) != character(b)) {
        res.reason = "characters differ";
        return res;
    }
    auto hwa = highest_weight_vectors(a), hwb = highest_weight_vectors(b);
    for (const auto& [mu, vs] : hwa) {
        auto it = hwb.find(mu);
        if (it == hwb.end() || it->second.size() != vs.size()) {
            res.reason = "highest-weight multiplicities differ at " + weight_str(mu);
            return res;
        }
    }
    struct Entry {
        std::size_t hw;
        std::vector<int> word;
    };
    std::vector<SparseVec> hvec;
    std::vector<Weight> hweight;
    for (const auto& [mu, vs] : hwa)
        for (const auto& v : vs) {
            hvec.push_back(v);
            hweight.push_back(mu);
        }
    Echelon span(a.dim);
    std::vector<SparseVec> basis;
    std::vector<Entry> entries;
    std::deque<std::size_t> queue;
    for (std::size_t h = 0; h < hvec.size(); ++h)
        if (span.insert(hvec[h])) {
            basis.push_back(hvec[h]);
            entries.push_back({h, {}});
            queue.push_back(basis.size() - 1);
        }
    while (!queue.empty() && !span.full()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (int i = 1; i <= a.n(); ++i) {
            SparseVec w = a.xm[static_cast<std::size_t>(i)].apply(basis[e]);
            if (span.insert(w)) {
                Entry ne = entries[e];
                ne.word.push_back(i);
                basis.push_back(std::move(w));
                entries.push_back(std::move(ne));
                queue.push_back(basis.size() - 1);
            }
        }
    }
    if (!span.full()) return generic_isomorphism(oa, ob, seed);

    Matrix pinv = inverse(Matrix::from_columns(a.dim, basis));
    auto apply_word = [&](const std::vector<int>& word, SparseVec v) {
        for (int i : word) v = b.xm[static_cast<std::size_t>(i)].apply(v);
        return v;
    };
    // one unknown per pair (hw vector of A, hw vector of B) of equal weight
    std::vector<Matrix> tu;
    for (std::size_t h = 0; h < hvec.size(); ++h) {
        const auto& targets = hwb.at(hweight[h]);
        for (const auto& hb : targets) {
            std::vector<SparseVec> cols;
            for (const auto& e : entries) cols.push_back(e.hw == h ? apply_word(e.word, hb) : SparseVec{});
            tu.push_back(Matrix::from_columns(b.dim, cols) * pinv);
        }
    }
    std::size_t nu = tu.size();
    Echelon eqs(nu);
    for (std::size_t g = 0; g < oa.names.size() && !eqs.full(); ++g) {
        const std::string& nm = oa.names[g];
        bool finite_gen = nm.rfind("t", 0) != 0 && nm.back() != '0';
        if (finite_gen) continue;  // automatic for the highest-weight construction
        std::map<std::pair<std::size_t, std::size_t>, SparseVec> rows;
        for (std::size_t u = 0; u < nu; ++u) {
            Matrix dlt = tu[u] * oa.ops[g] - ob.ops[g] * tu[u];
            for (std::size_t r = 0; r < dlt.rows(); ++r)
                for (const auto& [c, x] : dlt.row(r)) rows[{r, c}].emplace_back(u, x);
        }
        for (const auto& [pos, eq] : rows) eqs.insert(eq);
    }
    std::vector<SparseVec> sols = kernel(Matrix::from_rows(nu, eqs.basis()));
    if (sols.empty()) {
        res.reason = "no nonzero homomorphism";
        return res;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix t(b.dim, a.dim);
        for (const auto& s : sols) {
            long c = sols.size() == 1 ? 1 : coeff(rng);
            if (!c) continue;
            for (const auto& [u, x] : s) t += tu[u] * (x * Scalar(c));
        }
        if (!is_invertible(t)) continue;
        if (!is_intertwiner(oa, ob, t)) return generic_isomorphism(oa, ob, seed);
        res.isomorphic = true;
        res.intertwiner = std::move(t);
        return res;
    }
    res.reason = "no invertible homomorphism found";
    return res;
}

}  // namespace qaff
