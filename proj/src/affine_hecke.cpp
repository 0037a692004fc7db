#include "qaff/affine_hecke.hpp"

#include <algorithm>
#include <functional>

#include "qaff/io.hpp"

namespace qaff {

void aff_add(AffHeckeElt& a, const Monomial& m, const Perm& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m, w);
    auto it = a.find(key);
    if (it == a.end()) {
        a.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

AffineHeckeAlgebra::AffineHeckeAlgebra(ScalarContext ctx, int ell) : fin_(std::move(ctx), ell) {}

AffHeckeElt AffineHeckeAlgebra::one() const { return monomial(Monomial(static_cast<std::size_t>(ell()), 0)); }

AffHeckeElt AffineHeckeAlgebra::monomial(const Monomial& m) const {
    if (static_cast<int>(m.size()) != ell()) throw UsageError("monomial has the wrong number of variables");
    return {{{m, Perm::identity(ell())}, Scalar(1L)}};
}

AffHeckeElt AffineHeckeAlgebra::y(int j, int power) const {
    if (j < 1 || j > ell()) throw UsageError("y index out of range");
    Monomial m(static_cast<std::size_t>(ell()), 0);
    m[static_cast<std::size_t>(j - 1)] = power;
    return monomial(m);
}

AffHeckeElt AffineHeckeAlgebra::from_finite(const HeckeElt& h) const {
    AffHeckeElt r;
    Monomial zero(static_cast<std::size_t>(ell()), 0);
    for (const auto& [w, c] : h) aff_add(r, zero, w, c);
    return r;
}

AffHeckeElt AffineHeckeAlgebra::sigma(int i) const { return from_finite(fin_.sigma(i)); }

AffHeckeElt AffineHeckeAlgebra::straighten(int i, const Monomial& beta) const {
    // sigma_i f = (s_i f) sigma_i + (q^2 - 1) y_{i+1} (f - s_i f) / (y_{i+1} - y_i)
    AffHeckeElt r;
    std::size_t xi = static_cast<std::size_t>(i - 1), zi = static_cast<std::size_t>(i);
    Monomial swapped = beta;
    std::swap(swapped[xi], swapped[zi]);
    aff_add(r, swapped, Perm::simple(ell(), i), Scalar(1L));
    int a = beta[xi], b = beta[zi];
    if (a == b) return r;
    Scalar c = fin_.q2() - Scalar(1L);
    Perm e = Perm::identity(ell());
    Monomial m = beta;
    if (a > b) {
        for (int k = 0; k < a - b; ++k) {
            m[xi] = b + k;
            m[zi] = a - k;
            aff_add(r, m, e, -c);
        }
    } else {
        for (int k = 0; k < b - a; ++k) {
            m[xi] = a + k;
            m[zi] = b - k;
            aff_add(r, m, e, c);
        }
    }
    return r;
}

AffHeckeElt AffineHeckeAlgebra::mul_simple_left(int i, const AffHeckeElt& x) const {
    AffHeckeElt r;
    for (const auto& [key, c] : x) {
        const auto& [gamma, u] = key;
        for (const auto& [k2, d] : straighten(i, gamma)) {
            const auto& [delta, p] = k2;
            if (p.is_identity()) {
                aff_add(r, delta, u, c * d);
            } else {
                for (const auto& [v, e] : fin_.mul_simple_left(i, fin_.basis(u))) aff_add(r, delta, v, c * d * e);
            }
        }
    }
    return r;
}

AffHeckeElt AffineHeckeAlgebra::mul(const AffHeckeElt& a, const AffHeckeElt& b) const {
    AffHeckeElt r;
    for (const auto& [ka, ca] : a) {
        const auto& [alpha, w] = ka;
        AffHeckeElt x = b;
        std::vector<int> word = w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = mul_simple_left(*it, x);
        for (const auto& [kx, cx] : x) {
            Monomial m = kx.first;
            for (std::size_t j = 0; j < m.size(); ++j) m[j] += alpha[j];
            aff_add(r, m, kx.second, ca * cx);
        }
    }
    return r;
}

AffHeckeElt AffineHeckeAlgebra::add(const AffHeckeElt& a, const AffHeckeElt& b) const {
    AffHeckeElt r = a;
    for (const auto& [k, c] : b) aff_add(r, k.first, k.second, c);
    return r;
}

AffHeckeElt AffineHeckeAlgebra::scale(const AffHeckeElt& a, const Scalar& c) const {
    AffHeckeElt r;
    for (const auto& [k, x] : a) aff_add(r, k.first, k.second, x * c);
    return r;
}

std::string AffineHeckeAlgebra::str(const AffHeckeElt& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : a) {
        if (!s.empty()) s += " + ";
        s += "(" + context().render_q(c) + ")";
        for (std::size_t j = 0; j < k.first.size(); ++j)
            if (k.first[j]) s += "*y" + std::to_string(j + 1) + "^" + std::to_string(k.first[j]);
        if (!k.second.is_identity()) s += "*T[" + k.second.str() + "]";
    }
    return s;
}

// ---------------------------------------------------------------------------

Matrix RightModule::sigma_word(const Perm& w) const {
    Matrix m = Matrix::identity(dim);
    for (int i : w.reduced_word()) m = m * s(i);
    return m;
}

Matrix RightModule::y_monomial(const Monomial& mono) const {
    Matrix m = Matrix::identity(dim);
    for (std::size_t j = 0; j < mono.size(); ++j) {
        int e = mono[j];
        if (e == 0) continue;
        if (!affine()) throw UsageError("y generators act only on affine modules");
        const Matrix& g = e > 0 ? y[j] : y_inv[j];
        for (int k = 0; k < std::abs(e); ++k) m = m * g;
    }
    return m;
}

Matrix RightModule::action(const AffHeckeElt& h) const {
    Matrix r(dim, dim);
    for (const auto& [k, c] : h) r += y_monomial(k.first) * sigma_word(k.second) * c;
    return r;
}

Matrix RightModule::action(const HeckeElt& h) const {
    Matrix r(dim, dim);
    for (const auto& [w, c] : h) r += sigma_word(w) * c;
    return r;
}

OperatorSet RightModule::operators() const {
    OperatorSet o;
    o.dim = dim;
    for (std::size_t i = 0; i < sigma.size(); ++i) o.add("s" + std::to_string(i + 1), sigma[i].transpose());
    for (std::size_t j = 0; j < y.size(); ++j) o.add("y" + std::to_string(j + 1), y[j].transpose());
    for (std::size_t j = 0; j < y_inv.size(); ++j) o.add("yinv" + std::to_string(j + 1), y_inv[j].transpose());
    return o;
}

RightModule module_from_operators(const RightModule& like, const OperatorSet& ops) {
    RightModule m;
    m.ctx = like.ctx;
    m.ell = like.ell;
    m.kind = like.kind;
    m.dim = ops.dim;
    m.eigen_candidates = like.eigen_candidates;
    std::size_t k = 0;
    for (std::size_t i = 0; i < like.sigma.size(); ++i) m.sigma.push_back(ops.ops.at(k++).transpose());
    for (std::size_t j = 0; j < like.y.size(); ++j) m.y.push_back(ops.ops.at(k++).transpose());
    for (std::size_t j = 0; j < like.y_inv.size(); ++j) m.y_inv.push_back(ops.ops.at(k++).transpose());
    return m;
}

RightModule RightModule::restrict_to_finite() const {
    RightModule m = *this;
    m.kind = AlgebraKind::Finite;
    m.y.clear();
    m.y_inv.clear();
    return m;
}

std::vector<Probe> RightModule::probes() const {
    std::vector<Probe> out;
    Matrix id = Matrix::identity(dim);
    Scalar q2 = ctx.q_power(2L);
    static const long weights[] = {1, 2, 5, 11, 23, 47};
    if (affine() && !eigen_candidates.empty()) {
        std::vector<Matrix> yt;
        for (const auto& m : y) yt.push_back(m.transpose());
        // Joint eigenvalue tuples with a nonzero common eigenvector.
        std::vector<Scalar> tuple;
        std::function<void(std::size_t, const Matrix&)> search = [&](std::size_t j, const Matrix& stacked) {
            if (j == yt.size()) {
                Matrix a(dim, dim);
                std::string name = "joint y=(";
                for (std::size_t k = 0; k < tuple.size(); ++k) {
                    a += (yt[k] - id * tuple[k]) * Scalar(weights[k % 6]);
                    name += (k ? "," : "") + ctx.render_q(tuple[k]);
                }
                out.push_back({name + ")", std::move(a)});
                return;
            }
            for (const Scalar& lam : eigen_candidates) {
                Matrix d = yt[j] - id * lam;
                std::vector<SparseVec> rows;
                for (std::size_t r = 0; r < stacked.rows(); ++r) rows.push_back(stacked.row(r));
                for (std::size_t r = 0; r < d.rows(); ++r) rows.push_back(d.row(r));
                Matrix next = Matrix::from_rows(dim, rows);
                if (kernel(next).empty()) continue;
                tuple.push_back(lam);
                search(j + 1, next);
                tuple.pop_back();
            }
        };
        search(0, Matrix(0, dim));
        for (std::size_t j = 0; j < yt.size(); ++j)
            for (const Scalar& lam : eigen_candidates)
                out.push_back({"y" + std::to_string(j + 1) + "-(" + ctx.render_q(lam) + ")", yt[j] - id * lam});
    }
    Matrix sum_sign(dim, dim), sum_triv(dim, dim);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        Matrix st = sigma[i].transpose();
        out.push_back({"s" + std::to_string(i + 1) + "+1", st + id});
        out.push_back({"s" + std::to_string(i + 1) + "-q^2", st - id * q2});
        sum_sign += (st + id) * Scalar(weights[i % 6]);
        sum_triv += (st - id * q2) * Scalar(weights[i % 6]);
    }
    if (sigma.size() > 1) {
        out.push_back({"sign combination", sum_sign});
        out.push_back({"trivial combination", sum_triv});
    }
    return out;
}

nlohmann::json RightModule::to_json() const {
    nlohmann::json j;
    j["algebra"] = affine() ? "Hhat" : "H";
    j["ell"] = ell;
    j["dim"] = dim;
    j["context"] = context_to_json(ctx);
    nlohmann::json g = nlohmann::json::object();
    for (std::size_t i = 0; i < sigma.size(); ++i) g["s" + std::to_string(i + 1)] = matrix_to_json(sigma[i]);
    for (std::size_t k = 0; k < y.size(); ++k) {
        g["y" + std::to_string(k + 1)] = matrix_to_json(y[k]);
        g["yinv" + std::to_string(k + 1)] = matrix_to_json(y_inv[k]);
    }
    j["generators"] = g;
    if (!eigen_candidates.empty()) {
        nlohmann::json e = nlohmann::json::array();
        for (const auto& s : eigen_candidates) e.push_back(s.str());
        j["eigen_candidates"] = e;
    }
    return j;
}

RightModule RightModule::from_json(const nlohmann::json& j) {
    RightModule m;
    std::string alg = j.at("algebra").get<std::string>();
    if (alg != "H" && alg != "Hhat") throw UsageError("not a Hecke module descriptor: algebra '" + alg + "'");
    m.kind = alg == "Hhat" ? AlgebraKind::Affine : AlgebraKind::Finite;
    m.ell = j.at("ell").get<int>();
    m.dim = j.at("dim").get<std::size_t>();
    m.ctx = j.contains("context") ? context_from_json(j["context"]) : ScalarContext(1);
    const auto& g = j.at("generators");
    auto get = [&](const std::string& name) {
        if (!g.contains(name)) throw UsageError("module descriptor lacks generator " + name);
        return matrix_from_json(m.ctx, g[name], m.dim, m.dim);
    };
    for (int i = 1; i < m.ell; ++i) m.sigma.push_back(get("s" + std::to_string(i)));
    if (m.affine())
        for (int k = 1; k <= m.ell; ++k) {
            m.y.push_back(get("y" + std::to_string(k)));
            m.y_inv.push_back(get("yinv" + std::to_string(k)));
        }
    if (j.contains("eigen_candidates"))
        for (const auto& e : j["eigen_candidates"]) m.eigen_candidates.push_back(m.ctx.parse(e.get<std::string>()));
    return m;
}

// ---------------------------------------------------------------------------

std::vector<RelationResult> verify_hecke_relations(const RightModule& m) {
    std::vector<RelationResult> out;
    Matrix id = Matrix::identity(m.dim);
    Scalar q2 = m.ctx.q_power(2L);
    auto S = [&](int i) -> const Matrix& { return m.s(i); };
    auto si = [](int i) { return "s" + std::to_string(i); };
    for (int i = 1; i < m.ell; ++i)
        out.push_back({"quadratic " + si(i), ((S(i) + id) * (S(i) - id * q2)).is_zero()});
    for (int i = 1; i + 1 < m.ell; ++i)
        out.push_back({"braid " + si(i) + " " + si(i + 1),
                       S(i) * S(i + 1) * S(i) == S(i + 1) * S(i) * S(i + 1)});
    for (int i = 1; i < m.ell; ++i)
        for (int j = i + 2; j < m.ell; ++j)
            out.push_back({"commute " + si(i) + " " + si(j), S(i) * S(j) == S(j) * S(i)});
    if (!m.affine()) return out;
    auto yi = [](int j) { return "y" + std::to_string(j); };
    for (int j = 1; j <= m.ell; ++j) {
        const Matrix& y = m.y[static_cast<std::size_t>(j - 1)];
        const Matrix& yv = m.y_inv[static_cast<std::size_t>(j - 1)];
        out.push_back({"inverse " + yi(j), y * yv == id && yv * y == id});
    }
    for (int j = 1; j <= m.ell; ++j)
        for (int k = j + 1; k <= m.ell; ++k)
            out.push_back({"commute " + yi(j) + " " + yi(k), m.yj(j) * m.yj(k) == m.yj(k) * m.yj(j)});
    for (int i = 1; i < m.ell; ++i)
        for (int j = 1; j <= m.ell; ++j)
            if (j != i && j != i + 1)
                out.push_back({"commute " + yi(j) + " " + si(i), m.yj(j) * S(i) == S(i) * m.yj(j)});
    for (int i = 1; i < m.ell; ++i)
        out.push_back({"cross " + si(i) + " " + yi(i) + " " + si(i), S(i) * m.yj(i) * S(i) == m.yj(i + 1) * q2});
    return out;
}

namespace {

std::map<Perm, std::size_t> perm_index(const std::vector<Perm>& perms) {
    std::map<Perm, std::size_t> idx;
    for (std::size_t k = 0; k < perms.size(); ++k) idx[perms[k]] = k;
    return idx;
}

std::vector<Scalar> dedupe(std::vector<Scalar> v) {
    std::vector<Scalar> out;
    for (auto& s : v)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    return out;
}

}  // namespace

RightModule regular_module(const ScalarContext& ctx, int ell) {
    HeckeAlgebra h(ctx, ell);
    RightModule m;
    m.ctx = ctx;
    m.ell = ell;
    m.kind = AlgebraKind::Finite;
    m.dim = static_cast<std::size_t>(factorial(ell));
    for (int i = 1; i < ell; ++i) m.sigma.push_back(h.right_regular(i));
    return m;
}

RightModule one_dim_module(const ScalarContext& ctx, int ell, const Scalar& c) {
    RightModule m;
    m.ctx = ctx;
    m.ell = ell;
    m.kind = AlgebraKind::Finite;
    m.dim = 1;
    for (int i = 1; i < ell; ++i) m.sigma.push_back(Matrix::diagonal({c}));
    return m;
}

RightModule universal_module(const ScalarContext& ctx, const std::vector<Scalar>& a) {
    int ell = static_cast<int>(a.size());
    for (const auto& x : a)
        if (x.is_zero()) throw UsageError("parameters of the universal module must be nonzero");
    AffineHeckeAlgebra alg(ctx, ell);
    RightModule m = regular_module(ctx, ell);
    m.kind = AlgebraKind::Affine;
    std::vector<Perm> perms = all_perms(ell);
    auto idx = perm_index(perms);
    auto evaluate = [&](const Monomial& g) {
        Scalar v(1L);
        for (std::size_t j = 0; j < g.size(); ++j) v *= a[j].pow(g[j]);
        return v;
    };
    for (int j = 1; j <= ell; ++j) {
        for (int power : {1, -1}) {
            Matrix mat(m.dim, m.dim);
            for (std::size_t k = 0; k < perms.size(); ++k) {
                AffHeckeElt prod = alg.mul(alg.from_finite(alg.finite().basis(perms[k])), alg.y(j, power));
                for (const auto& [key, c] : prod) mat.add_to(k, idx.at(key.second), c * evaluate(key.first));
            }
            (power == 1 ? m.y : m.y_inv).push_back(std::move(mat));
        }
    }
    m.eigen_candidates = dedupe(a);
    return m;
}

RightModule zelevinsky_induce(const RightModule& m1, const RightModule& m2) {
    if (m1.kind != m2.kind) throw UsageError("cannot induce from modules over different algebras");
    if (!m1.ctx.same_field(m2.ctx)) throw UsageError("modules live over different scalar contexts");
    int l1 = m1.ell, l2 = m2.ell, ell = l1 + l2;
    bool aff = m1.affine();
    AffineHeckeAlgebra alg(m1.ctx, ell);
    std::vector<Perm> reps = min_coset_reps(l1, l2);
    auto rep_idx = perm_index(reps);
    Composition pi{l1, l2};
    std::size_t nd = reps.size();
    RightModule m;
    m.ctx = m1.ctx;
    m.ell = ell;
    m.kind = m1.kind;
    m.dim = m1.dim * m2.dim * nd;
    auto index = [&](std::size_t b1, std::size_t b2, std::size_t d) { return (b1 * m2.dim + b2) * nd + d; };
    auto split = [&](const Perm& p, Perm& p1, Perm& p2) {
        std::vector<int> a(p.images().begin(), p.images().begin() + l1);
        std::vector<int> b;
        for (int k = l1; k < ell; ++k) b.push_back(p.images()[static_cast<std::size_t>(k)] - l1);
        p1 = Perm(a);
        p2 = Perm(b);
    };
    auto build = [&](const AffHeckeElt& gen) {
        Matrix mat(m.dim, m.dim);
        for (std::size_t d = 0; d < nd; ++d) {
            AffHeckeElt prod = alg.mul(alg.from_finite(alg.finite().basis(reps[d])), gen);
            for (const auto& [key, c] : prod) {
                const auto& [gamma, u] = key;
                Perm p, dd, p1, p2;
                coset_factor(pi, u, p, dd);
                split(p, p1, p2);
                Monomial g1(gamma.begin(), gamma.begin() + l1), g2(gamma.begin() + l1, gamma.end());
                Matrix a1 = m1.y_monomial(g1) * m1.sigma_word(p1);
                Matrix a2 = m2.y_monomial(g2) * m2.sigma_word(p2);
                std::size_t dj = rep_idx.at(dd);
                for (std::size_t b1 = 0; b1 < m1.dim; ++b1)
                    for (std::size_t b2 = 0; b2 < m2.dim; ++b2)
                        for (const auto& [c1, x1] : a1.row(b1))
                            for (const auto& [c2, x2] : a2.row(b2)) mat.add_to(index(b1, b2, d), index(c1, c2, dj), c * x1 * x2);
            }
        }
        return mat;
    };
    for (int i = 1; i < ell; ++i) m.sigma.push_back(build(alg.sigma(i)));
    if (aff) {
        for (int j = 1; j <= ell; ++j) m.y.push_back(build(alg.y(j, 1)));
        for (int j = 1; j <= ell; ++j) m.y_inv.push_back(build(alg.y(j, -1)));
        std::vector<Scalar> c = m1.eigen_candidates;
        c.insert(c.end(), m2.eigen_candidates.begin(), m2.eigen_candidates.end());
        m.eigen_candidates = dedupe(c);
    }
    return m;
}

RightModule cherednik_pullback(const RightModule& base, const Scalar& a) {
    if (base.affine()) throw UsageError("pullback expects a finite Hecke module");
    if (a.is_zero()) throw UsageError("pullback parameter must be nonzero");
    RightModule m = base;
    m.kind = AlgebraKind::Affine;
    m.y.clear();
    m.y_inv.clear();
    const ScalarContext& ctx = base.ctx;
    Matrix id = Matrix::identity(m.dim);
    Scalar q2 = ctx.q_power(2L);
    std::vector<Matrix> inv;
    for (const auto& s : m.sigma) inv.push_back((s - id * (q2 - Scalar(1L))) * q2.inverse());
    for (int j = 1; j <= m.ell; ++j) {
        // sigma_{j-1} ... sigma_2 sigma_1^2 sigma_2 ... sigma_{j-1}
        std::vector<int> word;
        for (int i = j - 1; i >= 1; --i) word.push_back(i);
        for (int i = 1; i <= j - 1; ++i) word.push_back(i);
        Matrix p = id, pinv = id;
        for (int i : word) {
            p = p * m.s(i);
            pinv = pinv * inv[static_cast<std::size_t>(i - 1)];
        }
        Scalar c = a * ctx.q_power(static_cast<long>(-2 * (j - 1)));
        m.y.push_back(p * c);
        m.y_inv.push_back(pinv * c.inverse());
    }
    std::vector<Scalar> cands;
    for (int k = -2 * m.ell; k <= 2 * m.ell; ++k) cands.push_back(a * ctx.q_power(static_cast<long>(k)));
    m.eigen_candidates = cands;
    return m;
}

}  // namespace qaff
