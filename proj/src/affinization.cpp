#include "qaff/affinization.hpp"

#include <algorithm>

#include "qaff/errors.hpp"

namespace qaff {

UqModule evaluation_module(const ScalarContext& ctx, const Scalar& a) {
    if (a.is_zero()) throw UsageError("evaluation parameter must be nonzero");
    NaturalRep nr = natural_rep(ctx);
    UqModule v = nr.v;
    v.affine = true;
    v.xp[0] = nr.x_theta_minus * a;
    v.xm[0] = nr.x_theta_plus * a.inverse();
    v.k[0] = nr.k_theta_inv;
    v.kinv[0] = nr.k_theta;
    return v;
}

namespace {

// Per-factor matrices on V^{(x)l} with `mid` at position j (1-based).
Matrix chain(const Matrix& left, const Matrix& mid, const Matrix& right, int ell, int j) {
    std::vector<Matrix> f;
    for (int k = 1; k < j; ++k) f.push_back(left);
    f.push_back(mid);
    for (int k = j + 1; k <= ell; ++k) f.push_back(right);
    return kron_all(f);
}

}  // namespace

FunctorResult functor_F(const RightModule& m) {
    if (!m.affine()) throw UsageError("the affine functor needs a module over the affine Hecke algebra");
    for (const auto& r : verify_hecke_relations(m))
        if (!r.pass) throw MathError("module fails the affine Hecke relation '" + r.relation + "'");
    const ScalarContext& ctx = m.ctx;
    int ell = m.ell;
    JimboResult j = jimbo_J(m.restrict_to_finite(), ctx.n());
    FunctorResult res{j.module, j.quotient};
    const JimboQuotient& jq = res.quotient;

    NaturalRep nr = natural_rep(ctx);
    auto d = static_cast<std::size_t>(ctx.n() + 1);
    Matrix id = Matrix::identity(d);
    // rows of the transposes give the columns
    std::vector<Matrix> yplus, yminus;
    for (int k = 1; k <= ell; ++k) {
        yplus.push_back(chain(id, nr.x_theta_minus, nr.k_theta_inv, ell, k).transpose());
        yminus.push_back(chain(nr.k_theta, nr.x_theta_plus, id, ell, k).transpose());
    }
    std::size_t nv = jq.nv;
    auto affine_op = [&](const std::vector<Matrix>& ym, const std::vector<Matrix>& yv) {
        return [&ym, &yv, nv](std::size_t a) {
            std::size_t b = a / nv, v = a % nv;
            SparseVec out;
            for (std::size_t k = 0; k < ym.size(); ++k)
                for (const auto& [v2, x] : yv[k].row(v))
                    for (const auto& [b2, c] : ym[k].row(b)) out.emplace_back(b2 * nv + v2, c * x);
            std::sort(out.begin(), out.end(), [](const auto& p, const auto& r) { return p.first < r.first; });
            SparseVec merged;
            for (auto& [i, x] : out) {
                if (!merged.empty() && merged.back().first == i)
                    merged.back().second += x;
                else
                    merged.emplace_back(i, x);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& p) { return p.second.is_zero(); }),
                         merged.end());
            return merged;
        };
    };
    auto diag_op = [&](const Matrix& diag) {
        return [diag, nv](std::size_t a) {
            std::size_t b = a / nv, v = a % nv;
            return SparseVec{{b * nv + v, diag.get(v, v)}};
        };
    };
    UqModule& w = res.module;
    w.affine = true;
    w.xp[0] = jq.induced(affine_op(m.y, yplus), "x+0");
    w.xm[0] = jq.induced(affine_op(m.y_inv, yminus), "x-0");
    std::vector<Matrix> kt(static_cast<std::size_t>(ell), nr.k_theta_inv), kti(static_cast<std::size_t>(ell), nr.k_theta);
    w.k[0] = jq.induced(diag_op(kron_all(kt)), "k0");
    w.kinv[0] = jq.induced(diag_op(kron_all(kti)), "kinv0");
    return res;
}

Matrix functor_on_map(const FunctorResult& src, const FunctorResult& dst, const Matrix& f) {
    const JimboQuotient& a = src.quotient;
    const JimboQuotient& b = dst.quotient;
    if (a.nv != b.nv || a.ell != b.ell) throw UsageError("module map between different tensor spaces");
    if (f.rows() != a.dim_m || f.cols() != b.dim_m) throw UsageError("module map has the wrong shape");
    std::size_t nv = a.nv;
    auto image = [&](std::size_t amb) {
        std::size_t m = amb / nv, v = amb % nv;
        SparseVec out;
        for (const auto& [m2, x] : f.row(m)) out.emplace_back(m2 * nv + v, x);
        return out;
    };
    for (const auto& rel : a.relation_basis()) {
        Accumulator acc(b.ambient_dim());
        for (const auto& [amb, x] : rel) acc.add_scaled(image(amb), x);
        if (!b.project(acc.take()).empty()) throw MathError("map does not respect the defining relations");
    }
    std::vector<SparseVec> cols;
    for (std::size_t amb : a.basis) cols.push_back(b.project(image(amb)));
    return Matrix::from_columns(b.basis.size(), cols);
}

bool central_element_trivial(const UqModule& w) {
    if (!w.affine) throw UsageError("central element needs the affine generator k0");
    Matrix c = Matrix::identity(w.dim);
    for (int i = 0; i <= w.n(); ++i) c = c * w.k[static_cast<std::size_t>(i)];
    return c == Matrix::identity(w.dim);
}

std::vector<RelationResult> verify_affine_relations(const UqModule& w) {
    if (!w.affine) throw UsageError("module lacks the affine generators x+0, x-0, k0");
    std::vector<RelationResult> out = verify_quantum_relations(w);
    out.push_back({"k0 k1 ... kn = 1", central_element_trivial(w)});
    return out;
}

UqModule jimbo_eval_pullback(const UqModule& w, const Scalar& a) {
    if (!w.has_t) throw UsageError("evaluation pullback needs the t generators");
    if (a.is_zero()) throw UsageError("evaluation parameter must be nonzero");
    const ScalarContext& ctx = w.ctx;
    int n = w.n();
    Scalar qh = ctx.q_power(Rational(1, 2)), qhi = ctx.q_power(Rational(-1, 2));
    auto bracket = [&](const Matrix& x, const Matrix& y) { return x * y * qh - y * x * qhi; };
    // [x_n, [x_{n-1}, ... [x_2, x_1]...]]
    auto nested = [&](const std::vector<Matrix>& x) {
        Matrix acc = x[1];
        for (int i = 2; i <= n; ++i) acc = bracket(x[static_cast<std::size_t>(i)], acc);
        return acc;
    };
    const Matrix& t1 = w.t.front();
    const Matrix& tn = w.t.back();
    const Matrix& t1i = w.tinv.front();
    const Matrix& tni = w.tinv.back();
    UqModule r = w;
    r.affine = true;
    Scalar half = ctx.q_power(Rational(n + 1, 2));
    Scalar sign_minus = (n - 1) % 2 ? Scalar(-1L) : Scalar(1L);
    r.xp[0] = t1 * tn * nested(w.xm) * (half.inverse() * a);
    r.xm[0] = t1i * tni * nested(w.xp) * (sign_minus * half * a.inverse());
    Matrix kprod = Matrix::identity(w.dim), kinvprod = Matrix::identity(w.dim);
    for (int i = 1; i <= n; ++i) {
        kprod = kprod * w.k[static_cast<std::size_t>(i)];
        kinvprod = kinvprod * w.kinv[static_cast<std::size_t>(i)];
    }
    r.k[0] = kinvprod;
    r.kinv[0] = kprod;
    return r;
}

DualityResult evaluation_duality(const RightModule& m, const Scalar& a, std::uint64_t seed) {
    if (m.affine()) throw UsageError("evaluation duality expects a finite Hecke module");
    const ScalarContext& ctx = m.ctx;
    DualityResult res;
    Scalar shift = ctx.q_power(Rational(-2 * m.ell, ctx.n() + 1));
    res.lhs = functor_F(cherednik_pullback(m, shift * a)).module;
    res.rhs = jimbo_eval_pullback(jimbo_J(m, ctx.n()).module, a);
    res.iso = uq_isomorphism(res.lhs, res.rhs, seed);
    return res;
}

}  // namespace qaff
