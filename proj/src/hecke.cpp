#include "qaff/hecke.hpp"

namespace qaff {

void hecke_add(HeckeElt& a, const Perm& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = a.find(w);
    if (it == a.end()) {
        a.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

HeckeElt hecke_sum(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt r = a;
    for (const auto& [w, c] : b) hecke_add(r, w, c);
    return r;
}

HeckeElt hecke_scale(const HeckeElt& a, const Scalar& c) {
    HeckeElt r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : a) r.emplace(w, x * c);
    return r;
}

Scalar hecke_coeff(const HeckeElt& a, const Perm& w) {
    auto it = a.find(w);
    return it == a.end() ? Scalar() : it->second;
}

HeckeAlgebra::HeckeAlgebra(ScalarContext ctx, int ell) : ctx_(std::move(ctx)), ell_(ell), q2_(ctx_.q_power(2L)) {
    if (ell < 0) throw UsageError("negative rank for the Hecke algebra");
}

HeckeElt HeckeAlgebra::one() const { return {{Perm::identity(ell_), Scalar(1L)}}; }

HeckeElt HeckeAlgebra::basis(const Perm& w) const {
    if (w.size() != ell_) throw UsageError("permutation size does not match the algebra");
    return {{w, Scalar(1L)}};
}

HeckeElt HeckeAlgebra::sigma(int i) const { return basis(Perm::simple(ell_, i)); }

HeckeElt HeckeAlgebra::sigma_inverse(int i) const {
    HeckeElt r;
    Scalar qm2 = q2_.inverse();
    hecke_add(r, Perm::simple(ell_, i), qm2);
    hecke_add(r, Perm::identity(ell_), -(q2_ - Scalar(1L)) * qm2);
    return r;
}

HeckeElt HeckeAlgebra::mul_simple_right(const HeckeElt& a, int i) const {
    if (i < 1 || i >= ell_) throw UsageError("generator index out of range");
    HeckeElt r;
    for (const auto& [w, c] : a) {
        Perm ws = w.times_simple(i);
        if (!w.is_right_descent(i)) {
            hecke_add(r, ws, c);
        } else {
            hecke_add(r, w, c * (q2_ - Scalar(1L)));
            hecke_add(r, ws, c * q2_);
        }
    }
    return r;
}

HeckeElt HeckeAlgebra::mul_simple_left(int i, const HeckeElt& a) const {
    if (i < 1 || i >= ell_) throw UsageError("generator index out of range");
    HeckeElt r;
    for (const auto& [w, c] : a) {
        Perm sw = w.simple_times(i);
        if (!w.is_left_descent(i)) {
            hecke_add(r, sw, c);
        } else {
            hecke_add(r, w, c * (q2_ - Scalar(1L)));
            hecke_add(r, sw, c * q2_);
        }
    }
    return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt r;
    for (const auto& [v, c] : b) {
        HeckeElt x = a;
        for (int i : v.reduced_word()) x = mul_simple_right(x, i);
        for (const auto& [w, d] : x) hecke_add(r, w, d * c);
    }
    return r;
}

HeckeElt HeckeAlgebra::kl_parabolic(const Composition& pi) const {
    if (total(pi) != ell_) throw UsageError("composition does not sum to the rank");
    int top = parabolic_longest(pi).length();
    HeckeElt r;
    for (const Perm& w : elements_of_parabolic(pi)) {
        int l = w.length();
        Scalar c = ctx_.q_power(static_cast<long>(top - 2 * l));
        if ((top - l) % 2) c = -c;
        hecke_add(r, w, c);
    }
    return r;
}

HeckeElt HeckeAlgebra::kl_simple(int i) const {
    HeckeElt r;
    hecke_add(r, Perm::simple(ell_, i), ctx_.q_power(-1L));
    hecke_add(r, Perm::identity(ell_), -ctx_.q());
    return r;
}

Matrix HeckeAlgebra::right_regular(int i) const {
    std::vector<Perm> perms = all_perms(ell_);
    std::map<Perm, std::size_t> index;
    for (std::size_t k = 0; k < perms.size(); ++k) index[perms[k]] = k;
    Matrix m(perms.size(), perms.size());
    for (std::size_t k = 0; k < perms.size(); ++k)
        for (const auto& [w, c] : mul_simple_right(basis(perms[k]), i)) m.set(k, index.at(w), c);
    return m;
}

nlohmann::json HeckeAlgebra::to_json(const HeckeElt& a) const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, c] : a) j.push_back({{"perm", w.str()}, {"scalar", c.str()}});
    return j;
}

HeckeElt HeckeAlgebra::from_json(const nlohmann::json& j) const {
    HeckeElt r;
    for (const auto& e : j) {
        Perm w = Perm::parse(e.at("perm").get<std::string>());
        if (w.size() != ell_) throw UsageError("permutation size does not match the algebra");
        hecke_add(r, w, ctx_.parse(e.at("scalar").get<std::string>()));
    }
    return r;
}

Perm juxtapose(const Perm& a, const Perm& b) {
    std::vector<int> w = a.images();
    for (int v : b.images()) w.push_back(v + a.size());
    return Perm(std::move(w));
}

HeckeElt iota_embed(const HeckeElt& a, int ell1, const HeckeElt& b, int ell2) {
    HeckeElt r;
    for (const auto& [w, c] : a) {
        if (w.size() != ell1) throw UsageError("left factor has the wrong rank");
        for (const auto& [v, d] : b) {
            if (v.size() != ell2) throw UsageError("right factor has the wrong rank");
            hecke_add(r, juxtapose(w, v), c * d);
        }
    }
    return r;
}

}  // namespace qaff
