#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "qaff/linalg.hpp"
#include "qaff/scalar.hpp"
#include "qaff/symgroup.hpp"

namespace qaff {

// Sparse combination of the standard basis sigma_w.
using HeckeElt = std::map<Perm, Scalar>;

void hecke_add(HeckeElt& a, const Perm& w, const Scalar& c);
HeckeElt hecke_sum(const HeckeElt& a, const HeckeElt& b);
HeckeElt hecke_scale(const HeckeElt& a, const Scalar& c);
Scalar hecke_coeff(const HeckeElt& a, const Perm& w);

// Finite Hecke algebra on generators sigma_1..sigma_{l-1} with
// (sigma_i + 1)(sigma_i - q^2) = 0 and the braid relations.
class HeckeAlgebra {
public:
    HeckeAlgebra(ScalarContext ctx, int ell);

    const ScalarContext& context() const { return ctx_; }
    int ell() const { return ell_; }
    const Scalar& q2() const { return q2_; }

    HeckeElt one() const;
    HeckeElt sigma(int i) const;
    HeckeElt basis(const Perm& w) const;
    // q^{-2}(sigma_i - (q^2 - 1))
    HeckeElt sigma_inverse(int i) const;

    HeckeElt mul_simple_right(const HeckeElt& a, int i) const;  // a * sigma_i
    HeckeElt mul_simple_left(int i, const HeckeElt& a) const;   // sigma_i * a
    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

    // The parabolic Kazhdan-Lusztig element attached to the composition pi:
    // q^{l(w_pi)} sum_{w in W_pi} (-1)^{l(w_pi)-l(w)} q^{-2 l(w)} sigma_w.
    HeckeElt kl_parabolic(const Composition& pi) const;
    // C_i = q^{-1} sigma_i - q
    HeckeElt kl_simple(int i) const;

    // Matrices of x -> x*sigma_i in the basis all_perms(l), acting on row vectors.
    Matrix right_regular(int i) const;

    nlohmann::json to_json(const HeckeElt& a) const;
    HeckeElt from_json(const nlohmann::json& j) const;

private:
    ScalarContext ctx_;
    int ell_;
    Scalar q2_;
};

// sigma_i (x) 1 -> sigma_i, 1 (x) sigma_i -> sigma_{i+l1}
HeckeElt iota_embed(const HeckeElt& a, int ell1, const HeckeElt& b, int ell2);
Perm juxtapose(const Perm& a, const Perm& b);

}  // namespace qaff
