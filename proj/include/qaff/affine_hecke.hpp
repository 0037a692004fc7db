#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaff/hecke.hpp"
#include "qaff/module_tools.hpp"

namespace qaff {

// Exponent vector of y_1..y_l (entries may be negative).
using Monomial = std::vector<int>;
// Bernstein normal form: sum of c * y^alpha * sigma_w, y's on the left.
using AffHeckeElt = std::map<std::pair<Monomial, Perm>, Scalar>;

void aff_add(AffHeckeElt& a, const Monomial& m, const Perm& w, const Scalar& c);

class AffineHeckeAlgebra {
public:
    AffineHeckeAlgebra(ScalarContext ctx, int ell);

    const HeckeAlgebra& finite() const { return fin_; }
    const ScalarContext& context() const { return fin_.context(); }
    int ell() const { return fin_.ell(); }

    AffHeckeElt one() const;
    AffHeckeElt sigma(int i) const;
    AffHeckeElt y(int j, int power = 1) const;
    AffHeckeElt monomial(const Monomial& m) const;
    AffHeckeElt from_finite(const HeckeElt& h) const;

    // sigma_i * y^beta rewritten with the y's on the left.
    AffHeckeElt straighten(int i, const Monomial& beta) const;
    AffHeckeElt mul_simple_left(int i, const AffHeckeElt& x) const;
    AffHeckeElt mul(const AffHeckeElt& a, const AffHeckeElt& b) const;
    AffHeckeElt add(const AffHeckeElt& a, const AffHeckeElt& b) const;
    AffHeckeElt scale(const AffHeckeElt& a, const Scalar& c) const;

    std::string str(const AffHeckeElt& a) const;

private:
    HeckeAlgebra fin_;
};

enum class AlgebraKind { Finite, Affine };

// Right module over the finite or affine Hecke algebra. Matrices act on row
// vectors, so m.g.g' corresponds to the product R_g R_g' in reading order.
struct RightModule {
    ScalarContext ctx{1};
    int ell = 0;
    AlgebraKind kind = AlgebraKind::Finite;
    std::size_t dim = 0;
    std::vector<Matrix> sigma;  // sigma[i-1] for i = 1..l-1
    std::vector<Matrix> y;      // y[j-1] for j = 1..l, affine only
    std::vector<Matrix> y_inv;
    // Values that may occur as eigenvalues of the y_j; used to find singular elements.
    std::vector<Scalar> eigen_candidates;

    bool affine() const { return kind == AlgebraKind::Affine; }
    const Matrix& s(int i) const { return sigma.at(static_cast<std::size_t>(i - 1)); }
    const Matrix& yj(int j) const { return y.at(static_cast<std::size_t>(j - 1)); }

    // Matrix of m -> m.h
    Matrix action(const AffHeckeElt& h) const;
    Matrix action(const HeckeElt& h) const;
    Matrix sigma_word(const Perm& w) const;
    Matrix y_monomial(const Monomial& m) const;

    // Column-operator view for module tools.
    OperatorSet operators() const;
    RightModule restrict_to_finite() const;
    // Singular algebra elements (column form) whose kernels seed submodule searches.
    std::vector<Probe> probes() const;

    nlohmann::json to_json() const;
    static RightModule from_json(const nlohmann::json& j);
};

// Build a module from column operators (as produced by module tools) in the
// same generator layout as `like`.
RightModule module_from_operators(const RightModule& like, const OperatorSet& ops);

// All defining relations of the (affine) Hecke algebra, checked as matrix identities.
std::vector<RelationResult> verify_hecke_relations(const RightModule& m);

// Quotient of the affine Hecke algebra by the right ideal generated by y_j - a_j.
RightModule universal_module(const ScalarContext& ctx, const std::vector<Scalar>& a);
// Regular right module of the finite Hecke algebra.
RightModule regular_module(const ScalarContext& ctx, int ell);
// One-dimensional module sigma_i -> c (c = -1 or q^2).
RightModule one_dim_module(const ScalarContext& ctx, int ell, const Scalar& c);

// (M1 (x) M2) (x) over the parabolic subalgebra of the (affine) Hecke algebra.
// Basis m1 (x) m2 (x) sigma_d, indexed ((b1 * dim2) + b2) * #reps + d.
RightModule zelevinsky_induce(const RightModule& m1, const RightModule& m2);

// Pull back a finite Hecke module along the evaluation map
// y_j -> a q^{-2(j-1)} sigma_{j-1}...sigma_2 sigma_1^2 sigma_2...sigma_{j-1}.
RightModule cherednik_pullback(const RightModule& m, const Scalar& a);

}  // namespace qaff
