#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qaff/uq_rep.hpp"

namespace qaff {

// V(a): natural module with x_0^{+-} = a^{+-1} x_theta^{-+}, k_0 = k_theta^{-1}.
UqModule evaluation_module(const ScalarContext& ctx, const Scalar& a);

struct FunctorResult {
    UqModule module;
    JimboQuotient quotient;
};

// Affine extension of J(M). Throws MathError when M fails the affine Hecke relations
// or when an affine generator does not preserve the defining relations of J(M).
FunctorResult functor_F(const RightModule& m);

// Image under F of a module map given in row form (m_b -> sum_c f[b][c] m'_c).
Matrix functor_on_map(const FunctorResult& src, const FunctorResult& dst, const Matrix& f);

// Full relation list for the affine Cartan matrix, plus the central element check.
std::vector<RelationResult> verify_affine_relations(const UqModule& w);
bool central_element_trivial(const UqModule& w);

// Pull back a U_q(gl_{n+1})-module along the evaluation homomorphism at a.
UqModule jimbo_eval_pullback(const UqModule& w, const Scalar& a);

struct DualityResult {
    UqModule lhs, rhs;
    IsoResult iso;
};

// Compares F of the pullback at q^{-2l/(n+1)} a with the evaluation pullback of J(M) at a.
DualityResult evaluation_duality(const RightModule& m, const Scalar& a, std::uint64_t seed = 1);

}  // namespace qaff
