#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaff/affine_hecke.hpp"
#include "qaff/module_tools.hpp"

namespace qaff {

// k_i exponents, i = 1..n
using Weight = std::vector<long>;

std::string weight_str(const Weight& w);
// epsilon_r as a weight: +1 at r, -1 at r-1.
Weight epsilon(int n, int r);
Weight fundamental_weight(int n, int i);
bool is_dominant(const Weight& w);
// sum_i i*lambda(i)
long level_of(const Weight& w);

// Left module over U_q(sl_{n+1}), optionally with the gl torus t_r and the
// affine generators x_0^{+-}, k_0. Matrices act on column vectors.
struct UqModule {
    ScalarContext ctx{1};
    std::size_t dim = 0;
    bool affine = false;
    bool has_t = false;
    // index i = 0..n; entry 0 is empty unless affine
    std::vector<Matrix> xp, xm, k, kinv;
    // index r-1 for r = 1..n+1
    std::vector<Matrix> t, tinv;
    // weight of each basis vector (k_i diagonal in this basis)
    std::vector<Weight> weights;

    int n() const { return ctx.n(); }
    OperatorSet operators() const;
    // Weight of every basis vector read off the diagonal k_i.
    void compute_weights();
    std::vector<Probe> probes() const;

    nlohmann::json to_json() const;
    static UqModule from_json(const nlohmann::json& j);
};

UqModule uq_from_operators(const UqModule& like, const OperatorSet& ops);
// Drop x_0, k_0 (and optionally t).
UqModule restrict_to_finite(const UqModule& w, bool keep_t = true);

struct NaturalRep {
    UqModule v;
    Matrix x_theta_plus, x_theta_minus, k_theta, k_theta_inv;
};

NaturalRep natural_rep(const ScalarContext& ctx);
// Coproduct action on A (x) B, basis index a * dim B + b.
UqModule tensor(const UqModule& a, const UqModule& b);
UqModule tensor_rep(const UqModule& base, int ell);
// Kronecker product of per-factor matrices.
Matrix kron_all(const std::vector<Matrix>& factors);

Matrix rcheck(const ScalarContext& ctx);
Matrix rcheck_i(const ScalarContext& ctx, int ell, int i);

// Joint kernel of x_i^+ (i = 1..n) inside each weight space.
std::map<Weight, std::vector<SparseVec>> highest_weight_vectors(const UqModule& w);
std::map<Weight, std::size_t> character(const UqModule& w);
std::map<Weight, std::vector<std::size_t>> weight_spaces(const UqModule& w);
// Irreducible module of highest weight lambda, cut out of V^{(x) level}.
UqModule irreducible_highest_weight(const ScalarContext& ctx, const Weight& lambda);

// Defining relations for the finite Cartan matrix, or the affine one when w.affine.
std::vector<RelationResult> verify_quantum_relations(const UqModule& w);

// M (x)_{H_l} V^{(x)l}, with sigma_i acting on V^{(x)l} as R_i.
// Ambient basis index b * (n+1)^l + v.
struct JimboQuotient {
    std::size_t dim_m = 0, nv = 0;
    int ell = 0;
    struct Block {
        std::vector<std::size_t> cols;  // ambient indices in column order
        Echelon rel;                    // defining relations, local coordinates
    };
    std::vector<Block> blocks;
    std::vector<std::size_t> block_of, local_of;
    std::vector<std::size_t> basis;     // ambient index of each quotient basis vector
    std::vector<long> quotient_index;   // ambient -> quotient index or -1

    std::size_t ambient_dim() const { return dim_m * nv; }
    std::vector<SparseVec> relation_basis() const;
    SparseVec project(const SparseVec& ambient) const;
    // Operator on the quotient induced by an ambient operator given on basis vectors;
    // throws MathError if the relation subspace is not preserved.
    Matrix induced(const std::function<SparseVec(std::size_t)>& op, const std::string& name) const;
};

struct JimboResult {
    UqModule module;
    JimboQuotient quotient;
};

JimboResult jimbo_J(const RightModule& m, int n);

// Search for an invertible intertwiner through highest-weight vectors.
IsoResult uq_isomorphism(const UqModule& a, const UqModule& b, std::uint64_t seed = 1);

}  // namespace qaff
