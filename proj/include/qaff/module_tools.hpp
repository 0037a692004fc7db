#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaff/linalg.hpp"

namespace qaff {

// A module presented by the matrices of its generators acting on column vectors.
struct OperatorSet {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Matrix> ops;

    OperatorSet transposed() const;
    void add(std::string name, Matrix m);
};

struct RelationResult {
    std::string relation;
    bool pass;
};

bool all_pass(const std::vector<RelationResult>& r);
nlohmann::json relations_to_json(const std::vector<RelationResult>& r);

// An algebra element expected to be singular; its kernel seeds submodule searches.
struct Probe {
    std::string name;
    Matrix op;
};

Echelon spin(const OperatorSet& m, const std::vector<SparseVec>& seeds);
bool is_invariant(const OperatorSet& m, const Echelon& sub);
// Action on an invariant subspace, in the order of sub.basis().
OperatorSet restrict_to(const OperatorSet& m, const Echelon& sub);
// Action on the quotient, with basis the images of the unit vectors at sub.free_columns().
OperatorSet quotient_by(const OperatorSet& m, const Echelon& sub);
std::vector<Scalar> quotient_coordinates(const Echelon& sub, const SparseVec& v);
// Largest submodule contained in the given subspace.
Echelon largest_submodule_in(const OperatorSet& m, const Echelon& space);

struct IrreducibilityCertificate {
    bool irreducible = false;
    // dimension, norton, spin, dual-spin, burnside, radical
    std::string method;
    std::string probe;
    SparseVec witness;
    SparseVec dual_witness;
    // Basis of a proper nonzero submodule when reducible.
    std::vector<SparseVec> submodule;

    nlohmann::json to_json(std::size_t dim) const;
};

IrreducibilityCertificate is_irreducible(const OperatorSet& m, const std::vector<Probe>& probes,
                                         std::uint64_t seed = 1);
// Deterministic re-check of a certificate.
bool check_certificate(const OperatorSet& m, const std::vector<Probe>& probes, const IrreducibilityCertificate& c);

// Basis of {T : T A_g = B_g T for every generator g}; generator names must agree.
std::vector<Matrix> hom_space(const OperatorSet& a, const OperatorSet& b);
bool is_intertwiner(const OperatorSet& a, const OperatorSet& b, const Matrix& t);
bool is_invertible(const Matrix& t);

struct IsoResult {
    bool isomorphic = false;
    Matrix intertwiner;  // B-coordinates of the image of each A basis vector (columns)
    std::string reason;
};

// Solve for the hom space and look for an invertible element by random sampling.
IsoResult generic_isomorphism(const OperatorSet& a, const OperatorSet& b, std::uint64_t seed = 1);

}  // namespace qaff
