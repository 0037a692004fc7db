#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qaff/affinization.hpp"

namespace qaff {

// Center coeff * q^{half_exp/2}, length >= 1.
struct Segment {
    Rational coeff;
    long half_exp = 0;
    int length = 1;

    Scalar center(const ScalarContext& ctx) const;
    // (c q^{-k+1}, c q^{-k+3}, ..., c q^{k-1})
    std::vector<Scalar> expansion(const ScalarContext& ctx) const;
    std::string str() const;  // "coeff@half_exp:length"
};

// Multiset of segments kept in juxtaposition order: length descending, then by str().
struct SegmentList {
    std::vector<Segment> segments;

    int total_length() const;
    Composition partition() const;
    std::vector<Scalar> juxtaposition(const ScalarContext& ctx) const;
    std::string str() const;
};

// Parses "c@e:k,c@e:k,..."; errors carry the character position.
SegmentList parse_segments(const std::string& spec);
SegmentList make_segments(std::vector<Segment> segs);

// Coefficient vectors (lowest degree first) of monic polynomials in u.
struct PolyTuple {
    std::vector<std::vector<Scalar>> polys;

    std::vector<int> degrees() const;
    // coefficients rendered in q-notation
    nlohmann::json to_json(const ScalarContext& ctx) const;
};

PolyTuple drinfeld_polys(const SegmentList& s, const ScalarContext& ctx);
// Product of linear factors "(u - r)" in q-notation, or "1".
std::vector<std::string> drinfeld_factored(const SegmentList& s, const ScalarContext& ctx);

// M_a for the juxtaposition vector, with the submodule generated by C_{w_pi}.
struct IdealResult {
    RightModule universal;   // M_a
    SparseVec marked;        // C_{w_pi} in the sigma_w basis of M_a
    Echelon ideal;           // subspace of M_a
    RightModule module;      // action on the ideal, in the order of ideal.basis()
};

IdealResult ideal_I_pi(const SegmentList& s, const ScalarContext& ctx);

// Left multiplication by C_i, as a row-form map M_{a tau_i} -> M_a.
struct IntertwinerResult {
    RightModule source, target;
    Matrix map;
};

IntertwinerResult intertwiner_A(const SegmentList& s, const ScalarContext& ctx, int i);
// Intersection of the images of A_{a,i} over the non-boundary i.
Echelon intersection_of_images(const SegmentList& s, const ScalarContext& ctx);

// Irreducible right H_l-module attached to the partition pi, cut out of the
// right ideal generated by C_{w_pi}.
RightModule specht_module(const ScalarContext& ctx, const Composition& pi);

struct IrreducibleResult {
    RightModule module;
    std::size_t ideal_dim = 0;
};

// The composition factor of the ideal generated by C_{w_pi} in M_a whose
// restriction to H_l contains the irreducible attached to pi.
IrreducibleResult irreducible_V_a(const SegmentList& s, const ScalarContext& ctx);

struct Lemma64Result {
    bool pass = false;
    Scalar extracted;  // root read off from x_0^+ on the highest-weight vector
    Scalar expected;
    std::string reason;
};

// W is F(V_a) of a single segment of length m with center c.
Lemma64Result lemma64_check(const UqModule& w, int m, const Scalar& center);

// lambda - mu is a non-negative integer combination of simple roots.
bool dominates(const Weight& lambda, const Weight& mu);

// Highest weight of W if it has a unique maximal weight with one-dimensional
// highest-weight space; empty otherwise.
std::vector<long> top_highest_weight(const UqModule& w);

}  // namespace qaff
