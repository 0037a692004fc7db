#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qaff {

// Permutation of {1..l} in one-line notation: images()[i-1] = w(i).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int ell);
    // The simple transposition swapping i and i+1 (1-based).
    static Perm simple(int ell, int i);
    static Perm parse(const std::string& text);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return w_; }

    // (a * b)(i) = a(b(i))
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;
    // Right multiplication by the simple transposition: swaps positions i, i+1.
    Perm times_simple(int i) const;
    // Left multiplication by the simple transposition: swaps values i, i+1.
    Perm simple_times(int i) const;

    int length() const;
    bool is_right_descent(int i) const { return w_[static_cast<std::size_t>(i - 1)] > w_[static_cast<std::size_t>(i)]; }
    bool is_left_descent(int i) const;
    bool is_identity() const;
    // Letters i_1..i_k with w = s_{i_1} ... s_{i_k}, found by stripping right descents.
    std::vector<int> reduced_word() const;

    std::string str() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.w_ != b.w_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.w_ < b.w_; }

private:
    std::vector<int> w_;
};

// Ordered block sizes; the parabolic subgroup permutes within consecutive blocks.
using Composition = std::vector<int>;

int total(const Composition& pi);
void validate_composition(const Composition& pi);
// Simple reflections generating the parabolic subgroup.
std::vector<int> parabolic_generators(const Composition& pi);
std::vector<Perm> elements_of_parabolic(const Composition& pi);
// Longest element: reverses each block.
Perm parabolic_longest(const Composition& pi);
// Minimal length representatives d of the right cosets W_pi d.
std::vector<Perm> min_coset_reps(const Composition& pi);
std::vector<Perm> min_coset_reps(int ell1, int ell2);
// All elements, identity first, then by length and one-line order.
std::vector<Perm> all_perms(int ell);
// Split w = u * d with u in the parabolic subgroup and d a minimal representative.
void coset_factor(const Composition& pi, const Perm& w, Perm& u, Perm& d);

long factorial(int k);
long binomial(int a, int b);

}  // namespace qaff
