#include "qaff/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qaff/errors.hpp"

namespace qaff {

Perm::Perm(std::vector<int> images) : w_(std::move(images)) {
    std::vector<int> seen(w_.size() + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)]++)
            throw UsageError("not a permutation: " + str());
    }
}

Perm Perm::identity(int ell) {
    std::vector<int> w(static_cast<std::size_t>(ell));
    std::iota(w.begin(), w.end(), 1);
    Perm p;
    p.w_ = std::move(w);
    return p;
}

Perm Perm::simple(int ell, int i) {
    if (i < 1 || i >= ell) throw UsageError("simple transposition index out of range");
    return identity(ell).times_simple(i);
}

Perm Perm::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> w;
    int v;
    while (is >> v) w.push_back(v);
    if (!is.eof()) throw UsageError("malformed permutation '" + text + "'");
    return Perm(std::move(w));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw UsageError("composing permutations of different sizes");
    Perm r;
    r.w_.resize(b.w_.size());
    for (std::size_t i = 0; i < b.w_.size(); ++i) r.w_[i] = a.w_[static_cast<std::size_t>(b.w_[i] - 1)];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.w_.resize(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return r;
}

Perm Perm::times_simple(int i) const {
    Perm r = *this;
    std::swap(r.w_[static_cast<std::size_t>(i - 1)], r.w_[static_cast<std::size_t>(i)]);
    return r;
}

Perm Perm::simple_times(int i) const {
    Perm r = *this;
    for (int& v : r.w_) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return r;
}

int Perm::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

bool Perm::is_left_descent(int i) const {
    // s_i w < w iff w^{-1}(i) > w^{-1}(i+1)
    std::size_t pi = 0, pj = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        if (w_[k] == i) pi = k;
        if (w_[k] == i + 1) pj = k;
    }
    return pi > pj;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    while (!w.is_identity()) {
        for (int i = 1; i < w.size(); ++i) {
            if (w.is_right_descent(i)) {
                word.push_back(i);
                w = w.times_simple(i);
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Perm::str() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w_[i]);
    }
    return s;
}

int total(const Composition& pi) { return std::accumulate(pi.begin(), pi.end(), 0); }

void validate_composition(const Composition& pi) {
    if (pi.empty()) throw UsageError("empty composition");
    for (int p : pi)
        if (p < 1) throw UsageError("composition parts must be positive");
}

std::vector<int> parabolic_generators(const Composition& pi) {
    std::vector<int> g;
    int start = 1;
    for (int p : pi) {
        for (int i = start; i < start + p - 1; ++i) g.push_back(i);
        start += p;
    }
    return g;
}

std::vector<Perm> all_perms(int ell) {
    std::vector<int> w(static_cast<std::size_t>(ell));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::stable_sort(out.begin(), out.end(), [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
    return out;
}

std::vector<Perm> elements_of_parabolic(const Composition& pi) {
    validate_composition(pi);
    std::vector<Perm> out;
    for (const Perm& w : all_perms(total(pi))) {
        // w preserves every block
        bool ok = true;
        int start = 1;
        for (int p : pi) {
            for (int i = start; i < start + p && ok; ++i) ok = w(i) >= start && w(i) < start + p;
            start += p;
        }
        if (ok) out.push_back(w);
    }
    return out;
}

Perm parabolic_longest(const Composition& pi) {
    validate_composition(pi);
    std::vector<int> w;
    int start = 1;
    for (int p : pi) {
        for (int k = start + p - 1; k >= start; --k) w.push_back(k);
        start += p;
    }
    return Perm(std::move(w));
}

std::vector<Perm> min_coset_reps(const Composition& pi) {
    validate_composition(pi);
    std::vector<int> gens = parabolic_generators(pi);
    std::vector<Perm> out;
    for (const Perm& w : all_perms(total(pi))) {
        bool minimal = std::none_of(gens.begin(), gens.end(), [&](int i) { return w.is_left_descent(i); });
        if (minimal) out.push_back(w);
    }
    return out;
}

std::vector<Perm> min_coset_reps(int ell1, int ell2) {
    if (ell1 == 0 || ell2 == 0) return {Perm::identity(ell1 + ell2)};
    return min_coset_reps(Composition{ell1, ell2});
}

void coset_factor(const Composition& pi, const Perm& w, Perm& u, Perm& d) {
    std::vector<int> gens = parabolic_generators(pi);
    u = Perm::identity(w.size());
    d = w;
    // Peel parabolic left descents off d until none remain.
    for (bool moved = true; moved;) {
        moved = false;
        for (int i : gens) {
            if (d.is_left_descent(i)) {
                d = d.simple_times(i);
                u = u.times_simple(i);
                moved = true;
            }
        }
    }
}

long factorial(int k) {
    long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace qaff
