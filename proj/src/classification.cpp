#include "qaff/classification.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "qaff/errors.hpp"

namespace qaff {

namespace {

std::map<Perm, std::size_t> perm_index(const std::vector<Perm>& perms) {
    std::map<Perm, std::size_t> idx;
    for (std::size_t k = 0; k < perms.size(); ++k) idx[perms[k]] = k;
    return idx;
}

SparseVec hecke_vector(const HeckeElt& h, const std::map<Perm, std::size_t>& idx) {
    SparseVec v;
    for (const auto& [w, c] : h) v.emplace_back(idx.at(w), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

// Backend-independent rendering of c * q^{e/2}.
std::string q_monomial_str(const Rational& c, long half_exp) {
    std::string base;
    if (half_exp != 0) {
        if (half_exp % 2 == 0) {
            long e = half_exp / 2;
            base = e == 1 ? "q" : "q^" + std::to_string(e);
        } else {
            base = "q^(" + std::to_string(half_exp) + "/2)";
        }
    }
    if (base.empty()) return rational_str(c);
    if (c == 1) return base;
    if (c == -1) return "-" + base;
    return rational_str(c) + "*" + base;
}

bool is_boundary(const Composition& pi, int i) {
    int acc = 0;
    for (std::size_t r = 0; r + 1 < pi.size(); ++r) {
        acc += pi[r];
        if (acc == i) return true;
    }
    return false;
}

Composition conjugate(Composition pi) {
    std::sort(pi.begin(), pi.end(), std::greater<int>());
    Composition c;
    for (int k = 1; !pi.empty() && k <= pi.front(); ++k)
        c.push_back(static_cast<int>(std::count_if(pi.begin(), pi.end(), [k](int p) { return p >= k; })));
    return c;
}

// A nonzero element C_{w_pi} sigma_d x_{pi'}: it generates the unique common
// constituent of the ideals C_{w_pi} H and x_{pi'} H.
HeckeElt isotype_generator(const HeckeAlgebra& h, const Composition& pi) {
    HeckeElt c = h.kl_parabolic(pi);
    HeckeElt x;
    for (const Perm& w : elements_of_parabolic(conjugate(pi))) hecke_add(x, w, Scalar(1L));
    for (const Perm& d : all_perms(h.ell())) {
        HeckeElt y = h.mul(h.mul(c, h.basis(d)), x);
        if (!y.empty()) return y;
    }
    throw MathError("no element links the two induced modules");
}

}  // namespace

// ---------------------------------------------------------------------------

Scalar Segment::center(const ScalarContext& ctx) const {
    return Scalar(coeff) * ctx.q_power(Rational(half_exp, 2));
}

std::vector<Scalar> Segment::expansion(const ScalarContext& ctx) const {
    std::vector<Scalar> out;
    Scalar c = center(ctx);
    for (int m = 0; m < length; ++m) out.push_back(c * ctx.q_power(static_cast<long>(-length + 1 + 2 * m)));
    return out;
}

std::string Segment::str() const { return rational_str(coeff) + "@" + std::to_string(half_exp) + ":" + std::to_string(length); }

int SegmentList::total_length() const {
    int t = 0;
    for (const auto& s : segments) t += s.length;
    return t;
}

Composition SegmentList::partition() const {
    Composition pi;
    for (const auto& s : segments) pi.push_back(s.length);
    return pi;
}

std::vector<Scalar> SegmentList::juxtaposition(const ScalarContext& ctx) const {
    std::vector<Scalar> a;
    for (const auto& s : segments)
        for (const auto& x : s.expansion(ctx)) a.push_back(x);
    return a;
}

std::string SegmentList::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) out += (i ? "," : "") + segments[i].str();
    return out;
}

SegmentList make_segments(std::vector<Segment> segs) {
    for (auto& s : segs) {
        s.coeff.canonicalize();
        if (s.coeff == 0) throw UsageError("segment " + s.str() + " has a zero center");
        if (s.length < 1) throw UsageError("segment " + s.str() + " has length " + std::to_string(s.length) + " < 1");
    }
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.str() < b.str();
    });
    return SegmentList{std::move(segs)};
}

SegmentList parse_segments(const std::string& spec) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        return UsageError("segment spec '" + spec + "': column " + std::to_string(pos + 1) + ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
    };
    auto integer = [&](bool allow_sign, const std::string& what) {
        skip_ws();
        std::size_t start = pos;
        if (allow_sign && pos < spec.size() && (spec[pos] == '-' || spec[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == digits) {
            pos = digits;
            throw fail("expected " + what);
        }
        return spec.substr(start, pos - start);
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= spec.size() || spec[pos] != c) throw fail(std::string("expected '") + c + "'");
        ++pos;
    };
    std::vector<Segment> segs;
    skip_ws();
    if (pos == spec.size()) return SegmentList{};
    for (;;) {
        Segment s;
        std::size_t seg_start = pos;
        std::string num = integer(true, "a coefficient");
        std::string den = "1";
        skip_ws();
        if (pos < spec.size() && spec[pos] == '/') {
            ++pos;
            den = integer(false, "a denominator");
            if (mpz_class(den) == 0) throw fail("zero denominator");
        }
        s.coeff = Rational(mpz_class(num), mpz_class(den));
        s.coeff.canonicalize();
        if (s.coeff == 0) {
            pos = seg_start;
            throw fail("segment center must be nonzero");
        }
        expect('@');
        s.half_exp = std::stol(integer(true, "a half-exponent of q"));
        expect(':');
        std::size_t len_pos = pos;
        std::string len = integer(false, "a length");
        if (len.size() > 6 || std::stol(len) < 1) {
            pos = len_pos;
            throw fail("segment length must be at least 1");
        }
        s.length = static_cast<int>(std::stol(len));
        segs.push_back(s);
        skip_ws();
        if (pos == spec.size()) break;
        expect(',');
    }
    return make_segments(std::move(segs));
}

// ---------------------------------------------------------------------------

std::vector<int> PolyTuple::degrees() const {
    std::vector<int> d;
    for (const auto& p : polys) d.push_back(static_cast<int>(p.size()) - 1);
    return d;
}

nlohmann::json PolyTuple::to_json(const ScalarContext& ctx) const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : polys) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& x : p) c.push_back(ctx.render_q(x));
        j.push_back(c);
    }
    return j;
}

namespace {

void check_drinfeld_range(const SegmentList& s, int n) {
    for (const auto& seg : s.segments)
        if (seg.length > n)
            throw UsageError("segment " + seg.str() + " is longer than n = " + std::to_string(n) +
                             "; there is no fundamental weight of that index");
    if (s.total_length() > n)
        throw UsageError("total length " + std::to_string(s.total_length()) + " exceeds n = " + std::to_string(n));
}

}  // namespace

PolyTuple drinfeld_polys(const SegmentList& s, const ScalarContext& ctx) {
    int n = ctx.n();
    check_drinfeld_range(s, n);
    PolyTuple pt;
    pt.polys.assign(static_cast<std::size_t>(n), std::vector<Scalar>{Scalar(1L)});
    for (const auto& seg : s.segments) {
        auto& p = pt.polys[static_cast<std::size_t>(seg.length - 1)];
        Scalar root = seg.center(ctx).inverse();
        // p * (u - root)
        std::vector<Scalar> next(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= p[k] * root;
        }
        p = std::move(next);
    }
    return pt;
}

std::vector<std::string> drinfeld_factored(const SegmentList& s, const ScalarContext& ctx) {
    int n = ctx.n();
    check_drinfeld_range(s, n);
    std::vector<std::vector<std::string>> factors(static_cast<std::size_t>(n));
    for (const auto& seg : s.segments) {
        Rational inv = 1 / seg.coeff;
        std::string root = q_monomial_str(inv, -seg.half_exp);
        factors[static_cast<std::size_t>(seg.length - 1)].push_back(root[0] == '-' ? "u + " + root.substr(1)
                                                                                   : "u - " + root);
    }
    std::vector<std::string> out;
    for (const auto& fs : factors) {
        if (fs.empty()) {
            out.push_back("1");
        } else if (fs.size() == 1) {
            out.push_back(fs.front());
        } else {
            std::string p;
            for (const auto& f : fs) p += "(" + f + ")";
            out.push_back(p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

IdealResult ideal_I_pi(const SegmentList& s, const ScalarContext& ctx) {
    int ell = s.total_length();
    if (ell < 1) throw UsageError("empty segment list");
    IdealResult r;
    r.universal = universal_module(ctx, s.juxtaposition(ctx));
    HeckeAlgebra h(ctx, ell);
    auto idx = perm_index(all_perms(ell));
    r.marked = hecke_vector(h.kl_parabolic(s.partition()), idx);
    OperatorSet ops = r.universal.operators();
    r.ideal = spin(ops, {r.marked});
    r.module = module_from_operators(r.universal, restrict_to(ops, r.ideal));
    return r;
}

IntertwinerResult intertwiner_A(const SegmentList& s, const ScalarContext& ctx, int i) {
    int ell = s.total_length();
    Composition pi = s.partition();
    if (i < 1 || i >= ell) throw UsageError("index " + std::to_string(i) + " out of range 1.." + std::to_string(ell - 1));
    if (is_boundary(pi, i)) throw UsageError("index " + std::to_string(i) + " is a block boundary of the segments");
    std::vector<Scalar> a = s.juxtaposition(ctx);
    std::vector<Scalar> at = a;
    std::swap(at[static_cast<std::size_t>(i - 1)], at[static_cast<std::size_t>(i)]);
    IntertwinerResult r;
    r.source = universal_module(ctx, at);
    r.target = universal_module(ctx, a);
    HeckeAlgebra h(ctx, ell);
    std::vector<Perm> perms = all_perms(ell);
    auto idx = perm_index(perms);
    HeckeElt ci = h.kl_simple(i);
    std::vector<SparseVec> rows;
    for (const Perm& w : perms) rows.push_back(hecke_vector(h.mul(ci, h.basis(w)), idx));
    r.map = Matrix::from_rows(perms.size(), rows);
    return r;
}

Echelon intersection_of_images(const SegmentList& s, const ScalarContext& ctx) {
    int ell = s.total_length();
    std::size_t dim = static_cast<std::size_t>(factorial(ell));
    Echelon cur(dim);
    for (std::size_t k = 0; k < dim; ++k) cur.insert(unit_vector(k));
    Composition pi = s.partition();
    for (int i = 1; i < ell; ++i) {
        if (is_boundary(pi, i)) continue;
        IntertwinerResult a = intertwiner_A(s, ctx, i);
        std::vector<SparseVec> rows;
        for (std::size_t r = 0; r < dim; ++r) rows.push_back(a.map.row(r));
        cur = span_of(dim, intersect(cur, span_of(dim, rows)));
    }
    return cur;
}

RightModule specht_module(const ScalarContext& ctx, const Composition& pi) {
    validate_composition(pi);
    int ell = total(pi);
    HeckeAlgebra h(ctx, ell);
    RightModule reg = regular_module(ctx, ell);
    auto idx = perm_index(all_perms(ell));
    SparseVec y = hecke_vector(isotype_generator(h, pi), idx);
    OperatorSet ops = reg.operators();
    return module_from_operators(reg, restrict_to(ops, spin(ops, {y})));
}

IrreducibleResult irreducible_V_a(const SegmentList& s, const ScalarContext& ctx) {
    IdealResult I = ideal_I_pi(s, ctx);
    const RightModule& m = I.universal;
    int ell = s.total_length();
    HeckeAlgebra h(ctx, ell);
    std::vector<Perm> perms = all_perms(ell);
    auto idx = perm_index(perms);
    HeckeElt y = isotype_generator(h, s.partition());
    OperatorSet ops = m.operators();
    // Affine submodule generated by the copy of the irreducible H-module.
    Echelon x = spin(ops, {hecke_vector(y, idx)});
    std::vector<SparseVec> xb = x.basis();
    // Vectors of X with no component along that irreducible: X sigma_w y = 0 for all w.
    std::vector<SparseVec> eq_rows;
    std::size_t row_off = 0;
    std::map<std::size_t, SparseVec> rows;
    for (const Perm& w : perms) {
        Matrix act = m.action(h.mul(h.basis(w), y));
        for (std::size_t k = 0; k < xb.size(); ++k)
            for (const auto& [c, v] : act.apply_row(xb[k])) rows[row_off + c].emplace_back(k, v);
        row_off += m.dim;
    }
    Matrix eqs(row_off, xb.size());
    for (auto& [r, v] : rows) eqs.row(r) = std::move(v);
    std::vector<SparseVec> u;
    for (const auto& c : kernel(eqs)) {
        Accumulator acc(m.dim);
        for (const auto& [k, v] : c) acc.add_scaled(xb[k], v);
        u.push_back(acc.take());
    }
    Echelon ysub = largest_submodule_in(ops, span_of(m.dim, u));
    OperatorSet opsx = restrict_to(ops, x);
    Echelon yx(xb.size());
    for (const auto& v : ysub.basis()) yx.insert(sparse_from_dense(x.coordinates(v)));
    IrreducibleResult r;
    r.module = module_from_operators(m, quotient_by(opsx, yx));
    r.ideal_dim = I.ideal.rank();
    return r;
}

// ---------------------------------------------------------------------------

bool dominates(const Weight& lambda, const Weight& mu) {
    std::size_t n = lambda.size();
    if (mu.size() != n) throw UsageError("weights of different rank");
    for (std::size_t i = 1; i <= n; ++i) {
        Rational r = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            // inverse Cartan matrix of type A_n
            Rational c(static_cast<long>(std::min(i, j) * (n + 1 - std::max(i, j))), static_cast<long>(n + 1));
            c.canonicalize();
            r += c * (lambda[j - 1] - mu[j - 1]);
        }
        if (r < 0 || r.get_den() != 1) return false;
    }
    return true;
}

std::vector<long> top_highest_weight(const UqModule& w) {
    auto hw = highest_weight_vectors(w);
    auto ch = character(w);
    std::vector<Weight> tops;
    for (const auto& [lam, vs] : hw) {
        bool top = std::all_of(ch.begin(), ch.end(), [&](const auto& kv) { return dominates(lam, kv.first); });
        if (top) tops.push_back(lam);
    }
    if (tops.size() != 1 || hw.at(tops.front()).size() != 1) return {};
    return tops.front();
}

Lemma64Result lemma64_check(const UqModule& w, int m, const Scalar& center) {
    Lemma64Result r;
    int n = w.n();
    if (!w.affine) throw UsageError("lemma check needs an affine module");
    if (m < 1 || m > n) throw UsageError("segment length out of range");
    r.expected = center.inverse();
    auto hw = highest_weight_vectors(w);
    auto it = hw.find(fundamental_weight(n, m));
    if (it == hw.end() || it->second.size() != 1) {
        r.reason = "highest-weight space of weight lambda_" + std::to_string(m) + " is not one-dimensional";
        return r;
    }
    const SparseVec& v = it->second.front();
    SparseVec lhs = w.xp[0].apply(v);
    // x_n^- ... x_{m+1}^- x_1^- ... x_m^- v
    SparseVec rhs = v;
    for (int i = m; i >= 1; --i) rhs = w.xm[static_cast<std::size_t>(i)].apply(rhs);
    for (int i = m + 1; i <= n; ++i) rhs = w.xm[static_cast<std::size_t>(i)].apply(rhs);
    if (rhs.empty() || lhs.empty()) {
        r.reason = "zero image of the highest-weight vector";
        return r;
    }
    Scalar ratio = sparse_get(lhs, rhs.front().first) / rhs.front().second;
    if (lhs != sparse_scale(rhs, ratio)) {
        r.reason = "the two sides are not proportional";
        return r;
    }
    r.extracted = Scalar(m % 2 ? 1L : -1L) / ratio;
    r.pass = r.extracted == r.expected;
    if (!r.pass) r.reason = "extracted parameter differs from the Drinfeld root";
    return r;
}

}  // namespace qaff
