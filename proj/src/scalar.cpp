#include "qaff/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qaff {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remove factors of t; returns how many were removed.
long strip_low(Poly& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k == p.size()) {
        p.clear();
        return 0;
    }
    if (k) p.erase(p.begin(), p.begin() + static_cast<long>(k));
    return static_cast<long>(k);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a * t^sa + b * t^sb, result shifted by min(sa, sb).
Poly add_shifted(const Poly& a, long sa, const Poly& b, long sb, long& out_shift) {
    out_shift = std::min(sa, sb);
    std::size_t oa = static_cast<std::size_t>(sa - out_shift);
    std::size_t ob = static_cast<std::size_t>(sb - out_shift);
    Poly r(std::max(a.size() + oa, b.size() + ob));
    for (std::size_t i = 0; i < a.size(); ++i) r[i + oa] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + ob] += b[i];
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    rem = a;
    quo.clear();
    if (rem.size() < b.size()) return;
    quo.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lb = b.back();
    for (std::size_t k = rem.size(); k-- >= b.size();) {
        if (rem[k] == 0) continue;
        Rational c = rem[k] / lb;
        std::size_t off = k - (b.size() - 1);
        quo[off] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[off + j] -= c * b[j];
        if (k == 0) break;
    }
    trim(rem);
    trim(quo);
}

void make_monic(Poly& p) {
    if (p.empty() || p.back() == 1) return;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
}

Poly gcd(Poly a, Poly b) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly q, r;
        divmod(a, b, q, r);
        make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

Poly exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return q;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Rational rpow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw DivisionByZero();
        return rpow(Rational(1) / x, -e);
    }
    Rational r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

mpz_class lcm_denominators(const Poly& p, mpz_class acc) {
    for (const auto& c : p) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
    return acc;
}

std::string int_laurent_str(const std::vector<mpz_class>& coeffs, long shift) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        long e = static_cast<long>(i) + shift;
        mpz_class mag = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    return os.str();
}

std::size_t term_count(const std::vector<mpz_class>& c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const mpz_class& x) { return x != 0; }));
}

}  // namespace

Scalar::Scalar(long v) {
    if (v != 0) num_.emplace_back(v);
}

Scalar::Scalar(const Rational& v) {
    // mpq_class built from two integers is not reduced until canonicalize()
    Rational c = v;
    c.canonicalize();
    if (c != 0) num_.push_back(std::move(c));
}

Scalar Scalar::monomial(const Rational& c, long exponent) {
    Scalar s(c);
    if (!s.is_zero()) s.shift_ = exponent;
    return s;
}

bool Scalar::is_one() const { return is_constant() && num_.size() == 1 && num_[0] == 1; }

Rational Scalar::constant_value() const {
    if (!is_constant()) throw UsageError("scalar is not a constant: " + str());
    return num_.empty() ? Rational(0) : num_[0];
}

Rational Scalar::leading_coeff() const {
    if (!is_monomial()) throw UsageError("scalar is not a monomial: " + str());
    return num_[0];
}

void Scalar::canonicalize(Poly num, long num_shift, Poly den, long den_shift) {
    trim(num);
    trim(den);
    if (den.empty()) throw DivisionByZero();
    if (num.empty()) {
        *this = Scalar();
        return;
    }
    num_shift += strip_low(num);
    den_shift += strip_low(den);
    shift_ = num_shift - den_shift;
    if (den.size() > 1) {
        Poly g = gcd(num, den);
        if (g.size() > 1) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    Rational lc = den.back();
    if (lc != 1)
        for (auto& c : num) c /= lc;
    if (den.size() == 1) {
        den.clear();
    } else if (lc != 1) {
        for (auto& c : den) c /= lc;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_constant() && o.is_constant()) {
        num_[0] += o.num_[0];
        if (num_[0] == 0) num_.clear();
        return *this;
    }
    if (den_.empty() && o.den_.empty()) {
        long s;
        num_ = add_shifted(num_, shift_, o.num_, o.shift_, s);
        shift_ = s + strip_low(num_);
        if (num_.empty()) shift_ = 0;
        return *this;
    }
    Poly d1 = den_.empty() ? Poly{1} : den_;
    Poly d2 = o.den_.empty() ? Poly{1} : o.den_;
    Poly g = gcd(d1, d2);
    Poly d1r = g.size() > 1 ? exact_div(d1, g) : d1;
    Poly d2r = g.size() > 1 ? exact_div(d2, g) : d2;
    long s;
    Poly num = add_shifted(mul(num_, d2r), shift_, mul(o.num_, d1r), o.shift_, s);
    canonicalize(std::move(num), s, mul(d1, d2r), 0);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (is_constant() && o.is_constant()) {
        num_[0] *= o.num_[0];
        return *this;
    }
    if (den_.empty() && o.den_.empty()) {
        num_ = mul(num_, o.num_);
        shift_ += o.shift_;
        return *this;
    }
    Poly n1 = num_, n2 = o.num_;
    Poly d1 = den_.empty() ? Poly{1} : den_;
    Poly d2 = o.den_.empty() ? Poly{1} : o.den_;
    if (d2.size() > 1) {
        Poly g = gcd(n1, d2);
        if (g.size() > 1) {
            n1 = exact_div(n1, g);
            d2 = exact_div(d2, g);
        }
    }
    if (d1.size() > 1) {
        Poly g = gcd(n2, d1);
        if (g.size() > 1) {
            n2 = exact_div(n2, g);
            d1 = exact_div(d1, g);
        }
    }
    canonicalize(mul(n1, n2), shift_ + o.shift_, mul(d1, d2), 0);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    if (is_constant()) {
        r.num_.push_back(Rational(1) / num_[0]);
        return r;
    }
    r.canonicalize(den_.empty() ? Poly{1} : den_, 0, num_, shift_);
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1L), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
}

bool structural_less(const Scalar& a, const Scalar& b) {
    if (a.shift_ != b.shift_) return a.shift_ < b.shift_;
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

Rational Scalar::evaluate(const Rational& t0) const {
    if (is_zero()) return 0;
    if (t0 == 0 && shift_ < 0) throw PoleError("pole at t = 0");
    Rational d = den_.empty() ? Rational(1) : eval(den_, t0);
    if (d == 0) throw PoleError("pole at t = " + rational_str(t0));
    return eval(num_, t0) * rpow(t0, shift_) / d;
}

Rational specialize(const Scalar& s, const Rational& t0) { return s.evaluate(t0); }

std::vector<std::pair<long, Rational>> Scalar::numerator_terms() const {
    std::vector<std::pair<long, Rational>> r;
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) r.emplace_back(static_cast<long>(i) + shift_, num_[i]);
    return r;
}

std::vector<std::pair<long, Rational>> Scalar::denominator_terms() const {
    if (den_.empty()) return {{0, Rational(1)}};
    std::vector<std::pair<long, Rational>> r;
    for (std::size_t i = 0; i < den_.size(); ++i)
        if (den_[i] != 0) r.emplace_back(static_cast<long>(i), den_[i]);
    return r;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    Poly den = den_.empty() ? Poly{1} : den_;
    mpz_class l = lcm_denominators(den, lcm_denominators(num_, 1));
    std::vector<mpz_class> n, d;
    mpz_class g = 0;
    for (const auto& c : num_) {
        Rational v = c * l;
        n.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.back().get_mpz_t());
    }
    for (const auto& c : den) {
        Rational v = c * l;
        d.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.back().get_mpz_t());
    }
    for (auto& x : n) x /= g;
    for (auto& x : d) x /= g;
    std::string ns = int_laurent_str(n, shift_);
    if (d.size() == 1 && d[0] == 1) return ns;
    std::string ds = int_laurent_str(d, 0);
    if (term_count(n) > 1) ns = "(" + ns + ")";
    if (term_count(d) > 1 || d.size() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

// ---------------------------------------------------------------------------

ScalarContext::ScalarContext(int n, Backend backend, Rational t0) : n_(n), backend_(backend), t0_(std::move(t0)) {
    if (n < 1) throw UsageError("rank n must be at least 1");
    if (backend_ == Backend::Specialized && (t0_ == 0 || t0_ == 1 || t0_ == -1))
        throw UsageError("specialization point must avoid 0 and roots of unity");
}

Scalar ScalarContext::t_power(long k) const {
    if (symbolic()) return Scalar::monomial(1, k);
    return Scalar(rpow(t0_, k));
}

Scalar ScalarContext::q_power(const Rational& r) const {
    Rational e = r * q_degree();
    if (e.get_den() != 1)
        throw NonIntegralExponent("q^(" + rational_str(r) + ") is not an integral power of t");
    return t_power(e.get_num().get_si());
}

bool ScalarContext::q_exponent_of(const Scalar& s, long& m) const {
    if (symbolic()) {
        if (!s.is_monomial() || s.leading_coeff() != 1 || s.low_exponent() % q_degree() != 0) return false;
        m = s.low_exponent() / q_degree();
        return true;
    }
    if (!s.is_constant() || s.is_zero()) return false;
    Rational v = s.constant_value();
    Rational qv = rpow(t0_, q_degree());
    Rational up = 1, down = 1;
    for (long k = 0; k <= 512; ++k) {
        if (up == v) {
            m = k;
            return true;
        }
        if (down == v) {
            m = -k;
            return true;
        }
        up *= qv;
        down /= qv;
    }
    return false;
}

std::string ScalarContext::render_q(const Scalar& s) const {
    if (!symbolic() || s.is_zero()) return s.str();
    long e = q_degree();
    if (s.is_monomial()) {
        Rational c = s.leading_coeff();
        long k = s.low_exponent();
        if (k == 0) return rational_str(c);
        Rational r(k, e);
        r.canonicalize();
        std::string base = r.get_den() == 1 ? "q^" + r.get_num().get_str() : "q^(" + rational_str(r) + ")";
        if (k == e) base = "q";
        if (c == 1) return base;
        if (c == -1) return "-" + base;
        return rational_str(c) + "*" + base;
    }
    for (auto& [k, c] : s.numerator_terms())
        if (k % e) return s.str();
    for (auto& [k, c] : s.denominator_terms())
        if (k % e) return s.str();
    // Same layout as Scalar::str but with q in place of t^e.
    std::string r = s.str();
    std::string out;
    for (std::size_t i = 0; i < r.size();) {
        if (r[i] == 't') {
            std::size_t j = i + 1;
            long k = 1;
            if (j < r.size() && r[j] == '^') {
                std::size_t p = j + 1;
                if (p < r.size() && r[p] == '-') ++p;
                while (p < r.size() && std::isdigit(static_cast<unsigned char>(r[p]))) ++p;
                k = std::stol(r.substr(j + 1, p - j - 1));
                j = p;
            }
            long m = k / e;
            out += "q";
            if (m != 1) out += "^" + std::to_string(m);
            i = j;
        } else {
            out += r[i++];
        }
    }
    return out;
}

std::string ScalarContext::describe() const {
    return symbolic() ? std::string("symbolic") : "rational:" + rational_str(t0_);
}

ScalarContext ScalarContext::from_backend_string(int n, std::string_view spec) {
    if (spec == "symbolic") return ScalarContext(n);
    constexpr std::string_view prefix = "rational:";
    if (spec.substr(0, prefix.size()) == prefix)
        return ScalarContext(n, Backend::Specialized, parse_rational(spec.substr(prefix.size())));
    throw UsageError("unknown backend '" + std::string(spec) + "' (expected symbolic or rational:<t0>)");
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return UsageError("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& p) {
        std::size_t i = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
        if (i >= p.size()) throw bad();
        for (; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i]))) throw bad();
    };
    std::string a = s.substr(0, slash);
    if (!a.empty() && a[0] == '+') a.erase(0, 1);
    check_int(a);
    Rational r;
    if (slash == std::string::npos) {
        r = Rational(mpz_class(a));
    } else {
        std::string b = s.substr(slash + 1);
        check_int(b);
        mpz_class den(b);
        if (den == 0) throw DivisionByZero();
        r = Rational(mpz_class(a), den);
        r.canonicalize();
    }
    return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Expression parser: + - * / ^, parentheses, integers, t and q.

namespace {

class Parser {
public:
    Parser(const ScalarContext& ctx, std::string_view s) : ctx_(ctx), s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    const ScalarContext& ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("cannot parse scalar '" + std::string(s_) + "' at position " + std::to_string(pos_) + ": " +
                         why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    mpz_class integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }
    Rational exponent() {
        if (eat('(')) {
            bool neg = eat('-');
            Rational r(integer());
            if (eat('/')) {
                mpz_class d = integer();
                if (d == 0) fail("zero denominator in exponent");
                r /= Rational(d);
            }
            if (!eat(')')) fail("expected ')'");
            return neg ? Rational(-r) : r;
        }
        bool neg = eat('-');
        Rational r(integer());
        return neg ? Rational(-r) : r;
    }
    Scalar power() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 't' || c == 'q') {
            ++pos_;
            Rational e = 1;
            if (eat('^')) e = exponent();
            if (c == 'q') return ctx_.q_power(e);
            if (e.get_den() != 1) fail("t needs an integral exponent");
            return ctx_.t_power(e.get_num().get_si());
        }
        Scalar base;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = Scalar(Rational(integer()));
        } else {
            fail("unexpected character");
        }
        if (eat('^')) {
            Rational e = exponent();
            if (e.get_den() != 1) fail("integral exponent required");
            if (base.is_zero() && e < 0) fail("division by zero");
            base = base.pow(e.get_num().get_si());
        }
        return base;
    }
};

}  // namespace

Scalar ScalarContext::parse(std::string_view text) const { return Parser(*this, text).run(); }

}  // namespace qaff
