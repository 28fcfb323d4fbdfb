#include "innertwist/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace innertwist {

namespace {

// --- dense polynomial helpers, ascending coefficients -----------------------

inline bool coeff_is_zero(const BigInt& v) { return v.is_zero(); }
inline bool coeff_is_zero(const Rational& q) { return rational_is_zero(q); }

template <typename T>
void poly_trim(std::vector<T>& p) {
    while (!p.empty() && coeff_is_zero(p.back())) p.pop_back();
}

template <typename T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (coeff_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (coeff_is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    poly_trim(out);
    return out;
}

// Quotient of num by a *monic* divisor with exact integer arithmetic;
// remainder must vanish.
std::vector<BigInt> poly_divexact_monic(std::vector<BigInt> num,
                                        const std::vector<BigInt>& den) {
    if (den.empty() || den.back() != 1)
        throw StructuralError("polynomial division requires a monic divisor");
    if (num.size() < den.size()) {
        poly_trim(num);
        if (!num.empty())
            throw StructuralError("polynomial division left a remainder");
        return {};
    }
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t i = num.size(); i-- >= den.size();) {
        BigInt c = num[i];
        if (c.is_zero()) {
            if (i + 1 == den.size()) break;
            continue;
        }
        std::size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= c * den[j];
        if (i + 1 == den.size()) break;
    }
    poly_trim(num);
    if (!num.empty())
        throw StructuralError("polynomial division left a remainder");
    return quot;
}

// (quotient, remainder) over the rationals, arbitrary nonzero divisor.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
    if (den.empty())
        throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> quot;
    if (num.size() >= den.size())
        quot.assign(num.size() - den.size() + 1, Rational(0));
    const Rational& lead = den.back();
    while (num.size() >= den.size()) {
        Rational c = num.back() / lead;
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= c * den[j];
        // The leading coefficient is now exactly zero.
        num.pop_back();
        poly_trim(num);
        if (num.empty()) break;
    }
    return {std::move(quot), std::move(num)};
}

std::vector<Rational> poly_sub(std::vector<Rational> a,
                               const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// Residue of p modulo the monic modulus, padded to degree(modulus) entries.
std::vector<Rational> reduce_mod(std::vector<Rational> p,
                                 const std::vector<Rational>& modulus) {
    const std::size_t deg = modulus.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        Rational c = std::move(p[i]);
        if (rational_is_zero(c)) continue;
        p[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            p[i - deg + j] -= c * modulus[j];
    }
    p.resize(deg, Rational(0));
    return p;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(long n) {
    if (n < 1)
        throw StructuralError("cyclotomic polynomial order must be positive");
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);

    // Iterative over divisors so each Phi_d is available when needed.
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);

    for (long d : divisors) {
        if (cache.count(d)) continue;
        if (d == 1) {
            cache[1] = {BigInt(-1), BigInt(1)}; // x - 1
            continue;
        }
        std::vector<BigInt> num(static_cast<std::size_t>(d) + 1, BigInt(0));
        num[0] = -1;
        num.back() = 1; // x^d - 1
        std::vector<BigInt> den{BigInt(1)};
        for (long e : divisors) {
            if (e < d && d % e == 0) den = poly_mul(den, cache.at(e));
        }
        cache[d] = poly_divexact_monic(std::move(num), den);
    }
    return cache.at(n);
}

// --- CyclotomicField ---------------------------------------------------------

CyclotomicField::CyclotomicField(long order) : order_(order) {
    auto phi = cyclotomic_polynomial(order);
    degree_ = static_cast<long>(phi.size()) - 1;
    modulus_.reserve(phi.size());
    for (const BigInt& c : phi) modulus_.emplace_back(c);

    root_powers_.reserve(order);
    for (long k = 0; k < order; ++k) {
        std::vector<Rational> p(static_cast<std::size_t>(k) + 1, Rational(0));
        p.back() = 1; // x^k
        root_powers_.push_back(reduce_mod(std::move(p), modulus_));
    }
}

FieldPtr CyclotomicField::make(long order) {
    if (order < 1)
        throw StructuralError("cyclotomic field order must be positive");
    return FieldPtr(new CyclotomicField(order));
}

// --- CycScalar ---------------------------------------------------------------

void CycScalar::require_usable() const {
    if (is_null())
        throw StructuralError("arithmetic on a null scalar");
}

void CycScalar::require_same_field(const CycScalar& o) const {
    require_usable();
    o.require_usable();
    if (field_->order() != o.field_->order()) {
        std::ostringstream msg;
        msg << "scalar field order mismatch: " << field_->order() << " vs "
            << o.field_->order();
        throw StructuralError(msg.str());
    }
}

CycScalar CycScalar::zero(const FieldPtr& f) {
    return CycScalar(f, std::vector<Rational>(f->degree(), Rational(0)));
}

CycScalar CycScalar::one(const FieldPtr& f) {
    return from_rational(f, Rational(1));
}

CycScalar CycScalar::from_rational(const FieldPtr& f, const Rational& q) {
    // For n = 1 the modulus is x - 1, so even the constant embedding goes
    // through reduce_mod for uniformity.
    return CycScalar(f, reduce_mod({q}, f->modulus()));
}

CycScalar CycScalar::from_int(const FieldPtr& f, long v) {
    return from_rational(f, Rational(v));
}

CycScalar CycScalar::root(const FieldPtr& f, long k) {
    long n = f->order();
    long r = ((k % n) + n) % n;
    return CycScalar(f, f->root_powers_[static_cast<std::size_t>(r)]);
}

bool CycScalar::is_zero() const {
    require_usable();
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) {
        return rational_is_zero(q);
    });
}

bool CycScalar::is_one() const {
    require_usable();
    if (!rational_is_one(c_[0])) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) {
        return rational_is_zero(q);
    });
}

std::optional<Rational> CycScalar::as_rational() const {
    require_usable();
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!rational_is_zero(c_[i])) return std::nullopt;
    return c_[0];
}

namespace {

bool coeffs_equal(const std::vector<Rational>& a,
                  const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rational_equal(a[i], b[i])) return false;
    return true;
}

} // namespace

std::optional<long> CycScalar::as_root_power() const {
    require_usable();
    for (long k = 0; k < field_->order(); ++k)
        if (coeffs_equal(c_,
                         field_->root_powers_[static_cast<std::size_t>(k)]))
            return k;
    return std::nullopt;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    require_same_field(o);
    std::vector<Rational> out(c_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.c_[i];
    return CycScalar(field_, std::move(out));
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    require_same_field(o);
    std::vector<Rational> out(c_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.c_[i];
    return CycScalar(field_, std::move(out));
}

CycScalar CycScalar::operator-() const {
    require_usable();
    std::vector<Rational> out(c_);
    for (Rational& q : out) q = -q;
    return CycScalar(field_, std::move(out));
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    require_same_field(o);
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (rational_is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (rational_is_zero(o.c_[j])) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycScalar(field_, reduce_mod(std::move(prod), field_->modulus()));
}

CycScalar CycScalar::inverse() const {
    require_usable();
    if (is_zero())
        throw DivisionByZero("inverse of zero scalar");
    // Extended Euclid on (Phi_n, a): Phi_n is irreducible over Q, so the gcd
    // is a nonzero constant and the Bezout coefficient of a is the inverse
    // up to that constant.
    std::vector<Rational> r0 = field_->modulus();
    std::vector<Rational> r1 = c_;
    poly_trim(r1);
    std::vector<Rational> s0; // coefficient of a in r0
    std::vector<Rational> s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        std::vector<Rational> s2 = poly_sub(std::move(s0), poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw StructuralError("cyclotomic modulus is not irreducible?");
    const Rational& g = r0[0];
    for (Rational& q : s0) q /= g;
    return CycScalar(field_, reduce_mod(std::move(s0), field_->modulus()));
}

CycScalar CycScalar::operator/(const CycScalar& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

CycScalar CycScalar::pow(long k) const {
    require_usable();
    if (k < 0) return inverse().pow(-k);
    CycScalar acc = one(field_);
    CycScalar base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool CycScalar::operator==(const CycScalar& o) const {
    require_same_field(o);
    return coeffs_equal(c_, o.c_);
}

// --- literal syntax ----------------------------------------------------------

namespace {

class ScalarLexer {
public:
    ScalarLexer(const FieldPtr& f, std::string_view text)
        : field_(f), text_(text) {}

    CycScalar parse() {
        CycScalar v = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar literal: " + what, 1,
                         static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(
                   static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    CycScalar parse_expr() {
        CycScalar v = parse_term();
        for (;;) {
            if (eat('+')) v = v + parse_term();
            else if (eat('-')) v = v - parse_term();
            else return v;
        }
    }

    CycScalar parse_term() {
        CycScalar v = parse_factor();
        while (eat('*')) v = v * parse_factor();
        return v;
    }

    CycScalar parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('(')) {
            CycScalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a value");
        char c = text_[pos_];
        if (c == 'z') {
            ++pos_;
            long k = 1;
            if (eat('^')) {
                bool neg = eat('-');
                BigInt e = parse_integer();
                long n = field_->order();
                k = static_cast<long>(e % n);
                if (neg) k = -k;
            }
            return CycScalar::root(field_, k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = parse_integer();
            if (eat('/')) {
                BigInt den = parse_integer();
                if (den == 0) fail("zero denominator");
                return CycScalar::from_rational(field_, Rational(num, den));
            }
            return CycScalar::from_rational(field_, Rational(num));
        }
        fail("expected a value");
    }

    FieldPtr field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

CycScalar parse_scalar(const FieldPtr& f, std::string_view text) {
    return ScalarLexer(f, text).parse();
}

std::string format_scalar(const CycScalar& a) {
    if (a.is_null()) return "<null>";
    std::string out;
    const auto& c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (rational_is_zero(c[k])) continue;
        const bool neg = rational_negative(c[k]);
        Rational mag = neg ? Rational(-c[k]) : c[k];
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body;
        if (k == 0) {
            body = format_rational(mag);
        } else {
            std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
            body = rational_is_one(mag) ? power
                                        : format_rational(mag) + "*" + power;
        }
        out += body;
    }
    return out.empty() ? "0" : out;
}

} // namespace innertwist
