#include "coxspin/exactfield.hpp"

#include <sstream>
#include <utility>

namespace coxspin {

namespace {

int sign_int(const Rational& r) { return sgn(r); }

// Sign of u + v·√2 for rationals u, v.
int sign_q2(const Rational& u, const Rational& v) {
    const int su = sign_int(u);
    const int sv = sign_int(v);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return su == 0 ? sv : su;
    // Opposite signs: compare u² against 2v².
    const Rational diff = u * u - 2 * v * v;
    return su * sign_int(diff);
}

std::optional<Rational> sqrt_rational(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    return Rational(sqrt(num), sqrt(den));
}

// Square root within Q(√2); x must have zero √5 and √10 parts.
std::optional<FieldScalar> sqrt_q2(const FieldScalar& x) {
    if (x.is_zero()) return FieldScalar(0);
    if (sign_of(x) == Sign::negative) return std::nullopt;
    const Rational& u = x.coeff(0);
    const Rational& v = x.coeff(1);
    if (sgn(v) == 0) {
        if (auto r = sqrt_rational(u)) return FieldScalar(*r);
        if (auto s = sqrt_rational(Rational(u / 2))) return FieldScalar(0, *s, 0, 0);
        return std::nullopt;
    }
    // (r + s√2)² = r² + 2s² + 2rs√2, so r² solves t² − u t + v²/2 = 0.
    const auto disc = sqrt_rational(Rational(u * u - 2 * v * v));
    if (!disc) return std::nullopt;
    for (const Rational& root_sq : {Rational((u + *disc) / 2), Rational((u - *disc) / 2)}) {
        const auto r = sqrt_rational(root_sq);
        if (!r || sgn(*r) == 0) continue;
        FieldScalar y(*r, Rational(v / (2 * *r)), 0, 0);
        if (y * y == x) return abs(y);
    }
    return std::nullopt;
}

std::string term(const Rational& coeff, const char* unit, bool first) {
    std::string out;
    Rational mag = coeff;
    if (sgn(coeff) < 0) {
        out = first ? "-" : " - ";
        mag = -coeff;
    } else if (!first) {
        out = " + ";
    }
    if (*unit == '\0') return out + mag.get_str();
    if (mag != 1) out += mag.get_str() + "·";
    return out + unit;
}

}  // namespace

FieldScalar::FieldScalar(Rational a, Rational b, Rational c, Rational d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto& r : c_) r.canonicalize();
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) { return *this = *this * o; }
FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this = *this * inverse(o); }

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (y.is_rational()) {
        FieldScalar out = x;
        for (auto& r : out.c_) r *= y.c_[0];
        return out;
    }
    if (x.is_rational()) return y * x;
    const auto& [a, b, c, d] = x.c_;
    const auto& [e, f, g, h] = y.c_;
    // √2·√5 = √10, √2·√10 = 2√5, √5·√10 = 5√2.
    FieldScalar out;
    out.c_[0] = a * e + 2 * b * f + 5 * c * g + 10 * d * h;
    out.c_[1] = a * f + b * e + 5 * (c * h + d * g);
    out.c_[2] = a * g + c * e + 2 * (b * h + d * f);
    out.c_[3] = a * h + d * e + b * g + c * f;
    return out;
}

FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) { return x * inverse(y); }

FieldScalar FieldScalar::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

std::strong_ordering operator<=>(const FieldScalar& x, const FieldScalar& y) {
    if (x == y) return std::strong_ordering::equal;
    switch (sign_of(x - y)) {
        case Sign::negative: return std::strong_ordering::less;
        case Sign::positive: return std::strong_ordering::greater;
        case Sign::zero: break;
    }
    return std::strong_ordering::equal;
}

double FieldScalar::to_double() const {
    return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(5.0) +
           c_[3].get_d() * std::sqrt(10.0);
}

FieldScalar inverse(const FieldScalar& x) {
    if (x.is_zero()) throw DivisionByZero();
    if (x.is_rational()) return FieldScalar(Rational(1 / x.coeff(0)));
    // x·conj5(x) lies in Q(√2); multiplying that by its √2-conjugate lands in Q.
    const FieldScalar c5 = x.conj5();
    const FieldScalar n2 = x * c5;
    const FieldScalar c2 = n2.conj2();
    const Rational n = (n2 * c2).coeff(0);
    return c5 * c2 * FieldScalar(Rational(1 / n));
}

Sign sign_of(const FieldScalar& x) {
    // x = P + √5·Q with P = a + b√2, Q = c + d√2.
    const auto& [a, b, c, d] = x.coeffs();
    const int sp = sign_q2(a, b);
    const int sq = sign_q2(c, d);
    int s = 0;
    if (sq == 0) {
        s = sp;
    } else if (sp == 0 || sp == sq) {
        s = sp == 0 ? sq : sp;
    } else {
        // Opposite signs: sign(P) · sign(P² − 5Q²), with P² − 5Q² ∈ Q(√2).
        const Rational u = a * a + 2 * b * b - 5 * (c * c + 2 * d * d);
        const Rational v = 2 * a * b - 10 * c * d;
        s = sp * sign_q2(u, v);
    }
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

FieldScalar abs(const FieldScalar& x) { return sign_of(x) == Sign::negative ? -x : x; }

std::optional<FieldScalar> sqrt_in_field(const FieldScalar& x) {
    if (x.is_zero()) return FieldScalar(0);
    if (sign_of(x) == Sign::negative) return std::nullopt;
    // x = A + √5·B with A, B ∈ Q(√2); look for y = p + √5·q.
    const FieldScalar A(x.coeff(0), x.coeff(1), 0, 0);
    const FieldScalar B(x.coeff(2), x.coeff(3), 0, 0);
    if (B.is_zero()) {
        if (auto p = sqrt_q2(A)) return *p;
        if (auto q = sqrt_q2(A * FieldScalar::ratio(1, 5))) return *q * FieldScalar::sqrt5();
        return std::nullopt;
    }
    // p² + 5q² = A and 2pq = B, so p² solves t² − A t + 5B²/4 = 0.
    const auto disc = sqrt_q2(A * A - 5 * B * B);
    if (!disc) return std::nullopt;
    const FieldScalar half = FieldScalar::ratio(1, 2);
    for (const FieldScalar& p_sq : {(A + *disc) * half, (A - *disc) * half}) {
        const auto p = sqrt_q2(p_sq);
        if (!p || p->is_zero()) continue;
        const FieldScalar q = B * inverse(2 * *p);
        const FieldScalar y = *p + q * FieldScalar::sqrt5();
        if (y * y == x) return abs(y);
    }
    return std::nullopt;
}

bool is_integer(const FieldScalar& x) { return x.is_rational() && x.coeff(0).get_den() == 1; }

bool in_golden_integers(const FieldScalar& x) {
    // p + qτ = (p + q/2) + (q/2)√5.
    if (sgn(x.coeff(1)) != 0 || sgn(x.coeff(3)) != 0) return false;
    const Rational q = 2 * x.coeff(2);
    const Rational p = x.coeff(0) - x.coeff(2);
    return q.get_den() == 1 && p.get_den() == 1;
}

std::string to_string(const FieldScalar& x) {
    if (x == FieldScalar::tau()) return "τ";
    if (x == FieldScalar::sigma()) return "σ";
    if (x == -FieldScalar::tau()) return "-τ";
    if (x == -FieldScalar::sigma()) return "-σ";
    if (x.is_zero()) return "0";
    static constexpr const char* units[] = {"", "√2", "√5", "√10"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (sgn(x.coeff(i)) == 0) continue;
        out += term(x.coeff(i), units[i], out.empty());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << to_string(x); }

std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && t[0] == '-') i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace coxspin
