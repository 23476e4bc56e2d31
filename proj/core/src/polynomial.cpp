#include "azpair/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace azpair {

namespace {
const Rational kZero(0);
}

void PolyQ::normalize() {
    for (Rational& q : c_) q.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& PolyQ::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& PolyQ::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool PolyQ::is_power_map() const {
    if (degree() < 1 || !is_monic()) return false;
    for (size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

PolyQ PolyQ::power_plus(long d, const Rational& c) {
    if (d < 1) throw std::invalid_argument("power_plus: degree must be >= 1");
    std::vector<Rational> v(static_cast<size_t>(d) + 1, Rational(0));
    v[0] = c;
    v.back() = 1;
    return PolyQ(std::move(v));
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::complex<double> PolyQ::eval(std::complex<double> z) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].get_d();
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return PolyQ(std::move(v));
}

PolyQ operator+(const PolyQ& f, const PolyQ& g) {
    std::vector<Rational> v(std::max(f.c_.size(), g.c_.size()), Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i) v[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) v[i] += g.c_[i];
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& f, const PolyQ& g) {
    std::vector<Rational> v(std::max(f.c_.size(), g.c_.size()), Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i) v[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) v[i] -= g.c_[i];
    return PolyQ(std::move(v));
}

PolyQ operator*(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() || g.is_zero()) return PolyQ();
    std::vector<Rational> v(f.c_.size() + g.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
    return PolyQ(std::move(v));
}

PolyQ operator*(const Rational& s, const PolyQ& f) {
    std::vector<Rational> v = f.c_;
    for (Rational& x : v) x *= s;
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& f, const Rational& s) {
    std::vector<Rational> v = f.c_;
    if (v.empty()) v.push_back(-s);
    else v[0] -= s;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::compose(const PolyQ& g) const {
    // Horner in the outer coefficients.
    PolyQ acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * g;
        acc = acc + PolyQ{c_[i]};
    }
    return acc;
}

PolyQ iterate(const PolyQ& phi, long n, long degree_cap) {
    if (phi.degree() < 1) throw std::domain_error("iterate: degree must be >= 1");
    if (n < 0) throw std::domain_error("iterate: negative iteration count");
    // Check d^n against the cap before doing any work.
    double logdeg = static_cast<double>(n) * std::log2(static_cast<double>(phi.degree()));
    if (logdeg > std::log2(static_cast<double>(degree_cap)) + 1e-9)
        throw std::domain_error("iterate: degree " + std::to_string(phi.degree()) + "^" +
                                std::to_string(n) + " exceeds cap " + std::to_string(degree_cap));
    PolyQ result = PolyQ::identity();
    for (long k = 0; k < n; ++k) result = phi.compose(result);
    return result;
}

PrimitiveIntPoly to_primitive(const PolyQ& f) {
    if (f.is_zero()) throw std::domain_error("to_primitive: zero polynomial");
    Integer den_lcm = 1;
    for (const Rational& q : f.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(f.coefficients().size());
    Integer content = 0;
    for (const Rational& q : f.coefficients()) {
        Integer v = Integer(q.get_num()) * (den_lcm / Integer(q.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    for (Integer& v : ints) v /= content;
    PrimitiveIntPoly out;
    out.coeffs = std::move(ints);
    out.scale = Rational(content, den_lcm);
    out.scale.canonicalize();
    return out;
}

PolyQ PrimitiveIntPoly::to_poly() const {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const Integer& n : coeffs) v.emplace_back(n);
    return scale * PolyQ(std::move(v));
}

std::string PolyQ::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser for sums of monomials: ["-"] term (("+"|"-") term)*
// with term = coefficient ["*"] ["x" ["^" exponent]] | "x" ["^" exponent].
struct PolyParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(std::string(s.substr(start, pos - start)), 10);
    }

    Rational parse_coefficient() {
        Integer num = parse_integer();
        if (peek() == '/') {
            ++pos;
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // Returns (coefficient, exponent).
    std::pair<Rational, long> parse_term() {
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_coefficient();
            have_coef = true;
            if (peek() == '*') ++pos;
        }
        long exp = 0;
        if (peek() == 'x' || peek() == 'X') {
            ++pos;
            exp = 1;
            if (peek() == '^') {
                ++pos;
                Integer e = parse_integer();
                if (e > 100000) fail("exponent too large");
                exp = static_cast<long>(e.get_si());
            }
        } else if (!have_coef) {
            fail("expected coefficient or 'x'");
        }
        if (peek() == '/') {  // trailing divisor, as in "x/2" or "3x^2/4"
            ++pos;
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            coef /= Rational(den);
        }
        return {coef, exp};
    }

    PolyQ parse() {
        std::vector<Rational> coeffs;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            auto [coef, exp] = parse_term();
            if (negative) coef = -coef;
            if (exp >= static_cast<long>(coeffs.size()))
                coeffs.resize(static_cast<size_t>(exp) + 1, Rational(0));
            coeffs[static_cast<size_t>(exp)] += coef;
            if (eof()) break;
            char op = peek();
            if (op == '+') negative = false;
            else if (op == '-') negative = true;
            else fail(std::string("unexpected character '") + op + "'");
            ++pos;
        }
        return PolyQ(std::move(coeffs));
    }
};

}  // namespace

PolyQ PolyQ::from_string(std::string_view text) {
    PolyParser p{text};
    if (p.eof()) throw std::invalid_argument("empty polynomial string");
    return p.parse();
}

}  // namespace azpair
