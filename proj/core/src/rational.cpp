#include "azpair/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace azpair {

bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Place Place::finite(Integer p) {
    if (!is_prime(p))
        throw std::domain_error("Place::finite: " + p.get_str() + " is not prime");
    return Place(Kind::finite, std::move(p));
}

std::string to_string(const Place& v) {
    return v.is_archimedean() ? std::string("arch") : v.prime().get_str();
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::domain_error("valuation of zero undefined");
    if (!is_prime(p))
        throw std::domain_error("valuation: modulus " + p.get_str() + " is not prime");
    Integer reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw std::domain_error("valuation of zero undefined");
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

double log_value(const Integer& n) {
    if (n == 0) throw std::domain_error("log of zero undefined");
    signed long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * M_LN2;
}

double log_value(const Rational& q) {
    if (q == 0) throw std::domain_error("log of zero undefined");
    return log_value(Integer(q.get_num())) - log_value(Integer(q.get_den()));
}

double log_abs(const Rational& q, const Place& v) {
    if (q == 0) throw std::domain_error("log_abs of zero undefined");
    if (v.is_archimedean()) return log_value(q);
    return -static_cast<double>(valuation(q, v.prime())) * log_value(v.prime());
}

namespace {

// Brent's cycle variant of Pollard rho; n odd composite, not a perfect power
// of a found factor. Deterministic parameter schedule.
Integer brent_rho(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;  // cycle without factor; bump c
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, unsigned long trial_bound, std::vector<Integer>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    // Trial division by 2 and odd candidates up to the bound.
    for (Integer p = 2; p <= trial_bound && p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = brent_rho(n);
    factor_into(d, trial_bound, out);
    factor_into(n / d, trial_bound, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor(const Integer& n, unsigned long trial_bound) {
    if (n == 0) throw std::domain_error("factor of zero undefined");
    std::vector<Integer> primes;
    factor_into(n, trial_bound, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, int>> result;
    Integer m = abs(n);
    for (const Integer& p : primes) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        result.emplace_back(p, e);
    }
    return result;
}

std::vector<Integer> support_primes(const std::vector<Rational>& values,
                                    unsigned long trial_bound) {
    std::set<Integer> primes;
    std::vector<Integer> parts;
    for (const Rational& q : values) {
        if (q == 0) continue;
        parts.clear();
        factor_into(Integer(q.get_num()), trial_bound, parts);
        factor_into(Integer(q.get_den()), trial_bound, parts);
        primes.insert(parts.begin(), parts.end());
    }
    return std::vector<Integer>(primes.begin(), primes.end());
}

Rational parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || Integer(q.get_den()) == 0)
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace azpair
