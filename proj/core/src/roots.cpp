#include "azpair/roots.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

namespace azpair {
namespace {

using cdouble = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

double ldexp_clamped(double m, long e) {
    if (m == 0.0) return 0.0;
    if (e > 1020) return m > 0 ? 8.9e307 : -8.9e307;
    if (e < -1070) return 0.0;
    return std::ldexp(m, static_cast<int>(e));
}

// ---------------------------------------------------------------------------
// Initial guesses: per-root moduli from the upper convex hull of
// (i, log2|a_i|), phases equispaced per hull edge with a seeded offset.
// Degenerates to the single Cauchy circle when the hull is one edge.
// ---------------------------------------------------------------------------

std::vector<cdouble> initial_guesses(const std::vector<double>& log2mag, std::uint64_t seed) {
    const long d = static_cast<long>(log2mag.size()) - 1;
    std::vector<long> pts;
    for (long i = 0; i <= d; ++i)
        if (std::isfinite(log2mag[static_cast<size_t>(i)])) pts.push_back(i);

    // Upper hull, monotone chain over indices ascending.
    std::vector<long> hull;
    for (long i : pts) {
        while (hull.size() >= 2) {
            long a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            double cross = (double)(b - a) * (log2mag[i] - log2mag[a]) -
                           (log2mag[b] - log2mag[a]) * (double)(i - a);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<cdouble> z;
    z.reserve(static_cast<size_t>(d));
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        long i1 = hull[e], i2 = hull[e + 1];
        long m = i2 - i1;
        double log2r = (log2mag[i1] - log2mag[i2]) / static_cast<double>(m);
        if (log2r > 930.0)
            throw std::domain_error("find_roots: root modulus beyond double range");
        double r = std::exp2(log2r);
        double sigma = unif(rng);
        for (long j = 0; j < m; ++j) {
            double theta = 2.0 * M_PI * (static_cast<double>(j) + sigma) / static_cast<double>(m) +
                           0.4 * static_cast<double>(e);
            z.push_back(std::polar(r, theta));
        }
    }
    return z;
}

// ---------------------------------------------------------------------------
// Evaluation backends. Both return the Newton correction p/p' at z and
// whether |p(z)| has reached the round-off floor of the evaluation.
// ---------------------------------------------------------------------------

struct EvalResult {
    cdouble newton;
    bool below_floor;
};

class DoubleEval {
public:
    explicit DoubleEval(std::vector<cdouble> coeffs) : c_(std::move(coeffs)) {
        d_ = static_cast<long>(c_.size()) - 1;
    }

    EvalResult eval(cdouble z) const {
        const double az = std::abs(z);
        cdouble p = c_.back(), dp = 0.0;
        double acc = std::abs(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c_[i];
            acc = acc * az + std::abs(c_[i]);
        }
        double floor = 4.0 * static_cast<double>(d_ + 1) *
                       std::numeric_limits<double>::epsilon() * acc;
        EvalResult r;
        r.below_floor = std::abs(p) <= floor;
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) ||
            !std::isfinite(dp.real()) || !std::isfinite(dp.imag()) || dp == 0.0) {
            r.newton = 0.3 * z + cdouble(0.1, 0.1);  // deterministic retreat
            r.below_floor = false;
            return r;
        }
        r.newton = p / dp;
        return r;
    }

    long degree() const { return d_; }

private:
    std::vector<cdouble> c_;
    long d_;
};

// Big-float Horner over real integer coefficients. The running values hold
// `prec` bits while z stays a 53-bit point, so each multiply costs
// O(prec x 1 limb), not O(prec^2).
class MpfEval {
public:
    MpfEval(const std::vector<Integer>& coeffs, long prec)
        : prec_(prec), d_(static_cast<long>(coeffs.size()) - 1) {
        coef_.resize(coeffs.size());
        max_log2_coef_ = 0.0;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            mpf_init2(&coef_[i], static_cast<mp_bitcnt_t>(prec_));
            mpf_set_z(&coef_[i], coeffs[i].get_mpz_t());
            if (coeffs[i] != 0) {
                double bits = static_cast<double>(mpz_sizeinbase(coeffs[i].get_mpz_t(), 2));
                max_log2_coef_ = std::max(max_log2_coef_, bits);
            }
        }
        for (mpf_t* w : {&zr_, &zi_, &pr_, &pi_, &dr_, &di_, &t1_, &t2_, &t3_, &t4_})
            mpf_init2(*w, static_cast<mp_bitcnt_t>(prec_));
    }

    ~MpfEval() {
        for (auto& c : coef_) mpf_clear(&c);
        for (mpf_t* w : {&zr_, &zi_, &pr_, &pi_, &dr_, &di_, &t1_, &t2_, &t3_, &t4_})
            mpf_clear(*w);
    }

    MpfEval(const MpfEval&) = delete;
    MpfEval& operator=(const MpfEval&) = delete;

    EvalResult eval(cdouble z) const {
        mpf_set_d(zr_, z.real());
        mpf_set_d(zi_, z.imag());
        mpf_set(pr_, &coef_[static_cast<size_t>(d_)]);
        mpf_set_ui(pi_, 0);
        mpf_set_ui(dr_, 0);
        mpf_set_ui(di_, 0);
        for (long i = d_ - 1; i >= 0; --i) {
            // dp = dp*z + p (reads the previous p)
            mpf_mul(t1_, dr_, zr_);
            mpf_mul(t2_, di_, zi_);
            mpf_mul(t3_, dr_, zi_);
            mpf_mul(t4_, di_, zr_);
            mpf_sub(dr_, t1_, t2_);
            mpf_add(dr_, dr_, pr_);
            mpf_add(di_, t3_, t4_);
            mpf_add(di_, di_, pi_);
            // p = p*z + a_i
            mpf_mul(t1_, pr_, zr_);
            mpf_mul(t2_, pi_, zi_);
            mpf_mul(t3_, pr_, zi_);
            mpf_mul(t4_, pi_, zr_);
            mpf_sub(pr_, t1_, t2_);
            mpf_add(pr_, pr_, &coef_[static_cast<size_t>(i)]);
            mpf_add(pi_, t3_, t4_);
        }

        long epr = 0, epi = 0;
        double mpr = mpf_get_d_2exp(&epr, pr_);
        double mpi = mpf_get_d_2exp(&epi, pi_);
        double log2p;
        if (mpr == 0.0 && mpi == 0.0) log2p = -kInf;
        else if (mpr == 0.0) log2p = static_cast<double>(epi);
        else if (mpi == 0.0) log2p = static_cast<double>(epr);
        else log2p = static_cast<double>(std::max(epr, epi));

        double log2z = std::abs(z) > 1.0 ? std::log2(std::abs(z)) : 0.0;
        double log2floor = max_log2_coef_ + static_cast<double>(d_) * log2z +
                           std::log2(4.0 * static_cast<double>(d_ + 1)) -
                           static_cast<double>(prec_);

        EvalResult r;
        r.below_floor = log2p <= log2floor;

        // N = p conj(dp) / |dp|^2, assembled from mantissa/exponent pairs.
        mpf_mul(t1_, dr_, dr_);
        mpf_mul(t2_, di_, di_);
        mpf_add(t1_, t1_, t2_);  // |dp|^2
        long eden = 0;
        double mden = mpf_get_d_2exp(&eden, t1_);
        if (mden == 0.0) {
            r.newton = r.below_floor ? cdouble(0.0, 0.0) : 0.3 * z + cdouble(0.1, 0.1);
            return r;
        }
        mpf_mul(t2_, pr_, dr_);
        mpf_mul(t3_, pi_, di_);
        mpf_add(t2_, t2_, t3_);  // Re(p conj(dp))
        mpf_mul(t3_, pi_, dr_);
        mpf_mul(t4_, pr_, di_);
        mpf_sub(t3_, t3_, t4_);  // Im(p conj(dp))
        long enr = 0, eni = 0;
        double mnr = mpf_get_d_2exp(&enr, t2_);
        double mni = mpf_get_d_2exp(&eni, t3_);
        r.newton = cdouble(ldexp_clamped(mnr / mden, enr - eden),
                           ldexp_clamped(mni / mden, eni - eden));
        return r;
    }

    long degree() const { return d_; }
    double max_log2_coef() const { return max_log2_coef_; }

private:
    long prec_;
    long d_;
    double max_log2_coef_;
    std::vector<__mpf_struct> coef_;
    mutable mpf_t zr_, zi_, pr_, pi_, dr_, di_, t1_, t2_, t3_, t4_;
};

// ---------------------------------------------------------------------------
// Aberth-Ehrlich driver (Gauss-Seidel order, deterministic).
// ---------------------------------------------------------------------------

template <class Eval>
void aberth(const Eval& eval, std::vector<cdouble>& z, std::vector<double>& resid,
            const RootFindOptions& opts) {
    const long n = static_cast<long>(z.size());
    const double deg = static_cast<double>(eval.degree());
    std::vector<bool> locked(static_cast<size_t>(n), false);
    resid.assign(static_cast<size_t>(n), kInf);

    long n_locked = 0;
    for (int sweep = 0; sweep < opts.max_sweeps && n_locked < n; ++sweep) {
        for (long k = 0; k < n; ++k) {
            if (locked[static_cast<size_t>(k)]) continue;
            EvalResult ev = eval.eval(z[static_cast<size_t>(k)]);
            cdouble N = ev.newton;
            double radius = deg * std::abs(N);
            if (!std::isfinite(radius))
                radius = opts.tol * (1.0 + std::abs(z[static_cast<size_t>(k)])) * deg;
            if (ev.below_floor) {
                locked[static_cast<size_t>(k)] = true;
                resid[static_cast<size_t>(k)] = radius;
                ++n_locked;
                continue;
            }
            cdouble S = 0.0;
            for (long j = 0; j < n; ++j) {
                if (j == k) continue;
                cdouble diff = z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
                if (diff == 0.0)
                    diff = std::polar(1e-13 * (1.0 + std::abs(z[static_cast<size_t>(k)])),
                                      2.399963 * static_cast<double>(k));
                S += 1.0 / diff;
            }
            cdouble denom = 1.0 - N * S;
            cdouble w = (std::abs(denom) < 1e-30) ? N : N / denom;
            double cap = 0.5 * (1.0 + std::abs(z[static_cast<size_t>(k)]));
            double aw = std::abs(w);
            if (!std::isfinite(aw)) {
                w = cap;
                aw = cap;
            } else if (aw > cap) {
                w *= cap / aw;
                aw = cap;
            }
            z[static_cast<size_t>(k)] -= w;
            resid[static_cast<size_t>(k)] = radius;
            if (aw <= opts.tol * (std::abs(z[static_cast<size_t>(k)]) + 1e-30)) {
                locked[static_cast<size_t>(k)] = true;
                ++n_locked;
            }
        }
    }

    if (n_locked < n) {
        // Final residual refresh for the report.
        for (long k = 0; k < n; ++k) {
            if (locked[static_cast<size_t>(k)]) continue;
            EvalResult ev = eval.eval(z[static_cast<size_t>(k)]);
            double radius = deg * std::abs(ev.newton);
            if (std::isfinite(radius)) resid[static_cast<size_t>(k)] = radius;
        }
        throw RootFindError("root finding did not converge after " +
                                std::to_string(opts.max_sweeps) + " sweeps (" +
                                std::to_string(n - n_locked) + "/" + std::to_string(n) +
                                " unsettled)",
                            z, resid);
    }
}

std::vector<RootCluster> merge_clusters(const std::vector<cdouble>& z,
                                        const std::vector<double>& resid, double factor,
                                        long zero_roots) {
    const size_t n = z.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double lim = factor * std::max(resid[i], resid[j]);
            if (std::abs(z[i] - z[j]) <= lim) {
                size_t a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }

    std::vector<RootCluster> out;
    std::vector<std::vector<size_t>> groups(n);
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    for (size_t g = 0; g < n; ++g) {
        if (groups[g].empty()) continue;
        cdouble center = 0.0;
        for (size_t i : groups[g]) center += z[i];
        center /= static_cast<double>(groups[g].size());
        double radius = 0.0;
        for (size_t i : groups[g])
            radius = std::max(radius, std::abs(z[i] - center) + resid[i]);
        out.push_back({center, static_cast<long>(groups[g].size()), radius});
    }
    if (zero_roots > 0) out.push_back({cdouble(0.0, 0.0), zero_roots, 0.0});
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    return out;
}

// Numerically stable quadratic formula for the sampler's hot path.
std::vector<RootCluster> quadratic_roots(const std::vector<cdouble>& c,
                                         const RootFindOptions& opts) {
    const cdouble a = c[2], b = c[1], c0 = c[0];
    cdouble sq = std::sqrt(b * b - 4.0 * a * c0);
    // Pick the sign that avoids cancellation in b +/- sq.
    cdouble q = (std::real(std::conj(b) * sq) >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
    std::vector<cdouble> z;
    if (q == 0.0) {
        z = {-b / (2.0 * a), -b / (2.0 * a)};
    } else {
        z = {q / a, c0 / q};
    }
    DoubleEval eval(c);
    std::vector<double> resid(2);
    for (int k = 0; k < 2; ++k) {
        EvalResult ev = eval.eval(z[static_cast<size_t>(k)]);
        double r = 2.0 * std::abs(ev.newton);
        resid[static_cast<size_t>(k)] =
            std::isfinite(r) ? r
                             : opts.tol * (1.0 + std::abs(z[static_cast<size_t>(k)])) * 2.0;
    }
    return merge_clusters(z, resid, opts.cluster_factor, 0);
}

}  // namespace

std::vector<RootCluster> find_roots(const std::vector<std::complex<double>>& coeffs,
                                    const RootFindOptions& opts) {
    std::vector<cdouble> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.empty()) throw std::domain_error("find_roots: zero polynomial");
    long zero_roots = 0;
    while (!c.empty() && c.front() == 0.0) {
        c.erase(c.begin());
        ++zero_roots;
    }
    for (const cdouble& a : c)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || std::abs(a) > 1e280)
            throw std::domain_error("find_roots: coefficient beyond double range");
    long d = static_cast<long>(c.size()) - 1;
    if (d == 0) {
        if (zero_roots == 0) throw std::domain_error("find_roots: constant polynomial");
        return {{cdouble(0.0, 0.0), zero_roots, 0.0}};
    }
    std::vector<RootCluster> out;
    if (d == 1) {
        out = {{-c[0] / c[1], 1, std::numeric_limits<double>::epsilon() *
                                     (1.0 + std::abs(c[0] / c[1]))}};
        if (zero_roots > 0) out.push_back({cdouble(0.0, 0.0), zero_roots, 0.0});
        std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
            return std::pair(a.center.real(), a.center.imag()) <
                   std::pair(b.center.real(), b.center.imag());
        });
        return out;
    }
    if (d == 2 && zero_roots == 0) return quadratic_roots(c, opts);

    std::vector<double> log2mag(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        double m = std::abs(c[i]);
        log2mag[i] = m > 0.0 ? std::log2(m) : -kInf;
    }
    std::vector<cdouble> z = initial_guesses(log2mag, opts.seed);
    DoubleEval eval(c);
    std::vector<double> resid;
    aberth(eval, z, resid, opts);
    return merge_clusters(z, resid, opts.cluster_factor, zero_roots);
}

std::vector<RootCluster> find_roots(const std::vector<Integer>& coeffs,
                                    const RootFindOptions& opts) {
    std::vector<Integer> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw std::domain_error("find_roots: zero polynomial");
    long zero_roots = 0;
    while (!c.empty() && c.front() == 0) {
        c.erase(c.begin());
        ++zero_roots;
    }
    long d = static_cast<long>(c.size()) - 1;
    if (d == 0) {
        if (zero_roots == 0) throw std::domain_error("find_roots: constant polynomial");
        return {{cdouble(0.0, 0.0), zero_roots, 0.0}};
    }

    long maxbits = 1;
    std::vector<double> log2mag(c.size(), -kInf);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long bits = static_cast<long>(mpz_sizeinbase(c[i].get_mpz_t(), 2));
        maxbits = std::max(maxbits, bits);
        signed long e2 = 0;
        double m = mpz_get_d_2exp(&e2, c[i].get_mpz_t());
        log2mag[i] = std::log2(std::fabs(m)) + static_cast<double>(e2);
    }
    long prec = maxbits + 64 + static_cast<long>(std::ceil(std::log2(double(d + 1))));
    prec = std::min(prec, std::max(opts.max_precision_bits, 128L));
    prec = std::max(prec, 128L);

    std::vector<RootCluster> out;
    if (d == 1) {
        Rational r(-c[0], c[1]);
        r.canonicalize();
        double v = r.get_d();
        out = {{cdouble(v, 0.0), 1,
                std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(v))}};
        if (zero_roots > 0) out.push_back({cdouble(0.0, 0.0), zero_roots, 0.0});
        std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
            return std::pair(a.center.real(), a.center.imag()) <
                   std::pair(b.center.real(), b.center.imag());
        });
        return out;
    }

    std::vector<cdouble> z = initial_guesses(log2mag, opts.seed);
    MpfEval eval(c, prec);
    std::vector<double> resid;
    aberth(eval, z, resid, opts);
    return merge_clusters(z, resid, opts.cluster_factor, zero_roots);
}

std::vector<RootCluster> complex_roots(const PolyQ& f, double tol, RootFindOptions opts) {
    if (f.degree() < 1) throw std::domain_error("complex_roots: degree must be >= 1");
    if (tol <= 0) throw std::domain_error("complex_roots: tol must be positive");
    opts.tol = tol;
    return find_roots(to_primitive(f).coeffs, opts);
}

}  // namespace azpair
