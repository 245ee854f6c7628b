#include "spectral/eigenvalues.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace spectral {

namespace {

struct GaussianInt {
    Integer re, im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Integer norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
};

Integer round_div(const Integer& a, const Integer& b) {
    // nearest integer to a/b, ties toward +infinity; adequate for Euclidean division
    Integer two_a = 2 * a + b;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), two_a.get_mpz_t(), Integer(2 * b).get_mpz_t());
    if (sgn(b) < 0) {
        two_a = 2 * a - b;
        mpz_fdiv_q(q.get_mpz_t(), two_a.get_mpz_t(), Integer(2 * b).get_mpz_t());
    }
    return q;
}

// Euclidean division in Z[i]: remainder norm is at most half the divisor norm.
GaussianInt gi_mod(const GaussianInt& a, const GaussianInt& b) {
    Integer n = b.norm();
    GaussianInt ab = a * b.conj();
    GaussianInt q{round_div(ab.re, n), round_div(ab.im, n)};
    return a - q * b;
}

GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt r = gi_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool gi_divides(const GaussianInt& d, const GaussianInt& a) {
    return gi_mod(a, d).is_zero();
}

GaussianInt gi_divide_exact(const GaussianInt& a, const GaussianInt& d) {
    Integer n = d.norm();
    GaussianInt ad = a * d.conj();
    return {ad.re / n, ad.im / n};
}

// First-quadrant associate (re > 0, im >= 0) for nonzero values.
GaussianInt canonical_associate(GaussianInt z) {
    for (int i = 0; i < 4; ++i) {
        if (sgn(z.re) > 0 && sgn(z.im) >= 0) return z;
        z = z * GaussianInt{Integer(0), Integer(1)};
    }
    return z;
}

bool gi_less(const GaussianInt& a, const GaussianInt& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

void factor_integer(Integer n, std::map<Integer, unsigned>& factors) {
    if (n < 0) n = -n;
    for (Integer p = 2; p * p <= n && p < 100000; p = (p == 2 ? Integer(3) : p + 2)) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
        ++factors[n];
        return;
    }
    // Pollard rho (Brent variant) for the remaining composite.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    Integer d = n;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Integer c = rng.get_z_range(n - 3) + 1;
        Integer x = rng.get_z_range(n - 2) + 2;
        Integer y = x;
        d = 1;
        long iter = 0;
        while (d == 1 && iter < 2000000) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            if (sgn(diff) < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            ++iter;
        }
        if (d != 1 && d != n) break;
    }
    if (d == 1 || d == n)
        throw Error("factorization_limit", "integer factorization exceeded its budget");
    factor_integer(d, factors);
    factor_integer(n / d, factors);
}

// x with x^2 = -1 mod p for a prime p = 1 mod 4.
Integer sqrt_minus_one(const Integer& p) {
    Integer exp = (p - 1) / 4;
    for (Integer a = 2; a < p; ++a) {
        Integer x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        if ((x * x) % p == p - 1) return x;
    }
    throw Error("factorization_limit", "no square root of -1 found");
}

// Gaussian prime factorization (primes as canonical associates).
std::map<std::pair<std::string, std::string>, std::pair<GaussianInt, unsigned>>
gi_factor(GaussianInt z) {
    std::map<std::pair<std::string, std::string>, std::pair<GaussianInt, unsigned>> out;
    if (z.is_zero()) throw Error("internal_invariant", "factoring zero Gaussian integer");
    std::map<Integer, unsigned> nf;
    factor_integer(z.norm(), nf);
    auto add = [&](const GaussianInt& prime) {
        GaussianInt p = canonical_associate(prime);
        unsigned count = 0;
        while (gi_divides(p, z)) {
            z = gi_divide_exact(z, p);
            ++count;
        }
        if (count)
            out[{p.re.get_str(), p.im.get_str()}] = {p, count};
    };
    for (const auto& [p, e] : nf) {
        (void)e;
        if (p == 2) {
            add(GaussianInt{Integer(1), Integer(1)});
        } else if (p % 4 == 3) {
            add(GaussianInt{p, Integer(0)});
        } else {
            Integer x = sqrt_minus_one(p);
            GaussianInt pi = gi_gcd(GaussianInt{p, Integer(0)}, GaussianInt{x, Integer(1)});
            add(pi);
            add(pi.conj());
        }
    }
    return out;
}

std::vector<GaussianInt> gi_divisors(const GaussianInt& z) {
    auto factors = gi_factor(z);
    std::vector<GaussianInt> divisors{GaussianInt{Integer(1), Integer(0)}};
    for (const auto& [key, pe] : factors) {
        (void)key;
        std::vector<GaussianInt> next;
        GaussianInt pk{Integer(1), Integer(0)};
        for (unsigned k = 0; k <= pe.second; ++k) {
            for (const auto& d : divisors) next.push_back(canonical_associate(d * pk));
            pk = pk * pe.first;
        }
        divisors = std::move(next);
        if (divisors.size() > 100000)
            throw Error("factorization_limit", "divisor enumeration exceeded its budget");
    }
    std::sort(divisors.begin(), divisors.end(), gi_less);
    divisors.erase(std::unique(divisors.begin(), divisors.end(),
                               [](const GaussianInt& a, const GaussianInt& b) { return a == b; }),
                   divisors.end());
    return divisors;
}

GaussianRational evaluate(const std::vector<GaussianRational>& poly,
                          const GaussianRational& z) {
    GaussianRational acc(0);
    for (size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
    return acc;
}

// poly / (x - z), exact; requires z to be a root.
std::vector<GaussianRational> deflate(const std::vector<GaussianRational>& poly,
                                      const GaussianRational& z) {
    std::vector<GaussianRational> quot(poly.size() - 1);
    GaussianRational carry(0);
    for (size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * z;
        quot[i - 1] = carry;
    }
    return quot;
}

} // namespace

Eigen::Index EigenvalueList::total_multiplicity() const {
    Eigen::Index total = 0;
    for (const auto& item : items) total += item.multiplicity;
    return total;
}

EigenvalueList rational_eigenvalues(const ExactMatrix& m) {
    require_square(m, "rational_eigenvalues");
    const Eigen::Index n = m.rows();
    EigenvalueList out;
    if (n == 0) {
        out.complete = true;
        return out;
    }
    std::vector<GaussianRational> chi = characteristic_polynomial(m);

    // Clear denominators: integer coefficient polynomial over Z[i].
    Integer lcm = 1;
    for (const auto& c : chi) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    std::vector<GaussianInt> zc(chi.size());
    for (size_t i = 0; i < chi.size(); ++i) {
        Rational re = chi[i].re * lcm, im = chi[i].im * lcm;
        zc[i] = {re.get_num(), im.get_num()};
    }

    size_t low = 0;
    while (low < zc.size() && zc[low].is_zero()) ++low;
    std::vector<EigenvalueList::Item> found;
    if (low > 0)
        found.push_back({GaussianRational(0), static_cast<Eigen::Index>(low)});

    Eigen::Index assigned = static_cast<Eigen::Index>(low);
    if (low < zc.size() - 1) { // nonconstant part remains
        std::vector<GaussianInt> trailing_divs = gi_divisors(zc[low]);
        std::vector<GaussianInt> leading_divs = gi_divisors(zc.back());
        const GaussianInt units[4] = {{Integer(1), Integer(0)},
                                      {Integer(0), Integer(1)},
                                      {Integer(-1), Integer(0)},
                                      {Integer(0), Integer(-1)}};
        std::vector<GaussianRational> reduced(chi.begin() + static_cast<long>(low),
                                              chi.end());
        std::map<std::pair<std::string, std::string>, GaussianRational> seen;
        for (const auto& p : trailing_divs)
            for (const auto& q : leading_divs)
                for (const auto& u : units) {
                    GaussianInt num = canonical_associate(p) * u;
                    Integer qn = q.norm();
                    GaussianInt nq = num * q.conj();
                    GaussianRational cand(Rational(nq.re) / Rational(qn),
                                          Rational(nq.im) / Rational(qn));
                    cand.re.canonicalize();
                    cand.im.canonicalize();
                    seen.insert({{format_rational(cand.re), format_rational(cand.im)}, cand});
                }
        for (const auto& [key, cand] : seen) {
            (void)key;
            if (!evaluate(reduced, cand).is_zero()) continue;
            Eigen::Index mult = 0;
            while (evaluate(reduced, cand).is_zero()) {
                reduced = deflate(reduced, cand);
                ++mult;
            }
            found.push_back({cand, mult});
            assigned += mult;
        }
    }

    std::sort(found.begin(), found.end(),
              [](const EigenvalueList::Item& a, const EigenvalueList::Item& b) {
                  return lex_less(a.value, b.value);
              });
    out.items = std::move(found);
    out.complete = (assigned == n);
    return out;
}

SpectralRegion point_spectrum_region(const ExactMatrix& m) {
    EigenvalueList ev = rational_eigenvalues(m);
    if (!ev.complete)
        throw IncompleteFactorization(
            "characteristic polynomial has irrational eigenvalues; "
            "point spectrum region is not available");
    std::vector<RegionPrimitive> points;
    points.reserve(ev.items.size());
    for (const auto& item : ev.items) points.push_back(RegionPrimitive::point(item.value));
    return SpectralRegion::make(std::move(points));
}

SpectrumClassification classify_spectrum(const ExactMatrix& m, bool parallel) {
    SpectrumClassification sc;
    sc.eigenvalues = rational_eigenvalues(m);
    if (parallel) {
        std::vector<std::future<PointClassification>> jobs;
        jobs.reserve(sc.eigenvalues.items.size());
        for (const auto& item : sc.eigenvalues.items)
            jobs.push_back(std::async(std::launch::async, [&m, value = item.value] {
                return classify_point(m, value);
            }));
        for (auto& job : jobs) sc.points.push_back(job.get());
    } else {
        for (const auto& item : sc.eigenvalues.items)
            sc.points.push_back(classify_point(m, item.value));
    }
    return sc;
}

} // namespace spectral
