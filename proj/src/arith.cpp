#include "pellgroup/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "pellgroup/errors.hpp"

namespace pellgroup {

namespace {

constexpr std::uint32_t trial_division_bound = 1000000;

std::vector<std::uint32_t> const & small_primes()
{
    static std::vector<std::uint32_t> const primes = [] {
        std::vector<bool> composite(trial_division_bound, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < trial_division_bound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < trial_division_bound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

Integer powm(Integer const & base, Integer const & e, Integer const & m)
{
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool miller_rabin_round(Integer const & n, Integer const & d, unsigned long s,
                        unsigned long witness)
{
    Integer const n1 = n - 1;
    Integer x = powm(Integer(witness), d, n);
    if (x == 1 || x == n1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = mod(x * x, n);
        if (x == n1)
            return true;
    }
    return false;
}

void require_odd_prime(Integer const & p)
{
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw InvalidArgument(to_string(p) + " is not an odd prime");
}

/* Brent's variant of Pollard rho. n is odd, composite, and free of small
 * factors; returns a nontrivial divisor. */
Integer pollard_brent(Integer const & n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        unsigned long const m = 128;
        auto f = [&](Integer const & v) { return mod(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mod(q * abs(Integer(x - y)), n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_into(Integer const & n, std::vector<Integer> & primes)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer const d = pollard_brent(n);
    split_into(d, primes);
    split_into(Integer(n / d), primes);
}

} // namespace

Integer PrimePower::value() const
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), prime.get_mpz_t(), exponent);
    return r;
}

Integer FactoredInteger::recompose() const
{
    Integer r = 1;
    for (auto const & f : factors)
        r *= f.value();
    return r;
}

bool is_prime(Integer const & n)
{
    if (n < 2)
        return false;
    static constexpr std::array<unsigned long, 13> bases
        = { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41 };
    for (auto b : bases) {
        if (n == b)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return false;
    }
    static Integer const deterministic_bound("3317044064679887385961981");
    if (n >= deterministic_bound)
        return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;

    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    return std::all_of(bases.begin(), bases.end(), [&](unsigned long w) {
        return miller_rabin_round(n, d, s, w);
    });
}

int legendre(Integer const & a, Integer const & p)
{
    require_odd_prime(p);
    Integer const r = mod(a, p);
    if (r == 0)
        return 0;
    return powm(r, Integer((p - 1) / 2), p) == 1 ? 1 : -1;
}

Integer sqrt_mod_p(Integer const & a, Integer const & p)
{
    if (legendre(a, p) != 1)
        throw NoSquareRoot(to_string(a) + " is not a nonzero square modulo "
                           + to_string(p));
    Integer const n = mod(a, p);
    Integer r;
    if (mod(p, 4) == 3) {
        r = powm(n, Integer((p + 1) / 4), p);
    } else {
        /* Tonelli-Shanks: p - 1 = q 2^s with q odd */
        Integer q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        Integer z = 2;
        while (legendre(z, p) != -1)
            ++z;
        Integer c = powm(z, q, p);
        Integer t = powm(n, q, p);
        r = powm(n, Integer((q + 1) / 2), p);
        unsigned long m = s;
        while (t != 1) {
            unsigned long i = 0;
            Integer t2 = t;
            while (t2 != 1) {
                t2 = mod(t2 * t2, p);
                ++i;
            }
            Integer b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j)
                b = mod(b * b, p);
            r = mod(r * b, p);
            c = mod(b * b, p);
            t = mod(t * c, p);
            m = i;
        }
    }
    Integer const other = p - r;
    return r <= other ? r : other;
}

Integer inverse_mod(Integer const & a, Integer const & m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InvalidArgument(to_string(a) + " is not invertible modulo "
                              + to_string(m));
    return r;
}

Integer hensel_lift(Integer const & D, Integer const & p,
                    unsigned long target_exponent)
{
    if (D < 1)
        throw InvalidArgument("D must be positive");
    if (target_exponent == 0)
        throw InvalidArgument("target exponent must be at least 1");
    require_odd_prime(p);
    if (mod(D, p) == 0)
        throw InvalidArgument(to_string(p) + " divides D = " + to_string(D));

    Integer s = sqrt_mod_p(Integer(-D), p);
    Integer modulus = p;
    /* f(s) = s^2 + D, f'(s) = 2s is a unit mod p since p does not divide D.
     * Each step: s <- s - f(s) * (f'(s))^{-1} mod p^{k+1}. */
    for (unsigned long k = 1; k < target_exponent; ++k) {
        modulus *= p;
        Integer const f = s * s + D;
        Integer const inv = inverse_mod(Integer(2 * s), modulus);
        s = mod(Integer(s - f * inv), modulus);
    }
    return s;
}

FactoredInteger factorize(Integer const & n)
{
    if (n < 1)
        throw InvalidArgument("cannot factor " + to_string(n));
    FactoredInteger out { n, {} };
    Integer m = n;
    for (std::uint32_t p : small_primes()) {
        if (Integer(p) * p > m)
            break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p))
            continue;
        PrimePower pp { Integer(p), 0 };
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++pp.exponent;
        }
        out.factors.push_back(pp);
    }
    if (m == 1)
        return out;

    std::vector<Integer> large;
    split_into(m, large);
    std::sort(large.begin(), large.end());
    for (auto const & p : large) {
        if (!out.factors.empty() && out.factors.back().prime == p)
            ++out.factors.back().exponent;
        else
            out.factors.push_back({ p, 1 });
    }
    return out;
}

bool is_square_free(Integer const & n)
{
    auto const f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](PrimePower const & pp) { return pp.exponent == 1; });
}

} // namespace pellgroup
