#include "pellgroup/solutions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "pellgroup/arith.hpp"
#include "pellgroup/errors.hpp"
#include "pellgroup/quadform.hpp"

namespace pellgroup {

namespace {

/* Thread-safe memo table. Values are pure functions of the key, so a racing
 * double fill stores the same value twice. */
template <typename Value>
class Memo
{
    public:
    template <typename Compute>
    Value get(std::string const & key, Compute && compute)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end())
                return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(v)).first->second;
    }

    private:
    std::shared_mutex mutex_;
    std::map<std::string, Value> table_;
};

Memo<Applicability> & applicability_memo()
{
    static Memo<Applicability> memo;
    return memo;
}

Memo<ZetaFactor> & zeta_memo()
{
    static Memo<ZetaFactor> memo;
    return memo;
}

void require_applicable(Integer const & D)
{
    check_applicability(D).require();
}

void require_positive_hypotenuse(Integer const & c)
{
    if (c < 1)
        throw InvalidArgument("hypotenuse must be positive, got " + to_string(c));
}

bool in_generating_set(Integer const & D, Integer const & p)
{
    return p != 2 && legendre(Integer(-D), p) == 1;
}

/* (x + y sqrt(-D))^n as an integer pair */
std::pair<Integer, Integer> power_pair(Integer const & x, Integer const & y,
                                       Integer const & D, unsigned long n)
{
    Integer rx = 1, ry = 0;
    for (unsigned long i = 0; i < n; ++i) {
        Integer const nx = rx * x - D * ry * y;
        ry = rx * y + ry * x;
        rx = nx;
    }
    return { rx, ry };
}

bool is_valid_zeta(Integer const & D, Integer const & p, Integer const & x,
                   Integer const & y)
{
    return x > 0 && y > 0 && gcd(x, y) == 1 && x * x + D * y * y == p * p;
}

/* Cornacchia descent on (p^2, t) with t^2 = -D mod p^2. */
std::optional<ZetaFactor> descend(Integer const & D, Integer const & p, Integer t)
{
    Integer const m = p * p;
    Integer r0 = m, r1 = t;
    while (r1 >= p) {
        Integer const r2 = mod(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    Integer const rest = m - r1 * r1;
    if (mod(rest, D) != 0)
        return std::nullopt;
    auto y = exact_sqrt(Integer(rest / D));
    if (!y || !is_valid_zeta(D, p, r1, *y))
        return std::nullopt;
    return ZetaFactor { D, p, r1, *y };
}

std::optional<ZetaFactor> scan(Integer const & D, Integer const & p)
{
    std::optional<ZetaFactor> found;
    Integer const m = p * p;
    for (Integer y = 1; D * y * y < m; ++y) {
        auto x = exact_sqrt(Integer(m - D * y * y));
        if (!x || !is_valid_zeta(D, p, *x, y))
            continue;
        if (found)
            throw std::logic_error("p^2 has two coprime representations for p = "
                                   + to_string(p));
        found = ZetaFactor { D, p, *x, y };
    }
    return found;
}

ZetaFactor construct_zeta(Integer const & D, Integer const & p)
{
    Integer const t = hensel_lift(D, p, 2);
    if (auto z = descend(D, p, t))
        return *z;
    if (auto z = descend(D, p, Integer(p * p - t)))
        return *z;
    if (auto z = scan(D, p))
        return *z;
    throw NotRepresentable(to_string(p) + "^2 has no coprime representation by x^2 + "
                           + to_string(D) + " y^2");
}

} // namespace

std::string Applicability::reason() const
{
    if (D == 1)
        return "D = 1 has units {1, i, -1, -i} and is outside this theory";
    if (!square_free)
        return "D = " + to_string(D) + " is not square-free";
    if (!residue_ok)
        return "-D = 1 (mod 4) admits even hypotenuses and is not supported";
    if (!free_z2)
        return "class group of discriminant " + to_string(Integer(-4 * D))
               + " is not a free Z2-module";
    return {};
}

void Applicability::require() const
{
    if (applicable())
        return;
    std::string const why = reason();
    if (D != 1 && square_free && !residue_ok)
        throw UnsupportedResidueClass(why);
    if (D != 1 && square_free && !free_z2)
        throw UnsupportedClassGroup(why);
    throw NotApplicable(why);
}

Applicability check_applicability(Integer const & D)
{
    if (D < 1)
        throw InvalidArgument("D must be positive, got " + to_string(D));
    return applicability_memo().get(to_string(D), [&] {
        Applicability app;
        app.D = D;
        Integer const r = mod(Integer(-D), 4);
        app.residue_ok = r == 2 || r == 3;
        app.square_free = is_square_free(D);
        auto const group = enumerate_class_group(Integer(-4 * D));
        app.class_number = group.class_number;
        app.free_z2 = group.is_free_z2;
        return app;
    });
}

bool solution_exists(Integer const & D, Integer const & c)
{
    require_applicable(D);
    require_positive_hypotenuse(c);
    if (c == 1 || mpz_even_p(c.get_mpz_t()))
        return false;
    auto const f = factorize(c);
    return std::all_of(f.factors.begin(), f.factors.end(), [&](PrimePower const & pp) {
        return in_generating_set(D, pp.prime);
    });
}

GroupElement ZetaFactor::element() const
{
    return make_element(D, x0, y0, p);
}

ZetaFactor zeta(Integer const & D, Integer const & p)
{
    require_applicable(D);
    int const symbol = legendre(Integer(-D), p);
    if (symbol == 0)
        throw InvalidArgument(to_string(p) + " divides D = " + to_string(D));
    if (symbol != 1)
        throw NotRepresentable("(-" + to_string(D) + "/" + to_string(p)
                               + ") = -1, so " + to_string(p) + " is not in S");
    return zeta_memo().get(to_string(D) + ":" + to_string(p),
                           [&] { return construct_zeta(D, p); });
}

std::optional<std::pair<Integer, Integer>>
divides(Integer const & x, Integer const & y, Integer const & a,
        Integer const & b, Integer const & D)
{
    if (x == 0 && y == 0)
        throw InvalidArgument("division by zero");
    Integer const norm = x * x + D * y * y;
    Integer const re = a * x + D * b * y;
    Integer const im = b * x - a * y;
    if (mod(re, norm) != 0 || mod(im, norm) != 0)
        return std::nullopt;
    return std::make_pair(Integer(re / norm), Integer(im / norm));
}

Factorization factor_element(GroupElement const & z)
{
    Integer const & D = z.D();
    require_applicable(D);
    Factorization out;
    Integer re = z.a(), im = z.b();
    for (auto const & pp : factorize(z.c()).factors) {
        if (!in_generating_set(D, pp.prime))
            throw NotFactorable("hypotenuse " + to_string(z.c()) + " has the factor "
                                + to_string(pp.prime) + " outside S");
        auto const zp = zeta(D, pp.prime);
        auto const [wx, wy] = power_pair(zp.x0, zp.y0, D, pp.exponent);
        auto const direct = divides(wx, wy, re, im, D);
        auto const conj = divides(wx, Integer(-wy), re, im, D);
        if (direct.has_value() == conj.has_value())
            throw std::logic_error("expected exactly one of zeta_p^n and its conjugate to "
                                   "divide, p = " + to_string(pp.prime));
        auto const & q = direct ? *direct : *conj;
        re = q.first;
        im = q.second;
        long const e = static_cast<long>(pp.exponent);
        out.terms.push_back({ pp.prime, direct ? e : -e });
    }
    if (im != 0 || abs(re) != 1)
        throw std::logic_error("factorization left a non-unit residue");
    out.sign = re > 0 ? 1 : -1;
    return out;
}

GroupElement recompose(Integer const & D, Factorization const & f)
{
    GroupElement z = make_element(D, f.sign, 0, 1);
    for (auto const & t : f.terms)
        z = multiply(z, pow(zeta(D, t.prime).element(), t.exponent));
    return z;
}

std::vector<NormalizedSolution> enumerate_solutions(Integer const & D, Integer const & c)
{
    require_applicable(D);
    require_positive_hypotenuse(c);
    if (c == 1 || mpz_even_p(c.get_mpz_t()))
        return {};
    auto const f = factorize(c);
    std::vector<GroupElement> powers;
    for (auto const & pp : f.factors) {
        if (!in_generating_set(D, pp.prime))
            return {};
        powers.push_back(pow(zeta(D, pp.prime).element(),
                             static_cast<long>(pp.exponent)));
    }
    std::size_t const free_signs = powers.size() - 1;
    if (free_signs >= 63)
        throw InvalidArgument("too many distinct prime factors to enumerate");

    std::vector<NormalizedSolution> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free_signs); ++mask) {
        GroupElement z = powers[0];
        for (std::size_t i = 1; i < powers.size(); ++i)
            z = multiply(z, (mask >> (i - 1)) & 1 ? conjugate(powers[i]) : powers[i]);
        out.push_back(to_normalized(z));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("sign patterns produced a repeated solution");
    return out;
}

Integer count_solutions(Integer const & D, Integer const & c)
{
    if (!solution_exists(D, c))
        return 0;
    Integer n = 1;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), factorize(c).distinct_primes() - 1);
    return n;
}

NormalizedSolution multiply_solutions(NormalizedSolution const & s1,
                                      NormalizedSolution const & s2)
{
    if (s1.D != s2.D)
        throw InvalidArgument("solutions have different D");
    for (auto const * s : { &s1, &s2 })
        if (s->a < 1 || s->b < 1 || s->c < 1)
            throw InvalidArgument("solution entries must be positive");
    if (gcd(s1.c, s2.c) != 1)
        throw InvalidArgument("hypotenuses " + to_string(s1.c) + " and "
                              + to_string(s2.c) + " are not coprime");
    GroupElement const z1 = to_element(s1), z2 = to_element(s2);
    if (z1.c() != s1.c || z2.c() != s2.c)
        throw InvalidArgument("solution is not primitive");
    GroupElement const z = multiply(z1, z2);
    if (z.c() != s1.c * s2.c)
        throw std::logic_error("product of coprime solutions lost primitivity");
    return to_normalized(z);
}

} // namespace pellgroup
