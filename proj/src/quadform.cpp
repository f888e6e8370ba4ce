#include "pellgroup/quadform.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "pellgroup/errors.hpp"

namespace pellgroup {

namespace {

Integer fdiv(Integer const & n, Integer const & d)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

/* g = u a + v b with g = gcd(a, b) >= 0 */
Integer extended_gcd(Integer const & a, Integer const & b, Integer & u, Integer & v)
{
    Integer g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

void require_valid(QuadForm const & f)
{
    if (!f.is_positive_definite())
        throw InvalidArgument("form is not positive definite");
    if (!f.is_primitive())
        throw InvalidArgument("form is not primitive");
}

/* The form f(xX + rY, yX + sY) for x s - y r = 1. */
QuadForm transform(QuadForm const & f, Integer const & x, Integer const & y,
                   Integer const & r, Integer const & s)
{
    return { f(x, y), 2 * f.a * x * r + f.b * (x * s + y * r) + 2 * f.c * y * s,
             f(r, s) };
}

/* An equivalent of g whose leading coefficient is prime to m. Primitive forms
 * represent integers prime to any m, so the widening box search ends. */
QuadForm equivalent_with_coprime_leading(QuadForm const & g, Integer const & m)
{
    for (Integer bound = 1;; bound *= 2) {
        for (Integer x = -bound; x <= bound; ++x) {
            for (Integer y = 0; y <= bound; ++y) {
                Integer s, negr;
                if (extended_gcd(x, y, s, negr) != 1)
                    continue;
                /* x s + y negr = 1, so r = -negr gives x s - y r = 1 */
                if (gcd(g(x, y), m) != 1)
                    continue;
                return transform(g, x, y, Integer(-negr), s);
            }
        }
    }
}

/* Dirichlet composition under gcd(a1, a2, (b1 + b2)/2) = 1: the composite is
 * [a1 a2, B, (B^2 - K)/(4 a1 a2)] with B = b1 mod 2a1, B = b2 mod 2a2 and
 * B^2 = K mod 4 a1 a2. Returns false if the coprimality condition fails. */
bool dirichlet(QuadForm const & f, QuadForm const & g, QuadForm & out)
{
    Integer const K = f.discriminant();
    Integer const h = (f.b + g.b) / 2;
    Integer x, y, s, t;
    Integer const g1 = extended_gcd(f.a, g.a, x, y);
    if (extended_gcd(g1, h, s, t) != 1)
        return false;
    Integer const u = s * x, v = s * y, w = t;
    Integer const a = f.a * g.a;
    Integer const B = mod(Integer(u * f.a * g.b + v * g.a * f.b
                                  + w * (f.b * g.b + K) / 2),
                          Integer(2 * a));
    Integer const num = B * B - K;
    if (mod(num, Integer(4 * a)) != 0)
        throw std::logic_error("Dirichlet composition produced a non-integral form");
    out = { a, B, num / (4 * a) };
    return true;
}

} // namespace

bool QuadForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

bool operator<(QuadForm const & f, QuadForm const & g)
{
    if (f.a != g.a)
        return f.a < g.a;
    if (f.b != g.b)
        return f.b < g.b;
    return f.c < g.c;
}

std::ostream & operator<<(std::ostream & o, QuadForm const & f)
{
    return o << "[" << f.a << "," << f.b << "," << f.c << "]";
}

QuadForm make_form(Integer a, Integer b, Integer c)
{
    QuadForm f { std::move(a), std::move(b), std::move(c) };
    require_valid(f);
    return f;
}

QuadForm identity_form(Integer const & K)
{
    if (K >= 0)
        throw InvalidArgument("discriminant must be negative");
    Integer const r = mod(K, 4);
    if (r == 0)
        return { 1, 0, -K / 4 };
    if (r == 1)
        return { 1, 1, (1 - K) / 4 };
    throw InvalidArgument("discriminant " + to_string(K) + " is not 0 or 1 mod 4");
}

bool is_reduced(QuadForm const & f)
{
    if (abs(f.b) > f.a || f.a > f.c)
        return false;
    if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

QuadForm reduce(QuadForm const & f)
{
    require_valid(f);
    QuadForm r = f;
    for (;;) {
        if (r.b <= -r.a || r.b > r.a) {
            Integer const k = fdiv(Integer(r.a - r.b), Integer(2 * r.a));
            r.c = r.a * k * k + r.b * k + r.c;
            r.b += 2 * r.a * k;
        }
        if (r.a > r.c) {
            std::swap(r.a, r.c);
            r.b = -r.b;
            continue;
        }
        if (r.a == r.c && r.b < 0)
            r.b = -r.b;
        return r;
    }
}

QuadForm inverse(QuadForm const & f)
{
    return reduce({ f.a, -f.b, f.c });
}

QuadForm compose(QuadForm const & f, QuadForm const & g)
{
    require_valid(f);
    require_valid(g);
    if (f.discriminant() != g.discriminant())
        throw InvalidArgument("discriminant mismatch in composition");
    QuadForm out;
    if (dirichlet(f, g, out))
        return reduce(out);
    QuadForm const g2 = equivalent_with_coprime_leading(g, f.a);
    if (!dirichlet(f, g2, out))
        throw std::logic_error("coprime representative still fails composition");
    return reduce(out);
}

unsigned long element_order(QuadForm const & f)
{
    QuadForm const base = reduce(f);
    QuadForm const id = identity_form(base.discriminant());
    QuadForm power = base;
    unsigned long n = 1;
    while (!(power == id)) {
        power = compose(power, base);
        ++n;
    }
    return n;
}

unsigned long ClassGroupDescriptor::order_of(QuadForm const & f) const
{
    QuadForm const r = reduce(f);
    auto it = std::lower_bound(reduced_forms.begin(), reduced_forms.end(), r);
    if (it == reduced_forms.end() || !(*it == r))
        throw InvalidArgument("form does not belong to this class group");
    return orders[static_cast<std::size_t>(it - reduced_forms.begin())];
}

ClassGroupDescriptor enumerate_class_group(Integer const & K)
{
    if (K >= 0 || mod(K, 4) != 0)
        throw InvalidArgument("discriminant must be negative and divisible by 4, got "
                              + to_string(K));
    ClassGroupDescriptor d;
    d.K = K;
    Integer const absK = -K;
    for (Integer a = 1; 3 * a * a <= absK; ++a) {
        for (Integer b = -a + 1; b <= a; ++b) {
            if (mpz_odd_p(b.get_mpz_t()))
                continue;
            Integer const num = b * b - K;
            if (mod(num, Integer(4 * a)) != 0)
                continue;
            Integer const c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            QuadForm f { a, b, c };
            if (f.is_primitive())
                d.reduced_forms.push_back(std::move(f));
        }
    }
    std::sort(d.reduced_forms.begin(), d.reduced_forms.end());
    d.class_number = d.reduced_forms.size();
    d.orders.reserve(d.class_number);
    for (auto const & f : d.reduced_forms)
        d.orders.push_back(element_order(f));
    d.is_free_z2 = std::all_of(d.orders.begin(), d.orders.end(),
                               [](unsigned long n) { return n <= 2; });
    return d;
}

} // namespace pellgroup
