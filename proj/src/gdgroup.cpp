#include "pellgroup/gdgroup.hpp"

#include <ostream>

#include "pellgroup/arith.hpp"
#include "pellgroup/errors.hpp"

namespace pellgroup {

namespace {

void require_valid_D(Integer const & D)
{
    if (D < 1)
        throw InvalidArgument("D must be positive, got " + to_string(D));
    if (!is_square_free(D))
        throw InvalidArgument("D = " + to_string(D) + " is not square-free");
}

} // namespace

GroupElement make_element(Integer const & D, Integer a, Integer b, Integer c)
{
    require_valid_D(D);
    return GroupElement::checked(D, std::move(a), std::move(b), std::move(c));
}

GroupElement GroupElement::checked(Integer const & D, Integer a, Integer b, Integer c)
{
    if (c == 0)
        throw InvalidArgument("denominator must be nonzero");
    Integer const g = gcd(gcd(a, b), c);
    if (g != 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    if (c < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    if (a * a + D * b * b != c * c)
        throw NotOnEllipse("(" + to_string(a) + ", " + to_string(b) + ", "
                           + to_string(c) + ") is not on x^2 + "
                           + to_string(D) + " y^2 = z^2");
    return { D, std::move(a), std::move(b), std::move(c) };
}

GroupElement identity_element(Integer const & D)
{
    require_valid_D(D);
    return { D, 1, 0, 1 };
}

std::ostream & operator<<(std::ostream & o, GroupElement const & z)
{
    return o << "(" << z.a() << "," << z.b() << "," << z.c() << ")";
}

bool operator<(NormalizedSolution const & s, NormalizedSolution const & t)
{
    if (s.D != t.D)
        return s.D < t.D;
    if (s.c != t.c)
        return s.c < t.c;
    if (s.b != t.b)
        return s.b < t.b;
    return s.a < t.a;
}

std::ostream & operator<<(std::ostream & o, NormalizedSolution const & s)
{
    return o << "(" << s.a << "," << s.b << "," << s.c << ")";
}

GroupElement multiply(GroupElement const & z1, GroupElement const & z2)
{
    if (z1.D() != z2.D())
        throw InvalidArgument("cannot multiply elements with D = " + to_string(z1.D())
                              + " and D = " + to_string(z2.D()));
    Integer const & D = z1.D();
    return GroupElement::checked(D, z1.a() * z2.a() - D * z1.b() * z2.b(),
                        z1.a() * z2.b() + z2.a() * z1.b(), z1.c() * z2.c());
}

GroupElement conjugate(GroupElement const & z)
{
    return { z.D_, z.a_, -z.b_, z.c_ };
}

GroupElement pow(GroupElement const & z, long n)
{
    GroupElement base = n < 0 ? conjugate(z) : z;
    unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n)
                            : static_cast<unsigned long>(n);
    GroupElement result = identity_element(z.D());
    while (e != 0) {
        if (e & 1)
            result = multiply(result, base);
        e >>= 1;
        if (e != 0)
            base = multiply(base, base);
    }
    return result;
}

std::array<GroupElement, 4> gamma_orbit(GroupElement const & z)
{
    if (z.is_unit() || z.b() == 0 || z.a() == 0)
        throw DegenerateOrbit("orbit of " + to_string(z.a()) + "/" + to_string(z.c())
                              + " under sign and conjugation has fewer than 4 points");
    GroupElement const zbar = conjugate(z);
    auto negate = [](GroupElement const & w) {
        return make_element(w.D(), Integer(-w.a()), Integer(-w.b()), w.c());
    };
    return { z, negate(z), zbar, negate(zbar) };
}

NormalizedSolution to_normalized(GroupElement const & z)
{
    if (z.D() == 1)
        throw NoNormalizedForm("normalization for D = 1 is not supported");
    if (z.is_unit() || z.b() == 0)
        throw NoNormalizedForm("the unit " + to_string(z.a())
                               + " has no normalized solution");
    return { z.D(), abs(z.a()), abs(z.b()), z.c() };
}

GroupElement to_element(NormalizedSolution const & s)
{
    return make_element(s.D, s.a, s.b, s.c);
}

} // namespace pellgroup
