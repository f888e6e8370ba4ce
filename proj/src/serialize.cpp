#include "pellgroup/serialize.hpp"

#include <sstream>

#include "pellgroup/errors.hpp"

namespace pellgroup {

json integer_to_json(Integer const & n)
{
    if (fits_int64(n))
        return to_int64(n);
    return to_string(n);
}

Integer integer_from_json(json const & j)
{
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        if (auto n = parse_integer(j.get<std::string>()))
            return *n;
    }
    throw InvalidArgument("expected an integer, got " + j.dump());
}

json to_json(ClassGroupDescriptor const & d)
{
    json forms = json::array();
    for (auto const & f : d.reduced_forms)
        forms.push_back({ integer_to_json(f.a), integer_to_json(f.b), integer_to_json(f.c) });
    return { { "K", integer_to_json(d.K) },
             { "class_number", d.class_number },
             { "forms", forms },
             { "orders", d.orders },
             { "free_z2", d.is_free_z2 } };
}

ClassGroupDescriptor descriptor_from_json(json const & j)
{
    ClassGroupDescriptor d;
    d.K = integer_from_json(j.at("K"));
    for (auto const & f : j.at("forms"))
        d.reduced_forms.push_back(
            make_form(integer_from_json(f.at(0)), integer_from_json(f.at(1)),
                      integer_from_json(f.at(2))));
    d.class_number = j.at("class_number").get<std::size_t>();
    d.orders = j.at("orders").get<std::vector<unsigned long>>();
    d.is_free_z2 = j.at("free_z2").get<bool>();
    if (d.class_number != d.reduced_forms.size() || d.orders.size() != d.class_number)
        throw InvalidArgument("descriptor lengths disagree");
    return d;
}

json to_json(GroupElement const & z)
{
    return { { "D", integer_to_json(z.D()) },
             { "a", integer_to_json(z.a()) },
             { "b", integer_to_json(z.b()) },
             { "c", integer_to_json(z.c()) } };
}

GroupElement element_from_json(json const & j)
{
    return make_element(integer_from_json(j.at("D")), integer_from_json(j.at("a")),
                        integer_from_json(j.at("b")), integer_from_json(j.at("c")));
}

json to_json(Factorization const & f)
{
    json terms = json::array();
    for (auto const & t : f.terms)
        terms.push_back({ integer_to_json(t.prime), t.exponent });
    return { { "sign", f.sign }, { "terms", terms } };
}

Factorization factorization_from_json(json const & j)
{
    Factorization f;
    f.sign = j.at("sign").get<int>();
    if (f.sign != 1 && f.sign != -1)
        throw InvalidArgument("sign must be +1 or -1");
    for (auto const & t : j.at("terms"))
        f.terms.push_back({ integer_from_json(t.at(0)), t.at(1).get<long>() });
    return f;
}

SolutionSet solve(Integer const & D, Integer const & c)
{
    SolutionSet out { D, c, 0, {} };
    for (auto const & s : enumerate_solutions(D, c))
        out.solutions.push_back({ s, factor_element(to_element(s)) });
    out.count = out.solutions.size();
    return out;
}

json to_json(SolutionSet const & s)
{
    json sols = json::array();
    for (auto const & e : s.solutions)
        sols.push_back({ { "a", integer_to_json(e.solution.a) },
                         { "b", integer_to_json(e.solution.b) },
                         { "c", integer_to_json(e.solution.c) },
                         { "factorization", to_json(e.factorization) } });
    return { { "D", integer_to_json(s.D) },
             { "c", integer_to_json(s.c) },
             { "count", integer_to_json(s.count) },
             { "solutions", sols } };
}

SolutionSet solution_set_from_json(json const & j)
{
    SolutionSet s;
    s.D = integer_from_json(j.at("D"));
    s.c = integer_from_json(j.at("c"));
    s.count = integer_from_json(j.at("count"));
    for (auto const & e : j.at("solutions")) {
        NormalizedSolution sol { s.D, integer_from_json(e.at("a")),
                                 integer_from_json(e.at("b")),
                                 integer_from_json(e.at("c")) };
        s.solutions.push_back({ sol, factorization_from_json(e.at("factorization")) });
    }
    return s;
}

std::string sweep_to_csv(SweepSummary const & s)
{
    std::ostringstream out;
    out << "D,c,k,theory_count,oracle_count,agree\n";
    for (auto const & r : s.rows)
        out << s.D << ',' << r.c << ',' << r.k << ',' << r.theory_count << ','
            << r.oracle_count << ',' << (r.agree ? "true" : "false") << '\n';
    return out.str();
}

} // namespace pellgroup
