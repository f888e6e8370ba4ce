#include "pellgroup/cli.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "pellgroup/arith.hpp"
#include "pellgroup/errors.hpp"
#include "pellgroup/oracle.hpp"
#include "pellgroup/quadform.hpp"
#include "pellgroup/serialize.hpp"
#include "pellgroup/solutions.hpp"

namespace pellgroup::cli {

namespace {

enum class Format
{
    human,
    json,
    csv,
};

struct Options
{
    Format format = Format::human;
    unsigned threads = 1;
    std::string c_max = "0";
};

class UsageError : public std::runtime_error
{
    public:
    using std::runtime_error::runtime_error;
};

Integer integer_arg(std::string const & name, std::string const & text)
{
    auto n = parse_integer(text);
    if (!n)
        throw UsageError(name + ": '" + text + "' is not an integer");
    return *n;
}

Integer positive_arg(std::string const & name, std::string const & text)
{
    Integer n = integer_arg(name, text);
    if (n < 1)
        throw UsageError(name + " must be positive, got " + text);
    return n;
}

std::string format_terms(Factorization const & f, char sep, char pow_sep)
{
    std::ostringstream o;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i)
            o << sep;
        o << f.terms[i].prime << pow_sep << f.terms[i].exponent;
    }
    return o.str();
}

std::string human_factorization(Factorization const & f)
{
    std::ostringstream o;
    o << (f.sign > 0 ? "+" : "-");
    if (f.terms.empty())
        o << "1";
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        o << (i ? " * " : "") << "zeta_" << f.terms[i].prime << "^" << f.terms[i].exponent;
    return o.str();
}

std::string human_element(GroupElement const & z)
{
    std::ostringstream o;
    o << "(" << z.a() << (z.b() < 0 ? " - " : " + ") << abs(z.b()) << "*sqrt(-" << z.D()
      << "))/" << z.c();
    return o.str();
}

/* Evaluates f over [0, n) with up to `threads` workers; results keep index
 * order. */
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned threads,
                            std::function<T(std::size_t)> const & f)
{
    std::vector<T> out(n);
    unsigned const workers = std::max(1u, std::min<unsigned>(threads, n));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w)
        jobs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                  [&, w] {
                                      for (std::size_t i = w; i < n; i += workers)
                                          out[i] = f(i);
                                  }));
    for (auto & j : jobs)
        j.get();
    return out;
}

int cmd_check(Integer const & D, Options const & opt, std::ostream & out)
{
    auto const app = check_applicability(D);
    auto const group = enumerate_class_group(Integer(-4 * D));
    switch (opt.format) {
    case Format::json: {
        json j = to_json(group);
        j["D"] = integer_to_json(D);
        j["applicable"] = app.applicable();
        j["residue_ok"] = app.residue_ok;
        j["square_free"] = app.square_free;
        j["reason"] = app.reason();
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "D,K,class_number,free_z2,applicable\n"
            << D << ',' << group.K << ',' << group.class_number << ','
            << (group.is_free_z2 ? "true" : "false") << ','
            << (app.applicable() ? "true" : "false") << '\n';
        break;
    case Format::human:
        out << "D             " << D << '\n'
            << "discriminant  " << group.K << '\n'
            << "class number  " << group.class_number << '\n'
            << "free Z2       " << (group.is_free_z2 ? "yes" : "no") << '\n'
            << "applicable    "
            << (app.applicable() ? std::string("yes") : "no (" + app.reason() + ")") << '\n'
            << '\n'
            << std::left << std::setw(24) << "reduced form" << "order\n";
        for (std::size_t i = 0; i < group.class_number; ++i) {
            std::ostringstream f;
            f << group.reduced_forms[i];
            out << std::setw(24) << f.str() << group.orders[i] << '\n';
        }
        out << std::right;
        break;
    }
    return ok;
}

int cmd_zeta(Integer const & D, Integer const & p, Options const & opt, std::ostream & out)
{
    auto const z = zeta(D, p);
    switch (opt.format) {
    case Format::json:
        out << json { { "D", integer_to_json(D) },
                      { "p", integer_to_json(p) },
                      { "x0", integer_to_json(z.x0) },
                      { "y0", integer_to_json(z.y0) } }
                   .dump()
            << '\n';
        break;
    case Format::csv:
        out << "D,p,x0,y0\n" << D << ',' << p << ',' << z.x0 << ',' << z.y0 << '\n';
        break;
    case Format::human:
        out << "zeta_" << p << " = " << human_element(z.element()) << "   (" << z.x0
            << "^2 + " << D << "*" << z.y0 << "^2 = " << p << "^2)\n";
        break;
    }
    return ok;
}

void human_solution_rows(SolutionSet const & s, std::ostream & out)
{
    for (auto const & e : s.solutions)
        out << std::setw(12) << e.solution.a << std::setw(12) << e.solution.b
            << std::setw(12) << e.solution.c << "  " << human_factorization(e.factorization)
            << '\n';
}

int cmd_solve(Integer const & D, Integer const & c, Options const & opt, std::ostream & out)
{
    auto const s = solve(D, c);
    switch (opt.format) {
    case Format::json:
        out << to_json(s).dump() << '\n';
        break;
    case Format::csv:
        out << "D,c,a,b,sign,terms\n";
        for (auto const & e : s.solutions)
            out << D << ',' << c << ',' << e.solution.a << ',' << e.solution.b << ','
                << e.factorization.sign << ',' << format_terms(e.factorization, ';', ':')
                << '\n';
        break;
    case Format::human:
        out << "x^2 + " << D << " y^2 = " << c << "^2: " << s.count
            << " normalized solution" << (s.count == 1 ? "" : "s") << '\n';
        if (!s.solutions.empty()) {
            out << std::setw(12) << "a" << std::setw(12) << "b" << std::setw(12) << "c"
                << "  factorization\n";
            human_solution_rows(s, out);
        }
        break;
    }
    return ok;
}

int cmd_count(Integer const & D, Integer const & c, Options const & opt, std::ostream & out)
{
    Integer const n = count_solutions(D, c);
    switch (opt.format) {
    case Format::json:
        out << json { { "D", integer_to_json(D) },
                      { "c", integer_to_json(c) },
                      { "count", integer_to_json(n) } }
                   .dump()
            << '\n';
        break;
    case Format::csv:
        out << "D,c,count\n" << D << ',' << c << ',' << n << '\n';
        break;
    case Format::human:
        out << n << '\n';
        break;
    }
    return ok;
}

int cmd_factor(GroupElement const & z, Options const & opt, std::ostream & out)
{
    auto const f = factor_element(z);
    switch (opt.format) {
    case Format::json: {
        json j = to_json(z);
        j["factorization"] = to_json(f);
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "D,a,b,c,sign,terms\n"
            << z.D() << ',' << z.a() << ',' << z.b() << ',' << z.c() << ',' << f.sign << ','
            << format_terms(f, ';', ':') << '\n';
        break;
    case Format::human:
        out << human_element(z) << " = " << human_factorization(f) << '\n';
        break;
    }
    return ok;
}

int cmd_mul(GroupElement const & z1, GroupElement const & z2, Options const & opt,
            std::ostream & out)
{
    auto const z = multiply(z1, z2);
    switch (opt.format) {
    case Format::json:
        out << to_json(z).dump() << '\n';
        break;
    case Format::csv:
        out << "D,a,b,c\n" << z.D() << ',' << z.a() << ',' << z.b() << ',' << z.c() << '\n';
        break;
    case Format::human:
        out << human_element(z1) << " * " << human_element(z2) << " = " << human_element(z)
            << '\n'
            << "triple up to sign and conjugation: (" << abs(z.a()) << "," << abs(z.b())
            << "," << z.c() << ")\n";
        break;
    }
    return ok;
}

std::vector<Integer> odd_range(Integer const & c_max)
{
    std::vector<Integer> cs;
    for (Integer c = 3; c <= c_max; c += 2)
        cs.push_back(c);
    return cs;
}

int cmd_table(Integer const & D, Integer const & c_max, Options const & opt,
              std::ostream & out)
{
    check_applicability(D).require();
    auto const cs = odd_range(c_max);
    auto const rows = parallel_map<SolutionSet>(
        cs.size(), opt.threads, [&](std::size_t i) { return solve(D, cs[i]); });
    switch (opt.format) {
    case Format::json: {
        json j_rows = json::array();
        for (auto const & r : rows)
            j_rows.push_back(to_json(r));
        out << json { { "D", integer_to_json(D) },
                      { "c_max", integer_to_json(c_max) },
                      { "rows", j_rows } }
                   .dump()
            << '\n';
        break;
    }
    case Format::csv:
        out << "D,c,count,solutions\n";
        for (auto const & r : rows) {
            out << D << ',' << r.c << ',' << r.count << ',';
            for (std::size_t i = 0; i < r.solutions.size(); ++i)
                out << (i ? ";" : "") << r.solutions[i].solution.a << ':'
                    << r.solutions[i].solution.b;
            out << '\n';
        }
        break;
    case Format::human:
        out << std::setw(10) << "c" << std::setw(8) << "count" << "  solutions (a,b)\n";
        for (auto const & r : rows) {
            out << std::setw(10) << r.c << std::setw(8) << r.count << "  ";
            for (std::size_t i = 0; i < r.solutions.size(); ++i)
                out << (i ? " " : "") << "(" << r.solutions[i].solution.a << ","
                    << r.solutions[i].solution.b << ")";
            out << '\n';
        }
        break;
    }
    return ok;
}

int cmd_verify(Integer const & D, Integer const & c_max, Options const & opt,
               std::ostream & out)
{
    auto const s = verify_sweep(D, c_max, opt.threads);
    switch (opt.format) {
    case Format::json: {
        json rows = json::array();
        for (auto const & r : s.rows)
            rows.push_back({ { "c", integer_to_json(r.c) },
                             { "k", r.k },
                             { "theory_count", integer_to_json(r.theory_count) },
                             { "oracle_count", r.oracle_count },
                             { "agree", r.agree } });
        json dis = json::array();
        for (auto const & c : s.disagreements)
            dis.push_back(integer_to_json(c));
        out << json { { "D", integer_to_json(D) },
                      { "c_max", integer_to_json(c_max) },
                      { "agreements", s.agreements },
                      { "disagreements", dis },
                      { "rows", rows } }
                   .dump()
            << '\n';
        break;
    }
    case Format::csv:
        out << sweep_to_csv(s);
        break;
    case Format::human:
        out << "D = " << D << ", odd c in [3, " << c_max << "]: " << s.agreements << " of "
            << s.rows.size() << " agree with the brute-force oracle\n";
        for (auto const & c : s.disagreements)
            out << "  disagreement at c = " << c << '\n';
        break;
    }
    return s.disagreements.empty() ? ok : oracle_disagreement;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app { "Normalized solutions of x^2 + D y^2 = z^2", "pellgroup" };
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format> {
                { "human", Format::human }, { "json", Format::json }, { "csv", Format::csv } },
            CLI::ignore_case));
    app.add_option("--threads", opt.threads, "Worker threads for table and verify sweeps")
        ->check(CLI::PositiveNumber);

    std::string D, x, y, z, x2, y2, z2;
    std::function<int()> action;

    auto with_D = [&](CLI::App * sub) {
        sub->add_option("D", D, "Square-free positive integer")->required();
        return sub;
    };

    auto * check = with_D(app.add_subcommand("check", "Class group of -4D and applicability"));
    check->callback([&] { action = [&] { return cmd_check(positive_arg("D", D), opt, out); }; });

    auto * zeta_cmd = with_D(app.add_subcommand("zeta", "Elementary solution for a prime p"));
    zeta_cmd->add_option("p", x, "Odd prime with (-D/p) = 1")->required();
    zeta_cmd->callback([&] {
        action = [&] { return cmd_zeta(positive_arg("D", D), positive_arg("p", x), opt, out); };
    });

    auto * solve_cmd = with_D(app.add_subcommand("solve", "Enumerate normalized solutions"));
    solve_cmd->add_option("c", x, "Hypotenuse")->required();
    solve_cmd->callback([&] {
        action = [&] { return cmd_solve(positive_arg("D", D), positive_arg("c", x), opt, out); };
    });

    auto * count_cmd = with_D(app.add_subcommand("count", "Count normalized solutions"));
    count_cmd->add_option("c", x, "Hypotenuse")->required();
    count_cmd->callback([&] {
        action = [&] { return cmd_count(positive_arg("D", D), positive_arg("c", x), opt, out); };
    });

    auto * factor_cmd = with_D(app.add_subcommand("factor", "Factor (a + b sqrt(-D))/c"));
    factor_cmd->add_option("a", x)->required();
    factor_cmd->add_option("b", y)->required();
    factor_cmd->add_option("c", z)->required();
    factor_cmd->callback([&] {
        action = [&] {
            return cmd_factor(make_element(positive_arg("D", D), integer_arg("a", x),
                                           integer_arg("b", y), integer_arg("c", z)),
                              opt, out);
        };
    });

    auto * mul_cmd = with_D(app.add_subcommand("mul", "Multiply two points of the ellipse"));
    mul_cmd->add_option("a1", x)->required();
    mul_cmd->add_option("b1", y)->required();
    mul_cmd->add_option("c1", z)->required();
    mul_cmd->add_option("a2", x2)->required();
    mul_cmd->add_option("b2", y2)->required();
    mul_cmd->add_option("c2", z2)->required();
    mul_cmd->callback([&] {
        action = [&] {
            Integer const d = positive_arg("D", D);
            return cmd_mul(make_element(d, integer_arg("a1", x), integer_arg("b1", y),
                                        integer_arg("c1", z)),
                           make_element(d, integer_arg("a2", x2), integer_arg("b2", y2),
                                        integer_arg("c2", z2)),
                           opt, out);
        };
    });

    for (auto [name, help, fn] :
         { std::tuple { "table", "Solutions for every odd c up to --cmax", &cmd_table },
           std::tuple { "verify", "Cross-check against the brute-force oracle up to --cmax",
                        &cmd_verify } }) {
        auto * sub = with_D(app.add_subcommand(name, help));
        sub->add_option("--cmax", opt.c_max, "Largest hypotenuse")->required();
        sub->callback([&, fn = fn] {
            action = [&, fn] {
                return fn(positive_arg("D", D), integer_arg("--cmax", opt.c_max), opt, out);
            };
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        return action();
    } catch (UsageError const & e) {
        err << "error: " << e.what() << '\n' << app.help();
        return usage_error;
    } catch (DomainError const & e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (std::exception const & e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

} // namespace pellgroup::cli
