#include "pellgroup/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "pellgroup/arith.hpp"
#include "pellgroup/errors.hpp"
#include "pellgroup/solutions.hpp"

namespace pellgroup {

std::vector<NormalizedSolution> brute_force_solutions(Integer const & D, Integer const & c)
{
    if (D < 1 || c < 1)
        throw InvalidArgument("brute force needs D >= 1 and c >= 1");
    std::vector<NormalizedSolution> out;
    Integer const c2 = c * c;
    for (Integer b = 1; D * b * b < c2; ++b) {
        Integer const rest = c2 - D * b * b;
        Integer a;
        mpz_sqrt(a.get_mpz_t(), rest.get_mpz_t());
        if (a * a != rest)
            continue;
        if (gcd(gcd(a, b), c) != 1)
            continue;
        out.push_back({ D, a, b, c });
    }
    return out;
}

std::string to_string(Agreement a)
{
    switch (a) {
    case Agreement::agree:
        return "agree";
    case Agreement::disagree:
        return "disagree";
    case Agreement::theory_not_applicable:
        return "theory-not-applicable";
    }
    return "unknown";
}

OracleReport cross_check(Integer const & D, Integer const & c)
{
    OracleReport report { D, c, brute_force_solutions(D, c),
                          Agreement::theory_not_applicable, std::nullopt };
    if (!check_applicability(D).applicable())
        return report;
    auto const theory = enumerate_solutions(D, c);
    Integer const count = count_solutions(D, c);
    report.theory_count = count;
    bool const same = theory == report.solutions && count == theory.size();
    report.agreement = same ? Agreement::agree : Agreement::disagree;
    return report;
}

SweepSummary verify_sweep(Integer const & D, Integer const & c_max, unsigned threads)
{
    check_applicability(D).require();
    SweepSummary summary { D, c_max, {}, 0, {} };
    std::vector<Integer> cs;
    for (Integer c = 3; c <= c_max; c += 2)
        cs.push_back(c);
    summary.rows.resize(cs.size());

    auto run_one = [&](std::size_t i) {
        auto const report = cross_check(D, cs[i]);
        auto & row = summary.rows[i];
        row.c = cs[i];
        row.k = factorize(cs[i]).distinct_primes();
        row.theory_count = report.theory_count.value_or(Integer(0));
        row.oracle_count = report.solutions.size();
        row.agree = report.agreement == Agreement::agree;
    };

    unsigned const workers = std::max(1u, std::min<unsigned>(threads, cs.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cs.size(); ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> next { 0 };
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < cs.size();)
                        run_one(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = cs.size();
                }
            });
        }
        for (auto & t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    for (auto const & row : summary.rows) {
        if (row.agree)
            ++summary.agreements;
        else
            summary.disagreements.push_back(row.c);
    }
    return summary;
}

} // namespace pellgroup
