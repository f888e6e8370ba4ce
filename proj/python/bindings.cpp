#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pellgroup/arith.hpp"
#include "pellgroup/cli.hpp"
#include "pellgroup/errors.hpp"
#include "pellgroup/gdgroup.hpp"
#include "pellgroup/oracle.hpp"
#include "pellgroup/quadform.hpp"
#include "pellgroup/solutions.hpp"

namespace py = pybind11;
using namespace pellgroup;

/* Python int <-> mpz_class through the decimal representation. */
namespace pybind11::detail {

template <>
struct type_caster<mpz_class>
{
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        std::string const text = py::str(src);
        return value.set_str(text, 10) == 0;
    }

    static handle cast(mpz_class const & n, return_value_policy, handle)
    {
        return PyLong_FromString(n.get_str(10).c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

template <typename T>
std::string repr(T const & x)
{
    std::ostringstream o;
    o << x;
    return o.str();
}

} // namespace

PYBIND11_MODULE(_pellgroup, m)
{
    m.doc() = "Normalized solutions of x^2 + D y^2 = z^2";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", domain.ptr());
    py::register_exception<NoSquareRoot>(m, "NoSquareRoot", domain.ptr());
    py::register_exception<NotOnEllipse>(m, "NotOnEllipse", domain.ptr());
    py::register_exception<DegenerateOrbit>(m, "DegenerateOrbit", domain.ptr());
    py::register_exception<NoNormalizedForm>(m, "NoNormalizedForm", domain.ptr());
    auto not_applicable = py::register_exception<NotApplicable>(m, "NotApplicable", domain.ptr());
    py::register_exception<UnsupportedResidueClass>(m, "UnsupportedResidueClass",
                                                    not_applicable.ptr());
    py::register_exception<UnsupportedClassGroup>(m, "UnsupportedClassGroup",
                                                  not_applicable.ptr());
    py::register_exception<NotRepresentable>(m, "NotRepresentable", domain.ptr());
    py::register_exception<NotFactorable>(m, "NotFactorable", domain.ptr());

    // arith
    m.def("is_prime", &is_prime);
    m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
    m.def("sqrt_mod_p", &sqrt_mod_p, py::arg("a"), py::arg("p"));
    m.def("hensel_lift", &hensel_lift, py::arg("D"), py::arg("p"), py::arg("target_exponent"));
    m.def(
        "factorize",
        [](Integer const & n) {
            std::vector<std::pair<Integer, unsigned long>> out;
            for (auto const & pp : factorize(n).factors)
                out.emplace_back(pp.prime, pp.exponent);
            return out;
        },
        py::arg("n"), "List of (prime, exponent), primes ascending.");
    m.def("is_square_free", &is_square_free, py::arg("n"));

    // quadform
    py::class_<QuadForm>(m, "QuadForm")
        .def(py::init([](Integer a, Integer b, Integer c) { return make_form(a, b, c); }),
             py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("a", &QuadForm::a)
        .def_readonly("b", &QuadForm::b)
        .def_readonly("c", &QuadForm::c)
        .def_property_readonly("discriminant", &QuadForm::discriminant)
        .def(py::self == py::self)
        .def("__repr__", [](QuadForm const & f) { return "QuadForm" + repr(f); });
    m.def("reduce", &reduce, py::arg("f"));
    m.def("inverse", &inverse, py::arg("f"));
    m.def("compose", &compose, py::arg("f"), py::arg("g"));
    m.def("element_order", &element_order, py::arg("f"));
    py::class_<ClassGroupDescriptor>(m, "ClassGroupDescriptor")
        .def_readonly("K", &ClassGroupDescriptor::K)
        .def_readonly("reduced_forms", &ClassGroupDescriptor::reduced_forms)
        .def_readonly("class_number", &ClassGroupDescriptor::class_number)
        .def_readonly("orders", &ClassGroupDescriptor::orders)
        .def_readonly("is_free_z2", &ClassGroupDescriptor::is_free_z2);
    m.def("enumerate_class_group", &enumerate_class_group, py::arg("K"));

    // gdgroup
    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init([](Integer D, Integer a, Integer b, Integer c) {
                 return make_element(D, a, b, c);
             }),
             py::arg("D"), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_property_readonly("D", &GroupElement::D)
        .def_property_readonly("a", &GroupElement::a)
        .def_property_readonly("b", &GroupElement::b)
        .def_property_readonly("c", &GroupElement::c)
        .def("__mul__", [](GroupElement const & x, GroupElement const & y) { return multiply(x, y); })
        .def("__pow__", [](GroupElement const & x, long n) { return pow(x, n); })
        .def(py::self == py::self)
        .def("__repr__", [](GroupElement const & z) { return "GroupElement" + repr(z); });
    py::class_<NormalizedSolution>(m, "NormalizedSolution")
        .def(py::init([](Integer D, Integer a, Integer b, Integer c) {
                 return NormalizedSolution { D, a, b, c };
             }),
             py::arg("D"), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("D", &NormalizedSolution::D)
        .def_readonly("a", &NormalizedSolution::a)
        .def_readonly("b", &NormalizedSolution::b)
        .def_readonly("c", &NormalizedSolution::c)
        .def(py::self == py::self)
        .def("as_tuple", [](NormalizedSolution const & s) { return py::make_tuple(s.a, s.b, s.c); })
        .def("__repr__", [](NormalizedSolution const & s) { return "NormalizedSolution" + repr(s); });
    m.def("identity_element", &identity_element, py::arg("D"));
    m.def("multiply", &multiply);
    m.def("conjugate", &conjugate);
    m.def("pow", &pellgroup::pow, py::arg("z"), py::arg("n"));
    m.def("gamma_orbit", &gamma_orbit);
    m.def("to_normalized", &to_normalized);
    m.def("to_element", &to_element);

    // solutions
    py::class_<Applicability>(m, "Applicability")
        .def_readonly("D", &Applicability::D)
        .def_readonly("residue_ok", &Applicability::residue_ok)
        .def_readonly("square_free", &Applicability::square_free)
        .def_readonly("free_z2", &Applicability::free_z2)
        .def_readonly("class_number", &Applicability::class_number)
        .def_property_readonly("applicable", &Applicability::applicable)
        .def_property_readonly("reason", &Applicability::reason);
    m.def("check_applicability", &check_applicability, py::arg("D"));
    m.def("solution_exists", &solution_exists, py::arg("D"), py::arg("c"));
    py::class_<ZetaFactor>(m, "ZetaFactor")
        .def_readonly("D", &ZetaFactor::D)
        .def_readonly("p", &ZetaFactor::p)
        .def_readonly("x0", &ZetaFactor::x0)
        .def_readonly("y0", &ZetaFactor::y0)
        .def("element", &ZetaFactor::element);
    m.def("zeta", &zeta, py::arg("D"), py::arg("p"));
    m.def("divides", &divides, py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"),
          py::arg("D"), "Quotient (q1, q2) if x + y sqrt(-D) divides a + b sqrt(-D), else None.");
    py::class_<Factorization>(m, "Factorization")
        .def(py::init([](int sign, std::vector<std::pair<Integer, long>> const & terms) {
                 Factorization f { sign, {} };
                 for (auto const & [p, e] : terms)
                     f.terms.push_back({ p, e });
                 return f;
             }),
             py::arg("sign"), py::arg("terms"))
        .def_readonly("sign", &Factorization::sign)
        .def_property_readonly("terms",
                               [](Factorization const & f) {
                                   std::vector<std::pair<Integer, long>> out;
                                   for (auto const & t : f.terms)
                                       out.emplace_back(t.prime, t.exponent);
                                   return out;
                               })
        .def(py::self == py::self);
    m.def("factor_element", &factor_element, py::arg("z"));
    m.def("recompose", &recompose, py::arg("D"), py::arg("factorization"));
    m.def("enumerate_solutions", &enumerate_solutions, py::arg("D"), py::arg("c"));
    m.def("count_solutions", &count_solutions, py::arg("D"), py::arg("c"));
    m.def("multiply_solutions", &multiply_solutions, py::arg("s1"), py::arg("s2"));

    // oracle
    m.def("brute_force_solutions", &brute_force_solutions, py::arg("D"), py::arg("c"));
    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("D", &OracleReport::D)
        .def_readonly("c", &OracleReport::c)
        .def_readonly("solutions", &OracleReport::solutions)
        .def_property_readonly("agreement",
                               [](OracleReport const & r) { return to_string(r.agreement); })
        .def_readonly("theory_count", &OracleReport::theory_count);
    m.def("cross_check", &cross_check, py::arg("D"), py::arg("c"));
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("c", &SweepRow::c)
        .def_readonly("k", &SweepRow::k)
        .def_readonly("theory_count", &SweepRow::theory_count)
        .def_readonly("oracle_count", &SweepRow::oracle_count)
        .def_readonly("agree", &SweepRow::agree);
    py::class_<SweepSummary>(m, "SweepSummary")
        .def_readonly("D", &SweepSummary::D)
        .def_readonly("c_max", &SweepSummary::c_max)
        .def_readonly("rows", &SweepSummary::rows)
        .def_readonly("agreements", &SweepSummary::agreements)
        .def_readonly("disagreements", &SweepSummary::disagreements);
    m.def("verify_sweep", &verify_sweep, py::arg("D"), py::arg("c_max"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "run_cli",
        [](std::vector<std::string> const & args) {
            std::ostringstream out, err;
            int const code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
