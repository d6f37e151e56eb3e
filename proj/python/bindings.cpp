#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "sytcount/methods.hpp"
#include "sytcount/montecarlo.hpp"

namespace py = pybind11;
using namespace sytcount;

namespace {

py::object to_py(const BigInt& v) { return py::int_(py::str(to_string(v))); }

py::object to_fraction(const BigRat& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(to_string(v)));
}

Method method_or_throw(const std::string& name) {
    if (auto m = parse_method(name)) return *m;
    throw py::value_error("unknown method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_sytcount, m) {
    m.doc() = "Exact counting of standard Young tableaux and related linear extensions";

    static py::exception<ShapeError> shape_error(m, "ShapeError", PyExc_ValueError);
    static py::exception<MethodMismatch> method_mismatch(m, "MethodMismatch", PyExc_ValueError);
    static py::exception<MemoLimitExceeded> memo_limit(m, "MemoLimitExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ShapeError& e) {
            shape_error(e.what());
        } catch (const MethodMismatch& e) {
            method_mismatch(e.what());
        } catch (const MemoLimitExceeded& e) {
            memo_limit(e.what());
        }
    });

    m.def(
        "canonical", [](const std::string& shape) { return canonical_string(parse_shape(shape)); }, py::arg("shape"),
        "Canonical form of a shape spec.");

    m.def(
        "count",
        [](const std::string& shape, const std::string& method, std::size_t memo_limit) {
            const ShapeSpec s = parse_shape(shape);
            const Method chosen = method == "auto" ? auto_method(s) : method_or_throw(method);
            BigInt v;
            {
                py::gil_scoped_release release;
                v = count_with(s, chosen, memo_limit);
            }
            return to_py(v);
        },
        py::arg("shape"), py::arg("method") = "auto", py::arg("memo_limit") = kDefaultMemoLimit,
        "Number of standard fillings of the shape by the given method.");

    m.def(
        "methods",
        [](const std::string& shape) {
            std::vector<std::string> names;
            for (Method mm : applicable_methods(parse_shape(shape))) names.emplace_back(method_name(mm));
            return names;
        },
        py::arg("shape"), "Names of the counting methods that apply to the shape.");

    m.def(
        "verify",
        [](const std::string& shape, std::size_t memo_limit) {
            const ShapeSpec s = parse_shape(shape);
            py::dict out;
            for (Method mm : applicable_methods(s)) out[py::str(std::string(method_name(mm)))] = to_py(count_with(s, mm, memo_limit));
            return out;
        },
        py::arg("shape"), py::arg("memo_limit") = kDefaultMemoLimit, "Count with every applicable method.");

    m.def(
        "monte_carlo",
        [](const std::string& shape, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
            const ShapeSpec s = parse_shape(shape);
            McReport r;
            {
                py::gil_scoped_release release;
                r = estimate(s, trials, seed, threads);
            }
            py::dict out;
            out["trials"] = r.trials;
            out["hits"] = r.hits;
            out["p_hat"] = to_fraction(r.p_hat);
            out["p_exact"] = to_fraction(r.p_exact);
            out["sigma"] = r.sigma;
            out["z_score"] = r.z_score;
            return out;
        },
        py::arg("shape"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1,
        "Monte Carlo estimate of the order-statistics event probability.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
