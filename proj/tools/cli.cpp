#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "sytcount/detformulas.hpp"
#include "sytcount/methods.hpp"
#include "sytcount/montecarlo.hpp"
#include "sytcount/polyint.hpp"
#include "sytcount/products.hpp"

namespace sytcount::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluates `body`, mapping library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const MethodMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kMethodMismatch;
    } catch (const MemoLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kMemoLimit;
    } catch (const IntegralityError& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    }
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- count

struct CountOptions {
    std::string shape;
    std::string method = "auto";
    bool json = false;
    std::size_t memo_limit = kDefaultMemoLimit;
};

int cmd_count(const CountOptions& opt, std::ostream& out) {
    const ShapeSpec shape = parse_shape(opt.shape);
    Method method;
    if (opt.method == "auto") {
        method = auto_method(shape);
    } else if (auto m = parse_method(opt.method)) {
        method = *m;
    } else {
        throw UsageError("unknown method '" + opt.method + "'");
    }
    const auto start = std::chrono::steady_clock::now();
    const BigInt count = count_with(shape, method, opt.memo_limit);
    const long long ms = elapsed_ms(start);

    const std::string canon = canonical_string(shape);
    if (opt.json) {
        ordered_json j;
        j["shape"] = canon;
        j["method"] = std::string(method_name(method));
        j["count"] = to_string(count);
        j["elapsedMs"] = ms;
        out << j.dump() << "\n";
    } else {
        out << "shape   " << canon << "\n"
            << "method  " << method_name(method) << "\n"
            << "count   " << to_string(count) << "\n"
            << "time    " << ms << " ms\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string shape;
    std::string family;
    std::string range;
    std::uint64_t seed = 1;
    std::uint64_t mc_trials = 0;
    std::string corrupt;
    std::size_t memo_limit = kDefaultMemoLimit;
};

// "m=0..3,k=1..4" -> {m: [0..3], k: [1..4]}
std::map<std::string, std::pair<long, long>> parse_range(const std::string& text) {
    std::map<std::string, std::pair<long, long>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("range item '" + item + "' must look like name=lo..hi");
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        try {
            auto dots = value.find("..");
            long lo = std::stol(value.substr(0, dots));
            long hi = dots == std::string::npos ? lo : std::stol(value.substr(dots + 2));
            if (hi < lo) throw UsageError("empty range for " + name);
            out[name] = {lo, hi};
        } catch (const std::logic_error&) {
            throw UsageError("bad range value '" + value + "'");
        }
    }
    return out;
}

struct FamilyDef {
    std::vector<std::string> params;
    // Returns nullopt for parameter combinations outside the family's domain.
    std::function<std::optional<ShapeSpec>(const std::vector<long>&)> make;
};

const std::map<std::string, FamilyDef>& families() {
    static const std::map<std::string, FamilyDef> defs = {
        {"staircase",
         {{"m", "k"},
          [](const std::vector<long>& v) -> std::optional<ShapeSpec> {
              if (v[0] < 0 || v[1] < 1) return std::nullopt;
              return staircase_shape(v[0], v[1]);
          }}},
        {"psyt",
         {{"m", "r", "k"},
          [](const std::vector<long>& v) -> std::optional<ShapeSpec> {
              if (v[0] < 0 || v[1] < 0 || v[2] < 1) return std::nullopt;
              return psyt_family_shape(v[0], v[1], v[2]);
          }}},
        {"necorner",
         {{"m", "k"},
          [](const std::vector<long>& v) -> std::optional<ShapeSpec> {
              if (v[0] < 1 || v[1] < 0 || v[1] > v[0]) return std::nullopt;
              return ne_corner_shape(v[0], v[1]);
          }}},
        {"secondrow",
         {{"m", "k"},
          [](const std::vector<long>& v) -> std::optional<ShapeSpec> {
              if (v[0] < 2 || v[1] < 0) return std::nullopt;
              return second_row_shape(v[0], v[1]);
          }}},
        {"hole",
         {{"m"},
          [](const std::vector<long>& v) -> std::optional<ShapeSpec> {
              if (v[0] < 0) return std::nullopt;
              return middle_hole_shape(v[0]);
          }}},
    };
    return defs;
}

std::vector<ShapeSpec> family_shapes(const std::string& family, const std::string& range, std::ostream& err) {
    const auto ranges = parse_range(range);
    std::vector<ShapeSpec> shapes;
    if (family == "partitions") {
        auto it = ranges.find("n");
        if (it == ranges.end()) throw UsageError("family partitions needs n in --range");
        for (long n = it->second.first; n <= it->second.second; ++n) {
            if (n < 1) continue;
            for (auto& p : partitions_of(static_cast<int>(n))) shapes.emplace_back(std::move(p));
        }
        return shapes;
    }
    auto def = families().find(family);
    if (def == families().end()) throw UsageError("unknown family '" + family + "'");
    const auto& params = def->second.params;
    std::vector<std::pair<long, long>> bounds;
    for (const auto& name : params) {
        auto it = ranges.find(name);
        if (it == ranges.end()) throw UsageError("family " + family + " needs " + name + " in --range");
        bounds.push_back(it->second);
    }
    std::vector<long> v(params.size());
    std::size_t skipped = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == params.size()) {
            if (auto s = def->second.make(v))
                shapes.push_back(std::move(*s));
            else
                ++skipped;
            return;
        }
        for (v[idx] = bounds[idx].first; v[idx] <= bounds[idx].second; ++v[idx]) self(self, idx + 1);
    };
    rec(rec, 0);
    if (skipped) err << "note: skipped " << skipped << " parameter combinations outside the " << family << " domain\n";
    return shapes;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<ShapeSpec> shapes;
    if (!opt.family.empty()) {
        if (!opt.shape.empty()) throw UsageError("give either a shape or --family, not both");
        shapes = family_shapes(opt.family, opt.range, err);
    } else if (!opt.shape.empty()) {
        shapes.push_back(parse_shape(opt.shape));
    } else {
        throw UsageError("verify needs a shape or --family");
    }
    std::optional<Method> corrupt;
    if (!opt.corrupt.empty()) {
        corrupt = parse_method(opt.corrupt);
        if (!corrupt) throw UsageError("unknown method '" + opt.corrupt + "'");
    }

    std::size_t mismatches = 0;
    for (const ShapeSpec& shape : shapes) {
        const std::string canon = canonical_string(shape);
        std::vector<std::pair<Method, BigInt>> results;
        for (Method m : applicable_methods(shape)) {
            BigInt v = count_with(shape, m, opt.memo_limit);
            if (corrupt && *corrupt == m) v += 1;
            results.emplace_back(m, v);
        }
        bool agree = true;
        for (std::size_t i = 1; i < results.size(); ++i) {
            if (results[i].second != results[0].second) {
                agree = false;
                err << "MISMATCH " << canon << ": " << method_name(results[0].first) << "="
                    << to_string(results[0].second) << " vs " << method_name(results[i].first) << "="
                    << to_string(results[i].second) << "\n";
            }
        }
        out << canon;
        for (const auto& [m, v] : results) out << "  " << method_name(m) << "=" << to_string(v);
        if (opt.mc_trials > 0) {
            const McReport rep = estimate(shape, opt.mc_trials, opt.seed);
            const bool pass = std::abs(rep.z_score) < 4.0;
            out << "  mc_z=" << std::fixed << std::setprecision(3) << rep.z_score << std::defaultfloat;
            if (!pass) {
                agree = false;
                err << "MISMATCH " << canon << ": Monte Carlo |z| = " << std::abs(rep.z_score) << " >= 4\n";
            }
        }
        out << (agree ? "  OK" : "  MISMATCH") << "\n";
        if (!agree) ++mismatches;
    }
    out << "verified " << shapes.size() << " shape(s), " << mismatches << " mismatch(es)\n";
    return mismatches == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------- examples

struct KnownValue {
    std::string label;
    std::string shape;
    std::vector<Method> methods;
    std::string expected;
};

int cmd_examples(std::ostream& out) {
    const std::vector<KnownValue> known = {
        {"f^{(4,2,1)}", "4,2,1", {Method::hook, Method::aitken, Method::volume, Method::integrate, Method::oracle, Method::brute}, "35"},
        {"f^{(5,4,2)/(3,1)}", "5,4,2/3,1", {Method::aitken, Method::volume, Method::oracle, Method::brute}, "169"},
        {"g^{(4,2,1)}", "shifted:4,2,1", {Method::oracle, Method::brute}, "7"},
        {"f_{(2,3,4)}", "rows:2,3,4", {Method::product, Method::oracle, Method::brute}, "12"},
        {"f_{(1,2,3)<(2,3,4)}", "psyt:1,2,3<2,3,4", {Method::product, Method::oracle, Method::brute}, "72"},
        {"f^{(6,5,4,4,1)/(3,2,2)}", "6,5,4,4,1/3,2,2", {Method::aitken, Method::volume, Method::oracle}, "346632"},
        {"f_{(3,3,3) hole (2,2)}", "rows:3,3,3 hole:2,2", {Method::product, Method::oracle, Method::brute}, "18"},
    };
    bool all_ok = true;
    for (const auto& kv : known) {
        const ShapeSpec shape = parse_shape(kv.shape);
        std::string value;
        bool ok = true;
        std::string used;
        for (Method m : kv.methods) {
            const std::string v = to_string(count_with(shape, m));
            if (value.empty()) value = v;
            ok = ok && v == kv.expected && v == value;
            used += (used.empty() ? "" : ", ") + std::string(method_name(m));
        }
        out << kv.label << " = " << value << (ok ? " OK" : " MISMATCH (expected " + kv.expected + ")") << "  [" << used
            << "]\n";
        all_ok = all_ok && ok;
    }
    // Stirling numbers from the order-statistics integrals.
    const std::vector<std::tuple<long, long, long, long>> stirling = {{3, 2, 2, 3}, {4, 2, 3, 7}, {5, 3, 4, 25}, {8, 4, 4, 1701}};
    for (const auto& [n, k, m, expected] : stirling) {
        const BigRat e = stirling2_expectation(n, k, m);
        const BigRat c = stirling2_chain(n, k, m);
        const BigRat s = stirling2_simplex(n, k, m);
        const bool ok = e == expected && c == expected && s == expected && stirling2(n, k) == expected;
        out << "S(" << n << "," << k << ") = " << to_string(e) << (ok ? " OK" : " MISMATCH (expected " + std::to_string(expected) + ")")
            << "  [expectation, chain, simplex; m=" << m << "]\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- mc

struct McOptions {
    std::string shape;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool json = false;
};

int cmd_mc(const McOptions& opt, std::ostream& out) {
    if (opt.trials == 0) throw UsageError("--trials must be positive");
    const ShapeSpec shape = parse_shape(opt.shape);
    const McReport rep = estimate(shape, opt.trials, opt.seed, opt.threads);
    const bool pass = std::abs(rep.z_score) < 4.0;
    if (opt.json) {
        ordered_json j;
        j["shape"] = canonical_string(shape);
        j["trials"] = rep.trials;
        j["hits"] = rep.hits;
        j["pHat"] = to_string(rep.p_hat);
        j["pExact"] = to_string(rep.p_exact);
        j["sigma"] = rep.sigma;
        j["zScore"] = rep.z_score;
        j["pass"] = pass;
        out << j.dump() << "\n";
    } else {
        out << "shape    " << canonical_string(shape) << "\n"
            << "trials   " << rep.trials << "\n"
            << "hits     " << rep.hits << "\n"
            << "pHat     " << to_string(rep.p_hat) << " (" << rep.p_hat.get_d() << ")\n"
            << "pExact   " << to_string(rep.p_exact) << " (" << rep.p_exact.get_d() << ")\n"
            << "sigma    " << rep.sigma << "\n"
            << "zScore   " << rep.z_score << "\n"
            << "gate     |z| < 4 " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kOk : kMonteCarloGate;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of standard Young tableaux and related shapes", "sytcount"};
    app.require_subcommand(1);

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Count tableaux of a shape with one method");
    count->add_option("shape", count_opt.shape, "Shape spec, e.g. \"4,2,1\" or \"5,4,2/3,1\"")->required();
    count->add_option("--method", count_opt.method, "auto|hook|aitken|volume|integrate|product|oracle|brute");
    count->add_flag("--json", count_opt.json, "Single-line JSON output");
    count->add_option("--memo-limit", count_opt.memo_limit, "Oracle ideal-lattice memo limit");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Cross-check every applicable method");
    verify->add_option("shape", verify_opt.shape, "Shape spec");
    verify->add_option("--family", verify_opt.family, "staircase|psyt|necorner|secondrow|hole|partitions");
    verify->add_option("--range", verify_opt.range, "Parameter ranges, e.g. m=0..3,k=1..4");
    verify->add_option("--seed", verify_opt.seed, "Seed for the optional Monte Carlo check");
    verify->add_option("--mc-trials", verify_opt.mc_trials, "Also run a Monte Carlo check with this many trials");
    verify->add_option("--memo-limit", verify_opt.memo_limit, "Oracle ideal-lattice memo limit");
    verify->add_option("--corrupt", verify_opt.corrupt)->group("");

    auto* examples = app.add_subcommand("examples", "Recompute well-known reference values");

    McOptions mc_opt;
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the order-statistics event probability");
    mc->add_option("shape", mc_opt.shape, "Shape spec")->required();
    mc->add_option("--trials", mc_opt.trials, "Number of trials");
    mc->add_option("--seed", mc_opt.seed, "64-bit seed");
    mc->add_option("--threads", mc_opt.threads, "Worker threads (results do not depend on this)");
    mc->add_flag("--json", mc_opt.json, "Single-line JSON output");

    std::vector<const char*> argv{"sytcount"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kParseError;
    }

    if (*count) return guarded(err, [&] { return cmd_count(count_opt, out); });
    if (*verify) return guarded(err, [&] { return cmd_verify(verify_opt, out, err); });
    if (*examples) return guarded(err, [&] { return cmd_examples(out); });
    if (*mc) return guarded(err, [&] { return cmd_mc(mc_opt, out); });
    return kParseError;
}

}  // namespace sytcount::cli
