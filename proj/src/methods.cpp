#include "sytcount/methods.hpp"

#include <map>

#include "sytcount/detformulas.hpp"
#include "sytcount/products.hpp"

namespace sytcount {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::hook: return "hook";
        case Method::aitken: return "aitken";
        case Method::volume: return "volume";
        case Method::integrate: return "integrate";
        case Method::product: return "product";
        case Method::oracle: return "oracle";
        case Method::brute: return "brute";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kAllMethods)
        if (method_name(m) == name) return m;
    return std::nullopt;
}

namespace {

std::optional<SkewShape> as_skew(const ShapeSpec& shape) {
    if (const auto* p = std::get_if<Partition>(&shape)) return SkewShape(*p, {});
    if (const auto* s = std::get_if<SkewShape>(&shape)) return *s;
    return std::nullopt;
}

}  // namespace

bool applicable(const ShapeSpec& shape, Method method) {
    switch (method) {
        case Method::hook:
        case Method::integrate: return std::holds_alternative<Partition>(shape);
        case Method::aitken:
        case Method::volume: return as_skew(shape).has_value();
        case Method::product: return match_family(shape).has_value();
        case Method::oracle: return true;
        case Method::brute: return grid_of(shape).size() <= kBruteForceMaxSize;
    }
    return false;
}

std::vector<Method> applicable_methods(const ShapeSpec& shape) {
    std::vector<Method> out;
    for (Method m : kAllMethods)
        if (applicable(shape, m)) out.push_back(m);
    return out;
}

BigInt count_with(const ShapeSpec& shape, Method method, std::size_t memo_limit) {
    if (!applicable(shape, method))
        throw MethodMismatch("method '" + std::string(method_name(method)) + "' does not apply to shape " +
                             canonical_string(shape));
    switch (method) {
        case Method::hook: return frobenius_young(std::get<Partition>(shape));
        case Method::aitken: return aitken_count(*as_skew(shape));
        case Method::volume: return count_via_volume(*as_skew(shape));
        case Method::integrate: {
            const auto& p = std::get<Partition>(shape);
            std::map<std::string, BigRat> ones;
            for (const auto& v : indexed_vars("t", p.length())) ones.emplace(v, BigRat(1));
            return require_integer(BigRat(factorial(p.size())) * jvolume_by_integration(p).evaluate(ones),
                                   "integrate");
        }
        case Method::product: return match_family(shape)->count;
        case Method::oracle: return count_linear_extensions(poset_of(shape), memo_limit);
        case Method::brute: return brute_force_extensions(poset_of(shape));
    }
    throw MethodMismatch("unknown method");
}

Method auto_method(const ShapeSpec& shape) {
    if (applicable(shape, Method::product)) return Method::product;
    if (applicable(shape, Method::hook)) return Method::hook;
    if (applicable(shape, Method::aitken)) return Method::aitken;
    return Method::oracle;
}

BigInt exact_count(const ShapeSpec& shape, std::size_t memo_limit) {
    return count_with(shape, auto_method(shape), memo_limit);
}

}  // namespace sytcount
