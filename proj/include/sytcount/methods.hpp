#pragma once

// Uniform entry point over every counting method.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sytcount/exact.hpp"
#include "sytcount/oracle.hpp"
#include "sytcount/shapes.hpp"

namespace sytcount {

enum class Method { hook, aitken, volume, integrate, product, oracle, brute };

inline constexpr Method kAllMethods[] = {Method::hook,    Method::aitken, Method::volume, Method::integrate,
                                         Method::product, Method::oracle, Method::brute};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// The method cannot be applied to this shape class.
class MethodMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws MethodMismatch when the method does not apply, MemoLimitExceeded
/// when the oracle runs out of memo space.
BigInt count_with(const ShapeSpec& shape, Method method, std::size_t memo_limit = kDefaultMemoLimit);

bool applicable(const ShapeSpec& shape, Method method);
std::vector<Method> applicable_methods(const ShapeSpec& shape);

/// Product formula for a recognized family, else hook for straight shapes,
/// aitken for skew shapes, otherwise the oracle.
Method auto_method(const ShapeSpec& shape);

/// Count by auto_method.
BigInt exact_count(const ShapeSpec& shape, std::size_t memo_limit = kDefaultMemoLimit);

}  // namespace sytcount
