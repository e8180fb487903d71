#pragma once
// Tiny expression language for initial data: sums and differences of
// products of decimal literals, the variables t and x, parenthesized
// subexpressions, unary minus, integer powers via ^, and division by a
// constant subexpression. Literals are read at the active precision.

#include "cusp/series.hpp"

#include <memory>
#include <string>

namespace cusp {

struct ParseError : ConfigError {
    ParseError(const std::string& msg, size_t pos)
        : ConfigError(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

struct ExprNode {
    enum class Kind { constant, var_t, var_x, add, sub, mul, div, pow, neg };
    Kind kind;
    Coeff value;          // constant
    unsigned exponent{};  // pow
    std::shared_ptr<const ExprNode> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr parse_expr(const std::string& text);

// Evaluate the tree into a series. Throws ConfigError when a divisor is not
// a constant.
TruncatedSeries2 lower_expr(const ExprPtr& e, unsigned order);

TruncatedSeries2 parse_series(const std::string& text, unsigned order);

}  // namespace cusp
