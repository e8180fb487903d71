#include "cusp/expr.hpp"

#include <cctype>

namespace cusp {

namespace {
struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    ExprPtr make(ExprNode n) { return std::make_shared<ExprNode>(std::move(n)); }

    ExprPtr parse_sum() {
        ExprPtr left = parse_term();
        for (;;) {
            if (eat('+')) {
                ExprPtr right = parse_term();
                left = make({ExprNode::Kind::add, Coeff(0), 0, left, right});
            } else if (eat('-')) {
                ExprPtr right = parse_term();
                left = make({ExprNode::Kind::sub, Coeff(0), 0, left, right});
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        for (;;) {
            if (eat('*')) {
                ExprPtr right = parse_factor();
                left = make({ExprNode::Kind::mul, Coeff(0), 0, left, right});
            } else if (eat('/')) {
                ExprPtr right = parse_factor();
                left = make({ExprNode::Kind::div, Coeff(0), 0, left, right});
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_factor() {
        skip_ws();
        if (eat('-')) {
            ExprPtr inner = parse_factor();
            return make({ExprNode::Kind::neg, Coeff(0), 0, inner, nullptr});
        }
        ExprPtr base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            unsigned e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + static_cast<unsigned>(s[pos] - '0');
                ++pos;
            }
            if (pos == start) fail("expected integer exponent after '^'");
            return make({ExprNode::Kind::pow, Coeff(0), e, base, nullptr});
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 't' || c == 'x') {
            ++pos;
            return make({c == 't' ? ExprNode::Kind::var_t : ExprNode::Kind::var_x,
                         Coeff(0), 0, nullptr, nullptr});
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
                ++pos;
            if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
                size_t mark = pos;
                ++pos;
                if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    while (pos < s.size() &&
                           std::isdigit(static_cast<unsigned char>(s[pos])))
                        ++pos;
                } else {
                    pos = mark;
                }
            }
            std::string lit = s.substr(start, pos - start);
            try {
                return make({ExprNode::Kind::constant, Coeff(Real(lit)), 0,
                             nullptr, nullptr});
            } catch (const std::exception&) {
                throw ParseError("bad numeric literal '" + lit + "'", start);
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};
}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p{text};
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input", p.pos);
    return e;
}

TruncatedSeries2 lower_expr(const ExprPtr& e, unsigned order) {
    if (!e) throw ConfigError("empty expression");
    using K = ExprNode::Kind;
    switch (e->kind) {
        case K::constant:
            return TruncatedSeries2::constant(e->value, order);
        case K::var_t:
            return TruncatedSeries2::var_t(order);
        case K::var_x:
            return TruncatedSeries2::var_x(order);
        case K::add:
            return lower_expr(e->lhs, order) + lower_expr(e->rhs, order);
        case K::sub:
            return lower_expr(e->lhs, order) - lower_expr(e->rhs, order);
        case K::mul:
            return lower_expr(e->lhs, order) * lower_expr(e->rhs, order);
        case K::div: {
            TruncatedSeries2 num = lower_expr(e->lhs, order);
            TruncatedSeries2 den = lower_expr(e->rhs, order);
            Coeff c = den.coeff(0, 0);
            TruncatedSeries2 rest = den - TruncatedSeries2::constant(c, order);
            if (!rest.is_zero())
                throw ConfigError("division is only supported by constants");
            if (coeff_abs(c) == 0)
                throw ConfigError("division by zero");
            return (Coeff(1) / c) * num;
        }
        case K::pow: {
            TruncatedSeries2 base = lower_expr(e->lhs, order);
            TruncatedSeries2 out = TruncatedSeries2::constant(Coeff(1), order);
            for (unsigned i = 0; i < e->exponent; ++i) out = out * base;
            return out;
        }
        case K::neg:
            return -lower_expr(e->lhs, order);
    }
    throw ConfigError("corrupt expression tree");
}

TruncatedSeries2 parse_series(const std::string& text, unsigned order) {
    return lower_expr(parse_expr(text), order);
}

}  // namespace cusp
