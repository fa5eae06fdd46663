#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"
#include "ring.hpp"

namespace hlab {

struct ParsedExpression {
    GradedElement value;
    std::vector<std::string> warnings;
};

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | generator | '(' expr ')'
// Division is allowed by constants only, which covers rational literals
// such as 3/2. Products that exceed the truncation weight are dropped and
// reported once as a warning.
class ExpressionParser
{
  public:
    ExpressionParser(std::string_view src, RingSpecPtr spec) : src_(src), spec_(std::move(spec)) {}

    ParsedExpression parse()
    {
        GradedElement v = expr();
        skip_space();
        if (pos_ != src_.size()) {
            throw parse_error("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        }
        ParsedExpression out{std::move(v), {}};
        if (truncated_) {
            out.warnings.push_back("terms of weight above " + std::to_string(spec_->truncation()) + " in '" +
                                   std::string(src_) + "' were truncated");
        }
        return out;
    }

  private:
    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GradedElement expr()
    {
        GradedElement acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    GradedElement term()
    {
        GradedElement acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = multiply(acc, unary(), &truncated_);
                continue;
            }
            skip_space();
            const std::size_t at = pos_;
            if (accept('/')) {
                const GradedElement d = unary();
                if (!(d.terms().size() <= 1 && (d.is_zero() || d.terms().begin()->first.weight == 0))) {
                    throw parse_error("division by a non-constant expression", at);
                }
                const Rational q = d.constant_term();
                if (q == 0) {
                    throw parse_error("division by zero", at);
                }
                acc /= q;
                continue;
            }
            return acc;
        }
    }

    GradedElement unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power_expr();
    }

    GradedElement power_expr()
    {
        GradedElement base = primary();
        skip_space();
        const std::size_t at = pos_;
        if (!accept('^')) {
            return base;
        }
        skip_space();
        const std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        if (digits == pos_) {
            throw parse_error("exponent after '^' must be a nonnegative integer", at);
        }
        const std::string text(src_.substr(digits, pos_ - digits));
        if (text.size() > 4) {
            throw parse_error("exponent " + text + " is too large", digits);
        }
        return power(base, static_cast<unsigned>(std::stoul(text)), &truncated_);
    }

    GradedElement primary()
    {
        skip_space();
        if (pos_ >= src_.size()) {
            throw parse_error("unexpected end of expression", pos_);
        }
        const char c = src_[pos_];
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            GradedElement v = expr();
            if (!accept(')')) {
                throw parse_error("missing ')' for '(' at position " + std::to_string(open), pos_);
            }
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            Integer z(std::string(src_.substr(start, pos_ - start)));
            return GradedElement::constant(spec_, Rational(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(src_.substr(start, pos_ - start));
            const auto idx = spec_->index_of(name);
            if (!idx) {
                throw parse_error("unknown generator '" + name + "'", start);
            }
            if (spec_->generators()[*idx].weight > spec_->truncation()) {
                truncated_ = true;
            }
            return GradedElement::generator(spec_, name);
        }
        throw parse_error("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view src_;
    RingSpecPtr spec_;
    std::size_t pos_ = 0;
    bool truncated_ = false;
};

inline ParsedExpression parse_expression(std::string_view src, const RingSpecPtr& spec)
{
    return ExpressionParser(src, spec).parse();
}

} // namespace hlab
