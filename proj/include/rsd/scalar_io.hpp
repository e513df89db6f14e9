#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsd/laurent.hpp"

namespace rsd {

/// Syntax error with the offending position (0-based offset into the input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

/// Recursive-descent parser for the scalar grammar:
///   scalar   := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := rational | 't' ['^' integer] | '(' scalar ')'
///   rational := integer ['/' positive-integer]
/// Whitespace-insensitive. Division by a zero subexpression is rejected.
template <Field K>
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Laurent<K> parse() {
        Laurent<K> v = scalar();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    Laurent<K> scalar() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        Laurent<K> v = term();
        if (neg) v = -v;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                Laurent<K> rhs = term();
                v = (c == '+') ? v + rhs : v - rhs;
            } else {
                return v;
            }
        }
    }

    Laurent<K> term() {
        Laurent<K> v = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                std::size_t opos = pos_;
                take();
                Laurent<K> rhs = factor();
                if (c == '/') {
                    if (rhs.is_zero()) fail_at(opos, "division by zero");
                    v = v / rhs;
                } else {
                    v = v * rhs;
                }
            } else {
                return v;
            }
        }
    }

    Laurent<K> factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Laurent<K> v = scalar();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return v;
        }
        if (c == 't') {
            take();
            std::int64_t e = 1;
            skip_ws();
            if (peek() == '^') {
                take();
                e = integer();
            }
            return Laurent<K>::t_power(e);
        }
        if (c == '-' || is_digit(c)) {
            std::int64_t n = integer();
            return Laurent<K>::constant(K::from_int(static_cast<long>(n)));
        }
        fail(c == '\0' ? "unexpected end of input" : "expected a factor");
    }

    std::int64_t integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        if (!is_digit(peek())) fail("expected digits");
        std::int64_t n = 0;
        while (is_digit(peek())) {
            int d = take() - '0';
            if (n > (INT64_MAX - d) / 10) fail("integer literal too large");
            n = n * 10 + d;
        }
        return neg ? -n : n;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const {
        throw ParseError(p, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <Field K>
Laurent<K> parse_scalar(std::string_view text) {
    return detail::ScalarParser<K>(text).parse();
}

} // namespace rsd
