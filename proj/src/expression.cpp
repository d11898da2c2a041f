#include "subord/expression.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace subord {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

class Parser {
public:
    Parser(const std::string& text, int degree) : text_(text), degree_(degree) {}

    Series parse() {
        Series result = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("expression: trailing input at '" + rest() + "'");
        return result;
    }

private:
    Series expr() {
        Series acc = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Series term() {
        Series acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = multiply(acc, factor(), degree_);
            } else if (accept('/')) {
                const Series d = factor();
                acc = divide(acc, d, degree_);
            } else {
                return acc;
            }
        }
    }

    Series factor() {
        Series base = unary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            const size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_) throw std::invalid_argument("expression: '^' needs an integer");
            const int e = std::stoi(text_.substr(start, pos_ - start));
            Series acc = Series::constant(cplx(1.0), 0);
            for (int k = 0; k < e; ++k) acc = multiply(acc, base, degree_);
            return acc;
        }
        return base;
    }

    Series unary() {
        skip_ws();
        if (accept('-')) return unary() * cplx(-1.0);
        if (accept('+')) return unary();
        return primary();
    }

    Series primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw std::invalid_argument("expression: unexpected end");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t used = 0;
            const double v = std::stod(text_.substr(pos_), &used);
            pos_ += used;
            return Series::constant(cplx(v), 0);
        }
        if (accept('(')) {
            Series inner = expr();
            skip_ws();
            if (!accept(')')) throw std::invalid_argument("expression: missing ')'");
            return inner;
        }
        if (match_word("exp")) {
            skip_ws();
            if (!accept('(')) throw std::invalid_argument("expression: exp needs '('");
            Series inner = expr();
            skip_ws();
            if (!accept(')')) throw std::invalid_argument("expression: missing ')'");
            return exp_series(inner.truncated(degree_));
        }
        if (match_word("pi")) return Series::constant(cplx(kPi), 0);
        if (match_word("i")) return Series::constant(cplx(0.0, 1.0), 0);
        if (match_word("z")) return Series::identity(1);
        throw std::invalid_argument("expression: cannot parse at '" + rest() + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool match_word(const std::string& w) {
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        const size_t end = pos_ + w.size();
        if (end < text_.size()) {
            const char nxt = text_[end];
            if (std::isalnum(static_cast<unsigned char>(nxt)) || nxt == '_') return false;
        }
        pos_ = end;
        return true;
    }

    std::string rest() const { return text_.substr(pos_, 12); }

    const std::string& text_;
    size_t pos_ = 0;
    int degree_;
};

}  // namespace

Series parse_series_expression(const std::string& text, int degree) {
    return Parser(text, degree).parse();
}

cplx parse_complex_expression(const std::string& text) {
    const Series s = parse_series_expression(text, 8);
    for (int k = 1; k <= s.degree(); ++k)
        if (std::abs(s.coeff(k)) > 0.0)
            throw std::invalid_argument("expression: expected a constant, found z terms");
    return s.coeff(0);
}

}  // namespace subord
