#include "qlab/eta_expression.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace qlab
{

EtaQuotient &EtaQuotient::times_f(long subscript, long exponent)
{
    if (subscript < 1) {
        throw std::invalid_argument("eta subscript must be >= 1, got " + std::to_string(subscript));
    }
    if (exponent == 0) {
        return *this;
    }
    const long e = (factors_[subscript] += exponent);
    if (e == 0) {
        factors_.erase(subscript);
    }
    return *this;
}

EtaQuotient &EtaQuotient::times_q(long power)
{
    q_power_ += power;
    return *this;
}

EtaQuotient &EtaQuotient::times_scalar(std::int64_t c)
{
    coeff_ *= c;
    return *this;
}

EtaQuotient operator*(EtaQuotient a, const EtaQuotient &b)
{
    a.times_scalar(b.coeff_).times_q(b.q_power_);
    for (const auto &[sub, e] : b.factors_) {
        a.times_f(sub, e);
    }
    return a;
}

EtaQuotient operator/(EtaQuotient a, const EtaQuotient &b)
{
    if (b.coeff_ != 1 || b.q_power_ != 0) {
        throw std::invalid_argument("divisor must be a product of f atoms");
    }
    for (const auto &[sub, e] : b.factors_) {
        a.times_f(sub, -e);
    }
    return a;
}

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    EtaExpression parse()
    {
        EtaExpression out;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        for (;;) {
            EtaQuotient t = term();
            if (negative) {
                t.times_scalar(-1);
            }
            out.push_back(std::move(t));
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != '+' && peek() != '-') {
                fail("expected '+', '-', '*', '/' or end of input");
            }
            negative = get() == '-';
        }
        return out;
    }

private:
    EtaQuotient term()
    {
        EtaQuotient t = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                t = t * factor();
            } else if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                EtaQuotient d = factor();
                if (d.coeff() != 1 || d.q_power() != 0) {
                    fail_at(at, "divisor may only contain f atoms");
                }
                t = t / d;
            } else if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(') {
                fail("expected '*' (implicit multiplication is not allowed)");
            } else {
                return t;
            }
        }
    }

    EtaQuotient factor()
    {
        skip_ws();
        EtaQuotient f;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            f.times_scalar(integer());
        } else if (c == 'q') {
            ++pos_;
            long power = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                power = static_cast<long>(integer());
            }
            f.times_q(power);
        } else if (c == 'f') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            const long sub = static_cast<long>(integer());
            if (sub < 1) {
                fail_at(at, "subscript must be >= 1");
            }
            long e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                const bool neg = peek() == '-';
                if (neg) {
                    ++pos_;
                }
                e = static_cast<long>(integer());
                if (neg) {
                    e = -e;
                }
            }
            f.times_f(sub, e);
        } else if (c == '(') {
            ++pos_;
            f = term();
            skip_ws();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
        } else {
            fail("expected integer, 'q', 'f<k>' or '('");
        }
        return f;
    }

    std::int64_t integer()
    {
        skip_ws();
        const char *first = text_.data() + pos_;
        const char *last = text_.data() + text_.size();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) {
            fail("integer out of range");
        }
        if (ec != std::errc() || *first == '-' || *first == '+') {
            fail("expected integer");
        }
        if (v > std::numeric_limits<int>::max()) {
            fail("integer out of range");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(pos_, msg);
    }
    [[noreturn]] void fail_at(std::size_t at, const std::string &msg) const
    {
        throw ParseError(at, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string atom(long sub, long e)
{
    std::string s = "f" + std::to_string(sub);
    if (e != 1) {
        s += "^" + std::to_string(e);
    }
    return s;
}

// Term text without its sign.
std::string unsigned_term(const EtaQuotient &t)
{
    std::vector<std::string> num;
    std::vector<std::string> den;
    const std::int64_t mag = t.coeff() < 0 ? -t.coeff() : t.coeff();
    if (t.q_power() != 0) {
        num.push_back(t.q_power() == 1 ? "q" : "q^" + std::to_string(t.q_power()));
    }
    for (const auto &[sub, e] : t.factors()) {
        if (e > 0) {
            num.push_back(atom(sub, e));
        } else {
            den.push_back(atom(sub, -e));
        }
    }
    if (mag != 1 || num.empty()) {
        num.insert(num.begin(), std::to_string(mag));
    }

    std::string out;
    for (std::size_t i = 0; i < num.size(); ++i) {
        out += (i ? "*" : "") + num[i];
    }
    if (!den.empty()) {
        out += "/";
        if (den.size() > 1) {
            out += "(";
        }
        for (std::size_t i = 0; i < den.size(); ++i) {
            out += (i ? "*" : "") + den[i];
        }
        if (den.size() > 1) {
            out += ")";
        }
    }
    return out;
}

} // namespace

EtaExpression parse_eta_expression(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const EtaQuotient &term)
{
    return (term.coeff() < 0 ? "-" : "") + unsigned_term(term);
}

std::string to_string(const EtaExpression &expr)
{
    std::string out;
    for (std::size_t i = 0; i < expr.size(); ++i) {
        if (i == 0) {
            out = to_string(expr[i]);
        } else {
            out += expr[i].coeff() < 0 ? " - " : " + ";
            out += unsigned_term(expr[i]);
        }
    }
    return out;
}

} // namespace qlab
