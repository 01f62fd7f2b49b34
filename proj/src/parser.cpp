#include "hsmf/parser.hpp"

#include <cctype>
#include <map>

namespace hsmf {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const VarSystem& vars) : text_(text), vars_(vars) {
        for (int i = 0; i < vars.count(); ++i)
            var_index_.emplace(vars.names[static_cast<std::size_t>(i)], i);
    }

    Polynomial run() {
        Polynomial out;
        skip_ws();
        parse_term(out, 1);
        skip_ws();
        while (!eof()) {
            char c = peek();
            int sign;
            if (c == '+') {
                sign = 1;
            } else if (c == '-') {
                sign = -1;
            } else {
                throw ParseError("expected '+' or '-'", pos_);
            }
            ++pos_;
            skip_ws();
            parse_term(out, sign);
            skip_ws();
        }
        if (out.is_zero()) return Polynomial();
        return out;
    }

  private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // term := [coeff '*'] factor ('*' factor)* | coeff
    void parse_term(Polynomial& out, int sign) {
        if (eof()) throw ParseError("expected term", pos_);
        Rat coeff = 1;
        bool have_coeff = false;
        char c = peek();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            coeff = parse_coeff();
            have_coeff = true;
            skip_ws();
            if (eof() || peek() != '*') {
                // bare constant term
                out.add_term(Monomial(static_cast<std::size_t>(vars_.count()), 0),
                             coeff * sign);
                return;
            }
            ++pos_;  // consume '*'
            skip_ws();
        }
        Monomial m(static_cast<std::size_t>(vars_.count()), 0);
        parse_factor(m);
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            skip_ws();
            parse_factor(m);
            skip_ws();
        }
        (void)have_coeff;
        out.add_term(m, coeff * sign);
    }

    // coeff := ['-'] uint ['/' uint]
    Rat parse_coeff() {
        bool neg = false;
        if (!eof() && peek() == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        Int num = parse_uint("coefficient");
        Int den = 1;
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            den = parse_uint("denominator");
            if (den == 0) throw ParseError("zero denominator", den_pos);
        }
        Rat r = make_rat(num, den);
        return neg ? Rat(-r) : r;
    }

    // factor := var ['^' uint]
    void parse_factor(Monomial& m) {
        if (eof()) throw ParseError("expected variable", pos_);
        char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            throw ParseError("expected variable", pos_);
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto it = var_index_.find(name);
        if (it == var_index_.end())
            throw ParseError("unknown variable '" + name + "'", start);
        int exp = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            Int e = parse_uint("exponent");
            if (e > 1000000) throw ParseError("exponent too large", pos_);
            exp = static_cast<int>(e.get_si());
        }
        m[static_cast<std::size_t>(it->second)] += exp;
    }

    Int parse_uint(const char* what) {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what + " digits", pos_);
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    const VarSystem& vars_;
    std::map<std::string, int> var_index_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const VarSystem& vars) {
    return Parser(text, vars).run();
}

}  // namespace hsmf
