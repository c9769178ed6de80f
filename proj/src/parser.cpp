#include "coneinf/parser.hpp"

#include <cctype>
#include <sstream>

#include "coneinf/errors.hpp"

namespace coneinf {

namespace {

constexpr unsigned kMaxExponent = 100000;

class Parser {
public:
    Parser(const std::string& text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial t = term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek() == '^') {
            ++pos_;
            unsigned e = natural();
            b = b.pow(e);
        }
        return b;
    }

    Polynomial base() {
        if (eof()) throw parse_error("expected a factor, got end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        throw parse_error("expected a factor", pos_);
    }

    Polynomial rational() {
        std::size_t start = pos_;
        bool neg = false;
        if (text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        Int num = digits();
        Int den(1);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("expected denominator digits", pos_);
            den = digits();
            if (den == 0) throw parse_error("zero denominator", start);
        }
        Rat r(num, den);
        if (neg) r = -r;
        return Polynomial::constant(ctx_, std::move(r));
    }

    Int digits() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected digits", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    unsigned natural() {
        skip_ws();
        std::size_t start = pos_;
        Int v = digits();
        if (v > kMaxExponent) throw parse_error("exponent too large", start);
        return v.convert_to<unsigned>();
    }

    Polynomial variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < ctx_->size(); ++i)
            if ((*ctx_)[i] == name) return Polynomial::variable(ctx_, i);
        throw parse_error("unknown variable '" + name + "'", start);
    }

    const std::string& text_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string format_mono(const Monomial& m, const VarContext& names) {
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
    return Parser(text, ctx).run();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const VarContext& names = *p.context();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = format_mono(t.mono, names);
        if (mono.empty()) {
            out += format_rat(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += format_rat(c) + "*" + mono;
        }
    }
    return out;
}

} // namespace coneinf
