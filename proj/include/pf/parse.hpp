#ifndef PF_PARSE_HPP
#define PF_PARSE_HPP

#include <cctype>
#include <string>

#include "pf/bipoly.hpp"
#include "pf/error.hpp"

namespace pf {

class ParseError : public PreconditionError {
public:
    ParseError(const std::string& msg, size_t pos, const std::string& text)
        : PreconditionError(msg + " at offset " + std::to_string(pos) + " near '" +
                            text.substr(pos, std::min<size_t>(8, text.size() - pos)) + "'"),
          position(pos) {}
    size_t position;
};

namespace parse_detail {

// exact rational from a decimal string like "12.34e-2"
inline QQ decimal_to_rational(const std::string& s) {
    size_t epos = s.find_first_of("eE");
    std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
    long expo = (epos == std::string::npos) ? 0 : std::stol(s.substr(epos + 1));
    size_t dot = mant.find('.');
    std::string digits = mant;
    long frac = 0;
    if (dot != std::string::npos) {
        frac = long(mant.size() - dot - 1);
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty()) digits = "0";
    mpz_class num(digits);
    mpz_class den(1);
    long net = expo - frac;
    for (long i = 0; i < net; ++i) num *= 10;
    for (long i = 0; i < -net; ++i) den *= 10;
    QQ r(num, den);
    r.canonicalize();
    return r;
}

template <class K>
K scalar_from_decimal(const std::string& s) {
    if constexpr (ScalarTraits<K>::exact)
        return decimal_to_rational(s);
    else
        return CD(std::stod(s), 0.0);
}

template <class K>
class Parser {
public:
    explicit Parser(const std::string& text) : t_(text) {}

    BiPoly<K> run() {
        BiPoly<K> p = expr();
        skip_ws();
        if (pos_ != t_.size()) throw ParseError("unexpected trailing input", pos_, t_);
        return p;
    }

private:
    BiPoly<K> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        BiPoly<K> acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            BiPoly<K> t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    BiPoly<K> term() {
        BiPoly<K> acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '*' && c != '/') break;
            size_t at = pos_;
            get();
            BiPoly<K> f = factor();
            if (c == '*') {
                acc = acc * f;
            } else {
                if (f.terms().size() != 1 || !(f.terms().begin()->first == Exp{0, 0}))
                    throw ParseError("division only by constants", at, t_);
                acc /= f.terms().begin()->second;
            }
        }
        return acc;
    }

    BiPoly<K> factor() {
        BiPoly<K> base = atom();
        skip_ws();
        if (peek() == '^') {
            size_t at = pos_;
            get();
            skip_ws();
            if (!std::isdigit(peek())) throw ParseError("integer exponent expected", pos_, t_);
            long e = 0;
            while (std::isdigit(peek())) e = 10 * e + (get() - '0');
            if (e > 64) throw ParseError("exponent too large", at, t_);
            BiPoly<K> r = BiPoly<K>::constant(ScalarTraits<K>::from_int(1));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    BiPoly<K> atom() {
        skip_ws();
        char c = peek();
        if (c == 'x') {
            get();
            return BiPoly<K>::x();
        }
        if (c == 'y') {
            get();
            return BiPoly<K>::y();
        }
        if (c == '(') return parenthesized();
        if (std::isdigit(c) || c == '.') return BiPoly<K>::constant(number());
        throw ParseError("term expected", pos_, t_);
    }

    BiPoly<K> parenthesized() {
        size_t open = pos_;
        get(); // '('
        // complex literal "(re,im)": both parts plain signed numbers
        size_t save = pos_;
        if (try_complex_literal()) {
            pos_ = save;
            K v = complex_literal(open);
            return BiPoly<K>::constant(v);
        }
        BiPoly<K> inner = expr();
        skip_ws();
        if (peek() != ')') throw ParseError("missing ')'", open, t_);
        get();
        return inner;
    }

    bool try_complex_literal() {
        size_t save = pos_;
        bool ok = scan_signed_number() && check_get(',') && scan_signed_number() && check_get(')');
        pos_ = save;
        return ok;
    }

    K complex_literal(size_t open) {
        std::string re_tok = signed_number_token();
        skip_ws();
        get(); // ','
        std::string im_tok = signed_number_token();
        skip_ws();
        get(); // ')'
        if constexpr (ScalarTraits<K>::exact) {
            if (std::stod(im_tok) != 0.0)
                throw ParseError("complex coefficients are not representable in the rational backend", open,
                                 t_);
            bool neg = re_tok[0] == '-';
            QQ v = decimal_to_rational(neg || re_tok[0] == '+' ? re_tok.substr(1) : re_tok);
            return neg ? QQ(-v) : v;
        } else {
            return CD(std::stod(re_tok), std::stod(im_tok));
        }
    }

    bool scan_signed_number() {
        skip_ws();
        if (peek() == '+' || peek() == '-') get();
        skip_ws();
        if (!std::isdigit(peek()) && peek() != '.') return false;
        std::string tok = number_token();
        return !tok.empty();
    }
    bool check_get(char c) {
        skip_ws();
        if (peek() != c) return false;
        get();
        return true;
    }
    std::string signed_number_token() {
        skip_ws();
        std::string sign;
        if (peek() == '+' || peek() == '-') sign = std::string(1, get());
        skip_ws();
        return sign + number_token();
    }

    std::string number_token() {
        skip_ws();
        size_t start = pos_;
        while (std::isdigit(peek())) get();
        if (peek() == '.') {
            get();
            while (std::isdigit(peek())) get();
        }
        if (peek() == 'e' || peek() == 'E') {
            size_t save = pos_;
            get();
            if (peek() == '+' || peek() == '-') get();
            if (std::isdigit(peek())) {
                while (std::isdigit(peek())) get();
            } else {
                pos_ = save;
            }
        }
        if (pos_ == start) throw ParseError("number expected", pos_, t_);
        return t_.substr(start, pos_ - start);
    }

    K number() { return scalar_from_decimal<K>(number_token()); }

    void skip_ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
    char get() { return pos_ < t_.size() ? t_[pos_++] : '\0'; }

    const std::string& t_;
    size_t pos_ = 0;
};

} // namespace parse_detail

template <class K>
BiPoly<K> parse_poly(const std::string& text) {
    return parse_detail::Parser<K>(text).run();
}

namespace parse_detail {

inline bool print_real_sign(const CD& c, bool first, std::string& out) {
    if (c.imag() != 0.0) {
        if (!first) out += " + ";
        return false; // caller prints the full complex literal
    }
    double re = c.real();
    if (first) {
        if (re < 0) out += "-";
    } else {
        out += (re < 0) ? " - " : " + ";
    }
    return true;
}

inline bool print_real_sign(const QQ& c, bool first, std::string& out) {
    if (first) {
        if (sgn(c) < 0) out += "-";
    } else {
        out += (sgn(c) < 0) ? " - " : " + ";
    }
    return true;
}

inline std::string magnitude_str(const CD& c) {
    std::ostringstream os;
    os.precision(17);
    os << std::abs(c.real());
    return os.str();
}
inline std::string magnitude_str(const QQ& c) { return QQ(::abs(c)).get_str(); }

inline bool is_unit(const CD& c) { return c.imag() == 0.0 && std::abs(c.real()) == 1.0; }
inline bool is_unit(const QQ& c) { return ::abs(c) == 1; }

} // namespace parse_detail

// Canonical text form: terms in graded order, explicit '*' and '^'.
template <class K>
std::string print_poly(const BiPoly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool real_style = parse_detail::print_real_sign(c, first, out);
        std::string mono;
        if (e.a > 0) mono += (e.a == 1) ? "x" : "x^" + std::to_string(e.a);
        if (e.b > 0) {
            if (!mono.empty()) mono += " * ";
            mono += (e.b == 1) ? "y" : "y^" + std::to_string(e.b);
        }
        if (!real_style) {
            std::ostringstream os;
            os.precision(17);
            CD z = to_complex(c);
            os << '(' << z.real() << ',' << z.imag() << ')';
            out += os.str();
            if (!mono.empty()) out += " * " + mono;
        } else if (mono.empty()) {
            out += parse_detail::magnitude_str(c);
        } else if (parse_detail::is_unit(c)) {
            out += mono;
        } else {
            out += parse_detail::magnitude_str(c) + " * " + mono;
        }
        first = false;
    }
    return out;
}

} // namespace pf

#endif
