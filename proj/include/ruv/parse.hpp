#ifndef RUV_PARSE_HPP
#define RUV_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "ruv/poly_ring.hpp"

namespace ruv {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t at, const std::string& msg)
        : std::runtime_error("parse error at offset " + std::to_string(at) + ": " + msg), pos(at) {}
};

namespace detail {

// Recursive-descent parser for polynomial expressions over R:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'x' | 'u' | 'v' | uint | '(' expr ')'
// Values are free polynomials in R[x]; u^2 = v^2 = 0 and uv = vu are applied
// by the ring arithmetic itself.
class PolyParser {
  public:
    PolyParser(std::string_view src, int p) : src_(src), p_(p) {}

    PolyR parse() {
        PolyR v = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(pos_, "unexpected trailing input");
        return v;
    }

  private:
    std::string_view src_;
    int p_;
    size_t pos_ = 0;
    static constexpr int kMaxExponent = 4096;
    static constexpr size_t kMaxCoeffs = 1u << 16;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    PolyR expr() {
        PolyR acc = term();
        for (;;) {
            if (eat('+'))
                acc = polyr_add(acc, term());
            else if (eat('-'))
                acc = polyr_sub(acc, term());
            else
                return acc;
        }
    }

    PolyR term() {
        PolyR acc = factor();
        while (eat('*')) {
            acc = polyr_mul_free(acc, factor());
            if (acc.c.size() > kMaxCoeffs) throw ParseError(pos_, "expression degree overflow");
        }
        return acc;
    }

    PolyR factor() {
        PolyR b = base();
        if (eat('^')) {
            int e = parse_uint();
            if (e > kMaxExponent) throw ParseError(pos_, "exponent too large");
            PolyR acc = PolyR::from_coeffs(p_, 0, {RElem::scalar(p_, 1)});
            for (int i = 0; i < e; ++i) {
                acc = polyr_mul_free(acc, b);
                if (acc.c.size() > kMaxCoeffs) throw ParseError(pos_, "expression degree overflow");
            }
            return acc;
        }
        return b;
    }

    PolyR base() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            PolyR inner = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return PolyR::from_coeffs(p_, 0, {RElem(p_), RElem::scalar(p_, 1)});
        }
        if (c == 'u') {
            ++pos_;
            return PolyR::from_coeffs(p_, 0, {RElem::u(p_)});
        }
        if (c == 'v') {
            ++pos_;
            return PolyR::from_coeffs(p_, 0, {RElem::v(p_)});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int value = parse_uint();
            return PolyR::from_coeffs(p_, 0, {RElem::scalar(p_, value % p_)});
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    int parse_uint() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError(pos_, "expected unsigned integer");
        long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1'000'000'000LL) throw ParseError(pos_, "integer literal too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }
};

}  // namespace detail

/// Parses an expression into a polynomial over R, reduced into
/// R[x]/<x^n - 1> when n > 0 (n == 0 keeps the free polynomial).
inline PolyR parse_poly(std::string_view src, int p, int n) {
    require_prime(p);
    PolyR free_poly = detail::PolyParser(src, p).parse();
    if (n == 0) return free_poly;
    return polyr_to_quotient(free_poly, n);
}

}  // namespace ruv

#endif
