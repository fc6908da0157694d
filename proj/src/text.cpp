#include "gausshappy/text.hpp"

#include <cctype>
#include <cstdlib>

#include "gausshappy/digits.hpp"
#include "gausshappy/errors.hpp"

namespace gausshappy {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    int take_sign() {
        if (done()) return 1;
        if (peek() == '+') { ++pos; return 1; }
        if (peek() == '-') { ++pos; return -1; }
        return 1;
    }

    mpz_class take_integer() {
        const std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) throw ParseError("expected a decimal integer", start);
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    bool take_i() {
        if (!done() && peek() == 'i') { ++pos; return true; }
        return false;
    }
};

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    Cursor c{text};
    if (c.done()) throw ParseError("empty input", 0);

    const int s1 = c.take_sign();
    if (c.take_i()) {  // "i", "-i"
        if (!c.done()) throw ParseError("trailing characters", c.pos);
        return {mpz_class(0), mpz_class(s1)};
    }
    mpz_class first = c.take_integer();
    if (c.take_i()) {  // "bi"
        if (!c.done()) throw ParseError("trailing characters", c.pos);
        return {mpz_class(0), s1 * first};
    }
    if (c.done()) return {s1 * first, mpz_class(0)};  // "a"

    const std::size_t sign_pos = c.pos;
    if (c.peek() != '+' && c.peek() != '-') throw ParseError("expected '+', '-' or 'i'", c.pos);
    const int s2 = c.take_sign();
    (void)sign_pos;
    mpz_class second(1);
    if (!c.take_i()) {  // "a+bi" (otherwise "a+i")
        second = c.take_integer();
        if (!c.take_i()) throw ParseError("expected 'i'", c.pos);
    }
    if (!c.done()) throw ParseError("trailing characters", c.pos);
    return {s1 * first, s2 * second};
}

std::string to_base_string(const mpz_class& v, long base) {
    require_base(base);
    if (base <= 36) {
        char* raw = mpz_get_str(nullptr, static_cast<int>(base), mpz_class(abs(v)).get_mpz_t());
        std::string out(raw);
        void (*freefn)(void*, std::size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, out.size() + 1);
        return out;
    }
    const DigitExpansion e = to_digits(GaussianInt(abs(v), 0), base);
    if (e.pairs.empty()) return "0";
    std::string out = "[";
    for (std::size_t j = e.pairs.size(); j-- > 0;) {
        out += std::to_string(e.pairs[j].a);
        if (j != 0) out += ',';
    }
    out += ']';
    return out;
}

std::string render_in_base(const GaussianInt& z, long base) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re != 0) {
        if (z.re < 0) out += '-';
        out += to_base_string(z.re, base);
    }
    if (z.im != 0) {
        if (z.im < 0) {
            out += '-';
        } else if (z.re != 0) {
            out += '+';
        }
        const mpz_class mag = abs(z.im);
        if (mag != 1) out += to_base_string(z.im, base);
        out += 'i';
    }
    return out;
}

}  // namespace gausshappy
