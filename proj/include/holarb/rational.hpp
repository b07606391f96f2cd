#ifndef HOLARB_RATIONAL_HPP
#define HOLARB_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holarb {

// Exact arbitrary-precision rational. Every quantity in the library is one
// of these; there is no floating-point mode.
using Rat = mpq_class;

// Accepts "p", "-p", "p/q" with decimal digits and q > 0 after sign
// normalization. Anything else (floats, exponents, whitespace inside the
// number) is rejected.
inline Rat parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational (expected \"p\" or \"p/q\"): '" +
                                    std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) fail();
    if (pos != text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        std::size_t den_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++den_digits;
        }
        if (den_digits == 0 || pos != text.size()) fail();
    }
    Rat value(std::string(text), 10);
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

// Canonical rendering: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rat& value) {
    return value.get_str();
}

} // namespace holarb

#endif // HOLARB_RATIONAL_HPP
