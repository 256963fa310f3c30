#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bidi {

// Exact expansion base. The landmark definitions compare adjacent layer
// costs against b, and doing that in floating point can flip a landmark
// right at a breakpoint, so b is carried as a reduced fraction and the
// comparisons are integer cross-multiplications.
struct Rational {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce();
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    void reduce() {
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    // Accepts "2", "1.5", "3/2". Decimal inputs keep at most 9 fractional
    // digits, which is exact for every base anyone passes on a CLI.
    static Rational parse(const std::string& text);

    std::string str() const;

    bool operator==(const Rational& other) const = default;
};

}  // namespace bidi
