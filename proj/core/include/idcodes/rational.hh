#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace idcodes
{
    /// An exact rational number, always held in lowest terms with a positive
    /// denominator. Arithmetic is overflow-checked and throws std::overflow_error.
    class Rational
    {
        public:
            Rational() = default;
            Rational(std::int64_t numerator, std::int64_t denominator = 1);

            auto numerator() const -> std::int64_t { return _num; }
            auto denominator() const -> std::int64_t { return _den; }

            auto operator+(const Rational & other) const -> Rational;
            auto operator-(const Rational & other) const -> Rational;
            auto operator*(const Rational & other) const -> Rational;
            auto operator/(const Rational & other) const -> Rational;

            auto operator==(const Rational & other) const -> bool = default;
            auto operator<=>(const Rational & other) const -> std::strong_ordering;

            auto to_double() const -> double;

            /// "p/q", or just "p" when the denominator is one.
            auto to_string() const -> std::string;

            /// Accepts "p/q" or "p"; throws std::invalid_argument on anything else.
            static auto parse(std::string_view text) -> Rational;

        private:
            std::int64_t _num = 0;
            std::int64_t _den = 1;
    };

    auto operator<<(std::ostream & s, const Rational & q) -> std::ostream &;
}
