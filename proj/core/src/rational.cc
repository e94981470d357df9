#include <idcodes/checked.hh>
#include <idcodes/rational.hh>

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace idcodes
{
    Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    {
        if (denominator == 0)
            throw std::invalid_argument("rational with zero denominator");
        if (numerator == INT64_MIN || denominator == INT64_MIN)
            throw std::overflow_error("rational component out of range");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        auto g = std::gcd(numerator, denominator);
        _num = numerator / g;
        _den = denominator / g;
    }

    auto Rational::operator+(const Rational & other) const -> Rational
    {
        auto g = std::gcd(_den, other._den);
        auto lhs = checked_mul(_num, other._den / g);
        auto rhs = checked_mul(other._num, _den / g);
        return Rational(checked_add(lhs, rhs), checked_mul(_den, other._den / g));
    }

    auto Rational::operator-(const Rational & other) const -> Rational
    {
        return *this + Rational(checked_sub(0, other._num), other._den);
    }

    auto Rational::operator*(const Rational & other) const -> Rational
    {
        auto g1 = std::gcd(_num, other._den);
        auto g2 = std::gcd(other._num, _den);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Rational(checked_mul(_num / g1, other._num / g2), checked_mul(_den / g2, other._den / g1));
    }

    auto Rational::operator/(const Rational & other) const -> Rational
    {
        if (other._num == 0)
            throw std::domain_error("division by zero rational");
        return *this * Rational(other._den, other._num);
    }

    auto Rational::operator<=>(const Rational & other) const -> std::strong_ordering
    {
        __int128 lhs = static_cast<__int128>(_num) * other._den;
        __int128 rhs = static_cast<__int128>(other._num) * _den;
        return lhs <=> rhs;
    }

    auto Rational::to_double() const -> double
    {
        return static_cast<double>(_num) / static_cast<double>(_den);
    }

    auto Rational::to_string() const -> std::string
    {
        if (_den == 1)
            return std::to_string(_num);
        return std::to_string(_num) + "/" + std::to_string(_den);
    }

    namespace
    {
        auto parse_int(std::string_view text) -> std::int64_t
        {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
            return value;
        }
    }

    auto Rational::parse(std::string_view text) -> Rational
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    auto operator<<(std::ostream & s, const Rational & q) -> std::ostream &
    {
        return s << q.to_string();
    }
}
