#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace idcodes
{
    using Coord = std::int64_t;

    /// A vertex of Z^n. Ordering is lexicographic on coordinates.
    struct Point
    {
        std::vector<Coord> coords;

        Point() = default;
        explicit Point(std::vector<Coord> c) : coords(std::move(c)) { }
        Point(std::initializer_list<Coord> c) : coords(c) { }

        static auto origin(std::size_t n) -> Point { return Point(std::vector<Coord>(n, 0)); }

        auto dimension() const -> std::size_t { return coords.size(); }
        auto operator[](std::size_t i) const -> Coord { return coords[i]; }
        auto operator[](std::size_t i) -> Coord & { return coords[i]; }

        auto operator==(const Point &) const -> bool = default;
        auto operator<=>(const Point &) const = default;

        auto operator+(const Point & other) const -> Point;
        auto operator-(const Point & other) const -> Point;

        auto to_string() const -> std::string;
    };

    auto operator<<(std::ostream & s, const Point & p) -> std::ostream &;

    enum class Metric
    {
        L1,
        King
    };

    auto metric_name(Metric m) -> std::string;

    /// Shortest-path distance in the square lattice (L1) or the king grid (Chebyshev,
    /// dimension 2 only). Throws std::invalid_argument on dimension mismatch.
    auto distance(const Point & u, const Point & v, Metric m) -> Coord;

    /// All points within distance r of the origin, in lexicographic order.
    auto ball_offsets(std::size_t n, Coord r, Metric m) -> std::vector<Point>;

    /// All points within distance r of center, in lexicographic order.
    auto ball(const Point & center, Coord r, Metric m) -> std::vector<Point>;

    /// Binomial coefficient; throws std::overflow_error if the value exceeds 64 bits.
    auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t;

    /// |B_r| in L_n: the number of integer solutions of |x_1| + ... + |x_n| <= r,
    /// computed as sum_k 2^k C(n,k) C(r,k). This is the Delannoy number D(n, r).
    auto ball_size(std::int64_t n, std::int64_t r) -> std::int64_t;
}
