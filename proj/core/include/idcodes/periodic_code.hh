#pragma once

#include <idcodes/lattice.hh>
#include <idcodes/rational.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace idcodes
{
    /// An infinite code on Z^n that repeats with period p_i along coordinate i.
    /// The words are the codewords inside the fundamental box prod [0, p_i), stored
    /// sorted. A vertex v is a codeword iff (v_1 mod p_1, ..., v_n mod p_n) is a word.
    class PeriodicCode
    {
        public:
            /// Throws std::invalid_argument if there are no words, a word is outside the
            /// box or repeated, a period is not positive, or King is used with n != 2.
            PeriodicCode(Metric metric, std::vector<Coord> periods, std::vector<Point> words);

            auto dimension() const -> std::size_t { return _periods.size(); }
            auto metric() const -> Metric { return _metric; }
            auto periods() const -> const std::vector<Coord> & { return _periods; }
            auto words() const -> const std::vector<Point> & { return _words; }
            auto box_volume() const -> std::int64_t { return _volume; }

            auto contains(const Point & v) const -> bool;

            /// Membership by row-major box index, 0 <= k < box_volume().
            auto contains_box_index(std::int64_t k) const -> bool { return _member[static_cast<std::size_t>(k)]; }

            /// The representative of v inside the fundamental box.
            auto reduce(const Point & v) const -> Point;

            /// Row-major (lexicographic) index of v's representative in the box.
            auto box_index(const Point & v) const -> std::int64_t;

            auto operator==(const PeriodicCode & other) const -> bool;

        private:
            Metric _metric;
            std::vector<Coord> _periods;
            std::vector<Point> _words;
            std::int64_t _volume = 1;
            std::vector<char> _member;
    };

    /// Largest fundamental box the library will materialise.
    inline constexpr std::int64_t max_box_volume = std::int64_t{1} << 26;

    /// Every point of prod [0, p_i), lexicographically ordered.
    auto box_points(std::span<const Coord> periods) -> std::vector<Point>;

    /// |words| / prod p_i in lowest terms.
    auto density(const PeriodicCode & code) -> Rational;

    /// I_r(v) = B_r(v) ∩ C as absolute lattice points, lexicographically ordered.
    auto identifying_set(const PeriodicCode & code, const Point & v, Coord r) -> std::vector<Point>;

    /// The same infinite code described with periods f_i * p_i.
    auto inflate(const PeriodicCode & code, std::span<const Coord> factors) -> PeriodicCode;
}
