#include <idcodes/checked.hh>
#include <idcodes/lattice.hh>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace idcodes
{
    namespace
    {
        auto require_same_dimension(const Point & u, const Point & v) -> void
        {
            if (u.dimension() != v.dimension())
                throw std::invalid_argument("dimension mismatch: " + std::to_string(u.dimension())
                        + " vs " + std::to_string(v.dimension()));
        }

        auto abs_checked(Coord x) -> Coord
        {
            return x < 0 ? checked_sub(0, x) : x;
        }

        auto fill_l1(std::vector<Point> & out, std::vector<Coord> & prefix, std::size_t n, Coord remaining) -> void
        {
            if (prefix.size() == n) {
                out.emplace_back(prefix);
                return;
            }
            for (Coord x = -remaining ; x <= remaining ; ++x) {
                prefix.push_back(x);
                fill_l1(out, prefix, n, remaining - (x < 0 ? -x : x));
                prefix.pop_back();
            }
        }

        auto fill_cube(std::vector<Point> & out, std::vector<Coord> & prefix, std::size_t n, Coord r) -> void
        {
            if (prefix.size() == n) {
                out.emplace_back(prefix);
                return;
            }
            for (Coord x = -r ; x <= r ; ++x) {
                prefix.push_back(x);
                fill_cube(out, prefix, n, r);
                prefix.pop_back();
            }
        }
    }

    auto Point::operator+(const Point & other) const -> Point
    {
        require_same_dimension(*this, other);
        Point result = *this;
        for (std::size_t i = 0 ; i < coords.size() ; ++i)
            result.coords[i] = checked_add(coords[i], other.coords[i]);
        return result;
    }

    auto Point::operator-(const Point & other) const -> Point
    {
        require_same_dimension(*this, other);
        Point result = *this;
        for (std::size_t i = 0 ; i < coords.size() ; ++i)
            result.coords[i] = checked_sub(coords[i], other.coords[i]);
        return result;
    }

    auto Point::to_string() const -> std::string
    {
        std::string s = "(";
        for (std::size_t i = 0 ; i < coords.size() ; ++i) {
            if (i != 0)
                s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }

    auto operator<<(std::ostream & s, const Point & p) -> std::ostream &
    {
        return s << p.to_string();
    }

    auto metric_name(Metric m) -> std::string
    {
        switch (m) {
            case Metric::L1: return "l1";
            case Metric::King: return "king";
        }
        return "?";
    }

    auto distance(const Point & u, const Point & v, Metric m) -> Coord
    {
        require_same_dimension(u, v);
        if (m == Metric::King && u.dimension() != 2)
            throw std::invalid_argument("king metric is only defined in dimension 2");

        Coord result = 0;
        for (std::size_t i = 0 ; i < u.dimension() ; ++i) {
            auto d = abs_checked(checked_sub(u[i], v[i]));
            result = (m == Metric::L1) ? checked_add(result, d) : std::max(result, d);
        }
        return result;
    }

    auto ball_offsets(std::size_t n, Coord r, Metric m) -> std::vector<Point>
    {
        if (n == 0)
            throw std::invalid_argument("ball in dimension 0");
        if (r < 0)
            throw std::invalid_argument("negative radius");
        if (m == Metric::King && n != 2)
            throw std::invalid_argument("king metric is only defined in dimension 2");

        std::vector<Point> out;
        std::vector<Coord> prefix;
        prefix.reserve(n);
        if (m == Metric::L1) {
            out.reserve(static_cast<std::size_t>(ball_size(static_cast<std::int64_t>(n), r)));
            fill_l1(out, prefix, n, r);
        }
        else
            fill_cube(out, prefix, n, r);
        return out;
    }

    auto ball(const Point & center, Coord r, Metric m) -> std::vector<Point>
    {
        auto result = ball_offsets(center.dimension(), r, m);
        for (auto & p : result)
            p = p + center;
        return result;
    }

    auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        std::int64_t result = 1;
        for (std::int64_t i = 1 ; i <= k ; ++i) {
            // result * (n - k + i) is divisible by i at every step
            auto g = std::gcd(result, i);
            result = checked_mul(result / g, (n - k + i) / (i / g));
        }
        return result;
    }

    auto ball_size(std::int64_t n, std::int64_t r) -> std::int64_t
    {
        if (n < 1)
            throw std::invalid_argument("ball_size needs n >= 1");
        if (r < 0)
            throw std::invalid_argument("ball_size needs r >= 0");

        std::int64_t total = 0;
        for (std::int64_t k = 0 ; k <= std::min(n, r) ; ++k) {
            auto term = checked_mul(checked_mul(checked_pow(2, static_cast<int>(k)), binomial(n, k)), binomial(r, k));
            total = checked_add(total, term);
        }
        return total;
    }
}
