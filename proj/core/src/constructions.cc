#include <idcodes/checked.hh>
#include <idcodes/constructions.hh>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace idcodes
{
    namespace
    {
        constexpr int max_hypercube_dimension = 24;

        auto floor_mod(Coord a, Coord m) -> Coord
        {
            auto r = a % m;
            return r < 0 ? r + m : r;
        }

        auto parity_code(const Theorem5Params & p, unsigned parity) -> PeriodicCode
        {
            validate(p);
            const auto free = p.n - 1;
            std::vector<Coord> periods(static_cast<std::size_t>(free), checked_mul(2, p.spacing));
            periods.push_back(1);

            std::vector<Point> words;
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << free) ; ++mask) {
                if (static_cast<unsigned>(std::popcount(mask) & 1) != parity)
                    continue;
                Point w = Point::origin(static_cast<std::size_t>(p.n));
                for (int i = 0 ; i < free ; ++i)
                    if ((mask >> i) & 1)
                        w[static_cast<std::size_t>(i)] = p.spacing;
                words.push_back(std::move(w));
            }
            return PeriodicCode(Metric::L1, std::move(periods), std::move(words));
        }

        auto base_unit(int n) -> Coord
        {
            return (n % 2 == 1) ? n + 2 : (n + 2) / 2;
        }
    }

    auto hamming_code(int m) -> std::vector<BinaryWord>
    {
        if (m < 2)
            throw std::invalid_argument("hamming_code needs m >= 2");
        if (m > 4)
            throw std::invalid_argument("hamming_code supports m <= 4");

        const int length = (1 << m) - 1;
        std::vector<BinaryWord> words;
        for (BinaryWord x = 0 ; x < (BinaryWord{1} << length) ; ++x) {
            unsigned syndrome = 0;
            for (int i = 0 ; i < length ; ++i)
                if ((x >> i) & 1)
                    syndrome ^= static_cast<unsigned>(i + 1);
            if (syndrome == 0)
                words.push_back(x);
        }
        return words;
    }

    auto is_dominating_set(std::span<const BinaryWord> words, int n) -> bool
    {
        if (n < 1 || n > max_hypercube_dimension)
            throw std::invalid_argument("hypercube dimension must be in 1.." + std::to_string(max_hypercube_dimension));
        const BinaryWord size = BinaryWord{1} << n;
        std::vector<char> covered(size, 0);
        for (auto w : words) {
            if (w >= size)
                throw std::invalid_argument("word " + std::to_string(w) + " is longer than " + std::to_string(n) + " bits");
            covered[w] = 1;
            for (int i = 0 ; i < n ; ++i)
                covered[w ^ (BinaryWord{1} << i)] = 1;
        }
        return std::all_of(covered.begin(), covered.end(), [] (char c) { return c != 0; });
    }

    DominatingSet::DominatingSet(int n, std::vector<BinaryWord> words) :
        _n(n),
        _words(std::move(words))
    {
        std::sort(_words.begin(), _words.end());
        _words.erase(std::unique(_words.begin(), _words.end()), _words.end());
        if (! is_dominating_set(_words, _n))
            throw std::invalid_argument("words do not dominate Q_" + std::to_string(_n));
    }

    auto lift_dominating_set(const DominatingSet & d) -> PeriodicCode
    {
        const auto n = static_cast<std::size_t>(d.n());
        std::vector<Point> words;
        for (auto w : d.words()) {
            Point p = Point::origin(n);
            for (std::size_t i = 0 ; i < n ; ++i)
                p[i] = static_cast<Coord>((w >> i) & 1);
            words.push_back(std::move(p));
        }
        return PeriodicCode(Metric::L1, std::vector<Coord>(n, 2), std::move(words));
    }

    auto phi(const Point & v) -> Point
    {
        if (v.dimension() != 4)
            throw std::invalid_argument("phi needs a point of dimension 4, got " + v.to_string());
        return Point{checked_sub(checked_sub(v[0], v[2]), v[3]), checked_add(checked_sub(v[1], v[2]), v[3])};
    }

    auto lift_king_to_4d(const PeriodicCode & king) -> PeriodicCode
    {
        if (king.dimension() != 2 || king.metric() != Metric::King)
            throw std::invalid_argument("lift_king_to_4d needs a two-dimensional king-grid code");

        const auto p = king.periods()[0], q = king.periods()[1];
        std::vector<Coord> periods;
        for (std::size_t i = 0 ; i < 4 ; ++i) {
            Point e = Point::origin(4);
            e[i] = 1;
            auto image = phi(e);
            Coord m = 1;
            while (floor_mod(m * image[0], p) != 0 || floor_mod(m * image[1], q) != 0)
                ++m;
            periods.push_back(m);
        }

        std::vector<Point> words;
        for (auto & v : box_points(periods))
            if (king.contains(phi(v)))
                words.push_back(std::move(v));
        return PeriodicCode(Metric::L1, std::move(periods), std::move(words));
    }

    auto theorem5_params(int n, Coord r) -> Theorem5Params
    {
        if (n < 2)
            throw std::invalid_argument("the column code needs n >= 2");
        auto unit = base_unit(n);
        if (r < unit)
            throw std::invalid_argument("radius " + std::to_string(r) + " is below the minimum " + std::to_string(unit)
                    + " for n = " + std::to_string(n));

        Theorem5Params p;
        p.n = n;
        p.r = r;
        p.base_radius = (r / unit) * unit;
        p.residue = r - p.base_radius;
        p.spacing = 2 * p.base_radius / (n + 2);
        return p;
    }

    auto validate(const Theorem5Params & p) -> void
    {
        if (p.n < 2)
            throw std::invalid_argument("column code parameters need n >= 2");
        auto unit = base_unit(p.n);
        if (p.base_radius < unit || p.base_radius % unit != 0)
            throw std::invalid_argument("base radius " + std::to_string(p.base_radius) + " is not a positive multiple of "
                    + std::to_string(unit));
        if (p.spacing != 2 * p.base_radius / (p.n + 2))
            throw std::invalid_argument("spacing must be 2 r0 / (n + 2)");
        if (p.n % 2 == 1 && p.spacing % 2 != 0)
            throw std::invalid_argument("spacing must be even for odd n");
        if (p.residue < 0 || p.residue != p.r - p.base_radius)
            throw std::invalid_argument("residue must be r - r0 >= 0");
    }

    auto theorem5_code(const Theorem5Params & p) -> PeriodicCode
    {
        return parity_code(p, 1);
    }

    auto reference_set_S(const Theorem5Params & p) -> PeriodicCode
    {
        return parity_code(p, 0);
    }
}
