#include <idcodes/checked.hh>
#include <idcodes/periodic_code.hh>

#include <algorithm>
#include <stdexcept>

namespace idcodes
{
    namespace
    {
        auto floor_mod(Coord a, Coord m) -> Coord
        {
            auto r = a % m;
            return r < 0 ? r + m : r;
        }
    }

    PeriodicCode::PeriodicCode(Metric metric, std::vector<Coord> periods, std::vector<Point> words) :
        _metric(metric),
        _periods(std::move(periods)),
        _words(std::move(words))
    {
        if (_periods.empty())
            throw std::invalid_argument("periodic code needs dimension >= 1");
        if (_metric == Metric::King && _periods.size() != 2)
            throw std::invalid_argument("king metric is only defined in dimension 2");
        for (auto p : _periods) {
            if (p < 1)
                throw std::invalid_argument("periods must be positive");
            _volume = checked_mul(_volume, p);
            if (_volume > max_box_volume)
                throw std::invalid_argument("fundamental box too large");
        }
        if (_words.empty())
            throw std::invalid_argument("a code must have at least one codeword");

        _member.assign(static_cast<std::size_t>(_volume), 0);
        for (const auto & w : _words) {
            if (w.dimension() != _periods.size())
                throw std::invalid_argument("codeword " + w.to_string() + " has the wrong dimension");
            for (std::size_t i = 0 ; i < w.dimension() ; ++i)
                if (w[i] < 0 || w[i] >= _periods[i])
                    throw std::invalid_argument("codeword " + w.to_string() + " lies outside the fundamental box");
            auto & slot = _member[static_cast<std::size_t>(box_index(w))];
            if (slot)
                throw std::invalid_argument("duplicate codeword " + w.to_string());
            slot = 1;
        }
        std::sort(_words.begin(), _words.end());
    }

    auto PeriodicCode::reduce(const Point & v) const -> Point
    {
        if (v.dimension() != _periods.size())
            throw std::invalid_argument("dimension mismatch: point " + v.to_string() + " against a code of dimension "
                    + std::to_string(_periods.size()));
        Point result = v;
        for (std::size_t i = 0 ; i < _periods.size() ; ++i)
            result[i] = floor_mod(v[i], _periods[i]);
        return result;
    }

    auto PeriodicCode::box_index(const Point & v) const -> std::int64_t
    {
        if (v.dimension() != _periods.size())
            throw std::invalid_argument("dimension mismatch: point " + v.to_string() + " against a code of dimension "
                    + std::to_string(_periods.size()));
        std::int64_t index = 0;
        for (std::size_t i = 0 ; i < _periods.size() ; ++i)
            index = index * _periods[i] + floor_mod(v[i], _periods[i]);
        return index;
    }

    auto PeriodicCode::contains(const Point & v) const -> bool
    {
        return _member[static_cast<std::size_t>(box_index(v))];
    }

    auto PeriodicCode::operator==(const PeriodicCode & other) const -> bool
    {
        return _metric == other._metric && _periods == other._periods && _words == other._words;
    }

    auto box_points(std::span<const Coord> periods) -> std::vector<Point>
    {
        std::int64_t volume = 1;
        for (auto p : periods) {
            if (p < 1)
                throw std::invalid_argument("periods must be positive");
            volume = checked_mul(volume, p);
        }
        if (volume > max_box_volume)
            throw std::invalid_argument("fundamental box too large");

        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(volume));
        Point current = Point::origin(periods.size());
        for (std::int64_t k = 0 ; k < volume ; ++k) {
            out.push_back(current);
            for (std::size_t i = periods.size() ; i-- > 0 ; ) {
                if (++current[i] < periods[i])
                    break;
                current[i] = 0;
            }
        }
        return out;
    }

    auto density(const PeriodicCode & code) -> Rational
    {
        return Rational(static_cast<std::int64_t>(code.words().size()), code.box_volume());
    }

    auto identifying_set(const PeriodicCode & code, const Point & v, Coord r) -> std::vector<Point>
    {
        if (v.dimension() != code.dimension())
            throw std::invalid_argument("dimension mismatch: point " + v.to_string() + " against a code of dimension "
                    + std::to_string(code.dimension()));
        std::vector<Point> result;
        for (auto & p : ball(v, r, code.metric()))
            if (code.contains(p))
                result.push_back(std::move(p));
        return result;
    }

    auto inflate(const PeriodicCode & code, std::span<const Coord> factors) -> PeriodicCode
    {
        if (factors.size() != code.dimension())
            throw std::invalid_argument("inflate needs one factor per coordinate");
        for (auto f : factors)
            if (f < 1)
                throw std::invalid_argument("inflation factors must be positive");

        std::vector<Coord> periods;
        for (std::size_t i = 0 ; i < factors.size() ; ++i)
            periods.push_back(checked_mul(code.periods()[i], factors[i]));

        std::vector<Point> words;
        for (const auto & shift : box_points(factors)) {
            for (const auto & w : code.words()) {
                Point p = w;
                for (std::size_t i = 0 ; i < p.dimension() ; ++i)
                    p[i] += shift[i] * code.periods()[i];
                words.push_back(std::move(p));
            }
        }
        return PeriodicCode(code.metric(), std::move(periods), std::move(words));
    }
}
