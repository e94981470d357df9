#include <idcodes/decoder.hh>

#include <algorithm>
#include <optional>

namespace idcodes
{
    namespace
    {
        auto fail(const std::string & why) -> void
        {
            throw MalformedIdentifyingSet(why);
        }

        struct RunEntry
        {
            Coord position;
            Coord distance;
        };

        // Chooses the consecutive pair (a, b) of a run along one axis whose decoded
        // distances are the two smallest, provided they are known to bracket v_i.
        // Distances along the run are |v_i - c_i| + D, a V shape in c_i.
        auto bracketing_pair(const std::vector<RunEntry> & run, Coord spacing) -> std::optional<std::pair<RunEntry, RunEntry>>
        {
            if (run.size() < 2)
                return std::nullopt;
            std::size_t m = 0;
            for (std::size_t j = 1 ; j < run.size() ; ++j)
                if (run[j].distance < run[m].distance)
                    m = j;

            const auto step = 2 * spacing;
            if (m == 0) {
                // v_i may lie before the run; only a gap under 2s proves it does not
                if (run[1].distance - run[0].distance < step)
                    return std::pair{run[0], run[1]};
                return std::nullopt;
            }
            if (m == run.size() - 1) {
                if (run[m - 1].distance - run[m].distance < step)
                    return std::pair{run[m - 1], run[m]};
                return std::nullopt;
            }
            if (run[m - 1].distance <= run[m + 1].distance)
                return std::pair{run[m - 1], run[m]};
            return std::pair{run[m], run[m + 1]};
        }
    }

    auto decode_last_coordinate(std::span<const Point> identifying, const Theorem5Params & p) -> LastCoordinate
    {
        validate(p);
        if (identifying.empty())
            fail("identifying set is empty");

        const auto n = static_cast<std::size_t>(p.n);
        const auto code = theorem5_code(p);

        std::map<std::vector<Coord>, std::vector<Coord>> columns;
        for (const auto & c : identifying) {
            if (c.dimension() != n)
                fail("point " + c.to_string() + " has the wrong dimension");
            if (! code.contains(c))
                fail("point " + c.to_string() + " is not a codeword");
            std::vector<Coord> base(c.coords.begin(), c.coords.end() - 1);
            columns[base].push_back(c.coords.back());
        }

        std::optional<Coord> height;
        LastCoordinate result;
        for (auto & [base, heights] : columns) {
            std::sort(heights.begin(), heights.end());
            if (std::adjacent_find(heights.begin(), heights.end()) != heights.end())
                fail("repeated codeword in identifying set");
            auto lo = heights.front(), hi = heights.back();
            if (hi - lo + 1 != static_cast<Coord>(heights.size()))
                fail("column has a gap");
            if ((lo + hi) % 2 != 0)
                fail("column has no integer midpoint");
            auto mid = (lo + hi) / 2;
            if (height && *height != mid)
                fail("columns disagree on the last coordinate");
            height = mid;

            auto d = p.r - (hi - mid);
            if (d < 0)
                fail("column is longer than the ball allows");
            Point key(base);
            key.coords.push_back(mid);
            result.distances.emplace(std::move(key), d);
        }
        result.value = *height;
        return result;
    }

    auto decode_vertex(std::span<const Point> identifying, const Theorem5Params & p) -> DecodeResult
    {
        auto last = decode_last_coordinate(identifying, p);
        const auto n = static_cast<std::size_t>(p.n);

        DecodeResult result;
        result.vertex = Point::origin(n);
        result.vertex[n - 1] = last.value;

        for (std::size_t i = 0 ; i + 1 < n ; ++i) {
            // lines parallel to e_i, keyed by the other free coordinates
            std::map<std::vector<Coord>, std::vector<RunEntry>> lines;
            for (const auto & [c, d] : last.distances) {
                std::vector<Coord> key;
                for (std::size_t j = 0 ; j + 1 < n ; ++j)
                    if (j != i)
                        key.push_back(c[j]);
                lines[key].push_back(RunEntry{c[i], d});
            }

            std::optional<Coord> decoded;
            for (auto & [key, entries] : lines) {
                std::sort(entries.begin(), entries.end(), [] (auto & a, auto & b) { return a.position < b.position; });
                std::size_t start = 0;
                for (std::size_t j = 1 ; j <= entries.size() && ! decoded ; ++j) {
                    if (j < entries.size() && entries[j].position - entries[j - 1].position == 2 * p.spacing)
                        continue;
                    std::vector<RunEntry> run(entries.begin() + static_cast<std::ptrdiff_t>(start),
                            entries.begin() + static_cast<std::ptrdiff_t>(j));
                    if (auto pair = bracketing_pair(run, p.spacing)) {
                        auto [a, b] = *pair;
                        auto twice = a.distance - b.distance + a.position + b.position;
                        if (twice % 2 != 0)
                            fail("coordinate " + std::to_string(i + 1) + " decodes to a half-integer");
                        decoded = twice / 2;
                    }
                    start = j;
                }
                if (decoded)
                    break;
            }
            if (! decoded)
                fail("no bracketing codeword pair along coordinate " + std::to_string(i + 1));
            result.vertex[i] = *decoded;
        }

        for (const auto & [c, d] : last.distances)
            if (distance(result.vertex, c, Metric::L1) != d)
                fail("decoded vertex " + result.vertex.to_string() + " is inconsistent with the column distances");

        std::vector<Point> given(identifying.begin(), identifying.end());
        std::sort(given.begin(), given.end());
        if (identifying_set(theorem5_code(p), result.vertex, p.r) != given)
            fail("decoded vertex " + result.vertex.to_string() + " does not reproduce the identifying set");

        result.per_codeword_distances = std::move(last.distances);
        return result;
    }
}
