#pragma once

#include <idcodes/constructions.hh>

#include <map>
#include <span>
#include <stdexcept>

namespace idcodes
{
    class MalformedIdentifyingSet : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct LastCoordinate
    {
        Coord value = 0;
        /// Keyed by the column's codeword at height `value`.
        std::map<Point, Coord> distances;
    };

    /// Recovers the last coordinate l of v from I = I_r(v) under theorem5_code(p):
    /// every column of I is a contiguous run centred at height l, and a run of
    /// half-length h lies at distance r - h from v.
    auto decode_last_coordinate(std::span<const Point> identifying, const Theorem5Params & p) -> LastCoordinate;

    struct DecodeResult
    {
        Point vertex;
        std::map<Point, Coord> per_codeword_distances;
    };

    /// Recovers v from I_r(v). Throws MalformedIdentifyingSet if I is not the
    /// identifying set of any vertex.
    auto decode_vertex(std::span<const Point> identifying, const Theorem5Params & p) -> DecodeResult;
}
