#pragma once

#include <idcodes/code_io.hh>
#include <idcodes/periodic_code.hh>

#include <span>
#include <vector>

namespace idcodes
{
    /// The perfect one-error-correcting code of length 2^m - 1 whose parity-check
    /// matrix has the binary expansions of 1 .. 2^m - 1 as columns. Supported for
    /// 2 <= m <= 4; throws std::invalid_argument otherwise.
    auto hamming_code(int m) -> std::vector<BinaryWord>;

    /// True iff every word of {0,1}^n is within Hamming distance 1 of some word.
    /// Throws std::invalid_argument if a word has bits at or above position n.
    auto is_dominating_set(std::span<const BinaryWord> words, int n) -> bool;

    /// A closed dominating set of the hypercube Q_n (1 <= n <= 24).
    class DominatingSet
    {
        public:
            /// Throws std::invalid_argument if the words do not dominate Q_n.
            DominatingSet(int n, std::vector<BinaryWord> words);

            auto n() const -> int { return _n; }
            auto words() const -> const std::vector<BinaryWord> & { return _words; }

        private:
            int _n;
            std::vector<BinaryWord> _words;
    };

    /// Periods all 2, words are the elements of D read as 0/1 points. Density |D| / 2^n.
    auto lift_dominating_set(const DominatingSet & d) -> PeriodicCode;

    /// The projection Z^4 -> Z^2 that forgets the (1,1,1,0) and (1,-1,0,1) directions:
    /// v = (x, y, 0, 0) + i (1,1,1,0) + j (1,-1,0,1) maps to (x, y).
    auto phi(const Point & v) -> Point;

    /// {v in Z^4 : phi(v) in king}. Periods are the least m > 0 with phi(m e_i) in the
    /// king code's period lattice. Throws unless `king` is a two-dimensional King code.
    auto lift_king_to_4d(const PeriodicCode & king) -> PeriodicCode;

    /**
     * Parameters of the column code on Z^n. For odd n the base radius r0 is a
     * multiple of n + 2; for even n a multiple of (n + 2) / 2. The spacing is
     * s = 2 r0 / (n + 2) and the residue is r - r0.
     */
    struct Theorem5Params
    {
        int n = 0;
        Coord r = 0;
        Coord residue = 0;
        Coord base_radius = 0;
        Coord spacing = 0;

        auto operator==(const Theorem5Params &) const -> bool = default;
    };

    /// Largest valid r0 <= r. Throws std::invalid_argument if n < 2 or r is below
    /// n + 2 (odd n) or (n + 2) / 2 (even n).
    auto theorem5_params(int n, Coord r) -> Theorem5Params;

    /// Throws std::invalid_argument unless the fields satisfy the invariants above.
    auto validate(const Theorem5Params & p) -> void;

    /// Points (s x_1, ..., s x_{n-1}, l) with x_1 + ... + x_{n-1} odd. Periods
    /// (2s, ..., 2s, 1); density 1 / (2 s^{n-1}).
    auto theorem5_code(const Theorem5Params & p) -> PeriodicCode;

    /// The even-parity counterpart of theorem5_code: the reference points whose
    /// corners s ± s e_i are codewords.
    auto reference_set_S(const Theorem5Params & p) -> PeriodicCode;
}
