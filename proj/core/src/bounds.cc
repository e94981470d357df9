#include <idcodes/bounds.hh>
#include <idcodes/checked.hh>
#include <idcodes/constructions.hh>
#include <idcodes/search.hh>

#include <map>
#include <sstream>
#include <stdexcept>

namespace idcodes
{
    auto kind_name(BoundKind k) -> std::string
    {
        switch (k) {
            case BoundKind::LowerTheorem3: return "lower-shell";
            case BoundKind::LowerKarpovsky: return "lower-karpovsky";
            case BoundKind::UpperTheorem5: return "upper-column-code";
            case BoundKind::UpperDominatingSetLift: return "upper-domset-lift";
            case BoundKind::UpperKingLift: return "upper-king-lift";
            case BoundKind::TabulatedFigure1: return "tabulated";
        }
        return "?";
    }

    auto is_lower(BoundKind k) -> bool
    {
        return k == BoundKind::LowerTheorem3 || k == BoundKind::LowerKarpovsky;
    }

    auto is_upper(BoundKind k) -> bool
    {
        return k == BoundKind::UpperTheorem5 || k == BoundKind::UpperDominatingSetLift || k == BoundKind::UpperKingLift;
    }

    auto ceil_log2(std::int64_t x) -> int
    {
        if (x < 1)
            throw std::invalid_argument("ceil_log2 needs x >= 1");
        int bits = 0;
        while ((std::int64_t{1} << bits) < x)
            ++bits;
        return bits;
    }

    auto lower_bound_theorem3(int n, Coord r) -> Rational
    {
        if (n < 2 || r < 1)
            throw std::invalid_argument("shell lower bound needs n >= 2 and r >= 1");
        auto shell = checked_sub(ball_size(n, r + 1), ball_size(n, r - 1));
        return Rational(ceil_log2(2 * n + 1), shell);
    }

    auto lower_bound_karpovsky(int n) -> Rational
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        return Rational(1, n + 1);
    }

    auto upper_bound_theorem5(int n, Coord r) -> Rational
    {
        auto p = theorem5_params(n, r);
        return Rational(checked_pow(n + 2, n - 1),
                checked_mul(checked_pow(2, n), checked_pow(p.base_radius, n - 1)));
    }

    auto bound_ratio(int n, Coord r) -> Rational
    {
        return upper_bound_theorem5(n, r) / lower_bound_theorem3(n, r);
    }

    namespace
    {
        auto lifted_density(int n, std::vector<BinaryWord> words) -> Rational
        {
            return density(lift_dominating_set(DominatingSet(n, std::move(words))));
        }

        auto hamming_times_cube(int extra) -> std::vector<BinaryWord>
        {
            std::vector<BinaryWord> out;
            for (auto w : hamming_code(3))
                for (BinaryWord tail = 0 ; tail < (BinaryWord{1} << extra) ; ++tail)
                    out.push_back(w | (tail << 7));
            return out;
        }

        auto king_lift_density() -> Rational
        {
            SearchBudget budget;
            budget.period_schedule = {{3, 3}, {6, 3}, {3, 6}, {6, 6}, {9, 9}};
            auto found = search_king_schedule(Rational(2, 9), budget);
            if (! found.code)
                throw std::runtime_error("no density 2/9 king-grid code within the search budget");
            return density(lift_king_to_4d(*found.code));
        }
    }

    auto figure1_table() -> std::vector<BoundEntry>
    {
        const std::string karpovsky = "Karpovsky-Chakrabarty-Levitin: 1/(n+1)";
        std::vector<BoundEntry> t;

        auto lower = [&] (int n) { t.push_back({n, 1, BoundKind::LowerKarpovsky, lower_bound_karpovsky(n), karpovsky}); };
        auto lift = [&] (int n, std::vector<BinaryWord> words, const std::string & what) {
            auto size = words.size();
            t.push_back({n, 1, BoundKind::UpperDominatingSetLift, lifted_density(n, std::move(words)),
                    "dominating-set lift of " + what + " (|D| = " + std::to_string(size) + ")"});
        };

        SearchBudget budget;

        lower(1);
        lift(1, {0}, "{0}");

        t.push_back({2, 1, BoundKind::TabulatedFigure1, Rational(7, 20), "Ben-Haim and Litsyn (exact value, cited)"});

        lower(3);
        lift(3, hamming_code(2), "Hamming code m=2");

        lower(4);
        t.push_back({4, 1, BoundKind::UpperKingLift, king_lift_density(),
                "king-grid code of density 2/9 lifted to L_4"});

        lower(5);
        lift(5, search_min_dominating_set(5, budget).words, "searched minimum dominating set of Q_5");

        lower(6);
        lift(6, search_min_dominating_set(6, budget).words, "searched dominating set of Q_6");

        lower(7);
        lift(7, hamming_code(3), "Hamming code m=3");

        lower(8);
        lift(8, hamming_times_cube(1), "Hamming code m=3 times Q_1");

        lower(9);
        t.push_back({9, 1, BoundKind::TabulatedFigure1, Rational(31, 256),
                "dominating set of Q_9 of size 62 (Cohen et al., Table 6.1; supply a file to verify)"});

        lower(10);
        t.push_back({10, 1, BoundKind::TabulatedFigure1, Rational(15, 128),
                "dominating set of Q_10 of size 120 (Cohen et al., Table 6.1; supply a file to verify)"});
        return t;
    }

    auto render_table_text(const std::vector<BoundEntry> & entries) -> std::string
    {
        std::map<std::pair<int, Coord>, std::vector<const BoundEntry *>> rows;
        for (const auto & e : entries)
            rows[{e.n, e.r}].push_back(&e);

        std::ostringstream out;
        for (const auto & [key, row] : rows) {
            const BoundEntry * lo = nullptr;
            const BoundEntry * hi = nullptr;
            const BoundEntry * exact = nullptr;
            for (auto e : row) {
                if (is_lower(e->kind))
                    lo = e;
                else if (is_upper(e->kind))
                    hi = e;
                else
                    exact = e;
            }
            // a tabulated value stands in for the missing side
            if (exact && ! hi && lo)
                hi = exact;
            else if (exact && ! lo && ! hi)
                lo = hi = exact;

            std::string name = "D(L_" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
            bool equal = lo && hi && lo->value == hi->value;
            std::string left = lo && ! equal ? lo->value.to_string() + " <= " : "";
            out << std::string(left.size() < 14 ? 14 - left.size() : 0, ' ') << left << name;
            if (equal)
                out << " = " << lo->value.to_string();
            else if (hi)
                out << " <= " << hi->value.to_string();
            out << "\n";
            for (auto e : row)
                out << "                  " << kind_name(e->kind) << ": " << e->value.to_string() << "  [" << e->provenance << "]\n";
        }
        return out.str();
    }

    auto render_table_csv(const std::vector<BoundEntry> & entries) -> std::string
    {
        auto quote = [] (const std::string & s) {
            std::string q = "\"";
            for (char c : s) {
                if (c == '"')
                    q += '"';
                q += c;
            }
            return q + "\"";
        };

        std::ostringstream out;
        out << "n,r,kind,numerator,denominator,provenance\n";
        for (const auto & e : entries)
            out << e.n << "," << e.r << "," << kind_name(e.kind) << "," << e.value.numerator() << ","
                << e.value.denominator() << "," << quote(e.provenance) << "\n";
        return out.str();
    }
}
