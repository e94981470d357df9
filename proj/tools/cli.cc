#include "cli.hh"

#include <idcodes/bounds.hh>
#include <idcodes/code_io.hh>
#include <idcodes/constructions.hh>
#include <idcodes/decoder.hh>
#include <idcodes/search.hh>
#include <idcodes/verifier.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace idcodes::cli
{
    namespace
    {
        // Raised for input that parses but cannot be used (exit code 2).
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto parse_int_list(const std::string & text) -> std::vector<Coord>
        {
            std::vector<Coord> values;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    values.push_back(std::stoll(item, &used));
                    if (used != item.size())
                        throw std::invalid_argument(item);
                }
                catch (const std::logic_error &) {
                    throw UsageError("not an integer list: '" + text + "'");
                }
            }
            if (values.empty())
                throw UsageError("empty integer list");
            return values;
        }

        auto parse_schedule(const std::string & text) -> std::vector<std::pair<Coord, Coord>>
        {
            std::vector<std::pair<Coord, Coord>> schedule;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto x = item.find('x');
                if (x == std::string::npos)
                    throw UsageError("schedule entries look like 6x6, got '" + item + "'");
                auto p = parse_int_list(item.substr(0, x)), q = parse_int_list(item.substr(x + 1));
                if (p.size() != 1 || q.size() != 1 || p[0] < 1 || q[0] < 1)
                    throw UsageError("bad schedule entry '" + item + "'");
                schedule.emplace_back(p[0], q[0]);
            }
            if (schedule.empty())
                throw UsageError("empty schedule");
            return schedule;
        }

        auto summary(const PeriodicCode & code) -> std::string
        {
            std::string periods;
            for (auto p : code.periods())
                periods += (periods.empty() ? "" : "x") + std::to_string(p);
            return "dimension " + std::to_string(code.dimension()) + ", metric " + metric_name(code.metric())
                + ", periods " + periods + ", " + std::to_string(code.words().size()) + " codewords, density "
                + density(code).to_string();
        }

        auto emit_code(const PeriodicCode & code, const std::string & path, std::ostream & out) -> void
        {
            if (path.empty()) {
                write_code(out, code);
                return;
            }
            std::ofstream file(path);
            if (! file)
                throw UsageError("cannot write " + path);
            write_code(file, code);
            out << "wrote " << path << ": " << summary(code) << "\n";
        }

        auto emit_words(int n, const std::vector<BinaryWord> & words, const std::string & path, std::ostream & out) -> void
        {
            if (path.empty()) {
                write_words(out, n, words);
                return;
            }
            std::ofstream file(path);
            if (! file)
                throw UsageError("cannot write " + path);
            write_words(file, n, words);
            out << "wrote " << path << ": " << words.size() << " words of length " << n << "\n";
        }

        auto print_report(std::ostream & out, const std::string & label, const VerificationReport & report) -> void
        {
            out << label << ": " << verdict_name(report.verdict) << "\n";
            out << "  vertices checked: " << report.vertices_checked << "\n";
            out << "  pairs checked: " << report.pairs_checked << "\n";
            if (report.witness)
                out << "  witness: " << describe(*report.witness) << "\n";
        }

        struct Options
        {
            int n = 0;
            Coord r = 0;
            int m = 0;
            unsigned threads = 1;
            std::uint64_t max_nodes = SearchBudget{}.max_nodes;
            bool oracle = false;
            bool csv = false;
            std::string file;
            std::string output;
            std::string code_params;
            std::string ball_of;
            std::string schedule = "3x3,6x3,3x6,6x6,9x9";
            std::string target_density = "2/9";
        };
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{"Identifying codes on Z^n and the king grid: construct, verify, decode, search, bound."};
        app.name("idcodes");
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--threads", o.threads, "Worker threads for verification")->check(CLI::Range(1u, 256u));

        std::string action;

        auto construct = app.add_subcommand("construct", "Build a code and write it as JSON");
        construct->require_subcommand(1);
        auto c_t5 = construct->add_subcommand("theorem5", "Column code of spacing 2 r0 / (n + 2)");
        c_t5->add_option("--n", o.n, "Dimension")->required();
        c_t5->add_option("--r", o.r, "Radius")->required();
        c_t5->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
        auto c_dom = construct->add_subcommand("domset", "Lift a hypercube dominating set");
        c_dom->add_option("--file", o.file, "Dominating set, one binary word per line")->required();
        c_dom->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
        auto c_ham = construct->add_subcommand("hamming", "Lift the Hamming code of length 2^m - 1");
        c_ham->add_option("--m", o.m, "Hamming parameter m")->required();
        c_ham->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
        auto c_lift = construct->add_subcommand("lift4d", "Lift a king-grid code to L_4");
        c_lift->add_option("--king", o.file, "King-grid code file")->required();
        c_lift->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

        auto verify = app.add_subcommand("verify", "Check that a code is r-identifying");
        verify->add_option("--code", o.file, "Code file")->required();
        verify->add_option("--r", o.r, "Radius")->required();
        verify->add_flag("--oracle", o.oracle, "Cross-check on an inflated torus");

        auto dens = app.add_subcommand("density", "Exact density of a code");
        dens->add_option("--code", o.file, "Code file")->required();

        auto decode = app.add_subcommand("decode", "Recover a vertex from its identifying set under the column code");
        decode->add_option("--code-params", o.code_params, "N,R")->required();
        decode->add_option("--ball-of", o.ball_of, "X1,..,XN")->required();

        auto search = app.add_subcommand("search", "Search for codes and dominating sets");
        search->require_subcommand(1);
        auto s_king = search->add_subcommand("king", "Periodic king-grid identifying code");
        s_king->add_option("--schedule", o.schedule, "Comma-separated periods, e.g. 3x3,6x6");
        s_king->add_option("--target-density", o.target_density, "Exact density, e.g. 2/9");
        s_king->add_option("--max-nodes", o.max_nodes, "Node budget per period box");
        s_king->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
        auto s_dom = search->add_subcommand("domset", "Small dominating set of Q_n");
        s_dom->add_option("--n", o.n, "Hypercube dimension")->required();
        s_dom->add_option("--max-nodes", o.max_nodes, "Node budget per candidate size");
        s_dom->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

        auto bounds = app.add_subcommand("bounds", "Exact density bounds");
        bounds->require_subcommand(1);
        auto b_table = bounds->add_subcommand("table", "Bounds for r = 1 and n = 1..10");
        b_table->add_flag("--csv", o.csv, "CSV output");
        auto b_lower = bounds->add_subcommand("lower", "Shell-counting lower bound");
        auto b_upper = bounds->add_subcommand("upper", "Column-code upper bound");
        auto b_ratio = bounds->add_subcommand("ratio", "Upper over lower");
        for (auto b : {b_lower, b_upper, b_ratio}) {
            b->add_option("--n", o.n, "Dimension")->required();
            b->add_option("--r", o.r, "Radius")->required();
        }

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return success;
        }
        catch (const CLI::ParseError & e) {
            err << "idcodes: " << e.what() << "\n";
            return usage_error;
        }

        try {
            if (*c_t5) {
                emit_code(theorem5_code(theorem5_params(o.n, o.r)), o.output, out);
                return success;
            }
            if (*c_dom) {
                auto list = read_words_file(o.file);
                if (! is_dominating_set(list.words, list.length)) {
                    err << "idcodes: " << o.file << " does not dominate Q_" << list.length << "\n";
                    return failure;
                }
                emit_code(lift_dominating_set(DominatingSet(list.length, list.words)), o.output, out);
                return success;
            }
            if (*c_ham) {
                auto words = hamming_code(o.m);
                emit_code(lift_dominating_set(DominatingSet((1 << o.m) - 1, words)), o.output, out);
                return success;
            }
            if (*c_lift) {
                emit_code(lift_king_to_4d(read_code_file(o.file)), o.output, out);
                return success;
            }

            if (*verify) {
                auto code = read_code_file(o.file);
                if (o.r < 1)
                    throw UsageError("--r must be at least 1");
                out << "code: " << summary(code) << "\n";
                out << "radius: " << o.r << "\n";
                auto report = verify_identifying(code, o.r, o.threads);
                print_report(out, "verdict", report);
                int status = report.verdict == Verdict::Identifying ? success : failure;
                if (o.oracle) {
                    auto factors = oracle_inflation_factors(code, o.r);
                    auto torus = verify_torus_naive(inflate(code, factors), o.r);
                    print_report(out, "torus oracle", torus);
                    if (torus.verdict != report.verdict) {
                        err << "idcodes: torus oracle disagrees with the lattice verifier\n";
                        status = failure;
                    }
                }
                return status;
            }

            if (*dens) {
                auto code = read_code_file(o.file);
                out << density(code).to_string() << "\n";
                return success;
            }

            if (*decode) {
                auto params = parse_int_list(o.code_params);
                if (params.size() != 2)
                    throw UsageError("--code-params takes N,R");
                auto p = theorem5_params(static_cast<int>(params[0]), params[1]);
                Point v(parse_int_list(o.ball_of));
                if (v.dimension() != static_cast<std::size_t>(p.n))
                    throw UsageError("--ball-of needs " + std::to_string(p.n) + " coordinates");
                auto code = theorem5_code(p);
                auto identifying = identifying_set(code, v, p.r);
                out << "identifying set: " << identifying.size() << " codewords\n";
                try {
                    auto decoded = decode_vertex(identifying, p);
                    out << "vertex: " << decoded.vertex.to_string() << "\n";
                    return decoded.vertex == v ? success : failure;
                }
                catch (const MalformedIdentifyingSet & e) {
                    err << "idcodes: decoding failed: " << e.what() << "\n";
                    return failure;
                }
            }

            if (*s_king) {
                SearchBudget budget;
                budget.max_nodes = o.max_nodes;
                budget.period_schedule = parse_schedule(o.schedule);
                auto target = Rational::parse(o.target_density);
                auto result = search_king_schedule(target, budget);
                err << "search: " << status_name(result.status) << " after " << result.nodes << " nodes\n";
                if (! result.code)
                    return failure;
                emit_code(*result.code, o.output, out);
                return success;
            }

            if (*s_dom) {
                SearchBudget budget;
                budget.max_nodes = o.max_nodes;
                auto result = search_min_dominating_set(o.n, budget);
                err << "size " << result.words.size() << (result.proven_minimal ? " (proven minimal)" : " (not proven minimal)")
                    << ", density after lift " << Rational(static_cast<std::int64_t>(result.words.size()), std::int64_t{1} << o.n)
                    << "\n";
                emit_words(o.n, result.words, o.output, out);
                return success;
            }

            if (*b_table) {
                auto table = figure1_table();
                out << (o.csv ? render_table_csv(table) : render_table_text(table));
                return success;
            }
            if (*b_lower) {
                out << lower_bound_theorem3(o.n, o.r).to_string() << "\n";
                return success;
            }
            if (*b_upper) {
                out << upper_bound_theorem5(o.n, o.r).to_string() << "\n";
                return success;
            }
            if (*b_ratio) {
                out << bound_ratio(o.n, o.r).to_string() << "\n";
                return success;
            }
        }
        catch (const UsageError & e) {
            err << "idcodes: " << e.what() << "\n";
            return usage_error;
        }
        catch (const FormatError & e) {
            err << "idcodes: " << e.what() << "\n";
            return usage_error;
        }
        catch (const std::invalid_argument & e) {
            err << "idcodes: " << e.what() << "\n";
            return usage_error;
        }
        catch (const std::overflow_error & e) {
            err << "idcodes: " << e.what() << "\n";
            return usage_error;
        }

        err << "idcodes: no command\n";
        return usage_error;
    }
}
