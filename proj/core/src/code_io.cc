#include <idcodes/code_io.hh>

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using nlohmann::json;

namespace idcodes
{
    namespace
    {
        auto integer_field(const json & value, const std::string & what) -> Coord
        {
            if (! value.is_number_integer())
                throw FormatError(what + " must be an integer");
            return value.get<Coord>();
        }

        auto to_json(const PeriodicCode & code) -> json
        {
            json words = json::array();
            for (const auto & w : code.words())
                words.push_back(w.coords);
            return json{
                {"dimension", code.dimension()},
                {"metric", metric_name(code.metric())},
                {"periods", code.periods()},
                {"codewords", words}};
        }
    }

    auto read_code(std::istream & in) -> PeriodicCode
    {
        json doc;
        try {
            doc = json::parse(in);
        }
        catch (const json::parse_error & e) {
            throw FormatError(std::string("code file is not valid JSON: ") + e.what());
        }

        if (! doc.is_object())
            throw FormatError("code file must hold a JSON object");
        for (const char * key : {"dimension", "metric", "periods", "codewords"})
            if (! doc.contains(key))
                throw FormatError(std::string("code file is missing \"") + key + "\"");

        auto dimension = integer_field(doc["dimension"], "dimension");
        if (dimension < 1)
            throw FormatError("dimension must be positive");

        if (! doc["metric"].is_string())
            throw FormatError("metric must be a string");
        auto metric_text = doc["metric"].get<std::string>();
        Metric metric;
        if (metric_text == "l1")
            metric = Metric::L1;
        else if (metric_text == "king")
            metric = Metric::King;
        else
            throw FormatError("unknown metric \"" + metric_text + "\"");

        const auto & periods_json = doc["periods"];
        if (! periods_json.is_array() || static_cast<Coord>(periods_json.size()) != dimension)
            throw FormatError("periods must be an array of length dimension");
        std::vector<Coord> periods;
        for (const auto & p : periods_json)
            periods.push_back(integer_field(p, "period"));

        const auto & words_json = doc["codewords"];
        if (! words_json.is_array())
            throw FormatError("codewords must be an array");
        std::vector<Point> words;
        for (const auto & w : words_json) {
            if (! w.is_array() || static_cast<Coord>(w.size()) != dimension)
                throw FormatError("each codeword must be an array of length dimension");
            Point p;
            for (const auto & c : w)
                p.coords.push_back(integer_field(c, "coordinate"));
            words.push_back(std::move(p));
        }

        try {
            return PeriodicCode(metric, std::move(periods), std::move(words));
        }
        catch (const std::invalid_argument & e) {
            throw FormatError(std::string("invalid code: ") + e.what());
        }
    }

    auto read_code_file(const std::string & path) -> PeriodicCode
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open " + path);
        return read_code(in);
    }

    auto code_to_json_string(const PeriodicCode & code) -> std::string
    {
        return to_json(code).dump();
    }

    auto write_code(std::ostream & out, const PeriodicCode & code) -> void
    {
        out << code_to_json_string(code) << '\n';
    }

    auto word_to_string(BinaryWord w, int length) -> std::string
    {
        std::string s(static_cast<std::size_t>(length), '0');
        for (int i = 0 ; i < length ; ++i)
            if ((w >> i) & 1)
                s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    auto parse_word(const std::string & text) -> BinaryWord
    {
        if (text.empty() || text.size() > 63)
            throw FormatError("binary word must have length 1..63");
        BinaryWord w = 0;
        for (std::size_t i = 0 ; i < text.size() ; ++i) {
            if (text[i] == '1')
                w |= BinaryWord{1} << i;
            else if (text[i] != '0')
                throw FormatError("binary word contains '" + std::string(1, text[i]) + "'");
        }
        return w;
    }

    auto read_words(std::istream & in) -> WordList
    {
        WordList result;
        std::string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            try {
                auto w = parse_word(line);
                if (result.length == 0)
                    result.length = static_cast<int>(line.size());
                else if (result.length != static_cast<int>(line.size()))
                    throw FormatError("expected length " + std::to_string(result.length));
                result.words.push_back(w);
            }
            catch (const FormatError & e) {
                throw FormatError("line " + std::to_string(line_number) + ": " + e.what());
            }
        }
        if (result.words.empty())
            throw FormatError("no words");
        return result;
    }

    auto read_words_file(const std::string & path) -> WordList
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open " + path);
        return read_words(in);
    }

    auto write_words(std::ostream & out, int length, const std::vector<BinaryWord> & words) -> void
    {
        for (auto w : words)
            out << word_to_string(w, length) << '\n';
    }
}
