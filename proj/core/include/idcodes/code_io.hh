#pragma once

#include <idcodes/periodic_code.hh>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace idcodes
{
    /// Malformed input file.
    class FormatError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // Code files are JSON:
    //   {"dimension": 2, "metric": "king", "periods": [3, 3], "codewords": [[0, 0], [1, 2]]}

    auto read_code(std::istream & in) -> PeriodicCode;
    auto read_code_file(const std::string & path) -> PeriodicCode;
    auto write_code(std::ostream & out, const PeriodicCode & code) -> void;
    auto code_to_json_string(const PeriodicCode & code) -> std::string;

    // Dominating-set files are plain text, one binary word per line, all of length n.
    // Blank lines are ignored. Bit i of a word is character i of its line.

    using BinaryWord = std::uint64_t;

    struct WordList
    {
        int length = 0;
        std::vector<BinaryWord> words;
    };

    auto read_words(std::istream & in) -> WordList;
    auto read_words_file(const std::string & path) -> WordList;
    auto write_words(std::ostream & out, int length, const std::vector<BinaryWord> & words) -> void;

    auto word_to_string(BinaryWord w, int length) -> std::string;
    auto parse_word(const std::string & text) -> BinaryWord;
}
