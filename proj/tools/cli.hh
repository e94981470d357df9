#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idcodes::cli
{
    enum ExitCode : int
    {
        success = 0,
        failure = 1,       // not identifying, proven absence, or a failed property
        usage_error = 2    // malformed flags or input files
    };

    /// Runs one `idcodes` command. `args` excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
