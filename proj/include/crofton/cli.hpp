#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crofton::cli {

enum Exit : int {
    ok = 0,
    parse_error = 2,
    consistency_error = 3,
    genericity_error = 4,
    precondition_error = 5,
};

// args excludes the program name. The RunReport goes to out, logs to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crofton::cli
