/* cli.hpp -- command line driver, callable in-process from tests. */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptsep {
namespace cli {

/// Runs the tool on `args` (without the program name). Exit code 0 is the
/// affirmative answer (separable, piecewise testable, witness produced),
/// 1 the negative one, 2 a usage, input or resource error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace ptsep
