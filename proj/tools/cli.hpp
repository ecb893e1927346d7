#ifndef TWOHOOK_TOOLS_CLI_HPP_
#define TWOHOOK_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twohook/errors.hpp"
#include "twohook/hookcore.hpp"

namespace twohook::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Parses "a-b,c-d,..." (possibly empty) into a graph on [n] containing the
// path. Throws UsageError naming the offending token.
GraphSpec parse_graph_spec(std::string_view text, int n);

// Parses "4,2,3,1".
ExponentVector parse_vector(std::string_view text);

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace twohook::cli

#endif  // TWOHOOK_TOOLS_CLI_HPP_
