#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oredet/majorant.hpp"

namespace oredet {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 1;
inline constexpr int precondition = 2;
// `check` found a failing instance, or an internal consistency check fired.
inline constexpr int verification_failure = 3;
}  // namespace exit_code

/// "N1,..,Nn;h1,..,hn". Throws InputError when malformed.
Majorant parse_majorant_arg(const std::string& s);

/// Entry point of the oredet tool. args[0] is the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oredet
