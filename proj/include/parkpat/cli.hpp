#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parkpat {

// Exit codes: 0 ok, 1 usage or parse error, 2 verification mismatch, 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace parkpat
