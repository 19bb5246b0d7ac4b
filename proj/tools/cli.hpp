#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qvlab/cuts.hpp"

namespace qvlab::cli {

// Exit codes: 0 success, 1 failed check or audit (witness printed),
// 2 usage, parse or validation error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_error = 2;

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);


/// Grammar:
///   expr    := sum [ "<=>" sum ]
///   sum     := term { "+" term } { "-" group }
///   term    := [ n "*" ] atom
///   atom    := BOT | TOP | INF | AM(j;b1,...,bk) | PHI(g) | "(" sum ")"
///   group   := "(" c1,...,ck ")"
/// "- g" translates by -g. A comparison prints "<", "=" or ">".
/// `default_rank` is used when no atom fixes the rank.
std::string eval_cut_expression(std::string_view expr, std::size_t default_rank = 1);

} // namespace qvlab::cli
