#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "img/automaton.hpp"
#include "img/word.hpp"

namespace img {

/// Word syntax:
///
///   expr     := term { ['*'] term }          product by '*' or whitespace
///   term     := atom { '^' exponent }
///   exponent := ['-'] integer | atom          power, or conjugation g^h = h^-1 g h
///   atom     := name | '1' | '(' expr ')' | '[' expr ',' expr {',' expr} ']'
///
/// Commutators are left-normed: [a,b,c] = [[a,b],c], with [a,b] = a^-1 b^-1 a b.
/// The result is the freely reduced word in the free group on `names`.
Word parse_free_word(std::string_view text, const std::vector<std::string>& names);

/// Parses over the automaton's state names and reduces in its group
/// (involutions cancel).
Word parse_word(std::string_view text, const AutomatonSpec& spec);

/// Letters separated by single spaces, inverses as "name^-1", identity "1".
std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_word(const Word& w, const AutomatonSpec& spec);

}  // namespace img
