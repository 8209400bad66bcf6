#pragma once

#include <string>
#include <string_view>

#include "invschub/permutation.hpp"

namespace invschub {

enum class Notation { automatic, one_line, cycles, word };

Notation parse_notation_name(std::string_view name);

// "2341", or separated entries such as "10 2 3 4 5 6 7 8 9 1".
Permutation parse_one_line(std::string_view text);
// "(1,4)(2,3)"; "()" and "" denote the identity.  Longer cycles are accepted.
Permutation parse_cycles(std::string_view text);
// "s3 s5 s4" or "3 5 4".
Word parse_word(std::string_view text);
// Dispatches on the notation; automatic picks cycles for '(', word for 's', else one-line.
Permutation parse_permutation(std::string_view text, Notation notation = Notation::automatic);

// Digits are concatenated when n <= 9, otherwise space separated.
std::string format_one_line(const Permutation& w, int n);
std::string format_one_line(const Permutation& w);
std::string format_cycles(const Permutation& w);
std::string format_word(const Word& word);

}  // namespace invschub
