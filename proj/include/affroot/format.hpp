// Human-readable text for roots, letters and words.

#pragma once

#include <string>
#include <string_view>

#include "affroot/affine.hpp"

namespace affroot {

// "α1+2α2"; "0" for the zero vector.
std::string format_root(const Root& r);
// "2δ-α1", "δ", "α1+α2".
std::string format_affine(const AffineRoot& b);
std::string format_set(const AffineRootSet& s);
std::string format_set(const RootSet& s);

// "c1" for Classical(1), "a1" for Affine(1).
std::string format_letter(const AffineLetter& s);
std::string format_word(const AffineWord& w);
AffineLetter parse_letter(std::string_view token);
// Comma or space separated tokens; empty input gives the empty word.
AffineWord parse_word(std::string_view text);
// "1,2" or "{1,2}" or "" (empty set).
IndexSet parse_index_set(std::string_view text);

}  // namespace affroot
