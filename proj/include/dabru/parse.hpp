#pragma once

#include <string>

#include "dabru/daweyl.hpp"

namespace dabru {

// Element grammar:  pi{l=<int>, nu=[<ints>], k=<int>} t[<ints>] <word>
// with <word> = `e` or `s<i>` factors joined by `*` (affine indices, 0 = the
// affine node). Root grammar:  b[<finite-root-coords>; r=<int>; n=<int>].
// Parsing is strict up to whitespace; failures throw ParseError.

WP<AffineGround> parse_element(const AffineGround& g, const std::string& text);
DARootRN parse_root_rn(const AffineGround& g, const std::string& text);
DARoot<AffineGround> parse_root(const AffineGround& g, const std::string& text);

std::string format_element(const AffineGround& g, const WP<AffineGround>& x);
std::string format_root_rn(const DARootRN& c);

}  // namespace dabru
