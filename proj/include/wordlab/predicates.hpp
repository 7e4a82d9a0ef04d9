#pragma once

#include <string>
#include <string_view>

#include "wordlab/patterns.hpp"

namespace wordlab {

/// Freeness predicate from a short name:
///   square-free, cube-free, overlap-free, N-power-free, p/q-free, p/q+-free,
///   pattern:<pattern>,
///   abelian-square-free, abelian-cube-free, abelian:n[,min_period],
///   kabelian:k,n[,min_period], additive:n[,min_period],
///   abelian-fractional:s  (abelian s-powers, 1 < s <= 2).
/// `alphabet_size` sizes the counting checkers of the abelian kinds.
FreenessPredicate parse_predicate(std::string_view spec, std::size_t alphabet_size);

/// Names accepted by parse_predicate, for help texts.
std::string predicate_syntax();

}  // namespace wordlab
