#pragma once

#include "hallforge/words.hpp"

namespace hallforge {

/// T'_{i,1} and T''_{i,-1} = sigma T'_{i,1} sigma.  The other two variants
/// need the bar involution, which does not exist at a fixed q.
enum class BraidVariant { t_prime_plus, t_second_minus, t_prime_minus, t_second_plus };

std::string variant_name(BraidVariant v);

/// Braid operator at the real vertex i on a word; e/f letters follow the
/// Borcherds-Bozec formulas and E/F letters the generalized Kac-Moody ones.
/// Throws DomainError at imaginary vertices and UnsupportedError for the
/// variants that need the bar involution.
GenWord braid_T(const CartanData& c, int i, const GenWord& w, BraidVariant v, int q);

/// The image of a single letter under T'_{i,1}.
GenWord braid_letter(const CartanData& c, int i, const GenSymbol& s, int q);

}  // namespace hallforge
