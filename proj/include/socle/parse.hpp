#pragma once

#include <string_view>

#include "socle/polynomial.hpp"

namespace socle {

/// Parse a polynomial in the plain text grammar: terms joined by + or -, each
/// term a product of factors separated by *, each factor an integer, a
/// fraction a/b, or a power v or v^k of a ring variable. Whitespace is
/// insignificant. Errors carry the offending position.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace socle
