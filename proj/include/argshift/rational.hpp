#ifndef ARGSHIFT_RATIONAL_HPP
#define ARGSHIFT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "argshift/errors.hpp"

namespace argshift {

// All arithmetic in this library is exact over Q.  mpq_class values are kept
// canonical (reduced, positive denominator) by GMP as long as they are built
// through arithmetic; parsed values are canonicalized explicitly.
using Rat = mpq_class;

// Parses "num", "-num", or "num/den" (base 10).  Throws InputError on anything else.
Rat parse_rational(std::string_view text);

// Canonical form: "num" or "num/den" with positive denominator.
std::string format_rational(const Rat& value);

} // namespace argshift

#endif
