#ifndef PERMV_ERRORS_HPP
#define PERMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed polynomial/shape/config text.
struct parse_error : error {
    using error::error;
};

// Operands bound to different rings or monomial orders.
struct ring_mismatch : error {
    using error::error;
};

// A resource cap was hit; the computation is abandoned, never truncated.
struct cap_exceeded : error {
    using error::error;
};

// Precondition violations: invalid shapes, zero divisors, char-2 refusals.
struct domain_error : error {
    using error::error;
};

// Shape outside the classified table (t >= 3, or unknown family data).
struct unclassified_error : error {
    using error::error;
};

} // namespace permv

#endif
