#include "invgen/quad.hpp"

// The integrator is header-only (templates over the integrand); this
// translation unit only anchors the vtable-free types for the library.
namespace invgen {
static_assert(sizeof(QuadResult) > 0);
} // namespace invgen
