#pragma once

#include "ponyexpress/validate.hpp"

namespace pony {

// Mirror a two-sided instance across the origin (p -> -p). Rejects the
// one-sided pony variant, whose domain is not symmetric.
ValidatedInstance reflect(const ValidatedInstance& inst);

}  // namespace pony
