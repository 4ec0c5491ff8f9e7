#pragma once

// Umbrella header.

#include "unelgamal/codec.hpp"      // IWYU pragma: export
#include "unelgamal/dlog.hpp"       // IWYU pragma: export
#include "unelgamal/elgamal.hpp"    // IWYU pragma: export
#include "unelgamal/errors.hpp"     // IWYU pragma: export
#include "unelgamal/group.hpp"      // IWYU pragma: export
#include "unelgamal/keyio.hpp"      // IWYU pragma: export
#include "unelgamal/modmath.hpp"    // IWYU pragma: export
#include "unelgamal/natural.hpp"    // IWYU pragma: export
