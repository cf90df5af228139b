#pragma once

// Umbrella header for the library (the CLI lives in quadalg/cli.hpp).

#include "quadalg/errors.hpp"
#include "quadalg/scalar.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/algebra.hpp"
#include "quadalg/identities.hpp"
#include "quadalg/quadratic.hpp"
#include "quadalg/extensions.hpp"
#include "quadalg/isomorphy.hpp"
#include "quadalg/novikov.hpp"
#include "quadalg/catalog.hpp"
#include "quadalg/io.hpp"
