#pragma once

// Umbrella header for the whole toolkit.

#include "bitstring.hpp"
#include "complexity.hpp"
#include "dyadic.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "lz78.hpp"
#include "machine.hpp"
#include "rng.hpp"
#include "shannon.hpp"
#include "structure.hpp"
