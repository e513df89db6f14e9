#pragma once

// Umbrella header for the whole library.

#include "rsd/classify.hpp"
#include "rsd/descriptor.hpp"
#include "rsd/field.hpp"
#include "rsd/lattice.hpp"
#include "rsd/laurent.hpp"
#include "rsd/linalg.hpp"
#include "rsd/modfile.hpp"
#include "rsd/module_type.hpp"
#include "rsd/poly.hpp"
#include "rsd/rsdmod.hpp"
#include "rsd/sampling.hpp"
#include "rsd/scalar_io.hpp"
