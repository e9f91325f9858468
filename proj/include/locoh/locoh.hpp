#pragma once

/// Umbrella header.

#include "locoh/caps.hpp"
#include "locoh/cohomology.hpp"
#include "locoh/errors.hpp"
#include "locoh/groupspec.hpp"
#include "locoh/intmat.hpp"
#include "locoh/matgroup.hpp"
#include "locoh/modring.hpp"
#include "locoh/report.hpp"
#include "locoh/submodule.hpp"
#include "locoh/torus.hpp"
