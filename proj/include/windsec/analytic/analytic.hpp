#pragma once

#include "windsec/analytic/areas.hpp"
#include "windsec/analytic/constants.hpp"
#include "windsec/analytic/overlap.hpp"
#include "windsec/analytic/sector_integrals.hpp"
#include "windsec/analytic/types.hpp"
#include "windsec/analytic/winding_phase.hpp"
