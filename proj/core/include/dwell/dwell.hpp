#pragma once

#include "dwell/basis.hpp"
#include "dwell/cho.hpp"
#include "dwell/errors.hpp"
#include "dwell/format.hpp"
#include "dwell/measures.hpp"
#include "dwell/potential.hpp"
#include "dwell/qho.hpp"
#include "dwell/quadrature.hpp"
#include "dwell/semiclassics.hpp"
#include "dwell/sweep.hpp"
#include "dwell/wavefunction.hpp"
