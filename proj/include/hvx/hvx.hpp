#pragma once

#include "hvx/core.hpp"
#include "hvx/dominance.hpp"
#include "hvx/bounding.hpp"
#include "hvx/hv_exact.hpp"
#include "hvx/contributions.hpp"
#include "hvx/hssp.hpp"
#include "hvx/oracles.hpp"
