#pragma once

#include "rlat/algebra.hpp"
#include "rlat/bn.hpp"
#include "rlat/builtins.hpp"
#include "rlat/convexity.hpp"
#include "rlat/dot.hpp"
#include "rlat/enumeration.hpp"
#include "rlat/error.hpp"
#include "rlat/lattice.hpp"
#include "rlat/law.hpp"
#include "rlat/normality.hpp"
#include "rlat/partition.hpp"
#include "rlat/report.hpp"
#include "rlat/spectrum.hpp"
#include "rlat/structures.hpp"
#include "rlat/subset.hpp"
#include "rlat/term.hpp"
#include "rlat/text_format.hpp"
