#pragma once

#include "pgenum/bitset.hpp"
#include "pgenum/bpgkit.hpp"
#include "pgenum/catalog.hpp"
#include "pgenum/dataio.hpp"
#include "pgenum/error.hpp"
#include "pgenum/extender.hpp"
#include "pgenum/invariants.hpp"
#include "pgenum/reference_tables.hpp"
#include "pgenum/symcore.hpp"
#include "pgenum/wordset.hpp"
