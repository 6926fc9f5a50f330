#pragma once

#include "pospace/bits.hpp"
#include "pospace/carrier.hpp"
#include "pospace/constructions.hpp"
#include "pospace/corelation.hpp"
#include "pospace/dot.hpp"
#include "pospace/duality.hpp"
#include "pospace/enumeration.hpp"
#include "pospace/errors.hpp"
#include "pospace/isomorphism.hpp"
#include "pospace/json_io.hpp"
#include "pospace/monotone_map.hpp"
#include "pospace/oracles.hpp"
#include "pospace/outcome.hpp"
#include "pospace/parallel.hpp"
#include "pospace/pushout.hpp"
#include "pospace/relation.hpp"
#include "pospace/verify.hpp"
