#pragma once

#include "subcensus/biguint.hpp"
#include "subcensus/formulas.hpp"
#include "subcensus/gf2linalg.hpp"
#include "subcensus/grouptable.hpp"
#include "subcensus/oracle.hpp"
#include "subcensus/quadform.hpp"
#include "subcensus/specparse.hpp"
#include "subcensus/verify.hpp"

namespace subcensus {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subcensus
