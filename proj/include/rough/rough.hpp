#pragma once

#include "rough/approx.hpp"
#include "rough/cera.hpp"
#include "rough/counting.hpp"
#include "rough/crad.hpp"
#include "rough/error.hpp"
#include "rough/expr.hpp"
#include "rough/granular.hpp"
#include "rough/model.hpp"
#include "rough/negation.hpp"
#include "rough/opposition.hpp"
#include "rough/parthood.hpp"
#include "rough/prerough.hpp"
#include "rough/propsys.hpp"
#include "rough/random.hpp"
#include "rough/report.hpp"
#include "rough/subset.hpp"
