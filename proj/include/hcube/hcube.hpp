#pragma once

#include "hcube/codes.hpp"
#include "hcube/constructions.hpp"
#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"
#include "hcube/partition.hpp"
#include "hcube/quotient.hpp"
#include "hcube/report.hpp"
#include "hcube/search.hpp"
#include "hcube/verify.hpp"
#include "hcube/word.hpp"
