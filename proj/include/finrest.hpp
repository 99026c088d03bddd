#pragma once

#include "finrest/action.hpp"
#include "finrest/core.hpp"
#include "finrest/em_set.hpp"
#include "finrest/etale.hpp"
#include "finrest/generators.hpp"
#include "finrest/json_io.hpp"
#include "finrest/matched_pair.hpp"
#include "finrest/report.hpp"
#include "finrest/restriction.hpp"
