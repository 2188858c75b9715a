#pragma once

#include "sds/arith.hpp"
#include "sds/constructions.hpp"
#include "sds/error.hpp"
#include "sds/finite_field.hpp"
#include "sds/group.hpp"
#include "sds/group_ring.hpp"
#include "sds/search.hpp"
#include "sds/signed_set.hpp"
#include "sds/table1.hpp"
