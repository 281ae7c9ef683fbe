#pragma once

#include "ramanujan/asymptotics.hpp"
#include "ramanujan/identities.hpp"
#include "ramanujan/lambert.hpp"
#include "ramanujan/numerics.hpp"
#include "ramanujan/pv_quad.hpp"
#include "ramanujan/raabe.hpp"
#include "ramanujan/result.hpp"
