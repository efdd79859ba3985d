#pragma once

#include "trunco/rational.hpp"
#include "trunco/matrix.hpp"
#include "trunco/root_datum.hpp"
#include "trunco/kl.hpp"
#include "trunco/trunc_weights.hpp"
#include "trunco/characters.hpp"
#include "trunco/oracle.hpp"
#include "trunco/engine.hpp"
#include "trunco/json_io.hpp"
