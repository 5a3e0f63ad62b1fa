#pragma once

#include "moduli/arith.hpp"
#include "moduli/brauer.hpp"
#include "moduli/core.hpp"
#include "moduli/descent.hpp"
#include "moduli/genericity.hpp"
#include "moduli/hecke.hpp"
#include "moduli/mu.hpp"
#include "moduli/serialize.hpp"
#include "moduli/sweep.hpp"
