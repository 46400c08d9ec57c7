#pragma once

#include "kqg/closed_form.hpp"
#include "kqg/engine.hpp"
#include "kqg/gauss.hpp"
#include "kqg/hall.hpp"
#include "kqg/kronecker.hpp"
#include "kqg/laurent_poly.hpp"
#include "kqg/partition.hpp"
