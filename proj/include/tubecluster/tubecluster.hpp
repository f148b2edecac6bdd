#pragma once

#include "cliques.hpp"
#include "error.hpp"
#include "exact_rank.hpp"
#include "io.hpp"
#include "mutation.hpp"
#include "polygon.hpp"
#include "rigid.hpp"
#include "tube.hpp"
#include "verify.hpp"
