#pragma once

#include "karp/arcs.hpp"
#include "karp/error.hpp"
#include "karp/farey.hpp"
#include "karp/io.hpp"
#include "karp/matrices.hpp"
#include "karp/polynomial.hpp"
#include "karp/polyroots.hpp"
#include "karp/region.hpp"
#include "karp/verify.hpp"
