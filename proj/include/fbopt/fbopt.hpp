#pragma once

#include "fbopt/errors.hpp"
#include "fbopt/performance.hpp"
#include "fbopt/scores.hpp"
#include "fbopt/ranking.hpp"
#include "fbopt/tradeoff.hpp"
#include "fbopt/random.hpp"
#include "fbopt/distributions.hpp"
#include "fbopt/analytic.hpp"
#include "fbopt/manifold.hpp"
#include "fbopt/ingest.hpp"
#include "fbopt/app.hpp"
