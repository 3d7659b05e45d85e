#pragma once

#include "rdist/error.hpp"
#include "rdist/graph.hpp"
#include "rdist/io.hpp"
#include "rdist/linalg.hpp"
#include "rdist/matrix.hpp"
#include "rdist/products.hpp"
#include "rdist/rational.hpp"
#include "rdist/resistance.hpp"
