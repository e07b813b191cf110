#pragma once

// Low-complexity DCT approximation toolkit: exact dyadic linear algebra,
// minimal-angle searches, blocklength doubling, a factorized-transform
// catalog with add/shift cost accounting, merit figures under a Markov-1
// model, and a block image compression harness.

#include "lcdct/codec.hpp"
#include "lcdct/dct.hpp"
#include "lcdct/dyadic.hpp"
#include "lcdct/fastalg.hpp"
#include "lcdct/io.hpp"
#include "lcdct/matrix.hpp"
#include "lcdct/metrics.hpp"
#include "lcdct/reference.hpp"
#include "lcdct/scaling.hpp"
#include "lcdct/search.hpp"
