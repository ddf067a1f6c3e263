#ifndef BCPP_BCPP_HPP
#define BCPP_BCPP_HPP

#include "bcpp/app.hpp"
#include "bcpp/bench.hpp"
#include "bcpp/core.hpp"
#include "bcpp/exact.hpp"
#include "bcpp/galo.hpp"
#include "bcpp/gen.hpp"
#include "bcpp/io.hpp"
#include "bcpp/matching.hpp"
#include "bcpp/rational.hpp"
#include "bcpp/reduction.hpp"
#include "bcpp/verify.hpp"

#endif  // BCPP_BCPP_HPP
