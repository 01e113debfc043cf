// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "doctest.h"

namespace spherepot::test {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace spherepot::test

// Relative comparison with the tolerance printed on failure.
#define CHECK_REL(got, want, tol)                                                   \
  do {                                                                              \
    const double got_ = (got);                                                      \
    const double want_ = (want);                                                    \
    INFO("got ", got_, " want ", want_);                                            \
    CHECK(::spherepot::test::rel_err(got_, want_) <= (tol));                        \
  } while (0)

#define CHECK_ABS(got, want, tol)                                                   \
  do {                                                                              \
    const double got_ = (got);                                                      \
    const double want_ = (want);                                                    \
    INFO("got ", got_, " want ", want_);                                            \
    CHECK(std::abs(got_ - want_) <= (tol));                                         \
  } while (0)
