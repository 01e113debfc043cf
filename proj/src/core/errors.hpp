// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spherepot {

/// Base class of every error raised by the library. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series hit SeriesPolicy::max_terms before its stopping rule fired.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, long long terms)
      : Error(what), terms_(terms) {}
  long long terms() const noexcept { return terms_; }

 private:
  long long terms_;
};

/// Two points of a configuration coincide (chordal distance below 1e-14).
class CoincidentPointsError : public Error {
 public:
  CoincidentPointsError(std::size_t i, std::size_t j, double distance)
      : Error("points " + std::to_string(i) + " and " + std::to_string(j) +
              " coincide (chordal distance " + std::to_string(distance) + ")"),
        first_(i),
        second_(j) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Adaptive quadrature could not meet its error target.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or record.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File system failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spherepot
