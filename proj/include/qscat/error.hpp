/* Copyright 2026 The qscat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** @file qscat/error.hpp
 *  @brief Exception hierarchy for the qscat library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qscat {

/// Base class of every exception thrown by qscat.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed potential file. Carries the 1-based line number when known.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit parse_error(const std::string& msg) : error(msg), line_(0) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Invalid argument or violated value-level precondition (E <= 0, n = 0, ...).
class domain_error : public error {
public:
  using error::error;
};

/// Evanescent growth beyond what double precision can represent.
class overflow_error : public error {
public:
  explicit overflow_error(const std::string& msg, int segment_index = -1)
      : error(msg), segment_(segment_index) {}
  int segment_index() const noexcept { return segment_; }

private:
  int segment_;
};

/// Requested a resonance-only computation at an energy that is not a
/// certified resonance. Carries the measured reflection residual |R|^2.
class precondition_error : public error {
public:
  precondition_error(const std::string& msg, double residual)
      : error(msg), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// Iterative refinement failed to settle (e.g. phase unwrapping).
class convergence_error : public error {
public:
  using error::error;
};

/// The reference current j(x_0) vanishes, so relative uniformity is undefined.
class zero_current_error : public error {
public:
  using error::error;
};

}  // namespace qscat
