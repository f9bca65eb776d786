// Copyright 2026 The hallmhd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hallmhd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical or analysis parameters outside their admissible range.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Generic eigen formulas were asked for at xi = 0.
class ZeroWavevectorError : public Error {
 public:
  using Error::Error;
};

/// The symbol is a Jordan block on the resonant shell; the eigenbasis
/// decomposition does not exist there.
class ResonantShellError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class BandOrderError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point Ohm iteration did not reach tolerance. Carries the
/// contraction estimate ||B||_inf / (beta eta) that governs the iteration.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double contraction_estimate)
      : Error(what), contraction_estimate_(contraction_estimate) {}
  double contraction_estimate() const { return contraction_estimate_; }

 private:
  double contraction_estimate_;
};

/// NaN / overflow detected during a solve or a time step.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Time step violates a stability bound; the message names the bound.
class StepSizeError : public Error {
 public:
  StepSizeError(const std::string& what, double bound) : Error(what), bound_(bound) {}
  double bound() const { return bound_; }

 private:
  double bound_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hallmhd
