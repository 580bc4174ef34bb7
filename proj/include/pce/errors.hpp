// Copyright 2026 The PCE Channels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count, or an index is out of range.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// The request exceeds a materialization or enumeration limit.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// tau_0 = 0: the map does not preserve the trace.
class TracePreservationError : public Error {
  public:
    using Error::Error;
};

/// A PCE map that is not completely positive was passed where a channel is required.
class NotAChannelError : public Error {
  public:
    using Error::Error;
};

/// A Choi spectrum that does not invert to a 0/1 tau vector.
class NotPceSpectrumError : public Error {
  public:
    using Error::Error;
};

/// Index set is not a maximal commuting, closed set of Pauli strings.
class InvalidStabilizerSetError : public Error {
  public:
    using Error::Error;
};

/// Malformed numeric input (non-Hermitian matrix, negative rate or time, ...).
class ValueError : public Error {
  public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace pce
