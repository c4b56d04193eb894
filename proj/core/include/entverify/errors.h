// Copyright 2026 The entverify Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entverify {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the caller's arguments was violated.
class UsageError : public Error {
   public:
    using Error::Error;
};

/// Input exceeds a fixed size bound (dense expansion, statevector width, ...).
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// A circuit cannot be mapped onto the device.
class CompilationError : public Error {
   public:
    using Error::Error;
};

/// A local filter removed (numerically) all of the state's weight.
class AnnihilationError : public Error {
   public:
    using Error::Error;
};

/// Tomography data is missing settings or shots needed for reconstruction.
class IncompleteDataError : public Error {
   public:
    using Error::Error;
};

/// Postselection left nothing to reconstruct from.
class DegenerateDataError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string &what, std::size_t line = 0) : Error(what), line_(line) {
    }
    /// 1-based line number of the offending record, 0 when not line oriented.
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace entverify
