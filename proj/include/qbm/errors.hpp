// Copyright 2026 The qblockmatch Authors
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

namespace qbm {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Register size beyond what the dense simulator supports.
struct CapacityError : Error {
    using Error::Error;
};

/// Qubit index outside the state's register.
struct IndexError : Error {
    using Error::Error;
};

/// Mismatched dimensions (vector lengths, image sizes, register counts).
struct ShapeError : Error {
    using Error::Error;
};

/// Parameter outside its documented domain.
struct ArgumentError : Error {
    using Error::Error;
};

/// Classical data that cannot be amplitude-encoded (e.g. a zero vector).
struct EncodingError : Error {
    using Error::Error;
};

/// Gate kind the basis decomposition does not handle.
struct DecompositionError : Error {
    using Error::Error;
};

/// Malformed or unsupported file contents.
struct FormatError : Error {
    using Error::Error;
};

/// A search that has no valid candidate to evaluate.
struct SearchError : Error {
    using Error::Error;
};

}  // namespace qbm
