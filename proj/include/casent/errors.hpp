// Copyright 2026 The casent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace casent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested quantity.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The argument is valid physics but outside the window the numerics support.
class UnsupportedRange : public DomainError
{
public:
    using DomainError::DomainError;
};

/// A root, minimum or fit could not be established to the requested accuracy.
class ConvergenceError : public Error
{
public:
    using Error::Error;
};

/// Command-line input does not follow the grammar.
class UsageError : public Error
{
public:
    using Error::Error;
};

/// An output destination could not be written.
class IoError : public Error
{
public:
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& what)
{
    if (!condition) throw DomainError(what);
}

}  // namespace detail
}  // namespace casent
