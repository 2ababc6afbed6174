/*
   Copyright 2026 The extremal-designs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXTREMAL_ERRORS_HPP
#define EXTREMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extremal {

// argument outside the mathematical domain of an operation (negative k, index past degree, ...)
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// extremal code of the requested length is known not to exist
class RangeError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

// a result that must be exact/integral/nonnegative was not; always a bug
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

// (family, k) pair or parameter combination the analysis does not cover
class UnsupportedCase : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace extremal

#endif
