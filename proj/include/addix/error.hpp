/*
   Copyright 2026 The addix Authors

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

#ifndef ADDIX_ERROR_HPP
#define ADDIX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace addix {

/// Malformed textual input (field spec, polynomial, code list).
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain: reducible modulus, division by the
/// zero polynomial, a non-permutation passed to an inversion, and so on.
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold for every valid input failed.
/// Carries a human-readable counterexample.
class InvariantViolation : public std::logic_error {
   public:
    InvariantViolation(const std::string& what, std::string counterexample = {})
        : std::logic_error(what), counterexample_(std::move(counterexample)) {}

    const std::string& counterexample() const noexcept { return counterexample_; }

   private:
    std::string counterexample_;
};

}  // namespace addix

#endif
