// Copyright 2026 The primefrac Authors
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

#ifndef PRIMEFRAC_ERRORS_HPP_
#define PRIMEFRAC_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace primefrac {

// Argument outside an operation's mathematical domain (zero denominator,
// composite exponent, unsupported Bessel order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed decimal text. `position` is the byte offset of the first bad
// character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input precision too low for the requested diagnostic, or a product-based
// constant asked for more digits than its cutoff supports.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& message, std::int64_t achievable_digits)
      : std::runtime_error(message), achievable_digits_(achievable_digits) {}
  std::int64_t achievable_digits() const { return achievable_digits_; }

 private:
  std::int64_t achievable_digits_;
};

}  // namespace primefrac

#endif  // PRIMEFRAC_ERRORS_HPP_
