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

// Reference digit strings. Euler's gamma and pi are the standard published
// expansions (OEIS A001620, A000796), truncated to 50 decimals; the others
// are the customary literature values of the constants, truncated to the
// digits in common use. Computed values are checked against these.

#ifndef PRIMEFRAC_CONSTANTS_HPP_
#define PRIMEFRAC_CONSTANTS_HPP_

#include <string_view>

namespace primefrac::reference {

inline constexpr std::string_view kEulerGamma =
    "0.57721566490153286060651209008240243104215933593992";
inline constexpr std::string_view kPi =
    "3.14159265358979323846264338327950288419716939937510";
// Khinchin K0 (A002210).
inline constexpr std::string_view kKhinchin = "2.68545200106530644530971483548179569382038229399446";
// Levy exp(pi^2 / (12 ln 2)) (A086702).
inline constexpr std::string_view kLevy = "3.27582291872181115978768188245384386360847552598237";
// Twin prime constant in the 2 * prod (1 - 1/(p-1)^2) normalization.
inline constexpr std::string_view kTwinC2 = "1.3203236316937391478556242200291115568652467205694";
// Hardy-Littlewood constant for primes m^2 + 1.
inline constexpr std::string_view kQuadCq = "1.372813462818246009112192696727";
// li(2).
inline constexpr std::string_view kLi2 = "1.04516378011749278484458888919461313652261557815120";

}  // namespace primefrac::reference

#endif  // PRIMEFRAC_CONSTANTS_HPP_
