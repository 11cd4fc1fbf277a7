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

// Prime generation: segmented sieve, primality tests, and the prime
// families whose members become partial quotients.

#ifndef PRIMEFRAC_PRIMES_HPP_
#define PRIMEFRAC_PRIMES_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primefrac/exactnum.hpp"
#include "primefrac/quotient_source.hpp"

namespace primefrac {

// ---------------------------------------------------------------- sieving

struct SieveOptions {
  std::uint64_t segment_size = std::uint64_t{1} << 20;  // numbers per segment
  unsigned threads = 1;
};

// Primality map of [start, end): bits[i] == 1 iff start + i is prime.
struct SieveSegment {
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  std::vector<std::uint8_t> bits;
};

// Primes <= limit, ascending. Empty for limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, const SieveOptions& options = {});

// Single-array sieve of Eratosthenes; reference for the segmented one.
std::vector<std::uint64_t> sieve_primes_monolithic(std::uint64_t limit);

// Sieves [start, end) with the given base primes, which must include every
// prime <= sqrt(end - 1).
SieveSegment sieve_segment(std::uint64_t start, std::uint64_t end,
                           const std::vector<std::uint64_t>& base_primes);

// Pull-based ascending prime enumeration up to `limit`, one segment in
// memory at a time. Not safe for concurrent pulls.
class PrimeCursor {
 public:
  explicit PrimeCursor(std::uint64_t limit, std::uint64_t segment_size = std::uint64_t{1} << 20);
  std::optional<std::uint64_t> next();
  std::uint64_t limit() const { return limit_; }

 private:
  void refill();

  std::uint64_t limit_;
  std::uint64_t segment_size_;
  std::vector<std::uint64_t> base_;
  std::uint64_t seg_start_ = 0;
  SieveSegment segment_;
  std::size_t pos_ = 0;
  bool done_ = false;
};

// ------------------------------------------------------------- primality

// Deterministic Miller-Rabin for every 64-bit n. Witnesses are the first
// twelve primes 2..37 (no strong pseudoprime to all of them below 3.18e23);
// n < 3215031751 uses only 2, 3, 5, 7.
bool is_prime_u64(std::uint64_t n);

// Trial division by primes < 1000, then Miller-Rabin with the first
// `rounds` primes as bases (2, 3, 5, 7, ...). n < 2^64 is answered exactly.
// n < 2 is reported composite. Throws DomainError for rounds < 16.
bool is_probable_prime(const WholeNumber& n, unsigned rounds = 32);

// True iff 2^p - 1 is prime. p = 2 is special-cased; other even or
// composite p throws DomainError.
bool lucas_lehmer(std::uint64_t p);

// -------------------------------------------------------------- families

enum class FamilyKind {
  AllPrimes,
  Twin,
  DTwin,
  QuadM2P1,
  FriedlanderIwaniec,
  Mersenne,
  PrimorialPlus,
  PrimorialMinus,
};

struct PrimeFamily {
  FamilyKind kind = FamilyKind::AllPrimes;
  // Prime ceiling (AllPrimes, Twin, DTwin, QuadM2P1), exponent ceiling
  // (Mersenne) or ceiling on r (primorials). Unused for the FI rectangle.
  std::uint64_t bound = 0;
  std::uint64_t gap = 2;  // DTwin only
  std::uint64_t m_max = 0;  // FriedlanderIwaniec rectangle
  std::uint64_t n_max = 0;

  static PrimeFamily all_primes(std::uint64_t limit);
  static PrimeFamily twin(std::uint64_t limit);
  static PrimeFamily dtwin(std::uint64_t d, std::uint64_t limit);
  static PrimeFamily quad(std::uint64_t limit);
  static PrimeFamily friedlander_iwaniec(std::uint64_t m_max, std::uint64_t n_max);
  static PrimeFamily mersenne(std::uint64_t max_exponent);
  static PrimeFamily primorial_plus(std::uint64_t r_max);
  static PrimeFamily primorial_minus(std::uint64_t r_max);

  // Throws DomainError on an odd or too small gap, or a zero bound.
  void validate() const;
  // Stable machine-readable name, e.g. "twin", "dtwin:6".
  std::string descriptor() const;
  // e.g. "10000" or "m<=100,n<=10".
  std::string bound_text() const;

  friend bool operator==(const PrimeFamily&, const PrimeFamily&) = default;
};

struct QuotientStream {
  PrimeFamily family;
  std::vector<WholeNumber> quotients;
  std::string provenance;
};

struct ResourceLimits {
  std::uint64_t max_quotients = 20'000'000;
  std::uint64_t max_prime_limit = std::uint64_t{1} << 40;
  std::uint64_t max_mersenne_exponent = 20'000;
  std::uint64_t max_primorial_r = 20'000;
};

// Generation stopped at a resource limit; `prefix` holds what was produced.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(const std::string& message, QuotientStream prefix)
      : std::runtime_error(message), prefix_(std::move(prefix)) {}
  const QuotientStream& prefix() const { return prefix_; }

 private:
  QuotientStream prefix_;
};

// Lazy generator following the family's emission rule.
std::unique_ptr<QuotientSource> open_family(const PrimeFamily& family);

// Materialized stream. Throws PartialResultError on a limit breach.
QuotientStream family_quotients(const PrimeFamily& family, const ResourceLimits& limits = {});

// Textual description of the emission rule and bound.
std::string family_provenance(const PrimeFamily& family);

struct FamilyCount {
  // Pairs for Twin/DTwin, representations for FriedlanderIwaniec, primes
  // otherwise.
  std::uint64_t count = 0;
  std::uint64_t distinct_primes = 0;
  std::uint64_t representations = 0;
};

// Counts members <= x. FriedlanderIwaniec uses the value ceiling m^2 + n^4
// <= x with m, n >= 1; Mersenne and primorials count primes <= x among the
// family's members.
FamilyCount count_family(const PrimeFamily& family, std::uint64_t x);

struct GapRecord {
  std::uint64_t d = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool is_first_occurrence = true;
};

// Smallest consecutive-prime pair (p, p + d) with p + d <= limit.
std::optional<GapRecord> first_gap_occurrence(std::uint64_t d, std::uint64_t limit);

// Sum of ln p over primes p <= x, compensated summation.
double chebyshev_theta(std::uint64_t x);

// Product of all primes <= p. Throws DomainError unless p is prime.
WholeNumber primorial(std::uint64_t p);

}  // namespace primefrac

#endif  // PRIMEFRAC_PRIMES_HPP_
