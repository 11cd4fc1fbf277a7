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

#include <array>
#include <limits>

#include "primefrac/primes.hpp"

namespace primefrac {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// One strong-probable-prime round; n odd, n - 1 = d * 2^s.
bool strong_round(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = sieve_primes_monolithic(20000);
  return primes;
}

bool strong_round(const WholeNumber& n, const WholeNumber& nm1, const WholeNumber& d,
                  unsigned long s, unsigned long a) {
  WholeNumber x;
  const WholeNumber base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (const u64 p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 37 * 37) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const std::size_t count = n < 3215031751ULL ? 4 : kWitnesses.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (!strong_round(n, kWitnesses[i], d, s)) return false;
  }
  return true;
}

bool is_probable_prime(const WholeNumber& n, unsigned rounds) {
  if (rounds < 16) throw DomainError("is_probable_prime: at least 16 rounds required");
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));

  const auto& primes = small_primes();
  for (const u64 p : primes) {
    if (p >= 1000) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (rounds > primes.size()) throw DomainError("is_probable_prime: too many rounds requested");

  const WholeNumber nm1 = n - 1;
  WholeNumber d = nm1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned i = 0; i < rounds; ++i) {
    if (!strong_round(n, nm1, d, s, primes[i])) return false;
  }
  return true;
}

bool lucas_lehmer(std::uint64_t p) {
  if (p == 2) return true;
  if (p % 2 == 0 || !is_prime_u64(p)) throw DomainError("lucas_lehmer: exponent must be an odd prime");
  WholeNumber m(1);
  m <<= static_cast<mp_bitcnt_t>(p);
  m -= 1;
  WholeNumber s(4);
  WholeNumber hi;
  for (std::uint64_t i = 0; i + 2 < p; ++i) {
    s = s * s - 2;
    if (s < 0) s += m;
    // x mod (2^p - 1) = (x & m) + (x >> p), repeated until it fits.
    while (mpz_sizeinbase(s.get_mpz_t(), 2) > p) {
      mpz_tdiv_q_2exp(hi.get_mpz_t(), s.get_mpz_t(), p);
      mpz_tdiv_r_2exp(s.get_mpz_t(), s.get_mpz_t(), p);
      s += hi;
    }
    if (s == m) s = 0;
  }
  return s == 0;
}

}  // namespace primefrac
