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


#include "oracles.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

namespace oracle {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool trial_prime(const mpz_class& n) {
  if (n < 2) return false;
  mpz_class d = 2;
  while (d * d <= n) {
    if (n % d == 0) return false;
    ++d;
  }
  return true;
}

std::vector<std::uint64_t> trial_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (trial_prime(n)) out.push_back(n);
  }
  return out;
}

mpq_class backward_cf(const mpz_class& a0, const std::vector<mpz_class>& a) {
  if (a.empty()) return mpq_class(a0);
  mpq_class x(a.back());
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
    x = mpq_class(*it) + 1 / x;
    x.canonicalize();
  }
  mpq_class v = mpq_class(a0) + 1 / x;
  v.canonicalize();
  return v;
}

std::string truncate_decimal(const mpq_class& x, int digits) {
  mpq_class ax = abs(x);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = ax.get_num() * scale / ax.get_den();  // floor for positives
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (digits == 0) s.pop_back();
  return (sgn(x) < 0 ? "-" : "") + s;
}

std::string round_decimal(const std::string& text, int fraction_digits) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) throw std::invalid_argument("no decimal point");
  const std::size_t keep = dot + 1 + fraction_digits;
  if (keep >= text.size()) return text;
  std::string out = text.substr(0, keep);
  if (text[keep] >= '5') {
    int i = static_cast<int>(out.size()) - 1;
    for (; i >= 0; --i) {
      if (out[i] == '.') continue;
      if (out[i] == '9') {
        out[i] = '0';
      } else {
        ++out[i];
        break;
      }
    }
    if (i < 0) out.insert(0, "1");
  }
  return out;
}

std::size_t common_prefix(const std::string& a, const std::string& b) {
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

Real::Real(long bits) { mpfr_init2(v_, bits); }
Real::~Real() { mpfr_clear(v_); }

long bits_for_digits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 64;
}

std::string mpfr_truncated(const Real& x, int digits) {
  Real scaled(mpfr_get_prec(x.get()) + 64);
  mpfr_ui_pow_ui(scaled.get(), 10, static_cast<unsigned long>(digits), MPFR_RNDN);
  mpfr_mul(scaled.get(), scaled.get(), x.get(), MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), scaled.get(), MPFR_RNDZ);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return truncate_decimal(mpq_class(z, scale), digits);
}

void bessel_series(Real& out, long nu, const mpq_class& x) {
  const long prec = mpfr_get_prec(out.get());
  Real half(prec + 32), term(prec + 32), sum(prec + 32), q(prec + 32);
  mpq_class h = x / 2;
  mpfr_set_q(half.get(), h.get_mpq_t(), MPFR_RNDN);
  mpfr_pow_ui(term.get(), half.get(), static_cast<unsigned long>(nu), MPFR_RNDN);
  for (long j = 2; j <= nu; ++j) mpfr_div_ui(term.get(), term.get(), j, MPFR_RNDN);
  mpfr_set(sum.get(), term.get(), MPFR_RNDN);
  mpfr_sqr(q.get(), half.get(), MPFR_RNDN);
  const double xd = x.get_d();
  for (long k = 0;; ++k) {
    mpfr_mul(term.get(), term.get(), q.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), (k + 1) * (k + 1 + nu), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    if (k > xd && mpfr_get_exp(term.get()) < mpfr_get_exp(sum.get()) - prec - 16) break;
  }
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
}

std::string champernowne_digits(int digits) {
  std::string s;
  for (int k = 1; static_cast<int>(s.size()) < digits; ++k) s += std::to_string(k);
  s.resize(digits);
  return "0." + s;
}

std::vector<mpz_class> naive_expansion(const Real& x, int terms) {
  const long prec = mpfr_get_prec(x.get());
  Real v(prec), fl(prec);
  mpfr_set(v.get(), x.get(), MPFR_RNDN);
  std::vector<mpz_class> out;
  for (int i = 0; i < terms; ++i) {
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), v.get(), MPFR_RNDD);
    out.push_back(a);
    mpfr_sub_z(v.get(), v.get(), a.get_mpz_t(), MPFR_RNDN);
    if (mpfr_zero_p(v.get())) break;
    mpfr_ui_div(v.get(), 1, v.get(), MPFR_RNDN);
  }
  return out;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("primefrac-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

mpz_class random_bits(std::mt19937_64& rng, int bits) {
  mpz_class z = 0;
  for (int done = 0; done < bits; done += 64) {
    z <<= 64;
    const std::uint64_t w = rng();
    z += mpz_class(static_cast<unsigned long>(w));
  }
  const int extra = ((bits + 63) / 64) * 64 - bits;
  z >>= extra;
  mpz_setbit(z.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
  return z;
}

}  // namespace oracle
