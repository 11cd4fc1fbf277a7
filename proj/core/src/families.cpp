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

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "primefrac/primes.hpp"

namespace primefrac {

namespace {

constexpr unsigned kPrimorialRounds = 32;

class PrimeSource final : public QuotientSource {
 public:
  explicit PrimeSource(std::uint64_t limit) : cursor_(limit) {}
  std::optional<WholeNumber> next() override {
    if (auto p = cursor_.next()) return WholeNumber(static_cast<unsigned long>(*p));
    return std::nullopt;
  }

 private:
  PrimeCursor cursor_;
};

// Consecutive primes (p, p + d), each pair emitted as p then p + d.
class GapPairSource final : public QuotientSource {
 public:
  GapPairSource(std::uint64_t d, std::uint64_t limit) : d_(d), cursor_(limit) {
    if (auto p = cursor_.next()) prev_ = *p;
  }
  std::optional<WholeNumber> next() override {
    if (pending_.empty()) advance();
    if (pending_.empty()) return std::nullopt;
    const std::uint64_t v = pending_.front();
    pending_.pop_front();
    return WholeNumber(static_cast<unsigned long>(v));
  }

 private:
  void advance() {
    while (prev_ != 0) {
      const auto q = cursor_.next();
      if (!q) {
        prev_ = 0;
        return;
      }
      const std::uint64_t p = prev_;
      prev_ = *q;
      if (*q - p == d_) {
        pending_.push_back(p);
        pending_.push_back(*q);
        return;
      }
    }
  }

  std::uint64_t d_;
  PrimeCursor cursor_;
  std::uint64_t prev_ = 0;
  std::deque<std::uint64_t> pending_;
};

class QuadSource final : public QuotientSource {
 public:
  explicit QuadSource(std::uint64_t limit) : limit_(limit) {}
  std::optional<WholeNumber> next() override {
    while (m_ <= 0xFFFFFFFFULL && m_ * m_ + 1 <= limit_) {
      const std::uint64_t v = m_ * m_ + 1;
      ++m_;
      if (is_prime_u64(v)) return WholeNumber(static_cast<unsigned long>(v));
    }
    return std::nullopt;
  }

 private:
  std::uint64_t limit_;
  std::uint64_t m_ = 1;
};

class MersenneSource final : public QuotientSource {
 public:
  explicit MersenneSource(std::uint64_t max_exponent) : cursor_(max_exponent) {}
  std::optional<WholeNumber> next() override {
    while (auto p = cursor_.next()) {
      if (lucas_lehmer(*p)) {
        WholeNumber m(1);
        m <<= static_cast<mp_bitcnt_t>(*p);
        return m - 1;
      }
    }
    return std::nullopt;
  }

 private:
  PrimeCursor cursor_;
};

class PrimorialSource final : public QuotientSource {
 public:
  PrimorialSource(std::uint64_t r_max, int offset) : cursor_(r_max), offset_(offset) {}
  std::optional<WholeNumber> next() override {
    while (auto r = cursor_.next()) {
      product_ *= static_cast<unsigned long>(*r);
      WholeNumber candidate = product_ + offset_;
      if (candidate < 2) continue;
      if (is_probable_prime(candidate, kPrimorialRounds)) return candidate;
    }
    return std::nullopt;
  }

 private:
  PrimeCursor cursor_;
  int offset_;
  WholeNumber product_ = 1;
};

struct Representation {
  std::uint64_t value;
  std::uint64_t m;
  std::uint64_t n;
};

// Prime values m^2 + n^4 over the rectangle (or below a value ceiling when
// ceiling != 0), one entry per representation, sorted by value.
std::vector<Representation> fi_representations(std::uint64_t m_max, std::uint64_t n_max,
                                                std::uint64_t ceiling) {
  std::vector<Representation> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint64_t n4 = n * n * n * n;
    if (ceiling != 0 && n4 >= ceiling) break;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      const std::uint64_t v = m * m + n4;
      if (ceiling != 0 && v > ceiling) break;
      if (is_prime_u64(v)) out.push_back({v, m, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
    return a.value != b.value ? a.value < b.value : a.m < b.m;
  });
  return out;
}

std::uint64_t checked_power_bound(std::uint64_t value, int power) {
  std::uint64_t r = 1;
  for (int i = 0; i < power; ++i) {
    if (value != 0 && r > std::numeric_limits<std::uint64_t>::max() / value) {
      throw DomainError("family bound too large");
    }
    r *= value;
  }
  return r;
}

PrimeFamily make(FamilyKind kind, std::uint64_t bound) {
  PrimeFamily f;
  f.kind = kind;
  f.bound = bound;
  f.validate();
  return f;
}

}  // namespace

PrimeFamily PrimeFamily::all_primes(std::uint64_t limit) { return make(FamilyKind::AllPrimes, limit); }
PrimeFamily PrimeFamily::twin(std::uint64_t limit) { return make(FamilyKind::Twin, limit); }
PrimeFamily PrimeFamily::dtwin(std::uint64_t d, std::uint64_t limit) {
  PrimeFamily f;
  f.kind = FamilyKind::DTwin;
  f.bound = limit;
  f.gap = d;
  f.validate();
  return f;
}
PrimeFamily PrimeFamily::quad(std::uint64_t limit) { return make(FamilyKind::QuadM2P1, limit); }
PrimeFamily PrimeFamily::friedlander_iwaniec(std::uint64_t m_max, std::uint64_t n_max) {
  PrimeFamily f;
  f.kind = FamilyKind::FriedlanderIwaniec;
  f.m_max = m_max;
  f.n_max = n_max;
  f.validate();
  return f;
}
PrimeFamily PrimeFamily::mersenne(std::uint64_t max_exponent) {
  return make(FamilyKind::Mersenne, max_exponent);
}
PrimeFamily PrimeFamily::primorial_plus(std::uint64_t r_max) {
  return make(FamilyKind::PrimorialPlus, r_max);
}
PrimeFamily PrimeFamily::primorial_minus(std::uint64_t r_max) {
  return make(FamilyKind::PrimorialMinus, r_max);
}

void PrimeFamily::validate() const {
  if (kind == FamilyKind::FriedlanderIwaniec) {
    if (m_max == 0 || n_max == 0) throw DomainError("rectangle bounds must be positive");
    checked_power_bound(n_max, 4);
    if (m_max > 0xFFFFFFFFULL) throw DomainError("m_max too large");
    return;
  }
  if (bound == 0) throw DomainError("family bound must be positive");
  if (kind == FamilyKind::Twin && gap != 2) throw DomainError("twin family has gap 2");
  if (kind == FamilyKind::DTwin && (gap < 2 || gap % 2 != 0)) {
    throw DomainError("gap must be even and at least 2");
  }
}

std::string PrimeFamily::descriptor() const {
  switch (kind) {
    case FamilyKind::AllPrimes: return "all-primes";
    case FamilyKind::Twin: return "twin";
    case FamilyKind::DTwin: return "dtwin:" + std::to_string(gap);
    case FamilyKind::QuadM2P1: return "quad";
    case FamilyKind::FriedlanderIwaniec: return "fi";
    case FamilyKind::Mersenne: return "mersenne";
    case FamilyKind::PrimorialPlus: return "primorial-plus";
    case FamilyKind::PrimorialMinus: return "primorial-minus";
  }
  return "unknown";
}

std::string PrimeFamily::bound_text() const {
  if (kind == FamilyKind::FriedlanderIwaniec) {
    return "m<=" + std::to_string(m_max) + ",n<=" + std::to_string(n_max);
  }
  return std::to_string(bound);
}

std::string family_provenance(const PrimeFamily& family) {
  switch (family.kind) {
    case FamilyKind::AllPrimes:
      return "ascending primes <= " + family.bound_text();
    case FamilyKind::Twin:
    case FamilyKind::DTwin:
      return "consecutive primes (p, p+" + std::to_string(family.gap) + ") with p+" +
             std::to_string(family.gap) + " <= " + family.bound_text() +
             ", each pair emitted as p then p+" + std::to_string(family.gap) +
             " (shared members repeated)";
    case FamilyKind::QuadM2P1:
      return "ascending primes m^2+1 <= " + family.bound_text();
    case FamilyKind::FriedlanderIwaniec:
      return "prime values m^2+n^4 over 1<=m<=" + std::to_string(family.m_max) +
             ", 1<=n<=" + std::to_string(family.n_max) +
             ", ascending, one entry per representation";
    case FamilyKind::Mersenne:
      return "2^p-1 passing Lucas-Lehmer for primes p <= " + family.bound_text();
    case FamilyKind::PrimorialPlus:
      return "r#+1 passing 32-round Miller-Rabin for primes r <= " + family.bound_text();
    case FamilyKind::PrimorialMinus:
      return "r#-1 passing 32-round Miller-Rabin for primes r <= " + family.bound_text();
  }
  return {};
}

std::unique_ptr<QuotientSource> open_family(const PrimeFamily& family) {
  family.validate();
  switch (family.kind) {
    case FamilyKind::AllPrimes:
      return std::make_unique<PrimeSource>(family.bound);
    case FamilyKind::Twin:
    case FamilyKind::DTwin:
      return std::make_unique<GapPairSource>(family.gap, family.bound);
    case FamilyKind::QuadM2P1:
      return std::make_unique<QuadSource>(family.bound);
    case FamilyKind::FriedlanderIwaniec: {
      std::vector<WholeNumber> values;
      for (const auto& r : fi_representations(family.m_max, family.n_max, 0)) {
        values.emplace_back(static_cast<unsigned long>(r.value));
      }
      return std::make_unique<VectorSource>(std::move(values));
    }
    case FamilyKind::Mersenne:
      return std::make_unique<MersenneSource>(family.bound);
    case FamilyKind::PrimorialPlus:
      return std::make_unique<PrimorialSource>(family.bound, +1);
    case FamilyKind::PrimorialMinus:
      return std::make_unique<PrimorialSource>(family.bound, -1);
  }
  throw DomainError("unknown family");
}

QuotientStream family_quotients(const PrimeFamily& family, const ResourceLimits& limits) {
  family.validate();
  PrimeFamily effective = family;
  bool clipped = false;
  auto clip = [&](std::uint64_t cap) {
    if (effective.bound > cap) {
      effective.bound = cap;
      clipped = true;
    }
  };
  switch (family.kind) {
    case FamilyKind::Mersenne: clip(limits.max_mersenne_exponent); break;
    case FamilyKind::PrimorialPlus:
    case FamilyKind::PrimorialMinus: clip(limits.max_primorial_r); break;
    case FamilyKind::FriedlanderIwaniec: break;
    default: clip(limits.max_prime_limit); break;
  }

  QuotientStream stream;
  stream.family = family;
  stream.provenance = family_provenance(family);
  auto source = open_family(effective);
  while (auto q = source->next()) {
    if (stream.quotients.size() >= limits.max_quotients) {
      throw PartialResultError("quotient count limit reached", std::move(stream));
    }
    stream.quotients.push_back(std::move(*q));
  }
  if (clipped) {
    throw PartialResultError("family bound exceeds resource limit; stopped at " +
                                 std::to_string(effective.bound),
                             std::move(stream));
  }
  return stream;
}

FamilyCount count_family(const PrimeFamily& family, std::uint64_t x) {
  FamilyCount c;
  switch (family.kind) {
    case FamilyKind::AllPrimes: {
      PrimeCursor cursor(x);
      while (cursor.next()) ++c.count;
      c.distinct_primes = c.representations = c.count;
      return c;
    }
    case FamilyKind::Twin:
    case FamilyKind::DTwin: {
      PrimeCursor cursor(x);
      std::uint64_t prev = 0;
      std::uint64_t last_counted = 0;
      while (auto p = cursor.next()) {
        if (prev != 0 && *p - prev == family.gap) {
          ++c.count;
          c.distinct_primes += prev == last_counted ? 1 : 2;
          last_counted = *p;
        }
        prev = *p;
      }
      c.representations = 2 * c.count;
      return c;
    }
    case FamilyKind::QuadM2P1: {
      QuadSource source(x);
      while (source.next()) ++c.count;
      c.distinct_primes = c.representations = c.count;
      return c;
    }
    case FamilyKind::FriedlanderIwaniec: {
      const auto reps = fi_representations(0xFFFFFFFFULL, 0xFFFFULL, x);
      c.representations = reps.size();
      std::uint64_t last = 0;
      for (const auto& r : reps) {
        if (r.value != last) ++c.distinct_primes;
        last = r.value;
      }
      c.count = c.representations;
      return c;
    }
    case FamilyKind::Mersenne: {
      for (std::uint64_t p = 2; p < 64; ++p) {
        if (!is_prime_u64(p)) continue;
        const std::uint64_t m = (std::uint64_t{1} << p) - 1;
        if (m > x) break;
        if (lucas_lehmer(p)) ++c.count;
      }
      c.distinct_primes = c.representations = c.count;
      return c;
    }
    case FamilyKind::PrimorialPlus:
    case FamilyKind::PrimorialMinus: {
      const int offset = family.kind == FamilyKind::PrimorialPlus ? 1 : -1;
      WholeNumber product(1);
      PrimeCursor cursor(64);
      while (auto r = cursor.next()) {
        product *= static_cast<unsigned long>(*r);
        const WholeNumber v = product + offset;
        if (v > WholeNumber(static_cast<unsigned long>(x))) break;
        if (v >= 2 && is_probable_prime(v, kPrimorialRounds)) ++c.count;
      }
      c.distinct_primes = c.representations = c.count;
      return c;
    }
  }
  return c;
}

std::optional<GapRecord> first_gap_occurrence(std::uint64_t d, std::uint64_t limit) {
  if (d < 2 || d % 2 != 0) throw DomainError("gap must be even and at least 2");
  PrimeCursor cursor(limit);
  std::uint64_t prev = 0;
  while (auto p = cursor.next()) {
    if (prev != 0 && *p - prev == d) return GapRecord{d, prev, *p, true};
    prev = *p;
  }
  return std::nullopt;
}

WholeNumber primorial(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("primorial: argument must be prime");
  WholeNumber r(1);
  PrimeCursor cursor(p);
  while (auto q = cursor.next()) r *= static_cast<unsigned long>(*q);
  return r;
}

}  // namespace primefrac
