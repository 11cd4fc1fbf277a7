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
#include <cmath>
#include <thread>

#include "primefrac/primes.hpp"

namespace primefrac {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 62;

void check_limit(std::uint64_t limit) {
  if (limit >= kMaxSieveLimit) throw DomainError("sieve limit too large");
}

void collect(const SieveSegment& seg, std::vector<std::uint64_t>& out) {
  for (std::size_t i = 0; i < seg.bits.size(); ++i) {
    if (seg.bits[i]) out.push_back(seg.start + i);
  }
}

}  // namespace

std::vector<std::uint64_t> sieve_primes_monolithic(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
  }
  return out;
}

SieveSegment sieve_segment(std::uint64_t start, std::uint64_t end,
                           const std::vector<std::uint64_t>& base_primes) {
  SieveSegment seg;
  seg.start = start;
  seg.end = end;
  if (end <= start) return seg;
  seg.bits.assign(end - start, 1);
  for (std::uint64_t n = start; n < std::min<std::uint64_t>(end, 2); ++n) seg.bits[n - start] = 0;
  for (const std::uint64_t p : base_primes) {
    if (p > (end - 1) / p) break;
    std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
    for (std::uint64_t m = first; m < end; m += p) seg.bits[m - start] = 0;
  }
  return seg;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, const SieveOptions& options) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  check_limit(limit);
  const std::uint64_t seg_size = std::max<std::uint64_t>(options.segment_size, 1);
  const std::vector<std::uint64_t> base = sieve_primes_monolithic(isqrt(limit));

  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t s = 0; s <= limit; s += seg_size) {
    ranges.emplace_back(s, std::min(limit, s + seg_size - 1) + 1);
    if (limit - s < seg_size) break;
  }

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || ranges.size() == 1) {
    for (const auto& [a, b] : ranges) collect(sieve_segment(a, b, base), out);
    return out;
  }

  // Each worker sieves a strided subset of segments into its own buffers;
  // results are merged in range order afterwards.
  std::vector<std::vector<std::uint64_t>> parts(ranges.size());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < ranges.size(); i += threads) {
        collect(sieve_segment(ranges[i].first, ranges[i].second, base), parts[i]);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

PrimeCursor::PrimeCursor(std::uint64_t limit, std::uint64_t segment_size)
    : limit_(limit), segment_size_(std::max<std::uint64_t>(segment_size, 1)) {
  if (limit_ < 2) {
    done_ = true;
    return;
  }
  check_limit(limit_);
  base_ = sieve_primes_monolithic(isqrt(limit_));
  refill();
}

void PrimeCursor::refill() {
  if (seg_start_ > limit_) {
    done_ = true;
    return;
  }
  const std::uint64_t end = std::min(limit_, seg_start_ + segment_size_ - 1) + 1;
  segment_ = sieve_segment(seg_start_, end, base_);
  pos_ = 0;
  seg_start_ = end;
  if (end - 1 == limit_) seg_start_ = limit_ + 1;
}

std::optional<std::uint64_t> PrimeCursor::next() {
  while (!done_) {
    while (pos_ < segment_.bits.size()) {
      const std::size_t i = pos_++;
      if (segment_.bits[i]) return segment_.start + i;
    }
    if (segment_.end > limit_) {
      done_ = true;
      break;
    }
    refill();
  }
  return std::nullopt;
}

double chebyshev_theta(std::uint64_t x) {
  // Neumaier summation.
  double sum = 0.0;
  double comp = 0.0;
  PrimeCursor cursor(x);
  while (auto p = cursor.next()) {
    const double term = std::log(static_cast<double>(*p));
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace primefrac
