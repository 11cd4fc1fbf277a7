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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "primefrac/primes.hpp"

namespace primefrac {
namespace {

std::vector<WholeNumber> whole(std::initializer_list<unsigned long> values) {
  std::vector<WholeNumber> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

std::vector<WholeNumber> prefix(const std::vector<WholeNumber>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

TEST(Families, TwinBelowTwenty) {
  EXPECT_EQ(family_quotients(PrimeFamily::twin(20)).quotients, whole({3, 5, 5, 7, 11, 13, 17, 19}));
}

TEST(Families, DTwinSixPrefix) {
  const auto q = family_quotients(PrimeFamily::dtwin(6, 1000)).quotients;
  EXPECT_EQ(prefix(q, 10), whole({23, 29, 31, 37, 47, 53, 53, 59, 61, 67}));
}

TEST(Families, QuadBelow1700) {
  EXPECT_EQ(family_quotients(PrimeFamily::quad(1700)).quotients,
            whole({2, 5, 17, 37, 101, 197, 257, 401, 577, 677, 1297, 1601}));
}

TEST(Families, FriedlanderIwaniecSmallRectangle) {
  const auto q = family_quotients(PrimeFamily::friedlander_iwaniec(10, 3)).quotients;
  EXPECT_EQ(prefix(q, 8), whole({2, 5, 17, 17, 37, 41, 97, 97}));
}

TEST(Families, MersenneUpTo31) {
  EXPECT_EQ(family_quotients(PrimeFamily::mersenne(31)).quotients,
            whole({3, 7, 31, 127, 8191, 131071, 524287, 2147483647}));
}

TEST(Families, PrimorialMinusUpTo13) {
  EXPECT_EQ(family_quotients(PrimeFamily::primorial_minus(13)).quotients,
            whole({5, 29, 2309, 30029}));
}

TEST(Families, PrimorialPlusPrefix) {
  const auto q = family_quotients(PrimeFamily::primorial_plus(11)).quotients;
  EXPECT_EQ(q, whole({3, 7, 31, 211, 2311}));
}

TEST(Families, PrimorialMembersMatchDirectPrimality) {
  for (const bool plus : {true, false}) {
    const PrimeFamily f = plus ? PrimeFamily::primorial_plus(60) : PrimeFamily::primorial_minus(60);
    std::vector<WholeNumber> expected;
    WholeNumber product = 1;
    for (auto r : oracle::trial_primes(60)) {
      product *= static_cast<unsigned long>(r);
      const WholeNumber candidate = plus ? WholeNumber(product + 1) : WholeNumber(product - 1);
      if (candidate >= 2 && is_probable_prime(candidate, 32)) expected.push_back(candidate);
    }
    EXPECT_EQ(family_quotients(f).quotients, expected);
  }
}

TEST(Families, TwinHasEvenLengthAndDedupesToIncreasingPrimes) {
  for (std::uint64_t bound : {5ULL, 100ULL, 1000ULL, 12345ULL, 100000ULL}) {
    const auto q = family_quotients(PrimeFamily::twin(bound)).quotients;
    ASSERT_EQ(q.size() % 2, 0u);
    auto distinct = q;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    ASSERT_TRUE(std::adjacent_find(distinct.begin(), distinct.end(),
                                   [](const auto& a, const auto& b) { return a >= b; }) ==
                distinct.end());
    for (std::size_t i = 0; i < q.size(); i += 2) {
      ASSERT_EQ(q[i + 1] - q[i], 2);
    }
  }
}

TEST(Families, DTwinTwoEqualsTwin) {
  for (std::uint64_t bound : {10ULL, 1000ULL, 54321ULL}) {
    ASSERT_EQ(family_quotients(PrimeFamily::dtwin(2, bound)).quotients,
              family_quotients(PrimeFamily::twin(bound)).quotients);
  }
}

TEST(Families, DTwinPairsAreConsecutivePrimes) {
  const auto primes = oracle::trial_primes(20000);
  for (std::uint64_t d : {4ULL, 6ULL, 8ULL, 30ULL}) {
    std::vector<WholeNumber> expected;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
      if (primes[i + 1] - primes[i] == d) {
        expected.emplace_back(static_cast<unsigned long>(primes[i]));
        expected.emplace_back(static_cast<unsigned long>(primes[i + 1]));
      }
    }
    ASSERT_EQ(family_quotients(PrimeFamily::dtwin(d, 20000)).quotients, expected) << d;
  }
}

TEST(Families, FriedlanderIwaniecMultiplicityCountsRepresentations) {
  const std::uint64_t m_max = 100, n_max = 10;
  std::map<std::uint64_t, int> reps;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const std::uint64_t v = m * m + n * n * n * n;
      if (oracle::trial_prime(v)) ++reps[v];
    }
  }
  const auto q = family_quotients(PrimeFamily::friedlander_iwaniec(m_max, n_max)).quotients;
  std::vector<WholeNumber> expected;
  for (const auto& [v, count] : reps) {
    for (int i = 0; i < count; ++i) expected.emplace_back(static_cast<unsigned long>(v));
  }
  EXPECT_EQ(q, expected);
}

TEST(Families, QuadMatchesDirectScan) {
  std::vector<WholeNumber> expected;
  for (std::uint64_t m = 1; m * m + 1 <= 10000000; ++m) {
    if (oracle::trial_prime(m * m + 1)) expected.emplace_back(static_cast<unsigned long>(m * m + 1));
  }
  EXPECT_EQ(family_quotients(PrimeFamily::quad(10000000)).quotients, expected);
}

TEST(Families, LazySourceMatchesMaterializedStream) {
  for (const PrimeFamily& f :
       {PrimeFamily::all_primes(5000), PrimeFamily::twin(5000), PrimeFamily::dtwin(6, 5000),
        PrimeFamily::quad(100000), PrimeFamily::friedlander_iwaniec(30, 5),
        PrimeFamily::mersenne(127), PrimeFamily::primorial_plus(100)}) {
    auto source = open_family(f);
    std::vector<WholeNumber> lazy;
    while (auto q = source->next()) lazy.push_back(*q);
    ASSERT_EQ(lazy, family_quotients(f).quotients) << f.descriptor();
  }
}

TEST(Families, DeterministicAcrossCalls) {
  const PrimeFamily f = PrimeFamily::twin(30000);
  EXPECT_EQ(family_quotients(f).quotients, family_quotients(f).quotients);
}

TEST(Families, AllQuotientsAtLeastTwo) {
  for (const PrimeFamily& f : {PrimeFamily::all_primes(1000), PrimeFamily::quad(100000),
                               PrimeFamily::mersenne(200), PrimeFamily::primorial_minus(200)}) {
    for (const auto& q : family_quotients(f).quotients) {
      ASSERT_GE(q, 2);
    }
  }
}

TEST(Families, ValidationRejectsBadParameters) {
  EXPECT_THROW(PrimeFamily::dtwin(5, 100).validate(), DomainError);
  EXPECT_THROW(PrimeFamily::dtwin(0, 100).validate(), DomainError);
  EXPECT_THROW(PrimeFamily::twin(0).validate(), DomainError);
  EXPECT_THROW(PrimeFamily::friedlander_iwaniec(0, 3).validate(), DomainError);
  EXPECT_NO_THROW(PrimeFamily::dtwin(6, 100).validate());
}

TEST(Families, DescriptorsAndBounds) {
  EXPECT_EQ(PrimeFamily::twin(10000).descriptor(), "twin");
  EXPECT_EQ(PrimeFamily::dtwin(6, 10).descriptor(), "dtwin:6");
  EXPECT_EQ(PrimeFamily::twin(10000).bound_text(), "10000");
  EXPECT_EQ(PrimeFamily::friedlander_iwaniec(100, 10).bound_text(), "m<=100,n<=10");
  EXPECT_FALSE(family_provenance(PrimeFamily::mersenne(607)).empty());
}

TEST(Families, ResourceLimitReturnsPrefix) {
  ResourceLimits limits;
  limits.max_quotients = 100;
  try {
    family_quotients(PrimeFamily::all_primes(100000), limits);
    FAIL() << "expected PartialResultError";
  } catch (const PartialResultError& e) {
    const auto& q = e.prefix().quotients;
    ASSERT_LE(q.size(), 100u);
    ASSERT_FALSE(q.empty());
    const auto all = family_quotients(PrimeFamily::all_primes(100000)).quotients;
    EXPECT_EQ(q, prefix(all, q.size()));
  }
  ResourceLimits tight;
  tight.max_prime_limit = 1000;
  EXPECT_THROW(family_quotients(PrimeFamily::all_primes(5000), tight), PartialResultError);
}

TEST(CountFamily, TwinCounts) {
  const FamilyCount c = count_family(PrimeFamily::twin(10000), 10000);
  EXPECT_EQ(c.count, 205u);
  EXPECT_EQ(c.distinct_primes, 409u);
  EXPECT_EQ(count_family(PrimeFamily::twin(100), 100).count, 8u);
}

TEST(CountFamily, QuadBelowTenToTheEight) {
  EXPECT_EQ(count_family(PrimeFamily::quad(100000000), 100000000).count, 841u);
}

TEST(CountFamily, AllPrimesIsPi) {
  EXPECT_EQ(count_family(PrimeFamily::all_primes(10000), 10000).count, 1229u);
  EXPECT_EQ(count_family(PrimeFamily::all_primes(1000000), 1000000).count, 78498u);
}

TEST(CountFamily, FriedlanderIwaniecValueCeilingSmall) {
  const std::uint64_t x = 200000;
  std::uint64_t reps = 0;
  std::map<std::uint64_t, int> distinct;
  for (std::uint64_t n = 1; n * n * n * n < x; ++n) {
    for (std::uint64_t m = 1; m * m + n * n * n * n <= x; ++m) {
      const std::uint64_t v = m * m + n * n * n * n;
      if (oracle::trial_prime(v)) {
        ++reps;
        ++distinct[v];
      }
    }
  }
  const FamilyCount c = count_family(PrimeFamily::friedlander_iwaniec(1, 1), x);
  EXPECT_EQ(c.representations, reps);
  EXPECT_EQ(c.count, reps);
  EXPECT_EQ(c.distinct_primes, distinct.size());
}

}  // namespace
}  // namespace primefrac
