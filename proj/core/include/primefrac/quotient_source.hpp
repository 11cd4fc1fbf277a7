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

#ifndef PRIMEFRAC_QUOTIENT_SOURCE_HPP_
#define PRIMEFRAC_QUOTIENT_SOURCE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "primefrac/exactnum.hpp"

namespace primefrac {

// Sequential supply of partial quotients a1, a2, ...; nullopt when finished.
class QuotientSource {
 public:
  virtual ~QuotientSource() = default;
  virtual std::optional<WholeNumber> next() = 0;
};

class VectorSource final : public QuotientSource {
 public:
  explicit VectorSource(std::vector<WholeNumber> values) : values_(std::move(values)) {}
  std::optional<WholeNumber> next() override {
    if (pos_ >= values_.size()) return std::nullopt;
    return values_[pos_++];
  }

 private:
  std::vector<WholeNumber> values_;
  std::size_t pos_ = 0;
};

// a_k = f(k) for k = 1, 2, ..., limit (limit 0 means unbounded).
class FunctionSource final : public QuotientSource {
 public:
  FunctionSource(std::function<WholeNumber(std::uint64_t)> f, std::uint64_t limit)
      : f_(std::move(f)), limit_(limit) {}
  std::optional<WholeNumber> next() override {
    if (limit_ != 0 && k_ >= limit_) return std::nullopt;
    return f_(++k_);
  }

 private:
  std::function<WholeNumber(std::uint64_t)> f_;
  std::uint64_t limit_;
  std::uint64_t k_ = 0;
};

}  // namespace primefrac

#endif  // PRIMEFRAC_QUOTIENT_SOURCE_HPP_
