// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TESTCOVER_BITSET_HPP_
#define TESTCOVER_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace testcover {

// Fixed-size bit vector packed into 64-bit words. Just enough surface for
// membership masks; grows nowhere.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t pos) const {
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }

  void set(std::size_t pos) {
    words_[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  }

  void reset(std::size_t pos) {
    words_[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool operator==(const DynamicBitset& other) const = default;

  // True iff `other` holds exactly the bits this one clears (and vice
  // versa) within the first size() positions.
  bool is_complement_of(const DynamicBitset& other) const {
    if (size_ != other.size_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t expect = ~std::uint64_t{0};
      if (w + 1 == words_.size() && (size_ & 63) != 0) {
        expect = (std::uint64_t{1} << (size_ & 63)) - 1;  // tail mask
      }
      if ((words_[w] ^ other.words_[w]) != expect) return false;
    }
    return true;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace testcover

#endif  // TESTCOVER_BITSET_HPP_
