#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tautint/rational.hpp"

namespace tautint {

/// n-th falling factorial x(x-1)...(x-n+1); the empty product 1 for n <= 0.
inline Rational falling_factorial(const Rational& x, long n) {
  Rational out(1);
  for (long k = 0; k < n; ++k) out *= x - k;
  return out;
}

/// A partition of {1..r}. Blocks are ordered by smallest element and each
/// block lists its elements ascending, so equal partitions compare equal.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }

  bool operator==(const SetPartition& other) const = default;
};

/// Streams every partition of {1..r} exactly once, in restricted-growth
/// string order. Memory stays O(r); nothing is materialized.
class SetPartitionStream {
 public:
  explicit SetPartitionStream(int r) : r_(r) {
    if (r <= 0) throw std::invalid_argument("set partitions: r must be >= 1");
    code_.assign(static_cast<std::size_t>(r), 0);
    prefix_max_.assign(static_cast<std::size_t>(r), 0);
  }

  std::optional<SetPartition> next() {
    if (done_) return std::nullopt;
    SetPartition out = build();
    advance();
    return out;
  }

 private:
  SetPartition build() const {
    SetPartition p;
    const int blocks = prefix_max_[static_cast<std::size_t>(r_) - 1] + 1;
    p.blocks.assign(static_cast<std::size_t>(blocks), {});
    for (int i = 0; i < r_; ++i) {
      p.blocks[static_cast<std::size_t>(code_[static_cast<std::size_t>(i)])]
          .push_back(i + 1);
    }
    return p;
  }

  void advance() {
    for (int i = r_ - 1; i > 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      if (code_[ui] <= prefix_max_[ui - 1]) {
        ++code_[ui];
        prefix_max_[ui] = std::max(prefix_max_[ui - 1], code_[ui]);
        for (std::size_t j = ui + 1; j < static_cast<std::size_t>(r_); ++j) {
          code_[j] = 0;
          prefix_max_[j] = prefix_max_[ui];
        }
        return;
      }
    }
    done_ = true;
  }

  int r_;
  std::vector<int> code_;        // code_[i] = block index of element i+1
  std::vector<int> prefix_max_;  // running max of code_[0..i]
  bool done_ = false;
};

/// Streams the n! bijections of {1..n} in lexicographic order. The yielded
/// vector maps i to perm[i-1].
class PermutationStream {
 public:
  explicit PermutationStream(int n) {
    if (n <= 0) throw std::invalid_argument("permutations: n must be >= 1");
    perm_.resize(static_cast<std::size_t>(n));
    std::iota(perm_.begin(), perm_.end(), 1);
  }

  std::optional<std::vector<int>> next() {
    if (done_) return std::nullopt;
    std::vector<int> out = perm_;
    done_ = !std::next_permutation(perm_.begin(), perm_.end());
    return out;
  }

 private:
  std::vector<int> perm_;
  bool done_ = false;
};

/// A bijection Z/|B| -> B. Index arithmetic wraps modulo |B|.
struct CyclicOrder {
  std::vector<int> image;  // image[j] = sigma(j)

  int size() const { return static_cast<int>(image.size()); }

  int at(int index) const {
    const int s = size();
    int j = index % s;
    if (j < 0) j += s;
    return image[static_cast<std::size_t>(j)];
  }
};

/// Streams all |B|! bijections Z/|B| -> B.
class CyclicOrderStream {
 public:
  explicit CyclicOrderStream(std::vector<int> block) {
    if (block.empty()) {
      throw std::invalid_argument("cyclic orders: block must be nonempty");
    }
    std::sort(block.begin(), block.end());
    image_ = std::move(block);
  }

  std::optional<CyclicOrder> next() {
    if (done_) return std::nullopt;
    CyclicOrder out{image_};
    done_ = !std::next_permutation(image_.begin(), image_.end());
    return out;
  }

 private:
  std::vector<int> image_;
  bool done_ = false;
};

inline std::vector<SetPartition> all_set_partitions(int r) {
  std::vector<SetPartition> out;
  SetPartitionStream stream(r);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  PermutationStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace tautint
