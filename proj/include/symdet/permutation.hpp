#pragma once

#include <cstdint>
#include <vector>

#include "symdet/rational.hpp"

namespace symdet {

// Subsets of {1..n} are passed around as bitmasks with bit (i-1) <-> element i.
using SubsetMask = std::uint64_t;

SubsetMask subset_from_elements(const std::vector<int>& elements, int n);
std::vector<int> subset_elements(SubsetMask s, int n);

// A permutation of {1..n}, 1-indexed throughout; 0-based conversion happens
// only at serialization boundaries.
class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(int n);
    // Validates that `images` is a bijection on {1..n}.
    static Permutation from_images(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    // (p.compose(q))(i) = p(q(i))
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;

    long inversion_count() const;
    int sign() const { return inversion_count() % 2 == 0 ? 1 : -1; }
    Rational sign_rational() const { return Rational(sign()); }

    // Pairs with one index in S and one outside such that the pair is inverted.
    long mixed_inversion_count(SubsetMask s) const;

    // Lexicographic successor; returns false (and resets to identity) after the
    // last permutation.
    bool next();

    bool operator==(const Permutation& o) const = default;

  private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

// Lexicographic rank/unrank, used to split the n! space across threads.
Permutation nth_permutation(int n, std::uint64_t rank);
std::uint64_t permutation_count(int n); // n!, guarded against overflow for n > 20

} // namespace symdet
