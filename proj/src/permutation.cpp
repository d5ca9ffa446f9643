#include "symdet/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "symdet/error.hpp"

namespace symdet {

SubsetMask subset_from_elements(const std::vector<int>& elements, int n) {
    SubsetMask s = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw input_error("subset element out of range");
        s |= SubsetMask{1} << (e - 1);
    }
    return s;
}

std::vector<int> subset_elements(SubsetMask s, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (s >> (i - 1) & 1) out.push_back(i);
    return out;
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw input_error("negative permutation size");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw input_error("not a permutation of {1..n}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& q) const {
    if (size() != q.size()) throw input_error("composing permutations of different sizes");
    std::vector<int> img(images_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<std::size_t>(i - 1)] = (*this)(q(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(img));
}

long Permutation::inversion_count() const {
    // O(n^2) pair enumeration; n stays tiny here.
    long count = 0;
    const int n = size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((*this)(i) > (*this)(j)) ++count;
    return count;
}

long Permutation::mixed_inversion_count(SubsetMask s) const {
    long count = 0;
    const int n = size();
    for (int i = 1; i <= n; ++i) {
        if (!(s >> (i - 1) & 1)) continue;
        for (int j = 1; j <= n; ++j) {
            if (s >> (j - 1) & 1) continue;
            if ((i < j && (*this)(i) > (*this)(j)) || (i > j && (*this)(i) < (*this)(j))) ++count;
        }
    }
    return count;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

std::uint64_t permutation_count(int n) {
    if (n < 0 || n > 20) throw cutoff_error("n! does not fit in 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation nth_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img;
    img.reserve(pool.size());
    std::uint64_t radix = permutation_count(n);
    for (int i = n; i >= 1; --i) {
        radix /= static_cast<std::uint64_t>(i);
        const auto pick = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        img.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation::from_images(std::move(img));
}

} // namespace symdet
