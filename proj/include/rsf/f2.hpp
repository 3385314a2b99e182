#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rsf::f2 {

// Dense vector over F2 packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true)
    {
        if (v) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    BitVec& operator^=(const BitVec& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const
    {
        for (auto x : w_) if (x) return true;
        return false;
    }
    // Index of the lowest set bit, or size() when zero.
    std::size_t lowest() const;
    std::size_t popcount() const;
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Column-major-free matrix: rows() vectors of length cols().
using Matrix = std::vector<BitVec>;

// Incremental row echelon basis. Each stored row carries a tag vector that
// records which inserted inputs it combines; this gives coordinates and kernels.
class Echelon {
public:
    Echelon(std::size_t length, std::size_t tag_length)
        : length_(length), tag_length_(tag_length) {}

    // Inserts v with the given tag. Returns false (and leaves the basis
    // unchanged) when v is dependent; then `residual_tag` holds the tag of the
    // combination that reduces v to zero.
    bool insert(BitVec v, BitVec tag, BitVec* residual_tag = nullptr);

    // Reduces v against the basis, xoring tags into `tag` when given.
    void reduce(BitVec& v, BitVec* tag = nullptr) const;
    bool in_span(BitVec v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t length() const { return length_; }

private:
    std::size_t length_;
    std::size_t tag_length_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> tags_;
    std::vector<std::size_t> pivot_col_;
};

std::size_t rank(const std::vector<BitVec>& vectors, std::size_t length);

// Given images f(e_0..e_{k-1}) in F2^m, a basis of ker f inside F2^k.
std::vector<BitVec> kernel(const std::vector<BitVec>& images, std::size_t length);

// One solution x of sum_i x_i * columns[i] = rhs, or nullopt.
std::optional<BitVec> solve(const std::vector<BitVec>& columns, const BitVec& rhs);

// Product of a (rows x k) matrix given as k column images with a vector in F2^k.
BitVec apply(const std::vector<BitVec>& column_images, const BitVec& x, std::size_t length);

}  // namespace rsf::f2
