#include "rsf/f2.hpp"

#include "rsf/errors.hpp"

#include <bit>

namespace rsf::f2 {

std::size_t BitVec::lowest() const
{
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return n_;
}

std::size_t BitVec::popcount() const
{
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

bool BitVec::operator<(const BitVec& o) const
{
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i) != o.get(i)) return !get(i);
    return false;
}

void Echelon::reduce(BitVec& v, BitVec* tag) const
{
    // Row k has zeros in the pivot columns of rows 0..k-1, so one ordered
    // sweep clears every pivot column of v.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.get(pivot_col_[k])) {
            v ^= rows_[k];
            if (tag) *tag ^= tags_[k];
        }
    }
}

bool Echelon::in_span(BitVec v) const
{
    reduce(v);
    return !v.any();
}

bool Echelon::insert(BitVec v, BitVec tag, BitVec* residual_tag)
{
    if (v.size() != length_ || tag.size() != tag_length_)
        throw InternalError("echelon: vector length mismatch");
    reduce(v, &tag);
    if (!v.any()) {
        if (residual_tag) *residual_tag = std::move(tag);
        return false;
    }
    pivot_col_.push_back(v.lowest());
    rows_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    return true;
}

std::size_t rank(const std::vector<BitVec>& vectors, std::size_t length)
{
    Echelon e(length, 0);
    for (const auto& v : vectors) e.insert(v, BitVec(0));
    return e.rank();
}

std::vector<BitVec> kernel(const std::vector<BitVec>& images, std::size_t length)
{
    Echelon e(length, images.size());
    std::vector<BitVec> out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        BitVec tag(images.size());
        tag.set(i);
        BitVec residual;
        if (!e.insert(images[i], tag, &residual)) out.push_back(residual);
    }
    return out;
}

std::optional<BitVec> solve(const std::vector<BitVec>& columns, const BitVec& rhs)
{
    Echelon e(rhs.size(), columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        BitVec tag(columns.size());
        tag.set(i);
        e.insert(columns[i], tag);
    }
    BitVec v = rhs;
    BitVec tag(columns.size());
    e.reduce(v, &tag);
    if (v.any()) return std::nullopt;
    return tag;
}

BitVec apply(const std::vector<BitVec>& column_images, const BitVec& x, std::size_t length)
{
    BitVec out(length);
    for (std::size_t i = 0; i < column_images.size(); ++i)
        if (x.get(i)) out ^= column_images[i];
    return out;
}

}  // namespace rsf::f2
