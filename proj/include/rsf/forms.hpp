#pragma once

#include "rsf/rat.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rsf {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Integer symmetric bilinear form on Z^n.
class IntSymForm {
public:
    IntSymForm() = default;
    // Throws ValidationError if rows are ragged or the matrix is not symmetric.
    explicit IntSymForm(IntMatrix entries);
    IntSymForm(std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : IntSymForm(IntMatrix(rows.begin(), rows.end())) {}

    static IntSymForm direct_sum(const IntSymForm& a, const IntSymForm& b);

    std::size_t size() const { return a_.size(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const IntMatrix& entries() const { return a_; }

    // x^T M y for integer vectors.
    Int pair(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;

private:
    IntMatrix a_;
};

struct Inertia {
    int positive = 0;
    int negative = 0;
    int nullity = 0;
};

// Counts of positive, negative and zero pivots of an exact congruence diagonalization.
Inertia inertia(const IntSymForm& form);
int signature(const IntSymForm& form);
int positive_index(const IntSymForm& form);
int nullity(const IntSymForm& form);

// Fraction-free (Bareiss) determinant; 1 for the empty form.
Int determinant(const IntSymForm& form);
Int determinant(const std::vector<std::vector<Int>>& square);

// All 0/1 vectors w with M w = diag(M) mod 2, sorted lexicographically.
// Equivalently w.x = x.x mod 2 for every integer vector x.
std::vector<std::vector<int>> characteristic_solutions_mod2(const IntSymForm& form);

// E8 with positive diagonal 2; negate for the negative definite version.
IntSymForm e8_form();
IntSymForm negated(const IntSymForm& form);

}  // namespace rsf
