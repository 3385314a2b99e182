#include "rsf/forms.hpp"

#include "rsf/errors.hpp"
#include "rsf/f2.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rsf {

IntSymForm::IntSymForm(IntMatrix entries) : a_(std::move(entries))
{
    const std::size_t n = a_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a_[i].size() != n)
            throw ValidationError("form: row " + std::to_string(i) + " has length "
                                  + std::to_string(a_[i].size()) + ", expected "
                                  + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a_[i][j] != a_[j][i])
                throw ValidationError("form: not symmetric at (" + std::to_string(i) + ","
                                      + std::to_string(j) + ")");
}

IntSymForm IntSymForm::direct_sum(const IntSymForm& a, const IntSymForm& b)
{
    const std::size_t n = a.size() + b.size();
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b(i, j);
    return IntSymForm(std::move(m));
}

Int IntSymForm::pair(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const
{
    if (x.size() != size() || y.size() != size())
        throw ValidationError("form: vector length does not match form dimension");
    Int total = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < size(); ++j)
            row += Int(static_cast<long>(a_[i][j])) * static_cast<long>(y[j]);
        total += row * static_cast<long>(x[i]);
    }
    return total;
}

Inertia inertia(const IntSymForm& form)
{
    const std::size_t n = form.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(static_cast<long>(form(i, j)));

    Inertia out;
    // Active block is indices k..n-1.
    std::size_t k = 0;
    while (k < n) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (sgn(a[i][i]) != 0) { piv = i; break; }

        if (piv == n) {
            // Zero diagonal: find an off-diagonal entry and make a diagonal one
            // by the congruence e_i -> e_i + e_j, which sets a_ii = 2 a_ij.
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (sgn(a[i][j]) != 0) { bi = i; bj = j; break; }
            if (bi == n) {
                out.nullity += static_cast<int>(n - k);
                break;
            }
            for (std::size_t c = k; c < n; ++c) a[bi][c] += a[bj][c];
            for (std::size_t r = k; r < n; ++r) a[r][bi] += a[r][bj];
            piv = bi;
        }

        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (std::size_t r = k; r < n; ++r) std::swap(a[r][piv], a[r][k]);
        }
        const Rat p = a[k][k];
        if (sgn(p) > 0) ++out.positive;
        else ++out.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            const Rat f = a[i][k] / p;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        ++k;
    }
    return out;
}

int signature(const IntSymForm& form)
{
    Inertia in = inertia(form);
    return in.positive - in.negative;
}

int positive_index(const IntSymForm& form) { return inertia(form).positive; }

int nullity(const IntSymForm& form) { return inertia(form).nullity; }

Int determinant(const std::vector<std::vector<Int>>& square)
{
    const std::size_t n = square.size();
    for (const auto& row : square)
        if (row.size() != n) throw ValidationError("determinant: matrix is not square");
    if (n == 0) return 1;
    auto m = square;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int determinant(const IntSymForm& form)
{
    std::vector<std::vector<Int>> m(form.size(), std::vector<Int>(form.size()));
    for (std::size_t i = 0; i < form.size(); ++i)
        for (std::size_t j = 0; j < form.size(); ++j) m[i][j] = static_cast<long>(form(i, j));
    return determinant(m);
}

std::vector<std::vector<int>> characteristic_solutions_mod2(const IntSymForm& form)
{
    const std::size_t n = form.size();
    std::vector<f2::BitVec> cols(n, f2::BitVec(n));
    f2::BitVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (form(i, j) % 2 != 0) cols[j].set(i);
        if (form(i, i) % 2 != 0) rhs.set(i);
    }
    // A symmetric matrix over F2 always has diag in its column space, so a
    // particular solution exists; enumerate the kernel coset.
    auto particular = f2::solve(cols, rhs);
    if (!particular) throw InternalError("characteristic vector: no solution mod 2");
    auto ker = f2::kernel(cols, n);
    if (ker.size() > 24)
        throw UnsupportedError("characteristic vector: kernel of dimension "
                               + std::to_string(ker.size()) + " is too large to enumerate");

    std::vector<std::vector<int>> out;
    const std::size_t count = std::size_t{1} << ker.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        f2::BitVec w = *particular;
        for (std::size_t b = 0; b < ker.size(); ++b)
            if ((mask >> b) & 1u) w ^= ker[b];
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = w.get(i) ? 1 : 0;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntSymForm e8_form()
{
    // Dynkin diagram: chain 0-1-2-3-4-5-6 with vertex 7 attached to vertex 4.
    IntMatrix m(8, std::vector<std::int64_t>(8, 0));
    for (int i = 0; i < 8; ++i) m[i][i] = 2;
    auto link = [&](int i, int j) { m[i][j] = m[j][i] = -1; };
    for (int i = 0; i < 6; ++i) link(i, i + 1);
    link(4, 7);
    return IntSymForm(std::move(m));
}

IntSymForm negated(const IntSymForm& form)
{
    IntMatrix m = form.entries();
    for (auto& row : m)
        for (auto& x : row) x = -x;
    return IntSymForm(std::move(m));
}

}  // namespace rsf
