#include "galeq/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace galeq {

namespace {

void axpy(std::vector<Int>& y, Int q, const std::vector<Int>& x)
{
    // y -= q * x
    if (q == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = checked_add(y[i], -checked_mul(q, x[i]));
}

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

IntLattice::IntLattice(std::size_t dim, std::vector<std::vector<Int>> rows) : dim_(dim), ngen_(rows.size())
{
    for (const auto& r : rows)
        if (r.size() != dim)
            raise(ErrorCode::invalid_argument, "lattice row of the wrong dimension");

    std::vector<std::vector<Int>> H = std::move(rows);
    std::vector<std::vector<Int>> U(ngen_, std::vector<Int>(ngen_, 0));
    for (std::size_t i = 0; i < ngen_; ++i)
        U[i][i] = 1;

    std::size_t top = 0;
    for (std::size_t col = 0; col < dim_ && top < H.size(); ++col) {
        // Euclid on the column below `top`
        for (;;) {
            std::size_t best = H.size();
            for (std::size_t i = top; i < H.size(); ++i)
                if (H[i][col] != 0 && (best == H.size() || std::llabs(H[i][col]) < std::llabs(H[best][col])))
                    best = i;
            if (best == H.size())
                break;
            std::swap(H[top], H[best]);
            std::swap(U[top], U[best]);
            bool done = true;
            for (std::size_t i = top + 1; i < H.size(); ++i) {
                if (H[i][col] == 0)
                    continue;
                Int q = H[i][col] / H[top][col];
                axpy(H[i], q, H[top]);
                axpy(U[i], q, U[top]);
                if (H[i][col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (H[top][col] == 0)
            continue;
        if (H[top][col] < 0) {
            for (auto& x : H[top])
                x = -x;
            for (auto& x : U[top])
                x = -x;
        }
        for (std::size_t r = 0; r < top; ++r) {
            Int q = floor_div(H[r][col], H[top][col]);
            axpy(H[r], q, H[top]);
            axpy(U[r], q, U[top]);
        }
        pivots_.push_back(col);
        ++top;
    }
    H.resize(top);
    U.resize(top);
    hnf_ = std::move(H);
    transform_ = std::move(U);
}

IntLattice::Reduction IntLattice::reduce(const std::vector<Int>& v) const
{
    if (v.size() != dim_)
        raise(ErrorCode::invalid_argument, "vector of the wrong dimension");
    Reduction red;
    red.residual = v;
    red.coeffs.assign(ngen_, 0);
    for (std::size_t k = 0; k < hnf_.size(); ++k) {
        const std::size_t c = pivots_[k];
        Int q = floor_div(red.residual[c], hnf_[k][c]);
        if (q == 0)
            continue;
        axpy(red.residual, q, hnf_[k]);
        for (std::size_t j = 0; j < ngen_; ++j)
            red.coeffs[j] = checked_add(red.coeffs[j], checked_mul(q, transform_[k][j]));
    }
    red.member = true;
    for (auto x : red.residual)
        if (x != 0)
            red.member = false;
    return red;
}

}  // namespace galeq
