#pragma once

#include <vector>

#include "galeq/core.hpp"

namespace galeq {

/// Integer row lattice kept in Hermite normal form, with the unimodular
/// transform back to the generating rows.
class IntLattice {
public:
    IntLattice() = default;
    IntLattice(std::size_t dim, std::vector<std::vector<Int>> rows);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return hnf_.size(); }
    const std::vector<std::vector<Int>>& hnf() const { return hnf_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    struct Reduction {
        /// v minus a lattice vector; zero iff v is in the lattice
        std::vector<Int> residual;
        /// coefficients of the subtracted vector over the generating rows
        std::vector<Int> coeffs;
        bool member = false;
    };

    Reduction reduce(const std::vector<Int>& v) const;
    bool contains(const std::vector<Int>& v) const { return reduce(v).member; }

private:
    std::size_t dim_ = 0;
    std::size_t ngen_ = 0;
    std::vector<std::vector<Int>> hnf_;
    std::vector<std::vector<Int>> transform_;
    std::vector<std::size_t> pivots_;
};

}  // namespace galeq
