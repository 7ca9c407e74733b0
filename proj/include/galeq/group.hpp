#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace galeq {

/// A permutation of {0..n-1}; p[i] is the image of i.
using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n);
/// (a*b)(i) = a(b(i)), so b acts first.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);

struct GroupElem {
    std::size_t id = 0;
    auto operator<=>(const GroupElem&) const = default;
};

/// A finite permutation group with a precomputed Cayley table. Elements are
/// numbered in BFS order from the identity, which is element 0.
class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Closure of the generators; all must have the same degree.
    static FiniteGroup generated_by(const std::vector<Perm>& gens, std::size_t degree);

    std::size_t order() const { return elems_.size(); }
    std::size_t degree() const { return degree_; }
    GroupElem identity() const { return GroupElem{0}; }
    GroupElem mul(GroupElem a, GroupElem b) const;
    GroupElem inv(GroupElem a) const;
    GroupElem pow(GroupElem a, long k) const;
    const Perm& perm(GroupElem a) const { return elems_[a.id]; }
    /// Element with the given permutation; throws if absent.
    GroupElem find(const Perm& p) const;
    bool contains(const Perm& p) const;
    std::vector<GroupElem> elements() const;

    /// Every subgroup (as sorted element lists) of order at most max_order.
    std::vector<std::vector<GroupElem>> subgroups(std::size_t max_order) const;

private:
    std::size_t degree_ = 0;
    std::vector<Perm> elems_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inv_;
};

}  // namespace galeq
