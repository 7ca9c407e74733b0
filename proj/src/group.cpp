#include "galeq/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "galeq/core.hpp"

namespace galeq {

Perm identity_perm(std::size_t n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

Perm compose(const Perm& a, const Perm& b)
{
    if (a.size() != b.size())
        raise(ErrorCode::invalid_argument, "compose: degree mismatch");
    Perm out(a.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

Perm inverse(const Perm& p)
{
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[p[i]] = i;
    return out;
}

bool is_permutation(const Perm& p)
{
    std::vector<bool> seen(p.size(), false);
    for (auto x : p) {
        if (x >= p.size() || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

FiniteGroup FiniteGroup::generated_by(const std::vector<Perm>& gens, std::size_t degree)
{
    for (const auto& g : gens)
        if (g.size() != degree || !is_permutation(g))
            raise(ErrorCode::invalid_model, "group generator is not a permutation of the right degree");

    FiniteGroup G;
    G.degree_ = degree;
    std::map<Perm, std::size_t> index;
    G.elems_.push_back(identity_perm(degree));
    index[G.elems_[0]] = 0;
    for (std::size_t k = 0; k < G.elems_.size(); ++k) {
        for (const auto& g : gens) {
            Perm h = compose(g, G.elems_[k]);
            if (!index.count(h)) {
                index[h] = G.elems_.size();
                G.elems_.push_back(h);
            }
        }
    }
    const std::size_t n = G.elems_.size();
    G.table_.assign(n, std::vector<std::size_t>(n));
    G.inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            G.table_[a][b] = index.at(compose(G.elems_[a], G.elems_[b]));
        G.inv_[a] = index.at(inverse(G.elems_[a]));
    }
    return G;
}

GroupElem FiniteGroup::mul(GroupElem a, GroupElem b) const { return GroupElem{table_[a.id][b.id]}; }
GroupElem FiniteGroup::inv(GroupElem a) const { return GroupElem{inv_[a.id]}; }

GroupElem FiniteGroup::pow(GroupElem a, long k) const
{
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    GroupElem r = identity();
    for (long i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

GroupElem FiniteGroup::find(const Perm& p) const
{
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == p)
            return GroupElem{i};
    raise(ErrorCode::invalid_argument, "permutation is not in the group");
}

bool FiniteGroup::contains(const Perm& p) const
{
    return std::find(elems_.begin(), elems_.end(), p) != elems_.end();
}

std::vector<GroupElem> FiniteGroup::elements() const
{
    std::vector<GroupElem> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
        out.push_back(GroupElem{i});
    return out;
}

std::vector<std::vector<GroupElem>> FiniteGroup::subgroups(std::size_t max_order) const
{
    // Grow subgroups one generator at a time; every subgroup of bounded order
    // is reached through subgroups of smaller order.
    auto closure = [&](std::set<std::size_t> s) {
        std::vector<std::size_t> frontier(s.begin(), s.end());
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (auto a : frontier)
                for (auto b : std::vector<std::size_t>(s.begin(), s.end())) {
                    for (auto c : {table_[a][b], table_[b][a]})
                        if (s.insert(c).second)
                            next.push_back(c);
                }
            frontier = std::move(next);
            if (s.size() > max_order)
                break;
        }
        return s;
    };

    std::set<std::set<std::size_t>> found;
    std::vector<std::set<std::size_t>> queue{{0}};
    found.insert(queue[0]);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (std::size_t g = 0; g < order(); ++g) {
            if (queue[k].count(g))
                continue;
            auto s = queue[k];
            s.insert(g);
            s = closure(s);
            if (s.size() <= max_order && found.insert(s).second)
                queue.push_back(s);
        }
    }
    std::vector<std::vector<GroupElem>> out;
    for (const auto& s : found) {
        std::vector<GroupElem> v;
        for (auto x : s)
            v.push_back(GroupElem{x});
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace galeq
