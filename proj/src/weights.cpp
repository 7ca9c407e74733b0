#include "galeq/weights.hpp"

#include <algorithm>

namespace galeq {

const std::vector<Int>& WeightParam::at(Emb t) const
{
    auto it = entries.find(t);
    if (it == entries.end())
        raise(ErrorCode::invalid_argument, "weight has no entry at this embedding");
    return it->second;
}

static void require_shape(const WeightParam& w)
{
    for (const auto& [t, v] : w.entries)
        if (static_cast<Int>(v.size()) != w.n)
            raise(ErrorCode::invalid_argument, "weight entry has the wrong length");
}

WeightParam operator+(const WeightParam& a, const WeightParam& b)
{
    require_shape(a);
    require_shape(b);
    if (a.n != b.n || a.entries.size() != b.entries.size())
        raise(ErrorCode::invalid_argument, "adding weights of different shapes");
    WeightParam out{a.n, {}, checked_add(a.a0, b.a0)};
    for (const auto& [t, v] : a.entries) {
        const auto& u = b.at(t);
        std::vector<Int> s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            s[i] = checked_add(v[i], u[i]);
        out.entries[t] = std::move(s);
    }
    return out;
}

WeightParam operator-(const WeightParam& a)
{
    WeightParam out{a.n, {}, -a.a0};
    for (const auto& [t, v] : a.entries) {
        std::vector<Int> s;
        for (auto x : v)
            s.push_back(-x);
        out.entries[t] = std::move(s);
    }
    return out;
}

static bool weakly_decreasing(const std::vector<Int>& v, std::size_t lo, std::size_t hi)
{
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (v[i - 1] < v[i])
            return false;
    return true;
}

bool is_dominant_G(const WeightParam& w)
{
    require_shape(w);
    for (const auto& [t, v] : w.entries)
        if (!weakly_decreasing(v, 0, v.size()))
            return false;
    return true;
}

bool is_dominant_K(const WeightParam& w, const Signature& sig)
{
    require_shape(w);
    if (sig.rank() != w.n)
        raise(ErrorCode::invalid_argument, "signature rank differs from weight rank");
    for (const auto& [t, v] : w.entries) {
        auto r = static_cast<std::size_t>(sig.at(t).r);
        if (!weakly_decreasing(v, 0, r) || !weakly_decreasing(v, r, v.size()))
            return false;
    }
    return true;
}

WeightParam big_lambda(const CMFieldModel& model, const WeightParam& mu, const InfinityType& psi,
                       const Signature& sig)
{
    require_shape(mu);
    require_model_size(model, psi);
    if (!is_dominant_G(mu))
        raise(ErrorCode::not_dominant, "mu is not dominant");
    if (sig.rank() != mu.n)
        raise(ErrorCode::invalid_argument, "signature rank differs from weight rank");
    const Int n = mu.n;
    WeightParam out{n, {}, mu.a0};
    Int conj_sum = 0;
    for (const auto& [t, a] : mu.entries) {
        const Int r = sig.at(t).r, s = sig.at(t).s;
        const Int shift = psi.m(model.conj(t)) - psi.m(t);
        std::vector<Int> b(static_cast<std::size_t>(n));
        // a is 0-based: a[k] is a_{tau,k+1}
        for (Int i = 1; i <= n; ++i) {
            b[static_cast<std::size_t>(i - 1)] = i <= r
                ? a[static_cast<std::size_t>(s + i - 1)] + shift - s
                : a[static_cast<std::size_t>(i - r - 1)] + shift + r;
        }
        out.entries[t] = std::move(b);
        conj_sum = checked_add(conj_sum, psi.m(model.conj(t)));
    }
    out.a0 = checked_add(mu.a0, -checked_mul(n, conj_sum));
    if (!is_dominant_K(out, sig))
        raise(ErrorCode::invariant_violation, "K-type weight came out non-dominant");
    return out;
}

WeightParam lambda_star(const WeightParam& l)
{
    WeightParam out{l.n, {}, -l.a0};
    for (const auto& [t, v] : l.entries) {
        std::vector<Int> s(v.rbegin(), v.rend());
        for (auto& x : s)
            x = -x;
        out.entries[t] = std::move(s);
    }
    return out;
}

WeightParam det_twist(const WeightParam& l, Int k)
{
    WeightParam out = l;
    for (auto& [t, v] : out.entries)
        for (auto& x : v)
            x = checked_add(x, k);
    out.a0 = checked_add(out.a0, k);
    return out;
}

WeightParam nu_twist(const WeightParam& l, Int k)
{
    WeightParam out = l;
    out.a0 = checked_add(out.a0, k);
    return out;
}

WeightParam pair_sharp(const WeightParam& l, const WeightParam& lm)
{
    if (l.n != lm.n || l.entries.size() != lm.entries.size())
        raise(ErrorCode::invalid_argument, "pairing weights of different shapes");
    WeightParam out{2 * l.n, {}, checked_add(l.a0, lm.a0)};
    for (const auto& [t, v] : l.entries) {
        std::vector<Int> s = v;
        const auto& u = lm.at(t);
        s.insert(s.end(), u.begin(), u.end());
        out.entries[t] = std::move(s);
    }
    return out;
}

WeightParam lambda_sharp_kappa(const WeightParam& l, Int kappa)
{
    require_shape(l);
    WeightParam out{2 * l.n, {}, 0};
    for (const auto& [t, v] : l.entries) {
        std::vector<Int> s = v;
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            s.push_back(checked_add(-*it, -kappa));
        out.entries[t] = std::move(s);
    }
    return out;
}

WeightParam lambda_sharp_kappa_composed(const WeightParam& l, Int kappa)
{
    require_shape(l);
    return nu_twist(pair_sharp(l, det_twist(lambda_star(l), -kappa)), kappa);
}

WeightParam mu_of_psi(const CMFieldModel& model, const CMType& phi, const InfinityType& psi, Int n)
{
    require_model_size(model, psi);
    WeightParam out{n, {}, 0};
    Int conj_sum = 0;
    for (auto t : phi.members()) {
        out.entries[t] = std::vector<Int>(static_cast<std::size_t>(n), psi.m(t) - psi.m(model.conj(t)));
        conj_sum = checked_add(conj_sum, psi.m(model.conj(t)));
    }
    out.a0 = checked_mul(n, conj_sum);
    return out;
}

WeightParam line_bundle_weight(const CMType& phi, Int m, Int kappa, Int n)
{
    WeightParam out{2 * n, {}, 0};
    for (auto t : phi.members()) {
        std::vector<Int> v(static_cast<std::size_t>(n), -m - kappa);
        v.insert(v.end(), static_cast<std::size_t>(n), m);
        out.entries[t] = std::move(v);
    }
    return out;
}

static std::vector<Int> extended_entry(const CMFieldModel& model, const WeightParam& w, Emb t, WeightExtension ext)
{
    auto it = w.entries.find(t);
    if (it != w.entries.end())
        return it->second;
    const auto& v = w.at(model.conj(t));
    if (ext == WeightExtension::identity)
        return v;
    std::vector<Int> s(v.rbegin(), v.rend());
    for (auto& x : s)
        x = -x;
    return s;
}

WeightParam conjugate_weight(const CMFieldModel& model, const WeightParam& w, GroupElem g, WeightExtension ext)
{
    require_shape(w);
    WeightParam out{w.n, {}, w.a0};
    for (const auto& [t, v] : w.entries)
        out.entries[t] = extended_entry(model, w, model.act(g, t), ext);
    return out;
}

}  // namespace galeq
