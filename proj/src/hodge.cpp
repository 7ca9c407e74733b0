#include "galeq/hodge.hpp"

#include <algorithm>
#include <set>

namespace galeq {

void ArchParams::validate() const
{
    const Rational shift(n - 1, 2);
    for (const auto& [t, v] : at) {
        if (static_cast<Int>(v.size()) != n)
            raise(ErrorCode::invalid_argument, "archimedean parameter list has the wrong length");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!is_integer(v[i] - shift))
                raise(ErrorCode::invalid_argument, "A - (n-1)/2 must be an integer");
            if (i > 0 && !(v[i - 1] > v[i]))
                raise(ErrorCode::invalid_argument, "archimedean parameters must be strictly decreasing");
        }
    }
}

const std::vector<Rational>& ArchParams::of(Emb t) const
{
    auto it = at.find(t);
    if (it == at.end())
        raise(ErrorCode::invalid_argument, "no archimedean parameters at this embedding");
    return it->second;
}

std::vector<Rational> ArchParams::extended(const CMFieldModel& model, Emb t) const
{
    auto it = at.find(t);
    if (it != at.end())
        return it->second;
    const auto& v = of(model.conj(t));
    std::vector<Rational> out;
    for (auto r = v.rbegin(); r != v.rend(); ++r)
        out.push_back(-*r);
    return out;
}

ArchParams a_to_A(const WeightParam& mu)
{
    if (!is_dominant_G(mu))
        raise(ErrorCode::not_dominant, "weight is not dominant");
    const Int n = mu.n;
    ArchParams ap{n, {}};
    for (const auto& [t, a] : mu.entries) {
        std::vector<Rational> A(static_cast<std::size_t>(n));
        for (Int i = 1; i <= n; ++i)
            A[static_cast<std::size_t>(n - i)] = Rational(-a[static_cast<std::size_t>(i - 1)] + i) - Rational(n + 1, 2);
        ap.at[t] = std::move(A);
    }
    ap.validate();
    return ap;
}

WeightParam A_to_a(const ArchParams& ap, Int a0)
{
    ap.validate();
    const Int n = ap.n;
    WeightParam mu{n, {}, a0};
    for (const auto& [t, A] : ap.at) {
        std::vector<Int> a(static_cast<std::size_t>(n));
        for (Int i = 1; i <= n; ++i) {
            Rational v = -A[static_cast<std::size_t>(n - i)] - Rational(n + 1, 2) + Rational(i);
            a[static_cast<std::size_t>(i - 1)] = v.numerator();
        }
        mu.entries[t] = std::move(a);
    }
    return mu;
}

void HodgeData::validate() const
{
    for (const auto& [t, v] : at) {
        if (static_cast<Int>(v.size()) != rank)
            raise(ErrorCode::invalid_argument, "Hodge list has the wrong length");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].p + v[i].q != weight)
                raise(ErrorCode::invalid_argument, "Hodge pair off the weight");
            if (i > 0 && v[i - 1].p < v[i].p)
                raise(ErrorCode::invalid_argument, "Hodge numbers must be listed decreasingly");
        }
    }
}

HodgeData hodge_of_pi(const CMFieldModel& model, const ArchParams& ap)
{
    ap.validate();
    const Rational c(ap.n - 1, 2);
    HodgeData h{ap.n, ap.n - 1, {}};
    for (auto t : model.embeddings()) {
        std::vector<HodgePair> v;
        for (const auto& A : ap.extended(model, t))
            v.push_back({(-A + c).numerator(), (A + c).numerator()});
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.p > y.p; });
        h.at[t] = std::move(v);
    }
    h.validate();
    return h;
}

HodgeData hodge_of_character(const CMFieldModel& model, const InfinityType& chi)
{
    const Int w = weight_of(model, chi);
    HodgeData h{1, w, {}};
    for (auto t : model.embeddings())
        h.at[t] = {HodgePair{-chi.zexp(t), -chi.zexp(model.conj(t))}};
    h.validate();
    return h;
}

HodgeData hodge_of_eta(const CMFieldModel& model, const EtaDecomposition& dec)
{
    return hodge_of_character(model, eta_from(model, dec.phi, dec.psi, dec.kappa));
}

HodgeData tensor(const HodgeData& a, const HodgeData& b)
{
    HodgeData h{a.rank * b.rank, a.weight + b.weight, {}};
    for (const auto& [t, va] : a.at) {
        auto it = b.at.find(t);
        if (it == b.at.end())
            raise(ErrorCode::invalid_argument, "tensor of Hodge data over different embeddings");
        std::vector<HodgePair> v;
        for (const auto& x : va)
            for (const auto& y : it->second)
                v.push_back({x.p + y.p, x.q + y.q});
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.p > y.p; });
        h.at[t] = std::move(v);
    }
    return h;
}

std::vector<Int> t_set(const HodgeData& h)
{
    std::set<Int> s;
    for (const auto& [t, v] : h.at)
        for (const auto& x : v)
            s.insert(x.p);
    return {s.begin(), s.end()};
}

std::vector<Int> t_set_formula(const ArchParams& ap, const EtaDecomposition& dec)
{
    const Rational c(ap.n - 1, 2);
    std::set<Int> s;
    for (auto t : dec.phi.members()) {
        const Int D = dec.diff.at(t);
        for (const auto& A : ap.of(t)) {
            s.insert((-A + c - Rational(D)).numerator());
            s.insert((A + c + Rational(D - dec.kappa)).numerator());
        }
    }
    return {s.begin(), s.end()};
}

std::vector<Int> CriticalRange::values() const
{
    std::vector<Int> v;
    for (Int m = lo_exclusive + 1; m <= hi_inclusive; ++m)
        v.push_back(m);
    return v;
}

CriticalRange critical_range(const std::vector<Int>& T, Int w)
{
    std::optional<Int> lo, hi;
    for (auto p : T) {
        if (2 * p == w)
            raise(ErrorCode::degenerate_input, "a Hodge number sits at the centre w/2");
        if (2 * p < w && (!lo || p > *lo))
            lo = p;
        if (2 * p > w && (!hi || p < *hi))
            hi = p;
    }
    if (!lo || !hi)
        raise(ErrorCode::invalid_argument, "Hodge numbers do not straddle the centre");
    return CriticalRange{*lo, *hi};
}

std::map<Emb, Int> signature_I_auto(const ArchParams& ap, const EtaDecomposition& dec)
{
    std::map<Emb, Int> I;
    for (auto t : dec.phi.members()) {
        Int count = 0;
        for (const auto& A : ap.of(t)) {
            Rational v = Rational(2 * dec.diff.at(t) - dec.kappa) + 2 * A;
            if (v == 0)
                raise(ErrorCode::degenerate_input, "2(m_tau - m_ctau) - kappa + 2A vanishes");
            if (v < 0)
                ++count;
        }
        I[t] = count;
    }
    return I;
}

std::map<Emb, Int> signature_I_motivic(const HodgeData& M, const HodgeData& Mp, const CMType& phi)
{
    std::map<Emb, Int> I;
    for (auto t : phi.members()) {
        const auto& pq = Mp.at.at(t).at(0);
        Int count = 0;
        for (const auto& x : M.at.at(t)) {
            Int v = 2 * x.p + pq.p - pq.q - M.weight;
            if (v == 0)
                raise(ErrorCode::degenerate_input, "2p_i + p - q - w vanishes");
            if (v > 0)
                ++count;
        }
        I[t] = count;
    }
    return I;
}

std::vector<Int> split_indices(const HodgeData& X, const HodgeData& Y, Emb t)
{
    std::vector<Int> sp(static_cast<std::size_t>(X.rank + 1), 0);
    const Int w = X.weight + Y.weight;
    for (const auto& y : Y.at.at(t)) {
        Int slot = 0;
        for (const auto& x : X.at.at(t)) {
            Int v = 2 * x.p + 2 * y.p - w;
            if (v == 0)
                raise(ErrorCode::degenerate_input, "Hodge numbers interleave degenerately");
            if (v > 0)
                ++slot;
        }
        ++sp[static_cast<std::size_t>(slot)];
    }
    return sp;
}

MainIneqReport mainineq_check(Int m, const WeightParam& mu, const EtaDecomposition& dec, const Signature& sig)
{
    const Int n = mu.n;
    MainIneqReport rep;
    rep.lower = Rational(n - dec.kappa, 2);
    rep.lower_ok = rep.lower <= Rational(m);
    for (auto t : dec.phi.members()) {
        const auto& a = mu.at(t);
        const Int r = sig.at(t).r, s = sig.at(t).s;
        const Int D = dec.diff.at(t);
        MainIneqTerm term;
        if (s < n)
            term.upper1 = -a[static_cast<std::size_t>(s)] + s + D - dec.kappa;
        if (s > 0)
            term.upper2 = a[static_cast<std::size_t>(s - 1)] + r - D;
        for (auto u : {term.upper1, term.upper2})
            if (u && (!rep.upper || *u < *rep.upper))
                rep.upper = u;
        rep.terms[t] = term;
    }
    rep.ok = rep.lower_ok && (!rep.upper || m <= *rep.upper);
    return rep;
}

InstanceData derive_instance(const CMFieldModel& model, const ArchParams& ap, const EtaDecomposition& dec)
{
    ap.validate();
    if (ap.at.size() != dec.phi.size())
        raise(ErrorCode::invalid_argument, "archimedean parameters must be given on the CM type");
    for (auto t : dec.phi.members())
        ap.of(t);
    InstanceData d;
    d.I = signature_I_auto(ap, dec);
    d.M = hodge_of_pi(model, ap);
    d.Mp = hodge_of_eta(model, dec);
    d.tensor = tensor(d.M, d.Mp);
    d.T = t_set(d.tensor);
    d.range = critical_range(d.T, d.tensor.weight);
    std::map<Emb, SigPair> sp;
    for (const auto& [t, i] : d.I)
        sp[t] = SigPair{ap.n - i, i};
    d.sig = Signature(ap.n, sp);
    d.mu = A_to_a(ap, 0);
    return d;
}

std::vector<Int> admissible_points(const InstanceData& inst, Int n, Int kappa)
{
    std::vector<Int> out;
    for (auto m : inst.range.values())
        if (2 * m > 2 * n - kappa)
            out.push_back(m);
    return out;
}

ConsistencyReport corollary_consistency(const CMFieldModel& model, const ArchParams& ap, const EtaDecomposition& dec)
{
    auto inst = derive_instance(model, ap, dec);
    ConsistencyReport rep;
    for (auto m : admissible_points(inst, ap.n, dec.kappa)) {
        rep.checked_points.push_back(m);
        if (!mainineq_check(m, inst.mu, dec, inst.sig).ok) {
            rep.holds = false;
            rep.failing_points.push_back(m);
        }
    }
    return rep;
}

}  // namespace galeq
