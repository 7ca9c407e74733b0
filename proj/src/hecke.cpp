#include "galeq/hecke.hpp"

#include <algorithm>

namespace galeq {

InfinityType InfinityType::from_m(const std::vector<Int>& m)
{
    std::vector<Int> z;
    for (auto x : m)
        z.push_back(-x);
    return InfinityType(std::move(z));
}

std::vector<Int> InfinityType::m_values() const
{
    std::vector<Int> m;
    for (auto x : z_)
        m.push_back(-x);
    return m;
}

InfinityType InfinityType::operator*(const InfinityType& o) const
{
    if (o.size() != size())
        raise(ErrorCode::invalid_argument, "infinity types over different fields");
    std::vector<Int> z(size());
    for (std::size_t i = 0; i < size(); ++i)
        z[i] = checked_add(z_[i], o.z_[i]);
    return InfinityType(std::move(z));
}

InfinityType InfinityType::inverse() const { return from_m(z_); }

void require_model_size(const CMFieldModel& model, const InfinityType& t)
{
    if (t.size() != model.size())
        raise(ErrorCode::invalid_argument, "infinity type must be defined on every embedding");
}

InfinityType conjugate_infinity(const CMFieldModel& model, const InfinityType& t, GroupElem g)
{
    return pullback_infinity(model, t, model.group().inv(g));
}

InfinityType pullback_infinity(const CMFieldModel& model, const InfinityType& t, GroupElem g)
{
    require_model_size(model, t);
    std::vector<Int> z(t.size());
    for (auto e : model.embeddings())
        z[e.index] = t.zexp(model.act(g, e));
    return InfinityType::from_zexp(std::move(z));
}

InfinityType complex_conjugate(const CMFieldModel& model, const InfinityType& t)
{
    require_model_size(model, t);
    std::vector<Int> z(t.size());
    for (auto e : model.embeddings())
        z[e.index] = t.zexp(model.conj(e));
    return InfinityType::from_zexp(std::move(z));
}

Int weight_of(const CMFieldModel& model, const InfinityType& t)
{
    require_model_size(model, t);
    std::optional<Int> w;
    for (auto e : model.embeddings()) {
        Int s = t.m(e) + t.m(model.conj(e));
        if (w && *w != s)
            raise(ErrorCode::not_algebraic, "m_tau + m_conj(tau) is not constant");
        w = s;
    }
    return *w;
}

InfinityType alpha_type(const CMFieldModel& model, const CMType& phi, Int kappa)
{
    std::vector<Int> z(model.size(), 0);
    for (auto t : phi.members())
        z[t.index] = kappa;
    return InfinityType::from_zexp(std::move(z));
}

InfinityType eta_from(const CMFieldModel& model, const CMType& phi, const InfinityType& psi, Int kappa)
{
    weight_of(model, psi);
    InfinityType psi_tilde = psi * complex_conjugate(model, psi).inverse();
    InfinityType eta_c = psi_tilde * alpha_type(model, phi, kappa);
    return complex_conjugate(model, eta_c);
}

EtaDecomposition decomposition_from_diff(const CMFieldModel& model, const CMType& phi,
                                         std::map<Emb, Int> diff, Int kappa)
{
    std::optional<Int> parity;
    for (auto t : phi.members()) {
        auto it = diff.find(t);
        if (it == diff.end())
            raise(ErrorCode::invalid_argument, "difference missing for an embedding of the CM type");
        Int p = ((it->second % 2) + 2) % 2;
        if (parity && *parity != p)
            raise(ErrorCode::not_algebraic, "differences m_tau - m_conj(tau) must share a parity");
        parity = p;
    }
    if (diff.size() != phi.size())
        raise(ErrorCode::invalid_argument, "difference given off the CM type");
    const Int w = *parity;
    std::vector<Int> m(model.size());
    for (auto t : phi.members()) {
        m[t.index] = (diff[t] + w) / 2;
        m[model.conj(t).index] = (w - diff[t]) / 2;
    }
    EtaDecomposition out;
    out.phi = phi;
    out.kappa = kappa;
    out.diff = std::move(diff);
    out.psi = InfinityType::from_m(m);
    return out;
}

static std::optional<CMType> parity_fixing_phi(const CMFieldModel& model, const InfinityType& eta)
{
    // a(tau) + a(conj tau) = -omega; when omega is odd exactly one of each
    // pair is even, so collecting the even ones gives a working CM type.
    for (Int target : {0, 1}) {
        std::vector<Emb> mem;
        for (auto t : model.embeddings())
            if (t < model.conj(t)) {
                Int p = ((eta.zexp(t) % 2) + 2) % 2;
                mem.push_back(p == target ? t : model.conj(t));
            }
        CMType phi(model, mem);
        bool ok = true;
        for (auto t : phi.members())
            ok = ok && (((eta.zexp(t) % 2) + 2) % 2) == target;
        if (ok)
            return phi;
    }
    return std::nullopt;
}

std::variant<EtaDecomposition, ParityObstruction>
tilde_alpha_decomposition(const CMFieldModel& model, const InfinityType& eta, const CMType& phi)
{
    const Int omega = weight_of(model, eta);
    // eta has z-exponent (m_tau - m_ctau) at tau in phi and the rest of kappa
    // at conj(tau), so kappa = a(tau) + a(conj tau) = -omega.
    const Int kappa = -omega;
    ParityObstruction obs;
    obs.omega = omega;
    std::map<Emb, Int> diff;
    for (auto t : phi.members()) {
        diff[t] = eta.zexp(t);
        (eta.zexp(t) % 2 == 0 ? obs.even : obs.odd).push_back(t);
    }
    if (obs.even.empty() || obs.odd.empty())
        return decomposition_from_diff(model, phi, std::move(diff), kappa);

    obs.working_phi = parity_fixing_phi(model, eta);
    obs.reason = omega % 2 == 0
        ? "weight is even and the z-exponents have mixed parity; no CM type works"
        : "z-exponents on this CM type have mixed parity; the weight is odd so another CM type works";
    return obs;
}

EtaDecomposition decompose_or_throw(const CMFieldModel& model, const InfinityType& eta, const CMType& phi)
{
    auto r = tilde_alpha_decomposition(model, eta, phi);
    if (auto* obs = std::get_if<ParityObstruction>(&r))
        raise(ErrorCode::precondition, "no decomposition: " + obs->reason);
    return std::get<EtaDecomposition>(std::move(r));
}

const char* to_string(Solvability s)
{
    switch (s) {
    case Solvability::solvable_fixed_phi: return "solvable_fixed_phi";
    case Solvability::solvable_some_phi: return "solvable_some_phi";
    case Solvability::unsolvable: return "unsolvable";
    }
    return "unknown";
}

Solvability parity_predicate(const CMFieldModel& model, const InfinityType& eta, const std::optional<CMType>& phi)
{
    const Int omega = weight_of(model, eta);
    bool some;
    if (omega % 2 != 0) {
        some = true;
    } else {
        bool has_even = false, has_odd = false;
        for (auto t : model.embeddings())
            (eta.zexp(t) % 2 == 0 ? has_even : has_odd) = true;
        some = !(has_even && has_odd);
    }
    if (!some)
        return Solvability::unsolvable;
    if (phi) {
        bool has_even = false, has_odd = false;
        for (auto t : phi->members())
            (eta.zexp(t) % 2 == 0 ? has_even : has_odd) = true;
        if (!(has_even && has_odd))
            return Solvability::solvable_fixed_phi;
    }
    return Solvability::solvable_some_phi;
}

}  // namespace galeq
