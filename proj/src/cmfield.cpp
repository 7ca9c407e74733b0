#include "galeq/cmfield.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace galeq {

CMFieldModel CMFieldModel::create(std::vector<std::string> names, Perm conj,
                                  std::shared_ptr<const FiniteGroup> group, std::vector<Perm> action)
{
    const std::size_t n = names.size();
    if (n == 0 || n % 2 != 0)
        raise(ErrorCode::invalid_model, "number of embeddings must be even and positive");
    if (std::set<std::string>(names.begin(), names.end()).size() != n)
        raise(ErrorCode::invalid_model, "embedding names must be distinct");
    if (conj.size() != n || !is_permutation(conj))
        raise(ErrorCode::invalid_model, "conjugation is not a permutation of the embeddings");
    for (std::size_t i = 0; i < n; ++i)
        if (conj[i] == i || conj[conj[i]] != i)
            raise(ErrorCode::invalid_model, "conjugation must be a fixed-point-free involution");
    if (!group || action.size() != group->order())
        raise(ErrorCode::invalid_model, "one permutation per group element is required");
    for (const auto& p : action) {
        if (p.size() != n || !is_permutation(p))
            raise(ErrorCode::invalid_model, "group action is not by permutations");
        if (compose(p, conj) != compose(conj, p))
            raise(ErrorCode::invalid_model, "group action does not commute with conjugation");
    }
    for (auto a : group->elements())
        for (auto b : group->elements())
            if (action[group->mul(a, b).id] != compose(action[a.id], action[b.id]))
                raise(ErrorCode::invalid_model, "group action is not a homomorphism");

    CMFieldModel m;
    m.names_ = std::move(names);
    m.conj_ = std::move(conj);
    m.group_ = std::move(group);
    m.action_ = std::move(action);
    return m;
}

Emb CMFieldModel::find(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return Emb{i};
    raise(ErrorCode::invalid_argument, "unknown embedding '" + name + "'");
}

std::vector<Emb> CMFieldModel::embeddings() const
{
    std::vector<Emb> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
        out.push_back(Emb{i});
    return out;
}

CMType::CMType(const CMFieldModel& model, std::vector<Emb> members)
{
    std::sort(members.begin(), members.end());
    if (members.size() != model.degree_plus())
        raise(ErrorCode::invalid_cm_type, "a CM type has one embedding per conjugate pair");
    std::set<Emb> seen;
    for (auto t : members) {
        if (t.index >= model.size())
            raise(ErrorCode::invalid_cm_type, "embedding outside the model");
        if (!seen.insert(t).second || seen.count(model.conj(t)))
            raise(ErrorCode::invalid_cm_type, "CM type contains a conjugate pair or a repeat");
    }
    members_ = std::move(members);
}

bool CMType::contains(Emb t) const
{
    return std::binary_search(members_.begin(), members_.end(), t);
}

std::vector<CMType> all_cm_types(const CMFieldModel& model)
{
    std::vector<Emb> reps;
    for (auto t : model.embeddings())
        if (t < model.conj(t))
            reps.push_back(t);
    std::vector<CMType> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << reps.size()); ++mask) {
        std::vector<Emb> mem;
        for (std::size_t k = 0; k < reps.size(); ++k)
            mem.push_back((mask >> k) & 1 ? model.conj(reps[k]) : reps[k]);
        out.emplace_back(model, mem);
    }
    return out;
}

std::string format(const CMFieldModel& model, const CMType& phi)
{
    std::string s = "{";
    for (std::size_t i = 0; i < phi.members().size(); ++i) {
        if (i)
            s += ",";
        s += model.name(phi.members()[i]);
    }
    return s + "}";
}

EmbFamilyModel EmbFamilyModel::create(const CMFieldModel& model, std::vector<std::string> names,
                                      std::size_t base, std::vector<Perm> action)
{
    const auto& G = model.group();
    if (names.empty() || base >= names.size())
        raise(ErrorCode::invalid_model, "family needs a base point among its points");
    if (action.size() != G.order())
        raise(ErrorCode::invalid_model, "one permutation per group element is required");
    for (const auto& p : action)
        if (p.size() != names.size() || !is_permutation(p))
            raise(ErrorCode::invalid_model, "family action is not by permutations");
    for (auto a : G.elements())
        for (auto b : G.elements())
            if (action[G.mul(a, b).id] != compose(action[a.id], action[b.id]))
                raise(ErrorCode::invalid_model, "family action is not a homomorphism");
    EmbFamilyModel f;
    f.names_ = std::move(names);
    f.base_ = base;
    f.action_ = std::move(action);
    return f;
}

EmbFamilyModel EmbFamilyModel::regular(const CMFieldModel& model)
{
    const auto& G = model.group();
    std::vector<std::string> names;
    std::vector<Perm> action;
    for (auto g : G.elements()) {
        names.push_back("g" + std::to_string(g.id));
        Perm p(G.order());
        for (auto h : G.elements())
            p[h.id] = G.mul(g, h).id;
        action.push_back(std::move(p));
    }
    return create(model, std::move(names), G.identity().id, std::move(action));
}

EmbFamilyModel EmbFamilyModel::cosets(const CMFieldModel& model, const std::vector<GroupElem>& subgroup)
{
    const auto& G = model.group();
    // coset of g = sorted set g*H
    std::vector<std::set<std::size_t>> cosets;
    std::vector<std::size_t> coset_of(G.order());
    for (auto g : G.elements()) {
        std::set<std::size_t> c;
        for (auto h : subgroup)
            c.insert(G.mul(g, h).id);
        auto it = std::find(cosets.begin(), cosets.end(), c);
        if (it == cosets.end()) {
            coset_of[g.id] = cosets.size();
            cosets.push_back(c);
        } else {
            coset_of[g.id] = static_cast<std::size_t>(it - cosets.begin());
        }
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < cosets.size(); ++k)
        names.push_back("c" + std::to_string(k));
    std::vector<Perm> action;
    for (auto g : G.elements()) {
        Perm p(cosets.size());
        for (std::size_t k = 0; k < cosets.size(); ++k)
            p[k] = coset_of[G.mul(g, GroupElem{*cosets[k].begin()}).id];
        action.push_back(std::move(p));
    }
    return create(model, std::move(names), coset_of[G.identity().id], std::move(action));
}

ModelBundle build_models(std::vector<std::string> names, const Perm& conj,
                         const std::vector<Perm>& gens_field, std::vector<std::string> family_names,
                         std::size_t family_base, const std::vector<Perm>& gens_family)
{
    const std::size_t nf = names.size();
    const std::size_t ne = family_names.size();
    const bool with_family = ne > 0;
    if (with_family && gens_family.size() != gens_field.size())
        raise(ErrorCode::invalid_model, "each generator needs an image on the family points");

    std::vector<Perm> joint;
    for (std::size_t k = 0; k < gens_field.size(); ++k) {
        if (gens_field[k].size() != nf || !is_permutation(gens_field[k]))
            raise(ErrorCode::invalid_model, "generator is not a permutation of the embeddings");
        Perm p = gens_field[k];
        if (with_family) {
            if (gens_family[k].size() != ne || !is_permutation(gens_family[k]))
                raise(ErrorCode::invalid_model, "generator is not a permutation of the family points");
            for (auto x : gens_family[k])
                p.push_back(x + nf);
        }
        joint.push_back(std::move(p));
    }
    auto group = std::make_shared<FiniteGroup>(FiniteGroup::generated_by(joint, nf + ne));
    std::vector<Perm> act_f, act_e;
    for (auto g : group->elements()) {
        const Perm& p = group->perm(g);
        act_f.emplace_back(p.begin(), p.begin() + static_cast<long>(nf));
        Perm pe;
        for (std::size_t i = nf; i < nf + ne; ++i)
            pe.push_back(p[i] - nf);
        act_e.push_back(std::move(pe));
    }
    ModelBundle out;
    out.field = CMFieldModel::create(std::move(names), conj, group, std::move(act_f));
    if (with_family)
        out.family = EmbFamilyModel::create(out.field, std::move(family_names), family_base, std::move(act_e));
    return out;
}

ModelBundle standard_model(std::size_t d, const std::vector<Perm>& gens)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= d; ++i)
        names.push_back("t" + std::to_string(i));
    for (std::size_t i = 1; i <= d; ++i)
        names.push_back("ct" + std::to_string(i));
    Perm conj(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        conj[i] = i + d;
        conj[i + d] = i;
    }
    return build_models(std::move(names), conj, gens);
}

std::vector<Perm> hyperoctahedral_generators(std::size_t d)
{
    std::vector<Perm> gens;
    Perm flip = identity_perm(2 * d);
    std::swap(flip[0], flip[d]);
    gens.push_back(flip);
    if (d >= 2) {
        Perm cyc(2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            cyc[i] = (i + 1) % d;
            cyc[i + d] = (i + 1) % d + d;
        }
        gens.push_back(cyc);
        Perm sw = identity_perm(2 * d);
        std::swap(sw[0], sw[1]);
        std::swap(sw[d], sw[d + 1]);
        gens.push_back(sw);
    }
    return gens;
}

CMType conjugate_cm_type(const CMFieldModel& model, const CMType& phi, GroupElem g)
{
    std::vector<Emb> out;
    for (auto t : phi.members())
        out.push_back(model.act(g, t));
    return CMType(model, out);
}

int e_phi_sign(const CMFieldModel& model, const CMType& phi, GroupElem g)
{
    CMType gphi = conjugate_cm_type(model, phi, g);
    std::size_t missing = 0;
    for (auto t : phi.members())
        if (!gphi.contains(t))
            ++missing;
    return missing % 2 == 0 ? 1 : -1;
}

std::vector<GroupElem> phi_stabilizer(const CMFieldModel& model, const CMType& phi)
{
    std::vector<GroupElem> out;
    for (auto g : model.group().elements())
        if (conjugate_cm_type(model, phi, g) == phi)
            out.push_back(g);
    return out;
}

std::vector<int> e_phi_family(const CMFieldModel& model, const CMType& phi, const EmbFamilyModel& fam)
{
    std::vector<int> sign(fam.size(), 0);
    for (auto g : model.group().elements()) {
        std::size_t rho = fam.act(g, fam.base());
        int s = e_phi_sign(model, phi, g);
        if (sign[rho] == 0) {
            sign[rho] = s;
        } else if (sign[rho] != s) {
            raise(ErrorCode::ill_posed_model,
                  "sign at point '" + fam.name(rho) + "' depends on the chosen group element");
        }
    }
    for (std::size_t rho = 0; rho < fam.size(); ++rho)
        if (sign[rho] == 0)
            raise(ErrorCode::unreachable_point, "point '" + fam.name(rho) + "' is not in the orbit of the base");
    return sign;
}

InvarianceReport e_phi_galois_invariance_check(const CMFieldModel& model, const CMType& phi,
                                               const EmbFamilyModel& fam,
                                               const std::vector<GroupElem>& fixers)
{
    for (auto g : fixers)
        if (!(conjugate_cm_type(model, phi, g) == phi))
            raise(ErrorCode::precondition, "fixer g" + std::to_string(g.id) + " does not stabilize the CM type");
    auto e = e_phi_family(model, phi, fam);
    InvarianceReport rep;
    for (auto g : fixers) {
        for (std::size_t rho = 0; rho < fam.size(); ++rho) {
            ++rep.checked;
            if (e[fam.act(g, rho)] != e[rho]) {
                rep.holds = false;
                rep.counterexamples.push_back("g" + std::to_string(g.id) + " at " + fam.name(rho));
            }
        }
    }
    return rep;
}

Signature::Signature(Int n, std::map<Emb, SigPair> at) : n_(n), at_(std::move(at))
{
    if (n < 0)
        raise(ErrorCode::invalid_argument, "negative rank");
    for (const auto& [t, p] : at_)
        if (p.r < 0 || p.s < 0 || p.r + p.s != n)
            raise(ErrorCode::invalid_argument, "signature entries must satisfy r + s = n with r, s >= 0");
}

const SigPair& Signature::at(Emb t) const
{
    auto it = at_.find(t);
    if (it == at_.end())
        raise(ErrorCode::invalid_argument, "signature missing an embedding");
    return it->second;
}

SigPair Signature::extended(const CMFieldModel& model, Emb t) const
{
    auto it = at_.find(t);
    if (it != at_.end())
        return it->second;
    auto jt = at_.find(model.conj(t));
    if (jt == at_.end())
        raise(ErrorCode::invalid_argument, "signature missing an embedding");
    return SigPair{jt->second.s, jt->second.r};
}

CMType Signature::support(const CMFieldModel& model) const
{
    std::vector<Emb> mem;
    for (const auto& [t, p] : at_)
        mem.push_back(t);
    return CMType(model, mem);
}

Signature conjugate_signature(const CMFieldModel& model, const Signature& sig, GroupElem g)
{
    CMType phi = sig.support(model);
    std::map<Emb, SigPair> out;
    for (auto t : phi.members())
        out[t] = sig.extended(model, model.act(g, t));
    return Signature(sig.rank(), std::move(out));
}

}  // namespace galeq
