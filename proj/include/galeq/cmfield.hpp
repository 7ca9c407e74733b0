#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galeq/core.hpp"
#include "galeq/group.hpp"

namespace galeq {

/// Embeddings of a CM field with complex conjugation and a finite group
/// acting on them through permutations commuting with conjugation.
class CMFieldModel {
public:
    CMFieldModel() = default;
    static CMFieldModel create(std::vector<std::string> names, Perm conj,
                               std::shared_ptr<const FiniteGroup> group, std::vector<Perm> action);

    std::size_t size() const { return names_.size(); }
    std::size_t degree_plus() const { return names_.size() / 2; }
    Emb conj(Emb t) const { return Emb{conj_[t.index]}; }
    Emb act(GroupElem g, Emb t) const { return Emb{action_[g.id][t.index]}; }
    const Perm& action(GroupElem g) const { return action_[g.id]; }
    const Perm& conj_perm() const { return conj_; }
    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const std::string& name(Emb t) const { return names_[t.index]; }
    const std::vector<std::string>& names() const { return names_; }
    Emb find(const std::string& name) const;
    std::vector<Emb> embeddings() const;

private:
    std::vector<std::string> names_;
    Perm conj_;
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Perm> action_;
};

/// Exactly one embedding from each conjugate pair.
class CMType {
public:
    CMType() = default;
    /// Validates against the model; throws invalid_cm_type.
    CMType(const CMFieldModel& model, std::vector<Emb> members);

    const std::vector<Emb>& members() const { return members_; }
    bool contains(Emb t) const;
    std::size_t size() const { return members_.size(); }
    bool operator==(const CMType&) const = default;

private:
    std::vector<Emb> members_;
};

std::vector<CMType> all_cm_types(const CMFieldModel& model);
std::string format(const CMFieldModel& model, const CMType& phi);

/// A finite set of points (embeddings of a larger field) with an action of
/// the model's group, and a base point.
class EmbFamilyModel {
public:
    EmbFamilyModel() = default;
    static EmbFamilyModel create(const CMFieldModel& model, std::vector<std::string> names,
                                 std::size_t base, std::vector<Perm> action);
    /// The group acting on itself by left multiplication, based at the identity.
    static EmbFamilyModel regular(const CMFieldModel& model);
    /// Left cosets of a subgroup, based at the trivial coset.
    static EmbFamilyModel cosets(const CMFieldModel& model, const std::vector<GroupElem>& subgroup);

    std::size_t size() const { return names_.size(); }
    std::size_t base() const { return base_; }
    std::size_t act(GroupElem g, std::size_t rho) const { return action_[g.id][rho]; }
    const std::string& name(std::size_t rho) const { return names_[rho]; }

private:
    std::vector<std::string> names_;
    std::size_t base_ = 0;
    std::vector<Perm> action_;
};

struct ModelBundle {
    CMFieldModel field;
    std::optional<EmbFamilyModel> family;
};

/// Builds the group from generators acting jointly on the embeddings and,
/// optionally, on family points. gens_field[k] and gens_family[k] are the
/// two halves of the k-th generator.
ModelBundle build_models(std::vector<std::string> names, const Perm& conj,
                         const std::vector<Perm>& gens_field,
                         std::vector<std::string> family_names = {}, std::size_t family_base = 0,
                         const std::vector<Perm>& gens_family = {});

/// Embeddings t1..td, ct1..ctd with conj(ti) = cti.
ModelBundle standard_model(std::size_t d, const std::vector<Perm>& gens);

/// The signed-permutation group of the standard model (centralizer of conj).
std::vector<Perm> hyperoctahedral_generators(std::size_t d);

CMType conjugate_cm_type(const CMFieldModel& model, const CMType& phi, GroupElem g);

/// (-1)^{|phi \ g phi|}
int e_phi_sign(const CMFieldModel& model, const CMType& phi, GroupElem g);

std::vector<GroupElem> phi_stabilizer(const CMFieldModel& model, const CMType& phi);

/// Sign at every family point, computed through any g with g.base = point.
/// Throws unreachable_point or ill_posed_model.
std::vector<int> e_phi_family(const CMFieldModel& model, const CMType& phi,
                              const EmbFamilyModel& fam);

struct InvarianceReport {
    bool holds = true;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
};

/// Checks e(g rho) = e(rho) for every fixer g and point rho. Each fixer must
/// stabilize phi (precondition error otherwise).
InvarianceReport e_phi_galois_invariance_check(const CMFieldModel& model, const CMType& phi,
                                               const EmbFamilyModel& fam,
                                               const std::vector<GroupElem>& fixers);

struct SigPair {
    Int r = 0;
    Int s = 0;
    bool operator==(const SigPair&) const = default;
};

/// (r_tau, s_tau) for tau in a CM type, with r + s = n.
class Signature {
public:
    Signature() = default;
    Signature(Int n, std::map<Emb, SigPair> at);

    Int rank() const { return n_; }
    const std::map<Emb, SigPair>& entries() const { return at_; }
    const SigPair& at(Emb t) const;
    /// Value on any embedding, using (r,s) at conj(t) = (s,r) at t.
    SigPair extended(const CMFieldModel& model, Emb t) const;
    CMType support(const CMFieldModel& model) const;
    bool operator==(const Signature&) const = default;

private:
    Int n_ = 0;
    std::map<Emb, SigPair> at_;
};

/// tau -> (r_{g tau}, s_{g tau}) on the same CM type.
Signature conjugate_signature(const CMFieldModel& model, const Signature& sig, GroupElem g);

}  // namespace galeq
