#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galeq/cmfield.hpp"

namespace galeq {

/// Infinity type of an algebraic Hecke character on every embedding.
///
/// Stored as the exponent of z at each embedding. The other common
/// convention writes the character as prod tau(x)^{-m_tau}, so m = -zexp;
/// use from_m / m() at the boundary.
class InfinityType {
public:
    InfinityType() = default;
    static InfinityType from_zexp(std::vector<Int> z) { return InfinityType(std::move(z)); }
    static InfinityType from_m(const std::vector<Int>& m);

    std::size_t size() const { return z_.size(); }
    Int zexp(Emb t) const { return z_.at(t.index); }
    Int m(Emb t) const { return -z_.at(t.index); }
    const std::vector<Int>& zexps() const { return z_; }
    std::vector<Int> m_values() const;

    InfinityType operator*(const InfinityType& o) const;
    InfinityType inverse() const;
    bool operator==(const InfinityType&) const = default;

private:
    explicit InfinityType(std::vector<Int> z) : z_(std::move(z)) {}
    std::vector<Int> z_;
};

void require_model_size(const CMFieldModel& model, const InfinityType& t);

/// exps'(tau) = exps(g^{-1} tau); this is the infinity type of sigma o chi.
InfinityType conjugate_infinity(const CMFieldModel& model, const InfinityType& t, GroupElem g);
/// exps'(tau) = exps(g tau), i.e. conjugate_infinity by g^{-1}. This is the
/// direction matching conjugate_weight and conjugate_signature.
InfinityType pullback_infinity(const CMFieldModel& model, const InfinityType& t, GroupElem g);
/// chi o c
InfinityType complex_conjugate(const CMFieldModel& model, const InfinityType& t);

/// omega with m_tau + m_conj(tau) = omega for all tau (so a + b = -omega for
/// z-exponents a, b). Throws not_algebraic if the sum is not constant.
Int weight_of(const CMFieldModel& model, const InfinityType& t);

/// Infinity type of z^kappa on phi, trivial off phi.
InfinityType alpha_type(const CMFieldModel& model, const CMType& phi, Int kappa);

/// eta with eta^c = (psi / psi^c) * alpha.
InfinityType eta_from(const CMFieldModel& model, const CMType& phi, const InfinityType& psi, Int kappa);

struct EtaDecomposition {
    CMType phi;
    Int kappa = 0;
    /// m_tau - m_conj(tau) for tau in phi
    std::map<Emb, Int> diff;
    /// The solution with m_tau + m_conj(tau) in {0,1}; every other solution
    /// is psi with all m shifted by one integer.
    InfinityType psi;
};

struct ParityObstruction {
    Int omega = 0;
    std::vector<Emb> odd;
    std::vector<Emb> even;
    /// A CM type for which a decomposition exists, if any.
    std::optional<CMType> working_phi;
    std::string reason;
};

std::variant<EtaDecomposition, ParityObstruction>
tilde_alpha_decomposition(const CMFieldModel& model, const InfinityType& eta, const CMType& phi);

/// Convenience: decomposition or throws precondition with the obstruction.
EtaDecomposition decompose_or_throw(const CMFieldModel& model, const InfinityType& eta, const CMType& phi);

/// Build a decomposition from (m_tau - m_conj(tau))_{tau in phi} and kappa.
EtaDecomposition decomposition_from_diff(const CMFieldModel& model, const CMType& phi,
                                         std::map<Emb, Int> diff, Int kappa);

enum class Solvability { solvable_fixed_phi, solvable_some_phi, unsolvable };
const char* to_string(Solvability s);

/// Without phi: solvable_some_phi or unsolvable. With phi: solvable_fixed_phi
/// when that CM type works.
Solvability parity_predicate(const CMFieldModel& model, const InfinityType& eta,
                             const std::optional<CMType>& phi = std::nullopt);

}  // namespace galeq
