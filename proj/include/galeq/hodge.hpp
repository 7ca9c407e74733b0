#pragma once

#include <map>
#include <optional>
#include <vector>

#include "galeq/cmfield.hpp"
#include "galeq/hecke.hpp"
#include "galeq/weights.hpp"

namespace galeq {

/// Archimedean parameters A_{tau,1} > ... > A_{tau,n} on each tau in phi,
/// half-integers with A - (n-1)/2 integral.
struct ArchParams {
    Int n = 0;
    std::map<Emb, std::vector<Rational>> at;

    void validate() const;
    const std::vector<Rational>& of(Emb t) const;
    /// A at conj(tau) is the reversed negation of A at tau.
    std::vector<Rational> extended(const CMFieldModel& model, Emb t) const;
    bool operator==(const ArchParams&) const = default;
};

/// A_{tau,n+1-i} = -a_{tau,i} - (n+1)/2 + i
ArchParams a_to_A(const WeightParam& mu);
/// inverse of a_to_A, with the given scalar
WeightParam A_to_a(const ArchParams& ap, Int a0 = 0);

struct HodgePair {
    Int p = 0;
    Int q = 0;
    bool operator==(const HodgePair&) const = default;
};

/// Hodge types at every embedding; p strictly decreasing in each list and
/// p + q = weight throughout.
struct HodgeData {
    Int rank = 0;
    Int weight = 0;
    std::map<Emb, std::vector<HodgePair>> at;

    void validate() const;
    bool operator==(const HodgeData&) const = default;
};

/// pairs (-A + (n-1)/2, A + (n-1)/2) at tau in phi, swapped at conj(tau)
HodgeData hodge_of_pi(const CMFieldModel& model, const ArchParams& ap);
/// (p,q) is minus the (z, zbar) exponent pair of the character
HodgeData hodge_of_character(const CMFieldModel& model, const InfinityType& chi);
HodgeData hodge_of_eta(const CMFieldModel& model, const EtaDecomposition& dec);
HodgeData tensor(const HodgeData& a, const HodgeData& b);

/// Hodge numbers p of the restriction of scalars to Q (all embeddings).
std::vector<Int> t_set(const HodgeData& h);
/// The same set from the closed formula in A, the differences and kappa.
std::vector<Int> t_set_formula(const ArchParams& ap, const EtaDecomposition& dec);

struct CriticalRange {
    Int lo_exclusive = 0;
    Int hi_inclusive = 0;
    std::vector<Int> values() const;
};

/// max{p < w/2} < m <= min{p > w/2}; degenerate_input if some p = w/2.
CriticalRange critical_range(const std::vector<Int>& T, Int w);

/// I(tau) = #{i : 2(m_tau - m_ctau) - kappa + 2 A_{tau,i} < 0}
std::map<Emb, Int> signature_I_auto(const ArchParams& ap, const EtaDecomposition& dec);
/// I(tau) = #{i : 2 p_i(tau) + p(tau) - q(tau) - w(M) > 0}
std::map<Emb, Int> signature_I_motivic(const HodgeData& M, const HodgeData& Mp, const CMType& phi);

/// sp(j, X; Y, tau) for j = 0..rank(X), counting Hodge numbers of Y by the
/// slot where -p_y falls among the shifted Hodge numbers of X.
std::vector<Int> split_indices(const HodgeData& X, const HodgeData& Y, Emb t);

struct MainIneqTerm {
    std::optional<Int> upper1;  // -a_{s+1} + s + diff - kappa, absent when s = n
    std::optional<Int> upper2;  // a_s + r - diff, absent when s = 0
};

struct MainIneqReport {
    bool ok = false;
    bool lower_ok = false;
    Rational lower;
    std::optional<Int> upper;
    std::map<Emb, MainIneqTerm> terms;
};

/// (n - kappa)/2 <= m <= min over tau of the present upper terms.
MainIneqReport mainineq_check(Int m, const WeightParam& mu, const EtaDecomposition& dec, const Signature& sig);

/// Everything derived for one (A, eta) instance.
struct InstanceData {
    HodgeData M;
    HodgeData Mp;
    HodgeData tensor;
    std::vector<Int> T;
    CriticalRange range;
    std::map<Emb, Int> I;
    Signature sig;    // (n - I, I)
    WeightParam mu;   // from A, scalar 0
};

/// Throws degenerate_input when 2 diff - kappa + 2A vanishes somewhere.
InstanceData derive_instance(const CMFieldModel& model, const ArchParams& ap, const EtaDecomposition& dec);

struct ConsistencyReport {
    bool holds = true;
    std::vector<Int> checked_points;
    std::vector<Int> failing_points;
};

/// Every critical m > n - kappa/2 satisfies mainineq with s = I.
ConsistencyReport corollary_consistency(const CMFieldModel& model, const ArchParams& ap, const EtaDecomposition& dec);

/// Critical m with m > n - kappa/2.
std::vector<Int> admissible_points(const InstanceData& inst, Int n, Int kappa);

}  // namespace galeq
