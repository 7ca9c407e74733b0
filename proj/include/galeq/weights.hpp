#pragma once

#include <map>
#include <vector>

#include "galeq/cmfield.hpp"
#include "galeq/hecke.hpp"

namespace galeq {

/// ((a_{tau,1..n})_{tau in phi}; a0). Entries may be keyed by any set of
/// embeddings; most operations expect a CM type.
struct WeightParam {
    Int n = 0;
    std::map<Emb, std::vector<Int>> entries;
    Int a0 = 0;

    const std::vector<Int>& at(Emb t) const;
    bool operator==(const WeightParam&) const = default;
};

WeightParam operator+(const WeightParam& a, const WeightParam& b);
WeightParam operator-(const WeightParam& a);

/// Weakly decreasing on each embedding.
bool is_dominant_G(const WeightParam& w);
/// Weakly decreasing on the blocks [1..r] and [r+1..n] of each embedding.
bool is_dominant_K(const WeightParam& w, const Signature& sig);

/// Highest weight of the K-type attached to mu twisted by psi.
/// Throws not_dominant when mu is not dominant.
WeightParam big_lambda(const CMFieldModel& model, const WeightParam& mu, const InfinityType& psi,
                       const Signature& sig);

/// reversed and negated entries, negated scalar
WeightParam lambda_star(const WeightParam& l);

/// Entries +k, scalar +k.
WeightParam det_twist(const WeightParam& l, Int k);
/// Scalar +k.
WeightParam nu_twist(const WeightParam& l, Int k);
/// Concatenated entries, summed scalars.
WeightParam pair_sharp(const WeightParam& l, const WeightParam& lm);

/// (l_1..l_n, -l_n - kappa, ..., -l_1 - kappa; 0)
WeightParam lambda_sharp_kappa(const WeightParam& l, Int kappa);
/// Same weight via (l, l* (x) det^{-kappa})^sharp (x) nu^kappa.
WeightParam lambda_sharp_kappa_composed(const WeightParam& l, Int kappa);

/// ((m_tau - m_ctau) x n; n * sum_{tau in phi} m_ctau)
WeightParam mu_of_psi(const CMFieldModel& model, const CMType& phi, const InfinityType& psi, Int n);

/// ((-m-kappa) x n, m x n; 0) on each embedding of phi
WeightParam line_bundle_weight(const CMType& phi, Int m, Int kappa, Int n);

enum class WeightExtension {
    dual,      // entries at conj(tau) are (-a_n, ..., -a_1)
    identity,  // entries at conj(tau) repeat those at tau
};

/// tau -> entries of w at g tau, the conj(tau) entries filled per ext.
/// The scalar is carried over unchanged.
WeightParam conjugate_weight(const CMFieldModel& model, const WeightParam& w, GroupElem g,
                             WeightExtension ext = WeightExtension::dual);

}  // namespace galeq
