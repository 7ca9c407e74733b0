#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "galeq/basechange.hpp"
#include "galeq/cmfield.hpp"
#include "galeq/hecke.hpp"
#include "galeq/hodge.hpp"
#include "galeq/periods.hpp"

namespace galeq {

/// A regular conjugate self-dual parameter together with a twisting
/// character, over a fixed CM type.
struct Instance {
    CMFieldModel model;
    ArchParams ap;
    EtaDecomposition dec;
};

struct InstanceBounds {
    Int n_max = 4;
    Int d_max = 3;
    Int twice_A_max = 15;  // |A| <= twice_A_max / 2
    Int m_max = 6;         // |m_tau| <= m_max
    Int kappa_max = 4;
};

using Rng = std::mt19937_64;

/// Random signed-permutation group, CM type, parameters and character.
/// Degenerate draws are rejected and redrawn.
Instance random_instance(Rng& rng, const InstanceBounds& b);

/// Relabel everything by g: data'(tau) = data(g tau), CM type g^{-1} phi.
Instance transport_instance(const Instance& inst, GroupElem g);

/// Keep the CM type, pull A and eta back by g and re-decompose; nullopt when
/// the conjugated character does not decompose over the same CM type.
std::optional<Instance> conjugate_instance_fixed_phi(const Instance& inst, GroupElem g);

/// A random dominant weight with entries in [-bound, bound].
WeightParam random_dominant_weight(Rng& rng, const CMType& phi, Int n, Int bound);
Signature random_signature(Rng& rng, const CMType& phi, Int n);
/// Algebraic infinity type with |m| <= bound.
InfinityType random_algebraic_type(Rng& rng, const CMFieldModel& model, const CMType& phi, Int bound);

struct SweepResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::size_t points = 0;
    std::vector<std::string> failures;  // first few only

    void fail(const std::string& what);
};

SweepResult sweep_lemma_d(Int n_max, Int kappa_max, Int d_max, Int m_extra);
SweepResult sweep_compare(Rng& rng, std::size_t count, const InstanceBounds& b, const CompareOptions& opt);
SweepResult sweep_corollary(Rng& rng, std::size_t count, const InstanceBounds& b);
SweepResult sweep_signature(Rng& rng, std::size_t count, const InstanceBounds& b);
SweepResult sweep_dominance(Rng& rng, std::size_t count, Int n_max);
SweepResult sweep_equivariance(Rng& rng, std::size_t count, const InstanceBounds& b);
SweepResult sweep_basechange(Int m_max, const std::vector<Coord>& values);
SweepResult sweep_ephi(Int d_max, std::size_t max_order);

/// {(+-1, k) : |k| <= 2} and {(2,0), (1/2,0)}
std::vector<Coord> default_coord_values();

}  // namespace galeq
