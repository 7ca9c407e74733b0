#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galeq/cmfield.hpp"
#include "galeq/hodge.hpp"
#include "galeq/lattice.hpp"

namespace galeq {

/// Nested rationality levels: q < e < fgal. A relation at level L holds in
/// every lattice of level >= L.
enum class Level { q = 0, e = 1, fgal = 2 };
const char* to_string(Level l);
Level parse_level(const std::string& s);

// Declaration order fixes the column order of relation lattices. Periods
// that carry the substance of a comparison come last so they are never
// pivots and survive reduction unchanged.
enum class GenKind {
    two_pi_i_half,
    d_half,
    i_f,
    delta_eps,
    e_phi,
    g_alpha,
    z_inf,
    pair_ff,
    q_pet,
    opaque,
    cm_period,
    motivic_q,
    auto_period,
};

struct PeriodGenerator {
    GenKind kind = GenKind::opaque;
    std::string tag;
    Int index = 0;
    std::string place;

    auto operator<=>(const PeriodGenerator&) const = default;
    std::string name() const;
};

namespace gen {
PeriodGenerator two_pi_i_half();
PeriodGenerator d_half();
PeriodGenerator i_f();
PeriodGenerator delta_eps();
PeriodGenerator e_phi();
PeriodGenerator g_alpha();
PeriodGenerator cm_period(const std::string& character, const std::string& place);
PeriodGenerator auto_period(const std::string& rep, const std::string& signature);
PeriodGenerator motivic_q(const std::string& motive, Int i, const std::string& place);
PeriodGenerator q_pet(const std::string& rep, const std::string& signature);
PeriodGenerator pair_ff(const std::string& rep);
PeriodGenerator z_inf(Int m);
PeriodGenerator opaque(const std::string& name);
}  // namespace gen

/// Generators with a default level at which they are trivial; nullopt for
/// transcendental ones. Opaque generators default to nullopt.
std::optional<Level> default_rationality(const PeriodGenerator& g);

/// A product of generators with integer exponents.
class PeriodMonomial {
public:
    PeriodMonomial() = default;
    explicit PeriodMonomial(std::string scope) : scope_(std::move(scope)) {}
    static PeriodMonomial of(const PeriodGenerator& g, Int e = 1, std::string scope = "default");

    Int exponent(const PeriodGenerator& g) const;
    void set(const PeriodGenerator& g, Int e);
    void add(const PeriodGenerator& g, Int e);
    const std::map<PeriodGenerator, Int>& exponents() const { return exps_; }
    const std::string& scope() const { return scope_; }
    bool is_one() const { return exps_.empty(); }
    std::string to_string() const;

    bool operator==(const PeriodMonomial&) const = default;

private:
    std::map<PeriodGenerator, Int> exps_;
    std::string scope_ = "default";
};

PeriodMonomial mono_mul(const PeriodMonomial& a, const PeriodMonomial& b);
PeriodMonomial mono_inv(const PeriodMonomial& a);
PeriodMonomial mono_pow(const PeriodMonomial& a, Int k);
inline PeriodMonomial operator*(const PeriodMonomial& a, const PeriodMonomial& b) { return mono_mul(a, b); }

/// Replace every occurrence of g by the replacement monomial.
PeriodMonomial substitute(const PeriodMonomial& a, const PeriodGenerator& g, const PeriodMonomial& replacement);

/// A monomial asserted to be ~ 1 at the given level.
struct Relation {
    PeriodMonomial rel;
    Level level = Level::q;
    std::string citation;
    std::string formula;
    bool conditional = false;
};

struct Equivalence {
    bool equivalent = false;
    /// (x / y) reduced modulo the lattice; one iff equivalent
    PeriodMonomial residual;
    /// citations of relations with nonzero coefficient in the witness
    std::vector<std::string> citations;
    /// generators dropped because they are trivial at this level
    std::vector<std::string> trivialized;
};

class RelationLattice {
public:
    RelationLattice() = default;
    RelationLattice(Level level, std::vector<Relation> relations,
                    std::map<std::string, Level> opaque_levels = {});

    Level level() const { return level_; }
    /// Relations active at this level.
    const std::vector<Relation>& relations() const { return active_; }
    bool is_trivial(const PeriodGenerator& g) const;
    Equivalence equivalent_mod(const PeriodMonomial& x, const PeriodMonomial& y) const;
    bool contains(const PeriodMonomial& x) const;

private:
    struct Cache;
    const Cache& cache() const;

    Level level_ = Level::q;
    std::vector<Relation> active_;
    std::map<std::string, Level> opaque_levels_;
    std::shared_ptr<Cache> cache_;
};

Equivalence equivalent_mod(const PeriodMonomial& x, const PeriodMonomial& y, const RelationLattice& lat);

/// Instance-specific names used to spell the standard relations.
struct PeriodSetup {
    const CMFieldModel* model = nullptr;
    CMType phi;
    Int n = 1;
    Int a0 = 0;
    std::map<Emb, Int> I;
    bool tate = true;
    std::string rep = "pi";
    std::string motive = "M";
    std::string character = "eta";
};

/// Tags derived from a setup.
std::string dual_tag(const PeriodSetup& s);          // eta^v
std::string dual_conj_tag(const PeriodSetup& s);     // (eta^v)^c
std::string char_motive_tag(const PeriodSetup& s);   // M(eta)
std::string signature_tag(const PeriodSetup& s);     // I=(..)
std::string signature_tag(const CMFieldModel& model, const std::map<Emb, Int>& I);

std::vector<Relation> standard_relation_list(const PeriodSetup& s);
RelationLattice standard_relations(Level level, const PeriodSetup& s);

PeriodMonomial assemble_lemma_d_closed(Int n, Int m, Int kappa, Int d);

struct LemmaDProduct {
    PeriodMonomial factors;      // per-j factors with the Artin periods
    PeriodMonomial substituted;  // after rewriting the Artin periods
};
LemmaDProduct assemble_lemma_d_product(Int n, Int m, Int kappa, Int d);

enum class DExponent { thm, intro };
DExponent parse_d_exponent(const std::string& s);
const char* to_string(DExponent v);

PeriodMonomial assemble_main_theorem_rhs(Int n, Int m, Int d, DExponent variant);
/// Closed lemma value times Q*(pi,psi,alpha) over both zeta factors.
PeriodMonomial derive_main_theorem_rhs(Int n, Int m, Int kappa, Int d);

PeriodMonomial assemble_corollary_rhs(const PeriodSetup& s, Int m);

enum class TwoPiVariant { derived, printed };
TwoPiVariant parse_twopi_variant(const std::string& s);
const char* to_string(TwoPiVariant v);

/// (2 pi i) exponent in half units: derived (2m - n + 1) n d, printed (2m - n) n d.
PeriodMonomial assemble_thm_n1_rhs(const PeriodSetup& s, Int m, TwoPiVariant variant);

/// Deligne's period expression for the tensor motive, with split indices
/// read off the Hodge data.
PeriodMonomial assemble_deligne_rhs(const PeriodSetup& s, const HodgeData& M, const HodgeData& Mp, Int m);

enum class Verdict { equivalent, not_equivalent, not_applicable };
const char* to_string(Verdict v);

struct CompareOptions {
    Level level = Level::fgal;
    bool tate = true;
    TwoPiVariant twopi = TwoPiVariant::derived;
    Int a0 = 0;
};

struct CompareReport {
    Verdict verdict = Verdict::not_applicable;
    Int m = 0;
    PeriodMonomial automorphic;
    PeriodMonomial motivic;
    Equivalence equivalence;
    /// automorphic minus motivic (2 pi i) exponent, in half units
    Int twopi_mismatch_half_units = 0;
    /// what the printed automorphic formula would leave over, in half units
    Int printed_twopi_offset_half_units = 0;
    bool mainineq_ok = false;
    std::string note;
};

CompareReport compare_automorphic_motivic(const CMFieldModel& model, const ArchParams& ap,
                                          const EtaDecomposition& dec, Int m, const CompareOptions& opt);

/// All admissible critical points of an instance.
std::vector<CompareReport> compare_all_points(const CMFieldModel& model, const ArchParams& ap,
                                              const EtaDecomposition& dec, const CompareOptions& opt);

}  // namespace galeq
