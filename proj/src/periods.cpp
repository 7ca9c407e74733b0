#include "galeq/periods.hpp"

#include <mutex>
#include <sstream>

namespace galeq {

const char* to_string(Level l)
{
    switch (l) {
    case Level::q: return "q";
    case Level::e: return "e";
    case Level::fgal: return "fgal";
    }
    return "?";
}

Level parse_level(const std::string& s)
{
    if (s == "q")
        return Level::q;
    if (s == "e")
        return Level::e;
    if (s == "fgal")
        return Level::fgal;
    raise(ErrorCode::invalid_argument, "unknown level '" + s + "' (expected q, e or fgal)");
}

std::string PeriodGenerator::name() const
{
    switch (kind) {
    case GenKind::two_pi_i_half: return "(2pi i)^(1/2)";
    case GenKind::d_half: return "D^(1/2)";
    case GenKind::i_f: return "I_F";
    case GenKind::delta_eps: return "delta[eps]";
    case GenKind::e_phi: return "e_Phi";
    case GenKind::g_alpha: return "G(alpha)";
    case GenKind::z_inf: return "Z_inf(" + std::to_string(index) + ")";
    case GenKind::pair_ff: return "(f,f')(" + tag + ")";
    case GenKind::q_pet: return "Q_pet(" + tag + "," + place + ")";
    case GenKind::opaque: return tag;
    case GenKind::cm_period: return "p(" + tag + "," + place + ")";
    case GenKind::motivic_q: return "Q^(" + std::to_string(index) + ")(" + tag + "," + place + ")";
    case GenKind::auto_period: return "P^(" + place + ")(" + tag + ")";
    }
    return "?";
}

namespace gen {
PeriodGenerator two_pi_i_half() { return {GenKind::two_pi_i_half, "", 0, ""}; }
PeriodGenerator d_half() { return {GenKind::d_half, "", 0, ""}; }
PeriodGenerator i_f() { return {GenKind::i_f, "", 0, ""}; }
PeriodGenerator delta_eps() { return {GenKind::delta_eps, "", 0, ""}; }
PeriodGenerator e_phi() { return {GenKind::e_phi, "", 0, ""}; }
PeriodGenerator g_alpha() { return {GenKind::g_alpha, "", 0, ""}; }
PeriodGenerator cm_period(const std::string& c, const std::string& place) { return {GenKind::cm_period, c, 0, place}; }
PeriodGenerator auto_period(const std::string& rep, const std::string& sig) { return {GenKind::auto_period, rep, 0, sig}; }
PeriodGenerator motivic_q(const std::string& motive, Int i, const std::string& place)
{
    return {GenKind::motivic_q, motive, i, place};
}
PeriodGenerator q_pet(const std::string& rep, const std::string& sig) { return {GenKind::q_pet, rep, 0, sig}; }
PeriodGenerator pair_ff(const std::string& rep) { return {GenKind::pair_ff, rep, 0, ""}; }
PeriodGenerator z_inf(Int m) { return {GenKind::z_inf, "", m, ""}; }
PeriodGenerator opaque(const std::string& name) { return {GenKind::opaque, name, 0, ""}; }
}  // namespace gen

std::optional<Level> default_rationality(const PeriodGenerator& g)
{
    switch (g.kind) {
    case GenKind::d_half:
    case GenKind::i_f:
    case GenKind::delta_eps:
    case GenKind::e_phi:
    case GenKind::z_inf:
        return Level::fgal;
    default:
        return std::nullopt;
    }
}

PeriodMonomial PeriodMonomial::of(const PeriodGenerator& g, Int e, std::string scope)
{
    PeriodMonomial m(std::move(scope));
    m.set(g, e);
    return m;
}

Int PeriodMonomial::exponent(const PeriodGenerator& g) const
{
    auto it = exps_.find(g);
    return it == exps_.end() ? 0 : it->second;
}

void PeriodMonomial::set(const PeriodGenerator& g, Int e)
{
    if (e == 0)
        exps_.erase(g);
    else
        exps_[g] = e;
}

void PeriodMonomial::add(const PeriodGenerator& g, Int e) { set(g, checked_add(exponent(g), e)); }

std::string PeriodMonomial::to_string() const
{
    if (exps_.empty())
        return "1";
    std::string s;
    for (const auto& [g, e] : exps_) {
        if (!s.empty())
            s += " * ";
        s += g.name();
        if (e != 1)
            s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return s;
}

PeriodMonomial mono_mul(const PeriodMonomial& a, const PeriodMonomial& b)
{
    if (a.scope() != b.scope())
        raise(ErrorCode::namespace_mismatch, "monomials from generator scopes '" + a.scope() + "' and '" + b.scope() + "'");
    PeriodMonomial out = a;
    for (const auto& [g, e] : b.exponents())
        out.add(g, e);
    return out;
}

PeriodMonomial mono_inv(const PeriodMonomial& a) { return mono_pow(a, -1); }

PeriodMonomial mono_pow(const PeriodMonomial& a, Int k)
{
    PeriodMonomial out(a.scope());
    for (const auto& [g, e] : a.exponents())
        out.set(g, checked_mul(e, k));
    return out;
}

PeriodMonomial substitute(const PeriodMonomial& a, const PeriodGenerator& g, const PeriodMonomial& replacement)
{
    const Int e = a.exponent(g);
    PeriodMonomial rest = a;
    rest.set(g, 0);
    return rest * mono_pow(replacement, e);
}

struct RelationLattice::Cache {
    std::once_flag once;
    std::map<PeriodGenerator, std::size_t> index;
    IntLattice lattice;
};

RelationLattice::RelationLattice(Level level, std::vector<Relation> relations, std::map<std::string, Level> opaque_levels)
    : level_(level), opaque_levels_(std::move(opaque_levels)), cache_(std::make_shared<Cache>())
{
    for (auto& r : relations)
        if (r.level <= level_)
            active_.push_back(std::move(r));
}

bool RelationLattice::is_trivial(const PeriodGenerator& g) const
{
    std::optional<Level> lvl = default_rationality(g);
    if (g.kind == GenKind::opaque) {
        auto it = opaque_levels_.find(g.tag);
        if (it != opaque_levels_.end())
            lvl = it->second;
    }
    return lvl && *lvl <= level_;
}

const RelationLattice::Cache& RelationLattice::cache() const
{
    if (!cache_)
        raise(ErrorCode::invalid_argument, "default-constructed relation lattice");
    std::call_once(cache_->once, [this] {
        for (const auto& r : active_)
            for (const auto& [g, e] : r.rel.exponents())
                if (!is_trivial(g))
                    cache_->index.emplace(g, 0);
        std::size_t k = 0;
        for (auto& [g, i] : cache_->index)
            i = k++;
        std::vector<std::vector<Int>> rows;
        for (const auto& r : active_) {
            std::vector<Int> row(k, 0);
            for (const auto& [g, e] : r.rel.exponents())
                if (!is_trivial(g))
                    row[cache_->index.at(g)] = e;
            rows.push_back(std::move(row));
        }
        cache_->lattice = IntLattice(k, std::move(rows));
    });
    return *cache_;
}

Equivalence RelationLattice::equivalent_mod(const PeriodMonomial& x, const PeriodMonomial& y) const
{
    const Cache& c = cache();
    PeriodMonomial diff = x * mono_inv(y);
    Equivalence out;
    PeriodMonomial outside(x.scope());
    std::vector<Int> v(c.lattice.dim(), 0);
    for (const auto& [g, e] : diff.exponents()) {
        if (is_trivial(g)) {
            out.trivialized.push_back(g.name());
            continue;
        }
        auto it = c.index.find(g);
        if (it == c.index.end())
            outside.set(g, e);
        else
            v[it->second] = e;
    }
    auto red = c.lattice.reduce(v);
    out.residual = outside;
    for (const auto& [g, i] : c.index)
        if (red.residual[i] != 0)
            out.residual.set(g, red.residual[i]);
    for (std::size_t j = 0; j < red.coeffs.size(); ++j)
        if (red.coeffs[j] != 0)
            out.citations.push_back(active_[j].citation);
    out.equivalent = out.residual.is_one();
    return out;
}

bool RelationLattice::contains(const PeriodMonomial& x) const
{
    return equivalent_mod(x, PeriodMonomial(x.scope())).equivalent;
}

Equivalence equivalent_mod(const PeriodMonomial& x, const PeriodMonomial& y, const RelationLattice& lat)
{
    return lat.equivalent_mod(x, y);
}

std::string dual_tag(const PeriodSetup& s) { return s.character + "^v"; }
std::string dual_conj_tag(const PeriodSetup& s) { return "(" + s.character + "^v)^c"; }
std::string char_motive_tag(const PeriodSetup& s) { return "M(" + s.character + ")"; }

std::string signature_tag(const CMFieldModel& model, const std::map<Emb, Int>& I)
{
    std::string out = "I=";
    bool first = true;
    for (const auto& [t, i] : I) {
        out += (first ? "" : ",") + model.name(t) + ":" + std::to_string(i);
        first = false;
    }
    return out;
}

std::string signature_tag(const PeriodSetup& s) { return signature_tag(*s.model, s.I); }

namespace {

PeriodMonomial two_pi(Int half_units) { return PeriodMonomial::of(gen::two_pi_i_half(), half_units); }

Relation make(PeriodMonomial rel, Level lvl, std::string cite, std::string formula, bool conditional = false)
{
    return Relation{std::move(rel), lvl, std::move(cite), std::move(formula), conditional};
}

void require_setup(const PeriodSetup& s)
{
    if (!s.model)
        raise(ErrorCode::invalid_argument, "period setup needs a field model");
    if (s.I.size() != s.phi.size())
        raise(ErrorCode::invalid_argument, "period setup needs I on every embedding of the CM type");
}

}  // namespace

std::vector<Relation> standard_relation_list(const PeriodSetup& s)
{
    require_setup(s);
    const auto& model = *s.model;
    const std::string sig = signature_tag(s);
    std::vector<Relation> out;

    for (auto g : {gen::d_half(), gen::i_f(), gen::e_phi()})
        out.push_back(make(PeriodMonomial::of(g, 2), Level::q, "square-rational", g.name() + "^2 ~ 1"));

    out.push_back(make(PeriodMonomial::of(gen::delta_eps()) * PeriodMonomial::of(gen::i_f(), -1) *
                           PeriodMonomial::of(gen::d_half(), -1),
                       Level::q, "delta-eps", "delta[eps] ~ I_F * D^(1/2)"));
    out.push_back(make(PeriodMonomial::of(gen::opaque("delta[alpha0]")) * PeriodMonomial::of(gen::d_half(), -1) *
                           PeriodMonomial::of(gen::g_alpha(), -1),
                       Level::e, "delta-alpha0", "delta[alpha0] ~ D^(1/2) * G(alpha)"));
    out.push_back(make(PeriodMonomial::of(gen::opaque("c[alpha0]")) * PeriodMonomial::of(gen::opaque("delta[alpha0]"), -1),
                       Level::e, "artin-period", "c[alpha0] ~ delta[alpha0]"));
    out.push_back(make(PeriodMonomial::of(gen::opaque("c[alpha0*eps]")) *
                           PeriodMonomial::of(gen::opaque("delta[alpha0]"), -1) *
                           PeriodMonomial::of(gen::delta_eps(), -1) * PeriodMonomial::of(gen::d_half(), 1),
                       Level::e, "artin-period", "c[alpha0*eps] ~ delta[alpha0] * delta[eps] * D^(-1/2)"));

    const auto P = PeriodMonomial::of(gen::opaque("P*(psi,alpha)"));
    const auto qpet = PeriodMonomial::of(gen::q_pet(s.rep, sig));
    out.push_back(make(PeriodMonomial::of(gen::pair_ff(s.rep)) * two_pi(-4 * s.a0) * mono_inv(qpet) * P, Level::fgal,
                       "petersson-factorization", "(f,f') ~ (2pi i)^(2 a0) * Q_pet(pi) * P*(psi,alpha)^(-1)"));
    out.push_back(make(PeriodMonomial::of(gen::opaque("Q*(pi,psi,alpha)")) * PeriodMonomial::of(gen::pair_ff(s.rep)),
                       Level::e, "pet-equals-q", "Q*(pi,psi,alpha) ~ (f,f')^(-1)"));
    out.push_back(make(PeriodMonomial::of(gen::auto_period(s.rep, sig)) * two_pi(4 * s.a0) * qpet, Level::q,
                       "autoperiod-definition", "P^(I)(pi) = (2pi i)^(-2 a0) * Q_pet(pi)^(-1)"));

    PeriodMonomial fact = P;
    for (auto t : s.phi.members()) {
        fact = fact * PeriodMonomial::of(gen::cm_period(dual_tag(s), model.name(t)), -s.I.at(t)) *
               PeriodMonomial::of(gen::cm_period(dual_tag(s), model.name(model.conj(t))), -(s.n - s.I.at(t)));
    }
    out.push_back(make(fact, Level::fgal, "cm-period-factorization",
                       "P*(psi,alpha) ~ prod p(eta^v,tau)^I(tau) * p(eta^v,ctau)^(n-I(tau))"));

    for (auto t : s.phi.members()) {
        const auto& name = model.name(t);
        out.push_back(make(PeriodMonomial::of(gen::motivic_q(char_motive_tag(s), 0, name)) *
                               PeriodMonomial::of(gen::cm_period(dual_conj_tag(s), name), -1),
                           Level::fgal, "motivic-cm-period", "Q^(0)(M(eta),tau) ~ p((eta^v)^c,tau)"));
        out.push_back(make(PeriodMonomial::of(gen::motivic_q(char_motive_tag(s), 1, name)) *
                               PeriodMonomial::of(gen::cm_period(dual_tag(s), name), -1),
                           Level::fgal, "motivic-cm-period", "Q^(1)(M(eta),tau) ~ p(eta^v,tau)"));
        out.push_back(make(PeriodMonomial::of(gen::cm_period(dual_conj_tag(s), name)) *
                               PeriodMonomial::of(gen::cm_period(dual_tag(s), model.name(model.conj(t))), -1),
                           Level::q, "cm-period-conjugation", "p(chi^c,tau) ~ p(chi,ctau)"));
    }

    if (s.tate) {
        PeriodMonomial tate = PeriodMonomial::of(gen::auto_period(s.rep, sig));
        for (auto t : s.phi.members())
            tate = tate * PeriodMonomial::of(gen::motivic_q(s.motive, s.I.at(t), model.name(t)), -1);
        out.push_back(make(tate, Level::e, "tate-period-dictionary", "P^(I)(pi) ~ prod Q^(I(tau))(M,tau)", true));
    }
    return out;
}

RelationLattice standard_relations(Level level, const PeriodSetup& s)
{
    return RelationLattice(level, standard_relation_list(s));
}

PeriodMonomial assemble_lemma_d_closed(Int n, Int m, Int kappa, Int d)
{
    PeriodMonomial out = two_pi(2 * d * ((2 * m + kappa) * n - n * (n - 1) / 2));
    out.add(gen::d_half(), (n + 1) / 2);
    out.add(gen::delta_eps(), n / 2);
    out.add(gen::g_alpha(), n);
    return out;
}

LemmaDProduct assemble_lemma_d_product(Int n, Int m, Int kappa, Int d)
{
    LemmaDProduct out;
    for (Int j = 0; j < n; ++j) {
        out.factors = out.factors * two_pi(2 * d * (2 * m - j + kappa));
        out.factors.add(gen::opaque(j % 2 == 0 ? "c[alpha0]" : "c[alpha0*eps]"), 1);
    }
    const auto delta0 = PeriodMonomial::of(gen::opaque("delta[alpha0]"));
    PeriodMonomial x = substitute(out.factors, gen::opaque("c[alpha0]"), delta0);
    x = substitute(x, gen::opaque("c[alpha0*eps]"),
                   delta0 * PeriodMonomial::of(gen::delta_eps()) * PeriodMonomial::of(gen::d_half(), -1));
    x = substitute(x, gen::opaque("delta[alpha0]"),
                   PeriodMonomial::of(gen::d_half()) * PeriodMonomial::of(gen::g_alpha()));
    out.substituted = x;
    return out;
}

DExponent parse_d_exponent(const std::string& s)
{
    if (s == "thm")
        return DExponent::thm;
    if (s == "intro")
        return DExponent::intro;
    raise(ErrorCode::invalid_argument, "unknown d-exponent variant '" + s + "'");
}

const char* to_string(DExponent v) { return v == DExponent::thm ? "thm" : "intro"; }

PeriodMonomial assemble_main_theorem_rhs(Int n, Int m, Int d, DExponent variant)
{
    PeriodMonomial out = two_pi(2 * d * (m * n - n * (n - 1) / 2));
    out.add(gen::d_half(), variant == DExponent::thm ? (n + 1) / 2 : -(n / 2));
    out.add(gen::delta_eps(), n / 2);
    out.add(gen::opaque("Q*(pi,psi,alpha)"), 1);
    out.add(gen::z_inf(m), -1);
    return out;
}

PeriodMonomial derive_main_theorem_rhs(Int n, Int m, Int kappa, Int d)
{
    PeriodMonomial zeta_f = two_pi(2 * d * (m + kappa) * n) * PeriodMonomial::of(gen::g_alpha(), n);
    return assemble_lemma_d_closed(n, m, kappa, d) * PeriodMonomial::of(gen::opaque("Q*(pi,psi,alpha)")) *
           mono_inv(zeta_f) * PeriodMonomial::of(gen::z_inf(m), -1);
}

PeriodMonomial assemble_corollary_rhs(const PeriodSetup& s, Int m)
{
    require_setup(s);
    const Int n = s.n, d = static_cast<Int>(s.phi.size());
    PeriodMonomial out = two_pi(2 * d * (m * n - n * (n - 1) / 2) - 4 * s.a0);
    out.add(gen::i_f(), n / 2);
    out.add(gen::d_half(), n);
    out.add(gen::e_phi(), m * n);
    out.add(gen::q_pet(s.rep, signature_tag(s)), -1);
    out.add(gen::opaque("P*(psi,alpha)"), 1);
    return out;
}

TwoPiVariant parse_twopi_variant(const std::string& s)
{
    if (s == "derived")
        return TwoPiVariant::derived;
    if (s == "printed")
        return TwoPiVariant::printed;
    raise(ErrorCode::invalid_argument, "unknown (2 pi i) variant '" + s + "'");
}

const char* to_string(TwoPiVariant v) { return v == TwoPiVariant::derived ? "derived" : "printed"; }

PeriodMonomial assemble_thm_n1_rhs(const PeriodSetup& s, Int m, TwoPiVariant variant)
{
    require_setup(s);
    const auto& model = *s.model;
    const Int n = s.n, d = static_cast<Int>(s.phi.size());
    PeriodMonomial out = two_pi((2 * m - n + (variant == TwoPiVariant::derived ? 1 : 0)) * n * d);
    out.add(gen::i_f(), n / 2);
    out.add(gen::d_half(), n);
    out.add(gen::e_phi(), m * n);
    out.add(gen::auto_period(s.rep, signature_tag(s)), 1);
    for (auto t : s.phi.members()) {
        out.add(gen::cm_period(dual_tag(s), model.name(t)), s.I.at(t));
        out.add(gen::cm_period(dual_tag(s), model.name(model.conj(t))), n - s.I.at(t));
    }
    return out;
}

PeriodMonomial assemble_deligne_rhs(const PeriodSetup& s, const HodgeData& M, const HodgeData& Mp, Int m)
{
    require_setup(s);
    const auto& model = *s.model;
    const Int n = M.rank, d = static_cast<Int>(s.phi.size());
    if (Mp.rank != 1)
        raise(ErrorCode::invalid_argument, "second motive must have rank one");
    // L(m) ~ (2pi i)^{m n^eps} c^eps with n^eps = n d; c^+ carries (2pi i)^{-d n(n-1)/2}
    PeriodMonomial out = two_pi(2 * m * n * d - d * n * (n - 1));
    out.add(gen::i_f(), n / 2);
    out.add(gen::d_half(), n);
    for (auto t : s.phi.members()) {
        const auto& name = model.name(t);
        auto spM = split_indices(M, Mp, t);
        auto spMp = split_indices(Mp, M, t);
        for (std::size_t i = 0; i < spM.size(); ++i)
            out.add(gen::motivic_q(s.motive, static_cast<Int>(i), name), spM[i]);
        for (std::size_t j = 0; j < spMp.size(); ++j)
            out.add(gen::motivic_q(char_motive_tag(s), static_cast<Int>(j), name), spMp[j]);
    }
    if (m % 2 != 0)
        out.add(gen::e_phi(), n);
    return out;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::equivalent: return "EQUIVALENT";
    case Verdict::not_equivalent: return "NOT-EQUIVALENT";
    case Verdict::not_applicable: return "NOT-APPLICABLE";
    }
    return "?";
}

CompareReport compare_automorphic_motivic(const CMFieldModel& model, const ArchParams& ap, const EtaDecomposition& dec,
                                          Int m, const CompareOptions& opt)
{
    auto inst = derive_instance(model, ap, dec);
    PeriodSetup s;
    s.model = &model;
    s.phi = dec.phi;
    s.n = ap.n;
    s.a0 = opt.a0;
    s.I = inst.I;
    s.tate = opt.tate;

    CompareReport rep;
    rep.m = m;
    rep.mainineq_ok = mainineq_check(m, inst.mu, dec, inst.sig).ok;
    auto pts = admissible_points(inst, ap.n, dec.kappa);
    if (std::find(pts.begin(), pts.end(), m) == pts.end()) {
        rep.note = "m is not an admissible critical point";
        return rep;
    }
    if (!rep.mainineq_ok) {
        rep.note = "critical point outside the range where the automorphic formula applies";
        return rep;
    }
    rep.automorphic = assemble_thm_n1_rhs(s, m, opt.twopi);
    rep.motivic = assemble_deligne_rhs(s, inst.M, inst.Mp, m);
    rep.equivalence = standard_relations(opt.level, s).equivalent_mod(rep.automorphic, rep.motivic);
    rep.twopi_mismatch_half_units =
        rep.automorphic.exponent(gen::two_pi_i_half()) - rep.motivic.exponent(gen::two_pi_i_half());
    rep.printed_twopi_offset_half_units =
        assemble_thm_n1_rhs(s, m, TwoPiVariant::printed).exponent(gen::two_pi_i_half()) -
        assemble_thm_n1_rhs(s, m, TwoPiVariant::derived).exponent(gen::two_pi_i_half());
    rep.verdict = rep.equivalence.equivalent ? Verdict::equivalent : Verdict::not_equivalent;
    std::ostringstream note;
    note << "automorphic value L(m - n/2) matched with the motivic value at m = " << m;
    if (rep.twopi_mismatch_half_units != 0)
        note << "; (2pi i) exponents differ by " << format(Rational(rep.twopi_mismatch_half_units, 2));
    rep.note = note.str();
    return rep;
}

std::vector<CompareReport> compare_all_points(const CMFieldModel& model, const ArchParams& ap,
                                              const EtaDecomposition& dec, const CompareOptions& opt)
{
    auto inst = derive_instance(model, ap, dec);
    std::vector<CompareReport> out;
    for (auto m : admissible_points(inst, ap.n, dec.kappa))
        out.push_back(compare_automorphic_motivic(model, ap, dec, m, opt));
    return out;
}

}  // namespace galeq
