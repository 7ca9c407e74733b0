#include "galeq/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "galeq/basechange.hpp"
#include "galeq/hecke.hpp"
#include "galeq/hodge.hpp"
#include "galeq/instance.hpp"
#include "galeq/weights.hpp"

namespace galeq {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what)
{
    raise(ErrorCode::invalid_argument, where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        bad(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

Int as_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        bad(where, "expected an integer");
    return j.get<Int>();
}

Int get_int(const json& j, const char* key, Int dflt, const std::string& where)
{
    if (!j.contains(key))
        return dflt;
    return as_int(j.at(key), where + "." + key);
}

Rational as_rational(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<Int>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        if (j[1].get<Int>() == 0)
            bad(where, "zero denominator");
        return Rational(j[0].get<Int>(), j[1].get<Int>());
    }
    bad(where, "expected an integer or a [num, den] pair");
}

json rational_json(const Rational& r)
{
    if (r.denominator() == 1)
        return r.numerator();
    return json::array({r.numerator(), r.denominator()});
}

json rationals_json(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const auto& r : v)
        a.push_back(rational_json(r));
    return a;
}

Perm perm_from(const json& j, const std::vector<std::string>& names, const std::string& where)
{
    if (!j.is_object())
        bad(where, "a generator maps each name to its image");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        idx[names[i]] = i;
    Perm p(names.size(), names.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!idx.count(it.key()) || !it.value().is_string() || !idx.count(it.value().get<std::string>()))
            bad(where, "unknown name in generator");
        p[idx[it.key()]] = idx[it.value().get<std::string>()];
    }
    // unlisted points are fixed
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == names.size())
            p[i] = i;
    if (!is_permutation(p))
        bad(where, "generator is not a bijection");
    return p;
}

std::vector<std::string> names_from(const json& j, const std::string& where)
{
    if (!j.is_array())
        bad(where, "expected a list of names");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            bad(where, "names must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

ModelBundle parse_field(const json& f)
{
    const std::string where = "field";
    auto names = names_from(need(f, "embeddings", where), where + ".embeddings");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        idx[names[i]] = i;
    Perm conj(names.size(), names.size());
    for (const auto& pr : need(f, "conj", where)) {
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string() ||
            !idx.count(pr[0].get<std::string>()) || !idx.count(pr[1].get<std::string>()))
            bad(where + ".conj", "expected pairs of embedding names");
        conj[idx[pr[0].get<std::string>()]] = idx[pr[1].get<std::string>()];
        conj[idx[pr[1].get<std::string>()]] = idx[pr[0].get<std::string>()];
    }
    std::vector<Perm> gens;
    if (f.contains("generators"))
        for (const auto& g : f.at("generators"))
            gens.push_back(perm_from(g, names, where + ".generators"));

    std::vector<std::string> fam_names;
    std::size_t fam_base = 0;
    std::vector<Perm> fam_gens;
    if (f.contains("family")) {
        const auto& fam = f.at("family");
        fam_names = names_from(need(fam, "points", where + ".family"), where + ".family.points");
        const auto base = need(fam, "base", where + ".family").get<std::string>();
        auto it = std::find(fam_names.begin(), fam_names.end(), base);
        if (it == fam_names.end())
            bad(where + ".family", "base is not one of the points");
        fam_base = static_cast<std::size_t>(it - fam_names.begin());
        for (const auto& g : need(fam, "generators", where + ".family"))
            fam_gens.push_back(perm_from(g, fam_names, where + ".family.generators"));
    }
    return build_models(names, conj, gens, fam_names, fam_base, fam_gens);
}

std::map<Emb, Int> emb_int_map(const CMFieldModel& model, const json& j, const std::string& where)
{
    if (!j.is_object())
        bad(where, "expected an object keyed by embedding");
    std::map<Emb, Int> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[model.find(it.key())] = as_int(it.value(), where + "." + it.key());
    return out;
}

ArchParams parse_arch(const CMFieldModel& model, const json& j, const std::string& where)
{
    if (!j.is_object() || j.empty())
        bad(where, "expected archimedean parameters keyed by embedding");
    ArchParams ap;
    ap.n = -1;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<Rational> v;
        for (const auto& x : it.value())
            v.push_back(as_rational(x, where + "." + it.key()));
        if (ap.n >= 0 && static_cast<Int>(v.size()) != ap.n)
            bad(where, "all embeddings need the same number of parameters");
        ap.n = static_cast<Int>(v.size());
        ap.at[model.find(it.key())] = std::move(v);
    }
    ap.validate();
    return ap;
}

InfinityType full_type(const CMFieldModel& model, const json& j, const std::string& where)
{
    auto m = emb_int_map(model, j, where);
    if (m.size() != model.size())
        bad(where, "infinity type must be given on every embedding");
    std::vector<Int> v(model.size());
    for (const auto& [t, x] : m)
        v[t.index] = x;
    return InfinityType::from_zexp(v);
}

struct Ctx {
    const Scenario& sc;
    const json& input;
    std::string where;

    const CMFieldModel& model() const
    {
        if (!sc.models)
            bad(where, "scenario has no field model");
        return sc.models->field;
    }
    const CMType& phi() const
    {
        if (!sc.phi)
            bad(where, "scenario has no CM type");
        return *sc.phi;
    }
};

ArchParams arch_of(const Ctx& c)
{
    ArchParams ap = parse_arch(c.model(), need(c.input, "arch", c.where), c.where + ".arch");
    for (auto t : c.phi().members())
        if (!ap.at.count(t))
            bad(c.where + ".arch", "missing parameters at " + c.model().name(t));
    if (ap.at.size() != c.phi().size())
        bad(c.where + ".arch", "parameters are given off the CM type");
    return ap;
}

EtaDecomposition parse_eta(const Ctx& c)
{
    const auto& model = c.model();
    if (c.input.contains("eta")) {
        InfinityType eta = full_type(model, c.input.at("eta"), c.where + ".eta");
        return decompose_or_throw(model, eta, c.phi());
    }
    auto diff = emb_int_map(model, need(c.input, "diff", c.where), c.where + ".diff");
    return decomposition_from_diff(model, c.phi(), diff, get_int(c.input, "kappa", 0, c.where));
}

json emb_map_json(const CMFieldModel& model, const std::map<Emb, Int>& m)
{
    json j = json::object();
    for (const auto& [t, v] : m)
        j[model.name(t)] = v;
    return j;
}

// object keys sort by name
json exponents_json(const PeriodMonomial& m)
{
    json j = json::object();
    for (const auto& [g, e] : m.exponents())
        j[g.name()] = e;
    return j;
}

json weight_json(const CMFieldModel& model, const WeightParam& w)
{
    json e = json::object();
    for (const auto& [t, v] : w.entries)
        e[model.name(t)] = v;
    return json{{"entries", e}, {"a0", w.a0}};
}

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> citations;
    json details = json::object();
};

Outcome run_critical(const Ctx& c)
{
    const auto& model = c.model();
    ArchParams ap = arch_of(c);
    EtaDecomposition dec = parse_eta(c);
    auto inst = derive_instance(model, ap, dec);
    auto formula = t_set_formula(ap, dec);
    auto cons = corollary_consistency(model, ap, dec);
    Outcome o;
    o.citations = {"t-set", "critical-range", "signature-count", "mainineq", "corollary-consistency"};
    o.details["T"] = inst.T;
    o.details["T_formula"] = formula;
    o.details["weight"] = inst.tensor.weight;
    o.details["critical"] = inst.range.values();
    o.details["admissible"] = admissible_points(inst, ap.n, dec.kappa);
    o.details["I"] = emb_map_json(model, inst.I);
    o.details["consistency_failures"] = cons.failing_points;
    o.pass = inst.T == formula && cons.holds;
    if (c.input.contains("expect_critical")) {
        auto want = c.input.at("expect_critical").get<std::vector<Int>>();
        o.details["expect_critical"] = want;
        o.pass = o.pass && want == inst.range.values();
    }
    o.summary = "critical values " + format(inst.range.values()) + ", " + std::to_string(cons.checked_points.size()) +
                " admissible point(s) satisfy the inequality" + (cons.holds ? "" : " except " + format(cons.failing_points));
    return o;
}

Outcome run_signature(const Ctx& c)
{
    const auto& model = c.model();
    ArchParams ap = arch_of(c);
    EtaDecomposition dec = parse_eta(c);
    auto inst = derive_instance(model, ap, dec);
    auto Imot = signature_I_motivic(inst.M, inst.Mp, dec.phi);
    Outcome o;
    o.citations = {"signature-count", "motivic-signature", "split-index"};
    o.details["I_auto"] = emb_map_json(model, inst.I);
    o.details["I_motivic"] = emb_map_json(model, Imot);
    o.pass = Imot == inst.I;
    json sp = json::object();
    for (auto t : dec.phi.members()) {
        auto a = split_indices(inst.M, inst.Mp, t);
        auto b = split_indices(inst.Mp, inst.M, t);
        sp[model.name(t)] = json{{"M;M'", a}, {"M';M", b}};
        const Int sa = std::accumulate(a.begin(), a.end(), Int{0});
        const Int sb = std::accumulate(b.begin(), b.end(), Int{0});
        o.pass = o.pass && sa == 1 && sb == ap.n;
    }
    o.details["split"] = sp;
    o.summary = o.pass ? "automorphic and motivic signatures agree; split sums are 1 and n"
                       : "signature or split-index mismatch";
    return o;
}

struct WeightsInput {
    WeightParam mu;
    Signature sig;
    InfinityType psi;
    Int kappa = 0;
};

WeightsInput parse_weights(const Ctx& c)
{
    const auto& model = c.model();
    const CMType& phi = c.phi();
    WeightsInput in;
    in.mu.a0 = get_int(c.input, "a0", 0, c.where);
    in.mu.n = -1;
    const auto& jm = need(c.input, "mu", c.where);
    if (!jm.is_object() || jm.empty())
        bad(c.where + ".mu", "expected entries keyed by embedding");
    for (auto it = jm.begin(); it != jm.end(); ++it) {
        auto v = it.value().get<std::vector<Int>>();
        if (in.mu.n >= 0 && static_cast<Int>(v.size()) != in.mu.n)
            bad(c.where + ".mu", "all embeddings need the same number of entries");
        in.mu.n = static_cast<Int>(v.size());
        in.mu.entries[model.find(it.key())] = v;
    }
    std::map<Emb, SigPair> sp;
    const auto& js = need(c.input, "signature", c.where);
    for (auto it = js.begin(); it != js.end(); ++it) {
        auto v = it.value().get<std::vector<Int>>();
        if (v.size() != 2)
            bad(c.where + ".signature", "expected [r, s]");
        sp[model.find(it.key())] = SigPair{v[0], v[1]};
    }
    in.sig = Signature(in.mu.n, sp);
    if (!(in.sig.support(model) == phi))
        bad(c.where, "signature must be given on the scenario's CM type");
    std::vector<Int> m(model.size(), 0);
    if (c.input.contains("psi")) {
        auto pm = emb_int_map(model, c.input.at("psi"), c.where + ".psi");
        if (pm.size() != model.size())
            bad(c.where + ".psi", "psi must be given on every embedding");
        for (const auto& [t, x] : pm)
            m[t.index] = x;
    }
    in.psi = InfinityType::from_m(m);
    in.kappa = get_int(c.input, "kappa", 0, c.where);
    return in;
}

Outcome run_weights(const Ctx& c)
{
    const auto& model = c.model();
    auto [mu, sig, psi, kappa] = parse_weights(c);

    Outcome o;
    o.citations = {"k-type-weight", "sharp-weight", "weight-conjugation"};
    WeightParam L = big_lambda(model, mu, psi, sig);
    auto explicit_sharp = lambda_sharp_kappa(L, kappa);
    auto composed_sharp = lambda_sharp_kappa_composed(L, kappa);
    o.details["Lambda"] = weight_json(model, L);
    o.details["K_dominant"] = is_dominant_K(L, sig);
    o.details["sharp"] = weight_json(model, explicit_sharp);
    o.details["sharp_paths_agree"] = explicit_sharp == composed_sharp;
    bool equivariant = true;
    for (auto g : model.group().elements()) {
        auto lhs = big_lambda(model, conjugate_weight(model, mu, g), pullback_infinity(model, psi, g),
                              conjugate_signature(model, sig, g));
        equivariant = equivariant && lhs.entries == conjugate_weight(model, L, g).entries;
    }
    o.details["equivariant"] = equivariant;
    o.pass = is_dominant_K(L, sig) && explicit_sharp == composed_sharp && equivariant;
    if (c.input.contains("expect_lambda")) {
        const auto& e = c.input.at("expect_lambda");
        WeightParam want{L.n, {}, get_int(e, "a0", 0, c.where + ".expect_lambda")};
        const auto& ee = need(e, "entries", c.where + ".expect_lambda");
        for (auto it = ee.begin(); it != ee.end(); ++it)
            want.entries[model.find(it.key())] = it.value().get<std::vector<Int>>();
        o.pass = o.pass && want == L;
    }
    o.summary = o.pass ? "K-type weight dominant, both sharp constructions agree, conjugation equivariant"
                       : "weight check failed";
    return o;
}

Outcome run_lemma_d(const Ctx& c)
{
    auto r = sweep_lemma_d(get_int(c.input, "n_max", 12, c.where), get_int(c.input, "kappa_max", 4, c.where),
                           get_int(c.input, "d_max", 3, c.where), get_int(c.input, "m_extra", 6, c.where));
    Outcome o;
    o.citations = {"lemma-d-product", "artin-period", "delta-alpha0"};
    o.pass = r.passed;
    o.details["cases"] = r.cases;
    o.details["failures"] = r.failures;
    o.summary = std::to_string(r.cases) + " closed forms " + (r.passed ? "match" : "do not all match") +
                " the per-factor product";
    return o;
}

Outcome run_compare(const Ctx& c)
{
    const auto& model = c.model();
    ArchParams ap = arch_of(c);
    EtaDecomposition dec = parse_eta(c);
    CompareOptions opt;
    opt.level = c.sc.options.level;
    opt.tate = c.sc.options.tate;
    opt.twopi = c.sc.options.twopi;
    opt.a0 = get_int(c.input, "a0", 0, c.where);
    Outcome o;
    std::set<std::string> cites;
    json pts = json::array();
    std::size_t equivalent = 0;
    for (const auto& rep : compare_all_points(model, ap, dec, opt)) {
        for (const auto& s : rep.equivalence.citations)
            cites.insert(s);
        pts.push_back(json{{"m", rep.m},
                           {"verdict", to_string(rep.verdict)},
                           {"automorphic", rep.automorphic.to_string()},
                           {"motivic", rep.motivic.to_string()},
                           {"residual", rep.equivalence.residual.to_string()},
                           {"residual_exponents", exponents_json(rep.equivalence.residual)},
                           {"twopi_mismatch", rational_json(Rational(rep.twopi_mismatch_half_units, 2))},
                           {"printed_twopi_offset", rational_json(Rational(rep.printed_twopi_offset_half_units, 2))},
                           {"note", rep.note}});
        if (rep.verdict == Verdict::equivalent)
            ++equivalent;
        else
            o.pass = false;
    }
    o.citations.assign(cites.begin(), cites.end());
    o.details["points"] = pts;
    o.details["level"] = to_string(opt.level);
    o.details["tate"] = opt.tate;
    o.summary = std::to_string(equivalent) + "/" + std::to_string(pts.size()) + " admissible point(s) EQUIVALENT at level " +
                to_string(opt.level);
    return o;
}

Outcome run_basechange(const Ctx& c)
{
    std::vector<Coord> values = default_coord_values();
    if (c.input.contains("values")) {
        values.clear();
        for (const auto& v : c.input.at("values")) {
            if (!v.is_array() || v.size() != 2)
                bad(c.where + ".values", "each value is [r, k]");
            values.push_back(Coord{as_rational(v[0], c.where + ".values"), as_int(v[1], c.where + ".values")});
        }
    }
    const Int m_max = get_int(c.input, "m_max", 4, c.where);
    auto r = sweep_basechange(m_max, values);
    auto w = commutativity_check(UnramChar{Side::unitary, 4, {Coord{}, Coord{}}}, -1);
    Outcome o;
    o.citations = {"modulus-exponents", "base-change-alignment", "weyl-equivalence"};
    o.details["characters"] = r.cases;
    o.details["failures"] = r.failures;
    o.details["witness"] = json{{"twist_exponents_gl", rationals_json(w.twist_exponents_lhs)},
                                {"twist_exponents_unitary", rationals_json(w.twist_exponents_rhs)},
                                {"tuple_equal", w.exponents_tuple_equal},
                                {"multiset_equal", w.exponents_multiset_equal}};
    o.pass = r.passed && w.holds && !w.exponents_tuple_equal && w.exponents_multiset_equal;
    if (c.input.value("experimental_odd", false)) {
        bool odd_ok = true;
        for (Int m = 1; m <= m_max; ++m)
            for (int eps : {1, -1}) {
                UnramChar chi{Side::unitary, 2 * m + 1, std::vector<Coord>(static_cast<std::size_t>(m), values.front())};
                odd_ok = odd_ok && commutativity_check(chi, eps, Alignment::paired, true).holds;
            }
        o.details["experimental_odd"] = odd_ok;
        o.pass = o.pass && odd_ok;
    }
    o.summary = std::to_string(r.cases) + " characters, both signs: twists " +
                (r.passed ? "commute with base change up to the Weyl group" : "fail to commute");
    return o;
}

Outcome run_ephi(const Ctx& c)
{
    const auto& model = c.model();
    const CMType& phi = c.phi();
    EmbFamilyModel fam = c.sc.models->family ? *c.sc.models->family : EmbFamilyModel::regular(model);
    auto signs = e_phi_family(model, phi, fam);
    std::vector<GroupElem> fixers = phi_stabilizer(model, phi);
    auto rep = e_phi_galois_invariance_check(model, phi, fam, fixers);
    Outcome o;
    o.citations = {"e-phi-sign", "e-phi-invariance"};
    json s = json::object();
    for (std::size_t rho = 0; rho < fam.size(); ++rho)
        s[fam.name(rho)] = signs[rho];
    o.details["signs"] = s;
    o.details["stabilizer_order"] = fixers.size();
    o.details["counterexamples"] = rep.counterexamples;
    o.pass = rep.holds;
    o.summary = "sign well defined on " + std::to_string(fam.size()) + " point(s); invariant under " +
                std::to_string(fixers.size()) + " stabilizing element(s)" + (rep.holds ? "" : " FAILS");
    return o;
}

Outcome run_main_theorem(const Ctx& c)
{
    const Int n = as_int(need(c.input, "n", c.where), c.where + ".n");
    const Int m = as_int(need(c.input, "m", c.where), c.where + ".m");
    const Int kappa = get_int(c.input, "kappa", 0, c.where);
    const Int d = get_int(c.input, "d", 1, c.where);
    auto derived = derive_main_theorem_rhs(n, m, kappa, d);
    auto stated = assemble_main_theorem_rhs(n, m, d, c.sc.options.d_exponent);
    auto thm = assemble_main_theorem_rhs(n, m, d, DExponent::thm);
    auto intro = assemble_main_theorem_rhs(n, m, d, DExponent::intro);
    RelationLattice q(Level::q, {Relation{PeriodMonomial::of(gen::d_half(), 2), Level::q, "square-rational",
                                          "D^(1/2)^2 ~ 1"}});
    Outcome o;
    o.citations = {"lemma-d-product", "main-formula", "square-rational"};
    o.details["derived"] = derived.to_string();
    o.details["selected"] = stated.to_string();
    o.details["variant"] = to_string(c.sc.options.d_exponent);
    o.details["variants_agree_mod_rationals"] = q.equivalent_mod(thm, intro).equivalent;
    o.pass = derived == stated;
    o.summary = std::string("selected D-exponent variant ") + (o.pass ? "matches" : "differs from") +
                " the value derived from the lemma";
    return o;
}

// Input parsing only, run at load so malformed checks surface before any work.
void validate_check(const Ctx& c, const std::string& type)
{
    if (type == "critical" || type == "signature" || type == "compare") {
        arch_of(c);
        parse_eta(c);
    } else if (type == "weights") {
        parse_weights(c);
    } else if (type == "ephi") {
        c.phi();
    } else if (type == "main_theorem") {
        const Int n = as_int(need(c.input, "n", c.where), c.where + ".n");
        as_int(need(c.input, "m", c.where), c.where + ".m");
        if (n < 1 || get_int(c.input, "d", 1, c.where) < 1)
            bad(c.where, "n and d must be positive");
    }
}

using Runner = std::function<Outcome(const Ctx&)>;

const std::map<std::string, Runner>& runners()
{
    static const std::map<std::string, Runner> r{
        {"critical", run_critical}, {"signature", run_signature}, {"weights", run_weights},
        {"lemma_d", run_lemma_d},   {"compare", run_compare},     {"basechange", run_basechange},
        {"ephi", run_ephi},         {"main_theorem", run_main_theorem},
    };
    return r;
}

CheckResult guarded(const std::string& id, const std::string& type, const std::function<Outcome()>& fn)
{
    CheckResult res;
    res.id = id;
    res.type = type;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o = fn();
        res.status = o.pass ? "pass" : "fail";
        res.summary = std::move(o.summary);
        res.citations = std::move(o.citations);
        res.details = std::move(o.details);
    } catch (const Error& e) {
        res.status = "error";
        res.error_code = to_string(e.code());
        res.summary = e.what();
    } catch (const std::exception& e) {
        res.status = "error";
        res.error_code = "internal";
        res.summary = e.what();
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

Report run_parallel(const std::string& command, const ScenarioOptions& opts,
                    std::vector<std::function<CheckResult()>> jobs)
{
    std::vector<std::future<CheckResult>> fut;
    for (auto& j : jobs)
        fut.push_back(std::async(std::launch::async, j));
    Report r;
    r.command = command;
    r.options = opts;
    for (auto& f : fut)
        r.checks.push_back(f.get());
    return r;
}

json options_json(const ScenarioOptions& o)
{
    return json{{"level", to_string(o.level)},
                {"tate", o.tate},
                {"d_exponent", to_string(o.d_exponent)},
                {"twopi", to_string(o.twopi)},
                {"seed", o.seed}};
}

ScenarioOptions options_from(const json& j, ScenarioOptions o)
{
    if (!j.is_object())
        bad("options", "expected an object");
    if (j.contains("level"))
        o.level = parse_level(j.at("level").get<std::string>());
    if (j.contains("tate")) {
        const auto& t = j.at("tate");
        if (t.is_boolean())
            o.tate = t.get<bool>();
        else if (t == "on" || t == "off")
            o.tate = t == "on";
        else
            bad("options.tate", "expected true/false or on/off");
    }
    if (j.contains("d_exponent"))
        o.d_exponent = parse_d_exponent(j.at("d_exponent").get<std::string>());
    if (j.contains("twopi"))
        o.twopi = parse_twopi_variant(j.at("twopi").get<std::string>());
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            bad("options.seed", "expected a non-negative integer");
        o.seed = j.at("seed").get<std::uint64_t>();
    }
    return o;
}

}  // namespace

bool CheckResult::operator==(const CheckResult& o) const
{
    return id == o.id && type == o.type && status == o.status && summary == o.summary && citations == o.citations &&
           details == o.details && error_code == o.error_code;
}

Scenario parse_scenario(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset to line number
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
        raise(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object())
        raise(ErrorCode::parse_error, "line 1: scenario must be a JSON object");
    Scenario sc;
    try {
        sc.version = static_cast<int>(as_int(need(j, "version", "scenario"), "scenario.version"));
        if (sc.version != kScenarioVersion)
            bad("scenario.version", "unsupported version " + std::to_string(sc.version));
        if (j.contains("options"))
            sc.options = options_from(j.at("options"), sc.options);
        if (j.contains("field"))
            sc.models = parse_field(j.at("field"));
        if (j.contains("cm_type")) {
            if (!sc.models)
                bad("cm_type", "needs a field");
            std::vector<Emb> mem;
            for (const auto& s : names_from(j.at("cm_type"), "cm_type"))
                mem.push_back(sc.models->field.find(s));
            sc.phi = CMType(sc.models->field, mem);
        }
        if (j.contains("checks")) {
            sc.checks = j.at("checks");
            if (!sc.checks.is_array())
                bad("checks", "expected a list");
            std::set<std::string> ids;
            for (const auto& c : sc.checks) {
                const auto id = need(c, "id", "checks").get<std::string>();
                const auto type = need(c, "type", "checks[" + id + "]").get<std::string>();
                if (!ids.insert(id).second)
                    bad("checks", "duplicate id '" + id + "'");
                if (!runners().count(type))
                    bad("checks[" + id + "]", "unknown type '" + type + "'");
                validate_check(Ctx{sc, c, "checks[" + id + "]"}, type);
            }
        }
        if (j.contains("sweep"))
            sc.sweep = j.at("sweep");
    } catch (const json::exception& e) {
        raise(ErrorCode::invalid_argument, std::string("scenario: ") + e.what());
    }
    return sc;
}

void apply_overrides(ScenarioOptions& o, const OptionOverrides& ov)
{
    if (ov.level)
        o.level = *ov.level;
    if (ov.tate)
        o.tate = *ov.tate;
    if (ov.d_exponent)
        o.d_exponent = *ov.d_exponent;
    if (ov.seed)
        o.seed = *ov.seed;
}

Report run_checks(const Scenario& sc)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (const auto& c : sc.checks) {
        const std::string id = c.at("id").get<std::string>();
        const std::string type = c.at("type").get<std::string>();
        jobs.push_back([&sc, &c, id, type] {
            return guarded(id, type, [&] {
                Ctx ctx{sc, c, "checks[" + id + "]"};
                return runners().at(type)(ctx);
            });
        });
    }
    return run_parallel("check", sc.options, std::move(jobs));
}

Report run_sweep(const Scenario& sc)
{
    const json& s = sc.sweep;
    const std::string where = "sweep";
    InstanceBounds b;
    b.n_max = get_int(s, "n_max", b.n_max, where);
    b.d_max = get_int(s, "d_max", b.d_max, where);
    b.twice_A_max = get_int(s, "twice_A_max", b.twice_A_max, where);
    b.m_max = get_int(s, "m_max", b.m_max, where);
    b.kappa_max = get_int(s, "kappa_max", b.kappa_max, where);
    const auto count = static_cast<std::size_t>(get_int(s, "instances", 100, where));
    std::vector<std::string> props{"compare", "corollary", "signature", "dominance", "equivariance"};
    if (s.contains("properties"))
        props = s.at("properties").get<std::vector<std::string>>();

    CompareOptions copt;
    copt.level = sc.options.level;
    copt.tate = sc.options.tate;
    copt.twopi = sc.options.twopi;
    std::vector<std::function<CheckResult()>> jobs;
    std::uint64_t k = 0;
    for (const auto& p : props) {
        // independent deterministic stream per property
        const std::uint64_t seed = sc.options.seed ^ (0x9E3779B97F4A7C15ull * ++k);
        jobs.push_back([=] {
            return guarded(p, "sweep", [&]() -> Outcome {
                Rng rng(seed);
                SweepResult r;
                if (p == "compare")
                    r = sweep_compare(rng, count, b, copt);
                else if (p == "corollary")
                    r = sweep_corollary(rng, count, b);
                else if (p == "signature")
                    r = sweep_signature(rng, count, b);
                else if (p == "dominance")
                    r = sweep_dominance(rng, count, 8);
                else if (p == "equivariance")
                    r = sweep_equivariance(rng, count, b);
                else
                    bad("sweep.properties", "unknown property '" + p + "'");
                Outcome o;
                o.pass = r.passed;
                o.details = json{{"cases", r.cases}, {"points", r.points}, {"failures", r.failures}};
                o.summary = std::to_string(r.cases) + " random case(s), " + std::to_string(r.points) + " point(s)" +
                            (r.passed ? "" : ", " + std::to_string(r.failures.size()) + "+ failure(s)");
                return o;
            });
        });
    }
    return run_parallel("sweep", sc.options, std::move(jobs));
}

std::string emit_structured(const Report& r)
{
    json checks = json::array();
    std::size_t pass = 0, fail = 0, err = 0;
    for (const auto& c : r.checks) {
        json e{{"id", c.id},           {"type", c.type},       {"status", c.status},
               {"summary", c.summary}, {"citations", c.citations}, {"details", c.details}};
        if (!c.error_code.empty())
            e["error_code"] = c.error_code;
        checks.push_back(std::move(e));
        (c.status == "pass" ? pass : c.status == "fail" ? fail : err)++;
    }
    json j{{"version", r.version},
           {"command", r.command},
           {"options", options_json(r.options)},
           {"checks", checks},
           {"totals", json{{"pass", pass}, {"fail", fail}, {"error", err}}}};
    return j.dump(2) + "\n";
}

Report parse_report(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorCode::parse_error, e.what());
    }
    Report r;
    r.version = j.at("version").get<int>();
    if (r.version != kReportVersion)
        raise(ErrorCode::parse_error, "unsupported report version");
    r.command = j.at("command").get<std::string>();
    r.options = options_from(j.at("options"), ScenarioOptions{});
    for (const auto& e : j.at("checks")) {
        CheckResult c;
        c.id = e.at("id").get<std::string>();
        c.type = e.at("type").get<std::string>();
        c.status = e.at("status").get<std::string>();
        c.summary = e.at("summary").get<std::string>();
        c.citations = e.at("citations").get<std::vector<std::string>>();
        c.details = e.at("details");
        c.error_code = e.value("error_code", "");
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string emit_text(const Report& r)
{
    std::ostringstream os;
    os << r.command << " (level " << to_string(r.options.level) << ", tate " << (r.options.tate ? "on" : "off")
       << ", D-exponent " << to_string(r.options.d_exponent) << ", seed " << r.options.seed << ")\n";
    std::size_t pass = 0;
    for (const auto& c : r.checks) {
        std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "ERROR";
        os << "[" << tag << "] " << c.id << " (" << c.type << "): " << c.summary;
        if (!c.error_code.empty())
            os << " [" << c.error_code << "]";
        if (r.options.timing)
            os << " (" << static_cast<long>(c.millis) << " ms)";
        os << "\n";
        if (!c.citations.empty()) {
            os << "    cites:";
            for (const auto& s : c.citations)
                os << " " << s;
            os << "\n";
        }
        if (c.type == "compare" && c.details.contains("points"))
            for (const auto& p : c.details.at("points")) {
                os << "    m=" << p.at("m").dump() << " " << p.at("verdict").get<std::string>();
                const auto& res = p.at("residual_exponents");
                if (!res.empty()) {
                    os << "  residual";
                    for (auto it = res.begin(); it != res.end(); ++it)
                        os << " " << it.key() << "^" << it.value().dump();
                }
                os << "\n";
            }
        if (c.status == "pass")
            ++pass;
    }
    os << pass << "/" << r.checks.size() << " passed\n";
    return os.str();
}

int exit_code(const Report& r)
{
    bool failed = false;
    for (const auto& c : r.checks) {
        if (c.status == "error" && c.error_code != "internal")
            return 2;
        if (c.status != "pass")
            failed = true;
    }
    return failed ? 1 : 0;
}

std::vector<std::string> check_types()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : runners())
        out.push_back(k);
    return out;
}

std::string explain(const std::string& type)
{
    static const std::map<std::string, std::vector<std::pair<std::string, std::string>>> table{
        {"critical",
         {{"t-set", "T = {-A + (n-1)/2 + m_ctau - m_tau, A + (n-1)/2 + m_tau - m_ctau - kappa}, w = n - 1 - kappa"},
          {"critical-range", "max{p in T : p < w/2} < m <= min{p in T : p > w/2}"},
          {"signature-count", "I(tau) = #{i : 2 m_tau - 2 m_ctau - kappa + 2 A_{tau,i} < 0}"},
          {"mainineq", "(n - kappa)/2 <= m <= min_tau(-a_{tau,s+1} + s + m_tau - m_ctau - kappa, a_{tau,s} + r + m_ctau - m_tau)"},
          {"corollary-consistency", "critical m > n - kappa/2 satisfies the inequality with s_tau = I(tau)"}}},
        {"signature",
         {{"signature-count", "I(tau) = #{i : 2 m_tau - 2 m_ctau - kappa + 2 A_{tau,i} < 0}"},
          {"motivic-signature", "I(tau) = #{i : 2 p_i(tau) + p(tau) - q(tau) - w > 0}"},
          {"split-index", "sp(i, M; M', tau) = delta_{i, I(tau)}, sp(0, M'; M) = n - I, sp(1, M'; M) = I"}}},
        {"weights",
         {{"k-type-weight", "b_{tau,i} = a_{tau,s+i} + m_ctau - m_tau - s (i <= r), a_{tau,i-r} + m_ctau - m_tau + r (i > r); b0 = a0 - n sum m_ctau"},
          {"sharp-weight", "(l_1..l_n, -l_n - kappa, ..., -l_1 - kappa; 0) = (l, l* x det^-kappa)^# x nu^kappa"},
          {"weight-conjugation", "(g mu)_tau = mu_{g tau}, conj(tau) entries (-a_n, ..., -a_1)"}}},
        {"lemma_d",
         {{"lemma-d-product", "prod_j L(2m - j + kappa, alpha0 eps^j) ~ (2pi i)^{d((2m+kappa)n - n(n-1)/2)} D^{[(n+1)/2]/2} delta[eps]^{[n/2]} G(alpha)^n"},
          {"artin-period", "c[alpha0] ~ delta[alpha0], c[alpha0 eps] ~ delta[alpha0] delta[eps] D^{-1/2}"},
          {"delta-alpha0", "delta[alpha0] ~ D^{1/2} G(alpha)"}}},
        {"compare",
         {{"automorphic-side", "(2pi i)^{d(mn - n(n-1)/2)} I_F^{[n/2]} D^{n/2} e_Phi^{mn} P^(I)(pi) prod p(eta^v,tau)^I p(eta^v,ctau)^{n-I}"},
          {"motivic-side", "(2pi i)^{mnd} c^eps, c^+ = (2pi i)^{-d n(n-1)/2} I_F^{[n/2]} D^{n/2} prod Q^(I)(M,tau) Q^(0)(M',tau)^{n-I} Q^(1)(M',tau)^I"},
          {"tate-period-dictionary", "P^(I)(pi) ~ prod Q^(I(tau))(M,tau)  (conditional)"},
          {"motivic-cm-period", "Q^(0)(M(eta),tau) ~ p((eta^v)^c,tau), Q^(1)(M(eta),tau) ~ p(eta^v,tau)"},
          {"cm-period-conjugation", "p(chi^c,tau) ~ p(chi,ctau)"},
          {"square-rational", "D, I_F^2 and e_Phi^2 are rational"}}},
        {"basechange",
         {{"modulus-exponents", "unitary: (2m-1)/2, ..., 1/2; GL_N: (N-1)/2, ..., -(N-1)/2"},
          {"base-change-alignment", "chi_l = (c_1..c_m, c_1^-1..c_m^-1)"},
          {"weyl-equivalence", "T_{sigma,l} sigma(chi_l) and (T_sigma sigma(chi))_l agree up to the Weyl group"}}},
        {"ephi",
         {{"e-phi-sign", "e_Phi(g rho0) = (-1)^{|Phi \\ g Phi|}"},
          {"e-phi-invariance", "e_Phi(g rho) = e_Phi(rho) for g stabilizing Phi"}}},
        {"main_theorem",
         {{"main-formula", "L ~ (2pi i)^{d(mn - n(n-1)/2)} D^{[(n+1)/2]/2} delta[eps]^{[n/2]} Q*(pi,psi,alpha) / Z_inf(m)"},
          {"lemma-d-product", "divided by the zeta factor (2pi i)^{d(m+kappa)n} G(alpha)^n"},
          {"square-rational", "variants with D^{[(n+1)/2]/2} and D^{-[n/2]/2} agree up to rationals iff n is even"}}},
    };
    auto it = table.find(type);
    if (it == table.end())
        raise(ErrorCode::invalid_argument, "unknown check '" + type + "'");
    std::string out = type + "\n";
    for (const auto& [tag, formula] : it->second)
        out += "  " + tag + ": " + formula + "\n";
    return out;
}

}  // namespace galeq
