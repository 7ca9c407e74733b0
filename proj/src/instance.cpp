#include "galeq/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "galeq/basechange.hpp"
#include "galeq/weights.hpp"

namespace galeq {

namespace {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

Perm random_signed_perm(Rng& rng, std::size_t d)
{
    std::vector<std::size_t> pi(d);
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    std::shuffle(pi.begin(), pi.end(), rng);
    Perm p(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        bool flip = uniform(rng, 0, 1) == 1;
        p[i] = flip ? pi[i] + d : pi[i];
        p[i + d] = flip ? pi[i] : pi[i] + d;
    }
    return p;
}

CMType random_cm_type(Rng& rng, const CMFieldModel& model)
{
    std::vector<Emb> mem;
    for (std::size_t i = 0; i < model.degree_plus(); ++i)
        mem.push_back(uniform(rng, 0, 1) ? Emb{i} : model.conj(Emb{i}));
    return CMType(model, mem);
}

ArchParams random_arch(Rng& rng, const CMType& phi, Int n, Int twice_max)
{
    std::vector<Int> pool;
    for (Int t = -twice_max; t <= twice_max; ++t)
        if (((t - (n - 1)) % 2 + 2) % 2 == 0)
            pool.push_back(t);
    if (static_cast<Int>(pool.size()) < n)
        raise(ErrorCode::invalid_argument, "bound on A too small for the rank");
    ArchParams ap{n, {}};
    for (auto t : phi.members()) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Int> pick(pool.begin(), pool.begin() + n);
        std::sort(pick.rbegin(), pick.rend());
        std::vector<Rational> A;
        for (auto x : pick)
            A.push_back(Rational(x, 2));
        ap.at[t] = std::move(A);
    }
    return ap;
}

}  // namespace

void SweepResult::fail(const std::string& what)
{
    passed = false;
    if (failures.size() < 5)
        failures.push_back(what);
}

InfinityType random_algebraic_type(Rng& rng, const CMFieldModel& model, const CMType& phi, Int bound)
{
    std::vector<Int> m(model.size());
    // w = m_tau + m_ctau must keep every m_ctau = w - m_tau within bounds
    Int lo = -bound, hi = bound;
    for (auto t : phi.members()) {
        m[t.index] = uniform(rng, -bound, bound);
        lo = std::max(lo, m[t.index] - bound);
        hi = std::min(hi, m[t.index] + bound);
    }
    const Int w = uniform(rng, lo, hi);
    for (auto t : phi.members())
        m[model.conj(t).index] = w - m[t.index];
    return InfinityType::from_m(m);
}

Instance random_instance(Rng& rng, const InstanceBounds& b)
{
    for (;;) {
        const Int n = uniform(rng, 1, b.n_max);
        const auto d = static_cast<std::size_t>(uniform(rng, 1, b.d_max));
        std::vector<Perm> gens;
        for (Int k = uniform(rng, 1, 2); k > 0; --k)
            gens.push_back(random_signed_perm(rng, d));
        CMFieldModel model = standard_model(d, gens).field;
        CMType phi = random_cm_type(rng, model);
        InfinityType psi = random_algebraic_type(rng, model, phi, b.m_max);
        const Int kappa = uniform(rng, -b.kappa_max, b.kappa_max);
        InfinityType eta = eta_from(model, phi, psi, kappa);
        EtaDecomposition dec = decompose_or_throw(model, eta, phi);
        for (auto t : phi.members())
            if (dec.diff.at(t) != psi.m(t) - psi.m(model.conj(t)))
                raise(ErrorCode::invariant_violation, "decomposition does not recover the character");
        ArchParams ap = random_arch(rng, phi, n, b.twice_A_max);
        try {
            derive_instance(model, ap, dec);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::degenerate_input)
                continue;
            throw;
        }
        return Instance{std::move(model), std::move(ap), std::move(dec)};
    }
}

Instance transport_instance(const Instance& inst, GroupElem g)
{
    const auto& model = inst.model;
    std::vector<Emb> mem;
    for (auto t : model.embeddings())
        if (inst.dec.phi.contains(model.act(g, t)))
            mem.push_back(t);
    CMType phi2(model, mem);
    ArchParams ap{inst.ap.n, {}};
    for (auto t : phi2.members())
        ap.at[t] = inst.ap.of(model.act(g, t));
    InfinityType eta = eta_from(model, inst.dec.phi, inst.dec.psi, inst.dec.kappa);
    EtaDecomposition dec = decompose_or_throw(model, pullback_infinity(model, eta, g), phi2);
    return Instance{model, std::move(ap), std::move(dec)};
}

std::optional<Instance> conjugate_instance_fixed_phi(const Instance& inst, GroupElem g)
{
    const auto& model = inst.model;
    ArchParams ap{inst.ap.n, {}};
    for (auto t : inst.dec.phi.members())
        ap.at[t] = inst.ap.extended(model, model.act(g, t));
    InfinityType eta = eta_from(model, inst.dec.phi, inst.dec.psi, inst.dec.kappa);
    auto r = tilde_alpha_decomposition(model, pullback_infinity(model, eta, g), inst.dec.phi);
    if (std::holds_alternative<ParityObstruction>(r))
        return std::nullopt;
    return Instance{model, std::move(ap), std::get<EtaDecomposition>(std::move(r))};
}

WeightParam random_dominant_weight(Rng& rng, const CMType& phi, Int n, Int bound)
{
    WeightParam w{n, {}, uniform(rng, -bound, bound)};
    for (auto t : phi.members()) {
        std::vector<Int> v;
        for (Int i = 0; i < n; ++i)
            v.push_back(uniform(rng, -bound, bound));
        std::sort(v.rbegin(), v.rend());
        w.entries[t] = std::move(v);
    }
    return w;
}

Signature random_signature(Rng& rng, const CMType& phi, Int n)
{
    std::map<Emb, SigPair> at;
    for (auto t : phi.members()) {
        Int r = uniform(rng, 0, n);
        at[t] = SigPair{r, n - r};
    }
    return Signature(n, at);
}

SweepResult sweep_lemma_d(Int n_max, Int kappa_max, Int d_max, Int m_extra)
{
    SweepResult res;
    res.name = "lemma_d";
    for (Int n = 1; n <= n_max; ++n)
        for (Int kappa = 0; kappa <= kappa_max; ++kappa)
            for (Int d = 1; d <= d_max; ++d)
                for (Int m = n - kappa / 2; m <= n + m_extra; ++m) {
                    if (2 * m <= 2 * n - kappa)
                        continue;
                    ++res.cases;
                    auto closed = assemble_lemma_d_closed(n, m, kappa, d);
                    auto prod = assemble_lemma_d_product(n, m, kappa, d).substituted;
                    if (!(closed == prod)) {
                        std::ostringstream os;
                        os << "n=" << n << " m=" << m << " kappa=" << kappa << " d=" << d << ": "
                           << closed.to_string() << " vs " << prod.to_string();
                        res.fail(os.str());
                    }
                }
    return res;
}

SweepResult sweep_compare(Rng& rng, std::size_t count, const InstanceBounds& b, const CompareOptions& opt)
{
    SweepResult res;
    res.name = "compare";
    for (std::size_t k = 0; k < count; ++k) {
        Instance inst = random_instance(rng, b);
        ++res.cases;
        for (const auto& rep : compare_all_points(inst.model, inst.ap, inst.dec, opt)) {
            ++res.points;
            if (rep.verdict != Verdict::equivalent)
                res.fail("instance " + std::to_string(k) + " m=" + std::to_string(rep.m) + ": " +
                         to_string(rep.verdict) + " residual " + rep.equivalence.residual.to_string());
        }
    }
    return res;
}

SweepResult sweep_corollary(Rng& rng, std::size_t count, const InstanceBounds& b)
{
    SweepResult res;
    res.name = "corollary_consistency";
    for (std::size_t k = 0; k < count; ++k) {
        Instance inst = random_instance(rng, b);
        ++res.cases;
        auto rep = corollary_consistency(inst.model, inst.ap, inst.dec);
        res.points += rep.checked_points.size();
        if (!rep.holds)
            res.fail("instance " + std::to_string(k) + " fails at m=" + format(rep.failing_points));
    }
    return res;
}

SweepResult sweep_signature(Rng& rng, std::size_t count, const InstanceBounds& b)
{
    SweepResult res;
    res.name = "signature";
    for (std::size_t k = 0; k < count; ++k) {
        Instance inst = random_instance(rng, b);
        ++res.cases;
        auto d = derive_instance(inst.model, inst.ap, inst.dec);
        auto Imot = signature_I_motivic(d.M, d.Mp, inst.dec.phi);
        if (Imot != d.I)
            res.fail("instance " + std::to_string(k) + ": automorphic and motivic I differ");
        for (auto t : inst.dec.phi.members()) {
            ++res.points;
            auto a = split_indices(d.M, d.Mp, t);
            auto c = split_indices(d.Mp, d.M, t);
            Int sa = std::accumulate(a.begin(), a.end(), Int{0});
            Int sc = std::accumulate(c.begin(), c.end(), Int{0});
            if (sa != 1 || sc != inst.ap.n)
                res.fail("instance " + std::to_string(k) + ": split index sums " + std::to_string(sa) + "," +
                         std::to_string(sc));
            if (a[static_cast<std::size_t>(d.I.at(t))] != 1 || c[1] != d.I.at(t) || c[0] != inst.ap.n - d.I.at(t))
                res.fail("instance " + std::to_string(k) + ": split indices disagree with I");
        }
    }
    return res;
}

SweepResult sweep_dominance(Rng& rng, std::size_t count, Int n_max)
{
    SweepResult res;
    res.name = "dominance";
    for (std::size_t k = 0; k < count; ++k) {
        const auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
        CMFieldModel model = standard_model(d, {random_signed_perm(rng, d)}).field;
        CMType phi = random_cm_type(rng, model);
        const Int n = uniform(rng, 1, n_max);
        WeightParam mu = random_dominant_weight(rng, phi, n, 10);
        Signature sig = random_signature(rng, phi, n);
        InfinityType psi = random_algebraic_type(rng, model, phi, 6);
        ++res.cases;
        try {
            WeightParam L = big_lambda(model, mu, psi, sig);
            if (!is_dominant_K(L, sig))
                res.fail("case " + std::to_string(k) + ": K-type weight not dominant");
            const Int kappa = uniform(rng, -4, 4);
            if (!(lambda_sharp_kappa(L, kappa) == lambda_sharp_kappa_composed(L, kappa)))
                res.fail("case " + std::to_string(k) + ": the two sharp constructions differ");
            WeightParam sum = mu_of_psi(model, phi, psi, n) + mu_of_psi(model, phi, psi.inverse(), n);
            bool zero = sum.a0 == 0;
            for (const auto& [t, v] : sum.entries)
                zero = zero && std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
            if (!zero)
                res.fail("case " + std::to_string(k) + ": mu(psi) + mu(psi^-1) is not zero");
        } catch (const Error& e) {
            res.fail("case " + std::to_string(k) + ": " + e.what());
        }
    }
    return res;
}

SweepResult sweep_equivariance(Rng& rng, std::size_t count, const InstanceBounds& b)
{
    SweepResult res;
    res.name = "equivariance";
    CompareOptions on;
    CompareOptions off;
    off.tate = false;
    for (std::size_t k = 0; k < count; ++k) {
        Instance inst = random_instance(rng, b);
        const auto& model = inst.model;
        const auto& G = model.group();
        const GroupElem g{static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(G.order()) - 1))};
        const GroupElem h{static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(G.order()) - 1))};
        const std::string tag = "instance " + std::to_string(k) + ": ";
        ++res.cases;

        // action laws
        const Int n = inst.ap.n;
        WeightParam mu = random_dominant_weight(rng, inst.dec.phi, n, 8);
        Signature sig = random_signature(rng, inst.dec.phi, n);
        InfinityType psi = inst.dec.psi;
        if (!(conjugate_weight(model, conjugate_weight(model, mu, g), h) == conjugate_weight(model, mu, G.mul(g, h))))
            res.fail(tag + "weight conjugation is not a right action");
        if (!(conjugate_signature(model, conjugate_signature(model, sig, g), h) ==
              conjugate_signature(model, sig, G.mul(g, h))))
            res.fail(tag + "signature conjugation is not a right action");
        if (!(conjugate_infinity(model, conjugate_infinity(model, psi, h), g) ==
              conjugate_infinity(model, psi, G.mul(g, h))))
            res.fail(tag + "infinity-type conjugation is not a left action");
        if (!(conjugate_signature(model, conjugate_signature(model, sig, g), G.inv(g)) == sig))
            res.fail(tag + "signature round trip");
        if (e_phi_sign(model, inst.dec.phi, G.mul(g, h)) !=
            e_phi_sign(model, inst.dec.phi, g) * e_phi_sign(model, inst.dec.phi, h))
            res.fail(tag + "e_Phi sign is not multiplicative");
        if (weight_of(model, conjugate_infinity(model, psi, g)) != weight_of(model, psi))
            res.fail(tag + "conjugation changed the weight of a character");

        // K-type weight: conjugate entries agree
        WeightParam L = big_lambda(model, mu, psi, sig);
        WeightParam L2 = big_lambda(model, conjugate_weight(model, mu, g), pullback_infinity(model, psi, g),
                                    conjugate_signature(model, sig, g));
        if (L2.entries != conjugate_weight(model, L, g).entries)
            res.fail(tag + "K-type weight entries are not equivariant");

        // verdicts: every point EQUIVALENT with the dictionary, none without
        auto uniform_verdict = [](const Instance& x, const CompareOptions& o) {
            const Verdict want = o.tate ? Verdict::equivalent : Verdict::not_equivalent;
            for (const auto& r : compare_all_points(x.model, x.ap, x.dec, o))
                if (r.verdict != want)
                    return false;
            return true;
        };
        for (const auto* o : {&on, &off}) {
            const std::string mode = o->tate ? "with dictionary" : "without dictionary";
            if (!uniform_verdict(inst, *o))
                res.fail(tag + "unexpected verdict " + mode);
            if (!uniform_verdict(transport_instance(inst, g), *o))
                res.fail(tag + "verdict changed under transport " + mode);
            if (auto c = conjugate_instance_fixed_phi(inst, g)) {
                ++res.points;
                if (!uniform_verdict(*c, *o))
                    res.fail(tag + "verdict changed under conjugation " + mode);
            }
        }
        auto ds = derive_instance(model, inst.ap, inst.dec);
        auto dt = derive_instance(model, transport_instance(inst, g).ap, transport_instance(inst, g).dec);
        for (auto t : inst.dec.phi.members()) {
            // transported data at g^{-1} t is the original data at t
            Emb s = model.act(G.inv(g), t);
            if (dt.I.at(s) != ds.I.at(t))
                res.fail(tag + "signature I is not transported");
        }
    }
    return res;
}

std::vector<Coord> default_coord_values()
{
    std::vector<Coord> v;
    for (Int k = -2; k <= 2; ++k) {
        v.push_back(Coord{Rational(1), k});
        v.push_back(Coord{Rational(-1), k});
    }
    v.push_back(Coord{Rational(2), 0});
    v.push_back(Coord{Rational(1, 2), 0});
    return v;
}

SweepResult sweep_basechange(Int m_max, const std::vector<Coord>& values)
{
    SweepResult res;
    res.name = "basechange";
    for (Int m = 1; m <= m_max; ++m) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        for (;;) {
            UnramChar chi{Side::unitary, 2 * m, {}};
            for (auto i : idx)
                chi.coords.push_back(values[i]);
            ++res.cases;
            for (int eps : {1, -1}) {
                ++res.points;
                if (!commutativity_check(chi, eps).holds)
                    res.fail(format(chi) + " eps=" + std::to_string(eps));
            }
            std::size_t p = 0;
            while (p < idx.size() && ++idx[p] == values.size())
                idx[p++] = 0;
            if (p == idx.size())
                break;
        }
    }
    return res;
}

SweepResult sweep_ephi(Int d_max, std::size_t max_order)
{
    SweepResult res;
    res.name = "ephi";
    for (Int d = 1; d <= d_max; ++d) {
        auto full = FiniteGroup::generated_by(hyperoctahedral_generators(static_cast<std::size_t>(d)),
                                              static_cast<std::size_t>(2 * d));
        for (const auto& sub : full.subgroups(max_order)) {
            std::vector<Perm> gens;
            for (auto x : sub)
                gens.push_back(full.perm(x));
            CMFieldModel model = standard_model(static_cast<std::size_t>(d), gens).field;
            ++res.cases;
            const auto& G = model.group();
            auto subs = G.subgroups(G.order());
            for (const auto& phi : all_cm_types(model)) {
                auto fixers = phi_stabilizer(model, phi);
                std::vector<EmbFamilyModel> fams{EmbFamilyModel::regular(model)};
                for (const auto& H : subs) {
                    bool trivial = true;
                    for (auto x : H)
                        trivial = trivial && e_phi_sign(model, phi, x) == 1;
                    if (trivial)
                        fams.push_back(EmbFamilyModel::cosets(model, H));
                }
                for (const auto& fam : fams) {
                    ++res.points;
                    try {
                        auto rep = e_phi_galois_invariance_check(model, phi, fam, fixers);
                        if (!rep.holds)
                            res.fail("d=" + std::to_string(d) + " |G|=" + std::to_string(G.order()) + " phi=" +
                                     format(model, phi) + ": " + rep.counterexamples.front());
                    } catch (const Error& e) {
                        res.fail(std::string("d=") + std::to_string(d) + ": " + e.what());
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace galeq
