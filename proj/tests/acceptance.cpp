// One line per acceptance criterion; exit status 1 if any line says FAIL.
// Zero tolerance everywhere: all comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "galeq/instance.hpp"
#include "support.hpp"

using namespace galeq;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok)
            detail = what;
        ok = ok && cond;
    }
};

std::string describe(const SweepResult& r)
{
    std::string s = r.name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.points) + " points";
    if (!r.failures.empty())
        s += "; first failure: " + r.failures.front();
    return s;
}

int failures = 0;

void criterion(int k, const char* title, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %-44s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", k, title, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok)
        ++failures;
}

const InstanceBounds kBounds{};  // n <= 4, d <= 3, |A| <= 15/2, |m| <= 6, |kappa| <= 4
constexpr std::size_t kInstances = 1000;
constexpr std::uint64_t kSeed = 20261016;

std::vector<Rational> halves_down(Int top, Int count)
{
    std::vector<Rational> v;
    for (Int i = 0; i < count; ++i)
        v.push_back(Rational(top - 2 * i, 2));
    return v;
}

}  // namespace

int main()
{
    criterion(1, "lemma d: product equals closed form", [] {
        Outcome o;
        auto r = sweep_lemma_d(12, 4, 3, 6);
        o.expect(r.passed && r.cases > 0, describe(r));
        if (o.ok)
            o.detail = describe(r);
        return o;
    });

    criterion(2, "compare EQUIVALENT at FGAL with Tate", [] {
        Outcome o;
        Rng rng(kSeed);
        CompareOptions opt;
        opt.level = Level::fgal;
        opt.tate = true;
        auto r = sweep_compare(rng, kInstances, kBounds, opt);
        o.expect(r.passed && r.cases >= kInstances && r.points > 0, describe(r));
        if (o.ok)
            o.detail = describe(r);
        return o;
    });

    criterion(3, "critical points satisfy the inequality", [] {
        Outcome o;
        Rng rng(kSeed);
        auto r = sweep_corollary(rng, kInstances, kBounds);
        o.expect(r.passed && r.cases >= kInstances, describe(r));

        // brute force on the same instance stream
        Rng again(kSeed);
        std::size_t points = 0;
        for (std::size_t k = 0; k < kInstances && o.ok; ++k) {
            Instance inst = random_instance(again, kBounds);
            auto d = derive_instance(inst.model, inst.ap, inst.dec);
            auto crit = fx::critical_by_gamma(d.T, d.tensor.weight);
            o.expect(crit == d.range.values(), "instance " + std::to_string(k) + ": critical set differs from oracle");
            for (auto m : crit) {
                if (2 * m <= 2 * inst.ap.n - inst.dec.kappa)
                    continue;
                ++points;
                o.expect(fx::inequality_by_hand(m, d.mu, inst.dec, d.sig, inst.model),
                         "instance " + std::to_string(k) + ": m=" + std::to_string(m) + " fails by hand");
            }
        }
        if (o.ok)
            o.detail = describe(r) + "; oracle " + std::to_string(points) + " points";
        return o;
    });

    criterion(4, "automorphic and motivic signatures agree", [] {
        Outcome o;
        Rng rng(kSeed);
        std::size_t n = 0;
        for (std::size_t k = 0; k < kInstances && o.ok; ++k) {
            Instance inst = random_instance(rng, kBounds);
            auto d = derive_instance(inst.model, inst.ap, inst.dec);
            o.expect(signature_I_auto(inst.ap, inst.dec) == signature_I_motivic(d.M, d.Mp, inst.dec.phi),
                     "instance " + std::to_string(k));
            ++n;
        }
        if (o.ok)
            o.detail = std::to_string(n) + " instances";
        return o;
    });

    criterion(5, "split index sums are 1 and n", [] {
        Outcome o;
        Rng rng(kSeed);
        std::size_t places = 0;
        for (std::size_t k = 0; k < kInstances && o.ok; ++k) {
            Instance inst = random_instance(rng, kBounds);
            auto d = derive_instance(inst.model, inst.ap, inst.dec);
            for (auto t : inst.dec.phi.members()) {
                Int a = 0, b = 0;
                for (auto x : split_indices(d.M, d.Mp, t))
                    a += x;
                for (auto x : split_indices(d.Mp, d.M, t))
                    b += x;
                o.expect(a == 1 && b == inst.ap.n, "instance " + std::to_string(k));
                ++places;
            }
        }
        Rng rng2(kSeed);
        auto r = sweep_signature(rng2, kInstances, kBounds);
        o.expect(r.passed, describe(r));
        if (o.ok)
            o.detail = std::to_string(places) + " places; " + describe(r);
        return o;
    });

    criterion(6, "base change commutes with conjugation", [] {
        Outcome o;
        auto r = sweep_basechange(4, default_coord_values());
        o.expect(r.passed && r.cases >= 10000, describe(r));
        UnramChar chi{Side::unitary, 4, {Coord{}, Coord{}}};
        auto w = commutativity_check(chi, -1);
        const std::vector<Rational> lhs{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)};
        const std::vector<Rational> rhs{Rational(3, 2), Rational(1, 2), Rational(-3, 2), Rational(-1, 2)};
        o.expect(w.holds && w.twist_exponents_lhs == lhs && w.twist_exponents_rhs == rhs &&
                     !w.exponents_tuple_equal && w.exponents_multiset_equal,
                 "rank four witness not reproduced");
        if (o.ok)
            o.detail = describe(r) + "; witness ok";
        return o;
    });

    criterion(7, "modulus exponents match display and roots", [] {
        Outcome o;
        for (Int m = 1; m <= 6; ++m) {
            const auto gl = modulus_exponents_GL(2 * m);
            o.expect(gl == halves_down(2 * m - 1, 2 * m), "GL display, m=" + std::to_string(m));
            o.expect(gl == fx::rho_GL(2 * m), "GL roots, m=" + std::to_string(m));
            const auto u = modulus_exponents_U(m);
            o.expect(u == halves_down(2 * m - 1, m), "U display, m=" + std::to_string(m));
            o.expect(u == fx::rho_unitary_in_qE(m, false), "U roots, m=" + std::to_string(m));
        }
        if (o.ok)
            o.detail = "m = 1..6";
        return o;
    });

    criterion(8, "e_Phi invariant under stabilizers", [] {
        Outcome o;
        auto r = sweep_ephi(3, 12);
        o.expect(r.passed && r.cases > 0, describe(r));
        // sign at each point of the regular family read off by counting
        std::size_t checked = 0;
        for (std::size_t d = 1; d <= 3; ++d) {
            auto full = FiniteGroup::generated_by(hyperoctahedral_generators(d), 2 * d);
            for (const auto& sub : full.subgroups(12)) {
                std::vector<Perm> gens;
                for (auto x : sub)
                    gens.push_back(full.perm(x));
                CMFieldModel model = standard_model(d, gens).field;
                const auto& G = model.group();
                auto fam = EmbFamilyModel::regular(model);
                for (const auto& phi : all_cm_types(model)) {
                    auto signs = e_phi_family(model, phi, fam);
                    for (auto h : G.elements()) {
                        o.expect(signs[fam.act(h, fam.base())] == fx::sign_by_count(model, phi, h),
                                 "family sign differs from count");
                        for (auto g : phi_stabilizer(model, phi)) {
                            ++checked;
                            o.expect(fx::sign_by_count(model, phi, G.mul(g, h)) == fx::sign_by_count(model, phi, h),
                                     "count not invariant");
                        }
                    }
                }
            }
        }
        if (o.ok)
            o.detail = describe(r) + "; oracle " + std::to_string(checked) + " pairs";
        return o;
    });

    criterion(9, "conjugation equivariance of assembly", [] {
        Outcome o;
        Rng rng(kSeed + 9);
        auto r = sweep_equivariance(rng, kInstances, kBounds);
        o.expect(r.passed && r.cases >= kInstances, describe(r));
        if (o.ok)
            o.detail = describe(r);
        return o;
    });

    criterion(10, "big lambda is K-dominant", [] {
        Outcome o;
        Rng rng(kSeed + 10);
        auto r = sweep_dominance(rng, 10000, 8);
        o.expect(r.passed && r.cases >= 10000, describe(r));

        // independent draw, dominance re-read by hand
        Rng rng2(kSeed + 11);
        std::size_t n_cases = 0;
        for (int k = 0; k < 10000 && o.ok; ++k) {
            const auto d = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng2));
            CMFieldModel model = standard_model(d, hyperoctahedral_generators(d)).field;
            auto types = all_cm_types(model);
            const CMType& phi = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng2)];
            const Int n = std::uniform_int_distribution<Int>(1, 8)(rng2);
            WeightParam mu = random_dominant_weight(rng2, phi, n, 10);
            Signature sig = random_signature(rng2, phi, n);
            InfinityType psi = random_algebraic_type(rng2, model, phi, 6);
            WeightParam L = big_lambda(model, mu, psi, sig);
            for (const auto& [t, v] : L.entries) {
                const auto rr = static_cast<std::size_t>(sig.at(t).r);
                for (std::size_t i = 0; i + 1 < v.size(); ++i)
                    if (i + 1 != rr)
                        o.expect(v[i] >= v[i + 1], "case " + std::to_string(k) + ": not dominant by hand");
            }
            ++n_cases;
        }
        if (o.ok)
            o.detail = describe(r) + "; oracle " + std::to_string(n_cases) + " cases";
        return o;
    });

    std::printf("%s\n", failures ? "acceptance: FAIL" : "acceptance: PASS");
    return failures ? 1 : 0;
}
