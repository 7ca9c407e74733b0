#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <numeric>
#include <random>

#include "galeq/instance.hpp"
#include "support.hpp"

using namespace galeq;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

EtaDecomposition diff_eta(const CMFieldModel& model, const CMType& phi, Int diff, Int kappa)
{
    std::map<Emb, Int> d;
    for (auto t : phi.members())
        d[t] = diff;
    return decomposition_from_diff(model, phi, d, kappa);
}

}  // namespace

TEST_CASE("a to A dictionary")
{
    auto model = fx::quadratic_model();
    auto t1 = model.find("t1");
    CHECK(a_to_A(WeightParam{2, {{t1, {0, 0}}}, 0}).of(t1) == R({Rational(1, 2), Rational(-1, 2)}));
    for (Int a1 : {-3, 0, 4})
        CHECK(a_to_A(WeightParam{1, {{t1, {a1}}}, 0}).of(t1) == R({Rational(-a1)}));
    WeightParam mu{3, {{t1, {5, 5, -2}}}, 7};
    CHECK(A_to_a(a_to_A(mu), 7) == mu);
}

TEST_CASE("A must be strictly decreasing with the right half-integrality")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    CHECK_THROWS_AS(fx::arch(model, phi, R({Rational(1, 2), Rational(1, 2)})).validate(), Error);
    CHECK_THROWS_AS(fx::arch(model, phi, R({Rational(1), Rational(0)})).validate(), Error);
    CHECK_NOTHROW(fx::arch(model, phi, R({Rational(3, 2), Rational(-1, 2)})).validate());
}

TEST_CASE("Hodge types of the rank 2 motive")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto h = hodge_of_pi(model, fx::arch(model, phi, R({Rational(1, 2), Rational(-1, 2)})));
    CHECK(h.weight == 1);
    auto pairs = h.at.at(model.find("t1"));
    std::sort(pairs.begin(), pairs.end(), [](auto& x, auto& y) { return x.p < y.p; });
    CHECK(pairs == std::vector<HodgePair>{{0, 1}, {1, 0}});
    auto h1 = hodge_of_pi(model, fx::arch(model, phi, R({Rational(0)})));
    CHECK(h1.weight == 0);
    CHECK(h1.at.at(model.find("t1")) == std::vector<HodgePair>{{0, 0}});
}

TEST_CASE("Hodge type of the character")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto triv = hodge_of_eta(model, fx::trivial_eta(model, phi));
    CHECK(triv.weight == 0);
    CHECK(triv.at.at(model.find("t1")) == std::vector<HodgePair>{{0, 0}});
    auto h = hodge_of_eta(model, diff_eta(model, phi, 1, 0));
    auto pq = h.at.at(model.find("t1")).front();
    CHECK(pq.p - pq.q == -2);
    auto pqc = h.at.at(model.find("ct1")).front();
    CHECK(pqc.p - pqc.q == 2);
}

TEST_CASE("T set of small instances")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto eta = fx::trivial_eta(model, phi);
    auto chi = hodge_of_eta(model, eta);
    auto one = tensor(hodge_of_pi(model, fx::arch(model, phi, R({Rational(0)}))), chi);
    CHECK(t_set(one) == std::vector<Int>{0});
    auto two = tensor(hodge_of_pi(model, fx::arch(model, phi, R({Rational(1, 2), Rational(-1, 2)}))), chi);
    CHECK(t_set(two) == std::vector<Int>{0, 1});
    CHECK(two.weight == 1);
}

TEST_CASE("T set from the tensor product agrees with the closed formula")
{
    Rng rng(5);
    InstanceBounds b;
    for (int k = 0; k < 300; ++k) {
        auto inst = random_instance(rng, b);
        auto data = derive_instance(inst.model, inst.ap, inst.dec);
        CHECK(data.T == t_set_formula(inst.ap, inst.dec));
    }
}

TEST_CASE("T set is symmetric when kappa and the differences vanish")
{
    auto model = standard_model(2, {}).field;
    auto phi = fx::cm_type(model, {"t1", "ct2"});
    auto eta = fx::trivial_eta(model, phi);
    auto data = derive_instance(model, fx::arch(model, phi, R({Rational(2), Rational(1), Rational(-1)})), eta);
    std::set<Int> T(data.T.begin(), data.T.end());
    for (auto p : data.T)
        CHECK(T.count(data.tensor.weight - p) == 1);
}

TEST_CASE("critical ranges against the archimedean factor oracle")
{
    auto r1 = critical_range({0, 1}, 1);
    CHECK(r1.values() == std::vector<Int>{1});
    auto r2 = critical_range({0, 3}, 3);
    CHECK(r2.values() == std::vector<Int>{1, 2, 3});
    CHECK(r1.values() == fx::critical_by_gamma({0, 1}, 1));
    CHECK(r2.values() == fx::critical_by_gamma({0, 3}, 3));
    try {
        critical_range({1}, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_input);
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> u(-6, 6);
    for (int k = 0; k < 2000; ++k) {
        const Int w = u(rng) * 2 + 1;
        std::vector<Int> T;
        for (int i = 0; i < 4; ++i) {
            const Int p = u(rng);
            T.push_back(p);
            T.push_back(w - p);
        }
        std::sort(T.begin(), T.end());
        T.erase(std::unique(T.begin(), T.end()), T.end());
        auto vals = critical_range(T, w).values();
        CHECK_FALSE(vals.empty());
        CHECK(vals == fx::critical_by_gamma(T, w));
    }
}

TEST_CASE("automorphic signature counts negative shifted parameters")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto t1 = model.find("t1");
    auto eta = fx::trivial_eta(model, phi);
    CHECK(signature_I_auto(fx::arch(model, phi, R({Rational(1, 2), Rational(-1, 2)})), eta).at(t1) == 1);
    CHECK(signature_I_auto(fx::arch(model, phi, R({Rational(-15, 2), Rational(-17, 2)})), eta).at(t1) == 2);
    CHECK(signature_I_auto(fx::arch(model, phi, R({Rational(17, 2), Rational(15, 2)})), eta).at(t1) == 0);
    try {
        signature_I_auto(fx::arch(model, phi, R({Rational(1), Rational(0)})), eta);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_input);
    }
}

TEST_CASE("motivic signature of rank one pieces")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto t1 = model.find("t1"), c1 = model.find("ct1");
    auto rank1 = [&](Int p, Int w) { return HodgeData{1, w, {{t1, {{p, w - p}}}, {c1, {{w - p, p}}}}}; };
    auto flat = rank1(0, 0);
    CHECK(signature_I_motivic(rank1(50, 0), flat, phi).at(t1) == 1);
    CHECK(signature_I_motivic(rank1(-50, 0), flat, phi).at(t1) == 0);
}

TEST_CASE("split indices at I = 1 and I = 0")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto t1 = model.find("t1");
    auto eta = fx::trivial_eta(model, phi);
    auto one = derive_instance(model, fx::arch(model, phi, R({Rational(1, 2), Rational(-1, 2)})), eta);
    REQUIRE(one.I.at(t1) == 1);
    CHECK(split_indices(one.M, one.Mp, t1) == std::vector<Int>{0, 1, 0});
    CHECK(split_indices(one.Mp, one.M, t1) == std::vector<Int>{1, 1});
    auto zero = derive_instance(model, fx::arch(model, phi, R({Rational(5, 2), Rational(3, 2)})), eta);
    REQUIRE(zero.I.at(t1) == 0);
    CHECK(split_indices(zero.M, zero.Mp, t1) == std::vector<Int>{1, 0, 0});
    CHECK(split_indices(zero.Mp, zero.M, t1) == std::vector<Int>{2, 0});
}

TEST_CASE("split indices follow the closed pattern on random instances")
{
    Rng rng(9);
    InstanceBounds b;
    for (int k = 0; k < 300; ++k) {
        auto inst = random_instance(rng, b);
        auto d = derive_instance(inst.model, inst.ap, inst.dec);
        auto I = signature_I_motivic(d.M, d.Mp, inst.dec.phi);
        CHECK(I == signature_I_auto(inst.ap, inst.dec));
        const Int n = inst.ap.n;
        for (auto t : inst.dec.phi.members()) {
            std::vector<Int> want(static_cast<std::size_t>(n + 1), 0);
            want[static_cast<std::size_t>(I.at(t))] = 1;
            CHECK(split_indices(d.M, d.Mp, t) == want);
            CHECK(split_indices(d.Mp, d.M, t) == std::vector<Int>{n - I.at(t), I.at(t)});
        }
    }
}

TEST_CASE("inequality with one present term")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto t1 = model.find("t1");
    WeightParam mu{1, {{t1, {0}}}, 0};
    Signature sig(1, {{t1, SigPair{1, 0}}});
    auto eta = diff_eta(model, phi, 5, 0);
    std::vector<Int> ok;
    for (Int m = -3; m <= 9; ++m) {
        auto rep = mainineq_check(m, mu, eta, sig);
        CHECK(rep.ok == fx::inequality_by_hand(m, mu, eta, sig, model));
        if (rep.ok)
            ok.push_back(m);
    }
    CHECK(ok == std::vector<Int>{1, 2, 3, 4, 5});
    CHECK(mainineq_check(1, mu, eta, sig).lower == Rational(1, 2));
}

TEST_CASE("inequality agrees with direct evaluation on random data")
{
    std::mt19937_64 rng(21);
    auto model = standard_model(2, {}).field;
    for (int k = 0; k < 3000; ++k) {
        auto phi = all_cm_types(model)[static_cast<std::size_t>(k) % 4];
        const Int n = 1 + static_cast<Int>(rng() % 4);
        auto mu = random_dominant_weight(rng, phi, n, 5);
        auto sig = random_signature(rng, phi, n);
        // differences share a parity
        std::map<Emb, Int> diff;
        const Int par = static_cast<Int>(rng() % 2);
        for (auto t : phi.members())
            diff[t] = 2 * (static_cast<Int>(rng() % 6) - 3) + par;
        auto eta = decomposition_from_diff(model, phi, diff, static_cast<Int>(rng() % 9) - 4);
        for (Int m = -6; m <= 12; ++m)
            CHECK(mainineq_check(m, mu, eta, sig).ok == fx::inequality_by_hand(m, mu, eta, sig, model));
    }
}

TEST_CASE("corollary consistency on small instances")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    auto eta = fx::trivial_eta(model, phi);
    auto rep = corollary_consistency(model, fx::arch(model, phi, R({Rational(1, 2), Rational(-1, 2)})), eta);
    CHECK(rep.holds);
    CHECK(rep.checked_points.empty());
    // rank one, odd kappa keeps every instance non-degenerate
    for (Int A = -5; A <= 5; ++A)
        for (Int diff = -4; diff <= 4; ++diff)
            for (Int kappa = -3; kappa <= 3; kappa += 2) {
                auto r = corollary_consistency(model, fx::arch(model, phi, R({Rational(A)})),
                                               diff_eta(model, phi, diff, kappa));
                CHECK(r.holds);
            }
}
