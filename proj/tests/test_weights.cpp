#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace galeq;

namespace {

WeightParam on_t1(const CMFieldModel& model, std::vector<Int> a, Int a0)
{
    return WeightParam{static_cast<Int>(a.size()), {{model.find("t1"), std::move(a)}}, a0};
}

Signature sig_t1(const CMFieldModel& model, Int r, Int s)
{
    return Signature(r + s, {{model.find("t1"), SigPair{r, s}}});
}

}  // namespace

TEST_CASE("G-dominance is weak decrease")
{
    auto model = fx::quadratic_model();
    CHECK(is_dominant_G(on_t1(model, {1, 0}, 0)));
    CHECK_FALSE(is_dominant_G(on_t1(model, {0, 1}, 0)));
    CHECK(is_dominant_G(on_t1(model, {3, 3, 3}, 0)));
}

TEST_CASE("K-dominance checks the two blocks separately")
{
    auto model = fx::quadratic_model();
    CHECK(is_dominant_K(on_t1(model, {-1, 2}, 0), sig_t1(model, 1, 1)));
    CHECK(is_dominant_K(on_t1(model, {2, -1, 0}, 0), sig_t1(model, 2, 1)));
    CHECK_FALSE(is_dominant_K(on_t1(model, {2, -1, 0}, 0), sig_t1(model, 1, 2)));
}

TEST_CASE("K-type weight of ((1,0);0) with signature (1,1)")
{
    auto model = fx::quadratic_model();
    auto L = big_lambda(model, on_t1(model, {1, 0}, 0), InfinityType::from_m({0, 0}), sig_t1(model, 1, 1));
    CHECK(L == on_t1(model, {-1, 2}, 0));
}

TEST_CASE("raising m at the conjugate embedding shifts entries up and the scalar down by n|phi|")
{
    auto model = fx::quadratic_model();
    auto mu = on_t1(model, {4, 1, -2}, 5);
    auto sig = sig_t1(model, 1, 2);
    auto base = big_lambda(model, mu, InfinityType::from_m({2, -1}), sig);
    auto shifted = big_lambda(model, mu, InfinityType::from_m({2, 0}), sig);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(shifted.at(model.find("t1"))[i] == base.at(model.find("t1"))[i] + 1);
    CHECK(shifted.a0 == base.a0 - 3);
}

TEST_CASE("non-dominant input is refused")
{
    auto model = fx::quadratic_model();
    try {
        big_lambda(model, on_t1(model, {0, 1}, 0), InfinityType::from_m({0, 0}), sig_t1(model, 1, 1));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_dominant);
    }
}

TEST_CASE("dual weight reverses and negates")
{
    auto model = fx::quadratic_model();
    CHECK(lambda_star(on_t1(model, {1, 0}, 3)) == on_t1(model, {0, -1}, -3));
    CHECK(lambda_star(on_t1(model, {0, 0}, 0)) == on_t1(model, {0, 0}, 0));
}

TEST_CASE("doubled weight with kappa")
{
    auto model = fx::quadratic_model();
    CHECK(lambda_sharp_kappa(on_t1(model, {1, 0}, 0), 0) == on_t1(model, {1, 0, 0, -1}, 0));
    CHECK(lambda_sharp_kappa(on_t1(model, {0, 0}, 0), 2) == on_t1(model, {0, 0, -2, -2}, 0));
    for (Int a0 : {-3, 0, 7})
        for (Int kappa : {-2, 0, 1, 4}) {
            auto l = on_t1(model, {5, 2, -1}, a0);
            CHECK(lambda_sharp_kappa(l, kappa).a0 == 0);
            CHECK(lambda_sharp_kappa_composed(l, kappa) == lambda_sharp_kappa(l, kappa));
        }
}

TEST_CASE("weight of a character")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    CHECK(mu_of_psi(model, phi, InfinityType::from_m({3, 1}), 2) == on_t1(model, {2, 2}, 2));
    CHECK(mu_of_psi(model, phi, InfinityType::from_m({0, 0}), 2) == on_t1(model, {0, 0}, 0));
}

TEST_CASE("line bundle weight")
{
    auto model = fx::quadratic_model();
    auto phi = fx::cm_type(model, {"t1"});
    CHECK(line_bundle_weight(phi, 3, 1, 1) == on_t1(model, {-4, 3}, 0));
    CHECK(line_bundle_weight(phi, 0, 0, 2) == on_t1(model, {0, 0, 0, 0}, 0));
    for (Int m = -4; m <= 4; ++m)
        for (Int kappa = -3; kappa <= 3; ++kappa)
            CHECK(is_dominant_K(line_bundle_weight(phi, m, kappa, 2), sig_t1(model, 2, 2)));
}

TEST_CASE("weight conjugation by the four-cycle")
{
    auto model = fx::four_cycle_model();
    auto g = fx::element_acting_as(model, Perm{1, 2, 3, 0});
    WeightParam w{2, {{model.find("t1"), {1, 0}}, {model.find("t2"), {5, 2}}}, 4};
    auto out = conjugate_weight(model, w, g);
    CHECK(out.at(model.find("t1")) == std::vector<Int>{5, 2});
    CHECK(out.at(model.find("t2")) == std::vector<Int>{0, -1});
    CHECK(out.a0 == 4);
    CHECK(conjugate_weight(model, out, model.group().inv(g)) == w);
    CHECK(conjugate_weight(model, w, model.group().identity()) == w);
}
