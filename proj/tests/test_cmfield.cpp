#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace galeq;

namespace {
const Perm kCycle{1, 2, 3, 0};
}

TEST_CASE("model rejects a conjugation with a fixed point")
{
    auto G = std::make_shared<FiniteGroup>(FiniteGroup::generated_by({}, 2));
    CHECK_THROWS_AS(CMFieldModel::create({"a", "b"}, Perm{0, 1}, G, {Perm{0, 1}}), Error);
}

TEST_CASE("model rejects an action that does not commute with conjugation")
{
    // swaps t1 and t2 but fixes ct1, ct2
    CHECK_THROWS_AS(standard_model(2, {Perm{1, 0, 2, 3}}), Error);
}

TEST_CASE("CM type must pick one embedding from each pair")
{
    auto model = fx::four_cycle_model();
    CHECK_THROWS_AS(fx::cm_type(model, {"t1", "ct1"}), Error);
    CHECK_THROWS_AS(fx::cm_type(model, {"t1"}), Error);
    CHECK(all_cm_types(model).size() == 4);
}

TEST_CASE("four-cycle moves {t1,t2} to {t2,ct1}")
{
    auto model = fx::four_cycle_model();
    auto g = fx::element_acting_as(model, kCycle);
    auto phi = fx::cm_type(model, {"t1", "t2"});
    auto moved = conjugate_cm_type(model, phi, g);
    CHECK(moved == fx::cm_type(model, {"t2", "ct1"}));
    CHECK(conjugate_cm_type(model, phi, model.group().identity()) == phi);
}

TEST_CASE("conjugation acts on the CM type as an involution")
{
    auto model = fx::four_cycle_model();
    auto c = fx::element_acting_as(model, model.conj_perm());
    auto phi = fx::cm_type(model, {"t1", "t2"});
    auto flipped = conjugate_cm_type(model, phi, c);
    CHECK(flipped == fx::cm_type(model, {"ct1", "ct2"}));
    CHECK(conjugate_cm_type(model, flipped, c) == phi);
}

TEST_CASE("sign of the four-cycle is -1 and of its square +1")
{
    auto model = fx::four_cycle_model();
    auto g = fx::element_acting_as(model, kCycle);
    auto phi = fx::cm_type(model, {"t1", "t2"});
    CHECK(e_phi_sign(model, phi, model.group().identity()) == 1);
    CHECK(e_phi_sign(model, phi, g) == -1);
    CHECK(e_phi_sign(model, phi, model.group().mul(g, g)) == 1);
    for (auto h : model.group().elements())
        CHECK(e_phi_sign(model, phi, h) == fx::sign_by_count(model, phi, h));
}

TEST_CASE("sign family on the regular cyclic model")
{
    auto model = fx::four_cycle_model();
    auto g = fx::element_acting_as(model, kCycle);
    auto phi = fx::cm_type(model, {"t1", "t2"});
    auto fam = EmbFamilyModel::regular(model);
    auto signs = e_phi_family(model, phi, fam);
    const auto& G = model.group();
    CHECK(signs[fam.act(g, fam.base())] == -1);
    CHECK(signs[fam.act(G.mul(g, g), fam.base())] == 1);
    CHECK(signs[fam.act(G.pow(g, 3), fam.base())] == -1);
    CHECK(signs[fam.base()] == 1);
}

TEST_CASE("trivial group gives the constant sign")
{
    auto model = standard_model(2, {}).field;
    auto phi = fx::cm_type(model, {"t1", "ct2"});
    auto signs = e_phi_family(model, phi, EmbFamilyModel::regular(model));
    CHECK(signs == std::vector<int>{1});
}

TEST_CASE("family through a subgroup with a -1 element is ill posed")
{
    auto model = fx::four_cycle_model();
    auto phi = fx::cm_type(model, {"t1", "t2"});
    auto fam = EmbFamilyModel::cosets(model, model.group().elements());
    try {
        e_phi_family(model, phi, fam);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ill_posed_model);
    }
    auto g = fx::element_acting_as(model, kCycle);
    auto half = EmbFamilyModel::cosets(model, {model.group().identity(), model.group().mul(g, g)});
    CHECK(e_phi_family(model, phi, half).size() == 2);
}

TEST_CASE("family point outside the orbit is unreachable")
{
    auto model = fx::four_cycle_model();
    auto phi = fx::cm_type(model, {"t1", "t2"});
    // regular orbit plus one point nothing moves onto
    auto reg = EmbFamilyModel::regular(model);
    std::vector<Perm> act;
    for (auto g : model.group().elements()) {
        Perm p;
        for (std::size_t i = 0; i < reg.size(); ++i)
            p.push_back(reg.act(g, i));
        p.push_back(reg.size());
        act.push_back(p);
    }
    auto fam = EmbFamilyModel::create(model, {"r0", "r1", "r2", "r3", "stray"}, 0, act);
    try {
        e_phi_family(model, phi, fam);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unreachable_point);
    }
}

TEST_CASE("invariance under the stabilizer, exhaustive on the cyclic model")
{
    auto model = fx::four_cycle_model();
    auto fam = EmbFamilyModel::regular(model);
    for (const auto& phi : all_cm_types(model)) {
        auto fixers = phi_stabilizer(model, phi);
        auto rep = e_phi_galois_invariance_check(model, phi, fam, fixers);
        CHECK(rep.holds);
        auto id = e_phi_galois_invariance_check(model, phi, fam, {model.group().identity()});
        CHECK(id.holds);
    }
}

TEST_CASE("invariance check refuses a non-stabilizing element")
{
    auto model = fx::four_cycle_model();
    auto phi = fx::cm_type(model, {"t1", "t2"});
    auto g = fx::element_acting_as(model, kCycle);
    try {
        e_phi_galois_invariance_check(model, phi, EmbFamilyModel::regular(model), {g});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition);
    }
}

TEST_CASE("signature conjugation reads the entry at g tau")
{
    auto model = fx::four_cycle_model();
    auto g = fx::element_acting_as(model, kCycle);
    Signature sig(3, {{model.find("t1"), SigPair{2, 1}}, {model.find("t2"), SigPair{3, 0}}});
    auto out = conjugate_signature(model, sig, g);
    CHECK(out.at(model.find("t1")) == SigPair{3, 0});
    CHECK(out.at(model.find("t2")) == SigPair{1, 2});
    CHECK(conjugate_signature(model, sig, model.group().identity()) == sig);
}

TEST_CASE("signature with r + s != n is rejected")
{
    auto model = fx::four_cycle_model();
    CHECK_THROWS_AS(Signature(3, {{model.find("t1"), SigPair{2, 2}}, {model.find("t2"), SigPair{3, 0}}}), Error);
}

TEST_CASE("signature missing an embedding cannot be conjugated")
{
    auto model = fx::four_cycle_model();
    auto g = fx::element_acting_as(model, kCycle);
    Signature sig(3, {{model.find("t1"), SigPair{2, 1}}});
    CHECK_THROWS_AS(conjugate_signature(model, sig, g), Error);
}
