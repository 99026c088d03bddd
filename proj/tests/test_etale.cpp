#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "finrest/etale.hpp"
#include "finrest/generators.hpp"
#include "finrest/matched_pair.hpp"

using namespace finrest;

namespace {

std::shared_ptr<const LeftRestrictionMonoid> shared_pt2() {
  static auto s = std::make_shared<const LeftRestrictionMonoid>(pt(2).lrm);
  return s;
}

// A Boolean 3-element monoid {z, 1, m} with mm = m: the element m is not a
// partial unit and has only z below it, so the monoid is not etale.
MatchedPair idempotent_pair() {
  auto b = powerset(1);
  MatchedPair p;
  p.E = b.lattice;
  p.boolean_e = BooleanStructure{b.bottom, b.join, b.complement};
  p.M.size = 2;
  p.M.identity = 0;
  p.M.mult = {{0, 1}, {1, 1}};
  p.act.assign(2, std::vector<int>(2));
  for (int m = 0; m < 2; ++m)
    for (int e = 0; e < 2; ++e) p.act[m][e] = e;
  p.cong.push_back(Partition{{0, 0}});  // bottom: universal
  p.cong.push_back(Partition{{0, 1}});  // top: identity
  return p;
}

}  // namespace

TEST_CASE("partial units") {
  SECTION("Inv(pt(2)) is the symmetric inverse monoid on two points") {
    auto p2 = pt(2);
    auto units = partial_units(p2.lrm);
    CHECK(units.elements.size() == 7);
    for (int u : units.elements) CHECK(pt_injective(p2.maps[u], 2));
  }
  SECTION("projections are their own witnesses") {
    auto s = shared_pt2();
    auto units = partial_units(*s);
    for (int e : projections(*s)) {
      CHECK(units.witness[e] >= 0);
      CHECK(s->mul(e, units.witness[e]) == e);
    }
  }
  SECTION("in a Boolean algebra as a monoid, everything is a unit") {
    auto s = powerset_lrm(2);
    auto units = partial_units(s);
    CHECK(static_cast<int>(units.elements.size()) == s.size());
    for (int a = 0; a < s.size(); ++a) CHECK(units.witness[a] == a);
  }
  SECTION("inverse witnesses are unique") {
    auto s = shared_pt2();
    auto units = partial_units(*s);
    for (int a : units.elements) {
      int count = 0;
      for (int b = 0; b < s->size(); ++b)
        if (s->mul(a, b) == s->plus_of(a) && s->mul(b, a) == s->plus_of(b)) ++count;
      CHECK(count == 1);
    }
  }
  SECTION("the units form a closed sub-monoid with involutive inverse") {
    auto s = shared_pt2();
    auto units = partial_units(*s);
    auto inv = inv_monoid(*s, units);
    CHECK(check_lrm(*inv.lrm).ok());
    for (size_t i = 0; i < inv.elements.size(); ++i)
      CHECK(inv.inverse[inv.inverse[i]] == static_cast<int>(i));
  }
}

TEST_CASE("the etale property") {
  SECTION("pt(2) is etale; non-units decompose into singleton-domain maps") {
    auto p2 = pt(2);
    auto ctx = require_boolean(p2.lrm);
    auto units = partial_units(p2.lrm);
    auto result = is_etale(p2.lrm, ctx, units);
    REQUIRE(result.etale);
    for (int a = 0; a < p2.lrm.size(); ++a) {
      REQUIRE(!result.decomposition[a].empty());
      // The stored decomposition re-joins to a.
      CHECK(fold_join(ctx, result.decomposition[a]) == a);
      // Units decompose as themselves.
      if (units.witness[a] >= 0) CHECK(result.decomposition[a] == std::vector<int>{a});
    }
  }
  SECTION("a Boolean algebra as a monoid is trivially etale") {
    auto s = powerset_lrm(2);
    auto ctx = require_boolean(s);
    auto units = partial_units(s);
    auto result = is_etale(s, ctx, units);
    REQUIRE(result.etale);
    for (int a = 0; a < s.size(); ++a) CHECK(result.decomposition[a] == std::vector<int>{a});
  }
  SECTION("an idempotent non-unit yields a non-etale Boolean monoid") {
    auto p = idempotent_pair();
    REQUIRE(check_matched_pair(p).ok());
    REQUIRE(check_boolean_matched_pair(p).ok());
    auto built = build_lrm(p);
    REQUIRE(check_lrm(built.lrm).ok());
    REQUIRE(check_boolean_lrm(built.lrm).ok());
    REQUIRE(built.lrm.size() == 3);

    auto ctx = require_boolean(built.lrm);
    auto units = partial_units(built.lrm);
    CHECK(units.elements.size() == 2);  // zero and identity only
    auto result = is_etale(built.lrm, ctx, units);
    REQUIRE_FALSE(result.etale);
    // The witness is the non-unit total element.
    CHECK(units.witness[result.witness] == -1);
    CHECK(built.lrm.is_total(result.witness));
  }
}

TEST_CASE("restriction of S-actions to Inv(S)") {
  auto s = shared_pt2();
  auto ctx = std::make_shared<const BooleanContext>(require_boolean(*s));
  auto units = partial_units(*s);
  auto inv = inv_monoid(*s, units);

  SECTION("restrictions of Boolean actions pass the Inv axioms") {
    auto term = projection_action(s, true, ctx);
    CHECK(check_inv_supported(restrict_action(inv, term), inv).ok());
    for (int e : projections(*s)) {
      auto p = principal_action(s, e, true, ctx);
      CHECK(check_inv_supported(restrict_action(inv, p.action), inv).ok());
    }
  }
  SECTION("the projection action of Inv itself passes") {
    auto a = projection_action(inv.lrm);
    CHECK(check_inv_supported(a, inv).ok());
  }
  SECTION("corrupting the minimum breaks E3") {
    auto r = restrict_action(inv, projection_action(s, true, ctx));
    auto ord = make_action_order(r);
    REQUIRE(ord.minimum >= 0);
    r.act[0][ord.minimum] = (ord.minimum + 1) % r.carrier;
    auto report = check_inv_supported(r, inv);
    REQUIRE_FALSE(report.ok());
    CHECK_FALSE(report.find("E3.zero_fixpoint")->pass);
  }
}

TEST_CASE("translates of compatible units are compatible in the carrier") {
  auto s = shared_pt2();
  auto ctx = std::make_shared<const BooleanContext>(require_boolean(*s));
  auto units = partial_units(*s);
  auto inv = inv_monoid(*s, units);
  auto r = restrict_action(inv, principal_action(s, s->identity(), true, ctx).action);

  for (size_t i = 0; i < inv.elements.size(); ++i)
    for (size_t j = 0; j < inv.elements.size(); ++j) {
      if (!right_compatible(*s, inv.elements[i], inv.elements[j])) continue;
      for (int y = 0; y < r.carrier; ++y)
        CHECK(action_compat(r, r.apply(static_cast<int>(i), y), r.apply(static_cast<int>(j), y)));
    }
}

TEST_CASE("extension of Inv-actions to S-actions") {
  auto s = shared_pt2();
  auto ctx_v = require_boolean(*s);
  auto ctx = std::make_shared<const BooleanContext>(ctx_v);
  auto units = partial_units(*s);
  auto inv = inv_monoid(*s, units);
  auto etale = is_etale(*s, ctx_v, units);
  REQUIRE(etale.etale);

  SECTION("extending a restriction recovers the original action, table-identically") {
    auto check_roundtrip = [&](const SupportedAction& a) {
      auto r = restrict_action(inv, a);
      auto ext = extend_action(inv, r, s, ctx_v, etale);
      CHECK(ext.independent);
      CHECK(ext.action.act == a.act);
      CHECK(ext.action.support == a.support);
      // The extension satisfies every Boolean axiom, including E7.
      CHECK(check_supported(ext.action).ok());
      CHECK(check_boolean_supported(ext.action).ok());
    };
    check_roundtrip(projection_action(s, true, ctx));
    for (int e : projections(*s)) check_roundtrip(principal_action(s, e, true, ctx).action);
  }
  SECTION("partial units act unchanged under extension") {
    auto a = projection_action(s, true, ctx);
    auto r = restrict_action(inv, a);
    auto ext = extend_action(inv, r, s, ctx_v, etale);
    for (size_t i = 0; i < inv.elements.size(); ++i)
      for (int y = 0; y < r.carrier; ++y)
        CHECK(ext.action.act[inv.elements[i]][y] == r.act[i][y]);
  }
  SECTION("join distributivity across the extension") {
    auto a = principal_action(s, s->identity(), true, ctx).action;
    auto r = restrict_action(inv, a);
    auto ext = extend_action(inv, r, s, ctx_v, etale);
    auto ord = make_action_order(ext.action);
    for (int u = 0; u < s->size(); ++u)
      for (int v = 0; v < s->size(); ++v) {
        if (!right_compatible(*s, u, v)) continue;
        int j = ctx_v.join[u][v];
        REQUIRE(j >= 0);
        for (int y = 0; y < ext.action.carrier; ++y) {
          int rhs = ord.join[ext.action.apply(u, y)][ext.action.apply(v, y)];
          REQUIRE(rhs >= 0);
          CHECK(ext.action.apply(j, y) == rhs);
        }
      }
  }
}

TEST_CASE("category isomorphism over an etale monoid") {
  auto s = shared_pt2();
  auto ctx = std::make_shared<const BooleanContext>(require_boolean(*s));

  SECTION("standard fixtures round-trip with coinciding hom sets") {
    auto report = check_category_iso(s, standard_fixture_actions(s, ctx));
    CHECK(report.ok);
    CHECK_FALSE(report.vacuous);
  }
  SECTION("an empty fixture set passes vacuously with a warning") {
    auto report = check_category_iso(s, {});
    CHECK(report.ok);
    CHECK(report.vacuous);
    REQUIRE(!report.lines.empty());
    CHECK(report.lines[0].find("warning") != std::string::npos);
  }
  SECTION("a non-etale monoid is rejected") {
    auto built = build_lrm(idempotent_pair());
    auto bs = std::make_shared<const LeftRestrictionMonoid>(built.lrm);
    auto bctx = std::make_shared<const BooleanContext>(require_boolean(*bs));
    CHECK_THROWS_AS(check_category_iso(bs, standard_fixture_actions(bs, bctx)), Error);
  }
}
