#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sextic/invariants.hpp"
#include "sextic/registry.hpp"

using namespace sextic;
using namespace sextic::registry;

TEST_CASE("catalog lookups and error paths") {
    CHECK(all_cases().size() == 14);
    CHECK_THROWS_AS(get_case("no-such-case"), std::exception);
    CHECK_THROWS_AS(get_rule("no-such-rule"), std::exception);
    for (const auto& r : rule_catalog()) {
        CHECK(r.slots >= 1);
        CHECK(r.slots <= 4);
        CHECK(!r.templates.empty());
        // every template only mentions the declared slot generators
        for (const auto& t : r.templates)
            for (const auto& l : t.letters()) {
                CHECK(l.gen.size() == 2);
                CHECK(l.gen[0] == 's');
                CHECK(l.gen[1] - '0' >= 1);
                CHECK(l.gen[1] - '0' <= r.slots);
            }
    }
}

TEST_CASE("case records are internally consistent") {
    std::set<std::string> ids;
    for (const auto& rec : all_cases()) {
        CAPTURE(rec.id);
        CHECK(ids.insert(rec.id).second);  // unique ids
        if (rec.tag == ExpectedTag::METADATA) continue;
        // the upstairs basis is always the four-string geometric basis
        CHECK(rec.ordering.size() == 4);
        // every perturbation names a catalogued rule and binds all its slots
        for (const auto& p : rec.perturbations) {
            const auto& rule = get_rule(p.rule_id);
            CHECK(static_cast<int>(p.binding.size()) == rule.slots);
        }
    }
}

TEST_CASE("derivation replicates every printed presentation") {
    for (const auto& rec : all_cases()) {
        if (rec.tag == ExpectedTag::METADATA) continue;
        CAPTURE(rec.id);
        Presentation derived = derive_pi1(rec);
        std::set<Word> got, want;
        for (const auto& w : derived.relators()) got.insert(w.cyclic_canonical());
        for (const auto& w : expected_cover_relators(rec))
            want.insert(w.cyclic_canonical());
        CHECK(got == want);
    }
}

TEST_CASE("full verification passes for every case") {
    for (const auto& rec : all_cases()) {
        CAPTURE(rec.id);
        auto checks = verify_case(rec);
        for (const auto& c : checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.status != "FAIL");
        }
        CHECK(all_pass(checks));
    }
}

TEST_CASE("abelianizations match the recorded values") {
    for (const auto& rec : all_cases()) {
        if (rec.tag == ExpectedTag::METADATA) continue;
        CAPTURE(rec.id);
        CHECK(invariants::abelianization(rec.pi1).str() == rec.expected_ab);
    }
}

TEST_CASE("JSON export is well formed") {
    auto j = export_registry();
    CHECK(j.at("schema") == "1");
    CHECK(j.at("cases").size() == all_cases().size());
    for (const auto& cj : j.at("cases")) {
        CHECK(cj.contains("id"));
        CHECK(cj.contains("tag"));
        // round-trippable id
        const auto& rec = get_case(cj.at("id").get<std::string>());
        CHECK(tag_name(rec.tag) == cj.at("tag").get<std::string>());
    }
}
