#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sextic/braid.hpp"

using namespace sextic;

namespace {

const std::vector<std::string> kBasis = {"a", "b", "g", "d"};

Word random_word(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> pick(0, 3), sgn(0, 1);
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back({kBasis[pick(rng)], sgn(rng) ? 1 : -1});
    return Word::reduce(std::move(ls));
}

}  // namespace

TEST_CASE("Hurwitz action satisfies the braid relations") {
    std::mt19937 rng(3);
    Braid s1s2s1 = Braid::parse(4, "s1 s2 s1");
    Braid s2s1s2 = Braid::parse(4, "s2 s1 s2");
    Braid s1s3 = Braid::parse(4, "s1 s3");
    Braid s3s1 = Braid::parse(4, "s3 s1");
    for (int i = 0; i < 100; ++i) {
        Word w = random_word(rng, 8);
        CHECK(act(s1s2s1, w, kBasis) == act(s2s1s2, w, kBasis));
        CHECK(act(s1s3, w, kBasis) == act(s3s1, w, kBasis));
    }
}

TEST_CASE("action respects products and inverses") {
    std::mt19937 rng(17);
    Braid b = Braid::parse(4, "s1 s3^-1 s2 s2 s1^-1");
    for (int i = 0; i < 100; ++i) {
        Word u = random_word(rng, 6), v = random_word(rng, 6);
        CHECK(act(b, u * v, kBasis) == act(b, u, kBasis) * act(b, v, kBasis));
        CHECK(act(b * b.inverse(), u, kBasis) == u);
    }
}

TEST_CASE("full twist acts as conjugation by the boundary product") {
    Braid delta2 = Braid::full_twist(4);
    Word rho = Word::parse("a b g d");
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        Word w = random_word(rng, 8);
        CHECK(act(delta2, w, kBasis) == rho * w * rho.inverse());
    }
}

TEST_CASE("relations_of the identity braid is empty") {
    CHECK(relations_of(Braid(4), kBasis).empty());
}

TEST_CASE("relations_of a single generator") {
    Braid s1(4);
    s1.append(1, 1);
    auto rels = relations_of(s1, kBasis);
    // eta1 -> eta1 eta2 eta1^-1, eta2 -> eta1 gives two nontrivial relators
    REQUIRE(rels.size() == 2);
    CHECK(rels[0].cyclic_canonical() == Word::parse("a b a^-1 a^-1").cyclic_canonical());
    CHECK(rels[1].cyclic_canonical() == Word::parse("a b^-1").cyclic_canonical());
}

TEST_CASE("conj_star is an involution") {
    std::mt19937 rng(101);
    for (int i = 0; i < 100; ++i) {
        Word w = random_word(rng, 10);
        CHECK(conj_star(conj_star(w, kBasis), kBasis) == w);
    }
}

TEST_CASE("conj_star images of the basis") {
    CHECK(conj_star(Word::parse("a"), kBasis) == Word::parse("a^-1"));
    CHECK(conj_star(Word::parse("b"), kBasis) == Word::parse("a b^-1 a^-1"));
    CHECK(conj_star(Word::parse("g"), kBasis) == Word::parse("a b g^-1 b^-1 a^-1"));
}
