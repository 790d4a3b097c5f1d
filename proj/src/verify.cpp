#include <set>
#include <sstream>

#include "sextic/invariants.hpp"
#include "sextic/registry.hpp"

namespace sextic::registry {

namespace {

using invariants::abelianization;
using invariants::battery_group;
using invariants::CosetStatus;
using invariants::epi_exists;
using invariants::hom_spectrum;
using invariants::rb3_verify;
using invariants::todd_coxeter;
using invariants::Z2Z3Word;

std::set<Word> canon_set(const std::vector<Word>& ws) {
    std::set<Word> s;
    for (const auto& w : ws) s.insert(w.cyclic_canonical());
    return s;
}

CheckRecord rec_of(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok ? "PASS" : "FAIL", std::move(detail)};
}

std::map<std::string, Z2Z3Word> rb3_assignment(const std::map<std::string, int>& m) {
    std::map<std::string, Z2Z3Word> asg;
    for (const auto& [g, i] : m)
        asg[g] = i == 1 ? Z2Z3Word::sigma1() : Z2Z3Word::sigma2();
    return asg;
}

// Order of the torsion part; 0 flags infinite groups.
mpz_class ab_order(const invariants::AbelianInvariants& ab) {
    if (ab.rank != 0) return 0;
    mpz_class o = 1;
    for (const auto& t : ab.torsion) o *= t;
    return o;
}

// The quotient is certified abelian either by a complete coset enumeration of
// the right order, or (infinite case) by every pairwise generator commutator
// appearing among the relators of the Tietze-reduced presentation.
CheckRecord check_abelian_quotient(const std::string& name, const Presentation& q,
                                   const std::string& expected_ab, long limit) {
    auto ab = abelianization(q);
    if (ab.str() != expected_ab)
        return rec_of(name, false, "abelianization " + ab.str() + ", expected " + expected_ab);
    mpz_class order = ab_order(ab);
    if (order != 0) {
        auto r = todd_coxeter(tietze_reduce(q), {}, limit);
        if (r.status == CosetStatus::OVERFLOW_)
            return {name, "INCONCLUSIVE", "coset enumeration overflow at limit"};
        bool ok = mpz_class(r.index) == order;
        return rec_of(name, ok,
                      "order " + std::to_string(r.index) + ", abelianization " + ab.str());
    }
    Presentation red = tietze_reduce(q);
    auto canon = canon_set(red.relators());
    const auto& gens = red.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Word c = Word::generator(gens[i]) * Word::generator(gens[j]) *
                     Word::generator(gens[i]).inverse() * Word::generator(gens[j]).inverse();
            if (!canon.count(c.cyclic_canonical()))
                return rec_of(name, false,
                              "infinite abelianization but commutator [" + gens[i] + "," +
                                  gens[j] + "] not visibly trivial");
        }
    return rec_of(name, true, "abelian with abelianization " + ab.str());
}

// Finite-quotient fingerprint of the two-generator dihedral-like model
// <x, y | (xy)^3 = (yx)^3, (xyx)^2>; perturbations tagged D4P must match it.
const Presentation& d4_pencil_model() {
    static Presentation model({"x", "y"},
                              {Presentation::equation(Word::parse("x y x y x y"),
                                                      Word::parse("y x y x y x")),
                               Word::parse("x y x x y x")});
    return model;
}

}  // namespace

bool all_pass(const std::vector<CheckRecord>& checks) {
    for (const auto& c : checks)
        if (c.status == "FAIL") return false;
    return true;
}

std::vector<CheckRecord> verify_case(const CaseRecord& rec, long coset_limit) {
    std::vector<CheckRecord> out;
    if (rec.tag == ExpectedTag::METADATA) {
        out.push_back({"metadata-only", "INCONCLUSIVE",
                       "record carries lineage only; no usable presentation"});
        return out;
    }

    // 1. the stated pi1 must replicate mechanically from pibar
    {
        Presentation derived = derive_pi1(rec);
        std::set<std::string> dg(derived.generators().begin(), derived.generators().end());
        std::set<std::string> pg(rec.pi1.generators().begin(), rec.pi1.generators().end());
        auto ds = canon_set(derived.relators());
        auto es = canon_set(expected_cover_relators(rec));
        std::ostringstream detail;
        if (dg != pg) detail << "generator sets differ; ";
        if (ds != es) {
            detail << "derived-only relators:";
            for (const auto& w : ds)
                if (!es.count(w)) detail << " " << w.str();
            detail << "; expected-only:";
            for (const auto& w : es)
                if (!ds.count(w)) detail << " " << w.str();
        }
        out.push_back(rec_of("cover-replication", dg == pg && ds == es,
                             detail.str().empty()
                                 ? std::to_string(ds.size()) + " relators match"
                                 : detail.str()));
    }

    // 2. abelianization
    {
        auto ab = abelianization(rec.pi1);
        out.push_back(rec_of("abelianization", ab.str() == rec.expected_ab,
                             "got " + ab.str() + ", expected " + rec.expected_ab));
    }

    // 3. the case-level certificate
    switch (rec.tag) {
        case ExpectedTag::RB3:
            out.push_back(rec_of("rb3-epimorphism", rb3_verify(rec.pi1, rb3_assignment(rec.rb3_map)),
                                 "reduced braid group image via Z2*Z3 normal forms"));
            break;
        case ExpectedTag::MINIMAL: {
            // the central element of the minimal model is the generator d of
            // pi1 (rec.distinguished names the covered pibar generator)
            const std::string center = "d";
            auto r = todd_coxeter(rec.pi1, {Word::generator(center)}, coset_limit);
            if (r.status == CosetStatus::OVERFLOW_)
                out.push_back({"central-index", "INCONCLUSIVE", "coset overflow"});
            else
                out.push_back(rec_of("central-index", r.index == 12,
                                     "[G:<" + center + ">] = " +
                                         std::to_string(r.index) + ", expected 12"));
            Presentation quo = rec.pi1.with_relators({Word::generator(center)});
            auto rq = todd_coxeter(quo, {}, coset_limit);
            bool oq = rq.status == CosetStatus::COMPLETE && rq.index == 12;
            auto abq = abelianization(quo);
            out.push_back(rec_of("central-quotient",
                                 oq && abq.str() == "Z/4" &&
                                     epi_exists(rec.pi1, battery_group("S3")),
                                 "|G/<<" + center + ">>| = " +
                                     std::to_string(rq.index) + ", ab " + abq.str() +
                                     " (dicyclic of order 12)"));
            break;
        }
        case ExpectedTag::NONABELIAN:
            out.push_back(rec_of("s3-epimorphism", epi_exists(rec.pi1, battery_group("S3")),
                                 "surjection onto S3 witnesses a non-abelian group"));
            break;
        default:
            break;
    }

    // 4. perturbations
    for (const auto& p : rec.perturbations) {
        Presentation q = apply_perturbation(rec, p);
        std::string name = "perturbation " + p.rule_id + " -> " + p.result;
        switch (p.expected) {
            case ExpectedTag::ABELIAN:
                out.push_back(check_abelian_quotient(name, q, p.abelianized, coset_limit));
                break;
            case ExpectedTag::RB3: {
                bool ok = rb3_verify(q, rb3_assignment(p.rb3_map));
                auto ab = abelianization(q);
                out.push_back(rec_of(name, ok && ab.str() == "Z/6",
                                     "rb3 " + std::string(ok ? "ok" : "fails") + ", ab " +
                                         ab.str()));
                break;
            }
            case ExpectedTag::D4P: {
                auto sq = hom_spectrum(q);
                auto sd = hom_spectrum(d4_pencil_model());
                auto ab = abelianization(q);
                std::ostringstream detail;
                detail << "ab " << ab.str() << "; spectrum";
                for (const auto& [n, c] : sq) detail << " " << n << ":" << c;
                out.push_back(rec_of(name, sq == sd && ab.str() == "Z + Z/2", detail.str()));
                break;
            }
            default:
                out.push_back({name, "INCONCLUSIVE", "no decidable certificate recorded"});
                break;
        }
    }
    return out;
}

}  // namespace sextic::registry
