// Acceptance suite: one verdict line per criterion, exit 0 iff all pass.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sextic/braid.hpp"
#include "sextic/curvegeom.hpp"
#include "sextic/invariants.hpp"
#include "sextic/presentation.hpp"
#include "sextic/registry.hpp"
#include "sextic/word.hpp"

using namespace sextic;
namespace cg = sextic::curvegeom;
namespace inv = sextic::invariants;
namespace reg = sextic::registry;

namespace {

int failures = 0;

void verdict(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

cg::FieldElem random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    return cg::FieldElem(mpq_class(num(rng), den(rng)));
}

// The hom-count spectrum of <u,v | u^2, v^3>, the free product Z2 * Z3.
const std::map<std::string, long> kRb3Spectrum = {
    {"Z6", 6}, {"S3", 12}, {"D8", 6}, {"D10", 6}, {"D12", 24}, {"A4", 36}, {"S4", 90}};

std::map<std::string, inv::Z2Z3Word> rb3_assignment(const std::map<std::string, int>& m) {
    std::map<std::string, inv::Z2Z3Word> out;
    for (const auto& [gen, which] : m)
        out.emplace(gen, which == 1 ? inv::Z2Z3Word::sigma1() : inv::Z2Z3Word::sigma2());
    return out;
}

// ----------------------------------------------------------------- criterion 1

void criterion1() {
    bool ok = true;
    std::string why;
    for (const auto& id : cg::identity_names())
        if (!cg::verify_identity(id, 11)) { ok = false; why = "identity " + id; }

    auto Q = cg::NumberField::rationals();
    {
        // our discriminant normalization is Res_y(f, f_y)/lc, the negative of
        // the classical cubic discriminant: disc_y f1 = x^9 (27 x^3 - 4)
        auto d = cg::discriminant_y(cg::curve_b1(Q));
        std::vector<cg::FieldElem> c(13, cg::FieldElem(0));
        c[12] = cg::FieldElem(27);
        c[9] = cg::FieldElem(-4);
        if (!(d == cg::UnivariatePoly(std::move(c)))) { ok = false; why = "disc f1"; }
    }
    {
        cg::UnivariatePoly l = cg::line_l(Q);
        cg::UnivariatePoly lx = l * l - cg::UnivariatePoly::x(Q);
        if (lx.degree() != 4 ||
            cg::multiplicity_at(lx, cg::FieldElem(mpq_class(1, 4))) != 3 ||
            cg::multiplicity_at(lx, cg::FieldElem(mpq_class(9, 4))) != 1) {
            ok = false;
            why = "l^2 - x factorization";
        }
    }
    verdict(1, "exact geometry goldens (torus identities, discriminants, line contact)",
            ok, why);
}

// ----------------------------------------------------------------- criterion 2

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    auto need = [&](const cg::FamilyReport& r, const std::string& label) {
        if (!r.pass) { ok = false; why = label; }
        return r;
    };
    using cg::FieldElem;
    auto theta = FieldElem::theta(cg::NumberField::cbrt_m4());

    // pinned members with the asserted contact profiles
    auto infl = need(cg::verify_family("inflection", {FieldElem(mpq_class(1, 2))}),
                     "inflection t=1/2");
    if (infl.points.empty() || infl.points[0].found < 3 ||
        !(infl.points[0].x0 == FieldElem(mpq_class(4, 9)))) {
        ok = false;
        why = "inflection profile at x=4/9";
    }
    auto quad = need(cg::verify_family("quadruple", {theta / FieldElem(2)}), "quadruple");
    if (quad.points.empty() || quad.points[0].found < 4 ||
        !(quad.points[0].x0 == theta * FieldElem(4) / FieldElem(15))) {
        ok = false;
        why = "quadruple contact at x=4*theta/15";
    }
    need(cg::verify_family("double-tangent",
                           {FieldElem(1), theta / FieldElem(2) - FieldElem(1)}),
         "double-tangent (1, theta/2 - 1)");
    need(cg::verify_family("tangent", {FieldElem(1), FieldElem(0)}), "tangent (1,0)");
    need(cg::verify_family("b2-inflection", {FieldElem(mpq_class(-1, 6))}),
         "b2-inflection t=-1/6");
    need(cg::verify_family("b2-tangent", {FieldElem(2), FieldElem(mpq_class(1, 3))}),
         "b2-tangent");
    need(cg::verify_family("b2-conic-tangent", {FieldElem(1), FieldElem(2)}),
         "b2-conic-tangent");
    need(cg::verify_family("b2-bitangent", {FieldElem(1)}), "b2-bitangent");

    // 20 seeded random members per sampled family
    std::mt19937 rng(20260826);
    auto sample = [&](const std::string& family, int nparams) {
        int done = 0, guard = 0;
        while (done < 20 && ok && ++guard < 2000) {
            std::vector<FieldElem> params;
            for (int i = 0; i < nparams; ++i) params.push_back(random_rational(rng));
            if (family == "double-tangent") params[1] = theta / FieldElem(2) - params[0];
            cg::FamilyReport r;
            try {
                r = cg::verify_family(family, params);
            } catch (const std::invalid_argument&) {
                continue;  // excluded parameter; redraw
            }
            ++done;
            if (!r.pass) { ok = false; why = family + " random sample"; }
        }
        if (done < 20 && ok) { ok = false; why = family + " sampling starved"; }
    };
    for (const auto& f : {"inflection", "b2-inflection", "b2-bitangent"}) sample(f, 1);
    for (const auto& f : {"tangent", "b2-tangent", "b2-conic-tangent", "double-tangent"})
        sample(f, 2);

    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (secs >= 60) { ok = false; why = "runtime " + std::to_string(secs) + "s"; }
    verdict(2, "all 8 section families: pinned profiles plus seeded random members", ok,
            why);
}

// ----------------------------------------------------------------- criterion 3

void criterion3() {
    bool ok = true;
    std::string why;
    const std::vector<std::string> basis = {"d", "a", "b", "g"};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3), sgn(0, 1), len(1, 12);
    auto random_word = [&] {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i)
            w = w * Word::generator(basis[pick(rng)], sgn(rng) ? 1 : -1);
        return w;
    };
    for (int i = 0; i < 100 && ok; ++i) {
        Word w = random_word();
        if (!(conj_star(conj_star(w, basis), basis) == w)) {
            ok = false;
            why = "conj_star not an involution";
        }
    }
    // the full twist acts as conjugation by the boundary rho = d a b g
    Braid delta2 = Braid::full_twist(4);
    Word rho;
    for (const auto& g : basis) rho = rho * Word::generator(g);
    for (int i = 0; i < 50 && ok; ++i) {
        Word w = random_word();
        if (!(act(delta2, w, basis) == rho * w * rho.inverse())) {
            ok = false;
            why = "full twist is not boundary conjugation";
        }
    }
    // the monodromy relation about Q+ from the recorded braids of the
    // quadruple-point configuration
    const auto& rec = reg::get_case("2a8+a3");
    Braid m = Braid::parse(4, rec.braids.at("m"));
    Braid m_plus = Braid::parse(4, rec.braids.at("m_plus"));
    Braid n_plus = m * m_plus.inverse();
    Word relator = act(n_plus, Word::generator("d"), basis) *
                   Word::generator("d", -1);
    // the source text prints the sixth letter uninverted; the computed braid
    // action (and every invariant) gives the corrected word below
    Word expected = Word::parse("d a g^-1 b g a^-1 d a g^-1 b^-1 g a^-1 d^-1 d^-1");
    if (!(relator.cyclic_canonical() == expected.cyclic_canonical())) {
        ok = false;
        why = "Q+ monodromy relation mismatch: got " + relator.str();
    }
    verdict(3, "braid layer: conj_star involution, full-twist conjugation, Q+ relation",
            ok, why);
}

// ----------------------------------------------------------------- criterion 4

void criterion4() {
    bool ok = true;
    std::string why;
    const auto& rec = reg::get_case("a17+a2");
    std::set<Word> got, want;
    try {
        Presentation derived = reg::derive_pi1(rec);
        for (const auto& w : derived.relators()) got.insert(w.cyclic_canonical());
        for (const auto& w : reg::expected_cover_relators(rec))
            want.insert(w.cyclic_canonical());
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    if (ok && got != want) { ok = false; why = "relator sets differ"; }

    // single-relator check in isolation: (a d)^3 = (d a)^3 lifts to the
    // two-sided triangle relation a ab a = ab a ab on the index-2 subgroup
    Presentation hex({"a", "d"},
                     {Presentation::equation(Word::parse("a d a d a d"),
                                             Word::parse("d a d a d a"))});
    Presentation cover = hex.double_cover("d");
    Word target = Presentation::equation(Word::parse("a ab a"), Word::parse("ab a ab"));
    bool found = false;
    for (const auto& w : cover.relators())
        if (w.cyclic_canonical() == target.cyclic_canonical()) found = true;
    if (!found) { ok = false; why = "isolated hexagonal relator did not lift"; }
    verdict(4, "double cover of a17+a2 reproduces the printed presentation", ok, why);
}

// ----------------------------------------------------------------- criterion 5

void criterion5() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    int checked = 0;
    auto certify = [&](const Presentation& p, const std::map<std::string, int>& map,
                       const std::string& label) {
        if (!ok) return;
        if (inv::abelianization(p).str() != "Z/6") { ok = false; why = label + ": ab"; }
        else if (!inv::rb3_verify(p, rb3_assignment(map))) {
            ok = false;
            why = label + ": rb3_verify";
        } else if (!inv::epi_exists(p, inv::battery_group("S3"))) {
            ok = false;
            why = label + ": no S3 epi";
        } else if (inv::hom_spectrum(tietze_reduce(p)) != kRb3Spectrum) {
            ok = false;
            why = label + ": spectrum";
        } else {
            ++checked;
        }
    };
    for (const auto& rec : reg::all_cases()) {
        if (rec.tag == reg::ExpectedTag::RB3)
            certify(rec.pi1, rec.rb3_map, rec.id);
        for (const auto& p : rec.perturbations)
            if (p.expected == reg::ExpectedTag::RB3)
                certify(reg::apply_perturbation(rec, p), p.rb3_map,
                        rec.id + "/" + p.result);
    }
    if (checked < 2) { ok = false; why = "too few RB3 targets"; }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (secs >= 300) { ok = false; why = "runtime " + std::to_string(secs) + "s"; }
    std::ostringstream d;
    d << checked << " groups certified Z2*Z3";
    verdict(5, "reduced-braid-group certificates (ab, explicit epi, hom spectrum)", ok,
            ok ? d.str() : why);
}

// ----------------------------------------------------------------- criterion 6

void criterion6() {
    bool ok = true;
    std::string why;
    int checked = 0;
    for (const auto& rec : reg::all_cases()) {
        for (const auto& p : rec.perturbations) {
            if (p.expected != reg::ExpectedTag::ABELIAN) continue;
            if (p.abelianized != "Z/6") continue;  // the one split-curve result is Z + Z/2
            if (!ok) break;
            Presentation q = tietze_reduce(reg::apply_perturbation(rec, p));
            auto res = inv::todd_coxeter(q);
            if (res.status != inv::CosetStatus::COMPLETE || res.index != 6) {
                ok = false;
                why = rec.id + "/" + p.result;
            } else {
                ++checked;
            }
        }
    }
    if (checked < 10) { ok = false; why = "too few abelian targets"; }
    std::ostringstream d;
    d << checked << " perturbed groups have order 6";
    verdict(6, "every abelian-claim perturbation enumerates to index 6", ok,
            ok ? d.str() : why);
}

// ----------------------------------------------------------------- criterion 7

void criterion7() {
    bool ok = true;
    std::string why;
    const reg::CaseRecord* minimal = nullptr;
    for (const auto& rec : reg::all_cases())
        if (rec.tag == reg::ExpectedTag::MINIMAL) minimal = &rec;
    if (!minimal) {
        verdict(7, "central-extension model", false, "no MINIMAL case");
        return;
    }
    if (inv::abelianization(minimal->pi1).str() != "Z + Z/2") {
        ok = false;
        why = "abelianization";
    }
    // quotient by the central generator d
    auto rels = minimal->pi1.relators();
    rels.push_back(Word::generator("d"));
    Presentation q(minimal->pi1.generators(), rels);
    auto res = inv::todd_coxeter(tietze_reduce(q));
    if (ok && (res.status != inv::CosetStatus::COMPLETE || res.index != 12)) {
        ok = false;
        why = "quotient order";
    }
    // the order-12 image: nonabelian (S3 epi) with abelianization Z/4 -- this
    // pins the dicyclic group Dic3 = Z3 : Z4 among the groups of order 12
    if (ok && inv::abelianization(q).str() != "Z/4") { ok = false; why = "quotient ab"; }
    if (ok && !inv::epi_exists(q, inv::battery_group("S3"))) {
        ok = false;
        why = "quotient has no S3 epi";
    }
    verdict(7,
            "central extension: ab Z + Z/2, order-12 dicyclic quotient by the center",
            ok, why);
}

// ----------------------------------------------------------------- criterion 8

void criterion8() {
    bool ok = true;
    std::string why;
    Presentation p1({"g", "d"},
                    {Presentation::equation(Word::parse("g d g d"), Word::parse("d g d g")),
                     Word::parse("g d g g d g")});
    Presentation p2({"u", "v"},
                    {Word::parse("v v"),
                     Word::parse("v u u v^-1 u^-1 u^-1")});  // [v, u^2]
    if (inv::hom_spectrum(p1) != inv::hom_spectrum(p2)) { ok = false; why = "spectra"; }
    for (const auto& dn : {"S3", "D8", "D10", "D12"})
        if (ok && !inv::epi_exists(p1, inv::battery_group(dn))) {
            ok = false;
            why = std::string("no epi onto ") + dn;
        }
    verdict(8, "order-8 relator model matches <u,v | v^2, [v,u^2]> and covers D2n", ok,
            why);
}

// ----------------------------------------------------------------- criterion 9

std::vector<mpz_class> determinantal_divisors(const std::vector<std::vector<mpz_class>>& m) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    size_t rmax = std::min(rows, cols);
    std::vector<mpz_class> factors;
    mpz_class prev = 1;
    for (size_t k = 1; k <= rmax; ++k) {
        mpz_class g = 0;
        std::vector<size_t> ri(k), ci(k);
        // iterate over all k-subsets of rows and columns
        std::function<void(size_t, size_t)> rowsel = [&](size_t pos, size_t start) {
            if (pos == k) {
                std::function<void(size_t, size_t)> colsel = [&](size_t cp, size_t cs) {
                    if (cp == k) {
                        // Laplace-expand the k x k minor
                        std::function<mpz_class(std::vector<size_t>, std::vector<size_t>)>
                            det = [&](std::vector<size_t> rs, std::vector<size_t> cs2)
                            -> mpz_class {
                            if (rs.size() == 1) return m[rs[0]][cs2[0]];
                            mpz_class acc = 0;
                            for (size_t j = 0; j < cs2.size(); ++j) {
                                std::vector<size_t> rr(rs.begin() + 1, rs.end());
                                std::vector<size_t> cc;
                                for (size_t t = 0; t < cs2.size(); ++t)
                                    if (t != j) cc.push_back(cs2[t]);
                                mpz_class sub = det(rr, cc);
                                if (j % 2) sub = -sub;
                                acc += m[rs[0]][cs2[j]] * sub;
                            }
                            return acc;
                        };
                        mpz_class d = det(ri, ci);
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                        return;
                    }
                    for (size_t c = cs; c < cols; ++c) { ci[cp] = c; colsel(cp + 1, c + 1); }
                };
                colsel(0, 0);
                return;
            }
            for (size_t r = start; r < rows; ++r) { ri[pos] = r; rowsel(pos + 1, r + 1); }
        };
        rowsel(0, 0);
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

void criterion9() {
    bool ok = true;
    std::string why;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 30 && ok; ++trial) {
        size_t r = dim(rng), c = dim(rng);
        std::vector<std::vector<mpz_class>> m(r, std::vector<mpz_class>(c));
        for (auto& row : m)
            for (auto& e : row) e = entry(rng);
        auto diag = inv::smith_diagonal(m);
        std::vector<mpz_class> nonzero;
        for (const auto& d : diag)
            if (d != 0) nonzero.push_back(d);
        if (nonzero != determinantal_divisors(m)) {
            ok = false;
            why = "SNF vs determinantal-divisor oracle";
        }
    }
    // hom_count vs plain exhaustive tuple enumeration
    auto exhaustive = [](const Presentation& p, const inv::FiniteGroupTable& g) {
        long n = g.order(), total = 0;
        const auto& gens = p.generators();
        std::vector<int> img(gens.size(), 0);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == gens.size()) {
                std::map<std::string, int> at;
                for (size_t k = 0; k < gens.size(); ++k) at[gens[k]] = img[k];
                for (const auto& rel : p.relators()) {
                    int acc = 0;
                    for (const auto& l : rel.letters()) {
                        int e = at[l.gen];
                        acc = g.mul(acc, l.sign > 0 ? e : g.inverse(e));
                    }
                    if (acc != 0) return;
                }
                ++total;
                return;
            }
            for (int e = 0; e < n; ++e) { img[i] = e; rec(i + 1); }
        };
        rec(0);
        return total;
    };
    std::vector<Presentation> probes = {
        Presentation({"a"}, {Word::parse("a a a a")}),
        Presentation({"a", "b"}, {Word::parse("a a"), Word::parse("b b b")}),
        Presentation({"a", "b", "c"},
                     {Word::parse("a b c"), Word::parse("a a a"),
                      Presentation::equation(Word::parse("a b"), Word::parse("b a"))}),
        Presentation({"a", "b"},
                     {Presentation::equation(Word::parse("a b a"), Word::parse("b a b"))}),
    };
    for (const auto& p : probes)
        for (const auto& gname : {"S3", "A4"}) {
            const auto& g = inv::battery_group(gname);
            if (ok && inv::hom_count(p, g) != exhaustive(p, g)) {
                ok = false;
                why = std::string("hom_count vs enumeration into ") + gname;
            }
        }
    // coset enumeration vs table order on standard presentations
    std::vector<std::pair<std::string, Presentation>> standards;
    standards.emplace_back("Z6", Presentation({"a"}, {Word::parse("a a a a a a")}));
    for (auto [name, n] : {std::pair{"S3", 3}, {"D8", 4}, {"D10", 5}, {"D12", 6}}) {
        Word ab;
        for (int i = 0; i < n; ++i) ab = ab * Word::parse("a b");
        standards.emplace_back(
            name, Presentation({"a", "b"}, {Word::parse("a a"), Word::parse("b b"), ab}));
    }
    standards.emplace_back(
        "A4", Presentation({"a", "b"}, {Word::parse("a a"), Word::parse("b b b"),
                                        Word::parse("a b a b a b")}));
    standards.emplace_back(
        "S4", Presentation({"a", "b"}, {Word::parse("a a"), Word::parse("b b b"),
                                        Word::parse("a b a b a b a b")}));
    for (const auto& [name, p] : standards) {
        auto res = inv::todd_coxeter(p);
        if (ok && (res.status != inv::CosetStatus::COMPLETE ||
                   res.index != inv::battery_group(name).order())) {
            ok = false;
            why = "coset enumeration order for " + name;
        }
    }
    verdict(9, "independent oracles agree (SNF, hom search, coset enumeration)", ok, why);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criteria failing")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
