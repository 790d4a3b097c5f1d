#include "sextic/registry.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sextic::registry {

namespace {

Word W(const std::string& s) { return Word::parse(s); }

Word EQ(const std::string& lhs, const std::string& rhs) {
    return Presentation::equation(W(lhs), W(rhs));
}

std::vector<PerturbationRule> make_rules() {
    auto rule = [](const std::string& id, const std::string& shape) {
        PerturbationRule r;
        r.id = id;
        r.shape = shape;
        if (shape == "equal-chain") {
            // The last three relators are products of the first three; they
            // are listed so coset enumeration sees the equalities directly.
            r.slots = 4;
            r.templates = {EQ("s1", "s2"), EQ("s2", "s3"), EQ("s3", "s4"),
                           EQ("s1", "s3"), EQ("s2", "s4"), EQ("s1", "s4")};
        } else if (shape == "pair") {
            r.slots = 4;
            r.templates = {EQ("s1", "s2"), EQ("s3", "s4")};
        } else if (shape == "commute") {
            r.slots = 2;
            r.templates = {commutator(W("s1"), W("s2"))};
        } else if (shape == "braid") {
            r.slots = 2;
            r.templates = {EQ("s1 s2 s1", "s2 s1 s2")};
        } else if (shape == "commute-all") {
            r.slots = 4;
            const char* s[4] = {"s1", "s2", "s3", "s4"};
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    r.templates.push_back(commutator(W(s[i]), W(s[j])));
        } else if (shape == "cusp-triple") {
            // Third relation of the local quartic model about a perturbed
            // E7 point: s3 s1 s3 = s2 s3 s1.
            r.slots = 3;
            r.templates = {EQ("s3 s1 s3", "s2 s3 s1")};
        } else {
            throw std::logic_error("unknown rule shape: " + shape);
        }
        return r;
    };
    return {
        rule("A17->A16", "equal-chain"),
        rule("A17->A12+A4", "equal-chain"),
        rule("A17->A10+A6", "equal-chain"),
        rule("A17->A15+A1", "commute"),
        rule("A17->A13+A3", "commute"),
        rule("A17->A9+A7", "commute"),
        rule("A8->A7", "equal-chain"),
        rule("A8->A6+A1", "equal-chain"),
        rule("A8->A4+A3", "equal-chain"),
        rule("A11->A8+A2", "braid"),
        rule("A11->A10", "equal-chain"),
        rule("A7->A6", "equal-chain"),
        rule("A7->A4+A2", "equal-chain"),
        rule("A5->A4", "equal-chain"),
        rule("2A5->2A4", "pair"),
        rule("A3->A2", "equal-chain"),
        rule("D5->A4", "equal-chain"),
        rule("D4->A3", "equal-chain"),
        rule("D4->abelian", "commute-all"),
        rule("A1->0", "equal-chain"),
        rule("E7->A4+A2", "cusp-triple"),
    };
}

using Binding = std::map<std::string, Word>;

Binding bind2(const std::string& a, const std::string& b) {
    return {{"s1", W(a)}, {"s2", W(b)}};
}
Binding bind3(const std::string& a, const std::string& b, const std::string& c) {
    return {{"s1", W(a)}, {"s2", W(b)}, {"s3", W(c)}};
}
Binding bind4(const std::string& a, const std::string& b, const std::string& c,
              const std::string& d) {
    return {{"s1", W(a)}, {"s2", W(b)}, {"s3", W(c)}, {"s4", W(d)}};
}

// The reduced-braid-group images used throughout: value 1 = sigma_1, 2 = sigma_2.
const std::map<std::string, int> kRb3Sextic = {{"a", 1}, {"ab", 1}, {"b", 1},
                                               {"bb", 1}, {"g", 2}, {"gb", 2}};
const std::map<std::string, int> kRb3Split = {{"a", 1}, {"ab", 1}, {"b", 2},
                                              {"bb", 2}, {"g", 2}, {"gb", 2}};

Perturbation pert(std::string rule, std::string result, Binding bind, ExpectedTag tag,
                  std::map<std::string, int> rb3 = {}) {
    Perturbation p;
    p.rule_id = std::move(rule);
    p.result = std::move(result);
    p.binding = std::move(bind);
    p.expected = tag;
    p.rb3_map = std::move(rb3);
    return p;
}

CaseRecord case_a17_a2() {
    CaseRecord c;
    c.id = "a17+a2";
    c.singularities = "(A17) + A2";
    c.curve = "B1";
    c.section = "b = -8, c = 16/3 (inflection family, epsilon = 1)";
    c.ordering = {"a", "d", "b", "g"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"a", "d", "b", "g"},
        {
            EQ("g^-1 b^-1 g b g", "a"),               // vertical tangent through P+
            EQ("d b g b g b^-1 g^-1 b^-1 d^-1", "a"), // vertical tangent through P-
            EQ("a d a d a d", "d a d a d a"),         // inflection tangency
            EQ("d^-1 a^-1 d^-1 a d a d", "b"),        // vertical tangent through P1
            commutator(W("d^-1 a^-1 d a d"), W("b g b^-1")),  // transversal point
            W("a d b g a d b g"),                     // relation at infinity
        });
    c.pi1 = Presentation(
        {"a", "ab", "b", "bb", "g", "gb"},
        {
            EQ("g b g", "b g a"),
            EQ("gb bb gb", "bb gb ab"),
            EQ("b g b g", "ab b g b"),
            EQ("bb gb bb gb", "a bb gb bb"),
            EQ("a ab a", "ab a ab"),
            EQ("ab^-1 a ab", "b"),
            EQ("a^-1 ab a", "bb"),
            EQ("a bb gb bb^-1 a^-1", "ab b g b^-1 ab^-1"),
            W("a bb gb ab b g"),
        });
    c.derivation = {{CoverStep::COVER, "d", {}}};
    c.expected_ab = "Z/6";
    c.tag = ExpectedTag::RB3;
    c.rb3_map = kRb3Sextic;
    c.braids = {{"m_plus", "s3^3 s2 s1 s2^-1 s3^-3"}};
    // Extremal non-torus perturbations of the A17 point.  The local pair is
    // (a, g); merging branches forces equality, an even local index forces
    // commutation only.
    c.perturbations = {
        pert("A17->A16", "A16 + A2", bind4("a", "g", "a", "g"), ExpectedTag::ABELIAN),
        pert("A17->A12+A4", "A12 + A4 + A2", bind4("a", "g", "a", "g"),
             ExpectedTag::ABELIAN),
        pert("A17->A10+A6", "A10 + A6 + A2", bind4("a", "g", "a", "g"),
             ExpectedTag::ABELIAN),
        pert("A17->A15+A1", "A15 + A2 + A1", bind2("a", "g"), ExpectedTag::ABELIAN),
        pert("A17->A13+A3", "A13 + A3 + A2", bind2("a", "g"), ExpectedTag::ABELIAN),
        pert("A17->A9+A7", "A9 + A7 + A2", bind2("a", "g"), ExpectedTag::ABELIAN),
    };
    c.notes = {"the braid relation of the cusp fiber is a consequence and is ignored"};
    return c;
}

CaseRecord case_2a8_a3() {
    CaseRecord c;
    c.id = "2a8+a3";
    c.singularities = "(2A8) + A3";
    c.curve = "B1";
    c.section = "b = -56*delta/27, c = 64*delta^2/81 over Q(theta), theta^3 = -4, "
                "delta = theta/2 (quadruple-point family)";
    c.ordering = {"d", "a", "b", "g"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"d", "a", "b", "g"},
        {
            EQ("g^-1 b^-1 g b g", "a^-1 d^-1 a d a"),  // tangent through P+
            EQ("b g b g b^-1 g^-1 b^-1", "d a d^-1"),  // tangent through P-
            EQ("a", "b"),                              // tangent through P0
            EQ("a d a d a d a d", "d a d a d a d a"),  // quadruple point
            commutator(W("a^-1 d a"), W("g^-1 b g")),  // monodromy about Q+
            commutator(W("b^-1 d b"), W("g b g^-1")),  // monodromy about Q-
            W("d a b g d a b g"),                      // relation at infinity
        });
    c.pi1 = Presentation(
        {"b", "bb", "g", "gb"},
        {
            EQ("g b g", "b g bb"),
            EQ("gb bb gb", "bb gb b"),
            EQ("g b g", "bb g b"),
            EQ("gb bb gb", "b gb bb"),
            EQ("b bb b bb", "bb b bb b"),
            EQ("g bb gb", "b g b"),
            EQ("gb b g", "bb gb bb"),
            EQ("gb bb g", "b g b"),
            EQ("g b gb", "bb gb bb"),
            W("b g b bb gb bb"),
        });
    // The mechanical double cover yields the two transversal-point relators
    // in commutator form; in the presence of the first four relators they
    // are equivalent to the four rewritten ones.
    c.replaced = {
        EQ("g bb gb", "b g b"),
        EQ("gb b g", "bb gb bb"),
        EQ("gb bb g", "b g b"),
        EQ("g b gb", "bb gb bb"),
    };
    c.auxiliary = {
        W("gb^-1 bb gb g^-1 b^-1 g"),
        W("gb bb gb^-1 g b^-1 g^-1"),
    };
    c.derivation = {
        {CoverStep::ELIMINATE, "a", W("b")},
        {CoverStep::INTRODUCE, "d1", W("b^-1 d b")},
        {CoverStep::ELIMINATE, "d", W("b d1 b^-1")},
        {CoverStep::COVER, "d1", {}},
    };
    c.expected_ab = "Z/6";
    c.tag = ExpectedTag::RB3;
    c.rb3_map = {{"b", 1}, {"bb", 1}, {"g", 2}, {"gb", 2}};
    c.braids = {
        {"m", "s2^-1 s3^-1 s2 FULLTWIST s1^-4 s3^-4"},
        {"m_plus", "s3^3 s1^2 s2 s1^-2 s3^-3"},
    };
    c.perturbations = {
        pert("A8->A7", "A8 + A7 + A3", bind4("b", "g", "b", "g"), ExpectedTag::ABELIAN),
        pert("A8->A6+A1", "A8 + A6 + A3 + A1", bind4("b", "g", "b", "g"),
             ExpectedTag::ABELIAN),
        pert("A8->A4+A3", "A8 + A4 + 2A3", bind4("b", "g", "b", "g"),
             ExpectedTag::ABELIAN),
    };
    c.notes = {
        "the monodromy relation about Q+ is stored in its simplified commutator "
        "form; the raw form is act(n_plus, d) = d with n_plus = m * m_plus^-1",
        "the source text prints the raw Q+ relation with the sixth letter "
        "inverted; the braid computation and every group invariant confirm "
        "the form used here",
    };
    return c;
}

CaseRecord case_a11_3a2() {
    CaseRecord c;
    c.id = "a11+3a2";
    c.singularities = "(A11 + 2A2) + A2 + 2A1";
    c.curve = "B2";
    c.section = "(a, b, c) = (27, -9/2, -1/16)";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"a", "b", "d", "g"},
        {
            EQ("d a b a b a b", "b a b d a b a"),         // fiber through R5
            commutator(W("d"), W("a b")),                 // fiber through R5
            commutator(W("d^-1 b^-1 a^-1 b^-1 a b a b d"), W("g")),  // fiber through R1
            EQ("g d g d g d", "d g d g d g"),             // fiber through Q5
            EQ("d g d g d^-1 g^-1 d^-1", "b"),            // vertical tangent
            commutator(W("b^-1 a b"), W("d g d g^-1 d^-1")),  // fiber through Q1
            W("a b d g a b d g"),                         // relation at infinity
        });
    c.pi1 = Presentation(
        {"a", "ab", "b", "bb", "g", "gb"},
        {
            EQ("a b a b a b", "bb ab bb a b a"),
            EQ("ab bb ab bb ab bb", "b a b ab bb ab"),
            EQ("a b", "ab bb"),
            commutator(W("b^-1 a^-1 b^-1 a b a b"), W("gb")),
            commutator(W("bb^-1 ab^-1 bb^-1 ab bb ab bb"), W("g")),
            EQ("g gb g", "gb g gb"),
            EQ("gb g gb^-1", "b"),
            EQ("g gb g^-1", "bb"),
            EQ("g^-1 bb^-1 ab bb g", "gb^-1 b^-1 a b gb"),
            W("a b gb ab bb g"),
        });
    c.derivation = {{CoverStep::COVER, "d", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("A11->A8+A2", "(A8 + 3A2) + A2 + 2A1", bind2("a", "b"), ExpectedTag::RB3,
             kRb3Split),
        pert("A1->0", "(A11 + 2A2) + A2 + A1",
             bind4("gb", "ab bb ab bb^-1 ab^-1", "gb", "ab bb ab bb^-1 ab^-1"),
             ExpectedTag::RB3, kRb3Split),
        pert("A11->A10", "A10 + 3A2 + 2A1 / A6 + A4 + 3A2 + 2A1",
             bind4("a", "ab", "b", "bb"), ExpectedTag::ABELIAN),
    };
    return c;
}

CaseRecord case_2a5_2a2_d5() {
    CaseRecord c;
    c.id = "2a5+2a2+d5";
    c.singularities = "(2A5 + 2A2) + D5";
    c.curve = "B2'+L'";
    c.section = "(a, b, c) = (27, -9/2, -1/16); doubled along the line component";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "a";
    c.cover_source = "a11+3a2";
    c.pi1 = Presentation(
        {"b", "bb", "g", "gb", "d", "db"},
        {
            EQ("db b bb b", "d bb b bb"),
            EQ("db b", "b d"),
            EQ("d bb", "bb db"),
            EQ("b bb db gb db^-1 bb^-1 b^-1", "bb b d g d^-1 b^-1 bb^-1"),
            EQ("g d g d g d", "d g d g d g"),
            EQ("gb db gb db gb db", "db gb db gb db gb"),
            EQ("d g d g d^-1 g^-1 d^-1", "b"),
            EQ("db gb db gb db^-1 gb^-1 db^-1", "bb"),
            EQ("b d g d g^-1 d^-1 b^-1", "bb db gb db gb^-1 db^-1 bb^-1"),
            W("bb db gb b d g"),
        });
    c.replaced = {EQ("db b bb b", "d bb b bb")};
    c.auxiliary = {
        W("b^-1 bb^-1 b^-1 db^-1 bb b d bb"),
        W("b^-1 bb^-1 d^-1 b bb db b bb^-1"),
    };
    c.derivation = {{CoverStep::COVER, "a", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("D5->A4", "(2A5 + 2A2) + A4", bind4("b", "bb", "d", "db"),
             ExpectedTag::RB3,
             {{"b", 1}, {"bb", 1}, {"d", 1}, {"db", 1}, {"g", 2}, {"gb", 2}}),
        pert("A5->A4", "D5 + A5 + A4 + 2A2", bind4("d", "g", "d", "g"),
             ExpectedTag::ABELIAN),
    };
    c.notes = {"built from the same section as a11+3a2 with the curve and line "
               "roles traded: the branch generator a is the involution"};
    return c;
}

CaseRecord case_a11_2a2_d4() {
    CaseRecord c;
    c.id = "a11+2a2+d4";
    c.singularities = "(A11 + 2A2) + D4";
    c.curve = "B2";
    c.section = "(a, b, c) = (1/3, -11/6, 15/16)";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"a", "b", "d", "g"},
        {
            EQ("d a b a b a b", "b a b d a b a"),   // fiber through R5
            commutator(W("d"), W("a b")),           // fiber through R5
            EQ("b d g d g", "g b d g d"),           // fiber through R1
            commutator(W("b"), W("d g")),           // fiber through R1
            EQ("d^-1 b^-1 a^-1 b^-1 a b a b d", "g"),  // vertical tangent
            commutator(W("a"), W("g^-1 d g")),      // fiber through Q1
            W("a b d g a b d g"),                   // relation at infinity
        });
    c.pi1 = Presentation(
        {"a", "ab", "b", "bb", "g", "gb"},
        {
            EQ("a b a b a b", "bb ab bb a b a"),
            EQ("ab bb ab bb ab bb", "b a b ab bb ab"),
            EQ("a b", "ab bb"),
            EQ("b gb g", "g b gb"),
            EQ("bb g gb", "gb bb g"),
            EQ("b gb", "gb bb"),
            EQ("bb g", "g b"),
            EQ("b^-1 a^-1 b^-1 a b a b", "gb"),
            EQ("bb^-1 ab^-1 bb^-1 ab bb ab bb", "g"),
            EQ("a g^-1 gb", "g^-1 gb ab"),
            EQ("ab gb^-1 g", "gb^-1 g a"),
            W("a b gb ab bb g"),
        });
    c.derivation = {{CoverStep::COVER, "d", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("A11->A8+A2", "(A8 + 3A2) + D4", bind2("a", "b"), ExpectedTag::RB3,
             kRb3Split),
        pert("D4->abelian", "(A11 + 2A2) + 3A1 / + A3 / + 2A1",
             bind4("b", "bb", "g", "gb"), ExpectedTag::D4P),
        pert("D4->A3", "(A11 + 2A2) + A3", bind4("b", "g", "b", "g"),
             ExpectedTag::RB3, kRb3Split),
        pert("A11->A10", "D4 + A10 + 2A2 / D4 + A6 + A4 + 2A2",
             bind4("a", "ab", "b", "bb"), ExpectedTag::ABELIAN),
    };
    c.notes = {"the D4 -> A3 perturbation picks the subdiagram making b and g "
               "conjugate, hence equal, in the local group"};
    return c;
}

CaseRecord case_a11_e6() {
    CaseRecord c;
    c.id = "a11+e6";
    c.singularities = "(E6 + A11) + 2A1";
    c.curve = "B2";
    c.section = "y = 1/2";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "d";
    // Central-section presentation: the a11+2a2+d4 relations plus central d,
    // with g eliminated; the sextic group is the quotient by d.
    c.pibar = Presentation(
        {"a", "b", "d"},
        {
            EQ("a b a b a b", "b a b a b a"),
            commutator(W("a"), W("d")),
            commutator(W("b"), W("d")),
            W("a b a a b a d d"),
        });
    c.pi1 = Presentation(
        {"a", "b"},
        {
            EQ("a b a b a b", "b a b a b a"),
            W("a b a a b a"),
        });
    c.derivation = {{CoverStep::ELIMINATE, "d", Word()}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::D4P;
    c.perturbations = {
        pert("A1->0", "(E6 + A11) + A1", bind4("b", "a^-1 b^-1 a b a", "b", "a^-1 b^-1 a b a"),
             ExpectedTag::RB3, {{"a", 1}, {"b", 2}}),
        pert("A11->A8+A2", "(E6 + A8 + A2) + 2A1", bind2("a", "b"), ExpectedTag::RB3,
             {{"a", 1}, {"b", 2}}),
        pert("A11->A10", "E6 + A10 + 2A1 / E6 + A6 + A4 + 2A1",
             bind4("a", "b", "a", "b"), ExpectedTag::ABELIAN),
    };
    c.notes = {"the stored central presentation arises from the a11+2a2+d4 "
               "relations by adding commutators of d with a, b, g and "
               "eliminating g = (b a)^-1 a (b a)"};
    return c;
}

CaseRecord case_2a5_e6_a3() {
    CaseRecord c;
    c.id = "2a5+e6+a3";
    c.singularities = "(E6 + 2A5) + A3";
    c.curve = "B2";
    c.section = "y = -3/2";
    c.ordering = {"a", "b", "g", "d"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"a", "b", "g", "d"},
        {
            EQ("a b a b a b", "b a b a b a"),   // fiber through R5
            EQ("a b a b^-1 a^-1", "g"),         // vertical tangent
            commutator(W("d"), W("a b a^-1")),  // fiber through Q1
            commutator(W("g d"), W("b")),       // fiber through R1
            commutator(W("b g d"), W("g")),     // fiber through R1
            commutator(W("b g"), W("d")),       // fiber through R1
            W("a b g d a b g d"),               // relation at infinity
        });
    c.pi1 = Presentation(
        {"a", "ab", "b", "bb", "g", "gb"},
        {
            EQ("a b a b a b", "b a b a b a"),
            EQ("ab bb ab bb ab bb", "bb ab bb ab bb ab"),
            EQ("a b a b^-1 a^-1", "g"),
            EQ("ab bb ab bb^-1 ab^-1", "gb"),
            EQ("a b a^-1", "ab bb ab^-1"),
            EQ("g bb", "b g"),
            EQ("b g", "bb gb"),
            EQ("bb gb", "gb b"),
            W("a b g ab bb gb"),
        });
    c.auxiliary = {
        W("b^-1 g^-1 b g gb g^-1"),
        W("bb^-1 gb^-1 bb gb g gb^-1"),
    };
    c.derivation = {{CoverStep::COVER, "d", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("A5->A4", "E6 + A5 + A4 + A3", bind4("a", "b", "a", "b"),
             ExpectedTag::ABELIAN),
    };
    return c;
}

CaseRecord case_3a5_d4() {
    CaseRecord c;
    c.id = "3a5+d4";
    c.singularities = "(3A5) + D4";
    c.curve = "B2";
    c.section = "(a, b, c) = (0, -1/3, -3/4)";
    c.ordering = {"a", "b", "g", "d"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"a", "b", "g", "d"},
        {
            EQ("a b a b a b", "b a b a b a"),   // fiber through R5
            EQ("a b a b^-1 a^-1", "g"),         // vertical tangent
            commutator(W("d"), W("a b a^-1")),  // fiber through Q1
            commutator(W("b"), W("g d")),       // fiber through R1
            EQ("d b g d g", "b g d g d"),       // fiber through R1
            W("a b g d a b g d"),               // relation at infinity
        });
    c.pi1 = Presentation(
        {"a", "ab", "b", "bb", "g", "gb"},
        {
            EQ("a b a b a b", "b a b a b a"),
            EQ("ab bb ab bb ab bb", "bb ab bb ab bb ab"),
            EQ("a b a b^-1 a^-1", "g"),
            EQ("ab bb ab bb^-1 ab^-1", "gb"),
            EQ("a b a^-1", "ab bb ab^-1"),
            EQ("b g", "g bb"),
            EQ("bb gb", "gb b"),
            EQ("bb gb g", "b g gb"),
            W("a b g ab bb gb"),
        });
    c.derivation = {{CoverStep::COVER, "d", {}}};
    c.expected_ab = "Z^2 + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("2A5->2A4", "D4 + A5 + 2A4", bind4("a", "b", "ab", "bb"),
             ExpectedTag::ABELIAN),
    };
    c.notes = {"the curve splits into three components; two of the three A5 "
               "points (those over the triple tangency fiber) are perturbed "
               "at once to reach an irreducible sextic"};
    return c;
}

CaseRecord case_a11_a5_a3() {
    CaseRecord c;
    c.id = "a11+a5+a3";
    c.singularities = "(A11 + A5) + A3";
    c.curve = "B2";
    c.section = "(a, b, c) = (0, -1, 3/4)";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "d";
    c.pibar = Presentation(
        {"a", "b", "d", "g"},
        {
            commutator(W("b"), W("d g")),          // fiber through R1
            commutator(W("d"), W("g b")),          // fiber through R1
            commutator(W("g"), W("b d")),          // fiber through R1
            commutator(W("d"), W("a b")),          // fiber through R5
            EQ("d a b a b a b", "b a b d a b a"),  // fiber through R5
            EQ("d^-1 b^-1 a^-1 b^-1 a b a b d", "g"),  // vertical tangent
            W("a b d g a b d g"),                  // relation at infinity
        });
    c.pi1 = Presentation(
        {"a", "ab", "b", "bb", "g", "gb"},
        {
            EQ("bb g", "g b"),
            EQ("g b", "gb bb"),
            EQ("gb bb", "b gb"),
            EQ("a b", "ab bb"),
            EQ("a b a b a b", "bb ab bb a b a"),
            EQ("a b a b a b", "b a b ab bb ab"),
            EQ("a^-1 b^-1 a b a", "g"),
            EQ("ab^-1 bb^-1 ab bb ab", "gb"),
            W("g a b gb ab bb"),
        });
    c.replaced = {
        EQ("a b a b a b", "b a b ab bb ab"),
        EQ("a^-1 b^-1 a b a", "g"),
        EQ("ab^-1 bb^-1 ab bb ab", "gb"),
    };
    c.auxiliary = {
        W("a^-1 b^-1 a^-1 b a b gb b^-1"),
        W("a^-1 b^-1 ab bb ab bb ab bb ab^-1 bb^-1 ab^-1 b^-1"),
        W("ab^-1 bb^-1 ab^-1 bb ab bb g bb^-1"),
        W("b^-1 g^-1 b gb"),
        W("bb^-1 gb^-1 bb g"),
    };
    c.derivation = {{CoverStep::COVER, "d", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        [] {
            // The A5 point sits on the quartic component, so the perturbed
            // curve keeps its two components and the abelian quotient stays
            // Z + Z/2 rather than collapsing to Z/6.
            auto p = pert("A5->A4", "A11 + A4 + A3",
                          bind4("a", "g^-1 gb ab gb^-1 g", "g", "g^-1 gb g"),
                          ExpectedTag::ABELIAN);
            p.abelianized = "Z + Z/2";
            return p;
        }(),
        pert("A11->A10", "A10 + A5 + A3 / A6 + A5 + A4 + A3",
             bind4("a", "ab", "b", "bb"), ExpectedTag::ABELIAN),
    };
    return c;
}

CaseRecord case_2e7_d5() {
    CaseRecord c;
    c.id = "2e7+d5";
    c.singularities = "2E7 + D5";
    c.curve = "B2'+L'";
    c.section = "y = 1/2; doubled along the line component";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "b";
    c.pibar = Presentation(
        {"a", "b", "d"},
        {
            EQ("a b a b a b", "b a b a b a"),
            commutator(W("a"), W("d")),
            commutator(W("b"), W("d")),
            W("a b a a b a d d"),
        });
    c.pi1 = Presentation(
        {"a", "ab", "d"},
        {
            EQ("a ab a", "ab a ab"),
            commutator(W("a"), W("d")),
            commutator(W("ab"), W("d")),
            W("a a ab ab d d"),
        });
    c.replaced = {W("a a ab ab d d")};
    c.auxiliary = {W("a ab ab a d d"), W("a a ab d d ab")};
    c.derivation = {
        {CoverStep::COVER, "b", {}},
        {CoverStep::ELIMINATE, "db", W("d")},
    };
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::MINIMAL;
    c.perturbations = {
        pert("D5->A4", "2E7 + A4", bind4("a", "ab", "d", "a"), ExpectedTag::ABELIAN),
        pert("E7->A4+A2", "E7 + E6 + D5 / E7 + D5 + A6 / E7 + D5 + A4 + A2",
             bind3("d", "d", "a"), ExpectedTag::ABELIAN),
    };
    c.notes = {"every group of this configuration family maps onto this one; "
               "it is a central extension of the three-cuspidal-quartic group "
               "of order 12 by the subgroup generated by d"};
    return c;
}

CaseRecord case_2e7_a3_a2() {
    CaseRecord c;
    c.id = "2e7+a3+a2";
    c.singularities = "2E7 + A3 + A2";
    c.curve = "B2'+L'";
    c.section = "y = -3/2; doubled along the line component";
    c.ordering = {"a", "b", "g", "d"};
    c.distinguished = "b";
    c.cover_source = "2a5+e6+a3";
    c.pi1 = Presentation(
        {"a", "ab", "g", "gb", "d", "db"},
        {
            EQ("a ab a", "ab a ab"),
            EQ("a ab a^-1", "g"),
            EQ("ab a ab^-1", "gb"),
            EQ("a^-1 d a", "ab^-1 db ab"),
            EQ("d gb", "g d"),
            EQ("g d", "gb db"),
            EQ("gb db", "db g"),
            W("g d a gb db ab"),
        });
    c.replaced = {
        EQ("d gb", "g d"),
        EQ("gb db", "db g"),
    };
    c.auxiliary = {
        W("d^-1 g^-1 db g"),
        W("d^-1 g^-1 gb^-1 g d g"),
        W("d^-1 gb db gb^-1"),
        W("db^-1 gb^-1 g^-1 gb db gb"),
    };
    c.derivation = {{CoverStep::COVER, "b", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("A3->A2", "2E7 + 2A2", bind4("g", "gb", "d", "db"),
             ExpectedTag::ABELIAN),
        pert("E7->A4+A2",
             "E7 + E6 + A3 + A2 / E7 + A6 + A3 + A2 / E7 + A4 + A3 + 2A2",
             bind3("a", "d", "gb"), ExpectedTag::ABELIAN),
    };
    return c;
}

CaseRecord case_2e7_a2_3a1() {
    CaseRecord c;
    c.id = "2e7+a2+3a1";
    c.singularities = "2E7 + A2 + 3A1";
    c.curve = "B2'+L'";
    c.section = "y = 3/4; tangent to the doubled line and to the cusp branch";
    c.ordering = {"a", "d", "b", "g"};
    c.distinguished = "b";
    c.tag = ExpectedTag::METADATA;
    c.notes = {
        "no presentation is recorded for this configuration; only the "
        "symmetric perturbation E7 -> A6 of both E7 points is used, adding "
        "a = d = b together with [b, g] = 1, and the resulting group of the "
        "sextic with singularities 2A6 + A2 + 3A1 is abelian",
    };
    return c;
}

CaseRecord case_2d5_a7_a2() {
    CaseRecord c;
    c.id = "2d5+a7+a2";
    c.singularities = "2D5 + A7 + A2";
    c.curve = "B2'+L'";
    c.section = "(a, b, c) = (0, -1/3, -3/4); doubled along the line component";
    c.ordering = {"a", "b", "g", "d"};
    c.distinguished = "b";
    c.cover_source = "3a5+d4";
    c.pi1 = Presentation(
        {"a", "ab", "g", "gb", "d", "db"},
        {
            EQ("a ab a", "ab a ab"),
            EQ("a ab a^-1", "g"),
            EQ("ab a ab^-1", "gb"),
            EQ("a^-1 d a", "ab^-1 db ab"),
            EQ("g d", "gb db"),
            EQ("db g d g", "g d g d"),
            EQ("d gb db gb", "gb db gb db"),
            W("g d a gb db ab"),
        });
    c.derivation = {{CoverStep::COVER, "b", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("A7->A6", "2D5 + A6 + A2", bind4("g", "gb", "d", "db"),
             ExpectedTag::ABELIAN),
        pert("A7->A4+A2", "2D5 + A4 + 2A2", bind4("g", "gb", "d", "db"),
             ExpectedTag::ABELIAN),
        pert("D5->A4", "D5 + A7 + A4 + A2",
             bind4("a", "gb db gb db^-1 gb^-1", "gb db gb^-1", "a"),
             ExpectedTag::ABELIAN),
    };
    return c;
}

CaseRecord case_3d5_a3() {
    CaseRecord c;
    c.id = "3d5+a3";
    c.singularities = "3D5 + A3";
    c.curve = "B2'+L'";
    c.section = "(a, b, c) = (0, -1, 3/4); doubled along the line component";
    c.ordering = {"a", "b", "d", "g"};
    c.distinguished = "b";
    c.cover_source = "a11+a5+a3";
    c.pi1 = Presentation(
        {"a", "ab", "g", "gb", "d", "db"},
        {
            EQ("d g", "db gb"),
            EQ("db gb", "g db"),
            EQ("g db", "gb d"),
            EQ("d a", "a db"),
            EQ("db ab", "ab d"),
            EQ("d a ab a", "db ab a ab"),
            EQ("a^-1 ab a", "g"),
            EQ("ab^-1 a ab", "gb"),
            W("d g a db gb ab"),
        });
    c.replaced = {
        EQ("g db", "gb d"),
        EQ("d a ab a", "db ab a ab"),
        EQ("a^-1 ab a", "g"),
        EQ("ab^-1 a ab", "gb"),
    };
    c.auxiliary = {
        W("a^-1 ab d g d^-1 ab^-1"),
        W("a^-1 ab^-1 a db gb db^-1"),
        W("a^-1 ab^-1 a^-1 d^-1 ab d a ab"),
        W("a^-1 ab^-1 db^-1 a^-1 db ab a ab"),
        W("d^-1 g db g^-1"),
        W("d^-1 gb^-1 d g"),
        W("d^-1 gb^-1 db gb"),
    };
    c.derivation = {{CoverStep::COVER, "b", {}}};
    c.expected_ab = "Z + Z/2";
    c.tag = ExpectedTag::NONABELIAN;
    c.perturbations = {
        pert("A3->A2", "3D5 + A2", bind4("g", "gb", "d", "db"),
             ExpectedTag::ABELIAN),
        pert("D5->A4", "2D5 + A4 + A3", bind4("a", "ab", "d", "db"),
             ExpectedTag::ABELIAN),
    };
    return c;
}

std::vector<CaseRecord> make_cases() {
    return {
        case_a17_a2(),     case_2a8_a3(),     case_a11_3a2(),   case_2a5_2a2_d5(),
        case_a11_2a2_d4(), case_a11_e6(),     case_2a5_e6_a3(), case_3a5_d4(),
        case_a11_a5_a3(),  case_2e7_d5(),     case_2e7_a3_a2(), case_2e7_a2_3a1(),
        case_2d5_a7_a2(),  case_3d5_a3(),
    };
}

}  // namespace

std::string tag_name(ExpectedTag t) {
    switch (t) {
        case ExpectedTag::RB3: return "rb3";
        case ExpectedTag::ABELIAN: return "abelian";
        case ExpectedTag::D4P: return "d4-perturbed";
        case ExpectedTag::MINIMAL: return "minimal";
        case ExpectedTag::NONABELIAN: return "nonabelian";
        case ExpectedTag::METADATA: return "metadata";
    }
    throw std::logic_error("bad tag");
}

const std::vector<PerturbationRule>& rule_catalog() {
    static const std::vector<PerturbationRule> rules = make_rules();
    return rules;
}

const PerturbationRule& get_rule(const std::string& id) {
    for (const auto& r : rule_catalog())
        if (r.id == id) return r;
    throw std::out_of_range("unknown perturbation rule: " + id);
}

const std::vector<CaseRecord>& all_cases() {
    static const std::vector<CaseRecord> cases = make_cases();
    return cases;
}

const CaseRecord& get_case(const std::string& id) {
    for (const auto& c : all_cases())
        if (c.id == id) return c;
    std::ostringstream os;
    os << "unknown case: " << id << " (known:";
    for (const auto& c : all_cases()) os << ' ' << c.id;
    os << ')';
    throw std::out_of_range(os.str());
}

Presentation apply_perturbation(const CaseRecord& rec, const Perturbation& p) {
    if (rec.tag == ExpectedTag::METADATA)
        throw std::invalid_argument("case " + rec.id + " has no presentation");
    const PerturbationRule& rule = get_rule(p.rule_id);
    std::vector<Word> extra;
    for (const Word& t : rule.templates) extra.push_back(t.substitute(p.binding));
    return rec.pi1.with_relators(extra);
}

Presentation derive_pi1(const CaseRecord& rec) {
    if (rec.tag == ExpectedTag::METADATA)
        throw std::invalid_argument("case " + rec.id + " has no presentation");
    Presentation p =
        rec.cover_source.empty() ? rec.pibar : get_case(rec.cover_source).pibar;
    for (const CoverStep& step : rec.derivation) {
        switch (step.kind) {
            case CoverStep::ELIMINATE:
                p = p.eliminate_generator(step.gen, step.word);
                break;
            case CoverStep::INTRODUCE: {
                auto gens = p.generators();
                gens.push_back(step.gen);
                auto rels = p.relators();
                rels.push_back(
                    Presentation::equation(Word::generator(step.gen), step.word));
                p = Presentation(gens, rels);
                break;
            }
            case CoverStep::COVER: {
                Word sq = Word::generator(step.gen) * Word::generator(step.gen);
                p = p.with_relators({sq}).double_cover(step.gen);
                break;
            }
        }
    }
    return p;
}

std::vector<Word> expected_cover_relators(const CaseRecord& rec) {
    std::set<std::string> drop;
    for (const Word& w : rec.replaced) drop.insert(w.cyclic_canonical().str());
    std::vector<Word> out;
    for (const Word& w : rec.pi1.relators())
        if (!drop.count(w.cyclic_canonical().str())) out.push_back(w);
    for (const Word& w : rec.auxiliary) out.push_back(w);
    return out;
}

namespace {

nlohmann::ordered_json words_json(const std::vector<Word>& ws) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Word& w : ws) a.push_back(w.str());
    return a;
}

nlohmann::ordered_json presentation_json(const Presentation& p) {
    nlohmann::ordered_json j;
    j["generators"] = p.generators();
    j["relators"] = words_json(p.relators());
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const CaseRecord& rec) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["singularities"] = rec.singularities;
    j["curve"] = rec.curve;
    j["section"] = rec.section;
    j["ordering"] = rec.ordering;
    j["distinguished"] = rec.distinguished;
    if (!rec.cover_source.empty()) j["cover_source"] = rec.cover_source;
    if (rec.tag != ExpectedTag::METADATA) {
        if (rec.cover_source.empty()) j["trigonal_group"] = presentation_json(rec.pibar);
        j["group"] = presentation_json(rec.pi1);
        if (!rec.replaced.empty()) j["replaced"] = words_json(rec.replaced);
        if (!rec.auxiliary.empty()) j["auxiliary"] = words_json(rec.auxiliary);
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const auto& s : rec.derivation) {
            nlohmann::ordered_json sj;
            sj["kind"] = s.kind == CoverStep::ELIMINATE ? "eliminate"
                       : s.kind == CoverStep::INTRODUCE ? "introduce"
                                                        : "cover";
            sj["generator"] = s.gen;
            if (s.kind != CoverStep::COVER) sj["word"] = s.word.str();
            steps.push_back(sj);
        }
        j["derivation"] = steps;
        j["abelianization"] = rec.expected_ab;
    }
    j["tag"] = tag_name(rec.tag);
    if (!rec.rb3_map.empty()) j["rb3_map"] = rec.rb3_map;
    if (!rec.braids.empty()) j["braids"] = rec.braids;
    nlohmann::ordered_json ps = nlohmann::ordered_json::array();
    for (const auto& p : rec.perturbations) {
        nlohmann::ordered_json pj;
        pj["rule"] = p.rule_id;
        pj["result"] = p.result;
        nlohmann::ordered_json bj;
        for (const auto& [slot, w] : p.binding) bj[slot] = w.str();
        pj["binding"] = bj;
        pj["expected"] = tag_name(p.expected);
        if (p.expected == ExpectedTag::ABELIAN) pj["abelianized"] = p.abelianized;
        if (!p.rb3_map.empty()) pj["rb3_map"] = p.rb3_map;
        ps.push_back(pj);
    }
    j["perturbations"] = ps;
    if (!rec.notes.empty()) j["notes"] = rec.notes;
    return j;
}

nlohmann::ordered_json export_registry() {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    nlohmann::ordered_json rules = nlohmann::ordered_json::array();
    for (const auto& r : rule_catalog()) {
        nlohmann::ordered_json rj;
        rj["id"] = r.id;
        rj["shape"] = r.shape;
        rj["slots"] = r.slots;
        rj["templates"] = words_json(r.templates);
        rules.push_back(rj);
    }
    j["rules"] = rules;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : all_cases()) cases.push_back(to_json(c));
    j["cases"] = cases;
    return j;
}

}  // namespace sextic::registry
