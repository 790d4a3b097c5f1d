#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sextic/presentation.hpp"

// Catalog of the verified curve/section configurations: for each one the
// braid-monodromy presentation of the group of the trigonal model, the
// printed presentation of the sextic group, the derivation connecting the
// two (double cover plus Tietze moves), and the perturbation data used to
// pass to irreducible sextics.
namespace sextic::registry {

enum class ExpectedTag {
    RB3,       // reduced braid group <u,v | u^2, v^3>
    ABELIAN,   // cyclic of order 6 (coset index 6 over the trivial subgroup)
    D4P,       // <a,b | (ab)^3 = (ba)^3, (aba)^2 = 1>
    MINIMAL,   // the rank-3 central extension, abelianization Z + Z2
    NONABELIAN,  // reducible configuration: nonabelian, abelianization Z + Z2
    METADATA   // no printed presentation; record kept for completeness
};

std::string tag_name(ExpectedTag t);

// A perturbation rule is a set of relator templates over slot generators
// s1..s4; a concrete perturbation binds slots to words in the case's
// generators and quotients the case group by the instantiated relators.
struct PerturbationRule {
    std::string id;
    std::string shape;  // equal-chain | pair | commute | braid | commute-all | cusp-triple
    int slots = 0;
    std::vector<Word> templates;
};

struct Perturbation {
    std::string rule_id;
    std::string result;  // resulting singularity configuration
    std::map<std::string, Word> binding;  // slot -> word in case generators
    ExpectedTag expected = ExpectedTag::ABELIAN;
    // For ABELIAN targets: the expected abelianization.  Almost always Z/6
    // (irreducible result), but a perturbation that keeps the curve split in
    // two components yields Z + Z/2.
    std::string abelianized = "Z/6";
    // For RB3 targets: generator -> 1 or 2 (image sigma_1 or sigma_2).
    std::map<std::string, int> rb3_map;
};

struct CoverStep {
    enum Kind { ELIMINATE, INTRODUCE, COVER };
    Kind kind;
    std::string gen;
    Word word;  // defining word (ELIMINATE/INTRODUCE); unused for COVER
};

struct CaseRecord {
    std::string id;
    std::string singularities;
    std::string curve;    // B1 | B2 | B2'+L'
    std::string section;  // exact coefficients (b, c) or (a, b, c)
    std::vector<std::string> ordering;  // generator basis eta_1..eta_4
    std::string distinguished;          // generator of the section component
    // Source of the upstairs presentation: empty = own `pibar`, otherwise the
    // id of the case whose pibar is reused (section/line role swap).
    std::string cover_source;
    Presentation pibar;  // may be empty for METADATA records
    Presentation pi1;    // printed downstairs presentation
    std::vector<CoverStep> derivation;  // pibar -> pi1, applied in order
    // Printed relators that the mechanical derivation yields only in an
    // equivalent rewritten form, and the forms it actually yields.  The
    // replication check matches (pi1 minus `replaced`) plus `auxiliary`.
    std::vector<Word> replaced;
    std::vector<Word> auxiliary;
    std::vector<Perturbation> perturbations;
    std::string expected_ab;  // abelianization of pi1, e.g. "Z/6", "Z + Z/2"
    ExpectedTag tag = ExpectedTag::METADATA;
    std::map<std::string, int> rb3_map;  // when tag == RB3
    std::map<std::string, std::string> braids;  // named braid words, if recorded
    std::vector<std::string> notes;
};

const std::vector<PerturbationRule>& rule_catalog();
const PerturbationRule& get_rule(const std::string& id);

const std::vector<CaseRecord>& all_cases();
const CaseRecord& get_case(const std::string& id);

// Instantiate the rule templates through the binding and quotient the case
// group by the result.
Presentation apply_perturbation(const CaseRecord& rec, const Perturbation& p);

// Re-run the recorded derivation from the (possibly borrowed) upstairs
// presentation. Throws if the record is metadata-only.
Presentation derive_pi1(const CaseRecord& rec);

// The relator set the derivation is expected to produce: the printed
// presentation with the auxiliary substitutions applied.
std::vector<Word> expected_cover_relators(const CaseRecord& rec);

// One verification step outcome; INCONCLUSIVE marks checks that could not be
// decided (coset enumeration overflow, metadata-only records) and never counts
// as a failure.
struct CheckRecord {
    std::string name;
    std::string status;  // PASS | FAIL | INCONCLUSIVE
    std::string detail;
};

// Full verification of one case: cover replication, abelianization, the
// case-level tag certificate, and every recorded perturbation.
std::vector<CheckRecord> verify_case(const CaseRecord& rec, long coset_limit = 1000000);

bool all_pass(const std::vector<CheckRecord>& checks);  // true iff no FAIL

nlohmann::ordered_json to_json(const CaseRecord& rec);
nlohmann::ordered_json export_registry();

}  // namespace sextic::registry
