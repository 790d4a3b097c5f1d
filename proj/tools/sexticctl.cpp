// Batch driver for the sextic verification toolkit: registry checks, group
// invariants, presentation surgery, and exact curve geometry.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sextic/curvegeom.hpp"
#include "sextic/invariants.hpp"
#include "sextic/registry.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sextic;

struct Options {
    std::string format = "text";
    unsigned seed = 0;
    long coset_limit = 1000000;
    std::string battery;  // comma separated subset, empty = all
    bool no_timestamp = false;
};

struct Report {
    std::string target;
    std::vector<registry::CheckRecord> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok ? "PASS" : "FAIL", std::move(detail)});
    }
    void add_rec(registry::CheckRecord r) { checks.push_back(std::move(r)); }
    bool failed() const { return !registry::all_pass(checks); }

    void emit(const Options& opt) const {
        if (opt.format == "json") {
            ordered_json j;
            j["schema"] = "1";
            j["target"] = target;
            ordered_json cs = ordered_json::array();
            for (const auto& c : checks)
                cs.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
            j["checks"] = cs;
            j["exit"] = failed() ? 1 : 0;
            if (!opt.no_timestamp) {
                auto now = std::chrono::system_clock::now().time_since_epoch();
                j["timestamp"] =
                    std::chrono::duration_cast<std::chrono::seconds>(now).count();
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& c : checks) {
                std::cout << c.status << "  " << c.name;
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
            }
        }
    }
};

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--presentation", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return Presentation::parse(ss.str());
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// ------------------------------------------------------------------ cases

int run_cases_list(const Options& opt) {
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = "1";
        ordered_json cs = ordered_json::array();
        for (const auto& c : registry::all_cases())
            cs.push_back({{"id", c.id},
                          {"singularities", c.singularities},
                          {"tag", registry::tag_name(c.tag)},
                          {"perturbations", c.perturbations.size()}});
        j["cases"] = cs;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : registry::all_cases())
            std::cout << c.id << "  [" << registry::tag_name(c.tag) << "]  " << c.singularities
                      << "  (" << c.perturbations.size() << " perturbations)\n";
    }
    return 0;
}

int run_cases_verify(const std::string& id, const Options& opt) {
    Report rep;
    rep.target = id;
    if (id == "all") {
        for (const auto& c : registry::all_cases())
            for (auto r : registry::verify_case(c, opt.coset_limit)) {
                r.name = c.id + ": " + r.name;
                rep.add_rec(std::move(r));
            }
    } else {
        rep.checks = registry::verify_case(registry::get_case(id), opt.coset_limit);
    }
    rep.emit(opt);
    return rep.failed() ? 1 : 0;
}

int run_cases_export(const std::string& out_path) {
    ordered_json j = registry::export_registry();
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- geometry

int run_geometry_identity(const std::string& id, const Options& opt) {
    Report rep;
    rep.target = "identity " + id;
    auto names = id == "all" ? curvegeom::identity_names() : std::vector<std::string>{id};
    for (const auto& n : names) rep.add("identity " + n, curvegeom::verify_identity(n, opt.seed));
    rep.emit(opt);
    return rep.failed() ? 1 : 0;
}

curvegeom::FieldElem random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-24, 24), den(1, 12);
    return curvegeom::FieldElem(mpq_class(num(rng), den(rng)));
}

// Draw admissible random parameters for one family; rejection-sample the
// printed exclusions.
std::vector<curvegeom::FieldElem> sample_params(const std::string& family, std::mt19937& rng) {
    using curvegeom::FieldElem;
    auto theta = FieldElem::theta(curvegeom::NumberField::cbrt_m4());
    for (int attempt = 0; attempt < 1000; ++attempt) {
        try {
            std::vector<FieldElem> params;
            if (family == "tangent" || family == "b2-tangent")
                params = {random_rational(rng), random_rational(rng)};
            else if (family == "inflection" || family == "b2-inflection" ||
                     family == "b2-bitangent")
                params = {random_rational(rng)};
            else if (family == "quadruple")
                params = {theta / FieldElem(2)};
            else if (family == "double-tangent")
                params = {random_rational(rng),
                          theta / FieldElem(2) - random_rational(rng)};
            else if (family == "b2-conic-tangent")
                params = {random_rational(rng), random_rational(rng)};
            else
                throw CLI::ValidationError("family", "unknown family " + family);
            if (family == "double-tangent") {
                // enforce the compatibility constraint 2(t1+t2)^3 = -1
                params[1] = theta / FieldElem(2) - params[0];
            }
            curvegeom::verify_family(family, params);  // probes the exclusions
            return params;
        } catch (const std::invalid_argument&) {
            continue;  // excluded parameter; redraw
        }
    }
    throw std::runtime_error("could not sample admissible parameters for " + family);
}

int run_geometry_family(const std::string& family, const std::string& params_text,
                        const std::string& field_text, int samples, const Options& opt) {
    Report rep;
    rep.target = "family " + family;
    auto describe = [](const curvegeom::FamilyReport& r) {
        std::ostringstream os;
        os << "section " << r.section.str() << "; multiplicities";
        for (const auto& p : r.points) os << " " << p.found << "@x=" << p.x0.str();
        os << "; residual degree " << r.residual_degree;
        if (!r.detail.empty()) os << "; " << r.detail;
        return os.str();
    };
    if (!params_text.empty()) {
        auto field = curvegeom::parse_field(field_text);
        std::vector<curvegeom::FieldElem> params;
        for (const auto& p : split_list(params_text))
            params.push_back(curvegeom::parse_element(p, field));
        auto r = curvegeom::verify_family(family, params);
        rep.add(family + " (" + params_text + ")", r.pass, describe(r));
    } else {
        std::mt19937 rng(opt.seed);
        for (int i = 0; i < samples; ++i) {
            auto params = sample_params(family, rng);
            std::string ptext;
            for (const auto& p : params) ptext += (ptext.empty() ? "" : ",") + p.str();
            auto r = curvegeom::verify_family(family, params);
            rep.add(family + " sample " + std::to_string(i) + " (" + ptext + ")", r.pass,
                    describe(r));
        }
    }
    rep.emit(opt);
    return rep.failed() ? 1 : 0;
}

// -------------------------------------------------------------- invariants

int run_inv_abelianize(const std::string& path, const Options& opt) {
    auto p = load_presentation(path);
    auto ab = invariants::abelianization(p);
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = "1";
        j["abelianization"] = ab.str();
        ordered_json t = ordered_json::array();
        for (const auto& d : ab.torsion) t.push_back(d.get_str());
        j["torsion"] = t;
        j["rank"] = ab.rank;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ab.str() << "\n";
    }
    return 0;
}

int run_inv_homcount(const std::string& path, const Options& opt) {
    auto p = load_presentation(path);
    auto wanted = split_list(opt.battery);
    ordered_json j;
    j["schema"] = "1";
    ordered_json counts;
    for (const auto& g : invariants::battery()) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), g.name()) == wanted.end())
            continue;
        long h = invariants::hom_count(p, g);
        long e = invariants::epi_count(p, g);
        if (opt.format == "json") {
            counts[g.name()] = {{"hom", h}, {"epi", e}};
        } else {
            std::cout << g.name() << "  hom " << h << "  epi " << e << "\n";
        }
    }
    if (opt.format == "json") {
        j["counts"] = counts;
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_inv_coset(const std::string& path, const std::string& subgroup, bool reduce,
                  const Options& opt) {
    auto p = load_presentation(path);
    if (reduce) p = tietze_reduce(p);
    std::vector<Word> sub;
    for (const auto& w : split_list(subgroup)) sub.push_back(Word::parse(w));
    auto r = invariants::todd_coxeter(p, sub, opt.coset_limit);
    bool complete = r.status == invariants::CosetStatus::COMPLETE;
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = "1";
        j["status"] = complete ? "COMPLETE" : "OVERFLOW";
        if (complete) j["index"] = r.index;
        j["cosets_defined"] = r.cosets_defined;
        std::cout << j.dump(2) << "\n";
    } else if (complete) {
        std::cout << "index " << r.index << " (" << r.cosets_defined << " cosets defined)\n";
    } else {
        std::cout << "OVERFLOW after " << r.cosets_defined << " cosets\n";
    }
    return 0;  // overflow is inconclusive, not a failure
}

int run_inv_rb3(const std::string& path, const std::string& map_text, const Options& opt) {
    auto p = load_presentation(path);
    std::map<std::string, invariants::Z2Z3Word> asg;
    for (const auto& item : split_list(map_text)) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--map", "expected gen=1 or gen=2 entries");
        std::string gen = item.substr(0, eq);
        int which = std::stoi(item.substr(eq + 1));
        asg[gen] = which == 1 ? invariants::Z2Z3Word::sigma1() : invariants::Z2Z3Word::sigma2();
    }
    bool ok = invariants::rb3_verify(p, asg);
    Report rep;
    rep.target = path;
    rep.add("rb3-epimorphism", ok, "generators mapped to the two standard braids");
    rep.emit(opt);
    return ok ? 0 : 1;
}

// ----------------------------------------------------------- presentations

int run_present(const std::string& what, const std::string& path, const std::string& gen,
                const std::string& relators, std::size_t max_len) {
    auto p = load_presentation(path);
    if (what == "double-cover") {
        if (gen.empty()) throw CLI::ValidationError("--gen", "double-cover needs --gen");
        std::cout << p.double_cover(gen).serialize();
    } else if (what == "quotient") {
        std::vector<Word> extra;
        for (const auto& w : split_list(relators)) extra.push_back(Word::parse(w));
        std::cout << p.with_relators(extra).serialize();
    } else if (what == "normalize") {
        std::cout << tietze_reduce(p, max_len).serialize();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sextic fundamental-group and trigonal-curve verification toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--coset-limit", opt.coset_limit, "coset enumeration table limit");
    app.add_option("--battery", opt.battery, "comma-separated finite-group subset");
    app.add_flag("--no-timestamp", opt.no_timestamp, "omit the timestamp from JSON reports");

    auto* cases = app.add_subcommand("cases", "case registry");
    cases->require_subcommand(1);
    cases->add_subcommand("list", "list registered cases");
    std::string case_id = "all";
    auto* cverify = cases->add_subcommand("verify", "verify one case or all");
    cverify->add_option("id", case_id, "case id or 'all'");
    std::string export_path;
    auto* cexport = cases->add_subcommand("export", "dump the registry as JSON");
    cexport->add_option("--out", export_path, "output file (stdout if omitted)");

    auto* geometry = app.add_subcommand("geometry", "exact curve geometry");
    geometry->require_subcommand(1);
    std::string identity_id = "all";
    auto* gidentity = geometry->add_subcommand("identity", "check a named polynomial identity");
    gidentity->add_option("id", identity_id, "identity name or 'all'");
    std::string family_id, family_params, family_field = "x";
    int family_samples = 5;
    auto* gfamily = geometry->add_subcommand("family", "check a special-section family");
    gfamily->add_option("id", family_id, "family name")->required();
    gfamily->add_option("--params", family_params, "comma-separated exact parameters");
    gfamily->add_option("--field", family_field, "x for Q, or monic coefficient list [c0,...,1]");
    gfamily->add_option("--samples", family_samples, "random samples when --params is absent");

    auto* inv = app.add_subcommand("invariants", "decidable group invariants");
    inv->require_subcommand(1);
    std::string pres_path, subgroup_words, rb3_map;
    bool coset_reduce = false;
    auto* iab = inv->add_subcommand("abelianize", "abelianization of a presentation");
    iab->add_option("--presentation", pres_path, "presentation file")->required();
    auto* ihom = inv->add_subcommand("homcount", "homomorphism counts over the battery");
    ihom->add_option("--presentation", pres_path, "presentation file")->required();
    auto* icoset = inv->add_subcommand("coset", "coset enumeration");
    icoset->add_option("--presentation", pres_path, "presentation file")->required();
    icoset->add_option("--subgroup", subgroup_words, "comma-separated subgroup generator words");
    icoset->add_flag("--reduce", coset_reduce, "Tietze-reduce before enumerating");
    auto* irb3 = inv->add_subcommand("rb3", "reduced-braid-group epimorphism certificate");
    irb3->add_option("--presentation", pres_path, "presentation file")->required();
    irb3->add_option("--map", rb3_map, "gen=1,gen=2,... generator images")->required();

    auto* present = app.add_subcommand("present", "presentation surgery");
    present->require_subcommand(1);
    std::string cover_gen, quotient_relators;
    std::size_t reduce_len = 4;
    auto* pcover = present->add_subcommand("double-cover", "index-2 cover");
    pcover->add_option("--presentation", pres_path, "presentation file")->required();
    pcover->add_option("--gen", cover_gen, "distinguished generator")->required();
    auto* pquot = present->add_subcommand("quotient", "add relators");
    pquot->add_option("--presentation", pres_path, "presentation file")->required();
    pquot->add_option("--relator", quotient_relators, "comma-separated relator words");
    auto* pnorm = present->add_subcommand("normalize", "normalize and Tietze-reduce");
    pnorm->add_option("--presentation", pres_path, "presentation file")->required();
    pnorm->add_option("--max-len", reduce_len, "relator length bound for elimination");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cases->parsed()) {
            if (cases->get_subcommand("list")->parsed()) return run_cases_list(opt);
            if (cverify->parsed()) return run_cases_verify(case_id, opt);
            if (cexport->parsed()) return run_cases_export(export_path);
        }
        if (geometry->parsed()) {
            if (gidentity->parsed()) return run_geometry_identity(identity_id, opt);
            if (gfamily->parsed())
                return run_geometry_family(family_id, family_params, family_field,
                                           family_samples, opt);
        }
        if (inv->parsed()) {
            if (iab->parsed()) return run_inv_abelianize(pres_path, opt);
            if (ihom->parsed()) return run_inv_homcount(pres_path, opt);
            if (icoset->parsed()) return run_inv_coset(pres_path, subgroup_words, coset_reduce, opt);
            if (irb3->parsed()) return run_inv_rb3(pres_path, rb3_map, opt);
        }
        if (present->parsed()) {
            if (pcover->parsed()) return run_present("double-cover", pres_path, cover_gen, "", 0);
            if (pquot->parsed())
                return run_present("quotient", pres_path, "", quotient_relators, 0);
            if (pnorm->parsed()) return run_present("normalize", pres_path, "", "", reduce_len);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
