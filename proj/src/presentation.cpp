#include "sextic/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sextic {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (!valid_generator_name(g))
            throw std::invalid_argument("presentation: bad generator name '" + g + "'");
        if (!seen.insert(g).second)
            throw std::invalid_argument("presentation: duplicate generator '" + g + "'");
    }
    normalize();
}

void Presentation::normalize() {
    std::vector<Word> kept;
    std::set<Word> canon_seen;
    for (const auto& r : relators_) {
        for (const auto& l : r.letters())
            if (!has_generator(l.gen))
                throw std::domain_error("presentation: relator uses unknown generator '" + l.gen + "'");
        Word cr = r.cyclically_reduced();
        if (cr.empty()) continue;
        if (canon_seen.insert(cr.cyclic_canonical()).second) kept.push_back(std::move(cr));
    }
    relators_ = std::move(kept);
}

bool Presentation::has_generator(const std::string& g) const {
    return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

Presentation Presentation::with_relators(const std::vector<Word>& extra) const {
    std::vector<Word> rels = relators_;
    rels.insert(rels.end(), extra.begin(), extra.end());
    return Presentation(generators_, std::move(rels));
}

Presentation Presentation::double_cover(const std::string& d) const {
    if (!has_generator(d))
        throw std::domain_error("double_cover: '" + d + "' is not a generator");

    std::vector<std::string> gens;
    for (const auto& g : generators_)
        if (g != d) {
            gens.push_back(g);
            gens.push_back(g + "b");
        }

    // Schreier rewriting with transversal {1, d}, d^2 = 1: letters of d only
    // flip the coset, any other letter x emits x (coset 1) or x-bar (coset d).
    auto rewrite = [&](const Word& r, int coset) {
        std::vector<Letter> out;
        for (const auto& l : r.letters()) {
            if (l.gen == d) {
                coset ^= 1;
            } else {
                out.push_back({coset ? l.gen + "b" : l.gen, l.sign});
            }
        }
        return Word::reduce(std::move(out));
    };

    std::vector<Word> rels;
    for (const auto& r : relators_) {
        rels.push_back(rewrite(r, 0));
        rels.push_back(rewrite(r, 1));
    }
    return Presentation(std::move(gens), std::move(rels));
}

Presentation Presentation::eliminate_generator(const std::string& g, const Word& defining) const {
    if (!has_generator(g))
        throw std::domain_error("eliminate_generator: '" + g + "' is not a generator");
    for (const auto& l : defining.letters())
        if (l.gen == g)
            throw std::domain_error("eliminate_generator: defining word mentions '" + g + "'");

    const Word definition = Word::generator(g) * defining.inverse();
    const Word canon = definition.cyclic_canonical();
    bool present = std::any_of(relators_.begin(), relators_.end(),
                               [&](const Word& r) { return r.cyclic_canonical() == canon; });

    std::map<std::string, Word> assignment;
    for (const auto& x : generators_)
        assignment[x] = x == g ? defining : Word::generator(x);

    std::vector<std::string> gens;
    for (const auto& x : generators_)
        if (x != g) gens.push_back(x);

    std::vector<Word> rels;
    if (!present) rels.push_back(definition.substitute(assignment));  // asserted definition
    for (const auto& r : relators_) rels.push_back(r.substitute(assignment));
    return Presentation(std::move(gens), std::move(rels));
}

std::string Presentation::serialize() const {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : generators_) os << ' ' << g;
    os << '\n';
    for (const auto& r : relators_) os << r.str() << '\n';
    return os.str();
}

Presentation Presentation::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> gens;
    std::vector<Word> rels;
    bool have_gens = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "gens:") {
            if (have_gens) throw std::invalid_argument("presentation file: repeated gens: line");
            std::string g;
            while (ls >> g) gens.push_back(g);
            have_gens = true;
            continue;
        }
        if (!have_gens) throw std::invalid_argument("presentation file: relator before gens: line");
        auto eq = line.find('=');
        if (eq != std::string::npos) {
            Word lhs = Word::parse(line.substr(0, eq));
            Word rhs = Word::parse(line.substr(eq + 1));
            rels.push_back(equation(lhs, rhs));
        } else {
            rels.push_back(Word::parse(line));
        }
    }
    if (!have_gens) throw std::invalid_argument("presentation file: missing gens: line");
    return Presentation(std::move(gens), std::move(rels));
}

Presentation tietze_reduce(const Presentation& p, std::size_t max_len) {
    Presentation cur = p;
    for (bool progress = true; progress;) {
        progress = false;
        std::vector<Word> rels = cur.relators();
        std::sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) {
            return a.letters().size() < b.letters().size();
        });
        for (const Word& r : rels) {
            const auto& ls = r.letters();
            if (ls.empty() || ls.size() > max_len) continue;
            for (std::size_t i = 0; i < ls.size(); ++i) {
                int count = 0;
                for (const auto& l : ls) count += l.gen == ls[i].gen;
                if (count != 1) continue;
                // r = u x^s v  =>  x = (v u)^(-s)
                Word u, v;
                for (std::size_t j = 0; j < i; ++j) u = u * Word::generator(ls[j].gen, ls[j].sign);
                for (std::size_t j = i + 1; j < ls.size(); ++j)
                    v = v * Word::generator(ls[j].gen, ls[j].sign);
                Word w = v * u;
                cur = cur.eliminate_generator(ls[i].gen, ls[i].sign > 0 ? w.inverse() : w);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    return cur;
}

}  // namespace sextic
