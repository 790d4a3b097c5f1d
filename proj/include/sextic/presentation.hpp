#ifndef SEXTIC_PRESENTATION_HPP
#define SEXTIC_PRESENTATION_HPP

#include <string>
#include <vector>

#include "sextic/word.hpp"

namespace sextic {

// Finitely presented group: ordered generator list plus relators (word = 1).
// Construction normalizes: relators freely and cyclically reduced, empties
// dropped, duplicates up to cyclic rotation and inversion removed.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }

    bool has_generator(const std::string& g) const;

    // Adds relators (or equations converted to w1 * w2^-1) and renormalizes.
    Presentation with_relators(const std::vector<Word>& extra) const;

    // Relator form of the equation lhs = rhs.
    static Word equation(const Word& lhs, const Word& rhs) { return lhs * rhs.inverse(); }

    // Index-2 cover: presentation of ker[p/<<d^2>> -> Z2, d -> 1, others -> 0],
    // by Reidemeister-Schreier with transversal {1, d}. Generators are x and
    // x + "b" (the bar) for each x != d.
    Presentation double_cover(const std::string& d) const;

    // Tietze elimination of g with g = defining. If no relator equivalent to
    // g * defining^-1 is present it is added first (asserted definition).
    Presentation eliminate_generator(const std::string& g, const Word& defining) const;

    // Line-oriented file format:
    // (see free function tietze_reduce below for automatic simplification)
    //   gens: a ab b
    //   <relator or equation per line, '=' allowed, '#' comments>
    std::string serialize() const;
    static Presentation parse(const std::string& text);

private:
    void normalize();

    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

// Repeated Tietze generator elimination: while some relator of length at most
// max_len contains a generator appearing in it exactly once, solve for that
// generator and substitute it away.  Produces an isomorphic presentation;
// handy before coset enumeration.
Presentation tietze_reduce(const Presentation& p, std::size_t max_len = 4);

}  // namespace sextic

#endif
