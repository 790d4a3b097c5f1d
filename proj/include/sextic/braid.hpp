#ifndef SEXTIC_BRAID_HPP
#define SEXTIC_BRAID_HPP

#include <string>
#include <vector>

#include "sextic/word.hpp"

namespace sextic {

// Word in the Artin generators s1..s(n-1) of the braid group B_n.
// No normalization: braids are compared through their action on a free basis.
class Braid {
public:
    struct Letter {
        int index;  // 1-based Artin generator index
        int sign;   // +1 or -1
    };

    explicit Braid(int strands) : strands_(strands) {
        if (strands < 2) throw std::invalid_argument("braid: need at least 2 strands");
    }
    Braid(int strands, std::vector<Letter> letters);

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }

    Braid operator*(const Braid& rhs) const;
    Braid inverse() const;
    Braid& append(int index, int exponent);

    // Full twist Delta^2 = (s1 s2 ... s(n-1))^n.
    static Braid full_twist(int strands);

    // Braid text syntax: tokens `s1`, `s2^-1`, `s1^-4`, `FULLTWIST`.
    static Braid parse(int strands, const std::string& text);
    std::string str() const;

private:
    int strands_;
    std::vector<Letter> letters_;
};

// Right Hurwitz action, braid letters composed left to right:
//   s_i: eta_i -> eta_i eta_{i+1} eta_i^-1,  eta_{i+1} -> eta_i.
// `basis` lists the generator names of the free group, one per strand.
Word act(const Braid& b, const Word& w, const std::vector<std::string>& basis);

// Freely reduced relators act(b, eta_j) * eta_j^-1 for each basis generator,
// empty ones dropped.
std::vector<Word> relations_of(const Braid& b, const std::vector<std::string>& basis);

// The conjugation automorphism induced by the real structure:
//   eta_1 -> eta_1^-1, eta_k -> (eta_1..eta_{k-1}) eta_k^-1 (eta_1..eta_{k-1})^-1.
// Defined on the free group over `basis` (the paper's case is |basis| = 4).
Word conj_star(const Word& w, const std::vector<std::string>& basis);

}  // namespace sextic

#endif
