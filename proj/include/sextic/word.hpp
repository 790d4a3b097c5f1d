#ifndef SEXTIC_WORD_HPP
#define SEXTIC_WORD_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic {

// A letter of a free-group word: generator name with exponent sign +/-1.
struct Letter {
    std::string gen;
    int sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

bool valid_generator_name(const std::string& name);

// Freely reduced word in a free group on named generators.
// The empty word is the identity.
class Word {
public:
    Word() = default;

    // Reduces the raw letter sequence; result is freely reduced.
    static Word reduce(std::vector<Letter> raw);

    static Word generator(const std::string& name, int sign = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;

    // Conjugate d * w * d (not d^-1 w d); matches the bar involution w -> dwd.
    Word conjugate_sandwich(const Word& d) const;

    // Cyclic reduction: strips matching first/last inverse pairs.
    Word cyclically_reduced() const;

    // Canonical representative of the cyclic class {rotations of w and of w^-1};
    // used to compare relators up to rotation and inversion.
    Word cyclic_canonical() const;

    // Replaces each letter by its assigned word (inverted for negative
    // letters) and reduces. Throws std::domain_error naming any unmapped
    // generator.
    Word substitute(const std::map<std::string, Word>& assignment) const;

    // Net exponent of each generator (abelianized image).
    std::map<std::string, std::int64_t> exponent_sums() const;

    std::string str() const;            // textual word syntax, "1" for identity
    static Word parse(const std::string& text);

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

inline Word pow(const Word& w, int n) {
    Word r;
    Word base = n < 0 ? w.inverse() : w;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
    return r;
}

inline Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

}  // namespace sextic

#endif
