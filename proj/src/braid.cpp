#include "sextic/braid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sextic {

Braid::Braid(int strands, std::vector<Letter> letters) : Braid(strands) {
    for (const auto& l : letters) append(l.index, l.sign);
}

Braid& Braid::append(int index, int exponent) {
    if (index < 1 || index >= strands_)
        throw std::domain_error("braid: generator index out of range: s" + std::to_string(index));
    int sign = exponent < 0 ? -1 : 1;
    for (int i = 0; i < exponent * sign; ++i) letters_.push_back({index, sign});
    return *this;
}

Braid Braid::operator*(const Braid& rhs) const {
    if (strands_ != rhs.strands_)
        throw std::domain_error("braid: strand count mismatch");
    Braid out = *this;
    out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return out;
}

Braid Braid::inverse() const {
    Braid out(strands_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back({it->index, -it->sign});
    return out;
}

Braid Braid::full_twist(int strands) {
    Braid b(strands);
    for (int rep = 0; rep < strands; ++rep)
        for (int i = 1; i < strands; ++i) b.append(i, 1);
    return b;
}

Braid Braid::parse(int strands, const std::string& text) {
    Braid b(strands);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "FULLTWIST") {
            b = b * full_twist(strands);
            continue;
        }
        if (tok.size() < 2 || tok[0] != 's')
            throw std::invalid_argument("braid syntax: bad token '" + tok + "'");
        int exp = 1;
        std::string idx = tok.substr(1);
        auto caret = idx.find('^');
        if (caret != std::string::npos) {
            exp = std::stoi(idx.substr(caret + 1));
            idx = idx.substr(0, caret);
            if (exp == 0) continue;
        }
        b.append(std::stoi(idx), exp);
    }
    return b;
}

std::string Braid::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << 's' << letters_[i].index;
        if (letters_[i].sign < 0) os << "^-1";
    }
    return os.str();
}

namespace {

// One elementary Hurwitz move applied to a word over the indexed basis.
Word apply_letter(const Word& w, const Braid::Letter& l,
                  const std::vector<std::string>& basis) {
    const std::string& gi = basis[l.index - 1];
    const std::string& gj = basis[l.index];
    std::vector<Letter> out;
    for (const auto& wl : w.letters()) {
        if (l.sign > 0 && wl.gen == gi) {
            // eta_i -> eta_i eta_{i+1} eta_i^-1
            if (wl.sign > 0) {
                out.push_back({gi, 1});
                out.push_back({gj, 1});
                out.push_back({gi, -1});
            } else {
                out.push_back({gi, 1});
                out.push_back({gj, -1});
                out.push_back({gi, -1});
            }
        } else if (l.sign > 0 && wl.gen == gj) {
            out.push_back({gi, wl.sign});
        } else if (l.sign < 0 && wl.gen == gi) {
            out.push_back({gj, wl.sign});
        } else if (l.sign < 0 && wl.gen == gj) {
            // eta_{i+1} -> eta_{i+1}^-1 eta_i eta_{i+1}
            if (wl.sign > 0) {
                out.push_back({gj, -1});
                out.push_back({gi, 1});
                out.push_back({gj, 1});
            } else {
                out.push_back({gj, -1});
                out.push_back({gi, -1});
                out.push_back({gj, 1});
            }
        } else {
            out.push_back(wl);
        }
    }
    return Word::reduce(std::move(out));
}

void check_basis(const Braid& b, const Word& w, const std::vector<std::string>& basis) {
    if (static_cast<int>(basis.size()) != b.strands())
        throw std::domain_error("act: basis size must equal strand count");
    for (const auto& l : w.letters())
        if (std::find(basis.begin(), basis.end(), l.gen) == basis.end())
            throw std::domain_error("act: generator '" + l.gen + "' outside basis");
}

}  // namespace

Word act(const Braid& b, const Word& w, const std::vector<std::string>& basis) {
    check_basis(b, w, basis);
    Word out = w;
    for (const auto& l : b.letters()) out = apply_letter(out, l, basis);
    return out;
}

std::vector<Word> relations_of(const Braid& b, const std::vector<std::string>& basis) {
    std::vector<Word> rels;
    for (const auto& g : basis) {
        Word eta = Word::generator(g);
        Word r = act(b, eta, basis) * eta.inverse();
        if (!r.empty()) rels.push_back(std::move(r));
    }
    return rels;
}

Word conj_star(const Word& w, const std::vector<std::string>& basis) {
    std::map<std::string, Word> assignment;
    Word prefix;
    for (const auto& g : basis) {
        assignment[g] = prefix * Word::generator(g, -1) * prefix.inverse();
        prefix = prefix * Word::generator(g);
    }
    return w.substitute(assignment);  // substitute reports out-of-basis generators
}

}  // namespace sextic
