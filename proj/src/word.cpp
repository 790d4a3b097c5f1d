#include "sextic/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sextic {

bool valid_generator_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Word Word::reduce(std::vector<Letter> raw) {
    Word w;
    for (auto& l : raw) {
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().sign == -l.sign) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(std::move(l));
        }
    }
    return w;
}

Word Word::generator(const std::string& name, int sign) {
    Word w;
    w.letters_.push_back({name, sign < 0 ? -1 : 1});
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back({it->gen, -it->sign});
    Word w;
    w.letters_ = std::move(inv);  // inverse of a reduced word is reduced
    return w;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce(std::move(cat));
}

Word Word::conjugate_sandwich(const Word& d) const { return d * *this * d; }

Word Word::cyclically_reduced() const {
    std::vector<Letter> ls = letters_;
    while (ls.size() >= 2 && ls.front().gen == ls.back().gen &&
           ls.front().sign == -ls.back().sign) {
        ls.erase(ls.begin());
        ls.pop_back();
    }
    Word w;
    w.letters_ = std::move(ls);
    return w;
}

Word Word::cyclic_canonical() const {
    Word base = cyclically_reduced();
    if (base.empty()) return base;
    auto best_rotation = [](const Word& w) {
        const auto& ls = w.letters();
        std::vector<Letter> best;
        for (std::size_t r = 0; r < ls.size(); ++r) {
            std::vector<Letter> rot(ls.begin() + r, ls.end());
            rot.insert(rot.end(), ls.begin(), ls.begin() + r);
            if (best.empty() || rot < best) best = std::move(rot);
        }
        Word out;
        out.letters_ = std::move(best);
        return out;
    };
    Word a = best_rotation(base);
    Word b = best_rotation(base.inverse());
    return a.letters() <= b.letters() ? a : b;
}

Word Word::substitute(const std::map<std::string, Word>& assignment) const {
    std::vector<Letter> out;
    for (const auto& l : letters_) {
        auto it = assignment.find(l.gen);
        if (it == assignment.end())
            throw std::domain_error("substitute: generator '" + l.gen + "' not in assignment");
        const Word img = l.sign > 0 ? it->second : it->second.inverse();
        out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    return reduce(std::move(out));
}

std::map<std::string, std::int64_t> Word::exponent_sums() const {
    std::map<std::string, std::int64_t> sums;
    for (const auto& l : letters_) sums[l.gen] += l.sign;
    return sums;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << letters_[i].gen;
        if (letters_[i].sign < 0) os << "^-1";
    }
    return os.str();
}

Word Word::parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Letter> raw;
    while (is >> tok) {
        if (tok == "1" && raw.empty() && !(is >> tok)) break;
        int sign = 1;
        auto caret = tok.find('^');
        std::string name = tok;
        if (caret != std::string::npos) {
            std::string exp = tok.substr(caret + 1);
            if (exp != "-1")
                throw std::invalid_argument("word syntax: only exponent ^-1 allowed, got '" + tok + "'");
            sign = -1;
            name = tok.substr(0, caret);
        }
        if (!valid_generator_name(name))
            throw std::invalid_argument("word syntax: bad generator name '" + name + "'");
        raw.push_back({std::move(name), sign});
    }
    return reduce(std::move(raw));
}

}  // namespace sextic
