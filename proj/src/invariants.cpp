#include "sextic/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace sextic::invariants {

// ---------------------------------------------------------------------------
// Smith normal form

std::string AbelianInvariants::str() const {
    if (rank == 0 && torsion.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<mpz_class> diag;
    std::size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // pivot: entry of least nonzero absolute value in the working block
        std::size_t pr = rows, pc = cols;
        mpz_class best;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = c; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || cmp(abs(m[i][j]), best) < 0)) {
                    pr = i;
                    pc = j;
                    best = abs(m[i][j]);
                }
        if (pr == rows) break;  // block is zero
        std::swap(m[r], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = r + 1; i < rows; ++i)
                if (m[i][c] != 0) {
                    mpz_class q = m[i][c] / m[r][c];  // truncated is fine, iterate
                    for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                    if (m[i][c] != 0) {
                        std::swap(m[r], m[i]);
                        dirty = true;
                    }
                }
            for (std::size_t j = c + 1; j < cols; ++j)
                if (m[r][j] != 0) {
                    mpz_class q = m[r][j] / m[r][c];
                    for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
                    if (m[r][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
                        dirty = true;
                    }
                }
        }
        // pivot must divide every remaining entry; fix by row addition
        for (std::size_t i = r + 1; i < rows && !dirty; ++i)
            for (std::size_t j = c + 1; j < cols; ++j)
                if (m[i][j] % m[r][c] != 0) {
                    for (std::size_t k = c; k < cols; ++k) m[r][k] += m[i][k];
                    dirty = true;
                    break;
                }
        if (dirty) continue;  // re-run elimination at the same pivot position

        diag.push_back(abs(m[r][c]));
        ++r;
        ++c;
    }
    std::erase_if(diag, [](const mpz_class& d) { return d == 0; });
    return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
    const auto& gens = p.generators();
    std::vector<std::vector<mpz_class>> m;
    for (const auto& rel : p.relators()) {
        auto sums = rel.exponent_sums();
        std::vector<mpz_class> row(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (auto it = sums.find(gens[j]); it != sums.end()) row[j] = it->second;
        m.push_back(std::move(row));
    }
    auto diag = smith_diagonal(std::move(m));
    AbelianInvariants out;
    out.rank = static_cast<int>(gens.size() - diag.size());
    for (auto& d : diag)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT with coincidence handling)

namespace {

class CosetEnumerator {
public:
    CosetEnumerator(int ncols, long limit) : ncols_(ncols), limit_(limit) {
        table_.push_back({});  // coset 0 unused
        p_.push_back(0);
        new_coset();  // coset 1: the subgroup itself
    }

    bool overflow() const { return overflow_; }

    int rep(int k) {
        while (p_[k] != k) {
            p_[k] = p_[p_[k]];
            k = p_[k];
        }
        return k;
    }

    bool alive(int k) { return rep(k) == k; }

    void scan_and_fill(int a, const std::vector<int>& w) {
        if (w.empty()) return;
        int f = a, b = a;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        while (true) {
            while (i <= j && table_[f][w[i]]) f = table_[f][w[i++]];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && table_[b][inv(w[j])]) b = table_[b][inv(w[j--])];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                table_[f][w[i]] = b;
                table_[b][inv(w[i])] = f;
                return;
            }
            int n = new_coset();
            if (overflow_) return;
            table_[f][w[i]] = n;
            table_[n][inv(w[i])] = f;
            f = n;
            ++i;
        }
    }

    void fill_row(int a) {
        for (int x = 0; x < ncols_ && !overflow_; ++x)
            if (!table_[a][x]) {
                int n = new_coset();
                if (overflow_) return;
                table_[a][x] = n;
                table_[n][inv(x)] = a;
            }
    }

    long run(const std::vector<std::vector<int>>& relators) {
        for (int a = 1; a < static_cast<int>(table_.size()); ++a) {
            if (!alive(a)) continue;
            for (const auto& r : relators) {
                scan_and_fill(a, r);
                if (overflow_) return -1;
                if (!alive(a)) break;
            }
            if (!alive(a)) continue;
            fill_row(a);
            if (overflow_) return -1;
        }
        long live = 0;
        for (int a = 1; a < static_cast<int>(table_.size()); ++a)
            if (alive(a)) ++live;
        return live;
    }

    long defined() const { return defined_; }

private:
    static int inv(int col) { return col ^ 1; }

    int new_coset() {
        if (defined_ >= limit_) {
            overflow_ = true;
            return 0;
        }
        table_.emplace_back(ncols_, 0);
        p_.push_back(static_cast<int>(p_.size()));
        ++defined_;
        return static_cast<int>(table_.size()) - 1;
    }

    void merge(int k, int l) {
        k = rep(k);
        l = rep(l);
        if (k == l) return;
        if (k > l) std::swap(k, l);
        p_[l] = k;
        queue_.push_back(l);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!queue_.empty()) {
            int e = queue_.front();
            queue_.pop_front();
            for (int x = 0; x < ncols_; ++x) {
                int f = table_[e][x];
                if (!f) continue;
                table_[f][inv(x)] = 0;
                int e1 = rep(e), f1 = rep(f);
                if (table_[e1][x])
                    merge(f1, table_[e1][x]);
                else if (table_[f1][inv(x)])
                    merge(e1, table_[f1][inv(x)]);
                else {
                    table_[e1][x] = f1;
                    table_[f1][inv(x)] = e1;
                }
            }
        }
    }

    int ncols_;
    long limit_;
    long defined_ = 0;
    bool overflow_ = false;
    std::vector<std::vector<int>> table_;
    std::vector<int> p_;
    std::deque<int> queue_;
};

std::vector<int> compile_word(const Word& w, const std::map<std::string, int>& index) {
    std::vector<int> out;
    for (const auto& l : w.letters()) {
        auto it = index.find(l.gen);
        if (it == index.end())
            throw std::domain_error("todd_coxeter: word uses unknown generator '" + l.gen + "'");
        out.push_back(2 * it->second + (l.sign > 0 ? 0 : 1));
    }
    return out;
}

}  // namespace

CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, long limit) {
    if (limit < 1) throw std::invalid_argument("todd_coxeter: limit must be >= 1");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < p.generators().size(); ++i)
        index[p.generators()[i]] = static_cast<int>(i);

    CosetEnumerator e(2 * static_cast<int>(p.generators().size()), limit);
    for (const auto& h : subgroup) {
        e.scan_and_fill(1, compile_word(h, index));
        if (e.overflow()) return {CosetStatus::OVERFLOW_, -1, e.defined()};
    }
    std::vector<std::vector<int>> relators;
    for (const auto& r : p.relators()) relators.push_back(compile_word(r, index));
    long idx = e.run(relators);
    if (e.overflow()) return {CosetStatus::OVERFLOW_, -1, e.defined()};
    return {CosetStatus::COMPLETE, idx, e.defined()};
}

// ---------------------------------------------------------------------------
// Finite group tables

FiniteGroupTable FiniteGroupTable::from_permutations(std::string name,
                                                     const std::vector<std::vector<int>>& perm_gens) {
    if (perm_gens.empty()) throw std::invalid_argument("group table: no generators");
    const std::size_t degree = perm_gens[0].size();
    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];  // (a*b)(i) = a(b(i))
        return c;
    };
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::set<std::vector<int>> elems{id};
    std::deque<std::vector<int>> work{id};
    while (!work.empty()) {
        auto cur = work.front();
        work.pop_front();
        for (const auto& g : perm_gens) {
            auto nxt = compose(cur, g);
            if (elems.insert(nxt).second) work.push_back(nxt);
        }
    }

    FiniteGroupTable t;
    t.name_ = std::move(name);
    t.permutations_.assign(elems.begin(), elems.end());  // set order = lexicographic
    t.order_ = static_cast<int>(t.permutations_.size());
    std::map<std::vector<int>, int> pos;
    for (int i = 0; i < t.order_; ++i) pos[t.permutations_[i]] = i;

    t.table_.assign(t.order_, std::vector<int>(t.order_));
    for (int i = 0; i < t.order_; ++i)
        for (int j = 0; j < t.order_; ++j)
            t.table_[i][j] = pos.at(compose(t.permutations_[i], t.permutations_[j]));

    t.inverse_.resize(t.order_);
    t.element_order_.resize(t.order_);
    for (int i = 0; i < t.order_; ++i) {
        for (int j = 0; j < t.order_; ++j)
            if (t.table_[i][j] == 0) t.inverse_[i] = j;
        int k = i, ord = 1;
        while (k != 0) {
            k = t.table_[k][i];
            ++ord;
        }
        t.element_order_[i] = ord;
    }
    for (const auto& g : perm_gens) t.generator_elements_.push_back(pos.at(g));
    t.validate();
    return t;
}

void FiniteGroupTable::validate() const {
    if (order_ <= 0) throw std::logic_error("group table: empty");
    for (int i = 0; i < order_; ++i) {
        if (table_[0][i] != i || table_[i][0] != i)
            throw std::logic_error("group table: element 0 is not the identity");
        if (table_[i][inverse_[i]] != 0 || table_[inverse_[i]][i] != 0)
            throw std::logic_error("group table: bad inverse");
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::logic_error("group table: not associative");
}

nlohmann::json FiniteGroupTable::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["order"] = order_;
    j["elements"] = permutations_;  // lexicographic; index 0 is the identity
    j["table"] = table_;
    j["element_orders"] = element_order_;
    j["generators"] = generator_elements_;
    return j;
}

namespace {

std::vector<int> cycle_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

std::vector<int> reversal_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

}  // namespace

const std::vector<FiniteGroupTable>& battery() {
    static const std::vector<FiniteGroupTable> groups = [] {
        std::vector<FiniteGroupTable> v;
        v.push_back(FiniteGroupTable::from_permutations("Z6", {cycle_perm(6)}));
        v.push_back(FiniteGroupTable::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}}));
        v.push_back(FiniteGroupTable::from_permutations("D8", {cycle_perm(4), reversal_perm(4)}));
        v.push_back(FiniteGroupTable::from_permutations("D10", {cycle_perm(5), reversal_perm(5)}));
        v.push_back(FiniteGroupTable::from_permutations("D12", {cycle_perm(6), reversal_perm(6)}));
        v.push_back(FiniteGroupTable::from_permutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}));
        v.push_back(FiniteGroupTable::from_permutations("S4", {{1, 0, 2, 3}, {1, 2, 3, 0}}));
        return v;
    }();
    return groups;
}

const FiniteGroupTable& battery_group(const std::string& name) {
    for (const auto& g : battery())
        if (g.name() == name) return g;
    throw std::domain_error("no battery group named '" + name + "'");
}

// ---------------------------------------------------------------------------
// Homomorphism search

namespace {

struct HomProblem {
    const FiniteGroupTable& g;
    int ngens;
    std::vector<int> order;                     // assignment order (generator indices)
    std::vector<std::vector<std::pair<int, int>>> relators;  // (generator index, sign)
    std::vector<std::vector<int>> check_at;     // relators completed at each depth
};

// Order generators so relators close (and prune) as early as possible:
// repeatedly pick the generator completing the most relators, breaking ties
// by total relator occurrences, then by presentation order.
HomProblem build_problem(const Presentation& p, const FiniteGroupTable& g) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < p.generators().size(); ++i)
        index[p.generators()[i]] = static_cast<int>(i);
    HomProblem prob{g, static_cast<int>(p.generators().size()), {}, {}, {}};
    std::vector<std::set<int>> support;
    for (const auto& r : p.relators()) {
        std::vector<std::pair<int, int>> rel;
        std::set<int> sup;
        for (const auto& l : r.letters()) {
            rel.push_back({index.at(l.gen), l.sign});
            sup.insert(index.at(l.gen));
        }
        prob.relators.push_back(std::move(rel));
        support.push_back(std::move(sup));
    }

    std::vector<int> occurrences(prob.ngens, 0);
    for (const auto& r : prob.relators)
        for (const auto& [gi, s] : r) ++occurrences[gi];

    std::set<int> assigned;
    while (static_cast<int>(prob.order.size()) < prob.ngens) {
        int best = -1;
        long best_completed = -1, best_occ = -1;
        for (int cand = 0; cand < prob.ngens; ++cand) {
            if (assigned.count(cand)) continue;
            long completed = 0;
            for (std::size_t r = 0; r < support.size(); ++r) {
                if (!support[r].count(cand)) continue;
                bool rest = true;
                for (int x : support[r])
                    if (x != cand && !assigned.count(x)) rest = false;
                if (rest) ++completed;
            }
            if (completed > best_completed ||
                (completed == best_completed && occurrences[cand] > best_occ)) {
                best = cand;
                best_completed = completed;
                best_occ = occurrences[cand];
            }
        }
        assigned.insert(best);
        prob.order.push_back(best);
    }

    std::vector<int> depth_of(prob.ngens);
    for (int d = 0; d < prob.ngens; ++d) depth_of[prob.order[d]] = d;
    prob.check_at.assign(prob.ngens == 0 ? 1 : prob.ngens, {});
    for (std::size_t r = 0; r < support.size(); ++r) {
        int last = 0;
        for (int x : support[r]) last = std::max(last, depth_of[x]);
        if (!support[r].empty()) prob.check_at[last].push_back(static_cast<int>(r));
    }
    return prob;
}

bool relator_trivial(const HomProblem& prob, const std::vector<int>& image, int r) {
    int acc = 0;
    for (const auto& [gi, s] : prob.relators[r]) {
        int x = image[gi];
        if (s < 0) x = prob.g.inverse(x);
        acc = prob.g.mul(acc, x);
    }
    return acc == 0;
}

bool generates(const FiniteGroupTable& g, const std::vector<int>& image) {
    std::set<int> closure{0};
    std::deque<int> work{0};
    while (!work.empty()) {
        int cur = work.front();
        work.pop_front();
        for (int x : image)
            if (closure.insert(g.mul(cur, x)).second) work.push_back(g.mul(cur, x));
    }
    return static_cast<int>(closure.size()) == g.order();
}

enum class Mode { COUNT, EPI_COUNT, EPI_EXISTS };

long search(const HomProblem& prob, Mode mode) {
    std::vector<int> image(prob.ngens, 0);
    long hits = 0;
    // depth-first over assignment order; stack holds the next candidate
    std::vector<int> choice(prob.ngens + 1, 0);
    int depth = 0;
    if (prob.ngens == 0)
        return mode == Mode::COUNT ? 1 : (generates(prob.g, image) ? 1 : 0);
    while (depth >= 0) {
        if (depth == prob.ngens) {
            if (mode == Mode::COUNT || generates(prob.g, image)) {
                ++hits;
                if (mode == Mode::EPI_EXISTS) return hits;
            }
            --depth;
            continue;
        }
        if (choice[depth] == prob.g.order()) {
            choice[depth] = 0;
            --depth;
            continue;
        }
        image[prob.order[depth]] = choice[depth]++;
        bool ok = true;
        for (int r : prob.check_at[depth])
            if (!relator_trivial(prob, image, r)) {
                ok = false;
                break;
            }
        if (ok) ++depth;
    }
    return hits;
}

}  // namespace

long hom_count(const Presentation& p, const FiniteGroupTable& g) {
    return search(build_problem(p, g), Mode::COUNT);
}

long epi_count(const Presentation& p, const FiniteGroupTable& g) {
    return search(build_problem(p, g), Mode::EPI_COUNT);
}

bool epi_exists(const Presentation& p, const FiniteGroupTable& g) {
    return search(build_problem(p, g), Mode::EPI_EXISTS) > 0;
}

std::map<std::string, long> hom_spectrum(const Presentation& p) {
    std::map<std::string, long> out;
    for (const auto& g : battery()) out[g.name()] = hom_count(p, g);
    return out;
}

// ---------------------------------------------------------------------------
// Z2 * Z3 normal forms

Z2Z3Word Z2Z3Word::u() {
    Z2Z3Word w;
    w.syllables_ = {0};
    return w;
}

Z2Z3Word Z2Z3Word::v(int exponent) {
    int e = ((exponent % 3) + 3) % 3;
    Z2Z3Word w;
    if (e) w.syllables_ = {e};
    return w;
}

Z2Z3Word Z2Z3Word::sigma1() { return v(2) * u(); }
Z2Z3Word Z2Z3Word::sigma2() { return u() * v(2); }

Z2Z3Word Z2Z3Word::operator*(const Z2Z3Word& rhs) const {
    Z2Z3Word out = *this;
    auto& s = out.syllables_;
    for (int syl : rhs.syllables_) {
        if (s.empty()) {
            s.push_back(syl);
            continue;
        }
        int back = s.back();
        if (back == 0 && syl == 0) {
            s.pop_back();  // u^2 = 1
        } else if (back >= 1 && syl >= 1) {
            int e = (back + syl) % 3;
            s.pop_back();
            if (e) s.push_back(e);
        } else {
            s.push_back(syl);
        }
    }
    return out;
}

Z2Z3Word Z2Z3Word::inverse() const {
    Z2Z3Word out;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        out.syllables_.push_back(*it == 0 ? 0 : 3 - *it);
    return out;
}

std::string Z2Z3Word::str() const {
    if (syllables_.empty()) return "1";
    std::string out;
    for (int s : syllables_) {
        if (!out.empty()) out += ' ';
        out += s == 0 ? "u" : s == 1 ? "v" : "v^2";
    }
    return out;
}

Z2Z3Word Z2Z3Word::parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    Z2Z3Word out;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok == "u" || tok == "u^-1")
            out = out * u();
        else if (tok == "v")
            out = out * v(1);
        else if (tok == "v^2" || tok == "v^-1")
            out = out * v(2);
        else if (tok == "v^-2")
            out = out * v(1);
        else
            throw std::invalid_argument("Z2Z3 word: bad token '" + tok + "'");
    }
    return out;
}

bool rb3_verify(const Presentation& p, const std::map<std::string, Z2Z3Word>& assignment) {
    for (const auto& g : p.generators())
        if (!assignment.count(g))
            throw std::domain_error("rb3_verify: no image assigned to '" + g + "'");

    for (const auto& r : p.relators()) {
        Z2Z3Word acc;
        for (const auto& l : r.letters()) {
            const Z2Z3Word& img = assignment.at(l.gen);
            acc = acc * (l.sign > 0 ? img : img.inverse());
        }
        if (!acc.trivial()) return false;
    }

    // closure over products of images, bounded syllable length
    constexpr std::size_t kMaxSyllables = 8;
    std::vector<Z2Z3Word> step;
    for (const auto& g : p.generators()) {
        step.push_back(assignment.at(g));
        step.push_back(assignment.at(g).inverse());
    }
    std::set<Z2Z3Word> closure{Z2Z3Word{}};
    std::deque<Z2Z3Word> work{Z2Z3Word{}};
    while (!work.empty()) {
        Z2Z3Word cur = work.front();
        work.pop_front();
        for (const auto& s : step) {
            Z2Z3Word nxt = cur * s;
            if (nxt.syllable_count() > kMaxSyllables) continue;
            if (closure.insert(nxt).second) work.push_back(nxt);
        }
    }
    return closure.count(Z2Z3Word::u()) && closure.count(Z2Z3Word::v());
}

}  // namespace sextic::invariants
