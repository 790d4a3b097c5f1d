#ifndef SEXTIC_INVARIANTS_HPP
#define SEXTIC_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "sextic/presentation.hpp"

namespace sextic::invariants {

// Invariant factors d1 | d2 | ... (each >= 2) plus free rank.
struct AbelianInvariants {
    std::vector<mpz_class> torsion;
    int rank = 0;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
    std::string str() const;  // e.g. "Z^2 + Z/6", "Z/6", "1"
};

// Nonzero invariant factors of an integer matrix (rows x cols), in
// divisibility order. Exact arithmetic throughout.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

// Abelianization from the relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& p);

enum class CosetStatus { COMPLETE, OVERFLOW_ };

struct CosetResult {
    CosetStatus status = CosetStatus::OVERFLOW_;
    long index = -1;           // valid when COMPLETE
    long cosets_defined = 0;   // total defined, including collapsed ones
};

// HLT-style Todd-Coxeter enumeration of cosets of <subgroup> in p.
// Deterministic (first undefined entry in scan order defines the next coset).
// OVERFLOW means the budget ran out, never that the index is infinite.
CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup = {},
                         long limit = 1'000'000);

// Finite group as a multiplication table, elements ordered lexicographically
// by their permutation images (element 0 is the identity).
class FiniteGroupTable {
public:
    static FiniteGroupTable from_permutations(std::string name,
                                              const std::vector<std::vector<int>>& perm_gens);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const { return element_order_[a]; }
    const std::vector<int>& generator_elements() const { return generator_elements_; }
    const std::vector<std::vector<int>>& permutations() const { return permutations_; }

    nlohmann::json to_json() const;

private:
    void validate() const;

    std::string name_;
    int order_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    std::vector<int> generator_elements_;
    std::vector<std::vector<int>> permutations_;
};

// The fixed battery {Z6, S3, D8, D10, D12, A4, S4}, built once from
// permutation representations.
const std::vector<FiniteGroupTable>& battery();
const FiniteGroupTable& battery_group(const std::string& name);

// Exhaustive backtracking homomorphism search with incremental relator
// pruning (a relator is checked as soon as its support is fully assigned).
long hom_count(const Presentation& p, const FiniteGroupTable& g);
long epi_count(const Presentation& p, const FiniteGroupTable& g);
bool epi_exists(const Presentation& p, const FiniteGroupTable& g);

// Hom counts over the whole battery, keyed by group name.
std::map<std::string, long> hom_spectrum(const Presentation& p);

// Element of Z2 * Z3 = <u, v | u^2, v^3> in alternating normal form.
// Syllables: 0 = u, 1 = v, 2 = v^2; no two adjacent u's or v-powers.
class Z2Z3Word {
public:
    Z2Z3Word() = default;

    static Z2Z3Word u();
    static Z2Z3Word v(int exponent = 1);
    static Z2Z3Word sigma1();  // v^2 u
    static Z2Z3Word sigma2();  // u v^2
    static Z2Z3Word parse(const std::string& text);  // tokens u, v, v^2, u^-1, v^-1

    bool trivial() const { return syllables_.empty(); }
    std::size_t syllable_count() const { return syllables_.size(); }
    const std::vector<int>& syllables() const { return syllables_; }

    Z2Z3Word operator*(const Z2Z3Word& rhs) const;
    Z2Z3Word inverse() const;
    std::string str() const;

    friend bool operator==(const Z2Z3Word&, const Z2Z3Word&) = default;
    friend auto operator<=>(const Z2Z3Word&, const Z2Z3Word&) = default;

private:
    std::vector<int> syllables_;
};

// Certifies p ->> Z2 * Z3: every relator must map to the identity and the
// images must generate (both u and v reached by a closure search over
// products of syllable length <= 8).
bool rb3_verify(const Presentation& p, const std::map<std::string, Z2Z3Word>& assignment);

}  // namespace sextic::invariants

#endif
