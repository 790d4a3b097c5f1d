#ifndef SEXTIC_CURVEGEOM_HPP
#define SEXTIC_CURVEGEOM_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sextic::curvegeom {

// Simple number field Q(theta) given by a monic minimal polynomial with
// rational coefficients, degree <= 6.  Irreducibility is the caller's
// responsibility (trusted input); inversion fails loudly if a zero divisor
// ever shows up, which would expose a reducible modulus.
class NumberField {
public:
    // coeffs c0..cd of c0 + c1 x + ... + cd x^d, cd == 1.
    explicit NumberField(std::vector<mpq_class> minpoly);

    static std::shared_ptr<const NumberField> rationals();   // Q itself (degree 1, x)
    static std::shared_ptr<const NumberField> cbrt_m4();     // Q(theta), theta^3 = -4

    std::size_t degree() const { return minpoly_.size() - 1; }
    const std::vector<mpq_class>& minpoly() const { return minpoly_; }
    std::string str() const;

private:
    std::vector<mpq_class> minpoly_;
};

// Element of a number field: rational coordinates in the power basis
// 1, theta, ..., theta^(d-1).
class FieldElem {
public:
    FieldElem() : field_(NumberField::rationals()), coords_(1, 0) {}
    FieldElem(std::shared_ptr<const NumberField> field, std::vector<mpq_class> coords);
    FieldElem(const mpq_class& q);  // NOLINT: rationals convert implicitly
    FieldElem(long n) : FieldElem(mpq_class(n)) {}

    static FieldElem theta(std::shared_ptr<const NumberField> field);

    const std::shared_ptr<const NumberField>& field() const { return field_; }
    const std::vector<mpq_class>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational() const;  // throws unless coords beyond the first vanish

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem&) const;
    FieldElem operator-(const FieldElem&) const;
    FieldElem operator*(const FieldElem&) const;
    FieldElem operator/(const FieldElem&) const;
    FieldElem inverse() const;  // extended gcd against the minimal polynomial
    friend bool operator==(const FieldElem&, const FieldElem&);

    std::string str() const;

private:
    std::shared_ptr<const NumberField> field_;
    std::vector<mpq_class> coords_;
};

// Dense univariate polynomial over a number field.  Canonical form has a
// nonzero leading coefficient; the zero polynomial has an empty coefficient
// vector.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<FieldElem> coeffs);  // c0 + c1 x + ...
    static UnivariatePoly constant(const FieldElem& c);
    static UnivariatePoly x(std::shared_ptr<const NumberField> field);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    FieldElem coeff(std::size_t i) const;
    FieldElem leading() const;

    UnivariatePoly operator-() const;
    UnivariatePoly operator+(const UnivariatePoly&) const;
    UnivariatePoly operator-(const UnivariatePoly&) const;
    UnivariatePoly operator*(const UnivariatePoly&) const;
    UnivariatePoly operator*(const FieldElem&) const;
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&);

    FieldElem eval(const FieldElem& x0) const;
    UnivariatePoly derivative() const;
    // Exact division; throws std::domain_error on a nonzero remainder.
    UnivariatePoly divide_exact(const UnivariatePoly& d) const;
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;
    UnivariatePoly pow(unsigned e) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<FieldElem> coeffs_;
};

// Polynomial in x and y, stored as y-coefficients; y-degree <= 3 suffices for
// every trigonal curve here.
class BivariatePoly {
public:
    BivariatePoly() = default;
    explicit BivariatePoly(std::vector<UnivariatePoly> y_coeffs);  // index = y-power

    long y_degree() const;
    const std::vector<UnivariatePoly>& y_coeffs() const { return y_coeffs_; }
    UnivariatePoly y_coeff(std::size_t j) const;

    BivariatePoly operator+(const BivariatePoly&) const;
    BivariatePoly operator-(const BivariatePoly&) const;
    BivariatePoly operator*(const BivariatePoly&) const;
    friend bool operator==(const BivariatePoly&, const BivariatePoly&);

    // f(g(x), h(x)) for univariate g, h.
    UnivariatePoly substitute(const UnivariatePoly& gx, const UnivariatePoly& hy) const;
    // f(gx(x,y), hy(x,y)) for bivariate arguments.
    BivariatePoly substitute2(const BivariatePoly& gx, const BivariatePoly& hy) const;

    std::string str() const;

private:
    std::vector<UnivariatePoly> y_coeffs_;
};

// The section y = a x^2 + b x + c.  Degenerate (a = b = 0) is allowed.
struct SectionCoeffs {
    FieldElem a, b, c;
    UnivariatePoly poly(std::shared_ptr<const NumberField> field) const;
    std::string str() const;
};

// The two model trigonal curves, over the given field (default Q).
BivariatePoly curve_b1(std::shared_ptr<const NumberField> field = NumberField::rationals());
BivariatePoly curve_b2(std::shared_ptr<const NumberField> field = NumberField::rationals());
UnivariatePoly line_l(std::shared_ptr<const NumberField> field = NumberField::rationals());

// Resultant of two univariate polynomials via the Sylvester matrix.
FieldElem resultant(const UnivariatePoly& f, const UnivariatePoly& g);

// Resultant with respect to y of two polynomials in x and y; the Sylvester
// entries are polynomials in x.
UnivariatePoly resultant_y(const BivariatePoly& f, const BivariatePoly& g);

// Discriminant of f with respect to y, computed as Res_y(f, df/dy) / lc_y(f)
// where both resultant entries are polynomials in x.  Requires y-degree
// exactly 3.  (This normalization differs from the classical discriminant of
// a cubic by the sign (-1)^(3*2/2) = -1.)
UnivariatePoly discriminant_y(const BivariatePoly& f);

// g(x) = f(x, s(x)); throws if the section is a component of the curve.
UnivariatePoly restrict_to_section(const BivariatePoly& f, const SectionCoeffs& s);

// Largest m with (x - x0)^m | g, by repeated exact division.
unsigned multiplicity_at(const UnivariatePoly& g, const FieldElem& x0);

// Named exact identities; throws std::domain_error on an unknown name.
// Known: f1-torus, f2-torus, f1-param, b2-iso, sextic-even.
bool verify_identity(const std::string& id, unsigned seed = 0);
std::vector<std::string> identity_names();

// Double of a trigonal curve ramified at a section: f(x, y^2 + s(x)).
BivariatePoly double_curve(const BivariatePoly& f, const SectionCoeffs& s);

struct MultPoint {
    FieldElem x0;
    unsigned expected_min = 2;  // tangent 2, inflection 3, quadruple 4
    unsigned found = 0;
};

struct FamilyReport {
    std::string family;
    SectionCoeffs section;
    std::vector<MultPoint> points;
    long residual_degree = 0;   // degree left after dividing out detected roots
    long total_degree = 0;      // degree of the restricted polynomial
    bool pass = false;
    std::string detail;
};

// Families of special sections.  Parameters are exact field elements; the
// printed exclusions (2t^3 != 1, t^3 != -1, t != 0, ...) raise
// std::invalid_argument naming the violated condition.
//   tangent            params: t, a        (curve B1)
//   inflection         params: t           (curve B1)
//   quadruple          params: delta, delta^3 = -1/2  (curve B1)
//   double-tangent     params: t1, t2 with 2(t1+t2)^3 = -1  (curve B1)
//   b2-inflection      params: t           (component y^2 = x of B2)
//   b2-tangent         params: t, a        (component y^2 = x of B2)
//   b2-conic-tangent   params: a, b        (component y = l(x) of B2)
//   b2-bitangent       params: t           (both components of B2)
FamilyReport verify_family(const std::string& family, const std::vector<FieldElem>& params);
std::vector<std::string> family_names();

// CLI parameter syntax: "p/q" or "p", or "[c0,c1,...]" over the supplied
// field (coordinates in theta powers).
FieldElem parse_element(const std::string& text,
                        std::shared_ptr<const NumberField> field = NumberField::rationals());
// Field syntax: "x" for Q, or a monic integer coefficient list "[c0,...,1]".
std::shared_ptr<const NumberField> parse_field(const std::string& text);

}  // namespace sextic::curvegeom

#endif
