#include "sextic/curvegeom.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sextic::curvegeom {

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(std::vector<mpq_class> minpoly) : minpoly_(std::move(minpoly)) {
    if (minpoly_.size() < 2 || minpoly_.size() > 7)
        throw std::invalid_argument("minimal polynomial degree must be 1..6");
    if (minpoly_.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static auto q = std::make_shared<const NumberField>(std::vector<mpq_class>{0, 1});
    return q;
}

std::shared_ptr<const NumberField> NumberField::cbrt_m4() {
    static auto f = std::make_shared<const NumberField>(std::vector<mpq_class>{4, 0, 0, 1});
    return f;
}

std::string NumberField::str() const {
    if (degree() == 1) return "Q";
    std::ostringstream os;
    os << "Q[t]/(";
    bool first = true;
    for (std::size_t i = minpoly_.size(); i-- > 0;) {
        if (minpoly_[i] == 0) continue;
        if (!first) os << (minpoly_[i] > 0 ? " + " : " - ");
        else if (minpoly_[i] < 0) os << "-";
        mpq_class a = abs(minpoly_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << (a != 1 ? "*t" : "t");
        if (i > 1) os << "^" << i;
        first = false;
    }
    os << ")";
    return os.str();
}

// ------------------------------------------------------------------ FieldElem

namespace {

// Reduce a coordinate vector modulo the (monic) minimal polynomial.
void reduce_mod(std::vector<mpq_class>& c, const std::vector<mpq_class>& mp) {
    std::size_t d = mp.size() - 1;
    for (std::size_t i = c.size(); i-- > d;) {
        mpq_class top = c[i];
        if (top == 0) continue;
        c[i] = 0;
        for (std::size_t k = 0; k < d; ++k) c[i - d + k] -= top * mp[k];
    }
    c.resize(d);
}

std::shared_ptr<const NumberField> common_field(const FieldElem& a, const FieldElem& b) {
    if (a.field() == b.field()) return a.field();
    if (a.field()->degree() == 1) return b.field();
    if (b.field()->degree() == 1) return a.field();
    if (a.field()->minpoly() == b.field()->minpoly()) return a.field();
    throw std::domain_error("field elements live in different number fields");
}

std::vector<mpq_class> lift(const FieldElem& e, const std::shared_ptr<const NumberField>& f) {
    std::vector<mpq_class> c = e.coords();
    c.resize(f->degree(), 0);
    return c;
}

}  // namespace

FieldElem::FieldElem(std::shared_ptr<const NumberField> field, std::vector<mpq_class> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() > field_->degree()) reduce_mod(coords_, field_->minpoly());
    coords_.resize(field_->degree(), 0);
    for (auto& q : coords_) q.canonicalize();
}

FieldElem::FieldElem(const mpq_class& q) : field_(NumberField::rationals()), coords_(1, q) {
    coords_[0].canonicalize();
}

FieldElem FieldElem::theta(std::shared_ptr<const NumberField> field) {
    std::vector<mpq_class> c(field->degree(), 0);
    if (c.size() < 2) throw std::domain_error("theta needs a proper extension");
    c[1] = 1;
    return FieldElem(std::move(field), std::move(c));
}

bool FieldElem::is_zero() const {
    for (const auto& q : coords_)
        if (q != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

mpq_class FieldElem::rational() const {
    if (!is_rational()) throw std::domain_error("element is not rational: " + str());
    return coords_[0];
}

FieldElem FieldElem::operator-() const {
    std::vector<mpq_class> c = coords_;
    for (auto& q : c) q = -q;
    return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    auto f = common_field(*this, rhs);
    auto a = lift(*this, f), b = lift(rhs, f);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return FieldElem(f, std::move(a));
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const { return *this + (-rhs); }

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    auto f = common_field(*this, rhs);
    auto a = lift(*this, f), b = lift(rhs, f);
    std::vector<mpq_class> c(2 * f->degree(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_->degree() == 1) return FieldElem(mpq_class(1 / coords_[0]));
    // Extended Euclid on (minpoly, this) over Q[t].
    using P = std::vector<mpq_class>;
    auto deg = [](const P& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    P r0 = field_->minpoly(), r1 = coords_;
    P s0(1, 0), s1(1, 1);  // coefficients of `this` in the Bezout identity
    while (deg(r1) > 0) {
        long d0 = deg(r0), d1 = deg(r1);
        P q(d0 - d1 + 1, 0);
        P rem = r0;
        for (long i = d0; i >= d1; --i) {
            mpq_class coef = rem[i] / r1[d1];
            q[i - d1] = coef;
            if (coef == 0) continue;
            for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= coef * r1[j];
        }
        P s = s0;
        s.resize(std::max(s.size(), q.size() + s1.size()), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (deg(r1) != 0)
        throw std::domain_error("zero divisor: minimal polynomial is not irreducible");
    mpq_class unit = 0;
    for (std::size_t i = 0; i < r1.size(); ++i)
        if (r1[i] != 0) unit = r1[i];
    for (auto& q : s1) q /= unit;
    return FieldElem(field_, std::move(s1));
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const { return *this * rhs.inverse(); }

bool operator==(const FieldElem& lhs, const FieldElem& rhs) {
    auto f = common_field(lhs, rhs);
    return lift(lhs, f) == lift(rhs, f);
}

std::string FieldElem::str() const {
    if (is_rational()) return coords_[0].get_str();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i].get_str();
    os << "]";
    return os.str();
}

// ------------------------------------------------------------- UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const FieldElem& c) {
    return UnivariatePoly(std::vector<FieldElem>{c});
}

UnivariatePoly UnivariatePoly::x(std::shared_ptr<const NumberField> field) {
    return UnivariatePoly({FieldElem(field, {0}), FieldElem(field, {0}) + FieldElem(1)});
}

FieldElem UnivariatePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElem(0);
}

FieldElem UnivariatePoly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

UnivariatePoly UnivariatePoly::operator-() const {
    std::vector<FieldElem> c = coeffs_;
    for (auto& e : c) e = -e;
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& rhs) const {
    std::vector<FieldElem> c(std::max(coeffs_.size(), rhs.coeffs_.size()), FieldElem(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& rhs) const {
    return *this + (-rhs);
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UnivariatePoly();
    std::vector<FieldElem> c(coeffs_.size() + rhs.coeffs_.size() - 1, FieldElem(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * rhs.coeffs_[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const FieldElem& k) const {
    std::vector<FieldElem> c = coeffs_;
    for (auto& e : c) e = e * k;
    return UnivariatePoly(std::move(c));
}

bool operator==(const UnivariatePoly& lhs, const UnivariatePoly& rhs) {
    return (lhs - rhs).is_zero();
}

FieldElem UnivariatePoly::eval(const FieldElem& x0) const {
    FieldElem acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x0 + coeffs_[i];
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return UnivariatePoly();
    std::vector<FieldElem> c(coeffs_.size() - 1, FieldElem(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * FieldElem(static_cast<long>(i));
    return UnivariatePoly(std::move(c));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    UnivariatePoly rem = *this;
    if (degree() < d.degree()) return {UnivariatePoly(), rem};
    std::vector<FieldElem> q(degree() - d.degree() + 1, FieldElem(0));
    FieldElem lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        long shift = rem.degree() - d.degree();
        FieldElem coef = rem.leading() * lead_inv;
        q[shift] = coef;
        std::vector<FieldElem> sub(shift, FieldElem(0));
        sub.push_back(coef);
        rem = rem - d * UnivariatePoly(std::move(sub));
    }
    return {UnivariatePoly(std::move(q)), rem};
}

UnivariatePoly UnivariatePoly::divide_exact(const UnivariatePoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("division is not exact");
    return q;
}

UnivariatePoly UnivariatePoly::pow(unsigned e) const {
    UnivariatePoly acc = constant(FieldElem(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[i].str();
        if (i > 0) os << "*" << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// -------------------------------------------------------------- BivariatePoly

BivariatePoly::BivariatePoly(std::vector<UnivariatePoly> y_coeffs)
    : y_coeffs_(std::move(y_coeffs)) {
    while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

long BivariatePoly::y_degree() const { return static_cast<long>(y_coeffs_.size()) - 1; }

UnivariatePoly BivariatePoly::y_coeff(std::size_t j) const {
    return j < y_coeffs_.size() ? y_coeffs_[j] : UnivariatePoly();
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& rhs) const {
    std::vector<UnivariatePoly> c(std::max(y_coeffs_.size(), rhs.y_coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = y_coeff(j) + rhs.y_coeff(j);
    return BivariatePoly(std::move(c));
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& rhs) const {
    std::vector<UnivariatePoly> c(std::max(y_coeffs_.size(), rhs.y_coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = y_coeff(j) - rhs.y_coeff(j);
    return BivariatePoly(std::move(c));
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& rhs) const {
    if (y_coeffs_.empty() || rhs.y_coeffs_.empty()) return BivariatePoly();
    std::vector<UnivariatePoly> c(y_coeffs_.size() + rhs.y_coeffs_.size() - 1);
    for (std::size_t i = 0; i < y_coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.y_coeffs_.size(); ++j)
            c[i + j] = c[i + j] + y_coeffs_[i] * rhs.y_coeffs_[j];
    return BivariatePoly(std::move(c));
}

bool operator==(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    BivariatePoly d = lhs - rhs;
    return d.y_coeffs().empty();
}

UnivariatePoly BivariatePoly::substitute(const UnivariatePoly& gx, const UnivariatePoly& hy) const {
    UnivariatePoly acc;
    for (std::size_t j = y_coeffs_.size(); j-- > 0;) {
        acc = acc * hy;
        // substitute x -> gx into the y^j coefficient
        UnivariatePoly cj;
        for (std::size_t i = y_coeffs_[j].coeffs().size(); i-- > 0;)
            cj = cj * gx + UnivariatePoly::constant(y_coeffs_[j].coeffs()[i]);
        acc = acc + cj;
    }
    return acc;
}

BivariatePoly BivariatePoly::substitute2(const BivariatePoly& gx, const BivariatePoly& hy) const {
    BivariatePoly acc;
    for (std::size_t j = y_coeffs_.size(); j-- > 0;) {
        acc = acc * hy;
        BivariatePoly cj;
        for (std::size_t i = y_coeffs_[j].coeffs().size(); i-- > 0;) {
            BivariatePoly k({UnivariatePoly::constant(y_coeffs_[j].coeffs()[i])});
            cj = cj * gx + k;
        }
        acc = acc + cj;
    }
    return acc;
}

std::string BivariatePoly::str() const {
    if (y_coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = y_coeffs_.size(); j-- > 0;) {
        if (y_coeffs_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << y_coeffs_[j].str() << ")";
        if (j > 0) os << "*y";
        if (j > 1) os << "^" << j;
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------------- the curves

namespace {

UnivariatePoly upoly(std::shared_ptr<const NumberField> f, std::vector<mpq_class> coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (auto& q : coeffs) c.push_back(FieldElem(f, {q}));
    return UnivariatePoly(std::move(c));
}

}  // namespace

UnivariatePoly SectionCoeffs::poly(std::shared_ptr<const NumberField> field) const {
    FieldElem zero = FieldElem(std::move(field), {0});
    return UnivariatePoly({zero + c, zero + b, zero + a});
}

std::string SectionCoeffs::str() const {
    return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

BivariatePoly curve_b1(std::shared_ptr<const NumberField> f) {
    // -y^3 + y^2 - x^3 (2y - x^3)
    return BivariatePoly({
        upoly(f, {0, 0, 0, 0, 0, 0, 1}),  // x^6
        upoly(f, {0, 0, 0, -2}),          // -2 x^3
        upoly(f, {1}),                    // y^2
        upoly(f, {-1}),                   // -y^3
    });
}

UnivariatePoly line_l(std::shared_ptr<const NumberField> f) {
    return upoly(std::move(f), {mpq_class(3, 16), mpq_class(3, 2), -1});
}

BivariatePoly curve_b2(std::shared_ptr<const NumberField> f) {
    // (y^2 - x)(y - l(x))
    BivariatePoly y2mx({upoly(f, {0, -1}), UnivariatePoly(), upoly(f, {1})});
    BivariatePoly yml({-line_l(f), upoly(f, {1})});
    return y2mx * yml;
}

// ----------------------------------------------------------------- resultants

namespace {

// Determinant by Laplace expansion; matrices here are at most 6x6.
template <typename T>
T det_laplace(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
    std::size_t n = m.size();
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    T acc = zero;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k, sign = -sign) {
        std::vector<std::vector<T>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        T term = m[0][k] * det_laplace(minor, zero, one);
        acc = sign > 0 ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

FieldElem resultant(const UnivariatePoly& f, const UnivariatePoly& g) {
    if (f.is_zero() || g.is_zero()) return FieldElem(0);
    long n = f.degree(), m = g.degree();
    if (n == 0) {
        FieldElem acc(1);
        for (long i = 0; i < m; ++i) acc = acc * f.leading();
        return acc;
    }
    if (m == 0) {
        FieldElem acc(1);
        for (long i = 0; i < n; ++i) acc = acc * g.leading();
        return acc;
    }
    std::vector<std::vector<FieldElem>> syl(n + m, std::vector<FieldElem>(n + m, FieldElem(0)));
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) syl[r][r + i] = f.coeff(n - i);
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) syl[m + r][r + i] = g.coeff(m - i);
    return det_laplace(syl, FieldElem(0), FieldElem(1));
}

UnivariatePoly resultant_y(const BivariatePoly& f, const BivariatePoly& g) {
    long n = f.y_degree(), m = g.y_degree();
    if (n < 0 || m < 0) return UnivariatePoly();
    UnivariatePoly zero, one = UnivariatePoly::constant(FieldElem(1));
    if (n == 0 && m == 0) return one;
    std::vector<std::vector<UnivariatePoly>> syl(n + m, std::vector<UnivariatePoly>(n + m, zero));
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) syl[r][r + i] = f.y_coeff(n - i);
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) syl[m + r][r + i] = g.y_coeff(m - i);
    return det_laplace(syl, zero, one);
}

UnivariatePoly discriminant_y(const BivariatePoly& f) {
    if (f.y_degree() != 3) throw std::domain_error("discriminant_y expects y-degree 3");
    BivariatePoly df;
    {
        std::vector<UnivariatePoly> c;
        for (std::size_t j = 1; j < f.y_coeffs().size(); ++j)
            c.push_back(f.y_coeffs()[j] * FieldElem(static_cast<long>(j)));
        df = BivariatePoly(std::move(c));
    }
    UnivariatePoly res = resultant_y(f, df);
    return res.divide_exact(f.y_coeff(3));
}

// --------------------------------------------------------------- restrictions

UnivariatePoly restrict_to_section(const BivariatePoly& f, const SectionCoeffs& s) {
    auto field = s.a.field()->degree() > 1 ? s.a.field()
               : s.b.field()->degree() > 1 ? s.b.field()
               : s.c.field();
    UnivariatePoly g = f.substitute(UnivariatePoly::x(field), s.poly(field));
    if (g.is_zero()) throw std::domain_error("section is a component of the curve");
    return g;
}

unsigned multiplicity_at(const UnivariatePoly& g, const FieldElem& x0) {
    if (g.is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
    UnivariatePoly lin({-x0, FieldElem(1)});
    unsigned m = 0;
    UnivariatePoly cur = g;
    while (!cur.is_zero() && cur.eval(x0).is_zero()) {
        cur = cur.divide_exact(lin);
        ++m;
    }
    return m;
}

BivariatePoly double_curve(const BivariatePoly& f, const SectionCoeffs& s) {
    auto field = s.a.field()->degree() > 1 ? s.a.field() : s.c.field();
    BivariatePoly x_arg({UnivariatePoly::x(field)});
    // y^2 + s(x) as a bivariate polynomial
    BivariatePoly ysq({s.poly(field), UnivariatePoly(), UnivariatePoly::constant(FieldElem(1))});
    return f.substitute2(x_arg, ysq);
}

// ----------------------------------------------------------------- identities

std::vector<std::string> identity_names() {
    return {"f1-torus", "f2-torus", "f1-param", "b2-iso", "sextic-even"};
}

bool verify_identity(const std::string& id, unsigned seed) {
    auto Q = NumberField::rationals();
    if (id == "f1-torus") {
        // f1 = (-y)^3 + (y - x^3)^2
        BivariatePoly my({UnivariatePoly(), -UnivariatePoly::constant(FieldElem(1))});
        BivariatePoly ymx3({-upoly(Q, {0, 0, 0, 1}), upoly(Q, {1})});
        return curve_b1(Q) == my * my * my + ymx3 * ymx3;
    }
    if (id == "f2-torus") {
        // 64 f2 = (4y - 4x - 1)^3 + (8xy + 6y - 12x - 1)^2
        BivariatePoly u({upoly(Q, {-1, -4}), upoly(Q, {4})});
        BivariatePoly v({upoly(Q, {-1, -12}), upoly(Q, {6, 8})});
        BivariatePoly sixty_four({upoly(Q, {64})});
        return sixty_four * curve_b2(Q) == u * u * u + v * v;
    }
    if (id == "f1-param") {
        // With x = t/(t^3+1), y = 1/(t^3+1)^2, each monomial x^i y^j of f1
        // contributes c * t^i * (t^3+1)^(6-i-2j) after clearing (t^3+1)^6.
        UnivariatePoly d = upoly(Q, {1, 0, 0, 1});  // t^3 + 1
        UnivariatePoly t = UnivariatePoly::x(Q);
        UnivariatePoly acc;
        BivariatePoly f1 = curve_b1(Q);
        for (std::size_t j = 0; j < f1.y_coeffs().size(); ++j) {
            const auto& cj = f1.y_coeffs()[j].coeffs();
            for (std::size_t i = 0; i < cj.size(); ++i) {
                if (cj[i].is_zero()) continue;
                long w = 6 - static_cast<long>(i) - 2 * static_cast<long>(j);
                if (w < 0) throw std::domain_error("unexpected monomial weight");
                acc = acc + t.pow(static_cast<unsigned>(i)) * d.pow(static_cast<unsigned>(w)) *
                                cj[i];
            }
        }
        return acc.is_zero();
    }
    if (id == "b2-iso") {
        // f2(9x, -3y) = -27 (y^2 - x)(y - 27x^2 + (9/2)x + 1/16)
        BivariatePoly gx({upoly(Q, {0, 9})});
        BivariatePoly hy({UnivariatePoly(), upoly(Q, {-3})});
        BivariatePoly lhs = curve_b2(Q).substitute2(gx, hy);
        SectionCoeffs s{FieldElem(mpq_class(27)), FieldElem(mpq_class(-9, 2)),
                        FieldElem(mpq_class(-1, 16))};
        BivariatePoly y2mx({upoly(Q, {0, -1}), UnivariatePoly(), upoly(Q, {1})});
        BivariatePoly yms({-s.poly(Q), upoly(Q, {1})});
        BivariatePoly mtwenty7({upoly(Q, {-27})});
        return lhs == mtwenty7 * y2mx * yms;
    }
    if (id == "sextic-even") {
        // doubles are even in y whatever the section
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
        for (int trial = 0; trial < 5; ++trial) {
            SectionCoeffs s{FieldElem(mpq_class(num(rng), den(rng))),
                            FieldElem(mpq_class(num(rng), den(rng))),
                            FieldElem(mpq_class(num(rng), den(rng)))};
            BivariatePoly d = double_curve(curve_b1(Q), s);
            for (std::size_t j = 1; j < d.y_coeffs().size(); j += 2)
                if (!d.y_coeffs()[j].is_zero()) return false;
        }
        return true;
    }
    throw std::domain_error("unknown identity: " + id);
}

// ------------------------------------------------------------------- families

std::vector<std::string> family_names() {
    return {"tangent",      "inflection", "quadruple",        "double-tangent",
            "b2-inflection", "b2-tangent", "b2-conic-tangent", "b2-bitangent"};
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("excluded parameter: " + what);
}

FieldElem x_of_t(const FieldElem& t) {
    return t / (t * t * t + FieldElem(1));  // x_t on the nine-cusp model curve
}

// b and c of the section tangent to the first model curve at parameter t,
// as functions of the free coefficient a.
std::pair<FieldElem, FieldElem> tangent_bc(const FieldElem& t, const FieldElem& a) {
    FieldElem t3 = t * t * t;
    FieldElem u = FieldElem(2) * t3 - FieldElem(1);
    FieldElem v = t3 + FieldElem(1);
    FieldElem b = -(FieldElem(2) * t * u * a - FieldElem(6) * t * t) / (u * v);
    FieldElem c = (t * t * u * a - (FieldElem(4) * t3 + FieldElem(1))) / (u * v * v);
    return {b, c};
}

FamilyReport finish_b1(FamilyReport rep, const SectionCoeffs& s, std::vector<MultPoint> pts) {
    rep.section = s;
    UnivariatePoly g = restrict_to_section(curve_b1(s.a.field()), s);
    rep.total_degree = g.degree();
    long used = 0;
    bool ok = true;
    for (auto& p : pts) {
        p.found = multiplicity_at(g, p.x0);
        ok = ok && p.found >= p.expected_min;
        used += p.found;
    }
    rep.points = std::move(pts);
    rep.residual_degree = rep.total_degree - used;
    rep.pass = ok && rep.residual_degree >= 0;
    return rep;
}

// restriction bookkeeping against an arbitrary restricted polynomial
FamilyReport finish_on(FamilyReport rep, const SectionCoeffs& s, const UnivariatePoly& g,
                       std::vector<MultPoint> pts) {
    rep.section = s;
    rep.total_degree = g.degree();
    long used = 0;
    bool ok = true;
    for (auto& p : pts) {
        p.found = multiplicity_at(g, p.x0);
        ok = ok && p.found >= p.expected_min;
        used += p.found;
    }
    rep.points = std::move(pts);
    rep.residual_degree = rep.total_degree - used;
    rep.pass = ok && rep.residual_degree >= 0;
    return rep;
}

}  // namespace

FamilyReport verify_family(const std::string& family, const std::vector<FieldElem>& params) {
    FamilyReport rep;
    rep.family = family;
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument(family + " expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (family == "tangent") {
        need(2);
        FieldElem t = params[0], a = params[1];
        FieldElem t3 = t * t * t;
        require(!(FieldElem(2) * t3 == FieldElem(1)), "2t^3 = 1");
        require(!(t3 == FieldElem(-1)), "t^3 = -1");
        auto [b, c] = tangent_bc(t, a);
        return finish_b1(std::move(rep), {a, b, c}, {{x_of_t(t), 2}});
    }
    if (family == "inflection") {
        need(1);
        FieldElem t = params[0];
        FieldElem t3 = t * t * t;
        require(!(FieldElem(2) * t3 == FieldElem(1)), "2t^3 = 1");
        require(!(t3 == FieldElem(-1)), "t^3 = -1");
        FieldElem u = FieldElem(2) * t3 - FieldElem(1);
        FieldElem u3 = u * u * u;
        FieldElem a = FieldElem(3) * t * (FieldElem(8) * t3 * t3 + t3 + FieldElem(2)) / u3;
        FieldElem b = -FieldElem(6) * t * t * (FieldElem(4) * t3 + FieldElem(1)) / u3;
        FieldElem c = (FieldElem(8) * t3 - FieldElem(1)) / u3;
        return finish_b1(std::move(rep), {a, b, c}, {{x_of_t(t), 3}});
    }
    if (family == "quadruple") {
        need(1);
        FieldElem d = params[0];
        require(d * d * d == FieldElem(mpq_class(-1, 2)), "delta^3 != -1/2");
        FieldElem a = FieldElem(mpq_class(-56, 27)) * d;
        FieldElem b = FieldElem(mpq_class(64, 81)) * d * d;
        FieldElem c = FieldElem(mpq_class(256, 243));
        return finish_b1(std::move(rep), {a, b, c}, {{x_of_t(d / FieldElem(2)), 4}});
    }
    if (family == "double-tangent") {
        need(2);
        FieldElem t1 = params[0], t2 = params[1];
        require(!(t1 == t2), "t1 = t2");
        for (const FieldElem& t : {t1, t2}) {
            FieldElem t3 = t * t * t;
            require(!(FieldElem(2) * t3 == FieldElem(1)), "2t^3 = 1");
            require(!(t3 == FieldElem(-1)), "t^3 = -1");
        }
        FieldElem s = t1 + t2;
        require(FieldElem(2) * s * s * s == FieldElem(-1), "2(t1+t2)^3 != -1");
        // b(t, a) = beta(t) a + gamma(t); equate at t1, t2 and solve for a.
        auto affine = [](const FieldElem& t) {
            auto [b0, c0] = tangent_bc(t, FieldElem(0));
            auto [b1, c1] = tangent_bc(t, FieldElem(1));
            return std::array<FieldElem, 4>{b1 - b0, b0, c1 - c0, c0};
        };
        auto p1 = affine(t1), p2 = affine(t2);
        FieldElem a;
        if (!(p1[0] == p2[0])) a = (p2[1] - p1[1]) / (p1[0] - p2[0]);
        else a = (p2[3] - p1[3]) / (p1[2] - p2[2]);
        // both linear conditions must agree
        if (!(p1[0] * a + p1[1] == p2[0] * a + p2[1] && p1[2] * a + p1[3] == p2[2] * a + p2[3])) {
            rep.detail = "tangency systems at t1 and t2 are incompatible";
            rep.pass = false;
            return rep;
        }
        auto [b, c] = tangent_bc(t1, a);
        return finish_b1(std::move(rep), {a, b, c}, {{x_of_t(t1), 2}, {x_of_t(t2), 2}});
    }
    // Families on the second model curve: restrict to the component involved.
    auto Q = NumberField::rationals();
    if (family == "b2-inflection") {
        need(1);
        FieldElem t = params[0];
        require(!t.is_zero(), "t = 0");
        SectionCoeffs s{FieldElem(mpq_class(-1, 8)) / (t * t * t), FieldElem(mpq_class(3, 4)) / t,
                        FieldElem(mpq_class(3, 8)) * t};
        UnivariatePoly sp = s.poly(t.field());
        UnivariatePoly g = sp * sp - UnivariatePoly::x(t.field());  // against y^2 = x
        return finish_on(std::move(rep), s, g, {{t * t, 3}});
    }
    if (family == "b2-tangent") {
        need(2);
        FieldElem t = params[0], a = params[1];
        require(!t.is_zero(), "t = 0");
        FieldElem b = -(FieldElem(4) * a * t * t * t - FieldElem(1)) / (FieldElem(2) * t);
        FieldElem c = a * t * t * t * t + t / FieldElem(2);
        SectionCoeffs s{a, b, c};
        UnivariatePoly sp = s.poly(t.field());
        UnivariatePoly g = sp * sp - UnivariatePoly::x(t.field());
        return finish_on(std::move(rep), s, g, {{t * t, 2}});
    }
    if (family == "b2-conic-tangent") {
        need(2);
        FieldElem a = params[0], b = params[1];
        require(!(a == FieldElem(-1)), "a = -1 (section parallel to the line component)");
        // solve -16ac + 3a + 4b^2 - 12b - 16c + 12 = 0 for c
        FieldElem c = (FieldElem(3) * a + FieldElem(4) * b * b - FieldElem(12) * b +
                       FieldElem(12)) /
                      (FieldElem(16) * a + FieldElem(16));
        SectionCoeffs s{a, b, c};
        UnivariatePoly g = s.poly(a.field()) - line_l(a.field());  // against y = l(x)
        FieldElem x0 = -(b - FieldElem(mpq_class(3, 2))) / (FieldElem(2) * (a + FieldElem(1)));
        return finish_on(std::move(rep), s, g, {{x0, 2}});
    }
    if (family == "b2-bitangent") {
        need(1);
        FieldElem t = params[0];
        require(!t.is_zero(), "t = 0");
        require(!(FieldElem(2) * t + FieldElem(3)).is_zero(), "2t + 3 = 0");
        FieldElem den = t * t * (FieldElem(2) * t + FieldElem(3));
        FieldElem a = FieldElem(-1) / den;
        FieldElem b = FieldElem(3) * (FieldElem(2) * t + FieldElem(1)) /
                      (FieldElem(2) * t * (FieldElem(2) * t + FieldElem(3)));
        FieldElem c = FieldElem(3) * t / (FieldElem(2) * (FieldElem(2) * t + FieldElem(3)));
        SectionCoeffs s{a, b, c};
        UnivariatePoly sp = s.poly(t.field());
        UnivariatePoly g = sp * sp - UnivariatePoly::x(t.field());
        rep = finish_on(std::move(rep), s, g, {{t * t, 2}});
        // also tangent to the line component: a second check on a second
        // restriction, reported through `detail` and folded into pass
        UnivariatePoly h = sp - line_l(t.field());
        FieldElem x1 = -(b - FieldElem(mpq_class(3, 2))) / (FieldElem(2) * (a + FieldElem(1)));
        unsigned m = multiplicity_at(h, x1);
        rep.detail = "line-component tangency multiplicity " + std::to_string(m) + " at x = " +
                     x1.str();
        rep.pass = rep.pass && m >= 2;
        return rep;
    }
    (void)Q;
    throw std::domain_error("unknown family: " + family);
}

// -------------------------------------------------------------------- parsing

FieldElem parse_element(const std::string& text, std::shared_ptr<const NumberField> field) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated coefficient list");
        s = s.substr(1, s.size() - 2);
        std::vector<mpq_class> coords;
        std::istringstream is(s);
        std::string item;
        while (std::getline(is, item, ',')) {
            mpq_class q(item);
            q.canonicalize();
            coords.push_back(q);
        }
        if (coords.size() > field->degree())
            throw std::invalid_argument("more coordinates than the field degree");
        return FieldElem(std::move(field), std::move(coords));
    }
    mpq_class q(s);
    q.canonicalize();
    return FieldElem(std::move(field), {q});
}

std::shared_ptr<const NumberField> parse_field(const std::string& text) {
    if (text.empty() || text == "x" || text == "Q" || text == "q") return NumberField::rationals();
    std::string s = text;
    if (s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("field syntax: \"x\" for Q or \"[c0,...,1]\"");
    s = s.substr(1, s.size() - 2);
    std::vector<mpq_class> coeffs;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        mpq_class q(item);
        q.canonicalize();
        coeffs.push_back(q);
    }
    return std::make_shared<const NumberField>(std::move(coeffs));
}

}  // namespace sextic::curvegeom
