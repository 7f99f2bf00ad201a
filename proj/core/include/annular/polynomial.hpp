#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "annular/errors.hpp"

namespace annular {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer coefficient. Starts as a machine int64 and is promoted
// to an arbitrary-precision value either explicitly or by contagion when
// mixed with one. Narrow arithmetic is overflow-checked and throws
// CoefficientOverflow instead of wrapping; promotion is sticky, so a
// computation seeded big never silently narrows back.
class Coeff {
  public:
    Coeff() : v_(int64_t{0}) {}
    Coeff(int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Coeff(int n) : v_(int64_t{n}) {}
    explicit Coeff(BigInt n) : v_(std::move(n)) {}

    static Coeff big(int64_t n) { return Coeff(BigInt(n)); }

    bool is_big() const { return std::holds_alternative<BigInt>(v_); }
    bool is_zero() const {
        return is_big() ? std::get<BigInt>(v_).is_zero() : std::get<int64_t>(v_) == 0;
    }
    bool is_negative() const {
        return is_big() ? std::get<BigInt>(v_) < 0 : std::get<int64_t>(v_) < 0;
    }

    BigInt as_big() const {
        return is_big() ? std::get<BigInt>(v_) : BigInt(std::get<int64_t>(v_));
    }
    // Narrow value; throws CoefficientOverflow if a big value does not fit.
    int64_t narrow() const;

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    Coeff operator-() const;

    bool operator==(const Coeff& o) const {
        if (!is_big() && !o.is_big())
            return std::get<int64_t>(v_) == std::get<int64_t>(o.v_);
        return as_big() == o.as_big();
    }

    std::string str() const {
        return is_big() ? std::get<BigInt>(v_).str() : std::to_string(std::get<int64_t>(v_));
    }

  private:
    std::variant<int64_t, BigInt> v_;
};

// One monomial A^a_exp * t^t_exp. Map order (t first, then a) is the
// canonical term order used by every serializer.
struct TermKey {
    int t_exp = 0;
    int64_t a_exp = 0;
    auto operator<=>(const TermKey&) const = default;
};

struct DegreeStats {
    int64_t min_a = 0;
    int64_t max_a = 0;
    int64_t span() const { return max_a - min_a; }
};

// Element of Z[A, A^-1, t]. Never stores zero coefficients, so equality
// and serialization are canonical.
class SkeinPolynomial {
  public:
    SkeinPolynomial() = default;

    static SkeinPolynomial zero() { return {}; }
    static SkeinPolynomial one() { return monomial(1, 0, 0); }
    static SkeinPolynomial monomial(Coeff c, int64_t a_exp, int t_exp);
    // (-A^2 - A^-2)^k, expanded exactly. With big_coefficients false the
    // binomial coefficients must fit in int64 or CoefficientOverflow is
    // thrown.
    static SkeinPolynomial circle_power(int k, bool big_coefficients = false);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<TermKey, Coeff>& terms() const { return terms_; }
    Coeff coefficient(int64_t a_exp, int t_exp) const;

    SkeinPolynomial& add_term(const Coeff& c, int64_t a_exp, int t_exp);
    SkeinPolynomial& operator+=(const SkeinPolynomial& o);
    SkeinPolynomial& operator-=(const SkeinPolynomial& o);
    friend SkeinPolynomial operator+(SkeinPolynomial a, const SkeinPolynomial& b) {
        return a += b;
    }
    friend SkeinPolynomial operator-(SkeinPolynomial a, const SkeinPolynomial& b) {
        return a -= b;
    }
    SkeinPolynomial operator*(const SkeinPolynomial& o) const;
    bool operator==(const SkeinPolynomial&) const = default;

    // this * c * A^a_exp * t^t_exp
    SkeinPolynomial times_monomial(const Coeff& c, int64_t a_exp, int t_exp) const;
    // Substitution A -> A^-1 (t fixed).
    SkeinPolynomial mirrored_a() const;

    // Extremes of the A-degree; nullopt for the zero polynomial.
    std::optional<DegreeStats> a_degree_stats() const;
    // Largest t-exponent present; nullopt for the zero polynomial.
    std::optional<int> max_t_degree() const;

    // Canonical text: terms in map order joined by " + ", each term
    // "C*A^a*t^k" with zero-exponent factors omitted. Zero prints "0".
    std::string to_text() const;
    static SkeinPolynomial from_text(const std::string& text);

    // Compact JSON: {"terms":[{"a":...,"coef":"...","t":...},...]}
    std::string to_json() const;

  private:
    std::map<TermKey, Coeff> terms_;
};

}  // namespace annular
