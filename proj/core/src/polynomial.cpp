#include "annular/polynomial.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace annular {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw CoefficientOverflow("coefficient addition overflowed int64; retry with big coefficients");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw CoefficientOverflow("coefficient subtraction overflowed int64; retry with big coefficients");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CoefficientOverflow("coefficient multiplication overflowed int64; retry with big coefficients");
    return r;
}

}  // namespace

int64_t Coeff::narrow() const {
    if (!is_big()) return std::get<int64_t>(v_);
    const BigInt& b = std::get<BigInt>(v_);
    if (b < std::numeric_limits<int64_t>::min() || b > std::numeric_limits<int64_t>::max())
        throw CoefficientOverflow("coefficient does not fit in int64");
    return b.convert_to<int64_t>();
}

Coeff& Coeff::operator+=(const Coeff& o) {
    if (is_big() || o.is_big())
        v_ = as_big() + o.as_big();
    else
        v_ = checked_add(std::get<int64_t>(v_), std::get<int64_t>(o.v_));
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    if (is_big() || o.is_big())
        v_ = as_big() - o.as_big();
    else
        v_ = checked_sub(std::get<int64_t>(v_), std::get<int64_t>(o.v_));
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
    if (is_big() || o.is_big())
        v_ = as_big() * o.as_big();
    else
        v_ = checked_mul(std::get<int64_t>(v_), std::get<int64_t>(o.v_));
    return *this;
}

Coeff Coeff::operator-() const {
    if (is_big()) return Coeff(BigInt(-std::get<BigInt>(v_)));
    int64_t n = std::get<int64_t>(v_);
    if (n == std::numeric_limits<int64_t>::min())
        throw CoefficientOverflow("coefficient negation overflowed int64; retry with big coefficients");
    return Coeff(-n);
}

SkeinPolynomial SkeinPolynomial::monomial(Coeff c, int64_t a_exp, int t_exp) {
    SkeinPolynomial p;
    p.add_term(c, a_exp, t_exp);
    return p;
}

SkeinPolynomial SkeinPolynomial::circle_power(int k, bool big_coefficients) {
    // (-A^2 - A^-2)^k = (-1)^k * sum_j C(k,j) A^(2k-4j)
    SkeinPolynomial p;
    if (k == 0) return one();
    BigInt binom = 1;
    const bool odd = (k % 2) != 0;
    for (int j = 0; j <= k; ++j) {
        BigInt c = odd ? BigInt(-binom) : binom;
        Coeff coef = big_coefficients ? Coeff(c) : Coeff(Coeff(c).narrow());
        p.add_term(coef, 2LL * k - 4LL * j, 0);
        binom = binom * (k - j) / (j + 1);  // exact at every step
    }
    return p;
}

Coeff SkeinPolynomial::coefficient(int64_t a_exp, int t_exp) const {
    auto it = terms_.find(TermKey{t_exp, a_exp});
    return it == terms_.end() ? Coeff(0) : it->second;
}

SkeinPolynomial& SkeinPolynomial::add_term(const Coeff& c, int64_t a_exp, int t_exp) {
    if (c.is_zero()) return *this;
    TermKey key{t_exp, a_exp};
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

SkeinPolynomial& SkeinPolynomial::operator+=(const SkeinPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(c, key.a_exp, key.t_exp);
    return *this;
}

SkeinPolynomial& SkeinPolynomial::operator-=(const SkeinPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(-c, key.a_exp, key.t_exp);
    return *this;
}

SkeinPolynomial SkeinPolynomial::operator*(const SkeinPolynomial& o) const {
    SkeinPolynomial p;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            p.add_term(ca * cb, ka.a_exp + kb.a_exp, ka.t_exp + kb.t_exp);
    return p;
}

SkeinPolynomial SkeinPolynomial::times_monomial(const Coeff& c, int64_t a_exp, int t_exp) const {
    SkeinPolynomial p;
    for (const auto& [key, coef] : terms_)
        p.add_term(coef * c, key.a_exp + a_exp, key.t_exp + t_exp);
    return p;
}

SkeinPolynomial SkeinPolynomial::mirrored_a() const {
    SkeinPolynomial p;
    for (const auto& [key, coef] : terms_) p.add_term(coef, -key.a_exp, key.t_exp);
    return p;
}

std::optional<DegreeStats> SkeinPolynomial::a_degree_stats() const {
    if (terms_.empty()) return std::nullopt;
    DegreeStats s;
    s.min_a = std::numeric_limits<int64_t>::max();
    s.max_a = std::numeric_limits<int64_t>::min();
    for (const auto& [key, coef] : terms_) {
        s.min_a = std::min(s.min_a, key.a_exp);
        s.max_a = std::max(s.max_a, key.a_exp);
    }
    return s;
}

std::optional<int> SkeinPolynomial::max_t_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.t_exp;
}

std::string SkeinPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, coef] : terms_) {
        if (!out.empty()) out += " + ";
        out += coef.str();
        if (key.a_exp != 0) out += "*A^" + std::to_string(key.a_exp);
        if (key.t_exp != 0) out += "*t^" + std::to_string(key.t_exp);
    }
    return out;
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

int64_t parse_exponent(const std::string& s, const std::string& what) {
    if (!looks_like_integer(s)) throw ParseError("bad " + what + " exponent '" + s + "'");
    try {
        return std::stoll(s);
    } catch (const std::exception&) {
        throw ParseError(what + " exponent out of range '" + s + "'");
    }
}

Coeff parse_coefficient(const std::string& s) {
    if (!looks_like_integer(s)) throw ParseError("bad coefficient '" + s + "'");
    try {
        return Coeff(static_cast<int64_t>(std::stoll(s)));
    } catch (const std::out_of_range&) {
        return Coeff(BigInt(s));  // wider than int64: keep it big
    } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + s + "'");
    }
}

}  // namespace

SkeinPolynomial SkeinPolynomial::from_text(const std::string& text) {
    SkeinPolynomial p;
    std::string body = trimmed(text);
    if (body.empty()) throw ParseError("empty polynomial text");
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t next = body.find('+', pos);
        std::string term = trimmed(body.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? body.size() + 1 : next + 1;
        if (term.empty()) throw ParseError("empty term in polynomial text");

        std::optional<Coeff> coef;
        std::optional<int64_t> a_exp;
        std::optional<int64_t> t_exp;
        std::size_t tpos = 0;
        while (tpos <= term.size()) {
            std::size_t star = term.find('*', tpos);
            std::string tok =
                trimmed(term.substr(tpos, star == std::string::npos ? star : star - tpos));
            tpos = star == std::string::npos ? term.size() + 1 : star + 1;
            if (tok.empty()) throw ParseError("empty factor in term '" + term + "'");
            if (tok.rfind("A^", 0) == 0) {
                if (a_exp) throw ParseError("duplicate A factor in term '" + term + "'");
                a_exp = parse_exponent(tok.substr(2), "A");
            } else if (tok.rfind("t^", 0) == 0) {
                if (t_exp) throw ParseError("duplicate t factor in term '" + term + "'");
                t_exp = parse_exponent(tok.substr(2), "t");
            } else {
                if (coef) throw ParseError("two coefficients in term '" + term + "'");
                coef = parse_coefficient(tok);
            }
        }
        int64_t t = t_exp.value_or(0);
        if (t < std::numeric_limits<int>::min() || t > std::numeric_limits<int>::max())
            throw ParseError("t exponent out of range");
        p.add_term(coef.value_or(Coeff(1)), a_exp.value_or(0), static_cast<int>(t));
    }
    return p;
}

std::string SkeinPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coef] : terms_) {
        terms.push_back({{"a", key.a_exp}, {"t", key.t_exp}, {"coef", coef.str()}});
    }
    nlohmann::json j{{"terms", terms}};
    return j.dump();
}

}  // namespace annular
