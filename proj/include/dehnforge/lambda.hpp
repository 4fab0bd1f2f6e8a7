#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dehnforge/rational.hpp"

namespace dehnforge {

/// Element of the coefficient ring Lambda: a finite integer combination of
/// rational powers of the formal variable q.  Canonical form throughout:
/// no zero coefficients are stored, so equality is map equality.
class LambdaElement {
public:
    using TermMap = std::map<Rational, Integer>;

    LambdaElement() = default;

    /// Single term c * q^e.
    LambdaElement(Integer coeff, Rational exponent) {
        if (coeff != 0) terms_.emplace(std::move(exponent), std::move(coeff));
    }

    static LambdaElement zero() { return LambdaElement(); }
    static LambdaElement one() { return constant(1); }
    static LambdaElement constant(Integer c) { return LambdaElement(std::move(c), Rational(0)); }
    static LambdaElement monomial(Integer c, Rational e) { return LambdaElement(std::move(c), std::move(e)); }
    static LambdaElement q_power(Rational e) { return LambdaElement(Integer(1), std::move(e)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const LambdaElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const LambdaElement& o) const { return !(*this == o); }

    LambdaElement& operator+=(const LambdaElement& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LambdaElement operator+(const LambdaElement& o) const {
        LambdaElement r = *this;
        r += o;
        return r;
    }

    LambdaElement operator-() const {
        LambdaElement r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LambdaElement operator-(const LambdaElement& o) const { return *this + (-o); }
    LambdaElement& operator-=(const LambdaElement& o) { return *this += -o; }

    /// Convolution product: exponents add, coefficients multiply.
    LambdaElement operator*(const LambdaElement& o) const {
        LambdaElement r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LambdaElement& operator*=(const LambdaElement& o) { return *this = *this * o; }

    LambdaElement scaled(const Integer& c) const {
        LambdaElement r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    /// Multiply by q^e.
    LambdaElement shifted(const Rational& e) const {
        LambdaElement r;
        for (const auto& [e0, c] : terms_) r.terms_.emplace(e0 + e, c);
        return r;
    }

    /// Minimal exponent present; nullopt encodes +infinity, for the zero
    /// element.  This is the energy-filtration level of the element.
    std::optional<Rational> order() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    bool has_positive_order() const {
        auto o = order();
        return !o || *o > 0;
    }

    bool has_nonnegative_order() const {
        auto o = order();
        return !o || *o >= 0;
    }

    /// Coefficient of q^e (zero when absent).
    Integer coefficient(const Rational& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Evaluate at q = mu.  Exact: only mu = 1 may be combined with
    /// fractional exponents; integral exponents admit any mu (nonzero when
    /// a negative exponent is present).
    Rational specialize(const Rational& mu) const {
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            if (mu == 1) {
                sum += Rational(c);
                continue;
            }
            if (!is_integral(e))
                throw std::domain_error(
                    "specialize: fractional power of non-unit base q = " + mu.str());
            Integer k = rat_num(e);
            if (mu == 0) {
                if (k < 0) throw std::domain_error("specialize: negative exponent at q = 0");
                if (k == 0) sum += Rational(c);
                continue;
            }
            Rational p(1);
            Integer n = k < 0 ? Integer(-k) : k;
            for (Integer i = 0; i < n; ++i) p *= mu;
            if (k < 0) p = 1 / p;
            sum += Rational(c) * p;
        }
        return sum;
    }

    /// Exponent map nu -> nu*N onto a Laurent polynomial in u = q^{1/N},
    /// returned as (integer exponent, coefficient) pairs.  N must be a
    /// common denominator of all exponents.
    std::map<long, Integer> to_single_variable(long N) const {
        if (N <= 0) throw std::invalid_argument("to_single_variable: N must be positive");
        std::map<long, Integer> out;
        for (const auto& [e, c] : terms_) {
            Rational scaled = e * N;
            if (!is_integral(scaled))
                throw std::domain_error("to_single_variable: " + std::to_string(N) +
                                        " is not a common denominator of exponent " + e.str());
            out.emplace(static_cast<long>(rat_num(scaled).convert_to<long long>()), c);
        }
        return out;
    }

    /// Smallest positive N with all exponents in (1/N)Z.
    Integer exponent_denominator_lcm() const {
        Integer n(1);
        for (const auto& [e, c] : terms_) n = fold_denominator_lcm(n, e);
        return n;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Integer a = c < 0 ? Integer(-c) : c;
            first = false;
            if (e == 0) {
                os << a.str();
                continue;
            }
            if (a != 1) os << a.str() << "*";
            os << "q^" << e.str();
        }
        return os.str();
    }

    /// External interface: list of {"num", "den", "coeff"} records, with the
    /// coefficient string-encoded so arbitrary precision round-trips exactly.
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [e, c] : terms_) {
            arr.push_back({{"num", rat_num(e).convert_to<long long>()},
                           {"den", rat_den(e).convert_to<long long>()},
                           {"coeff", c.str()}});
        }
        return arr;
    }

    static LambdaElement from_json(const nlohmann::json& j) {
        LambdaElement out;
        for (const auto& rec : j) {
            Rational e(Integer(rec.at("num").get<long long>()),
                       Integer(rec.at("den").get<long long>()));
            out.add_term(e, Integer(rec.at("coeff").get<std::string>()));
        }
        return out;
    }

private:
    void add_term(const Rational& e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline LambdaElement operator*(const Integer& c, const LambdaElement& x) { return x.scaled(c); }

}  // namespace dehnforge
