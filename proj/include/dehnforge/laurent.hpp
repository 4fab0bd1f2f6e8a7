#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dehnforge/lambda.hpp"
#include "dehnforge/rational.hpp"

namespace dehnforge {

/// Dense univariate polynomial over Q, trailing zeros trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) {
        if (c != 0) coeff_.push_back(std::move(c));
    }
    static Poly u_power(std::size_t k) {
        Poly p;
        p.coeff_.assign(k + 1, Rational(0));
        p.coeff_[k] = 1;
        return p;
    }

    const std::vector<Rational>& coeffs() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero

    void set_coeff(std::size_t k, Rational c) {
        if (k >= coeff_.size()) coeff_.resize(k + 1, Rational(0));
        coeff_[k] = std::move(c);
        trim();
    }

    Rational coeff(std::size_t k) const {
        return k < coeff_.size() ? coeff_[k] : Rational(0);
    }

    bool operator==(const Poly& o) const { return coeff_ == o.coeff_; }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
        for (std::size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeff_.size(); ++i)
            for (std::size_t j = 0; j < o.coeff_.size(); ++j)
                r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
        r.trim();
        return r;
    }

    /// Euclidean remainder.
    Poly operator%(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("poly mod zero");
        Poly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.coeff_.back() / d.coeff_.back();
            std::size_t shift = r.coeff_.size() - d.coeff_.size();
            for (std::size_t i = 0; i < d.coeff_.size(); ++i)
                r.coeff_[shift + i] -= f * d.coeff_[i];
            r.trim();
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        Rational lead = r.coeff_.back();
        for (auto& c : r.coeff_) c /= lead;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) v = v * x + *it;
        return v;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
    }

    std::vector<Rational> coeff_;
};

/// Element of the rational function field Q(u), kept reduced with monic
/// denominator.  This is the fraction field used for cohomology ranks of
/// Lambda complexes after the substitution u = q^{1/N}.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly(Rational(1))) {}
    RationalFunction(int c) : num_(Poly(Rational(c))), den_(Poly(Rational(1))) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        reduce();
    }
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly(Rational(1))) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        Rational lead = den_.coeffs().back();
        if (lead != 1) {
            Poly scale(1 / lead);
            num_ = num_ * scale;
            den_ = den_ * scale;
        }
    }

    static Poly divide_exact(const Poly& a, const Poly& d) {
        // long division, remainder known to vanish
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.coeffs().back() / d.coeffs().back();
            std::size_t shift = r.coeffs().size() - d.coeffs().size();
            q.set_coeff(shift, f);
            Poly sub = Poly::u_power(shift) * d * Poly(f);
            r = r - sub;
        }
        return q;
    }

    Poly num_, den_;
};

/// Interpret a Lambda element as an element of Q(u), u = q^{1/N}.  Negative
/// exponents become denominator powers of u.
inline RationalFunction lambda_to_rational_function(const LambdaElement& x, long N) {
    auto laurent = x.to_single_variable(N);
    if (laurent.empty()) return RationalFunction();
    long min_exp = laurent.begin()->first;
    long shift = min_exp < 0 ? -min_exp : 0;
    Poly num;
    for (const auto& [e, c] : laurent)
        num.set_coeff(static_cast<std::size_t>(e + shift), Rational(c));
    return RationalFunction(num, Poly::u_power(static_cast<std::size_t>(shift)));
}

/// Prime field Z/p for the mod-p rank mode.  p is carried at runtime.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v, long long p) : p_(p) {
        if (p_ <= 0) {  // characteristic not fixed yet; only zero is valid
            v_ = v;
            return;
        }
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    bool operator==(const Fp& o) const { return v_ == o.v_ && (p_ == o.p_ || v_ == 0); }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, field(o)); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, field(o)); }
    Fp operator-() const { return p_ ? Fp(-v_, p_) : *this; }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, field(o)); }
    Fp operator/(const Fp& o) const {
        if (o.v_ == 0) throw std::domain_error("division by zero in Z/p");
        return *this * o.inverse();
    }

    Fp inverse() const {
        // extended Euclid
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (r != 1) throw std::domain_error("non-invertible element in Z/p");
        return Fp(t, p_);
    }

private:
    long long field(const Fp& o) const { return p_ ? p_ : o.p_; }
    long long v_, p_;
};

}  // namespace dehnforge
