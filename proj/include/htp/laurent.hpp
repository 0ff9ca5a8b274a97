#pragma once

#include <map>
#include <string>

#include "htp/rational.hpp"

namespace htp {

// Laurent polynomial in the deformation parameter q with exact rational
// coefficients. Canonical form: no zero coefficients stored.
class Laurent {
  public:
    Laurent() = default;

    static Laurent of(Rational c) {
        Laurent l;
        if (c != 0) l.terms_[0] = std::move(c);
        return l;
    }
    static Laurent of_int(long c) { return of(Rational(c)); }
    static Laurent one() { return of_int(1); }
    static Laurent monomial(int exp, Rational c = Rational(1)) {
        Laurent l;
        if (c != 0) l.terms_[exp] = std::move(c);
        return l;
    }
    // q^exp
    static Laurent q_power(int exp) { return monomial(exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exponent() const;  // throws on zero
    int max_exponent() const;

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coefficient(int exp) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

    Laurent scaled(const Rational& c) const;
    Laurent shifted(int exp) const;  // multiply by q^exp

    // q ↦ −q  (flips coefficients of odd exponents)
    Laurent negated_q() const;

    // Exact evaluation at a rational point. Negative exponents at q0 = 0 are a
    // pole: std::domain_error.
    Rational eval(const Rational& q0) const;

    std::string to_string() const;  // highest exponent first, e.g. "2 + q^-1", "3/2 q^2"

  private:
    void set(int exp, Rational c);
    std::map<int, Rational> terms_;
};

Laurent parse_laurent(const std::string& text);

}  // namespace htp
