#include "htp/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace htp {

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int Laurent::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero");
    return terms_.begin()->first;
}

int Laurent::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero");
    return terms_.rbegin()->first;
}

Rational Laurent::coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::set(int exp, Rational c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) set(e, coefficient(e) + c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) set(e, coefficient(e) - c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coefficient(e1 + e2) + c1 * c2);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Laurent Laurent::shifted(int exp) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + exp] = c;
    return r;
}

Laurent Laurent::negated_q() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 == 0) ? c : -c;
    return r;
}

Rational Laurent::eval(const Rational& q0) const {
    if (q0 == 0) {
        if (!terms_.empty() && min_exponent() < 0)
            throw std::domain_error("laurent: pole at q = 0");
        return coefficient(0);
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational p(1);
        int a = e < 0 ? -e : e;
        for (int i = 0; i < a; ++i) p *= q0;
        if (e < 0) p = 1 / p;
        acc += c * p;
    }
    return acc;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest exponent first reads like a polynomial.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << " ";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// One term: [rational][ [*] q[^int] ]
Laurent parse_term(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("laurent: empty term");
    std::size_t qpos = s.find('q');
    if (qpos == std::string::npos) return Laurent::of(parse_rational(s));
    std::string coeff = s.substr(0, qpos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Rational c(1);
    if (coeff == "-")
        c = -1;
    else if (!coeff.empty() && coeff != "+")
        c = parse_rational(coeff);
    std::string rest = s.substr(qpos + 1);
    int e = 1;
    if (!rest.empty()) {
        if (rest[0] != '^') throw std::invalid_argument("laurent: bad term '" + raw + "'");
        std::string es = rest.substr(1);
        if (es.empty()) throw std::invalid_argument("laurent: bad exponent in '" + raw + "'");
        std::size_t i = (es[0] == '+' || es[0] == '-') ? 1 : 0;
        if (i == es.size()) throw std::invalid_argument("laurent: bad exponent in '" + raw + "'");
        for (; i < es.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(es[i])))
                throw std::invalid_argument("laurent: bad exponent in '" + raw + "'");
        e = std::atoi(es.c_str());
    }
    return Laurent::monomial(e, c);
}

}  // namespace

Laurent parse_laurent(const std::string& text) {
    // Split on top-level + and - (a sign directly after '^' or at the start of
    // a term binds to the number instead).
    Laurent acc;
    std::string cur;
    bool neg = false;
    bool any = false;
    auto flush = [&](bool next_neg) {
        if (cur.find_first_not_of(" \t") != std::string::npos) {
            Laurent t = parse_term(cur);
            acc += neg ? -t : t;
            any = true;
        } else if (neg && !any) {
            // leading '-': applies to the first real term
        }
        cur.clear();
        neg = next_neg;
    };
    char prev_sig = 0;  // last non-space char seen inside the current term
    bool at_term_start = true;
    for (char ch : text) {
        if (ch == '+' || ch == '-') {
            bool binds_to_number = at_term_start || prev_sig == '^';
            if (binds_to_number) {
                cur.push_back(ch);
            } else {
                flush(ch == '-');
                at_term_start = true;
                prev_sig = 0;
                continue;
            }
        } else {
            cur.push_back(ch);
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            prev_sig = ch;
            if (at_term_start && ch != '+' && ch != '-') at_term_start = false;
        }
    }
    if (cur.find_first_not_of(" \t") == std::string::npos)
        throw std::invalid_argument("laurent: empty input");
    Laurent t = parse_term(cur);
    acc += neg ? -t : t;
    return acc;
}

}  // namespace htp
