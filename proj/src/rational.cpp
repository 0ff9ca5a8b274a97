#include "htp/rational.hpp"

#include <cctype>

namespace htp {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    // mpq_class accepts "p" and "p/q" but is lenient about garbage; vet first.
    std::size_t slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
        if (!check_int(s)) throw std::invalid_argument("rational: bad integer '" + text + "'");
        s = strip_plus(s);
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!check_int(num) || !check_int(den))
            throw std::invalid_argument("rational: bad fraction '" + text + "'");
        num = strip_plus(num);
        den = strip_plus(den);
        if (Integer(den) == 0) throw std::invalid_argument("rational: zero denominator");
        s = num + "/" + den;
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer double_factorial_odd(int n) {
    // (2n-1)!! = 1·3·5···(2n-1); n = 0 gives 1.
    Integer f = 1;
    for (int k = 3; k <= 2 * n - 1; k += 2) f *= k;
    return f;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

int rational_sign(const Rational& r) { return sgn(r); }

}  // namespace htp
