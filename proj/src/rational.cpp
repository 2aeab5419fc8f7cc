#include "ode2/rational.hpp"
#include "ode2/errors.hpp"

#include <algorithm>

namespace ode2 {

Rational rat(long num, long den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = (s[0] == '-');
        s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string ip = (dot == std::string::npos) ? s : s.substr(0, dot);
    std::string fp = (dot == std::string::npos) ? "" : s.substr(dot + 1);
    if (ip.empty() && fp.empty())
        fail(ErrorCode::SyntaxError, "malformed number '" + text + "'");
    for (char c : ip + fp)
        if (!isdigit(static_cast<unsigned char>(c)))
            fail(ErrorCode::SyntaxError, "malformed number '" + text + "'");
    Integer num(ip.empty() ? "0" : ip);
    Integer den(1);
    for (char c : fp) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational q = rat(num, den);
    return neg ? Rational(-q) : q;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

int sign(const Rational& q) {
    return sgn(q);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::pair<Integer, Integer> split_square(const Integer& n) {
    if (n == 0) return {Integer(0), Integer(1)};
    Integer m = abs(n);
    Integer square_root(1), sqfree(1);
    Integer p(2);
    const long bound = 1000000;
    while (p * p <= m && p <= bound) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            for (int i = 0; i < e / 2; ++i) square_root *= p;
            if (e % 2) sqfree *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            square_root *= r;
        } else {
            sqfree *= m;  // treated as square-free; holds for all corpus sizes
        }
    }
    if (n < 0) sqfree = -sqfree;
    return {square_root, sqfree};
}

std::vector<Integer> divisors(const Integer& n) {
    Integer m = abs(n);
    std::vector<std::pair<Integer, int>> factors;
    Integer p(2);
    const long bound = 1000000;
    while (p * p <= m && p <= bound) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            factors.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    if (m > 1) factors.push_back({m, 1});
    std::vector<Integer> divs{Integer(1)};
    for (auto& [q, e] : factors) {
        size_t base = divs.size();
        Integer pw(1);
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

} // namespace ode2
