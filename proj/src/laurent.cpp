#include "twistlab/laurent.hpp"

#include <stdexcept>

namespace twistlab {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

} // namespace

void LaurentPoly::add(int e, long long c) {
    if (c == 0)
        return;
    auto [it, fresh] = c_.try_emplace(e, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_)
        add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_)
        add(e, checked_mul(-1, c));
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_)
            r.add(e1 + e2, checked_mul(c1, c2));
    return r;
}

long long LaurentPoly::evaluate(long long x) const {
    long long s = 0;
    for (const auto& [e, c] : c_) {
        long long term = c;
        if (x == 1) {
        } else if (x == -1) {
            if (e % 2 != 0)
                term = -term;
        } else {
            if (e < 0)
                throw std::domain_error("evaluate: negative power at q other than +-1");
            for (int k = 0; k < e; ++k)
                term = checked_mul(term, x);
        }
        s = checked_add(s, term);
    }
    return s;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        auto [e, c] = *it;
        long long mag = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += std::to_string(mag);
            continue;
        }
        if (mag != 1)
            s += std::to_string(mag) + "*";
        s += "q";
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

LaurentMatrix identity_laurent(int n) {
    LaurentMatrix m(n, LaurentVector(n));
    for (int i = 0; i < n; ++i)
        m[i][i] = LaurentPoly(1);
    return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    LaurentMatrix r(n, LaurentVector(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero())
                continue;
            for (std::size_t c = 0; c < m; ++c)
                if (!b[j][c].is_zero())
                    r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

LaurentVector operator*(const LaurentMatrix& a, const LaurentVector& v) {
    LaurentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += a[i][j] * v[j];
    return r;
}

LaurentVector operator-(const LaurentVector& v) {
    LaurentVector r;
    for (const auto& p : v)
        r.push_back(-p);
    return r;
}

IntMatrix evaluate(const LaurentMatrix& m, long long q) {
    IntMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& p : m[i])
            r[i].push_back(p.evaluate(q));
    return r;
}

IntMatrix identity_int(int n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < m; ++c) {
                long long t;
                if (__builtin_mul_overflow(a[i][j], b[j][c], &t) || __builtin_add_overflow(r[i][c], t, &r[i][c]))
                    throw std::overflow_error("integer matrix overflow");
            }
    return r;
}

} // namespace twistlab
