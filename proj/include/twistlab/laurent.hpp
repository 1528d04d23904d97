#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twistlab {

/// Integer Laurent polynomial in q; exponent -> nonzero coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { add(0, c); }
    static LaurentPoly monomial(long long c, int e) {
        LaurentPoly p;
        p.add(e, c);
        return p;
    }

    const std::map<int, long long>& coefficients() const { return c_; }
    long long coefficient(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0 : it->second;
    }
    bool is_zero() const { return c_.empty(); }

    void add(int e, long long c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const { return LaurentPoly(*this) += o; }
    LaurentPoly operator-(const LaurentPoly& o) const { return LaurentPoly(*this) -= o; }
    LaurentPoly operator-() const { return LaurentPoly() - *this; }
    LaurentPoly operator*(const LaurentPoly& o) const;

    /// Value at q = x for x = +1 or -1 (or any integer without negative powers).
    long long evaluate(long long x) const;

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, long long> c_;
};

std::string to_string(const LaurentPoly& p);

using LaurentVector = std::vector<LaurentPoly>;
/// Square matrix acting on column vectors: (B v)_i = sum_j B[i][j] v_j.
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;
using IntMatrix = std::vector<std::vector<long long>>;

LaurentMatrix identity_laurent(int n);
LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentVector operator*(const LaurentMatrix& a, const LaurentVector& v);
LaurentVector operator-(const LaurentVector& v);
IntMatrix evaluate(const LaurentMatrix& m, long long q);

IntMatrix identity_int(int n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

} // namespace twistlab
