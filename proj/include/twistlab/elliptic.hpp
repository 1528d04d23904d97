#pragma once

#include <array>
#include <string>
#include <string_view>

namespace twistlab {

/// (rank, degree) of a sheaf on an elliptic curve.
struct MukaiVector {
    long long r = 0;
    long long d = 0;
    bool operator==(const MukaiVector&) const = default;
};

/// 2x2 integer matrix acting on the column (r, d).
struct Mat2 {
    std::array<std::array<long long, 2>, 2> a{{{1, 0}, {0, 1}}};

    static Mat2 identity() { return {}; }
    long long det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    Mat2 inverse() const; // requires det = +-1
    Mat2 power(long long k) const;
    Mat2 operator-() const;
    bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
MukaiVector operator*(const Mat2& m, const MukaiVector& v);
std::string to_string(const Mat2& m);

/// chi((r,d),(r',d')) = r d' - d r'.
long long elliptic_euler_form(const MukaiVector& a, const MukaiVector& b);

/// Twist shadow v -> v - chi(s, v) s for a spherical class s.
Mat2 twist_matrix(const MukaiVector& s);

/// Generator by name: "O"/"T_O", "Op"/"T_Op", "L"/"T_L", L a degree-0 line
/// bundle. Throws std::invalid_argument on anything else.
Mat2 elliptic_generator(std::string_view name);

/// Word over O, Op, L with ^k exponents (k may be negative) and parenthesized
/// groups, e.g. "(O Op)^6" or "L^-1 O". Matrices multiply in written order,
/// as functors compose. Throws std::invalid_argument on malformed input.
Mat2 elliptic_word(std::string_view word);

inline bool is_identity(const Mat2& m) { return m == Mat2::identity(); }
inline bool is_central(const Mat2& m) { return is_identity(m) || is_identity(-m); }

} // namespace twistlab
