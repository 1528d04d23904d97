#include "twistlab/elliptic.hpp"

#include <cctype>
#include <stdexcept>

namespace twistlab {

namespace {

long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("elliptic matrix overflow");
    return r;
}

long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("elliptic matrix overflow");
    return r;
}

// word := factor* ; factor := atom ('^' int)? ; atom := name | '(' word ')'
class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    Mat2 parse() {
        Mat2 m = word();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return m;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("elliptic word: " + what + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    Mat2 word() {
        Mat2 m;
        for (;;) {
            skip();
            if (pos_ == s_.size() || s_[pos_] == ')')
                return m;
            m = m * factor();
        }
    }

    Mat2 factor() {
        Mat2 m = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
                ++pos_;
            std::size_t digits = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ == digits)
                fail("expected integer exponent");
            if (pos_ - digits > 9)
                fail("exponent too large");
            m = m.power(std::stoll(std::string(s_.substr(start, pos_ - start))));
        }
        return m;
    }

    Mat2 atom() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            Mat2 m = word();
            if (pos_ == s_.size() || s_[pos_] != ')')
                fail("missing ')'");
            ++pos_;
            return m;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected generator");
        return elliptic_generator(s_.substr(start, pos_ - start));
    }
};

} // namespace

Mat2 Mat2::inverse() const {
    long long dt = det();
    if (dt != 1 && dt != -1)
        throw std::domain_error("Mat2::inverse: determinant is not a unit");
    Mat2 r;
    r.a = {{{a[1][1] * dt, -a[0][1] * dt}, {-a[1][0] * dt, a[0][0] * dt}}};
    return r;
}

Mat2 Mat2::power(long long k) const {
    Mat2 base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
    Mat2 r;
    while (e) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

Mat2 Mat2::operator-() const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[i][j] = mul(-1, a[i][j]);
    return r;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[i][j] = add(mul(x.a[i][0], y.a[0][j]), mul(x.a[i][1], y.a[1][j]));
    return r;
}

MukaiVector operator*(const Mat2& m, const MukaiVector& v) {
    return {add(mul(m.a[0][0], v.r), mul(m.a[0][1], v.d)), add(mul(m.a[1][0], v.r), mul(m.a[1][1], v.d))};
}

std::string to_string(const Mat2& m) {
    return "[[" + std::to_string(m.a[0][0]) + "," + std::to_string(m.a[0][1]) + "],[" + std::to_string(m.a[1][0]) + "," +
           std::to_string(m.a[1][1]) + "]]";
}

long long elliptic_euler_form(const MukaiVector& a, const MukaiVector& b) { return a.r * b.d - a.d * b.r; }

Mat2 twist_matrix(const MukaiVector& s) {
    Mat2 m;
    for (int j = 0; j < 2; ++j) {
        MukaiVector e{j == 0 ? 1 : 0, j == 1 ? 1 : 0};
        long long c = elliptic_euler_form(s, e);
        m.a[0][j] = e.r - c * s.r;
        m.a[1][j] = e.d - c * s.d;
    }
    return m;
}

Mat2 elliptic_generator(std::string_view name) {
    if (name.starts_with("T_"))
        name.remove_prefix(2);
    if (name == "O" || name == "L")
        return twist_matrix({1, 0});
    if (name == "Op")
        return twist_matrix({0, 1});
    throw std::invalid_argument("unknown elliptic generator '" + std::string(name) + "' (expected O, Op or L)");
}

Mat2 elliptic_word(std::string_view word) { return WordParser(word).parse(); }

} // namespace twistlab
