#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twistlab {

using Rational = mpq_class;

/// Element of the prime field F_p. The modulus is process-wide; set it once
/// with set_modulus() before constructing values.
class ModP {
public:
    ModP() = default;
    ModP(long long v) : v_(reduce(v)) {}

    static void set_modulus(std::uint64_t p);
    static std::uint64_t modulus() { return p_; }

    std::uint64_t value() const { return v_; }

    ModP operator+(ModP o) const { return from_raw((v_ + o.v_) % p_); }
    ModP operator-(ModP o) const { return from_raw((v_ + p_ - o.v_) % p_); }
    ModP operator*(ModP o) const { return from_raw(static_cast<std::uint64_t>((unsigned __int128)v_ * o.v_ % p_)); }
    ModP operator-() const { return from_raw((p_ - v_) % p_); }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }
    ModP inverse() const;
    ModP operator/(ModP o) const { return *this * o.inverse(); }

    bool operator==(const ModP&) const = default;

private:
    static ModP from_raw(std::uint64_t v) {
        ModP r;
        r.v_ = v;
        return r;
    }
    static std::uint64_t reduce(long long v) {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    std::uint64_t v_ = 0;
    static inline std::uint64_t p_ = 32003;
};

bool is_prime(std::uint64_t p);

// Uniform helpers so templated code can treat both fields alike.

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ModP& x) { return x.value() == 0; }

inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline ModP inverse(const ModP& x) { return x.inverse(); }

std::string to_string(const Rational& x);
std::string to_string(const ModP& x);

template <class K>
K parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
ModP parse_scalar<ModP>(std::string_view text);

template <class K>
std::string field_name();
template <>
inline std::string field_name<Rational>() { return "Q"; }
template <>
inline std::string field_name<ModP>() { return "F_" + std::to_string(ModP::modulus()); }

} // namespace twistlab
