#include "twistlab/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace twistlab {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void ModP::set_modulus(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ULL << 62))
        throw std::invalid_argument("modulus must be a prime below 2^62, got " + std::to_string(p));
    p_ = p;
}

ModP ModP::inverse() const {
    if (v_ == 0)
        throw std::domain_error("inverse of zero in F_p");
    // Fermat: v^(p-2)
    ModP base = *this, acc = from_raw(1);
    for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1)
            acc *= base;
        base *= base;
    }
    return acc;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const ModP& x) { return std::to_string(x.value()); }

template <>
Rational parse_scalar<Rational>(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

template <>
ModP parse_scalar<ModP>(std::string_view text) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed F_p element '" + std::string(text) + "'");
    return ModP(v);
}

} // namespace twistlab
