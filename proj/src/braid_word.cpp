#include <charconv>
#include <sstream>
#include <stdexcept>

#include "twistlab/twists.hpp"

namespace twistlab {

BraidWord parse_braid_word(std::string_view text, int n) {
    BraidWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int g = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), g);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("braid word: '" + tok + "' is not an integer");
        if (g == 0)
            throw std::invalid_argument("braid word: generator 0 is not allowed");
        if (g > n || -g > n)
            throw std::invalid_argument("braid word: generator " + tok + " outside [-" + std::to_string(n) + ", " +
                                        std::to_string(n) + "]");
        w.letters.push_back(g);
    }
    return w;
}

std::string to_string(const BraidWord& w) {
    std::string s;
    for (int g : w.letters) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(g);
    }
    return s;
}

void check_word(const BraidWord& w, int n) {
    for (int g : w.letters)
        if (g == 0 || g > n || -g > n)
            throw std::invalid_argument("braid word: letter " + std::to_string(g) + " outside generator range");
}

} // namespace twistlab
