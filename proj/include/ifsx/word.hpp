#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ifsx {

// A finite word over the map alphabet {0, ..., N-1}.  Symbols are 0-based
// internally; every user-facing rendering is 1-based.
using Word = std::vector<int>;

inline Word word_concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// "(2,3)" in 1-based display form; "()" for the empty word.
inline std::string word_str(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i] + 1);
    }
    s += ")";
    return s;
}

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull; // FNV-1a
        for (int v : w) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace ifsx
