#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rlab/rational.hpp"
#include "rlab/series.hpp"

namespace rlab {

// A finite window a_0..a_m of an exact sequence.
using SequenceWindow = std::vector<Rational>;

inline SequenceWindow window_of(const Series& s) { return s.coeffs(); }

inline Series series_of(const SequenceWindow& w) { return Series(w); }

inline SequenceWindow parse_sequence(std::string_view text) {
    SequenceWindow out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(parse_rational(tok));
    }
    return out;
}

inline std::string format_sequence(const SequenceWindow& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += to_string(w[i]);
    }
    return out;
}

inline bool prefix_equal(const SequenceWindow& got, const SequenceWindow& want) {
    if (got.size() < want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i]) return false;
    return true;
}

}  // namespace rlab
