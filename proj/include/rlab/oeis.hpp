#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/rational.hpp"
#include "rlab/sequence.hpp"

namespace rlab {

struct OeisEntry {
    std::string id;  // "A" + six digits
    std::vector<Integer> terms;
};

struct OeisDatabase {
    std::vector<OeisEntry> entries;
    std::size_t skipped_lines = 0;
};

namespace detail {
inline bool valid_a_number(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < 7; ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}
}  // namespace detail

// Stripped-format lines: `Axxxxxx ,t1,t2,t3,...,`. Comment lines start
// with '#'; malformed lines are skipped and counted.
inline OeisDatabase oeis_load(std::istream& in) {
    OeisDatabase db;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        auto space = line.find(' ');
        if (space == std::string::npos) {
            ++db.skipped_lines;
            continue;
        }
        OeisEntry entry;
        entry.id = line.substr(0, space);
        if (!detail::valid_a_number(entry.id)) {
            ++db.skipped_lines;
            continue;
        }
        std::string rest = line.substr(space + 1);
        std::istringstream terms(rest);
        std::string tok;
        bool bad = false;
        while (std::getline(terms, tok, ',')) {
            if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                Integer v(tok);
                entry.terms.push_back(std::move(v));
            } catch (const std::invalid_argument&) {
                bad = true;
                break;
            }
        }
        if (bad || entry.terms.empty()) {
            ++db.skipped_lines;
            continue;
        }
        db.entries.push_back(std::move(entry));
    }
    return db;
}

inline OeisDatabase oeis_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return oeis_load(in);
}

struct OeisMatch {
    std::string id;
    std::size_t offset = 0;
};

// All entries containing the window as a contiguous run of at least
// min_match terms (the window may overhang the stored tail as long as the
// overlap is full and long enough). Rational inputs with non-unit
// denominators match nothing.
inline std::vector<OeisMatch> oeis_identify(const OeisDatabase& db, const SequenceWindow& a,
                                            std::size_t min_match) {
    std::vector<OeisMatch> out;
    if (a.empty()) return out;
    std::vector<Integer> win;
    for (const auto& v : a) {
        if (!is_integer(v)) return out;
        win.push_back(v.get_num());
    }
    for (const auto& entry : db.entries) {
        for (std::size_t off = 0; off < entry.terms.size(); ++off) {
            std::size_t overlap = std::min(win.size(), entry.terms.size() - off);
            if (overlap < min_match) break;  // later offsets only shrink it
            bool all = true;
            for (std::size_t i = 0; i < overlap; ++i)
                if (entry.terms[off + i] != win[i]) {
                    all = false;
                    break;
                }
            if (all) {
                out.push_back({entry.id, off});
                break;  // report the first (smallest) offset per entry
            }
        }
    }
    return out;
}

}  // namespace rlab
