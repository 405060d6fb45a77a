#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "rlab/rational.hpp"
#include "rlab/report.hpp"
#include "rlab/sequence.hpp"

namespace rlab {

// Witness for e_n e_{n-4} = alpha e_{n-1} e_{n-3} + beta e_{n-2}^2 on a
// verified index window. `degenerate` marks an underdetermined fit, in
// which case (alpha, beta) is the canonical representative of the
// solution family: |beta| minimal, then |alpha| minimal, preferring
// nonnegative values.
struct SomosWitness {
    Rational alpha;
    Rational beta;
    std::size_t window_begin = 4;
    std::size_t window_end = 4;  // inclusive
    bool degenerate = false;
};

struct NoWitness {
    std::size_t first_violation = 0;
};

using SomosDetection = std::variant<SomosWitness, NoWitness>;

namespace detail {
// Window n as a linear constraint u*alpha + v*beta = w (product form,
// division-free).
struct SomosRow {
    Rational u, v, w;
    std::size_t index;
};

inline SomosRow somos_row(const SequenceWindow& e, std::size_t n) {
    return {e[n - 1] * e[n - 3], e[n - 2] * e[n - 2], e[n] * e[n - 4], n};
}
}  // namespace detail

// Window-by-window check of the Somos-4 relation in product form; windows
// with e_{n-4} = 0 are skipped and flagged rather than divided through.
inline ClaimResult verify_somos4(const SequenceWindow& e, const Rational& alpha,
                                 const Rational& beta) {
    if (e.size() < 5) throw InsufficientTerms("Somos-4 needs 5 terms");
    ClaimResult out;
    out.name = "somos4(" + to_string(alpha) + "," + to_string(beta) + ")";
    for (std::size_t n = 4; n < e.size(); ++n) {
        WindowCheck wc{n, CheckStatus::Pass, ""};
        if (e[n - 4] == 0) {
            wc.status = CheckStatus::Skipped;
            wc.note = "zero e[n-4]";
        } else {
            auto row = detail::somos_row(e, n);
            if (row.w != alpha * row.u + beta * row.v) {
                wc.status = CheckStatus::Fail;
                if (!out.first_failure) out.first_failure = n;
            }
        }
        out.windows.push_back(wc);
    }
    out.status = out.first_failure ? CheckStatus::Fail : CheckStatus::Pass;
    return out;
}

// Fits (alpha, beta) from the first nonsingular 2x2 system of window
// constraints, then verifies every window. When all candidate systems are
// singular the constraint family is solved for its canonical
// representative and the degenerate flag is set.
inline SomosDetection detect_somos4(const SequenceWindow& e) {
    if (e.size() < 6) throw InsufficientTerms("detection needs 6 terms");
    std::vector<detail::SomosRow> rows;
    for (std::size_t n = 4; n < e.size(); ++n) {
        auto r = detail::somos_row(e, n);
        if (r.u != 0 || r.v != 0 || r.w != 0) rows.push_back(r);
    }
    Rational alpha, beta;
    bool degenerate = true;
    for (std::size_t i = 0; degenerate && i + 1 < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            Rational det = rows[i].u * rows[j].v - rows[j].u * rows[i].v;
            if (det == 0) continue;
            alpha = (rows[i].w * rows[j].v - rows[j].w * rows[i].v) / det;
            beta = (rows[i].u * rows[j].w - rows[j].u * rows[i].w) / det;
            degenerate = false;
            break;
        }
    if (degenerate) {
        // all constraints parallel: pick |beta| minimal, then |alpha|
        alpha = 0;
        beta = 0;
        for (const auto& r : rows) {
            if (r.u != 0) {
                alpha = r.w / r.u;  // beta = 0 admissible
                break;
            }
            if (r.v != 0) {
                beta = r.w / r.v;
                break;
            }
            if (r.w != 0) return NoWitness{r.index};  // 0 = w != 0: unsatisfiable
        }
    }
    auto check = verify_somos4(e, alpha, beta);
    if (check.first_failure) return NoWitness{*check.first_failure};
    return SomosWitness{alpha, beta, 4, e.size() - 1, degenerate};
}

}  // namespace rlab
