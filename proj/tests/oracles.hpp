// Test-only oracles: a verbatim walk-level replay of the hook/cohook rules
// (independent of the lift-coordinate arithmetic in the library) and corpus
// generators shared by the unit and acceptance suites.
#pragma once

#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "families.hpp"

namespace excseq::testing {

// A string as an explicit walk read counterclockwise: the lift position of
// its first support vertex plus the letter directions.
struct OracleWalk {
    Quiver q;
    pos_t first_vertex;
    std::vector<bool> letter_direct;

    static OracleWalk of(const StringModule& m) {
        OracleWalk w{m.quiver, m.lift_lo() + 1, {}};
        for (const auto& letter : walk_letters(m)) w.letter_direct.push_back(letter.direct);
        return w;
    }

    pos_t last_vertex() const { return first_vertex + static_cast<pos_t>(letter_direct.size()); }

    StringModule to_module() const {
        return from_interval(q, first_vertex - 1, last_vertex());
    }

    bool next_letter_direct_at_end() const {
        return q.lifted_sign(last_vertex()) == Sign::plus;
    }
    bool prev_letter_inverse_at_start() const {
        return q.lifted_sign(first_vertex - 1) == Sign::minus;
    }

    void append(bool direct) { letter_direct.push_back(direct); }
    void prepend(bool direct) {
        letter_direct.insert(letter_direct.begin(), direct);
        --first_vertex;
    }
};

inline std::optional<StringModule> oracle_hook_op(const StringModule& m, HookOp op, Side side) {
    OracleWalk w = OracleWalk::of(m);
    const Quiver& q = w.q;
    auto sign_after_end = [&] { return q.lifted_sign(w.last_vertex()); };
    auto sign_before_start = [&] { return q.lifted_sign(w.first_vertex - 1); };

    switch (op) {
        case HookOp::add_cohook:
            if (side == Side::end) {
                if (sign_after_end() != Sign::plus) return std::nullopt;
                w.append(true);
                while (sign_after_end() == Sign::minus) w.append(false);
            } else {
                if (sign_before_start() != Sign::minus) return std::nullopt;
                w.prepend(false);
                while (sign_before_start() == Sign::plus) w.prepend(true);
            }
            return w.to_module();
        case HookOp::add_hook:
            if (side == Side::start) {
                if (sign_before_start() != Sign::plus) return std::nullopt;
                w.prepend(true);
                while (sign_before_start() == Sign::minus) w.prepend(false);
            } else {
                if (sign_after_end() != Sign::minus) return std::nullopt;
                w.append(false);
                while (sign_after_end() == Sign::plus) w.append(true);
            }
            return w.to_module();
        case HookOp::delete_cohook:
            if (side == Side::end) {
                // last direct arrow plus all subsequent inverse arrows
                for (int t = static_cast<int>(w.letter_direct.size()) - 1; t >= 0; --t)
                    if (w.letter_direct[t]) {
                        w.letter_direct.resize(t);
                        return w.to_module();
                    }
                return std::nullopt;
            } else {
                // first inverse arrow plus all preceding direct arrows
                for (size_t t = 0; t < w.letter_direct.size(); ++t)
                    if (!w.letter_direct[t]) {
                        w.letter_direct.erase(w.letter_direct.begin(),
                                              w.letter_direct.begin() + t + 1);
                        w.first_vertex += static_cast<pos_t>(t) + 1;
                        return w.to_module();
                    }
                return std::nullopt;
            }
        case HookOp::delete_hook:
            if (side == Side::end) {
                for (int t = static_cast<int>(w.letter_direct.size()) - 1; t >= 0; --t)
                    if (!w.letter_direct[t]) {
                        w.letter_direct.resize(t);
                        return w.to_module();
                    }
                return std::nullopt;
            } else {
                for (size_t t = 0; t < w.letter_direct.size(); ++t)
                    if (w.letter_direct[t]) {
                        w.letter_direct.erase(w.letter_direct.begin(),
                                              w.letter_direct.begin() + t + 1);
                        w.first_vertex += static_cast<pos_t>(t) + 1;
                        return w.to_module();
                    }
                return std::nullopt;
            }
    }
    return std::nullopt;
}

inline std::vector<Quiver> proper_orientations(int n) {
    std::vector<Quiver> out;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        std::vector<Sign> eps;
        for (int v = 0; v < n; ++v)
            eps.push_back(mask & (1 << v) ? Sign::plus : Sign::minus);
        out.push_back(make_quiver(n, eps));
    }
    return out;
}

// All modules with the given bounds; optionally only the exceptional ones.
inline std::vector<StringModule> module_corpus(const Quiver& q, pos_t kmax, pos_t lambda_max,
                                               bool exceptional_only) {
    std::vector<StringModule> out;
    for (int i = 0; i < q.n; ++i)
        for (pos_t k = 1; k <= kmax; ++k) {
            StringModule m = from_interval(q, i, i + k);
            if (std::abs(arc_of(m).lambda) > lambda_max) continue;
            if (exceptional_only && !is_exceptional(m)) continue;
            out.push_back(m);
        }
    return out;
}

inline std::vector<StringModule> sample_corpus(const Quiver& q, pos_t kmax, pos_t lambda_max,
                                               bool exceptional_only, size_t count,
                                               std::mt19937_64& rng) {
    auto all = module_corpus(q, kmax, lambda_max, exceptional_only);
    std::vector<StringModule> out;
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (size_t s = 0; s < count; ++s) out.push_back(all[pick(rng)]);
    return out;
}

}  // namespace excseq::testing
