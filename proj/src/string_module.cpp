#include "string_module.hpp"

#include <algorithm>

namespace excseq {

const char* class_name(StringClass c) {
    switch (c) {
        case StringClass::preprojective: return "preprojective";
        case StringClass::preinjective: return "preinjective";
        case StringClass::left_regular: return "left-regular";
        case StringClass::right_regular: return "right-regular";
    }
    return "?";
}

static StringModule canonicalized(const Quiver& q, pos_t lo, pos_t hi) {
    if (hi <= lo) throw std::logic_error("empty lift interval");
    StringModule m;
    m.quiver = q;
    pos_t shift = static_cast<pos_t>(q.vmod(lo)) - lo;
    m.lift_start = lo + shift;
    m.length = hi - lo;
    return m;
}

StringModule from_interval(const Quiver& q, pos_t lo, pos_t hi) {
    return canonicalized(q, lo, hi);
}

StringModule from_triple(const Quiver& q, int i, int j, pos_t l) {
    if (i < 0 || i >= q.n || j < 0 || j >= q.n)
        throw std::invalid_argument("module endpoints must be vertices of the quiver");
    if (l < 0) throw std::invalid_argument("winding parameter l must be non-negative");
    pos_t step = q.vmod(j - i);
    pos_t k = l * q.n + step;
    if (k == 0)
        throw std::invalid_argument("(i,i;0) is not a string module");
    return canonicalized(q, i, i + k);
}

Triple to_triple(const StringModule& m) {
    Triple t;
    t.i = m.quiver.vmod(m.lift_lo());
    t.j = m.quiver.vmod(m.lift_hi());
    t.l = (m.length - m.quiver.vmod(t.j - t.i)) / m.quiver.n;
    return t;
}

StringClass classify(const StringModule& m) {
    Sign a = m.start_sign(), b = m.end_sign();
    if (a == Sign::plus && b == Sign::minus) return StringClass::preprojective;
    if (a == Sign::minus && b == Sign::plus) return StringClass::preinjective;
    if (a == Sign::plus) return StringClass::left_regular;
    return StringClass::right_regular;
}

std::vector<pos_t> dimension_vector(const StringModule& m) {
    std::vector<pos_t> d(m.quiver.n, 0);
    for (pos_t x = m.lift_lo() + 1; x <= m.lift_hi(); ++x) d[m.quiver.vmod(x)]++;
    return d;
}

std::vector<WalkLetter> walk_letters(const StringModule& m) {
    std::vector<WalkLetter> w;
    w.reserve(static_cast<size_t>(m.length - 1));
    for (pos_t x = m.lift_lo() + 1; x < m.lift_hi(); ++x)
        w.push_back({m.quiver.vmod(x), m.quiver.lifted_sign(x) == Sign::plus});
    return w;
}

bool is_exceptional(const StringModule& m) {
    StringClass c = classify(m);
    if (c == StringClass::preprojective || c == StringClass::preinjective) return true;
    Triple t = to_triple(m);
    return t.l == 0 && t.i != t.j;
}

int tube_rank(const StringModule& m) {
    StringClass c = classify(m);
    if (c == StringClass::left_regular) return m.quiver.outer_points();
    if (c == StringClass::right_regular) return m.quiver.inner_points();
    throw std::invalid_argument("tube_rank: module is not regular");
}

pos_t quasi_length(const StringModule& m) {
    StringClass c = classify(m);
    if (c != StringClass::left_regular && c != StringClass::right_regular)
        throw std::invalid_argument("quasi_length: module is not regular");
    Sign s = m.start_sign();
    pos_t rl = 0;
    for (pos_t x = m.lift_lo() + 1; x <= m.lift_hi(); ++x)
        rl += (m.quiver.lifted_sign(x) == s);
    return rl;
}

// First (resp. last) letter position in (lo, hi) carrying the given sign.
static std::optional<pos_t> first_letter_with_sign(const Quiver& q, pos_t lo, pos_t hi, Sign s) {
    for (pos_t x = lo + 1; x < hi; ++x)
        if (q.lifted_sign(x) == s) return x;
    return std::nullopt;
}
static std::optional<pos_t> last_letter_with_sign(const Quiver& q, pos_t lo, pos_t hi, Sign s) {
    for (pos_t x = hi - 1; x > lo; --x)
        if (q.lifted_sign(x) == s) return x;
    return std::nullopt;
}

std::optional<StringModule> hook_op(const StringModule& m, HookOp op, Side side) {
    const Quiver& q = m.quiver;
    pos_t lo = m.lift_lo(), hi = m.lift_hi();
    switch (op) {
        case HookOp::add_hook:
            if (side == Side::start) {
                if (q.lifted_sign(lo) != Sign::plus) return std::nullopt;
                return canonicalized(q, q.prev_with_sign(lo, Sign::plus), hi);
            } else {
                if (q.lifted_sign(hi) != Sign::minus) return std::nullopt;
                return canonicalized(q, lo, q.next_with_sign(hi, Sign::minus));
            }
        case HookOp::add_cohook:
            if (side == Side::start) {
                if (q.lifted_sign(lo) != Sign::minus) return std::nullopt;
                return canonicalized(q, q.prev_with_sign(lo, Sign::minus), hi);
            } else {
                if (q.lifted_sign(hi) != Sign::plus) return std::nullopt;
                return canonicalized(q, lo, q.next_with_sign(hi, Sign::plus));
            }
        case HookOp::delete_hook:
            if (side == Side::start) {
                auto x = first_letter_with_sign(q, lo, hi, Sign::plus);
                if (!x) return std::nullopt;
                return canonicalized(q, *x, hi);
            } else {
                auto x = last_letter_with_sign(q, lo, hi, Sign::minus);
                if (!x) return std::nullopt;
                return canonicalized(q, lo, *x);
            }
        case HookOp::delete_cohook:
            if (side == Side::start) {
                auto x = first_letter_with_sign(q, lo, hi, Sign::minus);
                if (!x) return std::nullopt;
                return canonicalized(q, *x, hi);
            } else {
                auto x = last_letter_with_sign(q, lo, hi, Sign::plus);
                if (!x) return std::nullopt;
                return canonicalized(q, lo, *x);
            }
    }
    return std::nullopt;
}

// tau: add a cohook at every end where possible; at the remaining ends
// delete a hook, scanning the walk extended by the additions already made.
// The module dies exactly when a deletion finds nothing or the two
// deletions cross.
std::optional<StringModule> tau(const StringModule& m) {
    const Quiver& q = m.quiver;
    pos_t lo = m.lift_lo(), hi = m.lift_hi();
    bool extend_start = q.lifted_sign(lo) == Sign::minus;
    bool extend_end = q.lifted_sign(hi) == Sign::plus;
    pos_t new_lo = extend_start ? q.prev_with_sign(lo, Sign::minus) : lo;
    pos_t new_hi = extend_end ? q.next_with_sign(hi, Sign::plus) : hi;
    if (!extend_start) {
        auto x = first_letter_with_sign(q, lo, extend_end ? new_hi : hi, Sign::plus);
        if (!x) return std::nullopt;
        new_lo = *x;
    }
    if (!extend_end) {
        auto x = last_letter_with_sign(q, extend_start ? new_lo : lo, hi, Sign::minus);
        if (!x) return std::nullopt;
        new_hi = *x;
    }
    if (new_lo >= new_hi) return std::nullopt;
    return canonicalized(q, new_lo, new_hi);
}

// tau_inv is the inverse boundary rotation: each endpoint steps one marked
// point of its own boundary, counterclockwise on the outer circle and
// clockwise on the inner one.
std::optional<StringModule> tau_inv(const StringModule& m) {
    const Quiver& q = m.quiver;
    pos_t lo = m.lift_lo(), hi = m.lift_hi();
    pos_t new_lo = q.lifted_sign(lo) == Sign::plus ? q.prev_with_sign(lo, Sign::plus)
                                                   : q.next_with_sign(lo, Sign::minus);
    pos_t new_hi = q.lifted_sign(hi) == Sign::plus ? q.prev_with_sign(hi, Sign::plus)
                                                   : q.next_with_sign(hi, Sign::minus);
    if (new_lo >= new_hi) return std::nullopt;
    StringModule r = canonicalized(q, new_lo, new_hi);
    if (tau(r) != m) return std::nullopt;  // injective: the rotation is not inverted by tau
    return r;
}

// Local sources (sinks) of the walk: positions where both incident letters
// point away from (into) the position. A string is projective exactly when
// it has a unique local source m and equals the full module of paths out of
// m; dually for injectives.
static std::vector<pos_t> local_sources(const StringModule& m) {
    const Quiver& q = m.quiver;
    std::vector<pos_t> out;
    for (pos_t x = m.lift_lo() + 1; x <= m.lift_hi(); ++x) {
        bool left_ok = (x == m.lift_lo() + 1) || q.lifted_sign(x - 1) == Sign::minus;
        bool right_ok = (x == m.lift_hi()) || q.lifted_sign(x) == Sign::plus;
        if (left_ok && right_ok) out.push_back(x);
    }
    return out;
}
static std::vector<pos_t> local_sinks(const StringModule& m) {
    const Quiver& q = m.quiver;
    std::vector<pos_t> out;
    for (pos_t x = m.lift_lo() + 1; x <= m.lift_hi(); ++x) {
        bool left_ok = (x == m.lift_lo() + 1) || q.lifted_sign(x - 1) == Sign::plus;
        bool right_ok = (x == m.lift_hi()) || q.lifted_sign(x) == Sign::minus;
        if (left_ok && right_ok) out.push_back(x);
    }
    return out;
}

static std::pair<pos_t, pos_t> projective_interval(const Quiver& q, pos_t at) {
    return {q.prev_with_sign(at, Sign::plus), q.next_with_sign(at - 1, Sign::minus)};
}
static std::pair<pos_t, pos_t> injective_interval(const Quiver& q, pos_t at) {
    return {q.prev_with_sign(at, Sign::minus), q.next_with_sign(at - 1, Sign::plus)};
}

StringModule projective_at(const Quiver& q, int v) {
    auto [lo, hi] = projective_interval(q, v);
    return canonicalized(q, lo, hi);
}
StringModule injective_at(const Quiver& q, int v) {
    auto [lo, hi] = injective_interval(q, v);
    return canonicalized(q, lo, hi);
}

std::optional<int> projective_vertex(const StringModule& m) {
    auto src = local_sources(m);
    if (src.size() != 1) return std::nullopt;
    auto [lo, hi] = projective_interval(m.quiver, src[0]);
    if (lo == m.lift_lo() && hi == m.lift_hi()) return m.quiver.vmod(src[0]);
    return std::nullopt;
}
std::optional<int> injective_vertex(const StringModule& m) {
    auto snk = local_sinks(m);
    if (snk.size() != 1) return std::nullopt;
    auto [lo, hi] = injective_interval(m.quiver, snk[0]);
    if (lo == m.lift_lo() && hi == m.lift_hi()) return m.quiver.vmod(snk[0]);
    return std::nullopt;
}

bool is_projective(const StringModule& m) { return projective_vertex(m).has_value(); }
bool is_injective(const StringModule& m) { return injective_vertex(m).has_value(); }

StringModule nakayama(const StringModule& m, NakayamaDir dir) {
    if (dir == NakayamaDir::forward) {
        auto v = projective_vertex(m);
        if (!v) throw std::invalid_argument("nakayama: module is not projective");
        return injective_at(m.quiver, *v);
    }
    auto v = injective_vertex(m);
    if (!v) throw std::invalid_argument("nakayama backward: module is not injective");
    return projective_at(m.quiver, *v);
}

StringModule dual(const StringModule& m) {
    StringModule d = m;
    d.quiver = opposite(m.quiver);
    return d;
}

bool same_quiver(const StringModule& a, const StringModule& b) { return a.quiver == b.quiver; }

}  // namespace excseq
