#include "arcs.hpp"

#include <algorithm>
#include <map>

namespace excseq {

const char* arc_kind_name(ArcKind k) {
    switch (k) {
        case ArcKind::bridging_from_outer: return "bridging-from-outer";
        case ArcKind::bridging_from_inner: return "bridging-from-inner";
        case ArcKind::exterior_outer: return "exterior-outer";
        case ArcKind::exterior_inner: return "exterior-inner";
    }
    return "?";
}

const char* relation_name(PairRelation r) {
    switch (r) {
        case PairRelation::cross: return "cross";
        case PairRelation::cw: return "cw";
        case PairRelation::ccw: return "ccw";
        case PairRelation::disjoint: return "disjoint";
        case PairRelation::two_cycle: return "two-cycle";
    }
    return "?";
}

PairRelation mirrored(PairRelation r) {
    if (r == PairRelation::cw) return PairRelation::ccw;
    if (r == PairRelation::ccw) return PairRelation::cw;
    return r;
}

static ArcKind kind_of_class(StringClass c) {
    switch (c) {
        case StringClass::preprojective: return ArcKind::bridging_from_outer;
        case StringClass::preinjective: return ArcKind::bridging_from_inner;
        case StringClass::left_regular: return ArcKind::exterior_outer;
        case StringClass::right_regular: return ArcKind::exterior_inner;
    }
    return ArcKind::bridging_from_outer;
}

Arc arc_of(const StringModule& m) {
    Triple t = to_triple(m);
    StringClass c = classify(m);
    Arc a;
    a.i = t.i;
    a.j = t.j;
    a.lambda = c == StringClass::preinjective ? -t.l : t.l;
    a.kind = kind_of_class(c);
    return a;
}

StringModule module_of(const Quiver& q, const Arc& a) {
    if (a.i < 0 || a.i >= q.n || a.j < 0 || a.j >= q.n)
        throw std::invalid_argument("arc endpoints must be vertices");
    bool preinj = q.eps[a.i] == Sign::minus && q.eps[a.j] == Sign::plus;
    pos_t l = preinj ? -a.lambda : a.lambda;
    if (l < 0) throw std::invalid_argument("arc winding has the wrong sign for its boundaries");
    return from_triple(q, a.i, a.j, l);
}

Strand strand_of(const StringModule& m) {
    StringClass c = classify(m);
    if (c == StringClass::preinjective || c == StringClass::right_regular) {
        // Anchor so the end lands in the fundamental domain {1, ..., n}.
        Triple t = to_triple(m);
        pos_t hi = t.j == 0 ? m.quiver.n : t.j;
        return {hi - m.length, hi};
    }
    return {m.lift_lo(), m.lift_hi()};
}

namespace {

// Local clockwise verdict at a shared endpoint x of two monotone strands.
// dir: does the strand extend right (true) or left of x. For opposite
// directions the boundary decides; for equal directions the vertical order
// near x, forced at the nearest interior endpoint, decides.
struct Germ {
    bool right;  // strand continues to the right of x
    pos_t far;   // the strand's other endpoint
};

// true  -> A is locally clockwise of B
bool germ_clockwise(const Quiver& q, pos_t x, const Germ& a, const Germ& b) {
    if (a.right != b.right) {
        bool left_wins = q.lifted_sign(x) == Sign::plus;  // outer point: incoming-from-ccw side
        return left_wins ? !a.right : a.right;
    }
    if (a.right) {
        pos_t m = std::min(a.far, b.far);
        bool a_above = a.far > b.far ? q.lifted_sign(m) == Sign::minus
                                     : q.lifted_sign(m) == Sign::plus;
        return !a_above;  // among germs leaving clockwise the lower one leads
    }
    pos_t m = std::max(a.far, b.far);
    bool a_above = a.far < b.far ? q.lifted_sign(m) == Sign::minus
                                 : q.lifted_sign(m) == Sign::plus;
    return a_above;  // among germs arriving from counterclockwise the upper one leads
}

struct Contact {
    bool cross = false;
    bool u_cw = false;
    bool v_cw = false;
};

// Compare strand [a1,b1] with [a2,b2] (one translate of the second module).
Contact compare_translate(const Quiver& q, pos_t a1, pos_t b1, pos_t a2, pos_t b2) {
    Contact c;
    pos_t lo = std::max(a1, a2), hi = std::min(b1, b2);
    if (lo > hi) return c;
    if (lo == hi) {
        bool end1 = lo == a1 || lo == b1;
        bool end2 = lo == a2 || lo == b2;
        if (end1 && end2) {
            Germ g1{lo == a1, lo == a1 ? b1 : a1};
            Germ g2{lo == a2, lo == a2 ? b2 : a2};
            c.u_cw = germ_clockwise(q, lo, g1, g2);
            c.v_cw = germ_clockwise(q, lo, g2, g1);
        }
        return c;
    }
    // Shared endpoints first: with an overlap they come in equal direction.
    for (pos_t x : {lo, hi}) {
        bool end1 = x == a1 || x == b1;
        bool end2 = x == a2 || x == b2;
        if (end1 && end2) {
            Germ g1{x == a1, x == a1 ? b1 : a1};
            Germ g2{x == a2, x == a2 ? b2 : a2};
            c.u_cw = c.u_cw || germ_clockwise(q, x, g1, g2);
            c.v_cw = c.v_cw || germ_clockwise(q, x, g2, g1);
        }
    }
    // Forced vertical orders: endpoints of one strand interior to the other.
    // Two forced points with opposite orders make the monotone curves cross.
    int forced = 0;
    bool first_above = false;
    for (pos_t x : {lo, hi}) {
        bool end1 = (x == a1 || x == b1) && a2 < x && x < b2;
        bool end2 = (x == a2 || x == b2) && a1 < x && x < b1;
        if (!end1 && !end2) continue;
        // exactly one strand ends here, the other passes per the sign
        bool one_above = end2 ? q.lifted_sign(x) == Sign::minus    // 1 interior, 2 ends
                              : q.lifted_sign(x) == Sign::plus;    // 2 interior above iff minus
        if (forced == 0)
            first_above = one_above;
        else if (one_above != first_above)
            c.cross = true;
        ++forced;
    }
    return c;
}

}  // namespace

PairRelation pair_relation(const StringModule& u, const StringModule& v) {
    if (!same_quiver(u, v)) throw std::invalid_argument("pair_relation: different quivers");
    if (u == v) throw std::invalid_argument("pair_relation: modules must be distinct");
    if (!is_exceptional(u) || !is_exceptional(v))
        throw std::invalid_argument("pair_relation: modules must be exceptional");
    const Quiver& q = u.quiver;
    pos_t a1 = u.lift_lo(), b1 = u.lift_hi();
    pos_t a2 = v.lift_lo(), b2 = v.lift_hi();
    bool any_cross = false, u_cw = false, v_cw = false;
    // Translates of v that touch u at all.
    pos_t zlo = a1 - b2, zhi = b1 - a2;  // zn in [zlo, zhi]
    for (pos_t z = (zlo >= 0 ? (zlo + q.n - 1) / q.n : -((-zlo) / q.n));
         z * q.n <= zhi; ++z) {
        if (z * q.n < zlo) continue;
        Contact c = compare_translate(q, a1, b1, a2 + z * q.n, b2 + z * q.n);
        any_cross |= c.cross;
        u_cw |= c.u_cw;
        v_cw |= c.v_cw;
    }
    if (any_cross) return PairRelation::cross;
    if (u_cw && v_cw) return PairRelation::two_cycle;
    if (u_cw) return PairRelation::cw;
    if (v_cw) return PairRelation::ccw;
    return PairRelation::disjoint;
}

PairRelation relation_algebraic(const StringModule& u, const StringModule& v) {
    if (!same_quiver(u, v)) throw std::invalid_argument("relation_algebraic: different quivers");
    if (u == v) throw std::invalid_argument("relation_algebraic: modules must be distinct");
    if (!is_exceptional(u) || !is_exceptional(v))
        throw std::invalid_argument("relation_algebraic: modules must be exceptional");
    long long huv = dim_hom(u, v), hvu = dim_hom(v, u);
    long long euv = dim_ext(u, v), evu = dim_ext(v, u);
    bool uv_pair = hvu == 0 && evu == 0;  // (U,V) exceptional pair
    bool vu_pair = huv == 0 && euv == 0;
    if (uv_pair && vu_pair) return PairRelation::disjoint;
    if (uv_pair) return PairRelation::cw;
    if (vu_pair) return PairRelation::ccw;
    bool conn_both = !connections(u, v).empty() && !connections(v, u).empty();
    if (conn_both && huv == 0 && hvu == 0) return PairRelation::two_cycle;
    return PairRelation::cross;
}

ArcDiagram make_diagram(const Quiver& q, std::vector<StringModule> modules) {
    for (const auto& m : modules)
        if (m.quiver != q) throw std::invalid_argument("diagram: module over a different quiver");
    return {q, std::move(modules)};
}

static void check_shape(const ArcDiagram& d) {
    if (static_cast<int>(d.modules.size()) != d.quiver.n)
        throw std::invalid_argument("diagram must have exactly n arcs");
    for (size_t i = 0; i < d.modules.size(); ++i)
        for (size_t j = i + 1; j < d.modules.size(); ++j)
            if (d.modules[i] == d.modules[j])
                throw std::invalid_argument("diagram contains duplicate arcs");
}

// Edges of the local clockwise precedence digraph among exceptional,
// pairwise non-crossing arcs; cycle search by DFS.
static bool digraph_acyclic(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> state(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            if (state[x] == 0) {
                state[x] = 1;
                for (int y : adj[x]) {
                    if (state[y] == 1) return false;
                    if (state[y] == 0) stack.push_back(y);
                }
            } else {
                if (state[x] == 1) state[x] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::vector<DiagramViolation> diagram_violations(const ArcDiagram& d) {
    check_shape(d);
    std::vector<DiagramViolation> out;
    for (size_t i = 0; i < d.modules.size(); ++i)
        if (!is_exceptional(d.modules[i])) out.push_back({i, i, PairRelation::cross, true});
    if (!out.empty()) return out;
    size_t n = d.modules.size();
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            PairRelation r = pair_relation(d.modules[i], d.modules[j]);
            if (r == PairRelation::cross || r == PairRelation::two_cycle) {
                out.push_back({i, j, r, false});
            } else if (r == PairRelation::cw) {
                adj[i].push_back(static_cast<int>(j));
            } else if (r == PairRelation::ccw) {
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    if (!out.empty()) return out;
    if (!digraph_acyclic(adj)) out.push_back({0, 0, PairRelation::two_cycle, false});
    return out;
}

bool is_exceptional_diagram(const ArcDiagram& d) { return diagram_violations(d).empty(); }

std::optional<std::vector<StringModule>> order_collection(const ArcDiagram& d) {
    if (!is_exceptional_diagram(d)) return std::nullopt;
    size_t n = d.modules.size();
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            PairRelation r = pair_relation(d.modules[i], d.modules[j]);
            if (r == PairRelation::cw) {
                adj[i].push_back(static_cast<int>(j));
                indeg[j]++;
            } else if (r == PairRelation::ccw) {
                adj[j].push_back(static_cast<int>(i));
                indeg[i]++;
            }
        }
    }
    auto key = [&](int x) {
        static const int class_rank[4] = {3, 0, 2, 1};  // preinj < right-reg < left-reg < preproj
        const StringModule& m = d.modules[x];
        Arc a = arc_of(m);
        return std::tuple(class_rank[static_cast<int>(classify(m))], a.i, a.j, a.lambda);
    };
    std::vector<int> avail;
    for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) avail.push_back(static_cast<int>(i));
    std::vector<StringModule> order;
    while (!avail.empty()) {
        auto it = std::min_element(avail.begin(), avail.end(),
                                   [&](int a, int b) { return key(a) < key(b); });
        int x = *it;
        avail.erase(it);
        order.push_back(d.modules[x]);
        for (int y : adj[x])
            if (--indeg[y] == 0) avail.push_back(y);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

}  // namespace excseq
