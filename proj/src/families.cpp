#include "families.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace excseq {

namespace {

StringModule module_from_interval(const Quiver& q, pos_t lo, pos_t hi) {
    if (lo > hi) std::swap(lo, hi);
    return from_interval(q, lo, hi);
}

}  // namespace

StringModule dehn_twist(const StringModule& m, TwistDir dir) {
    const Quiver& q = m.quiver;
    pos_t shift = dir == TwistDir::cw ? q.n : -q.n;
    pos_t lo = m.lift_lo(), hi = m.lift_hi();
    if (q.lifted_sign(lo) == Sign::minus) lo += shift;
    if (q.lifted_sign(hi) == Sign::minus) hi += shift;
    return module_from_interval(q, lo, hi);
}

ArcDiagram dehn_twist(const ArcDiagram& d, TwistDir dir) {
    ArcDiagram out;
    out.quiver = d.quiver;
    out.modules.reserve(d.modules.size());
    for (const auto& m : d.modules) out.modules.push_back(dehn_twist(m, dir));
    return out;
}

StringModule elementary_twist(const StringModule& m, BoundarySide boundary, TwistDir dir) {
    const Quiver& q = m.quiver;
    Sign bs = boundary == BoundarySide::inner ? Sign::minus : Sign::plus;
    pos_t lo = m.lift_lo(), hi = m.lift_hi();
    bool touched = false;
    if (q.lifted_sign(lo) == bs) {
        lo = dir == TwistDir::cw ? q.next_with_sign(lo, bs) : q.prev_with_sign(lo, bs);
        touched = true;
    }
    if (q.lifted_sign(hi) == bs) {
        hi = dir == TwistDir::cw ? q.next_with_sign(hi, bs) : q.prev_with_sign(hi, bs);
        touched = true;
    }
    if (!touched) return m;
    return module_from_interval(q, lo, hi);
}

std::vector<StringModule> tau_collection(const std::vector<StringModule>& c, bool transjective) {
    if (!transjective)
        for (const auto& m : c)
            if (is_projective(m))
                throw std::invalid_argument("tau_collection: projective member in module mode");
    std::vector<StringModule> out;
    out.reserve(c.size());
    for (const auto& m : c) {
        StringModule t = elementary_twist(m, BoundarySide::outer, TwistDir::cw);
        out.push_back(elementary_twist(t, BoundarySide::inner, TwistDir::ccw));
    }
    return out;
}

bool is_small(const ArcDiagram& d) {
    for (const auto& m : d.modules)
        if (arc_of(m).lambda != 0) return false;
    return true;
}

namespace {

enum class BridgingContent { none, all_preprojective, all_preinjective, mixed };

BridgingContent bridging_content(const ArcDiagram& d) {
    bool pp = false, pi = false;
    for (const auto& m : d.modules) {
        StringClass c = classify(m);
        pp |= c == StringClass::preprojective;
        pi |= c == StringClass::preinjective;
    }
    if (!pp && !pi) return BridgingContent::none;
    if (pp && pi) return BridgingContent::mixed;
    return pp ? BridgingContent::all_preprojective : BridgingContent::all_preinjective;
}

std::vector<StringModule> sorted_modules(const ArcDiagram& d) {
    auto ms = d.modules;
    std::sort(ms.begin(), ms.end(), [](const StringModule& a, const StringModule& b) {
        return std::pair(a.lift_start, a.length) < std::pair(b.lift_start, b.length);
    });
    return ms;
}

}  // namespace

Family canonical_small(const ArcDiagram& d) {
    if (!is_exceptional_diagram(d))
        throw std::invalid_argument("canonical_small: diagram is not exceptional");
    ArcDiagram cur = d;
    long long z = 0;  // maintains d = cw^z(cur)
    pos_t guard = 2;
    for (const auto& m : d.modules) guard += std::abs(arc_of(m).lambda);
    while (!is_small(cur)) {
        if (--guard < 0) throw std::logic_error("canonical_small: windings do not settle");
        bool positive = false;
        for (const auto& m : cur.modules) positive |= arc_of(m).lambda > 0;
        cur = dehn_twist(cur, positive ? TwistDir::ccw : TwistDir::cw);
        z += positive ? 1 : -1;
    }
    // Orbits contain at most two small diagrams; when there are two, the
    // all-preinjective one is the clockwise neighbour of the canonical
    // all-preprojective representative.
    if (bridging_content(cur) == BridgingContent::all_preinjective) {
        cur = dehn_twist(cur, TwistDir::cw);
        z -= 1;
    }
    return {cur, z};
}

std::optional<long long> same_family(const ArcDiagram& c1, const ArcDiagram& c2) {
    Family f1 = canonical_small(c1);
    Family f2 = canonical_small(c2);
    if (f1.canonical.quiver != f2.canonical.quiver) return std::nullopt;
    if (sorted_modules(f1.canonical) != sorted_modules(f2.canonical)) return std::nullopt;
    return f2.z - f1.z;
}

namespace {

struct CandidateTable {
    std::vector<StringModule> mods;
    std::vector<std::vector<PairRelation>> rel;  // rel[i][j], i < j
};

CandidateTable build_candidates(const Quiver& q, pos_t lambda_max) {
    CandidateTable t;
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            if (i == j) continue;
            bool bridging = q.eps[i] != q.eps[j];
            pos_t lmax = bridging ? lambda_max : 0;
            for (pos_t l = 0; l <= lmax; ++l) t.mods.push_back(from_triple(q, i, j, l));
        }
    std::sort(t.mods.begin(), t.mods.end(), [](const StringModule& a, const StringModule& b) {
        Arc x = arc_of(a), y = arc_of(b);
        return std::tuple(static_cast<int>(x.kind), x.i, x.j, x.lambda) <
               std::tuple(static_cast<int>(y.kind), y.i, y.j, y.lambda);
    });
    size_t m = t.mods.size();
    t.rel.assign(m, std::vector<PairRelation>(m, PairRelation::disjoint));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            t.rel[i][j] = pair_relation(t.mods[i], t.mods[j]);
            t.rel[j][i] = mirrored(t.rel[i][j]);
        }
    return t;
}

bool subset_acyclic(const CandidateTable& t, const std::vector<size_t>& chosen) {
    size_t k = chosen.size();
    std::vector<std::vector<int>> adj(k);
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            if (t.rel[chosen[a]][chosen[b]] == PairRelation::cw)
                adj[a].push_back(static_cast<int>(b));
        }
    // Kahn: acyclic iff all nodes drain.
    std::vector<int> indeg(k, 0);
    for (size_t a = 0; a < k; ++a)
        for (int b : adj[a]) indeg[b]++;
    std::vector<int> queue;
    for (size_t a = 0; a < k; ++a)
        if (indeg[a] == 0) queue.push_back(static_cast<int>(a));
    size_t seen = 0;
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        ++seen;
        for (int y : adj[x])
            if (--indeg[y] == 0) queue.push_back(y);
    }
    return seen == k;
}

void search(const CandidateTable& t, size_t from, std::vector<size_t>& chosen, size_t want,
            std::vector<ArcDiagram>& out, const Quiver& q) {
    if (chosen.size() == want) {
        std::vector<StringModule> mods;
        mods.reserve(want);
        for (size_t idx : chosen) mods.push_back(t.mods[idx]);
        out.push_back(make_diagram(q, std::move(mods)));
        return;
    }
    for (size_t i = from; i < t.mods.size(); ++i) {
        if (t.mods.size() - i < want - chosen.size()) break;
        bool ok = true;
        for (size_t idx : chosen) {
            PairRelation r = t.rel[idx][i];
            if (r == PairRelation::cross || r == PairRelation::two_cycle) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(i);
        if (subset_acyclic(t, chosen)) search(t, i + 1, chosen, want, out, q);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<ArcDiagram> enumerate_collections(const Quiver& q, pos_t lambda_max) {
    if (lambda_max < 0) throw std::invalid_argument("lambda_max must be non-negative");
    CandidateTable t = build_candidates(q, lambda_max);
    std::vector<ArcDiagram> out;
    std::vector<size_t> chosen;
    search(t, 0, chosen, static_cast<size_t>(q.n), out, q);
    return out;
}

std::vector<ArcDiagram> enumerate_small_diagrams(const Quiver& q) {
    return enumerate_collections(q, 0);
}

long long count_families(const Quiver& q) {
    auto smalls = enumerate_small_diagrams(q);
    std::set<std::vector<std::pair<pos_t, pos_t>>> canon;
    for (const auto& d : smalls) {
        Family f = canonical_small(d);
        std::vector<std::pair<pos_t, pos_t>> key;
        for (const auto& m : sorted_modules(f.canonical)) key.push_back({m.lift_start, m.length});
        canon.insert(std::move(key));
    }
    return static_cast<long long>(canon.size());
}

TransjectiveObject make_transjective(const StringModule& m) {
    StringClass c = classify(m);
    if (c == StringClass::preprojective) return {m, 0};
    if (c == StringClass::preinjective) return {m, -1};
    throw std::invalid_argument("transjective objects are preprojective or shifted preinjective");
}

TransjectiveObject coray_shift(const TransjectiveObject& t, long long z) {
    if (classify(t.module) == StringClass::preinjective ? t.shift != -1 : t.shift != 0)
        throw std::invalid_argument("coray_shift: inconsistent shift flag");
    TransjectiveObject cur = t;
    TwistDir dir = z >= 0 ? TwistDir::cw : TwistDir::ccw;
    for (long long s = 0; s < std::llabs(z); ++s) {
        cur.module = elementary_twist(cur.module, BoundarySide::inner, dir);
        cur.shift = classify(cur.module) == StringClass::preinjective ? -1 : 0;
    }
    return cur;
}

}  // namespace excseq
