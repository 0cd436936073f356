#include "homext.hpp"

#include <algorithm>

namespace excseq {

std::vector<Factorization> factorizations(const StringModule& m, FactorizationKind kind) {
    const Quiver& q = m.quiver;
    pos_t lo = m.lift_lo(), hi = m.lift_hi();
    // Cut sign required just left of E and just right of E. For a quotient
    // factorization D starts with a direct letter and F ends with an inverse
    // one; for a submodule factorization the letters swap.
    Sign left_cut = kind == FactorizationKind::quotient ? Sign::minus : Sign::plus;
    Sign right_cut = kind == FactorizationKind::quotient ? Sign::plus : Sign::minus;
    std::vector<pos_t> los, his;
    for (pos_t x = lo + 1; x <= hi; ++x)
        if (x == lo + 1 || q.lifted_sign(x - 1) == left_cut) los.push_back(x);
    for (pos_t y = lo + 1; y <= hi; ++y)
        if (y == hi || q.lifted_sign(y) == right_cut) his.push_back(y);
    std::vector<Factorization> out;
    for (pos_t x : los)
        for (pos_t y : his)
            if (x <= y) out.push_back({x, y, kind});
    std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
        return a.cut_lo != b.cut_lo ? a.cut_lo < b.cut_lo : a.cut_hi < b.cut_hi;
    });
    return out;
}

// Walk of the interval [lo, hi]: arrow indices and directions of its letters.
static bool walks_equal(const Quiver& q, pos_t lo1, pos_t hi1, pos_t lo2, pos_t hi2) {
    if (hi1 - lo1 != hi2 - lo2) return false;
    if (q.vmod(lo1) != q.vmod(lo2)) return false;
    // With matching start residues the remaining vertices and letters agree
    // by periodicity of the lifted signs.
    return true;
}

static bool walks_inverse(const Quiver& q, pos_t lo1, pos_t hi1, pos_t lo2, pos_t hi2) {
    if (hi1 - lo1 != hi2 - lo2) return false;
    pos_t len = hi1 - lo1;
    for (pos_t t = 0; t <= len; ++t)
        if (q.vmod(lo1 + t) != q.vmod(hi2 - t)) return false;
    for (pos_t t = 0; t < len; ++t) {
        int a1 = q.vmod(lo1 + t);
        int a2 = q.vmod(hi2 - 1 - t);
        if (a1 != a2) return false;
        if (q.lifted_sign(lo1 + t) == q.lifted_sign(hi2 - 1 - t)) return false;
    }
    return true;
}

std::vector<GraphMap> graph_maps(const StringModule& m, const StringModule& n) {
    if (!same_quiver(m, n)) throw std::invalid_argument("graph_maps: different quivers");
    const Quiver& q = m.quiver;
    auto quots = factorizations(m, FactorizationKind::quotient);
    auto subs = factorizations(n, FactorizationKind::submodule);
    std::vector<GraphMap> out;
    for (const auto& f : quots) {
        for (const auto& s : subs) {
            bool dir = walks_equal(q, f.cut_lo, f.cut_hi, s.cut_lo, s.cut_hi);
            bool inv = !dir && walks_inverse(q, f.cut_lo, f.cut_hi, s.cut_lo, s.cut_hi);
            if (!dir && !inv) continue;
            GraphMap g;
            g.source = f;
            g.target = s;
            g.orientation = dir ? GraphMapOrientation::direct : GraphMapOrientation::inverse;
            g.two_sided = (!f.d_trivial(m) || !s.d_trivial(n)) &&
                          (!f.f_trivial(m) || !s.f_trivial(n));
            out.push_back(g);
        }
    }
    return out;
}

std::vector<Connection> connections(const StringModule& m, const StringModule& n) {
    if (!same_quiver(m, n)) throw std::invalid_argument("connections: different quivers");
    const Quiver& q = m.quiver;
    std::vector<Connection> out;
    // M alpha N with alpha direct at the end of M.
    if (q.lifted_sign(m.lift_hi()) == Sign::plus &&
        q.vmod(n.lift_lo()) == q.vmod(m.lift_hi()))
        out.push_back({q.vmod(m.lift_hi()), ConnectionShape::forward});
    // N alpha^-1 M with alpha inverse at the end of N.
    if (q.lifted_sign(n.lift_hi()) == Sign::minus &&
        q.vmod(m.lift_lo()) == q.vmod(n.lift_hi())) {
        int a = q.vmod(n.lift_hi());
        bool dup = false;
        for (const auto& c : out) dup |= (c.arrow == a);
        if (!dup) out.push_back({a, ConnectionShape::backward});
    }
    return out;
}

long long dim_hom(const StringModule& m, const StringModule& n) {
    return static_cast<long long>(graph_maps(m, n).size());
}

long long dim_ext(const StringModule& m, const StringModule& n) {
    long long d = static_cast<long long>(connections(m, n).size());
    for (const auto& g : graph_maps(n, m)) d += g.two_sided;
    return d;
}

bool is_exceptional_pair(const StringModule& u, const StringModule& v) {
    if (!same_quiver(u, v)) throw std::invalid_argument("is_exceptional_pair: different quivers");
    if (!is_exceptional(u) || !is_exceptional(v)) return false;
    return dim_hom(v, u) == 0 && dim_ext(v, u) == 0;
}

long long euler_form(const Quiver& q, const std::vector<pos_t>& d1, const std::vector<pos_t>& d2) {
    if (static_cast<int>(d1.size()) != q.n || static_cast<int>(d2.size()) != q.n)
        throw std::invalid_argument("euler_form: dimension vector length mismatch");
    long long e = 0;
    for (int v = 0; v < q.n; ++v) e += static_cast<long long>(d1[v]) * d2[v];
    for (int a = 0; a < q.n; ++a) {
        ArrowInfo ar = arrow_info(q, a);
        e -= static_cast<long long>(d1[ar.source]) * d2[ar.target];
    }
    return e;
}

namespace {

constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}
uint64_t submod(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

uint64_t invmod(uint64_t a) {
    uint64_t r = 1, e = kPrime - 2;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

long long nullity_mod_p(std::vector<std::vector<uint64_t>>& rows, size_t cols) {
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        uint64_t inv = invmod(rows[rank][c]);
        for (size_t cc = c; cc < cols; ++cc) rows[rank][cc] = mulmod(rows[rank][cc], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            uint64_t f = rows[r][c];
            for (size_t cc = c; cc < cols; ++cc)
                rows[r][cc] = submod(rows[r][cc], mulmod(f, rows[rank][cc]));
        }
        ++rank;
    }
    return static_cast<long long>(cols) - static_cast<long long>(rank);
}

// Explicit representation: for each vertex a basis indexed by the lift
// positions supported there; for each arrow the 0/1 matrix the walk induces.
struct ExplicitRep {
    std::vector<std::vector<pos_t>> basis;                    // per vertex
    std::vector<std::vector<std::pair<int, int>>> arrow_map;  // per arrow: (row, col) ones

    explicit ExplicitRep(const StringModule& m) {
        const Quiver& q = m.quiver;
        basis.resize(q.n);
        arrow_map.resize(q.n);
        for (pos_t x = m.lift_lo() + 1; x <= m.lift_hi(); ++x)
            basis[q.vmod(x)].push_back(x);
        auto index_of = [&](int v, pos_t x) {
            const auto& b = basis[v];
            return static_cast<int>(std::find(b.begin(), b.end(), x) - b.begin());
        };
        for (pos_t x = m.lift_lo() + 1; x < m.lift_hi(); ++x) {
            int a = q.vmod(x);
            ArrowInfo ar = arrow_info(q, a);
            pos_t from = q.lifted_sign(x) == Sign::plus ? x : x + 1;
            pos_t to = q.lifted_sign(x) == Sign::plus ? x + 1 : x;
            arrow_map[a].push_back({index_of(ar.target, to), index_of(ar.source, from)});
        }
    }
};

}  // namespace

long long dim_hom_linear_algebra(const StringModule& m, const StringModule& n) {
    if (!same_quiver(m, n)) throw std::invalid_argument("dim_hom_linear_algebra: different quivers");
    const Quiver& q = m.quiver;
    ExplicitRep M(m), N(n);
    // Unknowns: entries of theta_v (dim N_v x dim M_v), flattened per vertex.
    std::vector<size_t> offset(q.n + 1, 0);
    for (int v = 0; v < q.n; ++v)
        offset[v + 1] = offset[v] + M.basis[v].size() * N.basis[v].size();
    size_t cols = offset[q.n];
    if (cols == 0) return 0;
    auto var = [&](int v, size_t nrow, size_t mcol) {
        return offset[v] + nrow * M.basis[v].size() + mcol;
    };
    // psi_a theta_s - theta_t phi_a = 0, one row per (row of N_t, col of M_s).
    std::vector<std::vector<uint64_t>> rows;
    for (int a = 0; a < q.n; ++a) {
        ArrowInfo ar = arrow_info(q, a);
        size_t nt = N.basis[ar.target].size(), ms = M.basis[ar.source].size();
        if (nt == 0 || ms == 0) continue;
        std::vector<std::vector<uint64_t>> block(nt * ms, std::vector<uint64_t>(cols, 0));
        for (const auto& [ti, si] : N.arrow_map[a])  // psi_a[ti][si] = 1
            for (size_t c = 0; c < ms; ++c)
                block[static_cast<size_t>(ti) * ms + c][var(ar.source, si, c)] += 1;
        for (const auto& [ti, si] : M.arrow_map[a])  // phi_a[ti][si] = 1
            for (size_t r = 0; r < nt; ++r) {
                auto& cell = block[r * ms + static_cast<size_t>(si)][var(ar.target, r, ti)];
                cell = submod(cell, 1);
            }
        for (auto& r : block)
            if (std::any_of(r.begin(), r.end(), [](uint64_t x) { return x != 0; }))
                rows.push_back(std::move(r));
    }
    if (rows.empty()) return static_cast<long long>(cols);
    return nullity_mod_p(rows, cols);
}

}  // namespace excseq
