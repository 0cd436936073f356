#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace excseq {

using pos_t = long long;

enum class Sign : uint8_t { minus = 0, plus = 1 };

inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class Boundary : uint8_t { inner = 0, outer = 1 };

// A quiver whose underlying graph is a cycle on n vertices 0..n-1.
// Arrow alpha_v lies between v and v+1 (mod n) and points v -> v+1 exactly
// when eps[v] == plus. A proper orientation has at least one sign of each
// kind; the all-equal case is a cyclically oriented quiver and is rejected.
struct Quiver {
    int n = 0;
    std::vector<Sign> eps;

    int vmod(pos_t k) const {
        pos_t r = k % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }

    // epsilon-tilde: the periodic sign sequence of the universal cover.
    Sign lifted_sign(pos_t k) const { return eps[vmod(k)]; }

    Boundary boundary_of_vertex(int v) const {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        return eps[v] == Sign::plus ? Boundary::outer : Boundary::inner;
    }

    // Number of marked points on the inner (p) and outer (q) circles.
    int inner_points() const {
        int p = 0;
        for (Sign s : eps) p += (s == Sign::minus);
        return p;
    }
    int outer_points() const { return n - inner_points(); }

    // Smallest position strictly greater than `from` carrying sign `s`.
    pos_t next_with_sign(pos_t from, Sign s) const {
        for (pos_t x = from + 1;; ++x)
            if (lifted_sign(x) == s) return x;
    }
    // Largest position strictly smaller than `from` carrying sign `s`.
    pos_t prev_with_sign(pos_t from, Sign s) const {
        for (pos_t x = from - 1;; --x)
            if (lifted_sign(x) == s) return x;
    }

    bool operator==(const Quiver&) const = default;
};

Quiver make_quiver(int n, const std::vector<Sign>& eps);
Quiver make_quiver(int n, const std::string& signs);  // signs like "-++"
Quiver opposite(const Quiver& q);

struct ArrowInfo {
    int index = 0;   // arrow alpha_v between v and v+1 mod n
    int source = 0;
    int target = 0;
};

ArrowInfo arrow_info(const Quiver& q, int v);

}  // namespace excseq
