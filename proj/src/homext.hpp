#pragma once

#include <vector>

#include "string_module.hpp"

namespace excseq {

enum class FactorizationKind : uint8_t { quotient = 0, submodule = 1 };

// A factorization C = F E D, recorded by the support interval [cut_lo, cut_hi]
// of the middle term E inside the lift of C. F and D are lazy exactly when
// the cut touches the corresponding end of C.
struct Factorization {
    pos_t cut_lo = 0;
    pos_t cut_hi = 0;
    FactorizationKind kind = FactorizationKind::quotient;

    bool f_trivial(const StringModule& c) const { return cut_lo == c.lift_lo() + 1; }
    bool d_trivial(const StringModule& c) const { return cut_hi == c.lift_hi(); }
};

enum class GraphMapOrientation : uint8_t { direct = 0, inverse = 1 };

// Basis morphism C1 -> C2 from an admissible pair: a quotient factorization
// of C1 and a submodule factorization of C2 whose middle terms agree as
// quiver walks (equal or mutually inverse).
struct GraphMap {
    Factorization source;  // quotient factorization of C1
    Factorization target;  // submodule factorization of C2
    GraphMapOrientation orientation = GraphMapOrientation::direct;
    bool two_sided = false;
};

enum class ConnectionShape : uint8_t { forward = 0, backward = 1 };  // C1 a C2 | C2 a^-1 C1

struct Connection {
    int arrow = 0;
    ConnectionShape shape = ConnectionShape::forward;
};

std::vector<Factorization> factorizations(const StringModule& m, FactorizationKind kind);
std::vector<GraphMap> graph_maps(const StringModule& m, const StringModule& n);
std::vector<Connection> connections(const StringModule& m, const StringModule& n);

long long dim_hom(const StringModule& m, const StringModule& n);
// dim Ext^1(M, N): extensions 0 -> N -> E -> M -> 0, counted by connections
// of M to N plus two-sided graph maps N -> M.
long long dim_ext(const StringModule& m, const StringModule& n);

bool is_exceptional_pair(const StringModule& u, const StringModule& v);

// Hereditary Euler form <d1, d2> = sum d1(v) d2(v) - sum_{a: s->t} d1(s) d2(t).
long long euler_form(const Quiver& q, const std::vector<pos_t>& d1, const std::vector<pos_t>& d2);

// Independent oracle: build the explicit matrix representations and compute
// the dimension of the solution space of the intertwining equations over a
// large prime field.
long long dim_hom_linear_algebra(const StringModule& m, const StringModule& n);

}  // namespace excseq
