#pragma once

#include <optional>
#include <vector>

#include "arcs.hpp"

namespace excseq {

enum class TwistDir : uint8_t { cw = 0, ccw = 1 };
enum class BoundarySide : uint8_t { inner = 0, outer = 1 };

// 2pi Dehn twist of the inner boundary: every lift endpoint on the inner
// circle is translated by +-n, exterior arcs are fixed. On arc labels this
// is the printed case split (exterior fixed; injective bridging arcs flip
// to a(j,i)[0]; otherwise lambda steps by one).
StringModule dehn_twist(const StringModule& m, TwistDir dir);
ArcDiagram dehn_twist(const ArcDiagram& d, TwistDir dir);

// Elementary twist: rotate one boundary circle by one marked point; every
// lift endpoint on that boundary moves to the adjacent same-sign position.
// Modules without endpoints on the boundary are fixed.
StringModule elementary_twist(const StringModule& m, BoundarySide boundary, TwistDir dir);

// Memberwise AR translate as the twist composite (clockwise outer, then
// counterclockwise inner). In module mode projective members are an error;
// in transjective mode they roll over to the shifted injective at the same
// vertex.
std::vector<StringModule> tau_collection(const std::vector<StringModule>& c,
                                         bool transjective = false);

bool is_small(const ArcDiagram& d);

struct Family {
    ArcDiagram canonical;  // small; bridging members all preprojective when
                           // the orbit has two small diagrams
    long long z = 0;       // clockwise twists from canonical to the input
};

Family canonical_small(const ArcDiagram& d);
std::optional<long long> same_family(const ArcDiagram& c1, const ArcDiagram& c2);

std::vector<ArcDiagram> enumerate_small_diagrams(const Quiver& q);
std::vector<ArcDiagram> enumerate_collections(const Quiver& q, pos_t lambda_max);
long long count_families(const Quiver& q);

struct TransjectiveObject {
    StringModule module;
    int shift = 0;  // 0 or -1; -1 marks shifted preinjectives

    bool operator==(const TransjectiveObject&) const = default;
};

TransjectiveObject make_transjective(const StringModule& m);
// z elementary clockwise inner twists (negative z counterclockwise), with
// projective <-> shifted-injective rollover: z coray steps in the
// transjective component.
TransjectiveObject coray_shift(const TransjectiveObject& t, long long z);

}  // namespace excseq
