#pragma once

#include <optional>
#include <vector>

#include "homext.hpp"
#include "string_module.hpp"

namespace excseq {

enum class ArcKind : uint8_t {
    bridging_from_outer = 0,  // preprojective
    bridging_from_inner = 1,  // preinjective
    exterior_outer = 2,       // left regular
    exterior_inner = 3,       // right regular
};

const char* arc_kind_name(ArcKind k);

// Geometric avatar a(i,j)[lambda] of a string module on the annulus.
// Preinjectives carry the negated winding.
struct Arc {
    int i = 0;
    int j = 0;
    pos_t lambda = 0;
    ArcKind kind = ArcKind::bridging_from_outer;

    bool operator==(const Arc&) const = default;
};

// A strand on the marked line: the fundamental lift interval of a module,
// anchored per the class (preinjectives and right regulars end in the
// fundamental domain).
struct Strand {
    pos_t lo = 0;
    pos_t hi = 0;
};

Arc arc_of(const StringModule& m);
StringModule module_of(const Quiver& q, const Arc& a);
Strand strand_of(const StringModule& m);

enum class PairRelation : uint8_t {
    cross = 0,
    cw = 1,        // first arc clockwise of second
    ccw = 2,
    disjoint = 3,
    two_cycle = 4,
};

const char* relation_name(PairRelation r);
PairRelation mirrored(PairRelation r);

// Geometric relation, computed from strand lifts: crossings via forced
// vertical orders, local clockwise verdicts at shared endpoints.
PairRelation pair_relation(const StringModule& u, const StringModule& v);

// Algebraic relation, reading the annulus trichotomy as definitions on
// Hom/Ext dimensions and connections.
PairRelation relation_algebraic(const StringModule& u, const StringModule& v);

struct ArcDiagram {
    Quiver quiver;
    std::vector<StringModule> modules;
};

ArcDiagram make_diagram(const Quiver& q, std::vector<StringModule> modules);

struct DiagramViolation {
    size_t first = 0;
    size_t second = 0;
    PairRelation relation = PairRelation::cross;  // cross, two_cycle, or cw-cycle marker
    bool non_exceptional = false;                 // set when `first` alone is at fault
};

// A diagram with n pairwise compatible exceptional arcs whose local
// clockwise precedence digraph is acyclic.
bool is_exceptional_diagram(const ArcDiagram& d);
std::vector<DiagramViolation> diagram_violations(const ArcDiagram& d);

// Topological order of the precedence digraph: a complete exceptional
// sequence. Absent when the diagram is not exceptional. Ties broken by
// (class: preinjective < right-regular < left-regular < preprojective,
// then (i, j, lambda)).
std::optional<std::vector<StringModule>> order_collection(const ArcDiagram& d);

}  // namespace excseq
