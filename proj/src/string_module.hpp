#pragma once

#include <optional>
#include <vector>

#include "quiver.hpp"

namespace excseq {

enum class StringClass : uint8_t {
    preprojective = 0,
    preinjective = 1,
    left_regular = 2,
    right_regular = 3,
};

const char* class_name(StringClass c);

// An indecomposable string module, stored as a lift interval [i~, j~] on the
// universal cover, canonicalized so that 0 <= i~ < n. The support vertices
// are the positions i~+1 .. j~ reduced mod n, and the walk letter between
// positions m and m+1 is alpha_{m mod n}, direct exactly when the lifted
// sign at m is plus. The derived triple is (i, j; l) with i = i~ mod n,
// j = j~ mod n and length k = l*n + ((j - i) mod n), l maximal.
struct StringModule {
    Quiver quiver;
    pos_t lift_start = 0;  // i~, in [0, n)
    pos_t length = 1;      // k >= 1

    pos_t lift_lo() const { return lift_start; }
    pos_t lift_hi() const { return lift_start + length; }

    Sign start_sign() const { return quiver.lifted_sign(lift_lo()); }
    Sign end_sign() const { return quiver.lifted_sign(lift_hi()); }

    bool operator==(const StringModule&) const = default;
};

struct Triple {
    int i = 0;
    int j = 0;
    pos_t l = 0;
};

// One letter of the underlying walk, read counterclockwise.
struct WalkLetter {
    int arrow = 0;       // arrow index alpha_{arrow}
    bool direct = true;  // false: the formal inverse appears in the walk
};

StringModule from_triple(const Quiver& q, int i, int j, pos_t l);
StringModule from_interval(const Quiver& q, pos_t lo, pos_t hi);
Triple to_triple(const StringModule& m);

StringClass classify(const StringModule& m);
std::vector<pos_t> dimension_vector(const StringModule& m);
std::vector<WalkLetter> walk_letters(const StringModule& m);

bool is_exceptional(const StringModule& m);

// Number of quasi-simple layers of a regular string; throws on non-regular
// input. Equals the count of same-boundary marked points met walking
// clockwise from the start (exclusive) to the end (inclusive) of the lift.
pos_t quasi_length(const StringModule& m);
// Rank of the tube containing a regular string (q for the left tube, p for
// the right tube).
int tube_rank(const StringModule& m);

enum class HookOp : uint8_t { add_hook = 0, delete_hook = 1, add_cohook = 2, delete_cohook = 3 };
enum class Side : uint8_t { start = 0, end = 1 };

// The eight walk operations, realized as single-endpoint moves on the lift.
// Absent when the operation is undefined on the walk.
std::optional<StringModule> hook_op(const StringModule& m, HookOp op, Side side);

std::optional<StringModule> tau(const StringModule& m);
std::optional<StringModule> tau_inv(const StringModule& m);

bool is_projective(const StringModule& m);
bool is_injective(const StringModule& m);
// Vertex v with M = P(v) (resp. I(v)); absent if M is not projective
// (resp. injective).
std::optional<int> projective_vertex(const StringModule& m);
std::optional<int> injective_vertex(const StringModule& m);

StringModule projective_at(const Quiver& q, int v);
StringModule injective_at(const Quiver& q, int v);

enum class NakayamaDir : uint8_t { forward = 0, backward = 1 };
// forward: P(v) -> I(v); backward: I(v) -> P(v).
StringModule nakayama(const StringModule& m, NakayamaDir dir);

// The dual module over the opposite quiver: same support, all arrows
// transposed. Swaps preprojective <-> preinjective and left <-> right.
StringModule dual(const StringModule& m);

bool same_quiver(const StringModule& a, const StringModule& b);

}  // namespace excseq
