#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratlink/numtheory.hpp"

namespace ratlink {

/// Orientation choice for a PS-form 4-plat. A knot (q odd) determines its own
/// orientation (Forced); a two-component link (q even) admits Plus / Minus,
/// named after the sign they give the leftmost crossing.
enum class Orient { Forced, Plus, Minus };

std::string orient_name(Orient o);

struct orientation_error : std::invalid_argument {
    explicit orientation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Signed vector [b1, ..., b_{2k+1}] of a PS-form 4-plat: |b_i| = a_i with the
/// sign of b_i the common crossing sign of twist region i.
using SignedVector = std::vector<long long>;

void check_signed_vector(const SignedVector& sv);

/// One crossing of the 4-plat, drawn on four horizontal rails numbered
/// 1 (top) to 4 (bottom). The long arc occupies rail 4 and is never crossed.
/// Odd regions twist rails 2-3 (drawn as horizontal twists), even regions
/// rails 1-2 (vertical twists). The "down" strand of a crossing is the one
/// entering on the upper rail and leaving on the lower.
struct Crossing {
    int region;             // 0-based region index
    int pos;                // position within its region
    int upper_rail;         // 2 for odd regions, 1 for even regions
    int comp_down;          // component label (1 or 2) of the down strand
    int comp_up;
    bool down_rightward;    // travel direction of the down strand
    bool up_rightward;
    bool down_is_over;
    int sign;               // +1 or -1
    // segment ids of the four incident arc pieces, for Seifert smoothing
    int seg_ul, seg_ll, seg_ur, seg_lr;
};

struct PlatDiagram {
    Fraction fraction;
    std::vector<long long> region_size;   // a1, ..., a_{2k+1}
    Orient orientation;                   // tag as requested
    int components;                       // 1 or 2
    int long_arc_component;               // always 1
    std::vector<Crossing> crossings;      // in left-to-right column order
    int long_arc_segment;                 // segment id of rail 4
    int segment_count;
    // component label of each of the four entering strands at the left end,
    // indexed by rail 1..4 (index 0 unused)
    int left_entry_component[5];
    // outermost arc segment of each rail, for the closure caps
    int rail_left_seg[5];
    int rail_right_seg[5];

    long long crossing_count() const { return static_cast<long long>(crossings.size()); }
};

/// Builds the PS-form 4-plat of v with orientation o. Throws
/// orientation_error when o is illegal for the parity of q.
PlatDiagram build_ps_diagram(const OddCF& v, Orient o);

/// Reads off the signed vector; asserts that every region is sign-homogeneous.
SignedVector signed_vector(const PlatDiagram& d);

/// Entries in reverse order, signs preserved (the 180-degree rotation of the
/// 4-plat about the vertical axis).
SignedVector reversal(const SignedVector& sv);

/// Signed vector of the PS form of the mirror link, computed through the
/// fraction (q-p)/q and diagram reconstruction. The length may change.
SignedVector mirror(const SignedVector& sv);

/// True iff sv is the signed vector of some PS-form 4-plat, i.e. it respects
/// the positional parity constraints of the Seifert-circle rules.
bool realizable(const SignedVector& sv);

/// Reconstructs the fraction and orientation tag that produce sv.
/// Throws std::invalid_argument when sv is not realizable.
std::pair<Fraction, Orient> vector_source(const SignedVector& sv);

std::string diagram_to_json(const PlatDiagram& d);

} // namespace ratlink
