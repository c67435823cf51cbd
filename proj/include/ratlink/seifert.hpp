#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratlink/plat.hpp"

namespace ratlink {

/// Maximal run of same-sign entries in a signed vector.
struct Block {
    std::vector<long long> entries;  // signed, as they appear
    int sign;                        // +1 or -1
    size_t start;                    // index of the first entry in the vector
};

std::vector<Block> blocks(const SignedVector& sv);

/// Type of a PS-form 4-plat by the signs of its end crossings:
/// I: + ... -   II: - ... +   III: + ... +   IV: - ... -
enum class RType { I, II, III, IV };

RType classify_type(const SignedVector& sv);
std::string rtype_name(RType t);

struct not_r_decomposition : std::invalid_argument {
    explicit not_r_decomposition(const std::string& what) : std::invalid_argument(what) {}
};

enum class CircleTag { Large, Medium, Small };

/// Seifert-circle structure of a PS-form 4-plat. Circle 0 is the large one
/// (it contains the long arc); the others appear in left-to-right order.
/// Every crossing is shared by exactly two distinct circles; crossings inside
/// the large circle are negative, crossings outside positive.
struct CircleChain {
    struct Circle {
        CircleTag tag;
        int side;  // +1 outside the large circle, -1 inside, 0 for the large circle
    };
    std::vector<Circle> circles;
    std::map<std::pair<int, int>, int> shared;  // (i, j) with i < j -> crossing count

    int total() const { return static_cast<int>(circles.size()); }
    int count(CircleTag t) const;
    long long crossing_count() const;
    int shared_between(int i, int j) const;
    std::vector<std::pair<int, int>> neighbors(int i) const;  // (other, count)
};

/// Builds the circle chain of sv from the block rules. Throws
/// not_r_decomposition when sv violates the positional parity constraints
/// (i.e. is not the signed vector of any PS-form 4-plat).
CircleChain circle_chain(const SignedVector& sv);

/// Repeatedly removes a removable small circle (one sharing a single crossing
/// with each of two distinct neighbours), merging the neighbours, until no
/// such circle remains. Each removal drops the circle count and the crossing
/// count by exactly 2. Removal order does not affect the count; this routine
/// always removes the leftmost removable circle. Returns the final chain --
/// no small circles, every medium sharing at least two crossings with the
/// large circle -- and the number of removals (the deficiency).
std::pair<CircleChain, int> reduce_to_fixpoint(CircleChain chain);

struct InvariantRecord {
    Fraction fraction;
    std::vector<long long> vector;  // continued fraction entries
    SignedVector signed_vec;
    long long n;          // crossing number
    int mu;               // components
    long long s;          // Seifert circles
    long long genus;
    long long braid;      // braid index s - d
    long long deficiency;
    RType rtype;
    std::optional<bool> strongly_invertible;  // nullopt for knots
};

/// Full pipeline: diagram -> signed vector -> chain -> reduction.
InvariantRecord invariants(const Fraction& f, Orient o);

std::string record_to_json(const InvariantRecord& r);
std::string record_to_csv_row(const InvariantRecord& r);
std::string record_to_text(const InvariantRecord& r);

} // namespace ratlink
