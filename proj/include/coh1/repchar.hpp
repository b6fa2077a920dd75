#pragma once

#include "coh1/rootsys.hpp"

#include <map>

namespace coh1 {

enum class RealityType { REAL, COMPLEX, QUATERNIONIC };

inline const char* to_string(RealityType t) {
    switch (t) {
        case RealityType::REAL: return "R";
        case RealityType::COMPLEX: return "C";
        case RealityType::QUATERNIONIC: return "H";
    }
    return "?";
}

// Formal character of one simple factor, stored on the dominant chamber only;
// the full Weyl-invariant multiset is implied via orbits.
struct FormalCharacter {
    const RootSystem* rs = nullptr;
    std::map<IVec, Int> dom;  // dominant weight -> multiplicity

    bool empty() const { return dom.empty(); }
    Big dim() const;
    FormalCharacter& operator+=(const FormalCharacter& o);
    // full multiset as (weight, multiplicity) pairs, orbit-expanded
    std::vector<std::pair<IVec, Int>> full() const;
};

FormalCharacter irrep_character(const RootSystem& rs, const IVec& highest);

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter adams2(const FormalCharacter& ch);
FormalCharacter lambda2(const FormalCharacter& ch);
FormalCharacter sym2(const FormalCharacter& ch);

// Highest-weight peeling; throws (naming the weight) on negative multiplicity.
std::vector<std::pair<IVec, Int>> decompose(const FormalCharacter& ch);

IVec dual_weight(const RootSystem& rs, const IVec& highest);
RealityType reality_type(const RootSystem& rs, const IVec& highest);

}  // namespace coh1
