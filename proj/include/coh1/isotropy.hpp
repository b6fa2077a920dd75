#pragma once

#include "coh1/embed.hpp"

#include <optional>

namespace coh1 {

struct HomogeneousSpace {
    RestrictionMap map;  // h into g: source = g, target = h

    const CompactAlgebra& g() const { return map.source; }
    const CompactAlgebra& h() const { return map.target; }
};

AlgebraRep isotropy_rep(const HomogeneousSpace& space);

// Declared outer-automorphism data of an algebra: per-factor lists of
// fundamental-coordinate permutations (diagram automorphisms), plus torus
// charge sign flips.  Closed under inverse by construction.
struct AutomorphismSet {
    std::vector<std::vector<std::vector<int>>> factor_perms;  // [factor][choice][coord]
    bool charge_flips = true;
};

AutomorphismSet declared_automorphisms(const CompactAlgebra& alg);

struct SummandTable {
    RealRep real;             // the realified isotropy summands
    Int s = 0;                // count with multiplicity
    std::vector<int> outer_class;  // per real.summands entry
    bool has_equivalent_pair = false;       // some entry with mult > 1
    bool has_outer_equivalent_pair = false; // distinct entries in one outer class
};

SummandTable summand_table(const HomogeneousSpace& space);
SummandTable summand_table(const HomogeneousSpace& space, const AutomorphismSet& autos);

// Algebra-level effectivity: drops simple factors of g that land inside h and
// act trivially on the isotropy representation, and central torus directions
// of g lying in the image of h's Cartan.
HomogeneousSpace effective_pair(const HomogeneousSpace& space);

struct SphereInfo {
    int dim;
    std::string pattern;
};

// Catalog-relative recognition against the classified transitive sphere
// actions, including the low-rank coincidences.
std::optional<SphereInfo> sphere_recognize(const HomogeneousSpace& space);

bool is_sii(const HomogeneousSpace& space);  // s == 1; throws on g == h

// Transitive-subgroup catalog rows (L1, L2, L3, L2 cap L3).
struct OnishchikRow {
    CompactAlgebra l1, l2, l3, l23;
    std::string tag;
};

std::vector<OnishchikRow> onishchik_rows(int max_param);  // instantiated families
std::vector<CompactAlgebra> onishchik_lookup(const CompactAlgebra& l1, const CompactAlgebra& l3);

}  // namespace coh1
