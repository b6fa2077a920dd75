#pragma once

#include "coh1/repchar.hpp"

#include <string>

namespace coh1 {

// Direct sum of simple factors plus a torus.  so(4) parses to A1+A1, so(2) to
// a torus summand, so(6) to A3 and sp(1) to A1, keeping the factor model uniform.
struct CompactAlgebra {
    std::vector<RootSystemSpec> factors;
    int torus = 0;

    int nfactors() const { return static_cast<int>(factors.size()); }
    int rank_total() const;
    Int dim() const;
    bool is_trivial() const { return factors.empty() && torus == 0; }
    std::string str() const;

    bool operator==(const CompactAlgebra& o) const { return factors == o.factors && torus == o.torus; }
    bool operator<(const CompactAlgebra& o) const {
        return factors != o.factors ? factors < o.factors : torus < o.torus;
    }
};

CompactAlgebra parse_algebra(const std::string& tokens);  // "+"-joined
CompactAlgebra direct_sum(const CompactAlgebra& a, const CompactAlgebra& b);

struct AlgebraIrrep {
    std::vector<IVec> wt;  // one dominant weight per factor
    IVec charge;           // torus charges

    bool trivial() const;
    bool operator==(const AlgebraIrrep& o) const { return wt == o.wt && charge == o.charge; }
    bool operator<(const AlgebraIrrep& o) const { return wt != o.wt ? wt < o.wt : charge < o.charge; }
};

AlgebraIrrep trivial_irrep(const CompactAlgebra& alg);
Big irrep_dim(const CompactAlgebra& alg, const AlgebraIrrep& v);
AlgebraIrrep dual_irrep(const CompactAlgebra& alg, const AlgebraIrrep& v);
RealityType irrep_reality(const CompactAlgebra& alg, const AlgebraIrrep& v);
std::string irrep_str(const CompactAlgebra& alg, const AlgebraIrrep& v);

struct AlgebraRep {
    std::map<AlgebraIrrep, Int> parts;

    Big dim(const CompactAlgebra& alg) const;
    AlgebraRep& add(const AlgebraIrrep& v, Int mult = 1);
    AlgebraRep& add(const AlgebraRep& o);
    // exact multiset subtraction; throws if impossible
    AlgebraRep& subtract(const AlgebraRep& o, const std::string& what);
    bool empty() const { return parts.empty(); }
};

AlgebraRep adjoint_rep(const CompactAlgebra& alg);

struct RealSummand {
    AlgebraIrrep label;  // canonical constituent (dual-pair minimum for complex type)
    RealityType type = RealityType::REAL;
    Big real_dim;
    Int mult = 1;
};

struct RealRep {
    std::vector<RealSummand> summands;

    Int count_s() const;
    Big real_dim() const;
    std::vector<Big> dims_sorted() const;  // with multiplicity
};

// Pairs dual constituents, merges quaternionic doubles; throws when the input
// is not the complexification of a real representation.
RealRep realify(const CompactAlgebra& alg, const AlgebraRep& rep);

Int count_s(const RealRep& r);

}  // namespace coh1
