#pragma once

#include "coh1/isotropy.hpp"

namespace coh1 {

using Elt = std::vector<Rat>;  // coordinates in a ChevAlgebra basis

// Chevalley basis of one simple factor: h_1..h_r, then e_alpha over all roots
// (positives in root-system order, then their negatives).  Structure constants
// are fixed by the extraspecial-pair algorithm over the (height, lex) order.
class ChevFactor {
  public:
    explicit ChevFactor(const RootSystem& rs);

    const RootSystem& rs;
    int npos;
    int dim;  // rank + 2*npos

    // roots indexed 0..2*npos-1: k < npos positive, k >= npos is -(k-npos)
    const IVec& root_sc(int k) const { return k < npos ? rs.pos_sc[k] : neg_sc_[k - npos]; }
    IVec root_fc(int k) const;
    int root_index(const IVec& sc) const;  // -1 if not a root

    // N(x, y) for root indices with root(x)+root(y) a root
    Rat structure_const(int x, int y) const;
    // coroot coordinates of root k (negatives give negated coroots)
    IVec coroot(int k) const;

  private:
    std::vector<IVec> neg_sc_;
    std::unordered_map<IVec, int, IVecHash> index_;           // both signs
    std::map<std::pair<int, int>, Rat> npos_table_;           // positive special pairs
    Rat n_lookup(int x, int y) const;
    friend class ChevAlgebra;
};

// Direct sum of simple factors plus an abelian torus part.  Basis order:
// factor 0 block (Cartan then root vectors), factor 1 block, ..., torus gens.
class ChevAlgebra {
  public:
    explicit ChevAlgebra(const CompactAlgebra& alg);

    CompactAlgebra alg;
    std::vector<const ChevFactor*> factors;
    std::vector<int> offset;  // basis offset per factor
    int torus_offset;
    int dim;

    Elt zero() const { return Elt(dim, Rat(0)); }
    Elt basis(int k) const;
    Elt bracket(const Elt& x, const Elt& y) const;
    Rat form(const Elt& x, const Elt& y) const;  // invariant bilinear form

    // h-weight of basis element k under a restriction map into h (Cartan and
    // torus elements have weight zero)
    bool basis_is_cartan(int k) const;
    // flattened g-weight of basis element k (zero for Cartan/torus)
    IVec basis_weight(int k) const;

    // the Cartan/torus generator dual to flattened weight coordinate c
    int cartan_gen_index(int c) const;

    std::string describe(const Elt& x) const;
};

const ChevAlgebra& chev_algebra(const CompactAlgebra& alg);

struct Subspace {
    const ChevAlgebra* amb = nullptr;
    RowSpan span;
    std::vector<Elt> basis;

    size_t dim() const { return basis.size(); }
};

Subspace make_subspace(const ChevAlgebra& amb, const std::vector<Elt>& vecs);

// A realized subalgebra: Cartan images plus solved simple-root vectors.
struct EmbeddedSubalgebra {
    RestrictionMap map;  // source = ambient algebra, target = h
    const ChevAlgebra* amb = nullptr;
    std::vector<Elt> cartan;          // one per h fundamental coordinate / torus row
    std::vector<Elt> epos, eneg;      // per h-factor simple root (flattened order)
    Subspace span;                    // the full dim-h subalgebra
};

// Solves the subalgebra inside the ambient Chevalley algebra.  Throws when the
// eigenspace system has no solution in the searched normal forms.
EmbeddedSubalgebra realize_subalgebra(const ChevAlgebra& amb, const RestrictionMap& map);

// Killing-orthogonal complement split into ad-invariant pieces; complex-dual
// partners and isotypic multiples are merged into single real pieces so they
// match the character-level summand table one-to-one.
struct SummandPiece {
    Subspace space;
    AlgebraIrrep label;  // canonical constituent label (as in RealSummand)
    Int mult = 1;        // isotypic multiplicity (flagged pieces)
    Big real_dim() const { return Big(static_cast<unsigned long>(space.dim())); }
};

std::vector<SummandPiece> invariant_complement(const ChevAlgebra& amb, const EmbeddedSubalgebra& emb);

enum class Closure { CLOSED, NOT_CLOSED };

Closure closure_test(const ChevAlgebra& amb, const EmbeddedSubalgebra& emb,
                     const std::vector<SummandPiece>& pieces, const std::vector<int>& subset);

struct Intermediate {
    std::vector<int> subset;   // indices of summand pieces (possibly with a diagonal)
    size_t dim;                // dim of h + selected pieces
    bool diagonal = false;     // a proper submodule of an isotypic piece was used
    bool family = false;       // continuous family detected; representative only
    Subspace space;
};

std::vector<Intermediate> intermediate_subalgebras(const ChevAlgebra& amb,
                                                   const EmbeddedSubalgebra& emb);

Subspace normalizer_subalgebra(const ChevAlgebra& amb, const Subspace& sub);

// bracket closure of a union of subspaces
Subspace subalgebra_generated(const ChevAlgebra& amb, const std::vector<const Subspace*>& parts);

}  // namespace coh1
