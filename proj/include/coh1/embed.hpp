#pragma once

#include "coh1/liealg.hpp"

#include <functional>
#include <optional>

namespace coh1 {

// Integer/rational weight-lattice map defining a subalgebra embedding.
// Shape: target.rank_total() rows, source.rank_total() columns, acting on
// flattened weights (factor fundamental coords, then torus charges).
struct RestrictionMap {
    CompactAlgebra source;
    CompactAlgebra target;
    RatMat m;
    std::string name;

    std::string str() const { return name.empty() ? target.str() + " < " + source.str() : name; }
};

// ---- weight plumbing ------------------------------------------------------

std::vector<Rat> flatten(const CompactAlgebra& alg, const AlgebraIrrep& w);
AlgebraIrrep unflatten_int(const CompactAlgebra& alg, const std::vector<Rat>& v,
                           const std::string& context);  // errors on non-integral

// Restrict a single source weight; per-factor dominant sift is NOT applied.
AlgebraIrrep restrict_weight(const RestrictionMap& map, const AlgebraIrrep& w);

// ---- core operations ------------------------------------------------------

AlgebraRep branch(const AlgebraRep& rep, const RestrictionMap& map);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> notes;
    std::string str() const;
};

ValidationReport validate_embedding(const RestrictionMap& map);

// The isotropy remainder branch(adjoint(source)) - adjoint(target).
AlgebraRep isotropy_from_map(const RestrictionMap& map);

RestrictionMap compose_maps(const RestrictionMap& outer, const RestrictionMap& inner);
RestrictionMap direct_sum_map(const RestrictionMap& a, const RestrictionMap& b);
RestrictionMap identity_map(const CompactAlgebra& alg);
// n-fold diagonal h^n -> h
RestrictionMap diagonal_map(const CompactAlgebra& h, int copies);

// Collapse equal components of the source diagonally.  Components are indexed
// factors first, then torus coordinates; each group maps onto one target copy.
// Groups of torus coordinates may carry integer weights per member.
struct DiagGroup {
    std::vector<int> members;        // component indices of the source
    std::vector<int> weights = {};   // for torus groups; default all 1
};
RestrictionMap diagonal_collapse(const CompactAlgebra& src, const std::vector<DiagGroup>& groups,
                                 const std::string& name = "");

// ---- defining-representation constructors (classical ambients) -----------

// h -> so(n) where the complexified weights of `rep` give the n-dimensional
// orthogonal representation (must be symmetric as a multiset).
RestrictionMap embed_in_so(const CompactAlgebra& h, const AlgebraRep& rep, const std::string& name = "");
// h -> sp(n), rep the 2n-dimensional symplectic representation
RestrictionMap embed_in_sp(const CompactAlgebra& h, const AlgebraRep& rep, const std::string& name = "");
// h -> su(n), rep the n-dimensional complex representation
RestrictionMap embed_in_su(const CompactAlgebra& h, const AlgebraRep& rep, const std::string& name = "");

// Convenience block embeddings.
RestrictionMap so_block(int p, int q);        // so(p)+so(q) < so(p+q)
RestrictionMap su_block(int p, int q);        // su(p)+su(q)+u(1) < su(p+q)  (S(U(p)U(q)))
RestrictionMap sp_block(int p, int q);        // sp(p)+sp(q) < sp(p+q)
RestrictionMap so_stabilizer_u(int n);        // u(n) < so(2n)
RestrictionMap sp_stabilizer_u(int n);        // u(n) < sp(n)

// ---- regular subalgebras of a simple ambient ------------------------------

// Simple roots of each target factor given in the ambient's simple-root
// coordinates. Torus rows (functionals on fundamental coords) may be supplied;
// when target.torus > 0 and rows are omitted, the full orthogonal complement
// is used (must match the requested torus rank).
RestrictionMap regular_map(RootSystemSpec g, const std::vector<std::vector<IVec>>& factor_simples,
                           int torus_rank, const std::vector<std::vector<Rat>>& torus_rows = {},
                           const std::string& name = "");

// All positive roots of g orthogonal to the given roots (simple coords).
std::vector<IVec> orthogonal_subsystem(const RootSystem& g, const std::vector<IVec>& roots_sc);

// Extract an ordered simple system from a closed subsystem (positive roots,
// simple coords); returns per-component (spec, ordered simple roots) with the
// node order matching this project's conventions.
std::vector<std::pair<RootSystemSpec, std::vector<IVec>>> subsystem_simples(
    const RootSystem& g, const std::vector<IVec>& roots_sc);

// Primitive integral functional on g's weight lattice vanishing on the given
// roots; dim of that space must be 1.
std::vector<Rat> torus_row_orthogonal(const RootSystem& g, const std::vector<IVec>& roots_sc);

// Clear denominators, divide by the gcd, make the first nonzero entry positive.
std::vector<Rat> primitive_row(std::vector<Rat> row);

// Maximal torus of alg as a subalgebra (fundamental coords become charges).
RestrictionMap to_cartan(const CompactAlgebra& alg);

// Keep only the listed target factors / torus coordinates of a map.
RestrictionMap project_target(const RestrictionMap& m, const std::vector<int>& keep_factors,
                              const std::vector<int>& keep_torus);

// A subtorus of src cut out by explicit integral charge rows on flattened coords.
RestrictionMap torus_subgroup(const CompactAlgebra& src, const std::vector<std::vector<Rat>>& rows,
                              const std::string& name = "");

// ---- catalog ---------------------------------------------------------------

struct EmbeddingCatalogEntry {
    RestrictionMap map;
    std::string provenance;
};

class EmbeddingCatalog {
  public:
    static const EmbeddingCatalog& instance();

    const EmbeddingCatalogEntry& lookup(const std::string& name) const;
    bool has(const std::string& name) const;
    std::vector<std::string> names() const;

    // populated from data/catalog.c1d (directory overridable via COH1_CATALOG_DIR)
  private:
    EmbeddingCatalog();
    std::map<std::string, EmbeddingCatalogEntry> entries_;
};

const EmbeddingCatalogEntry& catalog_lookup(const std::string& name);

}  // namespace coh1
