#pragma once

#include "coh1/linalg.hpp"
#include "coh1/rat.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace coh1 {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemSpec {
    Series series;
    int rank;

    bool operator==(const RootSystemSpec& o) const { return series == o.series && rank == o.rank; }
    bool operator<(const RootSystemSpec& o) const {
        return series != o.series ? series < o.series : rank < o.rank;
    }
    std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
};

// Node numbering follows the printed Dynkin diagrams this project verifies against:
//  - E6/E7/E8: chain 1-3-4-5-6(-7-8) with node 2 attached to node 4 (Bourbaki).
//  - F4: nodes 1,2 short, 3,4 long, double edge between 2 and 3.  fw_1 is the
//    26-dimensional representation, fw_4 the adjoint.
//  - G2: node 1 short (fw_1 = 7-dim), node 2 long (fw_2 = adjoint).
// C1 is normalized to A1 and D3 to A3 at construction; `relabel` records the
// node permutation (old node i sits at position relabel[i] of the normalized system).
struct RootSystem {
    RootSystemSpec requested;  // as asked for
    RootSystemSpec spec;       // normalized
    std::vector<int> relabel;
    int rank = 0;

    std::vector<IVec> cartan;        // cartan[i][j] = <alpha_i, alpha_j^vee>
    RatMat cartan_inv;
    std::vector<Rat> d;              // (alpha_i, alpha_i)/2
    RatMat gram;                     // (fw_i, fw_j)
    std::vector<IVec> pos_sc;        // positive roots, simple-root coords
    std::vector<IVec> pos_fc;        // positive roots, fundamental-weight coords
    std::vector<IVec> pos_coroot;    // coroots in simple-coroot coords
    std::vector<Rat> pos_norm2;      // (alpha, alpha)
    std::vector<std::vector<Rat>> pos_pair;  // (lambda, alpha) = sum_i pos_pair[a][i]*lambda_i
    IVec rho;                        // (1,...,1)
    IVec two_rho_vee;                // <fw_i, 2 rho^vee>
    Big weyl_order;

    int orth_dim = 0;
    std::vector<std::vector<Rat>> simple_orth;  // orth coords of simple roots
    std::vector<std::vector<Rat>> fw_orth;      // orth coords of fundamental weights

    std::unordered_map<IVec, int, IVecHash> pos_index_sc;

    size_t num_pos_roots() const { return pos_sc.size(); }
    Int dim() const { return rank + 2 * static_cast<Int>(pos_sc.size()); }

    // <lambda, alpha_j^vee> for lambda in fundamental coords is just lambda[j];
    // reflection in the j-th simple root:
    IVec reflect(const IVec& w, int j) const;

    Rat inner(const IVec& a, const IVec& b) const;  // invariant form, fund coords
    Int height(const IVec& w) const;                // <w, 2 rho^vee>
    bool dominant(const IVec& w) const;

    IVec dominant_rep(const IVec& w) const;
    // Dominant representative of w plus the sign of the Weyl word taking w+rho
    // dominant (0 if w+rho lies on a wall).
    std::pair<IVec, int> to_dominant_with_parity(const IVec& w) const;

    std::vector<IVec> weyl_orbit(const IVec& dominant_weight) const;
    Big orbit_size(const IVec& dominant_weight) const;

    Big weyl_dim(const IVec& dominant_weight) const;

    IVec dual_weight(const IVec& dominant_weight) const;  // -w0(lambda)

    IVec adjoint_weight() const;  // highest root, fund coords

    IVec fw(int i) const {
        IVec w(rank, 0);
        w[i] = 1;
        return w;
    }

    // orth coords of a weight given in fundamental coords
    std::vector<Rat> to_orth(const IVec& w) const;

    // simple-root coordinates of a weight-lattice vector (errors if not in the
    // root lattice)
    IVec simple_coords(const IVec& fund) const;
};

RootSystemSpec make_spec(Series s, int rank);  // validates bounds
RootSystemSpec parse_spec(const std::string& token);

// Shared immutable registry; safe for concurrent use.
const RootSystem& root_system(RootSystemSpec spec);

}  // namespace coh1
