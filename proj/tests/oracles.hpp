#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include "coh1/repchar.hpp"

#include <map>

namespace coh1::oracle {

// Signed orbit sum  sum_w sgn(w) e^{w v}  for strictly dominant v.
inline std::map<IVec, Int> signed_orbit(const RootSystem& rs, const IVec& v) {
    std::map<IVec, Int> out;
    std::map<IVec, int> sign;
    std::vector<IVec> stack{v};
    sign[v] = 1;
    while (!stack.empty()) {
        IVec u = stack.back();
        stack.pop_back();
        int s = sign[u];
        out[u] = s;
        for (int j = 0; j < rs.rank; ++j) {
            if (u[j] <= 0) continue;
            IVec w = rs.reflect(u, j);
            if (!sign.count(w)) {
                sign[w] = -s;
                stack.push_back(w);
            }
        }
    }
    return out;
}

// Weyl character formula as an exact identity:
//   ch(lambda) * A(rho) == A(lambda + rho)
// where A is the signed orbit sum.  Returns true iff the Freudenthal-built
// character satisfies it.
inline bool wcf_identity_holds(const RootSystem& rs, const IVec& lambda) {
    FormalCharacter ch = irrep_character(rs, lambda);
    IVec rho(rs.rank, 1);
    auto a_rho = signed_orbit(rs, rho);
    IVec lr = lambda;
    for (int i = 0; i < rs.rank; ++i) lr[i] += 1;
    auto a_lam = signed_orbit(rs, lr);
    std::map<IVec, Int> conv;
    for (const auto& [x, mx] : ch.full())
        for (const auto& [y, sy] : a_rho) conv[x + y] += mx * sy;
    for (auto it = conv.begin(); it != conv.end();) {
        if (it->second == 0)
            it = conv.erase(it);
        else
            ++it;
    }
    return conv == a_lam;
}

// All dominant weights of the system with weyl_dim <= bound; the dimension is
// monotone in every coordinate, which makes the pruning complete.
inline std::vector<IVec> small_irreps(const RootSystem& rs, const Big& bound) {
    std::vector<IVec> out;
    IVec w(rs.rank, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == rs.rank) {
            if (rs.weyl_dim(w) <= bound) out.push_back(w);
            return;
        }
        for (int v = 0;; ++v) {
            w[i] = v;
            if (rs.weyl_dim(w) > bound) break;
            rec(i + 1);
        }
        w[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace coh1::oracle
