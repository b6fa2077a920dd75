#include "coh1/repchar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

namespace coh1 {

namespace {

std::string weight_str(const IVec& w) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "]";
    return os.str();
}

// (height, lex) order used for peeling: true if a comes strictly after b,
// i.e. a is "larger".
bool peel_greater(const RootSystem& rs, const IVec& a, const IVec& b) {
    Int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha > hb;
    return a > b;
}

FormalCharacter freudenthal(const RootSystem& rs, const IVec& lam) {
    if (!rs.dominant(lam)) throw std::runtime_error("irrep_character: not dominant " + weight_str(lam));
    // dominant weights of V(lam): BFS downward by positive roots
    struct Entry {
        IVec depth;  // simple-root coords of lam - mu
        Rat mult;    // filled later
    };
    std::map<IVec, Entry> dw;
    dw[lam] = {IVec(rs.rank, 0), Rat(0)};
    std::deque<IVec> q{lam};
    while (!q.empty()) {
        IVec mu = q.front();
        q.pop_front();
        const IVec depth = dw[mu].depth;
        for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
            IVec nu = mu - rs.pos_fc[a];
            bool dom = true;
            for (int x : nu)
                if (x < 0) {
                    dom = false;
                    break;
                }
            if (!dom) continue;
            if (dw.count(nu)) continue;
            dw[nu] = {depth + rs.pos_sc[a], Rat(0)};
            q.push_back(nu);
        }
    }
    // order by increasing total depth
    std::vector<IVec> order;
    order.reserve(dw.size());
    for (auto& [mu, e] : dw) order.push_back(mu);
    auto total = [&](const IVec& mu) {
        int t = 0;
        for (int x : dw[mu].depth) t += x;
        return t;
    };
    std::sort(order.begin(), order.end(), [&](const IVec& x, const IVec& y) { return total(x) < total(y); });

    IVec lam_rho = lam;
    for (int i = 0; i < rs.rank; ++i) lam_rho[i] += 1;
    Rat norm_lam = rs.inner(lam_rho, lam_rho);

    auto lookup = [&](const IVec& nu) -> Rat {
        IVec dom = rs.dominant_rep(nu);
        auto it = dw.find(dom);
        return it == dw.end() ? Rat(0) : it->second.mult;
    };

    for (const IVec& mu : order) {
        if (mu == lam) {
            dw[mu].mult = 1;
            continue;
        }
        Rat sum = 0;
        const IVec& depth = dw[mu].depth;
        for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
            // iterate mu + k*alpha while it can still be a weight of V(lam)
            IVec rem = depth;
            IVec nu = mu;
            for (int k = 1;; ++k) {
                bool ok = true;
                for (int i = 0; i < rs.rank; ++i) {
                    rem[i] -= rs.pos_sc[a][i];
                    if (rem[i] < 0) ok = false;
                }
                if (!ok) break;
                nu = nu + rs.pos_fc[a];
                Rat m = lookup(nu);
                if (m == 0) continue;
                Rat ip = 0;
                for (int i = 0; i < rs.rank; ++i) ip += rs.pos_pair[a][i] * nu[i];
                sum += m * ip;
            }
        }
        IVec mu_rho = mu;
        for (int i = 0; i < rs.rank; ++i) mu_rho[i] += 1;
        Rat denom = norm_lam - rs.inner(mu_rho, mu_rho);
        dw[mu].mult = 2 * sum / denom;
    }

    FormalCharacter ch;
    ch.rs = &rs;
    for (auto& [mu, e] : dw) {
        Big m = as_integer(e.mult);
        if (m == 0) continue;
        ch.dom[mu] = as_long(m);
    }
    return ch;
}

}  // namespace

Big FormalCharacter::dim() const {
    Big d = 0;
    for (const auto& [w, m] : dom) d += rs->orbit_size(w) * m;
    return d;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    for (const auto& [w, m] : o.dom) {
        auto it = dom.find(w);
        if (it == dom.end())
            dom[w] = m;
        else if ((it->second += m) == 0)
            dom.erase(it);
    }
    return *this;
}

std::vector<std::pair<IVec, Int>> FormalCharacter::full() const {
    std::vector<std::pair<IVec, Int>> out;
    for (const auto& [w, m] : dom)
        for (const IVec& v : rs->weyl_orbit(w)) out.emplace_back(v, m);
    return out;
}

FormalCharacter irrep_character(const RootSystem& rs, const IVec& highest) {
    static std::mutex mu;
    static std::map<std::pair<RootSystemSpec, IVec>, FormalCharacter> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({rs.spec, highest});
        if (it != cache.end()) return it->second;
    }
    FormalCharacter ch = freudenthal(rs, highest);
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(rs.spec, highest), ch);
    return ch;
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.rs != b.rs) throw std::runtime_error("tensor: mismatched root systems");
    FormalCharacter out;
    out.rs = a.rs;
    auto fa = a.full();
    auto fb = b.full();
    std::map<IVec, Int> acc;
    for (const auto& [wa, ma] : fa)
        for (const auto& [wb, mb] : fb) {
            IVec s = wa + wb;
            bool dom = true;
            for (int x : s)
                if (x < 0) {
                    dom = false;
                    break;
                }
            if (dom) acc[s] += ma * mb;
        }
    out.dom = std::move(acc);
    return out;
}

FormalCharacter adams2(const FormalCharacter& ch) {
    FormalCharacter out;
    out.rs = ch.rs;
    for (const auto& [w, m] : ch.dom) {
        IVec w2(w.size());
        for (size_t i = 0; i < w.size(); ++i) w2[i] = 2 * w[i];
        out.dom[w2] = m;
    }
    return out;
}

FormalCharacter lambda2(const FormalCharacter& ch) {
    FormalCharacter sq = tensor(ch, ch);
    FormalCharacter a2 = adams2(ch);
    FormalCharacter out;
    out.rs = ch.rs;
    for (const auto& [w, m] : sq.dom) {
        Int v = m;
        auto it = a2.dom.find(w);
        if (it != a2.dom.end()) v -= it->second;
        if (v % 2 != 0) throw std::runtime_error("lambda2: odd multiplicity at " + weight_str(w));
        if (v) out.dom[w] = v / 2;
    }
    for (const auto& [w, m] : a2.dom)
        if (!sq.dom.count(w)) {
            Int v = -m;
            if (v % 2 != 0) throw std::runtime_error("lambda2: odd multiplicity at " + weight_str(w));
            if (v) out.dom[w] = v / 2;
        }
    return out;
}

FormalCharacter sym2(const FormalCharacter& ch) {
    FormalCharacter sq = tensor(ch, ch);
    FormalCharacter a2 = adams2(ch);
    FormalCharacter out;
    out.rs = ch.rs;
    std::map<IVec, Int> acc = sq.dom;
    for (const auto& [w, m] : a2.dom) acc[w] += m;
    for (const auto& [w, v] : acc) {
        if (v % 2 != 0) throw std::runtime_error("sym2: odd multiplicity at " + weight_str(w));
        if (v) out.dom[w] = v / 2;
    }
    return out;
}

std::vector<std::pair<IVec, Int>> decompose(const FormalCharacter& ch) {
    std::vector<std::pair<IVec, Int>> out;
    FormalCharacter rem = ch;
    const RootSystem& rs = *ch.rs;
    while (!rem.dom.empty()) {
        IVec top = rem.dom.begin()->first;
        for (const auto& [w, m] : rem.dom)
            if (peel_greater(rs, w, top)) top = w;
        Int mult = rem.dom[top];
        if (mult < 0)
            throw std::runtime_error("not a character: negative multiplicity " + std::to_string(mult) +
                                     " at weight " + weight_str(top));
        FormalCharacter ir = irrep_character(rs, top);
        for (const auto& [w, m] : ir.dom) {
            auto it = rem.dom.find(w);
            Int v = (it == rem.dom.end() ? 0 : it->second) - mult * m;
            if (v == 0) {
                if (it != rem.dom.end()) rem.dom.erase(it);
            } else
                rem.dom[w] = v;
        }
        out.emplace_back(top, mult);
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return peel_greater(rs, x.first, y.first); });
    return out;
}

IVec dual_weight(const RootSystem& rs, const IVec& highest) { return rs.dual_weight(highest); }

RealityType reality_type(const RootSystem& rs, const IVec& highest) {
    if (rs.dual_weight(highest) != highest) return RealityType::COMPLEX;
    Int h = rs.height(highest);  // <lambda, 2 rho^vee>
    return (h % 2 == 0) ? RealityType::REAL : RealityType::QUATERNIONIC;
}

}  // namespace coh1
