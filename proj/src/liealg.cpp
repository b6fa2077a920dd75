#include "coh1/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace coh1 {

int CompactAlgebra::rank_total() const {
    int r = torus;
    for (const auto& f : factors) r += f.rank;
    return r;
}

Int CompactAlgebra::dim() const {
    Int d = torus;
    for (const auto& f : factors) d += root_system(f).dim();
    return d;
}

std::string CompactAlgebra::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        os << (first ? "" : "+") << f.str();
        first = false;
    }
    for (int i = 0; i < torus; ++i) {
        os << (first ? "" : "+") << "u1";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void push_token(CompactAlgebra& alg, const std::string& t) {
    auto starts = [&](const char* p) { return t.rfind(p, 0) == 0; };
    auto num = [&](size_t off) { return std::stoi(t.substr(off)); };
    if (t == "0" || t == "1") return;
    if (starts("u") && t.size() > 1 && std::isdigit(t[1])) {
        int n = num(1);
        if (n >= 2) alg.factors.push_back(make_spec(Series::A, n - 1));
        if (n >= 1) alg.torus += 1;
        return;
    }
    if (starts("t") && t.size() > 1 && std::isdigit(t[1])) {
        alg.torus += num(1);
        return;
    }
    if (starts("su")) {
        int n = num(2);
        if (n >= 2) alg.factors.push_back(make_spec(Series::A, n - 1));
        return;
    }
    if (starts("sp") && !starts("spin")) {
        alg.factors.push_back(make_spec(Series::C, num(2)));
        return;
    }
    if (starts("so") || starts("spin")) {
        int n = num(starts("spin") ? 4 : 2);
        switch (n) {
            case 1: return;
            case 2: alg.torus += 1; return;
            case 3: alg.factors.push_back(make_spec(Series::A, 1)); return;
            case 4:
                alg.factors.push_back(make_spec(Series::A, 1));
                alg.factors.push_back(make_spec(Series::A, 1));
                return;
            case 5: alg.factors.push_back(make_spec(Series::B, 2)); return;
            case 6: alg.factors.push_back(make_spec(Series::A, 3)); return;
            default:
                alg.factors.push_back(n % 2 ? make_spec(Series::B, n / 2) : make_spec(Series::D, n / 2));
                return;
        }
    }
    if (starts("e") && t.size() == 2) {
        alg.factors.push_back(make_spec(Series::E, num(1)));
        return;
    }
    if (t == "f4") {
        alg.factors.push_back(make_spec(Series::F, 4));
        return;
    }
    if (t == "g2") {
        alg.factors.push_back(make_spec(Series::G, 2));
        return;
    }
    // bare series token like A2, B3
    alg.factors.push_back(parse_spec(t));
}

}  // namespace

CompactAlgebra parse_algebra(const std::string& tokens) {
    CompactAlgebra alg;
    std::string t;
    std::istringstream is(tokens);
    while (std::getline(is, t, '+')) {
        // trim
        size_t a = t.find_first_not_of(" \t");
        size_t b = t.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        std::string tok = t.substr(a, b - a + 1);
        std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) { return std::tolower(c); });
        if (tok.empty()) continue;
        // keep series letters uppercase-compatible for parse_spec
        push_token(alg, tok);
    }
    return alg;
}

CompactAlgebra direct_sum(const CompactAlgebra& a, const CompactAlgebra& b) {
    CompactAlgebra r = a;
    r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
    r.torus += b.torus;
    return r;
}

bool AlgebraIrrep::trivial() const {
    for (const auto& w : wt)
        if (!is_zero(w)) return false;
    return is_zero(charge);
}

AlgebraIrrep trivial_irrep(const CompactAlgebra& alg) {
    AlgebraIrrep v;
    for (const auto& f : alg.factors) v.wt.push_back(IVec(f.rank, 0));
    v.charge.assign(alg.torus, 0);
    return v;
}

Big irrep_dim(const CompactAlgebra& alg, const AlgebraIrrep& v) {
    Big d = 1;
    for (int i = 0; i < alg.nfactors(); ++i) d *= root_system(alg.factors[i]).weyl_dim(v.wt[i]);
    return d;
}

AlgebraIrrep dual_irrep(const CompactAlgebra& alg, const AlgebraIrrep& v) {
    AlgebraIrrep d;
    for (int i = 0; i < alg.nfactors(); ++i) d.wt.push_back(root_system(alg.factors[i]).dual_weight(v.wt[i]));
    d.charge = -v.charge;
    return d;
}

RealityType irrep_reality(const CompactAlgebra& alg, const AlgebraIrrep& v) {
    if (dual_irrep(alg, v) != v) return RealityType::COMPLEX;
    int quat = 0;
    for (int i = 0; i < alg.nfactors(); ++i)
        if (reality_type(root_system(alg.factors[i]), v.wt[i]) == RealityType::QUATERNIONIC) ++quat;
    return quat % 2 ? RealityType::QUATERNIONIC : RealityType::REAL;
}

std::string irrep_str(const CompactAlgebra& alg, const AlgebraIrrep& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < alg.nfactors(); ++i) {
        if (!first) os << "x";
        first = false;
        os << "(";
        for (int j = 0; j < alg.factors[i].rank; ++j) os << (j ? "," : "") << v.wt[i][j];
        os << ")";
    }
    if (alg.torus) {
        os << (first ? "@(" : "@(");
        for (int j = 0; j < alg.torus; ++j) os << (j ? "," : "") << v.charge[j];
        os << ")";
    }
    if (alg.is_trivial()) os << "(triv)";
    return os.str();
}

Big AlgebraRep::dim(const CompactAlgebra& alg) const {
    Big d = 0;
    for (const auto& [v, m] : parts) d += irrep_dim(alg, v) * m;
    return d;
}

AlgebraRep& AlgebraRep::add(const AlgebraIrrep& v, Int mult) {
    if (mult == 0) return *this;
    auto it = parts.find(v);
    if (it == parts.end())
        parts[v] = mult;
    else if ((it->second += mult) == 0)
        parts.erase(it);
    return *this;
}

AlgebraRep& AlgebraRep::add(const AlgebraRep& o) {
    for (const auto& [v, m] : o.parts) add(v, m);
    return *this;
}

AlgebraRep& AlgebraRep::subtract(const AlgebraRep& o, const std::string& what) {
    for (const auto& [v, m] : o.parts) {
        auto it = parts.find(v);
        Int have = it == parts.end() ? 0 : it->second;
        if (have < m)
            throw std::runtime_error("subtraction impossible (" + what + "): multiplicity " +
                                     std::to_string(have) + " < " + std::to_string(m));
        if (have == m)
            parts.erase(it);
        else
            it->second = have - m;
    }
    return *this;
}

AlgebraRep adjoint_rep(const CompactAlgebra& alg) {
    AlgebraRep rep;
    for (int i = 0; i < alg.nfactors(); ++i) {
        AlgebraIrrep v = trivial_irrep(alg);
        v.wt[i] = root_system(alg.factors[i]).adjoint_weight();
        rep.add(v);
    }
    if (alg.torus) rep.add(trivial_irrep(alg), alg.torus);
    return rep;
}

Int RealRep::count_s() const {
    Int s = 0;
    for (const auto& p : summands) s += p.mult;
    return s;
}

Big RealRep::real_dim() const {
    Big d = 0;
    for (const auto& p : summands) d += p.real_dim * p.mult;
    return d;
}

std::vector<Big> RealRep::dims_sorted() const {
    std::vector<Big> v;
    for (const auto& p : summands)
        for (Int i = 0; i < p.mult; ++i) v.push_back(p.real_dim);
    std::sort(v.begin(), v.end());
    return v;
}

RealRep realify(const CompactAlgebra& alg, const AlgebraRep& rep) {
    RealRep out;
    std::map<AlgebraIrrep, Int> rem = rep.parts;
    while (!rem.empty()) {
        auto [v, m] = *rem.begin();
        RealityType t = irrep_reality(alg, v);
        Big d = irrep_dim(alg, v);
        if (t == RealityType::COMPLEX) {
            AlgebraIrrep dv = dual_irrep(alg, v);
            auto it = rem.find(dv);
            Int md = it == rem.end() ? 0 : it->second;
            if (md != m)
                throw std::runtime_error("realify: not self-conjugate, " + irrep_str(alg, v) +
                                         " has multiplicity " + std::to_string(m) + " but its dual has " +
                                         std::to_string(md));
            rem.erase(v);
            rem.erase(dv);
            out.summands.push_back({std::min(v, dv), t, 2 * d, m});
        } else if (t == RealityType::QUATERNIONIC) {
            if (m % 2)
                throw std::runtime_error("realify: quaternionic constituent " + irrep_str(alg, v) +
                                         " with odd multiplicity " + std::to_string(m));
            rem.erase(v);
            out.summands.push_back({v, t, 2 * d, m / 2});
        } else {
            rem.erase(v);
            out.summands.push_back({v, t, d, m});
        }
    }
    std::sort(out.summands.begin(), out.summands.end(),
              [](const RealSummand& a, const RealSummand& b) {
                  if (a.real_dim != b.real_dim) return a.real_dim < b.real_dim;
                  return a.label < b.label;
              });
    return out;
}

Int count_s(const RealRep& r) { return r.count_s(); }

}  // namespace coh1
