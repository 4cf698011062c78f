#include "qrep/frobenius.hpp"

#include <set>

#include "qrep/recoupling.hpp"

namespace qrep {

Scalar Algebra::M(int s, int t, int u) const {
    auto it = m.find({s, t, u});
    return it == m.end() ? cat->zero() : it->second;
}

Scalar Algebra::Delta(int u, int s, int t) const {
    auto it = delta.find({u, s, t});
    return it == delta.end() ? cat->zero() : it->second;
}

Scalar Algebra::dim() const {
    Scalar d = cat->zero();
    for (int l : label) d += cat->qdim(l);
    return d;
}

std::vector<int> Algebra::summands_with_label(int l) const {
    std::vector<int> out;
    for (int s = 0; s < size(); ++s)
        if (label[s] == l) out.push_back(s);
    return out;
}

bool Algebra::is_haploid() const { return summands_with_label(0).size() == 1; }

namespace {

// Amplitude of: leaf c, cup of b-colored pair to its right, fuse (c, b) -> a.
Scalar bend_amplitude(const Category& cat, int c, int b, int a) {
    FusionState s = FusionState::basis(cat, {c}, {c}).insert_unit(1).split(1, b, b, cat.one()).fuse(0, a, cat.one());
    return s.amplitude({a, b}, {a, c});
}

// Frobenius form restricted to summands of one label.
Matrix frobenius_form(const Algebra& a, const std::vector<int>& block) {
    const int n = static_cast<int>(block.size());
    Matrix k(a.cat->field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int u : a.summands_with_label(0))
                if (!a.counit[u].is_zero()) k(i, j) += a.counit[u] * a.M(block[i], block[j], u);
    return k;
}

void put(std::map<std::array<int, 3>, Scalar>& table, std::array<int, 3> key, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = table.find(key);
    if (it == table.end()) table.emplace(key, v);
    else {
        it->second += v;
        if (it->second.is_zero()) table.erase(it);
    }
}

using Key5 = std::array<int, 5>;

void accumulate(std::map<Key5, Scalar>& acc, const Key5& key, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, v);
    else it->second += v;
}

bool same_tables(std::map<Key5, Scalar> a, std::map<Key5, Scalar> b) {
    for (auto it = a.begin(); it != a.end();) it = it->second.is_zero() ? a.erase(it) : std::next(it);
    for (auto it = b.begin(); it != b.end();) it = it->second.is_zero() ? b.erase(it) : std::next(it);
    return a == b;
}

}  // namespace

void derive_comultiplication(Algebra& a) {
    const Category& cat = *a.cat;
    a.delta.clear();
    std::set<int> labels(a.label.begin(), a.label.end());
    // Copairing W per label: (K z)^{-1}.
    std::map<int, Matrix> copair;
    for (int l : labels) {
        auto block = a.summands_with_label(l);
        auto inv = (frobenius_form(a, block) * zigzag(cat, l)).inverse();
        if (!inv) throw InvalidAlgebra("degenerate Frobenius form on label " + std::to_string(l));
        copair.emplace(l, *inv);
    }
    std::map<std::array<int, 3>, Scalar> bend;
    for (int u = 0; u < a.size(); ++u)
        for (int s = 0; s < a.size(); ++s)
            for (int t = 0; t < a.size(); ++t) {
                const int lu = a.label[u], ls = a.label[s], lt = a.label[t];
                if (!cat.fusion(ls, lt, lu)) continue;
                auto key = std::array<int, 3>{lu, lt, ls};
                auto it = bend.find(key);
                if (it == bend.end()) it = bend.emplace(key, bend_amplitude(cat, lu, lt, ls)).first;
                auto block = a.summands_with_label(lt);
                const Matrix& w = copair.at(lt);
                const int ti = static_cast<int>(std::find(block.begin(), block.end(), t) - block.begin());
                Scalar v = cat.zero();
                for (std::size_t tp = 0; tp < block.size(); ++tp) {
                    Scalar mm = a.M(u, block[tp], s);
                    if (!mm.is_zero()) v += w(static_cast<int>(tp), ti) * mm;
                }
                put(a.delta, {u, s, t}, v * it->second);
            }
}

SsfaReport check_ssfa(const Algebra& a) {
    const Category& cat = *a.cat;
    const int n = a.size();
    const int k = cat.level();
    SsfaReport r;
    const auto units = a.summands_with_label(0);

    r.unital = true;
    for (int s = 0; s < n && r.unital; ++s)
        for (int t = 0; t < n; ++t) {
            Scalar left = cat.zero(), right = cat.zero();
            for (int u : units) {
                left += a.unit[u] * a.M(u, s, t);
                right += a.unit[u] * a.M(s, u, t);
            }
            Scalar want(cat.field(), static_cast<long>(s == t));
            if (left != want || right != want) {
                r.unital = false;
                break;
            }
        }

    // Index the multiplication by first factor and by product, the comultiplication by source.
    std::multimap<int, std::pair<std::array<int, 3>, Scalar>> m_by_first, m_by_second, d_by_source;
    for (const auto& [key, v] : a.m) {
        m_by_first.emplace(key[0], std::make_pair(key, v));
        m_by_second.emplace(key[1], std::make_pair(key, v));
    }
    for (const auto& [key, v] : a.delta) d_by_source.emplace(key[0], std::make_pair(key, v));

    {
        // Sum_e m_ab^e m_ec^d Finv[f, e] against sum_{f' of label f} m_bc^f' m_af'^d.
        std::map<Key5, Scalar> lhs, rhs;
        for (const auto& [k1, v1] : a.m) {
            auto [x, y, e] = k1;
            auto range = m_by_first.equal_range(e);
            for (auto it = range.first; it != range.second; ++it) {
                auto [k2, v2] = it->second;
                const int z = k2[1], d = k2[2];
                for (int f = 0; f <= k; ++f) {
                    Scalar w = cat.Finv(a.label[x], a.label[y], a.label[z], a.label[d], f, a.label[e]);
                    if (!w.is_zero()) accumulate(lhs, {x, y, z, d, f}, v1 * v2 * w);
                }
            }
        }
        for (const auto& [k1, v1] : a.m) {
            auto [y, z, fp] = k1;
            auto range = m_by_second.equal_range(fp);
            for (auto it = range.first; it != range.second; ++it) {
                auto [k2, v2] = it->second;
                accumulate(rhs, {k2[0], y, z, k2[2], a.label[fp]}, v1 * v2);
            }
        }
        r.associative = same_tables(lhs, rhs);
    }

    r.nondegenerate = true;
    r.symmetric = true;
    for (int l : std::set<int>(a.label.begin(), a.label.end())) {
        Matrix kf = frobenius_form(a, a.summands_with_label(l));
        if (kf.rank() != kf.rows()) r.nondegenerate = false;
        Scalar nu = cat.twist(l) * cat.R(l, l, 0);
        if (kf != kf.transpose() * nu) r.symmetric = false;
    }

    r.special = !a.delta.empty() || n == 0;
    for (int c = 0; c < n && r.special; ++c)
        for (int cp = 0; cp < n; ++cp) {
            if (a.label[c] != a.label[cp]) continue;
            Scalar v = cat.zero();
            auto range = d_by_source.equal_range(c);
            for (auto it = range.first; it != range.second; ++it) {
                auto [key, dv] = it->second;
                Scalar mm = a.M(key[1], key[2], cp);
                if (!mm.is_zero()) v += dv * mm;
            }
            if (v != Scalar(cat.field(), static_cast<long>(c == cp))) {
                r.special = false;
                break;
            }
        }
    {
        Scalar eps_eta = cat.zero();
        for (int u : units) eps_eta += a.counit[u] * a.unit[u];
        if (eps_eta != a.dim()) r.special = false;
    }

    {
        // Two forms of the Frobenius property, each against (m then delta).
        std::map<Key5, Scalar> lhs1, lhs2, rhs;
        for (const auto& [k1, v1] : a.m) {
            auto [x, y, xp] = k1;
            auto range = d_by_source.equal_range(xp);
            for (auto it = range.first; it != range.second; ++it) {
                auto [k2, v2] = it->second;
                accumulate(rhs, {x, y, k2[1], k2[2], a.label[xp]}, v1 * v2);
            }
        }
        for (const auto& [k1, v1] : a.delta) {
            // Delta_a^{c e} m_{e b}^d F(c, e, b, x)[a, d]
            auto [aa, c, e] = k1;
            auto range = m_by_first.equal_range(e);
            for (auto it = range.first; it != range.second; ++it) {
                auto [k2, v2] = it->second;
                const int b = k2[1], d = k2[2];
                for (int x = 0; x <= k; ++x) {
                    Scalar w = cat.F(a.label[c], a.label[e], a.label[b], x, a.label[aa], a.label[d]);
                    if (!w.is_zero()) accumulate(lhs1, {aa, b, c, d, x}, v1 * v2 * w);
                }
            }
        }
        for (const auto& [k1, v1] : a.delta) {
            // Delta_b^{e d} m_{a e}^c Finv(a, e, d, x)[b, c]
            auto [b, e, d] = k1;
            auto range = m_by_second.equal_range(e);
            for (auto it = range.first; it != range.second; ++it) {
                auto [k2, v2] = it->second;
                const int aa = k2[0], c = k2[2];
                for (int x = 0; x <= k; ++x) {
                    Scalar w = cat.Finv(a.label[aa], a.label[e], a.label[d], x, a.label[b], a.label[c]);
                    if (!w.is_zero()) accumulate(lhs2, {aa, b, c, d, x}, v1 * v2 * w);
                }
            }
        }
        r.frobenius = !a.delta.empty() && same_tables(lhs1, rhs) && same_tables(lhs2, rhs);
    }
    return r;
}

Algebra unit_algebra(CategoryPtr cat) {
    Algebra a;
    a.cat = cat;
    a.tag = "unit";
    a.label = {0};
    a.m[{0, 0, 0}] = cat->one();
    a.unit = {cat->one()};
    a.counit = {cat->one()};
    derive_comultiplication(a);
    return a;
}

}  // namespace qrep
