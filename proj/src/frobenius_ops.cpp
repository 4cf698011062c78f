#include <set>

#include "qrep/frobenius.hpp"
#include "qrep/recoupling.hpp"

namespace qrep {

namespace {

void require_same_level(const Algebra& a, const Algebra& b) {
    if (a.cat->level() != b.cat->level()) throw std::invalid_argument("algebras live at different levels");
}

}  // namespace

ProjectorBlock endofunctor_block(const Algebra& a, int i, int j, bool right) {
    const Category& cat = *a.cat;
    ProjectorBlock out;
    for (int s = 0; s < a.size(); ++s)
        if (cat.fusion(a.label[s], i, j)) out.basis.push_back(s);
    const int n = static_cast<int>(out.basis.size());
    out.matrix = Matrix(cat.field(), n, n);
    const auto units = a.summands_with_label(0);
    for (int col = 0; col < n; ++col) {
        const int x = out.basis[col];
        FusionState s0 = FusionState::basis(cat, {a.label[x], i}, {a.label[x], j}).insert_unit(0);
        for (int y1 = 0; y1 < a.size(); ++y1)
            for (int y2 = 0; y2 < a.size(); ++y2) {
                Scalar coef = cat.zero();
                for (int u : units) coef += a.unit[u] * a.Delta(u, y1, y2);
                if (coef.is_zero()) continue;
                FusionState s = s0.split(0, a.label[y1], a.label[y2], coef).braid(1, right).braid(2, right).braid(2, right);
                for (int w = 0; w < a.size(); ++w) {
                    Scalar m1 = a.M(y1, x, w);
                    if (m1.is_zero()) continue;
                    FusionState t = s.fuse(0, a.label[w], m1);
                    for (int row = 0; row < n; ++row) {
                        const int z = out.basis[row];
                        Scalar m2 = a.M(w, y2, z);
                        if (m2.is_zero()) continue;
                        out.matrix(row, col) += t.fuse(0, a.label[z], m2).amplitude({a.label[z], i}, {a.label[z], j});
                    }
                }
            }
    }
    for (int s : out.basis) {
        out.matrix.row_basis.push_back(std::to_string(s));
        out.matrix.col_basis.push_back(std::to_string(s));
    }
    return out;
}

Algebra box_plus(const Algebra& a, const Algebra& b) {
    require_same_level(a, b);
    Algebra r;
    r.cat = a.cat;
    r.tag = "sum(" + a.tag + "," + b.tag + ")";
    const int off = a.size();
    r.label = a.label;
    r.label.insert(r.label.end(), b.label.begin(), b.label.end());
    r.m = a.m;
    r.delta = a.delta;
    for (const auto& [k, v] : b.m) r.m[{k[0] + off, k[1] + off, k[2] + off}] = v;
    for (const auto& [k, v] : b.delta) r.delta[{k[0] + off, k[1] + off, k[2] + off}] = v;
    r.unit = a.unit;
    r.unit.insert(r.unit.end(), b.unit.begin(), b.unit.end());
    r.counit = a.counit;
    r.counit.insert(r.counit.end(), b.counit.begin(), b.counit.end());
    return r;
}

Algebra box_tensor(const Algebra& a, const Algebra& b) {
    require_same_level(a, b);
    const Category& cat = *a.cat;
    Algebra r;
    r.cat = a.cat;
    r.tag = "product(" + a.tag + "," + b.tag + ")";
    struct Summand {
        int s, t, c;
    };
    std::vector<Summand> sum;
    for (int s = 0; s < a.size(); ++s)
        for (int t = 0; t < b.size(); ++t)
            for (int c : cat.fusion_product(a.label[s], b.label[t])) sum.push_back({s, t, c});
    for (const auto& x : sum) r.label.push_back(x.c);
    const int n = static_cast<int>(sum.size());
    std::map<std::array<int, 3>, int> index;
    for (int i = 0; i < n; ++i) index[{sum[i].s, sum[i].t, sum[i].c}] = i;

    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const auto& x1 = sum[i1];
            const auto& x2 = sum[i2];
            for (int c3 : cat.fusion_product(x1.c, x2.c)) {
                // c1 (x) c2 -> c3, expanded: split both, pass t1 over s2, multiply in A and B.
                FusionState st = FusionState::basis(cat, {x1.c, x2.c}, {x1.c, c3})
                                     .split(1, a.label[x2.s], b.label[x2.t], cat.one())
                                     .split(0, a.label[x1.s], b.label[x1.t], cat.one())
                                     .braid(1, false);
                for (int s3 = 0; s3 < a.size(); ++s3) {
                    Scalar ma = a.M(x1.s, x2.s, s3);
                    if (ma.is_zero()) continue;
                    FusionState u = st.fuse(0, a.label[s3], ma);
                    for (int t3 = 0; t3 < b.size(); ++t3) {
                        Scalar mb = b.M(x1.t, x2.t, t3);
                        if (mb.is_zero() || !cat.fusion(a.label[s3], b.label[t3], c3)) continue;
                        Scalar v = u.fuse(1, b.label[t3], mb).fuse(0, c3, cat.one()).amplitude({c3}, {c3});
                        if (!v.is_zero()) r.m[{i1, i2, index.at({s3, t3, c3})}] = v;
                    }
                }
            }
        }
    r.unit.assign(n, cat.zero());
    r.counit.assign(n, cat.zero());
    for (int i = 0; i < n; ++i)
        if (sum[i].c == 0 && a.label[sum[i].s] == 0 && b.label[sum[i].t] == 0) {
            r.unit[i] = a.unit[sum[i].s] * b.unit[sum[i].t];
            r.counit[i] = a.counit[sum[i].s] * b.counit[sum[i].t];
        }
    derive_comultiplication(r);
    return r;
}

Algebra left_center(const Algebra& a) {
    const Category& cat = *a.cat;
    struct Block {
        int label;
        std::vector<int> basis;
        Matrix e, r;
    };
    std::vector<Block> blocks;
    for (int j = 0; j <= cat.level(); ++j) {
        auto pb = endofunctor_block(a, 0, j);
        if (pb.basis.empty()) continue;
        auto [e, r] = rank_factorization(pb.matrix);
        if (e.cols() == 0) continue;
        blocks.push_back({j, pb.basis, e, r});
    }
    Algebra c;
    c.cat = a.cat;
    c.tag = "center(" + a.tag + ")";
    // Center summand gamma -> (block, column)
    std::vector<std::pair<int, int>> where;
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi)
        for (int col = 0; col < blocks[bi].e.cols(); ++col) {
            where.push_back({bi, col});
            c.label.push_back(blocks[bi].label);
        }
    const int n = static_cast<int>(where.size());
    auto embed = [&](int g) {
        // Components of the embedding of summand g into A, as (summand, coefficient).
        std::vector<std::pair<int, Scalar>> out;
        const auto& bl = blocks[where[g].first];
        for (std::size_t i = 0; i < bl.basis.size(); ++i)
            if (!bl.e(static_cast<int>(i), where[g].second).is_zero())
                out.push_back({bl.basis[i], bl.e(static_cast<int>(i), where[g].second)});
        return out;
    };
    auto retract = [&](int g, int s) {
        const auto& bl = blocks[where[g].first];
        auto it = std::find(bl.basis.begin(), bl.basis.end(), s);
        if (it == bl.basis.end()) return cat.zero();
        return bl.r(where[g].second, static_cast<int>(it - bl.basis.begin()));
    };
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be)
            for (int ga = 0; ga < n; ++ga) {
                if (!cat.fusion(c.label[al], c.label[be], c.label[ga])) continue;
                Scalar v = cat.zero();
                for (const auto& [s, es] : embed(al))
                    for (const auto& [t, et] : embed(be))
                        for (int u = 0; u < a.size(); ++u) {
                            Scalar mm = a.M(s, t, u);
                            if (mm.is_zero()) continue;
                            Scalar rv = retract(ga, u);
                            if (!rv.is_zero()) v += rv * es * et * mm;
                        }
                if (!v.is_zero()) c.m[{al, be, ga}] = v;
            }
    c.unit.assign(n, cat.zero());
    c.counit.assign(n, cat.zero());
    Scalar ratio = c.dim() * a.dim().inverse();
    for (int g = 0; g < n; ++g) {
        if (c.label[g] != 0) continue;
        for (int u = 0; u < a.size(); ++u) c.unit[g] += retract(g, u) * a.unit[u];
        for (const auto& [s, es] : embed(g)) c.counit[g] += ratio * a.counit[s] * es;
    }
    derive_comultiplication(c);
    return c;
}

nlohmann::json algebra_to_json(const Algebra& a) {
    nlohmann::json j;
    j["level"] = a.cat->level();
    j["tag"] = a.tag;
    j["object"] = a.label;
    const bool by_label = a.is_haploid() && std::set<int>(a.label.begin(), a.label.end()).size() == a.label.size();
    j["indexing"] = by_label ? "label" : "summand";
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, v] : a.m) {
        auto name = [&](int s) { return std::to_string(by_label ? a.label[s] : s); };
        m[name(k[0]) + "," + name(k[1]) + "," + name(k[2])] = scalar_to_json(v);
    }
    j["m"] = m;
    nlohmann::json unit = nlohmann::json::array(), counit = nlohmann::json::array();
    for (int s = 0; s < a.size(); ++s) {
        unit.push_back(scalar_to_json(a.unit[s]));
        counit.push_back(scalar_to_json(a.counit[s]));
    }
    j["unit"] = unit;
    j["counit"] = counit;
    return j;
}

Algebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("object") || !j.contains("m"))
        throw std::invalid_argument("algebra JSON needs level, object and m");
    auto cat = std::make_shared<const Category>(j["level"].get<int>());
    Algebra a;
    a.cat = cat;
    a.tag = j.value("tag", std::string("custom"));
    a.label = j["object"].get<std::vector<int>>();
    for (int l : a.label)
        if (l < 0 || l > cat->level()) throw std::invalid_argument("object label out of range");
    const bool by_label = j.value("indexing", std::string("label")) == "label";
    auto resolve = [&](int x) {
        if (!by_label) {
            if (x < 0 || x >= a.size()) throw std::invalid_argument("summand index out of range");
            return x;
        }
        auto it = std::find(a.label.begin(), a.label.end(), x);
        if (it == a.label.end()) throw std::invalid_argument("component label not in object");
        return static_cast<int>(it - a.label.begin());
    };
    for (const auto& [key, val] : j["m"].items()) {
        std::array<int, 3> idx{};
        std::size_t pos = 0;
        for (int t = 0; t < 3; ++t) {
            std::size_t next = key.find(',', pos);
            idx[t] = resolve(std::stoi(key.substr(pos, next - pos)));
            pos = next == std::string::npos ? key.size() : next + 1;
        }
        Scalar v = scalar_from_json(cat->field(), val);
        if (!v.is_zero()) a.m[idx] = v;
    }
    a.unit.assign(a.size(), cat->zero());
    a.counit.assign(a.size(), cat->zero());
    if (j.contains("unit")) {
        for (int s = 0; s < a.size(); ++s) a.unit[s] = scalar_from_json(cat->field(), j["unit"].at(s));
        for (int s = 0; s < a.size(); ++s) a.counit[s] = scalar_from_json(cat->field(), j["counit"].at(s));
    } else {
        auto units = a.summands_with_label(0);
        if (units.size() != 1) throw std::invalid_argument("non-haploid algebra needs explicit unit and counit");
        a.unit[units[0]] = cat->one();
        a.counit[units[0]] = a.dim();
    }
    derive_comultiplication(a);
    return a;
}

}  // namespace qrep
