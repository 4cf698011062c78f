#include "qrep/recoupling.hpp"

#include <stdexcept>

namespace qrep {

std::string FusionState::encode(const std::vector<int>& leaves, const std::vector<int>& inner) {
    std::string key;
    key.reserve(leaves.size() * 2);
    for (int x : leaves) key.push_back(static_cast<char>(x));
    for (int x : inner) key.push_back(static_cast<char>(x));
    return key;
}

Tree FusionState::decode(const std::string& key) {
    Tree t;
    const std::size_t n = key.size() / 2;
    for (std::size_t i = 0; i < n; ++i) t.leaves.push_back(static_cast<unsigned char>(key[i]));
    for (std::size_t i = n; i < 2 * n; ++i) t.inner.push_back(static_cast<unsigned char>(key[i]));
    return t;
}

FusionState FusionState::basis(const Category& cat, const std::vector<int>& leaves, const std::vector<int>& inner,
                               const Scalar& amp) {
    if (leaves.size() != inner.size() || leaves.empty()) throw std::invalid_argument("malformed tree");
    FusionState s(cat);
    s.add(leaves, inner, amp);
    return s;
}

FusionState FusionState::basis(const Category& cat, const std::vector<int>& leaves, const std::vector<int>& inner) {
    return basis(cat, leaves, inner, cat.one());
}

std::vector<std::pair<Tree, Scalar>> FusionState::terms() const {
    std::vector<std::pair<Tree, Scalar>> out;
    out.reserve(terms_.size());
    for (const auto& [k, v] : terms_) out.emplace_back(decode(k), v);
    return out;
}

void FusionState::add_key(const std::string& key, const Scalar& amp) {
    if (amp.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, amp);
        return;
    }
    it->second += amp;
    if (it->second.is_zero()) terms_.erase(it);
}

void FusionState::add(const std::vector<int>& leaves, const std::vector<int>& inner, const Scalar& amp) {
    add_key(encode(leaves, inner), amp);
}

FusionState& FusionState::operator+=(const FusionState& o) {
    for (const auto& [k, v] : o.terms_) add_key(k, v);
    return *this;
}

FusionState FusionState::scaled(const Scalar& s) const {
    FusionState out(*cat_);
    if (s.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * s);
    return out;
}

Scalar FusionState::amplitude(const std::vector<int>& leaves, const std::vector<int>& inner) const {
    auto it = terms_.find(encode(leaves, inner));
    return it == terms_.end() ? cat_->zero() : it->second;
}

FusionState FusionState::split(int j, int a, int b, const Scalar& coef) const {
    FusionState out(*cat_);
    if (coef.is_zero()) return out;
    const Category& c = *cat_;
    for (const auto& [key, amp] : terms_) {
        Tree t = decode(key);
        const int x = t.leaves.at(j);
        if (!c.fusion(a, b, x)) continue;
        std::vector<int> nl(t.leaves.begin(), t.leaves.begin() + j);
        nl.push_back(a);
        nl.push_back(b);
        nl.insert(nl.end(), t.leaves.begin() + j + 1, t.leaves.end());
        Scalar base = amp * coef;
        if (j == 0) {
            std::vector<int> np{a};
            np.insert(np.end(), t.inner.begin(), t.inner.end());
            np[1] = x;
            out.add(nl, np, base);
            continue;
        }
        const int pp = t.inner[j - 1], pj = t.inner[j];
        for (int e : c.fusion_product(pp, a)) {
            Scalar w = c.Finv(pp, a, b, pj, x, e);
            if (w.is_zero()) continue;
            std::vector<int> np(t.inner.begin(), t.inner.begin() + j);
            np.push_back(e);
            np.insert(np.end(), t.inner.begin() + j, t.inner.end());
            out.add(nl, np, base * w);
        }
    }
    return out;
}

FusionState FusionState::fuse(int j, int w, const Scalar& coef) const {
    FusionState out(*cat_);
    if (coef.is_zero()) return out;
    const Category& c = *cat_;
    for (const auto& [key, amp] : terms_) {
        Tree t = decode(key);
        const int a = t.leaves.at(j), b = t.leaves.at(j + 1);
        if (!c.fusion(a, b, w)) continue;
        std::vector<int> nl(t.leaves.begin(), t.leaves.begin() + j);
        nl.push_back(w);
        nl.insert(nl.end(), t.leaves.begin() + j + 2, t.leaves.end());
        if (j == 0) {
            if (t.inner[1] != w) continue;
            std::vector<int> np(t.inner.begin() + 1, t.inner.end());
            out.add(nl, np, amp * coef);
            continue;
        }
        const int pp = t.inner[j - 1], pj = t.inner[j], pn = t.inner[j + 1];
        Scalar f = c.F(pp, a, b, pn, pj, w);
        if (f.is_zero()) continue;
        std::vector<int> np(t.inner.begin(), t.inner.begin() + j);
        np.insert(np.end(), t.inner.begin() + j + 1, t.inner.end());
        out.add(nl, np, amp * coef * f);
    }
    return out;
}

FusionState FusionState::braid(int j, bool inverse) const {
    FusionState out(*cat_);
    const Category& c = *cat_;
    for (const auto& [key, amp] : terms_) {
        Tree t = decode(key);
        const int a = t.leaves.at(j), b = t.leaves.at(j + 1);
        std::vector<int> nl = t.leaves;
        std::swap(nl[j], nl[j + 1]);
        if (j == 0) {
            std::vector<int> np = t.inner;
            np[0] = b;
            out.add(nl, np, amp * (inverse ? c.Rinv(a, b, t.inner[1]) : c.R(a, b, t.inner[1])));
            continue;
        }
        const int pp = t.inner[j - 1], pj = t.inner[j], pn = t.inner[j + 1];
        for (int e2 : c.fusion_product(pp, b)) {
            Scalar w = c.braid_move(pp, a, b, pn, pj, e2, inverse);
            if (w.is_zero()) continue;
            std::vector<int> np = t.inner;
            np[j] = e2;
            out.add(nl, np, amp * w);
        }
    }
    return out;
}

FusionState FusionState::twist(int j, int power) const {
    FusionState out(*cat_);
    for (const auto& [key, amp] : terms_) {
        Tree t = decode(key);
        out.add_key(key, amp * cat_->twist(t.leaves.at(j)).pow(power));
    }
    return out;
}

FusionState FusionState::insert_unit(int j) const {
    FusionState out(*cat_);
    for (const auto& [key, amp] : terms_) {
        Tree t = decode(key);
        if (j < 0 || j > static_cast<int>(t.leaves.size())) throw std::out_of_range("insert position");
        t.leaves.insert(t.leaves.begin() + j, 0);
        if (j == 0) t.inner.insert(t.inner.begin(), 0);
        else t.inner.insert(t.inner.begin() + j, t.inner[j - 1]);
        out.add(t.leaves, t.inner, amp);
    }
    return out;
}

FusionState FusionState::remove_unit(int j) const {
    FusionState out(*cat_);
    for (const auto& [key, amp] : terms_) {
        Tree t = decode(key);
        if (t.leaves.at(j) != 0) throw std::logic_error("removing a non-unit leaf");
        if (t.leaves.size() == 1) {
            out.add_key(key, amp);
            continue;
        }
        t.leaves.erase(t.leaves.begin() + j);
        t.inner.erase(t.inner.begin() + j);
        out.add(t.leaves, t.inner, amp);
    }
    return out;
}

FusionState FusionState::filter(int j, int label) const {
    FusionState out(*cat_);
    for (const auto& [key, amp] : terms_)
        if (static_cast<unsigned char>(key[j]) == label) out.terms_.emplace(key, amp);
    return out;
}

Scalar theta(const Category& cat, int a, int b, int c) {
    return cat.fusion(a, b, c) ? cat.qdim(c) : cat.zero();
}

Scalar sixj(const Category& cat, int a, int b, int c, int d, int e, int f) { return cat.F(a, b, c, d, e, f); }

Scalar braid_eigenvalue(const Category& cat, int a, int b, int c) { return cat.R(a, b, c); }

Scalar zigzag(const Category& cat, int a) {
    FusionState s = FusionState::basis(cat, {a}, {a}).insert_unit(1).split(1, a, a, cat.one()).fuse(0, 0, cat.one());
    return s.amplitude({0, a}, {0, a});
}

namespace {

int get_int(const nlohmann::json& step, const char* key) {
    if (!step.contains(key) || !step[key].is_number_integer())
        throw NetError(std::string("net step missing integer field '") + key + "'");
    return step[key].get<int>();
}

void check_leaf(const FusionState& s, int j, int count) {
    for (const auto& [t, amp] : s.terms())
        if (j < 0 || j + count > static_cast<int>(t.leaves.size())) throw NetError("net step position out of range");
}

}  // namespace

FusionState apply_step(const FusionState& s, const nlohmann::json& step) {
    const Category& c = s.category();
    if (!step.is_object() || !step.contains("op") || !step["op"].is_string()) throw NetError("net step without op");
    const std::string op = step["op"];
    const int j = get_int(step, "at");
    if (op == "cup") {
        const int a = get_int(step, "label");
        if (a < 0 || a > c.level()) throw NetError("label out of range");
        check_leaf(s, j, 0);
        return s.insert_unit(j).split(j, a, a, c.one());
    }
    if (op == "cap") {
        check_leaf(s, j, 2);
        FusionState out(c);
        for (const auto& [t, amp] : s.terms()) {
            FusionState one = FusionState::basis(c, t.leaves, t.inner, amp);
            out += one.fuse(j, 0, c.qdim(t.leaves[j]));
        }
        return out.remove_unit(j);
    }
    if (op == "split") {
        if (!step.contains("into") || !step["into"].is_array() || step["into"].size() != 2)
            throw NetError("split needs 'into':[a,b]");
        check_leaf(s, j, 1);
        return s.split(j, step["into"][0].get<int>(), step["into"][1].get<int>(), c.one());
    }
    if (op == "merge") {
        check_leaf(s, j, 2);
        return s.fuse(j, get_int(step, "label"), c.one());
    }
    if (op == "braid") {
        check_leaf(s, j, 2);
        return s.braid(j, step.value("inverse", false));
    }
    if (op == "twist") {
        check_leaf(s, j, 1);
        return s.twist(j, step.value("power", 1));
    }
    throw NetError("unknown net op '" + op + "'");
}

Scalar evaluate_closed_net(const Category& cat, const nlohmann::json& steps) {
    if (!steps.is_array()) throw NetError("net steps must be an array");
    FusionState s = FusionState::vacuum(cat);
    for (const auto& step : steps) s = apply_step(s, step);
    Scalar value = cat.zero();
    for (const auto& [t, amp] : s.terms()) {
        for (int x : t.leaves)
            if (x != 0) throw NetError("net is not closed");
        value += amp;
    }
    return value;
}

}  // namespace qrep
