#include "qrep/rig.hpp"

#include <sstream>

namespace qrep {

std::string class_sum_to_string(const ClassSum& s) {
    std::ostringstream os;
    bool first = true;
    for (const char* name : {"A", "D", "E"}) {
        auto it = s.find(name);
        if (it == s.end() || it->second == 0) continue;
        if (!first) os << " + ";
        if (it->second != 1) os << it->second;
        os << '[' << name << ']';
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<MoritaClass> rig_generators(CategoryPtr cat) {
    std::vector<MoritaClass> gens;
    auto add = [&](const std::string& name, Algebra a) {
        InvariantMatrix z = z_matrix(a);
        gens.push_back({name, std::move(a), std::move(z)});
    };
    add("A", unit_algebra(cat));
    if (series_available(cat->level(), Series::D)) add("D", build_ade(cat, Series::D));
    for (Series s : {Series::E6, Series::E7, Series::E8})
        if (series_available(cat->level(), s)) add("E", build_ade(cat, s));
    return gens;
}

ClassSum decompose_invariant(const std::vector<MoritaClass>& gens, const Matrix& z) {
    const int g = static_cast<int>(gens.size());
    const int n = z.rows();
    // One equation per matrix entry: sum_c x_c Z_c(i,j) = z(i,j).
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Scalar> r;
            for (const auto& c : gens) r.push_back(c.z.z(i, j));
            r.push_back(z(i, j));
            rows.push_back(std::move(r));
        }
    auto pivots = row_reduce(rows, g + 1);
    for (int p : pivots)
        if (p == g) throw UnknownClass("invariant is not a combination of the generator invariants");
    if (static_cast<int>(pivots.size()) != g) throw UnknownClass("generator invariants are linearly dependent");
    ClassSum out;
    for (int r = 0; r < g; ++r) {
        const Scalar& x = rows[r][g];
        if (!x.is_rational() || x.rational().get_den() != 1 || x.rational() < 0)
            throw UnknownClass("coefficient of [" + gens[pivots[r]].name + "] is " + x.to_string());
        const long v = x.rational().get_num().get_si();
        if (v != 0) out[gens[pivots[r]].name] = static_cast<int>(v);
    }
    return out;
}

ClassSum class_multiply(const std::vector<MoritaClass>& gens, const MoritaClass& x, const MoritaClass& y,
                        ProductMethod method) {
    if (x.representative.cat->level() != y.representative.cat->level())
        throw std::invalid_argument("classes live at different levels");
    if (method == ProductMethod::Factorized) return decompose_invariant(gens, x.z.z * y.z.z);
    return decompose_invariant(gens, z_matrix(box_tensor(x.representative, y.representative)).z);
}

namespace {

int product_size(const Algebra& a, const Algebra& b) {
    int n = 0;
    for (int s : a.label)
        for (int t : b.label) n += static_cast<int>(a.cat->fusion_product(s, t).size());
    return n;
}

}  // namespace

RigTable rig_table(int level, int direct_limit) {
    auto cat = std::make_shared<const Category>(level);
    auto gens = rig_generators(cat);
    const int g = static_cast<int>(gens.size());
    RigTable t;
    t.level = level;
    for (const auto& c : gens) t.names.push_back(c.name);
    t.products.assign(g, std::vector<ClassSum>(g));
    t.methods.assign(g, std::vector<std::string>(g));
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            const bool direct = product_size(gens[i].representative, gens[j].representative) <= direct_limit;
            t.products[i][j] = class_multiply(gens, gens[i], gens[j], direct ? ProductMethod::Direct : ProductMethod::Factorized);
            t.methods[i][j] = direct ? "direct" : "factorized";
            t.products[j][i] = t.products[i][j];
            t.methods[j][i] = t.methods[i][j];
        }
    return t;
}

}  // namespace qrep
