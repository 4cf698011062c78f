#include "qrep/tqft_spaces.hpp"

#include <algorithm>

namespace qrep {

int edge_count(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
    return genus == 1 ? 1 : 3 * genus - 3;
}

std::vector<Handle> handles_of(int genus, const TreeLabels& t) {
    if (static_cast<int>(t.size()) != edge_count(genus)) throw std::invalid_argument("label tuple has wrong length");
    if (genus == 1) return {{t[0], t[0], 0}};
    std::vector<Handle> h{{t[0], t[0], t[1]}};
    for (int m = 0; m < genus - 2; ++m) h.push_back({t[3 + 3 * m], t[2 + 3 * m], t[4 + 3 * m]});
    h.push_back({t.back(), t.back(), 0});
    return h;
}

std::vector<TreeLabels> enumerate_basis(const Category& cat, int genus) {
    const int n = edge_count(genus);
    const int k = cat.level();
    std::vector<TreeLabels> out;
    if (genus == 1) {
        for (int i = 0; i <= k; ++i) out.push_back({i});
        return out;
    }
    TreeLabels t(n, 0);
    // Vertex closed by assigning position p, checked before descending.
    auto closes = [&](int p) {
        if (p == 1) return cat.fusion(t[0], t[0], t[1]);
        if (p == n - 1) return cat.fusion(t[n - 2], t[p], t[p]);
        const int r = (p - 2) % 3;
        const int prev = p - 1 - r;  // chain label entering the handle
        if (r == 1) return cat.fusion(t[prev], t[p - 1], t[p]);
        if (r == 2) return cat.fusion(t[p - 1], t[p - 2], t[p]);
        return true;
    };
    auto rec = [&](auto&& self, int p) -> void {
        if (p == n) {
            out.push_back(t);
            return;
        }
        for (int v = 0; v <= k; ++v) {
            t[p] = v;
            if (closes(p)) self(self, p + 1);
        }
    };
    rec(rec, 0);
    return out;
}

int basis_index(const std::vector<TreeLabels>& basis, const TreeLabels& t) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t);
    if (it == basis.end() || *it != t) throw BasisIndexError("tree not in basis");
    return static_cast<int>(it - basis.begin());
}

TreeLabels special_tree(int genus, int i) {
    TreeLabels t(edge_count(genus), 0);
    t.back() = i;
    return t;
}

std::vector<Scalar> special_vector(const Category& cat, int genus, const std::vector<long>& multiplicity) {
    const auto basis = enumerate_basis(cat, genus);
    std::vector<Scalar> v(basis.size(), cat.zero());
    for (int j = 0; j < static_cast<int>(multiplicity.size()); ++j)
        if (multiplicity[j]) v[basis_index(basis, special_tree(genus, j))] = Scalar(cat.field(), multiplicity[j]);
    return v;
}

std::vector<Scalar> special_vector(const Category& cat, int genus, int label) {
    std::vector<long> mult(cat.rank(), 0);
    mult.at(label) = 1;
    return special_vector(cat, genus, mult);
}

Matrix rep_genus1(const Category& cat, Generator g) {
    return g == Generator::S ? cat.smatrix() : cat.tmatrix();
}

Matrix dehn_twist_cut(const Category& cat, int genus, int edge) {
    if (edge < 0 || edge >= edge_count(genus)) throw BasisIndexError("edge index out of range");
    const auto basis = enumerate_basis(cat, genus);
    const int n = static_cast<int>(basis.size());
    Matrix m(cat.field(), n, n);
    for (int i = 0; i < n; ++i) m(i, i) = cat.twist(basis[i][edge]);
    return m;
}

}  // namespace qrep
