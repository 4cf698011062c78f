#pragma once

#include <stdexcept>
#include <vector>

#include "qrep/category.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

// Labels of the standard genus-g tree, in tuple order:
//   g = 1: (i)
//   g >= 2: (i, j, k_2, l_2, m_2, ..., k_{g-1}, l_{g-1}, m_{g-1}, s)
// The first handle is the loop i on the stem j; a middle handle h carries the
// loop k_h with vertices (m_{h-1} k_h l_h) and (l_h k_h m_h), where m_1 = j;
// the last loop s hangs off m_{g-1}.
using TreeLabels = std::vector<int>;

struct BasisIndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// One handle of the tree: strands x and a between the incoming chain label and
// the outgoing chain label c (c = 0 on the last handle).
struct Handle {
    int x;
    int a;
    int c;
};

std::vector<Handle> handles_of(int genus, const TreeLabels& t);

// All admissible labelings in lexicographic order of the tuple.
std::vector<TreeLabels> enumerate_basis(const Category& cat, int genus);

// Position of the tree in the basis.
int basis_index(const std::vector<TreeLabels>& basis, const TreeLabels& t);

// All labels zero except the last loop, which carries i.
TreeLabels special_tree(int genus, int i);

// Sum_j mult[j] v^g_j as a coordinate vector.
std::vector<Scalar> special_vector(const Category& cat, int genus, const std::vector<long>& multiplicity);
std::vector<Scalar> special_vector(const Category& cat, int genus, int label);

enum class Generator { S, T };
Matrix rep_genus1(const Category& cat, Generator g);

// Number of tree edges, i.e. valid cut indices.
int edge_count(int genus);
// Twist along the pants curve around tree edge `edge` (an index into the tuple).
Matrix dehn_twist_cut(const Category& cat, int genus, int edge);

}  // namespace qrep
