#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qrep/category.hpp"

namespace qrep {

// A left-canonical splitting tree: leaves l_0..l_{n-1} and intermediate labels
// p_0 = l_0, p_i in p_{i-1} (x) l_i, with p_{n-1} the total charge.
struct Tree {
    std::vector<int> leaves;
    std::vector<int> inner;
};

// Linear combination of left-canonical trees with exact amplitudes.
class FusionState {
public:
    explicit FusionState(const Category& cat) : cat_(&cat) {}
    static FusionState basis(const Category& cat, const std::vector<int>& leaves, const std::vector<int>& inner,
                             const Scalar& amp);
    static FusionState basis(const Category& cat, const std::vector<int>& leaves, const std::vector<int>& inner);
    // Single unit leaf: the empty diagram.
    static FusionState vacuum(const Category& cat) { return basis(cat, {0}, {0}); }

    const Category& category() const { return *cat_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::vector<std::pair<Tree, Scalar>> terms() const;

    void add(const std::vector<int>& leaves, const std::vector<int>& inner, const Scalar& amp);
    FusionState& operator+=(const FusionState& o);
    FusionState scaled(const Scalar& s) const;
    Scalar amplitude(const std::vector<int>& leaves, const std::vector<int>& inner) const;

    // Replace leaf j by the pair (a, b), multiplying by coef.
    FusionState split(int j, int a, int b, const Scalar& coef) const;
    // Fuse leaves j, j+1 into the channel w, multiplying by coef.
    FusionState fuse(int j, int w, const Scalar& coef) const;
    // Pass leaf j over leaf j+1 (inverse: under).
    FusionState braid(int j, bool inverse) const;
    // Multiply by twist^power of leaf j.
    FusionState twist(int j, int power) const;
    // Insert a unit leaf before position j (j may equal the leaf count).
    FusionState insert_unit(int j) const;
    // Remove a unit leaf at position j.
    FusionState remove_unit(int j) const;
    // Keep only terms whose leaves at the given positions carry the given labels.
    FusionState filter(int j, int label) const;

private:
    static std::string encode(const std::vector<int>& leaves, const std::vector<int>& inner);
    static Tree decode(const std::string& key);
    void add_key(const std::string& key, const Scalar& amp);

    const Category* cat_;
    std::map<std::string, Scalar> terms_;
};

// Evaluation of the theta net with the dual vertex normalization: d_c N_{ab}^c.
Scalar theta(const Category& cat, int a, int b, int c);
Scalar sixj(const Category& cat, int a, int b, int c, int d, int e, int f);
Scalar braid_eigenvalue(const Category& cat, int a, int b, int c);
// Zig-zag factor of the unnormalized cup/cap pair; equals nu_a/d_a with nu the Frobenius-Schur sign.
Scalar zigzag(const Category& cat, int a);

// Closed nets are given as step lists acting on leaves left to right, starting
// from the empty diagram:
//   {"op":"cup","at":j,"label":a}      create an a-colored pair before leaf j
//   {"op":"cap","at":j}                annihilate leaves j, j+1 (must fuse to 0)
//   {"op":"split","at":j,"into":[a,b]} trivalent vertex
//   {"op":"merge","at":j,"label":c}    trivalent vertex
//   {"op":"braid","at":j,"inverse":false}
//   {"op":"twist","at":j,"power":1}
// with top-level {"level":k,"steps":[...]}.
struct NetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FusionState apply_step(const FusionState& s, const nlohmann::json& step);
Scalar evaluate_closed_net(const Category& cat, const nlohmann::json& steps);

}  // namespace qrep
