#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrep/category.hpp"
#include "qrep/io.hpp"

namespace qrep {

using CategoryPtr = std::shared_ptr<const Category>;

// Algebra object A = (+)_s U_{label[s]} in component form. Summands carry their own
// index so that unit multiplicities above one (sums of algebras) are representable.
struct Algebra {
    CategoryPtr cat;
    std::string tag;
    std::vector<int> label;
    std::map<std::array<int, 3>, Scalar> m;      // (s, t, u): U_s (x) U_t -> U_u
    std::map<std::array<int, 3>, Scalar> delta;  // (u, s, t): U_u -> U_s (x) U_t
    std::vector<Scalar> unit;                    // per summand, nonzero only on label 0
    std::vector<Scalar> counit;

    int size() const { return static_cast<int>(label.size()); }
    Scalar M(int s, int t, int u) const;
    Scalar Delta(int u, int s, int t) const;
    Scalar dim() const;
    std::vector<int> object() const { return label; }
    std::vector<int> summands_with_label(int l) const;
    bool is_haploid() const;
};

struct SsfaReport {
    bool associative = false;
    bool unital = false;
    bool nondegenerate = false;
    bool symmetric = false;
    bool special = false;
    bool frobenius = false;
    bool all() const { return associative && unital && nondegenerate && symmetric && special && frobenius; }
};

struct UnsupportedAlgebra : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidAlgebra : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Comultiplication from the multiplication and counit through the Frobenius form.
// Throws InvalidAlgebra when the form is degenerate.
void derive_comultiplication(Algebra& a);

SsfaReport check_ssfa(const Algebra& a);

Algebra unit_algebra(CategoryPtr cat);

// Haploid algebra on the labels J with unknown multiplication solved exactly from
// associativity (and commutativity if requested) after fixing the given components.
struct StructureProblem {
    std::vector<int> object;
    std::map<std::array<int, 3>, long> gauge;  // label triples fixed to the given integers
    bool commutative = false;
};
std::optional<Algebra> solve_structure(CategoryPtr cat, const StructureProblem& problem, const std::string& tag);

enum class Series { D, E6, E7, E8 };
std::optional<Series> parse_series(const std::string& s);
std::string series_name(Series s);
bool series_available(int level, Series s);
StructureProblem ade_problem(int level, Series s);
Algebra build_ade(CategoryPtr cat, Series s);

Algebra box_tensor(const Algebra& a, const Algebra& b);
Algebra box_plus(const Algebra& a, const Algebra& b);
Algebra left_center(const Algebra& a);

// Matrix of P^l_A(U_i) (right version if requested) on Hom(U_j, A (x) U_i),
// basis: summands s with N_{label[s] i}^j = 1, in summand order.
struct ProjectorBlock {
    std::vector<int> basis;
    Matrix matrix;
};
ProjectorBlock endofunctor_block(const Algebra& a, int i, int j, bool right = false);
nlohmann::json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const nlohmann::json& j);

}  // namespace qrep
